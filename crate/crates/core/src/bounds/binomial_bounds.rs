//! Upper bounds on `C(a + n, n) / n!` obtained from Stirling's formula with
//! Robbins' remainder bounds. Both sides come back as certified logs.

use serde::Serialize;

use super::Alpha;
use crate::arith::{binomial, factorial, log_certified, CertifiedLog};
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundPair {
    pub lhs: CertifiedLog,
    pub rhs: CertifiedLog,
}

impl BoundPair {
    /// `Some(lhs < rhs)` when the intervals decide it.
    pub fn holds(&self) -> Option<bool> {
        self.lhs.cmp_certified(&self.rhs).map(|o| o.is_lt())
    }
}

fn ln_binomial_over_factorial(top: u64, n: u64) -> Result<CertifiedLog> {
    Ok(log_certified(&binomial(top, n)?)? - log_certified(&factorial(n))?)
}

/// `ln(e^{2n} (n^{alpha-1} + 1)^n sqrt(3) / (2 n^{n+1} pi))`.
pub(crate) fn ln_alpha_rhs(n: u64, alpha: &Alpha) -> Result<CertifiedLog> {
    let ln_n = CertifiedLog::of_u64(n)?;
    let (am1, am1_err) = alpha.minus_one();
    let nf = n as f64;
    let pow_term = ln_n.scale_inexact(am1, am1_err).ln_one_plus().scale(nf);
    Ok(
        CertifiedLog::exact(2.0 * nf) + pow_term + CertifiedLog::three().scale(0.5)
            - CertifiedLog::two()
            - ln_n.scale(nf + 1.0)
            - CertifiedLog::pi(),
    )
}

/// `(1/n!) C([n^alpha] + n, n)` against its Stirling upper bound.
pub fn lemma2_bound_alpha(n: u64, alpha: &Alpha) -> Result<BoundPair> {
    if n == 0 {
        return domain("binomial bound needs n >= 1");
    }
    let a = alpha.floor_pow(n)?;
    Ok(BoundPair {
        lhs: ln_binomial_over_factorial(a + n, n)?,
        rhs: ln_alpha_rhs(n, alpha)?,
    })
}

/// `(1/n!) C(2n, n)` against `2^{2n - 1/2} e^n / (n^{n+1} pi)`.
pub fn lemma2_bound_central(n: u64) -> Result<BoundPair> {
    if n == 0 {
        return domain("binomial bound needs n >= 1");
    }
    let nf = n as f64;
    let ln_n = CertifiedLog::of_u64(n)?;
    // 2n - 1/2 is exact in double precision for the n we accept.
    let rhs =
        CertifiedLog::two().scale(2.0 * nf - 0.5) + CertifiedLog::exact(nf) - ln_n.scale(nf + 1.0) - CertifiedLog::pi();
    Ok(BoundPair {
        lhs: ln_binomial_over_factorial(2 * n, n)?,
        rhs,
    })
}
