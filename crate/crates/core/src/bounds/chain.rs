//! Link-by-link evaluation of the counting argument's contradiction chain.
//!
//! Suppose fewer than `[m^alpha]` primes lie strictly between `p_{m+1}` and
//! `P = p_1 ... p_{m+1}`, say `k <= [m^alpha] - 1` of them. Each link below
//! is a concrete inequality on `(m, alpha, k)`; evaluating them numerically
//! shows where the chain breaks. For `m > x0(alpha)` the closing link `14`
//! must come out false.

use serde::Serialize;

use super::binomial_bounds::{lemma2_bound_alpha, lemma2_bound_central};
use super::Alpha;
use crate::arith::{binomial, factorial, primorial, totient_primorial, BigNatural, CertifiedLog, EPS};
use crate::error::{domain, Error, Result};
use crate::primes::PrimeEngine;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainLink {
    pub id: &'static str,
    pub statement: &'static str,
    /// `None` when the link does not apply at this `m`.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub m: u64,
    pub alpha: f64,
    pub k: u64,
    pub links: Vec<ChainLink>,
}

impl ChainReport {
    pub fn link(&self, id: &str) -> Option<&ChainLink> {
        self.links.iter().find(|l| l.id == id)
    }

    pub fn holds(&self, id: &str) -> Option<bool> {
        self.link(id).and_then(|l| l.holds)
    }
}

fn decided(ord: Option<std::cmp::Ordering>, what: &str) -> Result<std::cmp::Ordering> {
    ord.ok_or_else(|| Error::Precision(format!("link {what}: certified logs overlap")))
}

/// `m^{alpha-1} + 1 > (2/e^2) (m (m+1) pi / (2 sqrt 3))^{1/m} m`, in logs.
pub fn eq13_holds(m: u64, alpha: &Alpha) -> Result<bool> {
    if m == 0 {
        return domain("m must be positive");
    }
    let ln_m = CertifiedLog::of_u64(m)?;
    let (am1, am1_err) = alpha.minus_one();
    let lhs = ln_m.scale_inexact(am1, am1_err).ln_one_plus();
    let inner = ln_m + CertifiedLog::of_u64(m + 1)? + CertifiedLog::pi()
        - CertifiedLog::two()
        - CertifiedLog::three().scale(0.5);
    let mf = m as f64;
    let rhs = CertifiedLog::two() - CertifiedLog::exact(2.0) + inner.scale_inexact(1.0 / mf, EPS / mf) + ln_m;
    Ok(decided(lhs.cmp_certified(&rhs), "13")?.is_gt())
}

/// `m^{alpha-1} + 1 - pi m / (e^2 sqrt 3) > 0`, in logs.
pub fn eq14_holds(m: u64, alpha: &Alpha) -> Result<bool> {
    if m == 0 {
        return domain("m must be positive");
    }
    let ln_m = CertifiedLog::of_u64(m)?;
    let (am1, am1_err) = alpha.minus_one();
    let lhs = ln_m.scale_inexact(am1, am1_err).ln_one_plus();
    let rhs = CertifiedLog::pi() + ln_m - CertifiedLog::exact(2.0) - CertifiedLog::three().scale(0.5);
    Ok(decided(lhs.cmp_certified(&rhs), "14")?.is_gt())
}

fn link(id: &'static str, statement: &'static str, holds: Option<bool>) -> ChainLink {
    ChainLink { id, statement, holds }
}

/// Evaluates links 8 through 14 at `(m, alpha, k)` with `k <= [m^alpha] - 1`.
pub fn eval_proof_chain(engine: &PrimeEngine, m: u64, alpha: &Alpha, k: u64) -> Result<ChainReport> {
    if m == 0 {
        return domain("m must be positive");
    }
    let cap = alpha.floor_pow(m)?;
    if k + 1 > cap {
        return domain(format!("k = {k} exceeds [m^alpha] - 1 = {}", cap.saturating_sub(1)));
    }
    let big_p = primorial(engine, m + 1)?;
    let p_next = engine.nth_prime(m + 1)?;
    let phi = totient_primorial(engine, m + 1)?;
    let tuples = binomial(m + k, m)?;
    let m_fact = factorial(m);

    let eq8 = big_p < BigNatural::from(p_next).pow((m + 1) as u32);
    let eq9 = tuples >= phi;
    let eq10 = (m >= 3).then(|| phi >= &BigNatural::power_of_two(m - 2) * &factorial(m + 1));
    // 2^{m-2}(m+1) <= C(m+k, m)/m!  <=>  2^m (m+1) m! <= 4 C(m+k, m)
    let eq11 = &(BigNatural::power_of_two(m) * (m + 1)) * &m_fact <= tuples.clone() * 4;
    let eq12_monotone = tuples < binomial(cap + m, m)?;
    let eq12_bound = lemma2_bound_alpha(m, alpha)?
        .holds()
        .ok_or_else(|| Error::Precision("link 12: certified logs overlap".into()))?;

    Ok(ChainReport {
        m,
        alpha: alpha.value(),
        k,
        links: vec![
            link("8", "P_{m+1} < p_{m+1}^{m+1}", Some(eq8)),
            link("9", "C(m+k, m) >= phi(P_{m+1})", Some(eq9)),
            link("10", "phi(P_{m+1}) >= 2^{m-2} (m+1)!", eq10),
            link("11", "2^{m-2} (m+1) <= C(m+k, m) / m!", Some(eq11)),
            link("12a", "C(m+k, m) < C([m^alpha]+m, m)", Some(eq12_monotone)),
            link(
                "12b",
                "C([m^alpha]+m, m) / m! < e^{2m} (m^{alpha-1}+1)^m sqrt(3) / (2 m^{m+1} pi)",
                Some(eq12_bound),
            ),
            link(
                "13",
                "m^{alpha-1} + 1 > (2/e^2) (m(m+1) pi / (2 sqrt 3))^{1/m} m",
                Some(eq13_holds(m, alpha)?),
            ),
            link(
                "14",
                "m^{alpha-1} + 1 - pi m / (e^2 sqrt 3) > 0",
                Some(eq14_holds(m, alpha)?),
            ),
        ],
    })
}

/// The `alpha = 1` branch at `m`, with `k = m - 1`.
pub fn eval_linear_chain(m: u64) -> Result<ChainReport> {
    if m == 0 {
        return domain("m must be positive");
    }
    let m_fact = factorial(m);
    let central = binomial(2 * m, m)?;
    // 2^{m-2}(m+1) <= C(2m, m) / (2 m!)  <=>  2^m (m+1) m! <= 2 C(2m, m)
    let eq15 = &(BigNatural::power_of_two(m) * (m + 1)) * &m_fact <= central.clone() * 2;
    let identity = binomial(2 * m - 1, m)? * 2 == central;
    let eq4 = lemma2_bound_central(m)?
        .holds()
        .ok_or_else(|| Error::Precision("link 4: certified logs overlap".into()))?;
    // 1 < sqrt(2) / (m (m+1) pi) (2e/m)^m
    let mf = m as f64;
    let ln_m = CertifiedLog::of_u64(m)?;
    let rhs = CertifiedLog::two().scale(0.5) - ln_m - CertifiedLog::of_u64(m + 1)? - CertifiedLog::pi()
        + (CertifiedLog::two() + CertifiedLog::exact(1.0) - ln_m).scale(mf);
    let closing = decided(rhs.cmp_certified(&CertifiedLog::exact(0.0)), "closing")?.is_gt();
    Ok(ChainReport {
        m,
        alpha: 1.0,
        k: m - 1,
        links: vec![
            link("identity", "C(2m-1, m) = C(2m, m) / 2", Some(identity)),
            link("15", "2^{m-2} (m+1) <= C(2m, m) / (2 m!)", Some(eq15)),
            link("4", "C(2m, m) / m! < 2^{2m-1/2} e^m / (m^{m+1} pi)", Some(eq4)),
            link("closing", "1 < sqrt(2) / (m (m+1) pi) (2e/m)^m", Some(closing)),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_base_case_is_tight() {
        // (2-1)(3-1)(5-1)(7-1) = 48 = 2^1 * 4!
        let engine = PrimeEngine::default();
        let phi = totient_primorial(&engine, 4).unwrap();
        assert_eq!(phi, 48u64.into());
        assert_eq!(&BigNatural::power_of_two(1) * &factorial(4), 48u64.into());
        let alpha: Alpha = "1.5".parse().unwrap();
        let r = eval_proof_chain(&engine, 3, &alpha, 0).unwrap();
        assert_eq!(r.holds("10"), Some(true));
    }

    #[test]
    fn eq14_matches_direct_float_evaluation() {
        let alpha: Alpha = "1.5".parse().unwrap();
        let c = std::f64::consts::PI / super::super::roots::e2_sqrt3();
        for m in 1..200u64 {
            let direct = (m as f64).sqrt() + 1.0 - c * m as f64;
            assert_eq!(eq14_holds(m, &alpha).unwrap(), direct > 0.0, "m = {m}");
        }
    }

    #[test]
    fn k_range_is_enforced() {
        let engine = PrimeEngine::default();
        let alpha: Alpha = "1.5".parse().unwrap();
        // [4^1.5] = 8, so k <= 7.
        assert!(eval_proof_chain(&engine, 4, &alpha, 7).is_ok());
        assert!(matches!(eval_proof_chain(&engine, 4, &alpha, 8), Err(Error::Domain(_))));
        assert!(eval_proof_chain(&engine, 0, &alpha, 0).is_err());
    }

    #[test]
    fn linear_chain_closes_from_six() {
        for m in 1..40 {
            let r = eval_linear_chain(m).unwrap();
            assert_eq!(r.holds("identity"), Some(true));
            assert_eq!(r.holds("4"), Some(true));
            if m >= 6 {
                assert_eq!(r.holds("closing"), Some(false), "m = {m}");
            }
        }
    }
}
