//! Every inequality the verifier knows, with its scan limits.

use std::fmt;

use super::eval::{ln_ratio_of_products, ScanCtx};
use crate::arith::{binomial, BigNatural, CertifiedLog, Enclosure, EPS};
use crate::bounds::{solve_x0, Alpha, RootTarget, DEFAULT_TOL};
use crate::error::{resource, Result};
use crate::primes::PrimeEngine;

pub(crate) type Predicate = Box<dyn Fn(&ScanCtx<'_>, u64) -> Result<bool> + Send + Sync>;

/// Returns `(largest prime index, largest primorial index)` touched when
/// scanning up to `hi`.
pub(crate) type Needs = Box<dyn Fn(&PrimeEngine, u64) -> Result<(u64, u64)> + Send + Sync>;

/// One named statement `predicate(n)` about the `n`th prime or primorial.
pub struct InequalitySpec {
    pub id: String,
    pub description: String,
    /// Index from which the literature claims the statement.
    pub claimed_from: Option<u64>,
    /// Whether a failure at or beyond `claimed_from` is a verification failure.
    /// Statements recorded only as observed thresholds are not asserted.
    pub asserted: bool,
    /// Least `n` at which the predicate is defined.
    pub defined_from: u64,
    /// Largest `n` scanned at desk scale.
    pub feasible_max: u64,
    /// What bounds `feasible_max`.
    pub constraint: &'static str,
    pub(crate) needs: Needs,
    pub(crate) predicate: Predicate,
}

impl fmt::Debug for InequalitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InequalitySpec")
            .field("id", &self.id)
            .field("claimed_from", &self.claimed_from)
            .field("asserted", &self.asserted)
            .field("defined_from", &self.defined_from)
            .field("feasible_max", &self.feasible_max)
            .finish_non_exhaustive()
    }
}

impl InequalitySpec {
    /// Evaluates the predicate at a single index.
    pub fn eval(&self, ctx: &ScanCtx<'_>, n: u64) -> Result<bool> {
        (self.predicate)(ctx, n)
    }
}

/// Scan limit for statements compared through certified primorial logs.
pub const PRIMORIAL_SCAN_MAX: u64 = 2000;
/// Scan limit for statements about single primes.
pub const PRIME_SCAN_MAX: u64 = 1_000_000;
/// Default exponent for the registered `theorem_alpha` scan.
pub const THEOREM_ALPHA_DEFAULT: &str = "1.1";

const BIGINT: &str = "big-integer and certified-log budget";
const SIEVE: &str = "prime table size";
const PI_CEILING: &str = "pi_fast ceiling: p_1...p_{n+1} must stay below it";

struct Builder {
    spec: InequalitySpec,
}

fn spec(id: impl Into<String>, description: impl Into<String>) -> Builder {
    Builder {
        spec: InequalitySpec {
            id: id.into(),
            description: description.into(),
            claimed_from: None,
            asserted: false,
            defined_from: 1,
            feasible_max: PRIMORIAL_SCAN_MAX,
            constraint: BIGINT,
            needs: Box::new(|_, hi| Ok((hi + 1, hi))),
            predicate: Box::new(|_, _| Ok(true)),
        },
    }
}

impl Builder {
    fn claimed(mut self, n0: u64) -> Self {
        self.spec.claimed_from = Some(n0);
        self.spec.asserted = true;
        self
    }

    fn observed(mut self, n0: Option<u64>) -> Self {
        self.spec.claimed_from = n0;
        self.spec.asserted = false;
        self
    }

    fn defined_from(mut self, n: u64) -> Self {
        self.spec.defined_from = n;
        self
    }

    fn max(mut self, n: u64, constraint: &'static str) -> Self {
        self.spec.feasible_max = n;
        self.spec.constraint = constraint;
        self
    }

    fn needs(mut self, f: impl Fn(&PrimeEngine, u64) -> Result<(u64, u64)> + Send + Sync + 'static) -> Self {
        self.spec.needs = Box::new(f);
        self
    }

    fn predicate(mut self, f: impl Fn(&ScanCtx<'_>, u64) -> Result<bool> + Send + Sync + 'static) -> InequalitySpec {
        self.spec.predicate = Box::new(f);
        self.spec
    }
}

/// `lhs < p_1 ... p_n`, decided by certified logs with an exact fallback.
fn below_primorial(
    ctx: &ScanCtx<'_>,
    n: u64,
    lhs: CertifiedLog,
    exact: impl FnOnce() -> Result<BigNatural>,
) -> Result<bool> {
    let rhs = ctx.ln_primorial(n)?;
    Ok(ctx.cmp_exact(lhs, rhs, exact, || ctx.primorial(n))?.is_lt())
}

/// `base^exp < p_1 ... p_n`.
fn power_below_primorial(ctx: &ScanCtx<'_>, base: u64, exp: u64, n: u64) -> Result<bool> {
    let lhs = ctx.ln(base)?.scale(exp as f64);
    below_primorial(ctx, n, lhs, || Ok(BigNatural::from(base).pow(exp as u32)))
}

/// `ln ln n` as a log, for `n >= 2`.
fn ln_ln(n: u64) -> Result<CertifiedLog> {
    CertifiedLog::of_u64(n)?.ln_of_log()
}

/// Number of primes strictly between `p_{n+1}` and `p_1 ... p_{n+1}`.
pub(crate) fn primes_between(ctx: &ScanCtx<'_>, n: u64) -> Result<u64> {
    let big_p = small_primorial(ctx, n + 1)?;
    Ok(ctx.pi_fast(big_p - 1)? - (n + 1))
}

/// `p_1 ... p_n` as a machine integer, refusing anything above the
/// `pi_fast` ceiling.
pub(crate) fn small_primorial(ctx: &ScanCtx<'_>, n: u64) -> Result<u64> {
    let ceiling = ctx.engine().config().fast_ceiling;
    let mut acc = 1u64;
    for i in 1..=n {
        match acc.checked_mul(ctx.p(i)?) {
            Some(v) if v <= ceiling.saturating_add(1) => acc = v,
            _ => return resource(format!("p_1...p_{n} exceeds the pi_fast ceiling {ceiling}")),
        }
    }
    Ok(acc)
}

/// Largest `n` with `p_1 ... p_{n+1} - 1` no larger than `ceiling`.
pub fn theorem_max_n(engine: &PrimeEngine) -> u64 {
    let ceiling = engine.config().fast_ceiling;
    let mut acc = 1u64;
    let mut n = 0u64;
    loop {
        let p = engine.nth_prime(n + 1).expect("small prime index");
        match acc.checked_mul(p) {
            Some(v) if v - 1 <= ceiling => {
                acc = v;
                n += 1;
            }
            _ => return n.saturating_sub(1),
        }
    }
}

/// All registered inequalities, in a fixed order.
pub fn registry() -> Vec<InequalitySpec> {
    let mut specs = vec![
        spec("bonse2", "p_{n+1}^2 < p_1...p_n")
            .claimed(4)
            .predicate(|c, n| power_below_primorial(c, c.p(n + 1)?, 2, n)),
        spec("bonse3", "p_{n+1}^3 < p_1...p_n")
            .claimed(5)
            .predicate(|c, n| power_below_primorial(c, c.p(n + 1)?, 3, n)),
        spec("dalezman", "p_{n+1} p_{n+2} < p_1...p_n")
            .claimed(4)
            .needs(|_, hi| Ok((hi + 2, hi)))
            .predicate(|c, n| {
                let (a, b) = (c.p(n + 1)?, c.p(n + 2)?);
                let lhs = c.ln(a)? + c.ln(b)?;
                below_primorial(c, n, lhs, || Ok(BigNatural::from(a as u128 * b as u128)))
            }),
    ];

    for k in 2..=6u64 {
        specs.push(
            spec(
                format!("posa_{k}"),
                format!("p_{{n+1}}^{k} < p_1...p_n (existential threshold, observed only)"),
            )
            .observed(None)
            .predicate(move |c, n| power_below_primorial(c, c.p(n + 1)?, k, n)),
        );
    }

    specs.extend([
        spec(
            "panaitopol_form",
            "p_{n+1}^k < p_1...p_n with k = [n/2], i.e. for every k with n >= 2k",
        )
        .claimed(2)
        .predicate(|c, n| power_below_primorial(c, c.p(n + 1)?, n / 2, n)),
        spec("mamangakis", "p_{4n} < p_1...p_n")
            .claimed(11)
            .max(10_000, BIGINT)
            .needs(|_, hi| Ok((4 * hi, hi)))
            .predicate(|c, n| {
                let q = c.p(4 * n)?;
                below_primorial(c, n, c.ln(q)?, || Ok(q.into()))
            }),
        spec("mamangakis4", "p_{4n}^4 < p_1...p_{4n-9}")
            .claimed(46)
            .defined_from(3)
            .max(2_500, BIGINT)
            .needs(|_, hi| Ok((4 * hi, 4 * hi - 9)))
            .predicate(|c, n| power_below_primorial(c, c.p(4 * n)?, 4, 4 * n - 9)),
        spec("gupta_khare", "C(n^2, n) < p_1...p_n")
            .claimed(1794)
            .needs(|_, hi| Ok((hi, hi)))
            .predicate(|c, n| {
                let top = n * n;
                let lhs = ln_ratio_of_products((1..=n).map(|i| top - n + i), 1..=n)?;
                below_primorial(c, n, lhs, || binomial(top, n))
            }),
        spec("robin", "n^n < p_1...p_n")
            .claimed(13)
            .needs(|_, hi| Ok((hi, hi)))
            .predicate(|c, n| power_below_primorial(c, n, n, n)),
        spec("panaitopol", "p_{n+1}^{n - pi(n)} < p_1...p_n")
            .claimed(2)
            .predicate(|c, n| power_below_primorial(c, c.p(n + 1)?, n - c.pi_small(n)?, n)),
        spec("hassani", "p_{n+1}^{(1 - 1/ln n)(n - pi(n))} < p_1...p_n")
            .claimed(101)
            .defined_from(2)
            .predicate(|c, n| {
                let ln_n = c.ln(n)?;
                let e = (n - c.pi_small(n)?) as f64;
                let (l, l_lo) = (ln_n.ln_value, ln_n.lo());
                // (1 - 1/L) e; 1/L carries err(L)/L_lo^2 plus two roundings.
                let expo = (1.0 - 1.0 / l) * e;
                let expo_err = e * (ln_n.err / (l_lo * l_lo) + 3.0 * EPS * (1.0 + 1.0 / l_lo)) + EPS * expo.abs();
                let lhs = c.ln(c.p(n + 1)?)?.scale_inexact(expo, expo_err);
                Ok(c.cmp_real(lhs, c.ln_primorial(n)?, "hassani")?.is_lt())
            }),
        spec("zhang", "2^{p_{n+1}} < p_1...p_n")
            .claimed(10)
            .predicate(|c, n| power_below_primorial(c, 2, c.p(n + 1)?, n)),
        spec("sandor_sum", "p_1...p_{n-1} + p_n + p_{p_n - 2} <= p_1...p_n")
            .claimed(3)
            .defined_from(2)
            .needs(|e, hi| Ok((e.nth_prime(hi)?.max(hi), hi)))
            .predicate(|c, n| {
                // Equivalent: p_n + p_{p_n - 2} <= p_1...p_{n-1} (p_n - 1).
                let pn = c.p(n)?;
                let small = pn + c.p(pn - 2)?;
                let rhs = c.ln_primorial(n - 1)? + c.ln(pn - 1)?;
                let ord = c.cmp_exact(
                    c.ln(small)?,
                    rhs,
                    || Ok(small.into()),
                    || Ok(c.primorial(n - 1)? * (pn - 1)),
                )?;
                Ok(ord.is_le())
            }),
        spec("sandor_sq", "p_{n+5}^2 + p_{[n/2]}^2 < p_1...p_n")
            .claimed(24)
            .defined_from(2)
            .needs(|_, hi| Ok((hi + 5, hi)))
            .predicate(|c, n| {
                let (a, b) = (c.p(n + 5)? as u128, c.p(n / 2)? as u128);
                let lhs = a * a + b * b;
                let ln_lhs = crate::arith::log_certified(&BigNatural::from(lhs))?;
                below_primorial(c, n, ln_lhs, || Ok(lhs.into()))
            }),
        spec("remark_pn2", "p_{n^2} < p_n^2")
            .claimed(5)
            .max(1000, SIEVE)
            .needs(|_, hi| Ok((hi * hi, 0)))
            .predicate(|c, n| {
                let pn = c.p(n)? as u128;
                Ok((c.p(n * n)? as u128) < pn * pn)
            }),
        spec("remark_2pn2", "2 p_n^2 > p_{n^2} ln n")
            .claimed(1)
            .max(1020, SIEVE)
            .needs(|_, hi| Ok((hi * hi, 0)))
            .predicate(|c, n| {
                if n == 1 {
                    return Ok(true);
                }
                let lhs = CertifiedLog::two() + c.ln(c.p(n)?)?.scale(2.0);
                let rhs = c.ln(c.p(n * n)?)? + ln_ln(n)?;
                Ok(c.cmp_real(lhs, rhs, "remark_2pn2")?.is_gt())
            }),
        spec("rosser_lower", "p_n > n ln n")
            .claimed(5)
            .max(PRIME_SCAN_MAX, SIEVE)
            .needs(|_, hi| Ok((hi, 0)))
            .predicate(|c, n| {
                if n == 1 {
                    return Ok(true);
                }
                let rhs = c.ln(n)? + ln_ln(n)?;
                Ok(c.cmp_real(c.ln(c.p(n)?)?, rhs, "rosser_lower")?.is_gt())
            }),
        spec(
            "rosser_window",
            "ln n + ln ln n - 3/2 < p_n / n < ln n + ln ln n - 1/2 (cited for n >= 6; observed only)",
        )
        .observed(Some(6))
        .defined_from(2)
        .max(PRIME_SCAN_MAX, SIEVE)
        .needs(|_, hi| Ok((hi, 0)))
        .predicate(|c, n| {
            let w = c.ln(n)?.value() + ln_ln(n)?.value();
            let q = Enclosure::ratio(c.p(n)?, n);
            let lower = c
                .cmp_enclosure(w - Enclosure::exact(1.5), q, "rosser_window lower")?
                .is_lt();
            let upper = c
                .cmp_enclosure(q, w - Enclosure::exact(0.5), "rosser_window upper")?
                .is_lt();
            Ok(lower && upper)
        }),
        spec("pn_logn_mono", "p_n / ln n < p_{n+1} / ln(n+1)")
            .claimed(2)
            .defined_from(2)
            .max(PRIME_SCAN_MAX, SIEVE)
            .needs(|_, hi| Ok((hi + 1, 0)))
            .predicate(|c, n| {
                let lhs = c.ln(c.p(n)?)? + ln_ln(n + 1)?;
                let rhs = c.ln(c.p(n + 1)?)? + ln_ln(n)?;
                Ok(c.cmp_real(lhs, rhs, "pn_logn_mono")?.is_lt())
            }),
        spec("euler_totient", "phi(p_1...p_n) >= 2^{n-1}")
            .claimed(1)
            .needs(|_, hi| Ok((hi, hi)))
            .predicate(|c, n| {
                let lhs = c.ln_totient_primorial(n)?;
                let rhs = CertifiedLog::two().scale((n - 1) as f64);
                let ord = c.cmp_exact(
                    lhs,
                    rhs,
                    || crate::arith::totient_primorial(c.engine(), n),
                    || Ok(BigNatural::power_of_two(n - 1)),
                )?;
                Ok(ord.is_ge())
            }),
        spec(
            "theorem_linear",
            "at least n primes strictly between p_{n+1} and p_1...p_{n+1}",
        )
        .claimed(1)
        .max(11, PI_CEILING)
        .needs(|_, hi| Ok((hi + 1, 0)))
        .predicate(|c, n| Ok(primes_between(c, n)? >= n)),
    ]);

    let alpha: Alpha = THEOREM_ALPHA_DEFAULT.parse().expect("valid default alpha");
    let threshold = solve_x0(alpha.value(), RootTarget::Theorem, DEFAULT_TOL)
        .expect("root exists for the default alpha")
        .threshold();
    specs.push(
        spec(
            "theorem_alpha",
            format!("at least [n^{alpha}] primes strictly between p_{{n+1}} and p_1...p_{{n+1}} for n > x0({alpha})"),
        )
        .claimed(threshold)
        .max(11, PI_CEILING)
        .needs(|_, hi| Ok((hi + 1, 0)))
        .predicate(move |c, n| Ok(primes_between(c, n)? >= alpha.floor_pow(n)?)),
    );

    for k in 2..=4u64 {
        specs.push(
            spec(
                format!("reich_{k}"),
                format!("p_{{n+{k}}}^2 < p_1...p_n (existential threshold, observed only)"),
            )
            .observed(None)
            .needs(move |_, hi| Ok((hi + k, hi)))
            .predicate(move |c, n| power_below_primorial(c, c.p(n + k)?, 2, n)),
        );
    }
    specs
}
