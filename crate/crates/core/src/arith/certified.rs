//! Logarithms with a rigorous absolute error radius.
//!
//! Error model: IEEE-754 double arithmetic rounds to nearest (relative error
//! at most `EPS = 2^-53` per operation), and the platform `ln`, `ln_1p` and
//! `exp` are accurate to within two units in the last place. Every radius
//! below is the sum of the propagated input radii and one such term per
//! rounding step; interval endpoints are nudged outward by one ulp so the
//! final comparison is itself safe from rounding.

use std::cmp::Ordering;
use std::ops::{Add, Sub};

use serde::Serialize;

use super::BigNatural;
use crate::error::{domain, Result};

/// Unit roundoff of `f64`.
pub const EPS: f64 = f64::EPSILON / 2.0;

/// Relative error allowed for one libm call (two ulps).
const LIBM: f64 = 4.0 * EPS;

/// `ln Q` for some positive quantity `Q`, known to lie in
/// `[ln_value - err, ln_value + err]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CertifiedLog {
    pub ln_value: f64,
    pub err: f64,
}

/// How a certified comparison was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// The log intervals were disjoint.
    Logs,
    /// The intervals overlapped and exact values were compared.
    Exact,
}

impl CertifiedLog {
    /// A log value known exactly, e.g. `ln e^k = k`.
    pub const fn exact(ln_value: f64) -> Self {
        Self { ln_value, err: 0.0 }
    }

    pub fn new(ln_value: f64, err: f64) -> Self {
        debug_assert!(err >= 0.0 && ln_value.is_finite());
        Self { ln_value, err }
    }

    pub fn lo(&self) -> f64 {
        (self.ln_value - self.err).next_down()
    }

    pub fn hi(&self) -> f64 {
        (self.ln_value + self.err).next_up()
    }

    /// `ln x` for a machine integer `x >= 1`.
    pub fn of_u64(x: u64) -> Result<Self> {
        if x == 0 {
            return domain("logarithm of zero");
        }
        if x == 1 {
            return Ok(Self::exact(0.0));
        }
        if x < (1 << 53) {
            let v = (x as f64).ln();
            return Ok(Self::new(v, LIBM * v.abs()));
        }
        log_certified(&BigNatural::from(x))
    }

    /// `ln pi`.
    pub fn pi() -> Self {
        let v = std::f64::consts::PI.ln();
        Self::new(v, EPS + LIBM * v.abs())
    }

    /// `ln 2`.
    pub fn two() -> Self {
        Self::new(std::f64::consts::LN_2, EPS)
    }

    /// `ln 3`.
    pub fn three() -> Self {
        let v = 3f64.ln();
        Self::new(v, LIBM * v)
    }

    /// `ln(Q^c)` for an exactly representable exponent `c`.
    pub fn scale(self, c: f64) -> Self {
        let v = c * self.ln_value;
        Self::new(v, c.abs() * self.err + EPS * v.abs())
    }

    /// `ln(Q^c)` where `c` itself is only known to within `c_err`.
    pub fn scale_inexact(self, c: f64, c_err: f64) -> Self {
        let v = c * self.ln_value;
        let err = (c.abs() + c_err) * self.err + c_err * self.ln_value.abs() + EPS * v.abs();
        Self::new(v, err)
    }

    /// `ln(1 + Q)`. The map `t -> ln(1 + e^t)` is 1-Lipschitz.
    pub fn ln_one_plus(self) -> Self {
        let t = self.ln_value;
        let v = if t > 0.0 {
            t + (-t).exp().ln_1p()
        } else {
            t.exp().ln_1p()
        };
        Self::new(v, self.err + 2.0 * LIBM * (1.0 + v.abs()))
    }

    /// The log of the quantity `ln Q`, i.e. `ln ln Q`; needs `ln Q > 0`.
    pub fn ln_of_log(self) -> Result<Self> {
        let lo = self.lo();
        if lo <= 0.0 {
            return domain(format!("ln ln Q needs ln Q > 0, have [{lo}, {}]", self.hi()));
        }
        let v = self.ln_value.ln();
        // |d/dt ln t| <= 1/lo on the interval.
        Ok(Self::new(v, self.err / lo + EPS / lo + LIBM * v.abs()))
    }

    /// The enclosure of the log value itself.
    pub fn value(self) -> Enclosure {
        Enclosure::new(self.ln_value, self.err)
    }

    /// Ordering of the underlying quantities when the intervals are disjoint.
    pub fn cmp_certified(&self, other: &Self) -> Option<Ordering> {
        self.value().cmp_certified(&other.value())
    }
}

impl Add for CertifiedLog {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let v = self.ln_value + rhs.ln_value;
        Self::new(v, self.err + rhs.err + EPS * v.abs())
    }
}

impl Sub for CertifiedLog {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let v = self.ln_value - rhs.ln_value;
        Self::new(v, self.err + rhs.err + EPS * v.abs())
    }
}

/// A real number known to lie in `[value - err, value + err]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Enclosure {
    pub value: f64,
    pub err: f64,
}

impl Enclosure {
    pub fn new(value: f64, err: f64) -> Self {
        Self { value, err }
    }

    pub const fn exact(value: f64) -> Self {
        Self { value, err: 0.0 }
    }

    /// `a / b` for machine integers, correctly rounded.
    pub fn ratio(a: u64, b: u64) -> Self {
        let v = a as f64 / b as f64;
        // Each conversion below 2^53 is exact; the division rounds once.
        let conv = if a < (1 << 53) && b < (1 << 53) { 0.0 } else { 2.0 * EPS };
        Self::new(v, (EPS + conv) * v.abs())
    }

    pub fn lo(&self) -> f64 {
        (self.value - self.err).next_down()
    }

    pub fn hi(&self) -> f64 {
        (self.value + self.err).next_up()
    }

    pub fn cmp_certified(&self, other: &Self) -> Option<Ordering> {
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else if self.err == 0.0 && other.err == 0.0 && self.value == other.value {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl Add for Enclosure {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let v = self.value + rhs.value;
        Self::new(v, self.err + rhs.err + EPS * v.abs())
    }
}

impl Sub for Enclosure {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let v = self.value - rhs.value;
        Self::new(v, self.err + rhs.err + EPS * v.abs())
    }
}

/// Certified natural log of a big natural number.
///
/// Write `x = m * 2^s + r` with `m` the leading 64 bits and `0 <= r < 2^s`.
/// Then `ln x` lies in `[ln m + s ln 2, ln(m + 1) + s ln 2]`, a window of width
/// at most `1/m <= 2^-63` when `s > 0`. The radius adds:
/// converting `m` to `f64` (at most `EPS` in the log), the libm `ln` call
/// (`LIBM |ln m|`), `s * LN_2` with its constant and product roundings
/// (`3 EPS s ln 2`), and the final addition (`EPS |ln x|`).
pub fn log_certified(x: &BigNatural) -> Result<CertifiedLog> {
    if x.is_zero() {
        return domain("logarithm of zero");
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = x.as_biguint() >> shift;
    let m = top.iter_u64_digits().next().unwrap_or(0);
    if shift == 0 && m == 1 {
        return Ok(CertifiedLog::exact(0.0));
    }
    let ln_m = (m as f64).ln();
    let scaled = shift as f64 * std::f64::consts::LN_2;
    let v = ln_m + scaled;
    let truncation = if shift > 0 { (m as f64).recip() } else { 0.0 };
    let err = EPS + LIBM * ln_m.abs() + 3.0 * EPS * scaled + EPS * v.abs() + truncation;
    Ok(CertifiedLog::new(v, err))
}

/// Orders two positive integers through their certified logs, forcing the
/// exact values only when the log intervals overlap.
pub fn compare_certified(
    a: CertifiedLog,
    b: CertifiedLog,
    exact_a: impl FnOnce() -> BigNatural,
    exact_b: impl FnOnce() -> BigNatural,
) -> Ordering {
    compare_certified_traced(a, b, exact_a, exact_b).0
}

/// As [`compare_certified`], also reporting which path decided.
pub fn compare_certified_traced(
    a: CertifiedLog,
    b: CertifiedLog,
    exact_a: impl FnOnce() -> BigNatural,
    exact_b: impl FnOnce() -> BigNatural,
) -> (Ordering, Resolution) {
    match a.cmp_certified(&b) {
        Some(ord) => (ord, Resolution::Logs),
        None => (exact_a().cmp(&exact_b()), Resolution::Exact),
    }
}

#[cfg(test)]
mod tests {
    use super::compare_certified_traced as compare_traced;
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn log_of_one_is_exact_zero() {
        let l = log_certified(&BigNatural::one()).unwrap();
        assert_eq!((l.ln_value, l.err), (0.0, 0.0));
        assert!(log_certified(&BigNatural::default()).is_err());
        assert!(CertifiedLog::of_u64(0).is_err());
    }

    #[test]
    fn log_of_2310() {
        let l = log_certified(&2310u64.into()).unwrap();
        // ln 2310 = 7.745002803515... (ln 2 + ln 3 + ln 5 + ln 7 + ln 11).
        let reference = 7.745_002_803_515_839;
        assert!((l.ln_value - reference).abs() <= l.err + 1e-15, "{l:?}");
        assert!(l.err < 1e-14);
    }

    #[test]
    fn log_of_power_of_two_is_tight() {
        for k in [64u64, 65, 100, 1000, 100_000] {
            let x = BigNatural::power_of_two(k);
            let l = log_certified(&x).unwrap();
            let truth = k as f64 * std::f64::consts::LN_2;
            assert!((l.ln_value - truth).abs() <= l.err, "k={k} {l:?}");
            assert!(l.err <= 1e-9 * (1.0 + truth), "k={k} {l:?}");
        }
    }

    #[test]
    fn disjoint_intervals_avoid_exact_path() {
        let a = CertifiedLog::new(100f64.ln(), 1e-9);
        let b = CertifiedLog::new(101f64.ln(), 1e-9);
        let (ord, how) = compare_traced(a, b, || panic!("forced a"), || panic!("forced b"));
        assert_eq!((ord, how), (Ordering::Less, Resolution::Logs));
    }

    #[test]
    fn equal_quantities_resolve_exactly() {
        let x = BigNatural::from(BigUint::from(3u8).pow(500));
        let l = log_certified(&x).unwrap();
        let (ord, how) = compare_traced(l, l, || x.clone(), || x.clone());
        assert_eq!((ord, how), (Ordering::Equal, Resolution::Exact));
    }

    #[test]
    fn ln_one_plus_matches_direct_evaluation() {
        for x in [1e-12f64, 0.5, 1.0, 3.0, 1e6] {
            let l = CertifiedLog::new(x.ln(), 0.0).ln_one_plus();
            assert!((l.ln_value - x.ln_1p()).abs() <= l.err + 4.0 * EPS, "{x}");
        }
    }
}
