use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::arith::EPS;
use crate::error::{domain, Error, Result};

/// Largest denominator for which `[n^alpha]` is certified by exact powers.
pub const MAX_EXACT_DENOMINATOR: u64 = 10_000;

/// An exponent `1 < alpha <= 2`, held as a reduced fraction so that
/// `[n^alpha]` can be decided exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub fn from_ratio(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return domain("alpha denominator is zero");
        }
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        if num <= den || num > 2 * den {
            return domain(format!("alpha = {num}/{den} must satisfy 1 < alpha <= 2"));
        }
        Ok(Self { num, den })
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    /// Nearest double to the fraction.
    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_two(&self) -> bool {
        self.num == 2 * self.den
    }

    /// `alpha - 1` in double precision together with a bound on its distance
    /// from the exact fraction.
    pub fn minus_one(&self) -> (f64, f64) {
        let (whole, rem) = ((self.num - self.den) as f64, self.den as f64);
        let v = whole / rem;
        (v, 2.0 * EPS * v)
    }

    /// `[n^alpha]`, the integer part, certified.
    ///
    /// A double-precision enclosure of `n^alpha` settles the floor whenever it
    /// does not straddle an integer. Otherwise `c = [n^alpha]` is pinned by the
    /// exact test `c^den <= n^num < (c + 1)^den`.
    pub fn floor_pow(&self, n: u64) -> Result<u64> {
        if n <= 1 {
            return Ok(n);
        }
        if n > 1 << 31 {
            return domain(format!("[n^alpha] for n = {n} does not fit the certified range"));
        }
        let t = self.value() * (n as f64).ln();
        let slack = 8.0 * EPS * (t + 1.0);
        let lo = (t - slack).exp() * (1.0 - 8.0 * EPS);
        let hi = (t + slack).exp() * (1.0 + 8.0 * EPS);
        if lo.floor() == hi.floor() && hi < (1u64 << 53) as f64 {
            return Ok(lo.floor() as u64);
        }
        if self.den > MAX_EXACT_DENOMINATOR {
            return Err(Error::Precision(format!(
                "[{n}^({}/{})] is ambiguous in double precision and the denominator is too large to settle exactly",
                self.num, self.den
            )));
        }
        let den = self.den as u32;
        let target = BigUint::from(n).pow(self.num as u32);
        let mut c = lo.floor().max(1.0) as u64;
        while BigUint::from(c).pow(den) > target {
            c -= 1;
        }
        while BigUint::from(c + 1).pow(den) <= target {
            c += 1;
        }
        Ok(c)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts `"1.1"`, `"3/2"` or `"2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Domain(format!("cannot parse alpha from {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d = d.trim().parse().map_err(|_| bad())?;
            return Self::from_ratio(n, d);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
        Self::from_ratio(num, den)
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    /// Uses the shortest decimal that round-trips to `x`, so `1.1` means `11/10`.
    fn try_from(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return domain(format!("alpha must be finite, got {x}"));
        }
        format!("{x}").parse()
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}
