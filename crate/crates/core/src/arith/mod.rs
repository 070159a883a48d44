//! Exact arithmetic on the quantities the inequalities compare: primorials,
//! totients of primorials, binomials and factorials, plus certified
//! logarithms for ordering them cheaply.

mod certified;

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use certified::{
    compare_certified, compare_certified_traced, log_certified, CertifiedLog, Enclosure, Resolution, EPS,
};

use crate::error::{domain, resource, Error, Result};
use crate::primes::PrimeEngine;

/// Largest primorial index accepted by [`primorial`] and [`totient_primorial`].
pub const PRIMORIAL_MAX_INDEX: u64 = 100_000;

/// Arbitrary-precision natural number. Serializes as a decimal string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigNatural(BigUint);

impl BigNatural {
    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self(self.0.pow(exp))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// `2^exp`.
    pub fn power_of_two(exp: u64) -> Self {
        Self(BigUint::one() << exp)
    }
}

impl From<u64> for BigNatural {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u128> for BigNatural {
    fn from(v: u128) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigNatural {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for BigNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigNatural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return domain(format!("not a decimal natural number: {s:?}"));
        }
        BigUint::from_str(s).map(Self).map_err(|e| Error::Domain(e.to_string()))
    }
}

impl Serialize for BigNatural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for BigNatural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Mul<&'a BigNatural> for &'a BigNatural {
    type Output = BigNatural;
    fn mul(self, rhs: &BigNatural) -> BigNatural {
        BigNatural(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for BigNatural {
    type Output = BigNatural;
    fn mul(self, rhs: u64) -> BigNatural {
        BigNatural(self.0 * rhs)
    }
}

impl<'a> Add<&'a BigNatural> for &'a BigNatural {
    type Output = BigNatural;
    fn add(self, rhs: &BigNatural) -> BigNatural {
        BigNatural(&self.0 + &rhs.0)
    }
}

impl Add<u64> for BigNatural {
    type Output = BigNatural;
    fn add(self, rhs: u64) -> BigNatural {
        BigNatural(self.0 + rhs)
    }
}

/// Balanced product: multiplies operands of similar size so the cost stays
/// subquadratic in the size of the result.
pub fn product_tree(values: &[u64]) -> BigNatural {
    fn go(values: &[u64]) -> BigUint {
        if values.len() <= 16 {
            return values.iter().fold(BigUint::one(), |acc, &v| acc * v);
        }
        let (l, r) = values.split_at(values.len() / 2);
        go(l) * go(r)
    }
    BigNatural(go(values))
}

fn check_primorial_index(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        return domain(format!("{what}(0) is excluded; products start at p_1"));
    }
    if n > PRIMORIAL_MAX_INDEX {
        return resource(format!("{what}({n}) exceeds the index cap {PRIMORIAL_MAX_INDEX}"));
    }
    Ok(())
}

/// `p_1 p_2 ... p_n`.
pub fn primorial(engine: &PrimeEngine, n: u64) -> Result<BigNatural> {
    check_primorial_index(n, "primorial")?;
    let table = engine.ensure_index(n)?;
    Ok(product_tree(&table.primes()[..n as usize]))
}

/// `phi(p_1 ... p_n) = (p_1 - 1)(p_2 - 1)...(p_n - 1)`.
pub fn totient_primorial(engine: &PrimeEngine, n: u64) -> Result<BigNatural> {
    check_primorial_index(n, "totient_primorial")?;
    let table = engine.ensure_index(n)?;
    let shifted: Vec<u64> = table.primes()[..n as usize].iter().map(|p| p - 1).collect();
    Ok(product_tree(&shifted))
}

/// `C(n, k)` by the running product `C(n-k+i, i) = C(n-k+i-1, i-1) (n-k+i) / i`;
/// every division is exact.
pub fn binomial(n: u64, k: u64) -> Result<BigNatural> {
    if k > n {
        return domain(format!("binomial({n}, {k}) needs k <= n"));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(BigNatural(acc))
}

pub fn factorial(n: u64) -> BigNatural {
    let factors: Vec<u64> = (2..=n).collect();
    product_tree(&factors)
}
