//! Shared evaluation state for scans: the prime engine plus prefix tables of
//! certified `ln P_n` and `ln phi(P_n)`.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};

use crate::arith::{primorial, BigNatural, CertifiedLog, Enclosure, EPS};
use crate::bounds::CompensatedSum;
use crate::error::{Error, Result};
use crate::primes::{PrimeEngine, PrimeTable};

const LIBM: f64 = 4.0 * EPS;

/// Certified `ln` of `prod(nums) / prod(dens)` by compensated summation.
///
/// Radius: one libm error per term, `2 EPS |S|` for the compensated sum and a
/// second-order `2 k EPS^2 sum|ln x|` term.
pub(crate) fn ln_ratio_of_products(
    nums: impl IntoIterator<Item = u64>,
    dens: impl IntoIterator<Item = u64>,
) -> Result<CertifiedLog> {
    let mut acc = CompensatedSum::default();
    let (mut abs_sum, mut terms) = (0.0f64, 0u64);
    for (x, sign) in nums
        .into_iter()
        .map(|x| (x, 1.0))
        .chain(dens.into_iter().map(|x| (x, -1.0)))
    {
        if x == 0 {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        let l = (x as f64).ln();
        acc.add(sign * l);
        abs_sum += l;
        terms += 1;
    }
    let v = acc.value();
    let err = LIBM * abs_sum + 2.0 * EPS * v.abs() + 2.0 * terms as f64 * EPS * EPS * abs_sum;
    Ok(CertifiedLog::new(v, err))
}

/// Running prefix of certified `ln` of products over the first primes.
#[derive(Default)]
struct Prefix {
    sum: CompensatedSum,
    abs_sum: f64,
    libm_err: f64,
    /// entry `i` is the log of the product over the first `i` terms.
    logs: Vec<CertifiedLog>,
}

impl Prefix {
    fn extend_to(&mut self, n: usize, term: impl Fn(usize) -> u64) {
        if self.logs.is_empty() {
            self.logs.push(CertifiedLog::exact(0.0));
        }
        while self.logs.len() <= n {
            let i = self.logs.len();
            let l = (term(i) as f64).ln();
            self.sum.add(l);
            self.abs_sum += l;
            self.libm_err += LIBM * l;
            let v = self.sum.value();
            let err = self.libm_err + 2.0 * EPS * v.abs() + 2.0 * i as f64 * EPS * EPS * self.abs_sum;
            self.logs.push(CertifiedLog::new(v, err));
        }
    }
}

/// Holds the prime engine and the cached prefix logs shared by all scans.
pub struct Evaluator {
    engine: Arc<PrimeEngine>,
    theta: RwLock<Prefix>,
    theta_minus_one: RwLock<Prefix>,
}

impl Evaluator {
    pub fn new(engine: Arc<PrimeEngine>) -> Self {
        Self {
            engine,
            theta: RwLock::default(),
            theta_minus_one: RwLock::default(),
        }
    }

    pub fn engine(&self) -> &PrimeEngine {
        &self.engine
    }

    pub fn engine_arc(&self) -> Arc<PrimeEngine> {
        self.engine.clone()
    }

    /// Makes `p_1 .. p_prime_index` and the prefix logs up to `primorial_index`
    /// available without further locking.
    pub(crate) fn prepare(&self, prime_index: u64, primorial_index: u64) -> Result<Arc<PrimeTable>> {
        let table = self.engine.ensure_index(prime_index.max(primorial_index).max(1))?;
        let primes = table.primes();
        let n = primorial_index as usize;
        self.theta.write().unwrap().extend_to(n, |i| primes[i - 1]);
        self.theta_minus_one
            .write()
            .unwrap()
            .extend_to(n, |i| primes[i - 1] - 1);
        Ok(table)
    }

    /// Certified `ln(p_1 ... p_n)`.
    pub fn ln_primorial(&self, n: u64) -> Result<CertifiedLog> {
        if let Some(l) = self.theta.read().unwrap().logs.get(n as usize) {
            return Ok(*l);
        }
        self.prepare(n, n)?;
        Ok(self.theta.read().unwrap().logs[n as usize])
    }

    /// Certified `ln phi(p_1 ... p_n)`.
    pub fn ln_totient_primorial(&self, n: u64) -> Result<CertifiedLog> {
        if let Some(l) = self.theta_minus_one.read().unwrap().logs.get(n as usize) {
            return Ok(*l);
        }
        self.prepare(n, n)?;
        Ok(self.theta_minus_one.read().unwrap().logs[n as usize])
    }
}

/// Per-scan view: a snapshot of the prime table and the scan's counters.
pub struct ScanCtx<'a> {
    pub(crate) eval: &'a Evaluator,
    pub(crate) table: Arc<PrimeTable>,
    pub(crate) exact_fallbacks: AtomicU64,
    pub(crate) pi_fast_calls: AtomicU64,
}

impl<'a> ScanCtx<'a> {
    pub(crate) fn new(eval: &'a Evaluator, table: Arc<PrimeTable>) -> Self {
        Self {
            eval,
            table,
            exact_fallbacks: AtomicU64::new(0),
            pi_fast_calls: AtomicU64::new(0),
        }
    }

    pub fn engine(&self) -> &PrimeEngine {
        self.eval.engine()
    }

    /// `p_n`, 1-based.
    pub fn p(&self, n: u64) -> Result<u64> {
        match self.table.nth(n) {
            Some(p) => Ok(p),
            None => self.engine().nth_prime(n),
        }
    }

    pub fn pi_small(&self, x: u64) -> Result<u64> {
        match self.table.pi(x) {
            Some(v) => Ok(v),
            None => self.engine().pi_exact(x),
        }
    }

    pub fn pi_fast(&self, x: u64) -> Result<u64> {
        self.pi_fast_calls.fetch_add(1, AtomicOrdering::Relaxed);
        self.engine().pi_fast(x)
    }

    pub fn ln(&self, x: u64) -> Result<CertifiedLog> {
        CertifiedLog::of_u64(x)
    }

    pub fn ln_primorial(&self, n: u64) -> Result<CertifiedLog> {
        self.eval.ln_primorial(n)
    }

    pub fn ln_totient_primorial(&self, n: u64) -> Result<CertifiedLog> {
        self.eval.ln_totient_primorial(n)
    }

    pub fn primorial(&self, n: u64) -> Result<BigNatural> {
        primorial(self.engine(), n)
    }

    /// Orders two integers by certified logs, forcing exact values on overlap.
    pub fn cmp_exact(
        &self,
        a: CertifiedLog,
        b: CertifiedLog,
        exact_a: impl FnOnce() -> Result<BigNatural>,
        exact_b: impl FnOnce() -> Result<BigNatural>,
    ) -> Result<Ordering> {
        match a.cmp_certified(&b) {
            Some(ord) => Ok(ord),
            None => {
                self.exact_fallbacks.fetch_add(1, AtomicOrdering::Relaxed);
                Ok(exact_a()?.cmp(&exact_b()?))
            }
        }
    }

    /// Orders two quantities that have no exact integer form.
    pub fn cmp_real(&self, a: CertifiedLog, b: CertifiedLog, what: &str) -> Result<Ordering> {
        a.cmp_certified(&b)
            .ok_or_else(|| Error::Precision(format!("{what}: certified intervals overlap ({a:?} vs {b:?})")))
    }

    pub fn cmp_enclosure(&self, a: Enclosure, b: Enclosure, what: &str) -> Result<Ordering> {
        a.cmp_certified(&b)
            .ok_or_else(|| Error::Precision(format!("{what}: certified intervals overlap ({a:?} vs {b:?})")))
    }
}
