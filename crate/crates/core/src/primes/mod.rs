//! Prime generation and counting.
//!
//! [`PrimeEngine`] owns a growable [`PrimeTable`] and answers `p_n`, exact
//! `pi(x)` by binary search over the table, and `pi(x)` far beyond the table
//! through the sublinear counter in [`lucy`].

mod cache;
mod lucy;
mod primality;
mod sieve;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use serde::Serialize;

pub use cache::{
    default_cache_dir, read_table as read_cache_file, write_table as write_cache_file, CACHE_ENV, CACHE_FILE,
};
pub use sieve::{count_primes_in_range, SEGMENT_SLOTS};

use crate::error::{domain, resource, Result};

/// Every prime up to `limit`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn count(&self) -> u64 {
        self.primes.len() as u64
    }

    /// `pi(x)` when `x <= limit`.
    pub fn pi(&self, x: u64) -> Option<u64> {
        (x <= self.limit).then(|| self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// The `n`th prime (1-based) when the table reaches it.
    pub fn nth(&self, n: u64) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.primes.get(i as usize)).copied()
    }

    pub fn contains(&self, x: u64) -> Option<bool> {
        (x <= self.limit).then(|| self.primes.binary_search(&x).is_ok())
    }
}

/// A prime count at a single point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PiCheckpoint {
    pub x: u64,
    pub pi_x: u64,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Largest `x` that [`PrimeEngine::pi_exact`] will sieve to.
    pub exact_cap: u64,
    /// Largest `x` accepted by [`PrimeEngine::pi_fast`].
    pub fast_ceiling: u64,
    /// Peak memory allowed for a prime table, in bytes.
    pub max_table_bytes: u64,
    /// Where tables above `persist_above` are cached; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
    pub persist_above: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            exact_cap: 1_000_000_000,
            fast_ceiling: 100_000_000_000_000,
            max_table_bytes: 1 << 30,
            cache_dir: None,
            persist_above: 100_000_000,
        }
    }
}

impl EngineConfig {
    /// Defaults plus the cache directory from the environment.
    pub fn from_env() -> Self {
        Self {
            cache_dir: Some(default_cache_dir()),
            ..Self::default()
        }
    }
}

/// Upper estimate of the bytes needed to hold every prime up to `limit`
/// (`pi(x) < 1.25506 x / ln x` for `x > 1`), plus one sieve segment.
fn table_bytes(limit: u64) -> u64 {
    let x = limit.max(17) as f64;
    let count = 1.25506 * x / x.ln() + 16.0;
    (count * 8.0) as u64 + SEGMENT_SLOTS
}

/// Sieves every prime up to `limit` with the default memory budget.
pub fn sieve_upto(limit: u64) -> Result<PrimeTable> {
    build_table(limit, EngineConfig::default().max_table_bytes)
}

fn build_table(limit: u64, max_bytes: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return domain(format!("sieve limit must be at least 2, got {limit}"));
    }
    let need = table_bytes(limit);
    if need > max_bytes {
        return resource(format!(
            "prime table up to {limit} needs about {need} bytes, budget is {max_bytes}"
        ));
    }
    Ok(PrimeTable {
        limit,
        primes: sieve::primes_up_to(limit),
    })
}

/// Counters exposed in verification reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub sieve_extensions: u64,
    /// Extensions served from the cache file instead of sieving.
    pub cache_loads: u64,
    pub pi_fast_calls: u64,
}

/// Shared prime oracle. Queries take `&self`; the table grows behind a lock.
pub struct PrimeEngine {
    config: EngineConfig,
    table: RwLock<Arc<PrimeTable>>,
    pi_memo: Mutex<HashMap<u64, u64>>,
    sieve_extensions: AtomicU64,
    cache_loads: AtomicU64,
    pi_fast_calls: AtomicU64,
}

impl Default for PrimeEngine {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl PrimeEngine {
    pub fn new(config: EngineConfig) -> Self {
        let initial = PrimeTable {
            limit: 1 << 16,
            primes: sieve::primes_up_to(1 << 16),
        };
        Self {
            config,
            table: RwLock::new(Arc::new(initial)),
            pi_memo: Mutex::new(HashMap::new()),
            sieve_extensions: AtomicU64::new(0),
            cache_loads: AtomicU64::new(0),
            pi_fast_calls: AtomicU64::new(0),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn table(&self) -> Arc<PrimeTable> {
        self.table.read().unwrap().clone()
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            sieve_extensions: self.sieve_extensions.load(Ordering::Relaxed),
            cache_loads: self.cache_loads.load(Ordering::Relaxed),
            pi_fast_calls: self.pi_fast_calls.load(Ordering::Relaxed),
        }
    }

    /// Grows the table so that it covers every prime `<= limit`.
    pub fn ensure_limit(&self, limit: u64) -> Result<Arc<PrimeTable>> {
        let current = self.table();
        if current.limit >= limit {
            return Ok(current);
        }
        let mut guard = self.table.write().unwrap();
        if guard.limit >= limit {
            return Ok(guard.clone());
        }
        let table = Arc::new(self.load_or_sieve(limit)?);
        self.sieve_extensions.fetch_add(1, Ordering::Relaxed);
        *guard = table.clone();
        Ok(table)
    }

    fn load_or_sieve(&self, limit: u64) -> Result<PrimeTable> {
        let path = match &self.config.cache_dir {
            Some(dir) if limit > self.config.persist_above => dir.join(CACHE_FILE),
            _ => return build_table(limit, self.config.max_table_bytes),
        };
        if cache::read_limit(&path).is_ok_and(|cached| cached >= limit) {
            if let Ok((cached, primes)) = cache::read_table(&path) {
                self.cache_loads.fetch_add(1, Ordering::Relaxed);
                return Ok(PrimeTable { limit: cached, primes });
            }
        }
        let table = build_table(limit, self.config.max_table_bytes)?;
        // Cache writes are best-effort; a read-only cache dir only costs a re-sieve.
        let _ = cache::write_table(&path, table.limit, &table.primes);
        Ok(table)
    }

    /// Grows the table until it holds at least `n` primes.
    pub fn ensure_index(&self, n: u64) -> Result<Arc<PrimeTable>> {
        let mut table = self.table();
        if table.count() >= n {
            return Ok(table);
        }
        let bound = if n >= 6 {
            let nf = n as f64;
            (nf * (nf.ln() + nf.ln().ln())).ceil() as u64
        } else {
            13
        };
        let mut target = bound.max(table.limit.saturating_mul(2).min(self.config.exact_cap));
        loop {
            table = self.ensure_limit(target)?;
            if table.count() >= n {
                return Ok(table);
            }
            target = table.limit.saturating_mul(2);
        }
    }

    /// `p_n`, 1-based.
    pub fn nth_prime(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return domain("primes are indexed from 1");
        }
        let table = self.ensure_index(n)?;
        Ok(table.nth(n).expect("table covers index"))
    }

    /// Exact `pi(x)` from the sieved table; `x` must not exceed the exact-mode cap.
    pub fn pi_exact(&self, x: u64) -> Result<u64> {
        if x > self.config.exact_cap {
            return resource(format!(
                "pi_exact({x}) exceeds the exact-mode cap {}; use pi_fast",
                self.config.exact_cap
            ));
        }
        let table = self.table();
        if let Some(pi) = table.pi(x) {
            return Ok(pi);
        }
        let grow = table.limit.saturating_mul(2).min(self.config.exact_cap);
        let table = self.ensure_limit(x.max(grow))?;
        Ok(table.pi(x).expect("table covers x"))
    }

    /// Exact `pi(x)` by the sublinear counter, up to the configured ceiling.
    pub fn pi_fast(&self, x: u64) -> Result<u64> {
        if x > self.config.fast_ceiling {
            return resource(format!(
                "pi_fast({x}) is above the configured ceiling {}",
                self.config.fast_ceiling
            ));
        }
        self.pi_fast_calls.fetch_add(1, Ordering::Relaxed);
        if let Some(&v) = self.pi_memo.lock().unwrap().get(&x) {
            return Ok(v);
        }
        let v = lucy::prime_pi(x);
        self.pi_memo.lock().unwrap().insert(x, v);
        Ok(v)
    }

    pub fn is_prime(&self, x: u64) -> bool {
        match self.table().contains(x) {
            Some(hit) => hit,
            None => primality::miller_rabin(x),
        }
    }
}

/// Table-free deterministic primality test for any `u64`.
pub fn is_prime_u64(x: u64) -> bool {
    primality::miller_rabin(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_examples() {
        assert_eq!(sieve_upto(10).unwrap().primes(), &[2, 3, 5, 7]);
        let two = sieve_upto(2).unwrap();
        assert_eq!((two.primes(), two.count()), (&[2u64][..], 1));
        assert!(matches!(sieve_upto(1), Err(crate::Error::Domain(_))));
        assert!(matches!(sieve_upto(0), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn memory_budget_is_enforced() {
        let err = build_table(1 << 40, 1 << 30).unwrap_err();
        assert!(matches!(err, crate::Error::Resource(_)), "{err}");
    }

    #[test]
    fn nth_prime_grows_transparently() {
        let engine = PrimeEngine::default();
        assert_eq!(engine.nth_prime(1).unwrap(), 2);
        assert_eq!(engine.nth_prime(2).unwrap(), 3);
        assert_eq!(engine.nth_prime(1000).unwrap(), 7919);
        let before = engine.table().limit();
        let p = engine.nth_prime(200_000).unwrap();
        assert_eq!(p, 2_750_159);
        assert!(engine.table().limit() > before);
        assert!(matches!(engine.nth_prime(0), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn pi_exact_cap_redirects_to_fast() {
        let engine = PrimeEngine::new(EngineConfig {
            exact_cap: 1000,
            fast_ceiling: 10_000,
            ..EngineConfig::default()
        });
        assert_eq!(engine.pi_exact(1).unwrap(), 0);
        assert_eq!(engine.pi_exact(30).unwrap(), 10);
        assert!(matches!(engine.pi_exact(1001), Err(crate::Error::Resource(_))));
        let err = engine.pi_fast(10_001).unwrap_err().to_string();
        assert!(err.contains("10000"), "{err}");
    }

    #[test]
    fn is_prime_examples() {
        let engine = PrimeEngine::default();
        assert!(!engine.is_prime(0));
        assert!(!engine.is_prime(1));
        assert!(engine.is_prime(2));
        assert!(!engine.is_prime(30031));
        assert_eq!(59 * 509, 30031);
        assert!(engine.is_prime(1_000_000_007));
    }

    #[test]
    fn cache_roundtrip_through_engine() {
        let dir = tempfile::tempdir().unwrap();
        let config = EngineConfig {
            cache_dir: Some(dir.path().to_path_buf()),
            persist_above: 100_000,
            ..EngineConfig::default()
        };
        let first = PrimeEngine::new(config.clone());
        let t1 = first.ensure_limit(300_000).unwrap();
        let path = dir.path().join(CACHE_FILE);
        assert!(path.exists());
        let second = PrimeEngine::new(config);
        let t2 = second.ensure_limit(250_000).unwrap();
        assert_eq!(t2.limit(), 300_000);
        assert_eq!(t1.primes(), t2.primes());
    }
}
