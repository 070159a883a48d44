//! Counting nonnegative integer `k`-tuples with `x_1 + ... + x_k <= n`.

use crate::arith::{binomial, BigNatural};
use crate::error::{domain, resource, Result};

pub const BRUTEFORCE_MAX_K: u64 = 8;
pub const BRUTEFORCE_MAX_N: u64 = 12;

/// Stars and bars: `C(n + k, n)`.
pub fn count_tuples_closed(k: u64, n: u64) -> Result<BigNatural> {
    if k == 0 {
        return domain("tuples need k >= 1");
    }
    binomial(n + k, n)
}

/// Walks every admissible tuple. Exponential; guarded at `k <= 8`, `n <= 12`.
pub fn count_tuples_bruteforce(k: u64, n: u64) -> Result<BigNatural> {
    if k == 0 {
        return domain("tuples need k >= 1");
    }
    if k > BRUTEFORCE_MAX_K || n > BRUTEFORCE_MAX_N {
        return resource(format!(
            "enumeration guard: k <= {BRUTEFORCE_MAX_K} and n <= {BRUTEFORCE_MAX_N}, got k = {k}, n = {n}"
        ));
    }
    fn walk(slots: u64, budget: u64) -> u64 {
        if slots == 0 {
            return 1;
        }
        (0..=budget).map(|x| walk(slots - 1, budget - x)).sum()
    }
    Ok(walk(k, n).into())
}
