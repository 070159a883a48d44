//! Segmented, odd-only sieve of Eratosthenes.
//!
//! Each segment holds [`SEGMENT_SLOTS`] odd candidates (one byte per slot, so
//! one mebibyte per segment). Segments are independent once the base primes up
//! to `sqrt(hi)` are known, so they are processed with rayon and concatenated
//! in order.

use num_integer::Roots;
use rayon::prelude::*;

/// Odd candidates per segment.
pub const SEGMENT_SLOTS: u64 = 1 << 20;

/// Plain sieve for the base primes; `limit` is at most a few million here.
pub(crate) fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Marks odd composites in `[lo, hi)` and hands every surviving odd value > 1 to `emit`.
/// `base` must contain every odd prime up to `sqrt(hi - 1)`.
fn sieve_odd_segment(lo: u64, hi: u64, base: &[u64], flags: &mut Vec<bool>, mut emit: impl FnMut(u64)) {
    let first = if lo.is_multiple_of(2) { lo + 1 } else { lo };
    if first >= hi {
        return;
    }
    let slots = (hi - first).div_ceil(2) as usize;
    flags.clear();
    flags.resize(slots, true);
    for &p in base {
        if p == 2 {
            continue;
        }
        let sq = p * p;
        if sq >= hi {
            break;
        }
        let mut start = if sq >= first { sq } else { first.div_ceil(p) * p };
        if start % 2 == 0 {
            start += p;
        }
        let mut idx = ((start - first) / 2) as usize;
        let step = p as usize;
        while idx < slots {
            flags[idx] = false;
            idx += step;
        }
    }
    for (i, &keep) in flags.iter().enumerate() {
        let v = first + 2 * i as u64;
        if keep && v > 1 {
            emit(v);
        }
    }
}

fn segment_bounds(lo: u64, hi_exclusive: u64) -> Vec<(u64, u64)> {
    let span = 2 * SEGMENT_SLOTS;
    let mut out = Vec::new();
    let mut start = lo;
    while start < hi_exclusive {
        let end = start.saturating_add(span).min(hi_exclusive);
        out.push((start, end));
        start = end;
    }
    out
}

/// All primes `<= limit`, ascending.
pub(crate) fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let base = small_primes(limit.sqrt());
    let chunks: Vec<Vec<u64>> = segment_bounds(3, limit + 1)
        .into_par_iter()
        .map_init(Vec::new, |flags, (lo, hi)| {
            let mut found = Vec::new();
            sieve_odd_segment(lo, hi, &base, flags, |p| found.push(p));
            found
        })
        .collect();
    let total: usize = chunks.iter().map(Vec::len).sum();
    let mut primes = Vec::with_capacity(total + 1);
    primes.push(2);
    for c in chunks {
        primes.extend(c);
    }
    primes
}

/// Number of primes in the closed interval `[lo, hi]`, by direct segmented sieving.
///
/// Independent of the sublinear counter; used to spot-check it on subranges far
/// beyond any stored table.
pub fn count_primes_in_range(lo: u64, hi: u64) -> u64 {
    if hi < 2 || lo > hi {
        return 0;
    }
    let lo = lo.max(2);
    let base = small_primes(hi.sqrt());
    let two = u64::from(lo <= 2);
    let odd: u64 = segment_bounds(lo.max(3), hi + 1)
        .into_par_iter()
        .map_init(Vec::new, |flags, (a, b)| {
            let mut c = 0u64;
            sieve_odd_segment(a, b, &base, flags, |_| c += 1);
            c
        })
        .sum();
    two + odd
}
