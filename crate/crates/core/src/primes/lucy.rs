//! Sublinear prime counting by the Legendre-sum dynamic program
//! (Lucy_Hedgehog's formulation of the Meissel recurrence).
//!
//! Let `S(v, p)` be the number of integers in `[2, v]` that are prime or have
//! no prime factor `<= p`. Only the `O(sqrt x)` distinct values `v = x / i`
//! are tracked. Sieving out each prime `p <= sqrt x` updates
//!
//! ```text
//! S(v, p) = S(v, p-1) - (S(v/p, p-1) - S(p-1, p-1))      for v >= p^2
//! ```
//!
//! and `pi(x) = S(x, sqrt x)`. Time is `O(x^{3/4} / log x)`, memory
//! `2 sqrt(x)` words.

use num_integer::Roots;

pub(crate) fn prime_pi(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    let r = x.sqrt() as usize;
    // small[v] = S(v) for v <= r, large[i] = S(x / i) for 1 <= i <= r.
    let mut small: Vec<u64> = (0..=r as u64).map(|v| v.saturating_sub(1)).collect();
    let mut large: Vec<u64> = (0..=r as u64).map(|i| x.checked_div(i).map_or(0, |q| q - 1)).collect();

    for p in 2..=r {
        if small[p] == small[p - 1] {
            continue;
        }
        let below = small[p - 1];
        let pp = (p as u64) * (p as u64);
        let i_max = (x / pp).min(r as u64) as usize;
        for i in 1..=i_max {
            let d = i * p;
            let s = if d <= r {
                large[d]
            } else {
                small[(x / d as u64) as usize]
            };
            large[i] -= s - below;
        }
        if pp as usize <= r {
            for v in (pp as usize..=r).rev() {
                small[v] -= small[v / p] - below;
            }
        }
    }
    large[1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_by_hand() {
        let expect = [
            (0, 0),
            (1, 0),
            (2, 1),
            (3, 2),
            (4, 2),
            (10, 4),
            (30, 10),
            (100, 25),
            (1000, 168),
        ];
        for (x, pi) in expect {
            assert_eq!(prime_pi(x), pi, "pi({x})");
        }
    }

    #[test]
    fn perfect_squares_and_neighbours() {
        let primes = super::super::sieve::primes_up_to(20_000);
        for q in [4u64, 9, 25, 49, 121, 169, 289, 361, 529, 961, 10_201, 19_321] {
            for x in [q - 1, q, q + 1] {
                let want = primes.partition_point(|&p| p <= x) as u64;
                assert_eq!(prime_pi(x), want, "pi({x})");
            }
        }
    }
}
