//! Every registered inequality against a naive reimplementation: trial
//! division for the primes, schoolbook big integers for the products, plain
//! `f64` for the real-valued statements.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use primorial_gap::suite::{registry, verify, Evaluator, NRange};
use primorial_gap::{EngineConfig, PrimeEngine};

struct Naive {
    p: Vec<u64>,
}

impl Naive {
    fn new(count: usize) -> Self {
        let mut p = vec![0];
        let mut x = 2u64;
        while p.len() <= count {
            if (2..).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d)) {
                p.push(x);
            }
            x += 1;
        }
        Naive { p }
    }

    fn p(&self, n: u64) -> u64 {
        self.p[n as usize]
    }

    fn pi(&self, x: u64) -> u64 {
        self.p[1..].iter().take_while(|&&q| q <= x).count() as u64
    }

    fn primorial(&self, n: u64) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, i| acc * self.p(i))
    }

    fn pow_below(&self, base: u64, exp: u64, n: u64) -> bool {
        BigUint::from(base).pow(exp as u32) < self.primorial(n)
    }

    fn ln_primorial(&self, n: u64) -> f64 {
        (1..=n).map(|i| (self.p(i) as f64).ln()).sum()
    }

    fn binomial(n: u64, k: u64) -> BigUint {
        let num = (n - k + 1..=n).fold(BigUint::one(), |a, i| a * i);
        let den = (1..=k).fold(BigUint::one(), |a, i| a * i);
        num / den
    }

    /// Primes strictly between `p_{n+1}` and `p_1...p_{n+1}`, by sieving.
    fn primes_between(&self, n: u64) -> u64 {
        let top = (1..=n + 1).map(|i| self.p(i)).product::<u64>() as usize;
        let mut comp = vec![false; top];
        let mut count = 0;
        for i in 2..top {
            if !comp[i] {
                if i as u64 > self.p(n + 1) {
                    count += 1;
                }
                for j in (i * i..top).step_by(i) {
                    comp[j] = true;
                }
            }
        }
        count
    }

    /// `None` when the statement is real-valued and too close to call in `f64`.
    fn holds(&self, id: &str, n: u64) -> Option<bool> {
        let nf = n as f64;
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs());
        let real = |a: f64, b: f64| if close(a, b) { None } else { Some(a < b) };
        Some(match id {
            "bonse2" => self.pow_below(self.p(n + 1), 2, n),
            "bonse3" => self.pow_below(self.p(n + 1), 3, n),
            "dalezman" => BigUint::from(self.p(n + 1) * self.p(n + 2)) < self.primorial(n),
            s if s.starts_with("posa_") => self.pow_below(self.p(n + 1), s[5..].parse().unwrap(), n),
            s if s.starts_with("reich_") => {
                let k: u64 = s[6..].parse().unwrap();
                self.pow_below(self.p(n + k), 2, n)
            }
            "panaitopol_form" => self.pow_below(self.p(n + 1), n / 2, n),
            "mamangakis" => BigUint::from(self.p(4 * n)) < self.primorial(n),
            "mamangakis4" => self.pow_below(self.p(4 * n), 4, 4 * n - 9),
            "gupta_khare" => Self::binomial(n * n, n) < self.primorial(n),
            "robin" => self.pow_below(n, n, n),
            "panaitopol" => self.pow_below(self.p(n + 1), n - self.pi(n), n),
            "hassani" => {
                let e = (1.0 - 1.0 / nf.ln()) * (n - self.pi(n)) as f64;
                return real(e * (self.p(n + 1) as f64).ln(), self.ln_primorial(n));
            }
            "zhang" => self.pow_below(2, self.p(n + 1), n),
            "sandor_sum" => {
                let pn = self.p(n);
                self.primorial(n - 1) + pn + self.p(pn - 2) <= self.primorial(n)
            }
            "sandor_sq" => {
                let (a, b) = (self.p(n + 5), self.p(n / 2));
                BigUint::from(a * a + b * b) < self.primorial(n)
            }
            "remark_pn2" => self.p(n * n) < self.p(n) * self.p(n),
            "remark_2pn2" => {
                let lhs = 2.0 * (self.p(n) as f64).powi(2);
                return real(self.p(n * n) as f64 * nf.ln(), lhs);
            }
            "rosser_lower" => return real(nf * nf.ln(), self.p(n) as f64),
            "rosser_window" => {
                let w = nf.ln() + nf.ln().ln();
                let q = self.p(n) as f64 / nf;
                return Some(real(w - 1.5, q)? && real(q, w - 0.5)?);
            }
            "pn_logn_mono" => {
                return real(self.p(n) as f64 / nf.ln(), self.p(n + 1) as f64 / (nf + 1.0).ln());
            }
            "euler_totient" => {
                let phi = (1..=n).fold(BigUint::one(), |a, i| a * (self.p(i) - 1));
                phi >= BigUint::from(2u32).pow((n - 1) as u32)
            }
            "theorem_linear" => self.primes_between(n) >= n,
            "theorem_alpha" => {
                // [n^1.1] for n <= 5 by direct search.
                let floor = (1..)
                    .take_while(|&c: &u64| (c as f64).powi(10) <= (n as f64).powi(11))
                    .last()
                    .unwrap();
                self.primes_between(n) >= floor
            }
            other => panic!("no naive oracle for {other}"),
        })
    }
}

#[test]
fn every_spec_matches_its_naive_oracle() {
    let naive = Naive::new(3000);
    let eval = Evaluator::new(Arc::new(PrimeEngine::new(EngineConfig::default())));
    let mut undecided = 0;
    for spec in registry() {
        let hi = match spec.id.as_str() {
            "theorem_linear" | "theorem_alpha" => 5,
            _ => 50,
        };
        let range = NRange::new(spec.defined_from, hi.min(spec.feasible_max)).unwrap();
        let report = verify(&eval, &spec.id, range).unwrap();
        assert_eq!(report.verdicts.len() as u64, range.len(), "{}", spec.id);
        for &(n, got) in &report.verdicts {
            match naive.holds(&spec.id, n) {
                Some(want) => assert_eq!(got, want, "{} at n = {n}", spec.id),
                None => undecided += 1,
            }
        }
    }
    assert!(undecided <= 2, "{undecided} indices too close for the f64 oracle");
}

#[test]
fn floor_of_n_to_the_1_1_by_search() {
    // The search above must agree with the exact floor at the small indices.
    let alpha: primorial_gap::Alpha = "1.1".parse().unwrap();
    for n in 1..=12u64 {
        let floor = (1..)
            .take_while(|&c: &u64| (c as f64).powi(10) <= (n as f64).powi(11))
            .last()
            .unwrap();
        assert_eq!(alpha.floor_pow(n).unwrap(), floor, "n = {n}");
    }
}
