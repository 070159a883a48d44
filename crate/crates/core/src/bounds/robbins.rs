//! The Stirling remainder `gamma_n` in `n! = sqrt(2 pi n) (n/e)^n e^{gamma_n}`.

use serde::Serialize;

use crate::arith::EPS;
use crate::error::{domain, Result};

pub const ROBBINS_MAX_N: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RobbinsTerm {
    pub n: u64,
    pub gamma_n: f64,
    /// Rigorous bound on `|gamma_n - true value|`.
    pub err: f64,
    /// `1 / (12n + 1)`.
    pub lower: f64,
    /// `1 / (12n)`.
    pub upper: f64,
}

impl RobbinsTerm {
    /// True when `lower < gamma_n < upper` holds for the whole error interval,
    /// with the rounding of `lower` and `upper` themselves accounted for.
    pub fn certified_within(&self) -> bool {
        let lower = (self.lower * (1.0 + EPS)).next_up();
        let upper = (self.upper * (1.0 - EPS)).next_down();
        (self.gamma_n - self.err).next_down() > lower && (self.gamma_n + self.err).next_up() < upper
    }

    /// Distance from `gamma_n` to the nearer bound.
    pub fn margin(&self) -> f64 {
        (self.gamma_n - self.lower).min(self.upper - self.gamma_n)
    }
}

/// Neumaier's compensated sum.
#[derive(Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `gamma_1 = 1 - ln(2 pi) / 2` and `gamma_2 = 2 - ln 2 - ln(4 pi) / 2`, each as
/// an unevaluated sum `hi + lo` accurate to about `1e-33`.
const GAMMA_1: (f64, f64) = (0.08106146679532726, -2.8504218427709546e-18);
const GAMMA_2: (f64, f64) = (0.0413406959554093, -2.941654530929307e-18);

/// `gamma_{k+1} - gamma_k = 1 - (k + 1/2) ln(1 + 1/k)` for `k >= 2`, with a
/// bound on its absolute error.
///
/// Evaluating the closed form cancels a product near 1 against 1 and leaves
/// an absolute error of a few `EPS` per step, more than the distance from
/// `gamma_n` to `1/(12n)` once `n` passes about a thousand. The series
/// `-sum_{m>=2} (-1)^m (m-1) / (2m(m+1)) x^m` in `x = 1/k` keeps the
/// error relative to the step instead. Its terms shrink in magnitude, so the
/// tail is below the first omitted term.
fn step(k: u64) -> (f64, f64) {
    let x = 1.0 / k as f64;
    let mut pow = x * x;
    let (mut sum, mut abs_sum, mut err) = (0.0f64, 0.0f64, 0.0f64);
    let mut m = 2u64;
    loop {
        let mf = m as f64;
        // x^m carries m roundings of x and m - 1 products; the coefficient two more.
        let t = pow * (mf - 1.0) / (2.0 * mf * (mf + 1.0));
        if m > 2 && t <= EPS * EPS * abs_sum {
            err += t;
            break;
        }
        sum += if m.is_multiple_of(2) { -t } else { t };
        abs_sum += t;
        err += (2.0 * mf + 2.0) * EPS * t;
        pow *= x;
        m += 1;
    }
    // Recursive summation of m - 2 terms.
    (sum, err + (m as f64) * EPS * abs_sum)
}

/// `gamma_n`, the remainder in `ln n! = ln sqrt(2 pi n) + n ln n - n + gamma_n`,
/// telescoped from `gamma_2` with a compensated sum.
pub fn robbins_gamma(n: u64) -> Result<RobbinsTerm> {
    if n == 0 {
        return domain("robbins_gamma needs n >= 1");
    }
    if n > ROBBINS_MAX_N {
        return domain(format!("robbins_gamma is certified for n <= {ROBBINS_MAX_N}"));
    }
    let (gamma_n, err) = if n == 1 {
        (GAMMA_1.0 + GAMMA_1.1, EPS * GAMMA_1.0.abs())
    } else {
        let mut acc = CompensatedSum::default();
        acc.add(GAMMA_2.0);
        acc.add(GAMMA_2.1);
        let (mut step_err, mut abs_total) = (EPS * EPS, GAMMA_2.0);
        for k in 2..n {
            let (s, e) = step(k);
            acc.add(s);
            step_err += e;
            abs_total += s.abs();
        }
        let g = acc.value();
        // Neumaier: 2 EPS |sum| plus a second-order term in the count.
        let sum_err = 2.0 * EPS * g.abs() + 4.0 * (n as f64) * EPS * EPS * abs_total;
        (g, step_err + sum_err)
    };
    let nf = n as f64;
    Ok(RobbinsTerm {
        n,
        gamma_n,
        // Headroom for rounding in the bound itself.
        err: err * (1.0 + 1e-6),
        lower: 1.0 / (12.0 * nf + 1.0),
        upper: 1.0 / (12.0 * nf),
    })
}
