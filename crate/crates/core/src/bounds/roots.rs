//! The threshold function and its positive root `x0(alpha)`.
//!
//! Two variants are carried side by side:
//!
//! * `f(x) = e^2 sqrt(3) x^{alpha-1} - pi x + 1`
//! * `g(x) = x^{alpha-1} - pi x / (e^2 sqrt(3)) + 1`
//!
//! `g` is not `f / (e^2 sqrt 3)`: the constant terms differ. Both are
//! concave on `(0, inf)` with the same stationary point `x1`, are positive
//! there, and tend to `-inf`, so each has exactly one root right of `x1`.

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// `e^2 sqrt(3)`.
pub fn e2_sqrt3() -> f64 {
    (2.0f64).exp() * 3f64.sqrt()
}

/// Which function's root to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootTarget {
    /// `f(x) = e^2 sqrt(3) x^{alpha-1} - pi x + 1`.
    Lemma3,
    /// `g(x) = x^{alpha-1} - pi x / (e^2 sqrt 3) + 1`.
    Theorem,
}

fn check_open_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return domain(format!("alpha must lie in (1, 2), got {alpha}"));
    }
    Ok(())
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("x must be positive and finite, got {x}"));
    }
    Ok(())
}

pub fn eval_f(x: f64, alpha: f64) -> Result<f64> {
    check_open_alpha(alpha)?;
    check_x(x)?;
    Ok(e2_sqrt3() * x.powf(alpha - 1.0) - std::f64::consts::PI * x + 1.0)
}

pub fn eval_g(x: f64, alpha: f64) -> Result<f64> {
    check_open_alpha(alpha)?;
    check_x(x)?;
    Ok(x.powf(alpha - 1.0) - std::f64::consts::PI / e2_sqrt3() * x + 1.0)
}

fn derivative(which: RootTarget, x: f64, alpha: f64) -> f64 {
    let slope = (alpha - 1.0) * x.powf(alpha - 2.0);
    match which {
        RootTarget::Lemma3 => e2_sqrt3() * slope - std::f64::consts::PI,
        RootTarget::Theorem => slope - std::f64::consts::PI / e2_sqrt3(),
    }
}

fn eval(which: RootTarget, x: f64, alpha: f64) -> Result<f64> {
    match which {
        RootTarget::Lemma3 => eval_f(x, alpha),
        RootTarget::Theorem => eval_g(x, alpha),
    }
}

/// The unique stationary point `(e^2 sqrt(3) (alpha - 1) / pi)^{1/(2 - alpha)}`
/// shared by `f` and `g`.
pub fn x1_closed_form(alpha: f64) -> Result<f64> {
    check_open_alpha(alpha)?;
    Ok((e2_sqrt3() * (alpha - 1.0) / std::f64::consts::PI).powf(1.0 / (2.0 - alpha)))
}

pub const DEFAULT_TOL: f64 = 1e-9;
const DOUBLING_LIMIT: f64 = 1e300;

/// `alpha` together with the stationary point and a bracketed root.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AlphaProfile {
    pub alpha: f64,
    pub which: RootTarget,
    pub x1: f64,
    /// Midpoint of the final bracket.
    pub x0: f64,
    /// `(lo, hi)` with the function positive at `lo` and negative at `hi`.
    pub bracket: (f64, f64),
    pub tol: f64,
    /// `|function(x0)|`.
    pub residual: f64,
    /// `|function'(hi)|`, a Lipschitz constant for the function on the bracket.
    pub lipschitz: f64,
}

impl AlphaProfile {
    /// Least integer certainly beyond the root: one past the floor of the
    /// upper bracket end.
    pub fn threshold(&self) -> u64 {
        self.bracket.1.floor() as u64 + 1
    }

    pub fn bracket_width(&self) -> f64 {
        self.bracket.1 - self.bracket.0
    }
}

/// Bisection on `[x1, X]`, where `X` doubles from `2 x1` until the chosen
/// function turns negative. Stops once the bracket is at most `tol` wide or
/// can no longer be split in double precision.
pub fn solve_x0(alpha: f64, which: RootTarget, tol: f64) -> Result<AlphaProfile> {
    check_open_alpha(alpha)?;
    if tol.is_nan() || tol <= 0.0 {
        return domain(format!("tolerance must be positive, got {tol}"));
    }
    let x1 = x1_closed_form(alpha)?;
    let at_x1 = eval(which, x1, alpha)?;
    if at_x1 <= 0.0 {
        return Err(Error::NoRoot(format!(
            "function is not positive at x1 = {x1} for alpha = {alpha}"
        )));
    }
    let mut lo = x1;
    let mut hi = 2.0 * x1;
    while eval(which, hi, alpha)? >= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > DOUBLING_LIMIT {
            return Err(Error::NoRoot(format!(
                "no sign change below {DOUBLING_LIMIT:e} for alpha = {alpha}"
            )));
        }
    }
    while hi - lo > tol {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if eval(which, mid, alpha)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x0 = lo + (hi - lo) / 2.0;
    Ok(AlphaProfile {
        alpha,
        which,
        x1,
        x0,
        bracket: (lo, hi),
        tol,
        residual: eval(which, x0, alpha)?.abs(),
        lipschitz: derivative(which, hi, alpha).abs(),
    })
}
