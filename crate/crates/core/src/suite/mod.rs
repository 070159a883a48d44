//! Range scans over the registered inequalities.
//!
//! A scan first grows the shared prime table and the prefix logs to what the
//! whole range needs, then evaluates every index in parallel against that
//! read-only snapshot. Verdicts are exact: integer comparisons fall back to
//! big-integer arithmetic when certified logs overlap, and real-valued
//! comparisons that cannot be separated raise a precision error instead of
//! guessing.

mod eval;
mod registry;
mod report;

use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use eval::{Evaluator, ScanCtx};
pub use registry::{
    registry, theorem_max_n, InequalitySpec, PRIME_SCAN_MAX, PRIMORIAL_SCAN_MAX, THEOREM_ALPHA_DEFAULT,
};
pub use report::{CountRow, EngineCounters, NRange, ReportStatus, VerificationReport};

use crate::bounds::{solve_x0, Alpha, RootTarget, DEFAULT_TOL};
use crate::error::{domain, resource, Error, Result};

pub fn find_spec<'a>(specs: &'a [InequalitySpec], id: &str) -> Result<&'a InequalitySpec> {
    specs.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownSpec {
        id: id.to_string(),
        valid: specs.iter().map(|s| s.id.as_str()).collect::<Vec<_>>().join(", "),
    })
}

fn check_range(spec: &InequalitySpec, range: NRange) -> Result<()> {
    if range.lo < spec.defined_from {
        return domain(format!(
            "{} is defined from n = {}, range starts at {}",
            spec.id, spec.defined_from, range.lo
        ));
    }
    if range.hi > spec.feasible_max {
        return resource(format!(
            "{} is checkable up to n = {} ({}), range ends at {}",
            spec.id, spec.feasible_max, spec.constraint, range.hi
        ));
    }
    Ok(())
}

enum Stop {
    Failed(Error),
    Deadline,
}

/// Scans `spec` over `range`. `deadline` turns an overrun into a `Skipped` report.
pub fn verify_spec(
    eval: &Evaluator,
    spec: &InequalitySpec,
    range: NRange,
    deadline: Option<Instant>,
) -> Result<VerificationReport> {
    check_range(spec, range)?;
    let started = Instant::now();
    let (prime_index, primorial_index) = (spec.needs)(eval.engine(), range.hi)?;
    let table = eval.prepare(prime_index, primorial_index)?;
    let ctx = ScanCtx::new(eval, table);

    let outcome: std::result::Result<Vec<(u64, bool)>, Stop> = (range.lo..=range.hi)
        .into_par_iter()
        .map(|n| {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Stop::Deadline);
            }
            spec.eval(&ctx, n).map(|ok| (n, ok)).map_err(Stop::Failed)
        })
        .collect();

    let mut report = match outcome {
        Ok(verdicts) => VerificationReport::from_verdicts(&spec.id, range, verdicts),
        Err(Stop::Failed(e)) => return Err(e),
        Err(Stop::Deadline) => VerificationReport::empty(
            &spec.id,
            range,
            ReportStatus::Skipped,
            "wall-clock budget exhausted before the scan finished".into(),
        ),
    };
    report = report.with_claim(spec.claimed_from, spec.asserted);
    report.engine = EngineCounters {
        pi_fast_calls: ctx.pi_fast_calls.load(Ordering::Relaxed),
        exact_fallbacks: ctx.exact_fallbacks.load(Ordering::Relaxed),
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Scans the registered inequality `id` over `range`.
pub fn verify(eval: &Evaluator, id: &str, range: NRange) -> Result<VerificationReport> {
    let specs = registry();
    verify_spec(eval, find_spec(&specs, id)?, range, None)
}

/// Every registered inequality over `[defined_from, feasible_max]`, sharing
/// one wall-clock budget. Specs reached after the budget is spent are
/// reported as skipped.
pub fn run_suite(eval: &Evaluator, budget: Duration) -> Result<Vec<VerificationReport>> {
    let deadline = Instant::now() + budget;
    registry()
        .iter()
        .map(|spec| {
            let range = NRange::new(spec.defined_from, spec.feasible_max)?;
            verify_spec(eval, spec, range, Some(deadline))
        })
        .collect()
}

fn theorem_ctx(eval: &Evaluator, n_max: u64) -> Result<ScanCtx<'_>> {
    let cap = theorem_max_n(eval.engine());
    if n_max > cap {
        return resource(format!(
            "n_max = {n_max}: counting primes below p_1...p_{{n+1}} is limited to n <= {cap} by the pi_fast ceiling {}",
            eval.engine().config().fast_ceiling
        ));
    }
    let table = eval.prepare(n_max + 1, 0)?;
    Ok(ScanCtx::new(eval, table))
}

fn theorem_report(
    id: &str,
    range: NRange,
    ctx: &ScanCtx<'_>,
    rows: Vec<CountRow>,
    started: Instant,
) -> VerificationReport {
    let verdicts = rows.iter().map(|r| (r.n, r.count >= r.required)).collect();
    let mut report = VerificationReport::from_verdicts(id, range, verdicts).with_claim(Some(range.lo), true);
    report.counts = rows;
    report.engine = EngineCounters {
        pi_fast_calls: ctx.pi_fast_calls.load(Ordering::Relaxed),
        exact_fallbacks: ctx.exact_fallbacks.load(Ordering::Relaxed),
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// For `n = 1..=n_max`, counts primes strictly between `p_{n+1}` and
/// `p_1...p_{n+1}` and checks the count is at least `n`.
pub fn verify_theorem_linear(eval: &Evaluator, n_max: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let range = NRange::new(1, n_max)?;
    let ctx = theorem_ctx(eval, n_max)?;
    let rows = (1..=n_max)
        .map(|n| {
            Ok(CountRow {
                n,
                count: registry::primes_between(&ctx, n)?,
                required: n,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(theorem_report("theorem_linear", range, &ctx, rows, started))
}

/// For every integer `n` with `x0(alpha) < n <= n_max`, checks that at least
/// `[n^alpha]` primes lie strictly between `p_{n+1}` and `p_1...p_{n+1}`.
/// `x0` is the root of `x^{alpha-1} - pi x / (e^2 sqrt 3) + 1`; only
/// indices beyond the upper end of its bracket are checked.
pub fn verify_theorem_alpha(eval: &Evaluator, alpha: &Alpha, n_max: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    if alpha.is_two() {
        return domain("the alpha statement needs 1 < alpha < 2");
    }
    let profile = solve_x0(alpha.value(), RootTarget::Theorem, DEFAULT_TOL)?;
    let start = profile.threshold();
    let note = format!(
        "alpha = {alpha}, x0 = {:.9} (bracket [{:.12}, {:.12}]), checked n >= {start}",
        profile.x0, profile.bracket.0, profile.bracket.1
    );
    if start > n_max {
        let range = NRange { lo: start, hi: n_max };
        let mut report = VerificationReport::empty(
            "theorem_alpha",
            range,
            ReportStatus::Vacuous,
            format!("{note}; no n in range exceeds x0, nothing to check"),
        );
        report.elapsed_ms = started.elapsed().as_millis() as u64;
        return Ok(report);
    }
    let ctx = theorem_ctx(eval, n_max)?;
    let range = NRange::new(start, n_max)?;
    let rows = (start..=n_max)
        .map(|n| {
            Ok(CountRow {
                n,
                count: registry::primes_between(&ctx, n)?,
                required: alpha.floor_pow(n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = theorem_report("theorem_alpha", range, &ctx, rows, started);
    report.note = Some(note);
    Ok(report)
}
