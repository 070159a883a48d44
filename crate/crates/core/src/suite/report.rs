use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Inclusive range of indices, written `lo..hi`. Serializes as `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

impl NRange {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return domain(format!("empty range {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| Error::Domain(format!("range must look like lo..hi, got {s:?}")))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Domain(format!("bad range bound {t:?}")))
        };
        Self::new(parse(lo)?, parse(hi)?)
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for NRange {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineCounters {
    pub pi_fast_calls: u64,
    pub exact_fallbacks: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    /// Every index in the range was evaluated.
    Checked,
    /// The range holds no index the statement speaks about.
    Vacuous,
    /// The wall-clock budget ran out before the scan finished.
    Skipped,
}

/// Exact prime count for one `n` of a theorem scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u64,
    /// Primes strictly between `p_{n+1}` and `p_1 ... p_{n+1}`.
    pub count: u64,
    pub required: u64,
}

/// Outcome of scanning one inequality over a range.
///
/// For `Checked` reports `all_hold` is true exactly when `failures` is empty.
/// `Skipped` reports carry no verdict and set `all_hold` to false.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub range: NRange,
    pub all_hold: bool,
    pub failures: Vec<u64>,
    /// Least `m` in the range such that the predicate holds on `[m, hi]`.
    pub first_hold_onward: Option<u64>,
    pub elapsed_ms: u64,
    pub engine: EngineCounters,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed_from: Option<u64>,
    /// Whether the statement holds on `[claimed_from, hi]` within the range.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim_holds: Option<bool>,
    /// Whether `claim_holds` counts toward the exit status.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counts: Vec<CountRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Per-index verdicts, in ascending order.
    #[serde(skip)]
    pub verdicts: Vec<(u64, bool)>,
}

impl VerificationReport {
    pub(crate) fn from_verdicts(id: &str, range: NRange, verdicts: Vec<(u64, bool)>) -> Self {
        let failures: Vec<u64> = verdicts.iter().filter(|(_, ok)| !ok).map(|&(n, _)| n).collect();
        let first_hold_onward = match failures.last() {
            None => Some(range.lo),
            Some(&last) if last < range.hi => Some(last + 1),
            Some(_) => None,
        };
        Self {
            id: id.to_string(),
            range,
            all_hold: failures.is_empty(),
            failures,
            first_hold_onward,
            elapsed_ms: 0,
            engine: EngineCounters::default(),
            status: ReportStatus::Checked,
            claimed_from: None,
            claim_holds: None,
            asserted: false,
            counts: Vec::new(),
            note: None,
            verdicts,
        }
    }

    pub(crate) fn empty(id: &str, range: NRange, status: ReportStatus, note: String) -> Self {
        Self {
            all_hold: status == ReportStatus::Vacuous,
            first_hold_onward: None,
            status,
            note: Some(note),
            ..Self::from_verdicts(id, range, Vec::new())
        }
    }

    pub(crate) fn with_claim(mut self, claimed_from: Option<u64>, asserted: bool) -> Self {
        self.claimed_from = claimed_from;
        self.asserted = asserted && claimed_from.is_some();
        if self.status == ReportStatus::Checked {
            let hi = self.range.hi;
            self.claim_holds = claimed_from
                .filter(|&c| c <= hi)
                .map(|c| !self.failures.iter().any(|&n| n >= c));
        }
        self
    }

    /// True when the report contains a failed asserted claim.
    pub fn asserted_failure(&self) -> bool {
        self.asserted && self.claim_holds == Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hold_onward_cases() {
        let r = NRange::new(1, 5).unwrap();
        let all = |bad: &[u64]| (1..=5).map(|n| (n, !bad.contains(&n))).collect::<Vec<_>>();
        let rep = VerificationReport::from_verdicts("x", r, all(&[]));
        assert_eq!((rep.all_hold, rep.first_hold_onward), (true, Some(1)));
        let rep = VerificationReport::from_verdicts("x", r, all(&[1, 3]));
        assert_eq!(
            (rep.all_hold, rep.first_hold_onward, rep.failures.clone()),
            (false, Some(4), vec![1, 3])
        );
        let rep = VerificationReport::from_verdicts("x", r, all(&[5]));
        assert_eq!(rep.first_hold_onward, None);
        assert_eq!(rep.clone().with_claim(Some(6), true).claim_holds, None);
        let rep = rep.with_claim(Some(5), true);
        assert_eq!(rep.claim_holds, Some(false));
        assert!(rep.asserted_failure());
    }

    #[test]
    fn range_syntax() {
        assert_eq!("4..1000".parse::<NRange>().unwrap(), NRange { lo: 4, hi: 1000 });
        assert_eq!("4..=10".parse::<NRange>().unwrap(), NRange { lo: 4, hi: 10 });
        assert!("10..4".parse::<NRange>().is_err());
        assert!("10".parse::<NRange>().is_err());
        assert!("a..4".parse::<NRange>().is_err());
        assert_eq!(serde_json::to_string(&NRange { lo: 4, hi: 9 }).unwrap(), "[4,9]");
    }
}
