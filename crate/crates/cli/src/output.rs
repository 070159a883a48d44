//! Rendering of command results as JSON, CSV or plain text.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use primorial_gap::suite::{ReportStatus, VerificationReport};
use primorial_gap::InequalitySpec;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

pub enum Document {
    List(Vec<InequalitySpec>),
    /// Reports, and whether they came from a full suite run.
    Reports(Vec<VerificationReport>, bool),
    Value(Value),
}

impl Document {
    pub fn value<T: Serialize>(v: &T) -> Self {
        Document::Value(serde_json::to_value(v).expect("plain data serializes"))
    }

    /// Names every failing index on stderr.
    pub fn describe_failures(&self) {
        if let Document::Reports(reports, suite) = self {
            for r in reports {
                let relevant = if *suite { r.asserted_failure() } else { !r.all_hold };
                if relevant {
                    eprintln!("{}: fails at n = {}", r.id, list(&r.failures, 50));
                }
            }
        }
    }
}

fn list(ns: &[u64], max: usize) -> String {
    let mut s = ns.iter().take(max).map(u64::to_string).collect::<Vec<_>>().join(", ");
    if ns.len() > max {
        s.push_str(&format!(", ... ({} in all)", ns.len()));
    }
    s
}

fn spec_json(s: &InequalitySpec) -> Value {
    json!({
        "id": s.id,
        "description": s.description,
        "claimed_from": s.claimed_from,
        "asserted": s.asserted,
        "defined_from": s.defined_from,
        "feasible_max": s.feasible_max,
        "constraint": s.constraint,
    })
}

fn report_json(r: &VerificationReport, per_n: bool) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if per_n {
        let rows = r
            .verdicts
            .iter()
            .map(|&(n, holds)| json!({ "n": n, "holds": holds }))
            .collect();
        v.as_object_mut()
            .expect("report is an object")
            .insert("per_n".into(), Value::Array(rows));
    }
    v
}

fn to_json(doc: &Document, per_n: bool) -> Value {
    match doc {
        Document::List(specs) => json!({ "specs": specs.iter().map(spec_json).collect::<Vec<_>>() }),
        Document::Reports(reports, false) => report_json(&reports[0], per_n),
        Document::Reports(reports, true) => {
            let ids = |f: &dyn Fn(&VerificationReport) -> bool| {
                reports
                    .iter()
                    .filter(|r| f(r))
                    .map(|r| r.id.clone())
                    .collect::<Vec<_>>()
            };
            json!({
                "reports": reports.iter().map(|r| report_json(r, per_n)).collect::<Vec<_>>(),
                "asserted_failures": ids(&|r| r.asserted_failure()),
                "skipped": ids(&|r| r.status == ReportStatus::Skipped),
            })
        }
        Document::Value(v) => v.clone(),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn status(s: ReportStatus) -> &'static str {
    match s {
        ReportStatus::Checked => "checked",
        ReportStatus::Vacuous => "vacuous",
        ReportStatus::Skipped => "skipped",
    }
}

/// Flattens nested objects into dotted keys.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn write_csv(doc: &Document, per_n: bool, w: &mut impl Write) -> io::Result<()> {
    match doc {
        Document::List(specs) => {
            writeln!(w, "id,claimed_from,asserted,defined_from,feasible_max")?;
            for s in specs {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    s.id,
                    opt(s.claimed_from),
                    s.asserted,
                    s.defined_from,
                    s.feasible_max
                )?;
            }
        }
        Document::Reports(reports, _) if per_n => {
            writeln!(w, "id,n,holds")?;
            for r in reports {
                for (n, holds) in &r.verdicts {
                    writeln!(w, "{},{n},{holds}", r.id)?;
                }
            }
        }
        Document::Reports(reports, _) => {
            writeln!(
                w,
                "id,lo,hi,status,all_hold,claimed_from,claim_holds,first_hold_onward,failures"
            )?;
            for r in reports {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{}",
                    r.id,
                    r.range.lo,
                    r.range.hi,
                    status(r.status),
                    r.all_hold,
                    opt(r.claimed_from),
                    opt(r.claim_holds),
                    opt(r.first_hold_onward),
                    r.failures.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
                )?;
            }
        }
        Document::Value(v) => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            writeln!(w, "key,value")?;
            for (k, x) in rows {
                writeln!(w, "{k},{x}")?;
            }
        }
    }
    Ok(())
}

fn write_human(doc: &Document, per_n: bool, w: &mut impl Write) -> io::Result<()> {
    match doc {
        Document::List(specs) => {
            for s in specs {
                let from = s
                    .claimed_from
                    .map_or("observed only".to_string(), |c| format!("n >= {c}"));
                writeln!(w, "{:<16} {:<14} {}", s.id, from, s.description)?;
            }
        }
        Document::Reports(reports, _) => {
            for r in reports {
                let verdict = match r.status {
                    ReportStatus::Skipped => "skipped".to_string(),
                    ReportStatus::Vacuous => "vacuous".to_string(),
                    ReportStatus::Checked if r.all_hold => "holds throughout".to_string(),
                    ReportStatus::Checked => format!("fails at n = {}", list(&r.failures, 20)),
                };
                write!(w, "{:<16} {:<14} {verdict}", r.id, r.range.to_string())?;
                if let (Some(c), Some(h)) = (r.claimed_from, r.claim_holds) {
                    write!(w, "; claim from n = {c} {}", if h { "holds" } else { "FAILS" })?;
                }
                writeln!(w)?;
                for c in &r.counts {
                    writeln!(w, "  n = {:<4} {} primes, need {}", c.n, c.count, c.required)?;
                }
                if per_n && r.counts.is_empty() {
                    for (n, holds) in &r.verdicts {
                        writeln!(w, "  n = {n:<8} {holds}")?;
                    }
                }
                if let Some(note) = &r.note {
                    writeln!(w, "  {note}")?;
                }
            }
        }
        Document::Value(v) => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            for (k, x) in rows {
                writeln!(w, "{k}: {x}")?;
            }
        }
    }
    Ok(())
}

pub fn emit(doc: &Document, format: Format, per_n: bool) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = io::BufWriter::new(stdout.lock());
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &to_json(doc, per_n))?;
            writeln!(w)?;
        }
        Format::Csv => write_csv(doc, per_n, &mut w)?,
        Format::Human => write_human(doc, per_n, &mut w)?,
    }
    w.flush()
}
