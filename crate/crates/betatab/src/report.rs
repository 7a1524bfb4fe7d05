//! Report aggregation and the JSON-lines and text renderings.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::Serialize;

use crate::verify::{summarize_entries, Status, VerificationOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub outcomes: usize,
    pub passes: usize,
    pub failures: usize,
    /// Largest relative error among outcomes judged by their relative
    /// tolerance; outcomes decided by the absolute floor are left out.
    pub worst_rel_err: Option<f64>,
    /// `None` unless timings were requested.
    pub wall_ms: Option<f64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub outcomes: Vec<VerificationOutcome>,
    pub summary: Summary,
}

impl Report {
    pub fn new(mut outcomes: Vec<VerificationOutcome>, wall_ms: Option<f64>) -> Self {
        crate::verify::sort_outcomes(&mut outcomes);
        let entries = summarize_entries(&outcomes);
        let passes = outcomes.iter().filter(|o| o.status == Status::Pass).count();
        let worst_rel_err = entries
            .iter()
            .filter_map(|e| e.worst_rel_err)
            .fold(None, |w: Option<f64>, r| Some(w.map_or(r, |w| w.max(r))));
        let summary = Summary {
            entries: entries.len(),
            outcomes: outcomes.len(),
            passes,
            failures: outcomes.len() - passes,
            worst_rel_err,
            wall_ms,
            verdict: if passes == outcomes.len() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        };
        Self { outcomes, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.verdict == Verdict::Pass
    }

    /// One outcome per line, then the summary object.
    pub fn write_json_lines<W: Write>(&self, mut w: W) -> io::Result<()> {
        for o in &self.outcomes {
            serde_json::to_writer(&mut w, o)?;
            w.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut w, &self.summary)?;
        w.write_all(b"\n")
    }

    /// Fixed-width table with one row per entry.
    pub fn to_text(&self) -> String {
        let rows = summarize_entries(&self.outcomes);
        let width = rows
            .iter()
            .map(|r| r.entry_id.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<width$}  {:>7}  {:>7}  {:>12}  {:>11}  result",
            "entry", "samples", "passed", "worst_rel", "evaluations"
        );
        for r in &rows {
            let worst = r
                .worst_rel_err
                .map_or("-".to_string(), |x| format!("{x:.3e}"));
            let result = if r.passes == r.outcomes { "ok" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{:<width$}  {:>7}  {:>7}  {:>12}  {:>11}  {}",
                r.entry_id, r.outcomes, r.passes, worst, r.evaluations, result
            );
        }
        let m = &self.summary;
        let worst = m
            .worst_rel_err
            .map_or("-".to_string(), |x| format!("{x:.3e}"));
        let _ = write!(
            s,
            "{} entries, {} outcomes, {} passed, {} failed, worst rel_err {}",
            m.entries, m.outcomes, m.passes, m.failures, worst
        );
        if let Some(ms) = m.wall_ms {
            let _ = write!(s, ", {ms:.0} ms");
        }
        let _ = writeln!(s, ": {}", if self.passed() { "PASS" } else { "FAIL" });
        for o in self.outcomes.iter().filter(|o| o.status != Status::Pass) {
            let _ = writeln!(
                s,
                "  {} #{}: {:?} numeric {:?} closed {:?}",
                o.entry_id, o.sample_index, o.status, o.numeric, o.closed
            );
        }
        s
    }
}
