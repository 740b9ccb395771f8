//! Suite results: a text table for people and JSON for machines.

use serde::{Deserialize, Serialize};

use super::{Counterexample, TheoremCheck, Track};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem_id: String,
    pub title: String,
    pub track: Track,
    pub substantive: Track,
    pub considered: usize,
    pub applicable: usize,
    pub not_applicable: usize,
    pub passed: usize,
    pub finite_applicable: usize,
    pub monomial_applicable: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl CheckReport {
    pub(super) fn empty(c: &TheoremCheck) -> CheckReport {
        CheckReport {
            theorem_id: c.id.into(),
            title: c.title.into(),
            track: c.track,
            substantive: c.substantive,
            considered: 0,
            applicable: 0,
            not_applicable: 0,
            passed: 0,
            finite_applicable: 0,
            monomial_applicable: 0,
            counterexamples: Vec::new(),
            note: c.note.map(str::to_string),
            wall_time_ms: None,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub instances: usize,
    pub reports: Vec<CheckReport>,
}

/// The machine-readable document, with the run parameters on top.
#[derive(Serialize)]
struct Machine {
    seed: u64,
    max_order: usize,
    instances: usize,
    reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn counterexample_count(&self) -> usize {
        self.reports.iter().map(|r| r.counterexamples.len()).sum()
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.theorem_id == id)
    }

    /// Wall times are left out unless asked for, so that output is byte-stable.
    pub fn to_json(&self, seed: u64, max_order: usize, timings: bool) -> String {
        let reports = self
            .reports
            .iter()
            .cloned()
            .map(|mut r| {
                if !timings {
                    r.wall_time_ms = None;
                }
                r
            })
            .collect();
        let m = Machine {
            seed,
            max_order,
            instances: self.instances,
            reports,
        };
        serde_json::to_string_pretty(&m).expect("report serializes")
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} instances\n", self.instances));
        out.push_str(&format!(
            "{:<18} {:<9} {:>9} {:>9} {:>8} {:>7} {:>6}{}\n",
            "check",
            "track",
            "cases",
            "applic.",
            "passed",
            "n/a",
            "fail",
            if timings { "      ms" } else { "" }
        ));
        for r in &self.reports {
            let track = match r.substantive {
                Track::Finite => "finite",
                Track::Monomial => "monomial",
                Track::Both => "both",
            };
            out.push_str(&format!(
                "{:<18} {:<9} {:>9} {:>9} {:>8} {:>7} {:>6}",
                r.theorem_id,
                track,
                r.considered,
                r.applicable,
                r.passed,
                r.not_applicable,
                r.counterexamples.len()
            ));
            if timings {
                out.push_str(&format!(" {:>8.1}", r.wall_time_ms.unwrap_or(0.0)));
            }
            out.push('\n');
        }
        let bad: Vec<&CheckReport> = self.reports.iter().filter(|r| !r.is_clean()).collect();
        if bad.is_empty() {
            out.push_str("no counterexamples\n");
        } else {
            out.push_str(
                "\nA counterexample to a proved statement means the engine computed something wrong;\n\
                 use `verify --explain ID[:INDEX]` to see one in full.\n",
            );
            for r in bad {
                let first = &r.counterexamples[0];
                out.push_str(&format!(
                    "  {}: {} counterexample(s); first on {}: {}\n",
                    r.theorem_id,
                    r.counterexamples.len(),
                    first.provenance.recipe,
                    first.clause
                ));
                if let Some(n) = &r.note {
                    out.push_str(&format!("    note: {n}\n"));
                }
            }
        }
        out
    }
}
