//! Executable versions of the structural statements, swept over a corpus.
//!
//! Each check enumerates *cases* on an instance (a multiplicative set, an
//! ideal, a prime, ...). A case whose hypothesis fails is counted as not
//! applicable and never as passed. A failed conclusion on a statement that
//! is a theorem means the engine is wrong, and the report says so.

pub mod checks;
pub mod corpus;
mod finite;
mod mono;
pub mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::RingAnalysis;
use crate::monomial::comm::min_primes_monomial;
pub use checks::{registry, TheoremCheck, IN_SCOPE};
pub use corpus::{build_corpus, CorpusConfig, Fault, Instance, InstanceKind, Provenance};
pub use report::{CheckReport, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Track {
    Finite,
    Monomial,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub provenance: Provenance,
    /// The conclusion clauses that failed.
    pub clause: String,
    /// Intermediate objects of the case, as (name, rendering) pairs.
    pub context: Vec<(String, String)>,
}

/// Failed conclusion clauses of one case.
#[derive(Default)]
pub struct Clauses {
    failed: Vec<String>,
}

impl Clauses {
    pub fn req(&mut self, ok: bool, text: &str) -> bool {
        if !ok {
            self.failed.push(text.to_string());
        }
        ok
    }

    pub fn req_with(&mut self, ok: bool, text: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failed.push(text());
        }
        ok
    }
}

pub struct CaseLog<'a> {
    provenance: &'a Provenance,
    pub considered: usize,
    pub applicable: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl<'a> CaseLog<'a> {
    pub fn new(provenance: &'a Provenance) -> Self {
        CaseLog {
            provenance,
            considered: 0,
            applicable: 0,
            passed: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Records one case. `context` is only evaluated when the case fails.
    pub fn case<C, F>(&mut self, hypothesis: bool, context: C, conclusion: F)
    where
        C: FnOnce() -> Vec<(String, String)>,
        F: FnOnce(&mut Clauses) -> Result<()>,
    {
        self.considered += 1;
        if !hypothesis {
            return;
        }
        self.applicable += 1;
        let mut cl = Clauses::default();
        let clause = match conclusion(&mut cl) {
            Err(e) => Some(format!("engine error: {e}")),
            Ok(()) if cl.failed.is_empty() => None,
            Ok(()) => Some(cl.failed.join("; ")),
        };
        match clause {
            None => self.passed += 1,
            Some(clause) => self.counterexamples.push(Counterexample {
                provenance: self.provenance.clone(),
                clause,
                context: context(),
            }),
        }
    }

    /// An error before any case could be formed.
    pub fn engine_error(&mut self, e: &Error) {
        self.case(true, Vec::new, |_| Err(e.clone()));
    }
}

/// Which checks to run, and on which tracks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub ids: Vec<&'static str>,
    pub finite: bool,
    pub monomial: bool,
}

impl Selection {
    pub fn all() -> Selection {
        Selection {
            ids: registry().iter().map(|c| c.id).collect(),
            finite: true,
            monomial: true,
        }
    }

    /// `all`, `finite`, `monomial`, or a comma-separated list of check ids.
    pub fn parse(text: &str) -> Result<Selection> {
        let all = Selection::all();
        match text.trim() {
            "all" => Ok(all),
            "finite" => Ok(Selection {
                finite: true,
                monomial: false,
                ..all
            }),
            "monomial" => Ok(Selection {
                finite: false,
                monomial: true,
                ..all
            }),
            list => {
                let mut ids = Vec::new();
                for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let c = registry().iter().find(|c| c.id == part).ok_or_else(|| {
                        Error::InvalidArgument(format!("unknown theorem id `{part}`"))
                    })?;
                    if !ids.contains(&c.id) {
                        ids.push(c.id);
                    }
                }
                if ids.is_empty() {
                    return Err(Error::InvalidArgument("empty check list".into()));
                }
                Ok(Selection {
                    ids,
                    finite: true,
                    monomial: true,
                })
            }
        }
    }
}

struct Partial {
    considered: usize,
    applicable: usize,
    passed: usize,
    finite_applicable: usize,
    monomial_applicable: usize,
    counterexamples: Vec<Counterexample>,
    micros: u128,
}

fn run_instance(
    inst: &Instance,
    checks: &[&'static TheoremCheck],
    sel: &Selection,
) -> Vec<Partial> {
    let p = &inst.provenance;
    let mut out = Vec::with_capacity(checks.len());
    let finite_ctx = match &inst.kind {
        InstanceKind::Finite(r) if sel.finite => {
            let audit = r.audit();
            let needs_ctx = audit.is_ok() && checks.iter().any(|c| c.finite.is_some());
            Some((
                audit,
                if needs_ctx {
                    Some(finite::FiniteCtx::new(r))
                } else {
                    None
                },
            ))
        }
        _ => None,
    };
    for c in checks {
        let start = Instant::now();
        let mut log = CaseLog::new(p);
        let mut is_finite = false;
        match (&inst.kind, &finite_ctx) {
            (InstanceKind::Finite(_), Some((audit, ctx))) => {
                is_finite = true;
                if c.audit {
                    log.case(
                        true,
                        || vec![("audit".into(), format!("{:?}", audit))],
                        |cl| {
                            if let Err(f) = audit {
                                cl.req_with(false, || format!("ring axiom audit failed: {f}"));
                            }
                            Ok(())
                        },
                    );
                } else if let (Some(f), Some(ctx)) = (c.finite, ctx) {
                    match ctx {
                        Ok(ctx) => f(ctx, &mut log),
                        Err(e) => log.engine_error(e),
                    }
                }
            }
            (InstanceKind::Comm(_) | InstanceKind::An(_), _) if sel.monomial => {
                if let Some(f) = c.monomial {
                    f(inst, &mut log);
                }
            }
            _ => {}
        }
        out.push(Partial {
            considered: log.considered,
            applicable: log.applicable,
            passed: log.passed,
            finite_applicable: if is_finite { log.applicable } else { 0 },
            monomial_applicable: if is_finite { 0 } else { log.applicable },
            counterexamples: log.counterexamples,
            micros: start.elapsed().as_micros(),
        });
    }
    out
}

/// Runs the selected checks over the corpus on `jobs` worker threads. The
/// result does not depend on `jobs` apart from the wall times.
pub fn run_suite(corpus: &[Instance], sel: &Selection, jobs: usize) -> Result<SuiteReport> {
    let checks: Vec<&'static TheoremCheck> = registry()
        .iter()
        .filter(|c| sel.ids.contains(&c.id))
        .collect();
    if checks.len() != sel.ids.len() {
        return Err(Error::InvalidArgument(
            "selection names an unknown check".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let per_instance: Vec<Vec<Partial>> = pool.install(|| {
        corpus
            .par_iter()
            .map(|inst| run_instance(inst, &checks, sel))
            .collect()
    });
    let mut reports: Vec<CheckReport> = checks.iter().map(|c| CheckReport::empty(c)).collect();
    for parts in per_instance {
        for (rep, part) in reports.iter_mut().zip(parts) {
            rep.considered += part.considered;
            rep.applicable += part.applicable;
            rep.passed += part.passed;
            rep.finite_applicable += part.finite_applicable;
            rep.monomial_applicable += part.monomial_applicable;
            rep.counterexamples.extend(part.counterexamples);
            *rep.wall_time_ms.get_or_insert(0.0) += part.micros as f64 / 1000.0;
        }
    }
    for r in &mut reports {
        r.not_applicable = r.considered - r.applicable;
    }
    Ok(SuiteReport {
        instances: corpus.len(),
        reports,
    })
}

/// Full rendering of one counterexample: recipe, failed clause, the case's
/// intermediate objects, and a summary of the rebuilt instance.
pub fn explain(report: &CheckReport, index: usize) -> Result<String> {
    if report.counterexamples.is_empty() {
        return Ok(format!("{}: no counterexamples", report.theorem_id));
    }
    let cx = report.counterexamples.get(index).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "counterexample index {index} out of range (report has {})",
            report.counterexamples.len()
        ))
    })?;
    let mut out = String::new();
    out.push_str(&format!(
        "check      {} — {}\n",
        report.theorem_id, report.title
    ));
    out.push_str(&format!("instance   {}\n", cx.provenance.recipe));
    out.push_str(&format!("seed       {}\n", cx.provenance.seed));
    if let Some(f) = cx.provenance.fault {
        out.push_str(&format!(
            "fault      mul[{}][{}] := {}\n",
            f.x, f.y, f.value
        ));
    }
    out.push_str(&format!("failed     {}\n", cx.clause));
    for (k, v) in &cx.context {
        out.push_str(&format!("  {k:<12} {v}\n"));
    }
    let inst = Instance::rebuild(&cx.provenance)?;
    match &inst.kind {
        InstanceKind::Finite(r) => {
            out.push_str(&format!("ring       {} (order {})\n", r.label(), r.order()));
            match r.audit() {
                Err(f) => out.push_str(&format!("audit      {f}\n")),
                Ok(()) => {
                    let an = RingAnalysis::new(r);
                    let mins: Vec<String> = an
                        .min_prime_sets()
                        .into_iter()
                        .map(|p| r.fmt_set(p))
                        .collect();
                    out.push_str(&format!("min primes {}\n", mins.join(", ")));
                    out.push_str(&format!("radical    {}\n", r.fmt_set(an.radical)));
                    out.push_str(&format!("centre     {}\n", r.fmt_set(r.centre_set())));
                }
            }
        }
        InstanceKind::Comm(c) => {
            out.push_str(&format!("ring       {c}\n"));
            if let Ok(m) = min_primes_monomial(c) {
                let m: Vec<String> = m.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!("min primes {}\n", m.join(", ")));
            }
        }
        InstanceKind::An(a) => {
            out.push_str(&format!(
                "algebra    A_{} with {} extra letters, degree bound {}\n",
                a.n, a.extra, a.degree
            ));
        }
    }
    Ok(out)
}
