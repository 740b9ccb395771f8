//! Checks on the monomial track: commutative monomial quotients and the
//! algebras `A_n`.

use super::{CaseLog, Instance, InstanceKind};
use crate::error::Error;
use crate::monomial::an::{
    an_localize_normal, an_verify, associativity_failures, fmt_index_set, AnAlgebra,
};
use crate::monomial::comm::{
    fmt_vars, is_regular_variable, localize_monomial, min_covers_brute,
    saturation_commutes_with_radical, saturation_mismatch, CommMonomialRing, MonomialLocalization,
};

const ASSOCIATIVITY_SAMPLES: usize = 2000;

fn comm(inst: &Instance) -> Option<&CommMonomialRing> {
    match &inst.kind {
        InstanceKind::Comm(c) => Some(c),
        _ => None,
    }
}

fn algebra(inst: &Instance) -> Option<&AnAlgebra> {
    match &inst.kind {
        InstanceKind::An(a) => Some(a),
        _ => None,
    }
}

fn regular_vars(r: &CommMonomialRing) -> u64 {
    (0..r.n)
        .filter(|&i| is_regular_variable(r, i))
        .fold(0, |acc, i| acc | 1 << i)
}

fn subsets(of: u64) -> impl Iterator<Item = u64> {
    (0..=of).filter(move |v| v & !of == 0)
}

fn ctx(r: &CommMonomialRing, v: u64) -> Vec<(String, String)> {
    vec![("ring".into(), r.to_string()), ("V".into(), fmt_vars(v))]
}

/// Localization at `V`; `None` when `V` kills the ring.
fn localized(r: &CommMonomialRing, v: u64, log: &mut CaseLog) -> Option<MonomialLocalization> {
    match localize_monomial(r, v) {
        Ok(l) => Some(l),
        Err(Error::CollapsedLocalization) => {
            log.case(false, Vec::new, |_| Ok(()));
            None
        }
        Err(e) => {
            log.engine_error(&e);
            None
        }
    }
}

/// Inverting regular variables of a squarefree quotient: the minimal primes
/// survive unchanged, and "regular" read off the colon ideal agrees with "in
/// no minimal prime".
fn regular_localization(r: &CommMonomialRing, v: u64, log: &mut CaseLog) {
    let Some(l) = localized(r, v, log) else {
        return;
    };
    log.case(
        true,
        || ctx(r, v),
        |cl| {
            cl.req(l.bijective, "min S⁻¹R corresponds to min(ass)");
            cl.req(l.count_preserved == Some(true), "|min S⁻¹R| = |min R|");
            let mins: Vec<u64> = l.min_r.iter().map(|p| p.vars).collect();
            let local: Vec<u64> = l.localized_min.iter().map(|p| p.vars).collect();
            cl.req(local == mins, "min S⁻¹R = {S⁻¹p : p ∈ min R}");
            cl.req(
                min_covers_brute(r.all_vars(), &r.supports()) == mins,
                "minimal covers agree with brute force",
            );
            Ok(())
        },
    );
}

pub(super) fn a10(inst: &Instance, log: &mut CaseLog) {
    let Some(r) = comm(inst) else { return };
    if !r.is_squarefree() {
        log.case(false, Vec::new, |_| Ok(()));
        return;
    }
    let reg = regular_vars(r);
    log.case(
        true,
        || ctx(r, reg),
        |cl| {
            let covered = l_covered(r);
            cl.req(
                reg == r.all_vars() & !covered,
                "a variable is regular iff it lies in no minimal prime",
            );
            Ok(())
        },
    );
    for v in subsets(reg) {
        regular_localization(r, v, log);
    }
}

fn l_covered(r: &CommMonomialRing) -> u64 {
    min_covers_brute(r.all_vars(), &r.supports())
        .into_iter()
        .fold(0, |a, c| a | c)
}

pub(super) fn c10(inst: &Instance, log: &mut CaseLog) {
    let Some(r) = comm(inst) else { return };
    if !r.is_squarefree() {
        log.case(false, Vec::new, |_| Ok(()));
        return;
    }
    regular_localization(r, regular_vars(r), log);
}

pub(super) fn j4(inst: &Instance, log: &mut CaseLog) {
    let Some(r) = comm(inst) else { return };
    let reg = regular_vars(r);
    let Some(l) = localized(r, reg, log) else {
        return;
    };
    log.case(
        true,
        || ctx(r, reg),
        |cl| {
            cl.req(
                l.saturation == *r,
                "inverting the regular variables is injective",
            );
            cl.req(
                regular_vars(&l.saturation) == reg,
                "no further variable becomes regular",
            );
            Ok(())
        },
    );
}

fn semiprime_localization(inst: &Instance, log: &mut CaseLog) {
    let Some(r) = comm(inst) else { return };
    if !r.is_squarefree() {
        log.case(false, Vec::new, |_| Ok(()));
        return;
    }
    for v in subsets(r.all_vars()) {
        let Some(l) = localized(r, v, log) else {
            continue;
        };
        log.case(
            true,
            || ctx(r, v),
            |cl| {
                let min_rs: Vec<u64> = l
                    .min_r
                    .iter()
                    .map(|p| p.vars)
                    .filter(|p| p & v == 0)
                    .collect();
                let local: Vec<u64> = l.localized_min.iter().map(|p| p.vars).collect();
                cl.req(!min_rs.is_empty(), "min(R,S) is nonempty");
                cl.req(local == min_rs, "min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}");
                cl.req(l.saturation.is_squarefree(), "S⁻¹R is semiprime");
                Ok(())
            },
        );
    }
}

pub(super) fn t28(inst: &Instance, log: &mut CaseLog) {
    semiprime_localization(inst, log)
}

pub(super) fn a28(inst: &Instance, log: &mut CaseLog) {
    semiprime_localization(inst, log)
}

pub(super) fn a2oct(inst: &Instance, log: &mut CaseLog) {
    if let Some(r) = comm(inst) {
        for v in subsets(r.all_vars()).filter(|&v| v != 0) {
            let Some(l) = localized(r, v, log) else {
                continue;
            };
            log.case(
                true,
                || ctx(r, v),
                |cl| {
                    cl.req(l.bijective, "min(ass) maps bijectively onto min S⁻¹R");
                    cl.req(
                        saturation_mismatch(r, v).is_none(),
                        "the kernel is the saturation",
                    );
                    cl.req(
                        saturation_commutes_with_radical(r, v)?,
                        "saturation commutes with the radical",
                    );
                    Ok(())
                },
            );
        }
    }
    if let Some(a) = algebra(inst) {
        for v in 1..=a.full_index_set() {
            log.case(
                true,
                || {
                    vec![
                        ("algebra".into(), a.to_string()),
                        ("V".into(), fmt_index_set(v)),
                    ]
                },
                |cl| {
                    let l = an_localize_normal(a, v)?;
                    cl.req(l.ass_matches, "the kernel is (x_v : v ∈ V)");
                    cl.req(
                        l.min_ass.len() == l.expected_count,
                        "the number of minimal primes over the kernel",
                    );
                    cl.req(l.bijective, "min(ass) maps bijectively onto min S⁻¹A");
                    cl.req(l.contraction_ok, "contraction recovers each minimal prime");
                    cl.req(l.domain_ok, "the localized residue rings are domains");
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn j10(inst: &Instance, log: &mut CaseLog) {
    if let Some(r) = comm(inst) {
        for v in subsets(r.all_vars()) {
            log.case(
                true,
                || ctx(r, v),
                |cl| {
                    cl.req_with(saturation_mismatch(r, v).is_none(), || {
                        format!(
                            "kernel membership disagrees at {:?}",
                            saturation_mismatch(r, v)
                        )
                    });
                    Ok(())
                },
            );
        }
    }
    if let Some(a) = algebra(inst) {
        for v in 1..=a.full_index_set() {
            log.case(
                true,
                || {
                    vec![
                        ("algebra".into(), a.to_string()),
                        ("V".into(), fmt_index_set(v)),
                    ]
                },
                |cl| {
                    let l = an_localize_normal(a, v)?;
                    cl.req_with(l.ass_matches, || l.ass_witness.clone().unwrap_or_default());
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn b29(inst: &Instance, log: &mut CaseLog) {
    let Some(a) = algebra(inst) else { return };
    let rep = an_verify(a);
    for c in &rep.clauses {
        log.case(
            true,
            || {
                vec![
                    ("algebra".into(), a.to_string()),
                    ("clause".into(), c.id.to_string()),
                    ("detail".into(), c.detail.clone()),
                ]
            },
            |cl| {
                cl.req_with(c.passed, || format!("({}) {}", c.id, c.statement));
                Ok(())
            },
        );
    }
    let seed = inst.provenance.seed;
    log.case(
        true,
        || {
            vec![
                ("algebra".into(), a.to_string()),
                ("seed".into(), seed.to_string()),
            ]
        },
        |cl| {
            let bad = associativity_failures(a, ASSOCIATIVITY_SAMPLES, seed);
            cl.req_with(bad.is_empty(), || {
                format!("multiplication is associative ({} failures)", bad.len())
            });
            Ok(())
        },
    );
}
