//! Checks on the finite-ring track. Everything shared between checks on one
//! ring (ideal lattice, multiplicative sets and their localizations, the
//! centre) is computed once in [`FiniteCtx`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::CaseLog;
use crate::centre::{
    central_localize, centre_ring, check_pierce, check_rho_criteria, min_prime_product_injective,
    rho, CentreData, RestrictionMap,
};
use crate::error::Result;
use crate::finring::{quotient_by_set, ElementSet, Ring, RingTable};
use crate::ideals::{
    classify_prime_set, is_ideal_set, is_irredundant, strongly_nilpotent_set, RingAnalysis, Side,
};
use crate::localization::{
    check_a11, check_epimorphic_den, classify_members, classify_set, enumerate_mult_sets,
    localize_classified, localize_normal, min_rs, respects_prime_structure, units_mod,
    Localization, MultSet, MultSetBudget, OreClass,
};

pub(super) struct SetInfo {
    pub set: MultSet,
    pub class: OreClass,
    pub loc: Option<Localization>,
    /// Every member is a normal element.
    pub normal: bool,
    /// Every `s` has some `t ∈ S` with `ts` normal.
    pub normalizable: bool,
}

pub(super) struct FiniteCtx {
    pub ring: Ring,
    pub an: RingAnalysis,
    pub sets: Vec<SetInfo>,
    pub cd: CentreData,
    pub rho: Result<RestrictionMap>,
    targets: RefCell<HashMap<u64, Rc<RingAnalysis>>>,
}

type Ctx = Vec<(String, String)>;

impl FiniteCtx {
    pub fn new(r: &Ring) -> Result<FiniteCtx> {
        let an = RingAnalysis::new(r);
        let normal = r.normal_elements();
        let mut sets = Vec::new();
        for set in enumerate_mult_sets(r, &MultSetBudget::default()) {
            let class = classify_set(&set)?;
            let loc = if class.left_den {
                Some(localize_classified(&set, &class)?)
            } else {
                None
            };
            let m = set.members();
            let normalizable = m
                .iter()
                .all(|s| m.iter().any(|t| normal.contains(r.mul(t, s))));
            sets.push(SetInfo {
                normal: m.is_subset(&normal),
                normalizable,
                set,
                class,
                loc,
            });
        }
        let cd = centre_ring(r)?;
        let rho = rho(&an, &cd);
        Ok(FiniteCtx {
            ring: r.clone(),
            an,
            sets,
            cd,
            rho,
            targets: RefCell::new(HashMap::new()),
        })
    }

    /// Analysis of `S⁻¹R`. Targets are quotients `R/ass`, so they are cached by `ass`.
    pub fn target(&self, l: &Localization) -> Rc<RingAnalysis> {
        self.targets
            .borrow_mut()
            .entry(l.ass.members().bits())
            .or_insert_with(|| Rc::new(RingAnalysis::new(&l.target)))
            .clone()
    }

    fn left_den(&self) -> impl Iterator<Item = (&SetInfo, &Localization)> {
        self.sets
            .iter()
            .filter_map(|s| s.loc.as_ref().map(|l| (s, l)))
    }

    fn fmt(&self, s: ElementSet) -> String {
        self.ring.fmt_set(s)
    }

    fn set_ctx(&self, si: &SetInfo) -> Ctx {
        vec![
            ("S".into(), self.fmt(si.set.members())),
            ("ass_l(S)".into(), self.fmt(si.class.ass_l)),
            ("ass_r(S)".into(), self.fmt(si.class.ass_r)),
        ]
    }

    fn fmt_list(&self, v: &[ElementSet]) -> String {
        v.iter()
            .map(|&s| self.fmt(s))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn fmt_in(r: &RingTable, v: &[ElementSet]) -> String {
    v.iter()
        .map(|&s| r.fmt_set(s))
        .collect::<Vec<_>>()
        .join(", ")
}

fn sorted(mut v: Vec<ElementSet>) -> Vec<ElementSet> {
    v.sort_by_key(|s| s.bits());
    v.dedup();
    v
}

fn minimal_sets(v: &[ElementSet]) -> Vec<ElementSet> {
    sorted(
        v.iter()
            .copied()
            .filter(|a| !v.iter().any(|b| b != a && b.is_subset(a)))
            .collect(),
    )
}

fn prime_in(t: &RingAnalysis, s: ElementSet) -> bool {
    t.index_of(s).map(|i| t.reports[i].prime).unwrap_or(false)
}

fn completely_prime_in(t: &RingAnalysis, s: ElementSet) -> bool {
    t.index_of(s)
        .map(|i| t.reports[i].completely_prime)
        .unwrap_or(false)
}

fn two_sided(t: &RingTable, s: ElementSet) -> bool {
    is_ideal_set(t, s, Side::Two)
}

/// The image of `s` in `R/p` is a (left, or two-sided) denominator set with zero kernel.
fn den_zero_mod(r: &Ring, p: ElementSet, s: ElementSet, both_sides: bool) -> Result<bool> {
    let (q, pi) = quotient_by_set(r, p)?;
    let img = pi.image(s);
    if img.contains(q.zero()) {
        return Ok(false);
    }
    let c = classify_members(&q, img);
    let den = if both_sides {
        c.is_denominator()
    } else {
        c.left_den
    };
    Ok(den && c.ass_l.len() == 1)
}

/// `R/p → S⁻¹R/j` induced by `σ` is an isomorphism. `σ` is onto, so this is
/// `σ⁻¹(j) = p` with `j` proper.
fn residue_iso(l: &Localization, p: ElementSet, j: ElementSet) -> bool {
    !j.contains(l.target.one()) && l.sigma.is_surjective() && l.contract(j) == p
}

fn bijective_onto(images: &[ElementSet], onto: &[ElementSet]) -> bool {
    sorted(images.to_vec()).len() == images.len()
        && sorted(images.to_vec()) == sorted(onto.to_vec())
}

// ---------------------------------------------------------------- engine

pub(super) fn radical_oracle(cx: &FiniteCtx, log: &mut CaseLog) {
    let an = &cx.an;
    log.case(
        true,
        || {
            vec![
                ("radical".into(), cx.fmt(an.radical)),
                (
                    "strongly nil".into(),
                    cx.fmt(strongly_nilpotent_set(&cx.ring)),
                ),
            ]
        },
        |cl| {
            cl.req(
                strongly_nilpotent_set(&cx.ring) == an.radical,
                "prime radical equals the strongly nilpotent elements",
            );
            Ok(())
        },
    );
    for i in an.proper_ideals() {
        log.case(
            true,
            || vec![("ideal".into(), cx.fmt(an.set(i)))],
            |_| an.min_primes_over_checked(an.set(i)).map(|_| ()),
        );
    }
}

pub(super) fn prime_test_oracle(cx: &FiniteCtx, log: &mut CaseLog) {
    let an = &cx.an;
    let small = cx.ring.order() <= 8;
    log.case(
        small,
        || vec![("primes".into(), cx.fmt_list(&an.prime_sets()))],
        |cl| {
            let lattice_primes: Vec<usize> = (0..an.lattice.len())
                .filter(|&i| an.lattice.is_prime_by_lattice(i))
                .collect();
            cl.req(
                lattice_primes == an.primes,
                "elementwise and lattice prime tests agree",
            );
            Ok(())
        },
    );
}

pub(super) fn finite_facts(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    log.case(
        true,
        || {
            vec![
                ("units".into(), cx.fmt(r.units())),
                ("regular".into(), cx.fmt(r.regular_elements())),
            ]
        },
        |cl| {
            cl.req(
                r.units() == r.regular_elements(),
                "regular elements are units",
            );
            let ev = cx.an.prime_rich_evidence()?;
            cl.req(
                ev.iter()
                    .all(|e| e.by_min_primes && e.exponent.is_some_and(|k| k <= r.order())),
                "every ideal contains a power of the product of its minimal primes",
            );
            Ok(())
        },
    );
    for (si, l) in cx.left_den() {
        log.case(
            true,
            || cx.set_ctx(si),
            |cl| {
                let img = l.sigma.image(si.set.members());
                cl.req(img.is_subset(&l.target.units()), "σ(S) consists of units");
                Ok(())
            },
        );
    }
}

pub(super) fn ring_meta(cx: &FiniteCtx, log: &mut CaseLog) {
    // ρ is defined: every prime restricts to a prime of the centre
    log.case(true, Vec::new, |_| {
        cx.rho.as_ref().map(|_| ()).map_err(Clone::clone)
    });
}

// ------------------------------------------------ localization of ideals

pub(super) fn a11(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        for b in cx.an.proper_ideals() {
            let v = match check_a11(l, &cx.an.ideal(b)) {
                Ok(v) => v,
                Err(e) => {
                    log.engine_error(&e);
                    continue;
                }
            };
            log.case(
                true,
                || {
                    let mut c = cx.set_ctx(si);
                    c.push(("b".into(), cx.fmt(cx.an.set(b))));
                    c.push(("conditions".into(), format!("{:?}", v.conditions)));
                    c
                },
                |cl| {
                    cl.req(
                        v.agree(),
                        "the five conditions for S⁻¹b to be an ideal agree",
                    );
                    cl.req(
                        v.chain_stabilizes,
                        "the ascending chain of S⁻¹b-translates stabilises",
                    );
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn a_a11(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        for b in cx.an.proper_ideals() {
            log.case(
                true,
                || {
                    let mut c = cx.set_ctx(si);
                    c.push(("b".into(), cx.fmt(cx.an.set(b))));
                    c.push((
                        "S⁻¹b".into(),
                        l.target.fmt_set(l.localize_set(cx.an.set(b))),
                    ));
                    c
                },
                |cl| {
                    let v = check_a11(l, &cx.an.ideal(b))?;
                    cl.req(
                        v.conditions[0],
                        "S⁻¹b is an ideal of the Noetherian ring S⁻¹R",
                    );
                    cl.req(
                        v.conditions[0] == v.chain_stabilizes,
                        "S⁻¹b is an ideal iff the chain stabilises",
                    );
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn a10(cx: &FiniteCtx, log: &mut CaseLog) {
    let prime_ring = cx.an.reports[0].prime;
    for (si, l) in cx.left_den() {
        log.case(
            prime_ring && l.ass.is_zero(),
            || cx.set_ctx(si),
            |cl| {
                cl.req(cx.target(l).reports[0].prime, "S⁻¹R is a prime ring");
                Ok(())
            },
        );
    }
}

pub(super) fn a6oct(cx: &FiniteCtx, log: &mut CaseLog) {
    let an = &cx.an;
    for (si, l) in cx.left_den() {
        if !l.ass.is_zero() {
            log.case(false, Vec::new, |_| Ok(()));
            continue;
        }
        let t = cx.target(l);
        for &p in &an.primes {
            let pset = an.set(p);
            let sp = l.localize_set(pset);
            let back = l.contract(sp);
            let hyp = back == pset || an.index_of(back).is_some_and(|i| an.reports[i].prime);
            log.case(
                hyp,
                || {
                    let mut c = cx.set_ctx(si);
                    c.push(("p".into(), cx.fmt(pset)));
                    c.push(("S⁻¹p".into(), l.target.fmt_set(sp)));
                    c.push(("σ⁻¹(S⁻¹p)".into(), cx.fmt(back)));
                    c
                },
                |cl| {
                    cl.req(
                        prime_in(&t, sp) == two_sided(&l.target, sp),
                        "S⁻¹p is prime iff it is an ideal",
                    );
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn aa6oct(cx: &FiniteCtx, log: &mut CaseLog) {
    let (an, r) = (&cx.an, &cx.ring);
    for (si, l) in cx.left_den() {
        let s = si.set.members();
        for &p in &an.primes {
            let pset = an.set(p);
            log.case(
                s.is_disjoint(&pset),
                || {
                    let mut c = cx.set_ctx(si);
                    c.push(("p".into(), cx.fmt(pset)));
                    c.push(("σ⁻¹(S⁻¹p)".into(), cx.fmt(l.contract(l.localize_set(pset)))));
                    c
                },
                |cl| {
                    let back = l.contract(l.localize_set(pset));
                    let by_def = ElementSet::from_elems(
                        r.order(),
                        r.elements()
                            .filter(|&x| s.iter().any(|t| pset.contains(r.mul(t, x)))),
                    );
                    cl.req(back == pset, "σ⁻¹(S⁻¹p) = p");
                    cl.req(by_def == pset, "{r : sr ∈ p for some s ∈ S} = p");
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn xa10(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        let ass = l.ass.members();
        log.case(
            prime_in(&cx.an, ass),
            || cx.set_ctx(si),
            |cl| {
                cl.req(cx.target(l).reports[0].prime, "S⁻¹R is a prime ring");
                Ok(())
            },
        );
    }
}

fn epi(cx: &FiniteCtx, log: &mut CaseLog, first: bool) {
    for (si, l) in cx.left_den() {
        for b in cx.an.proper_ideals() {
            let v = match check_epimorphic_den(l, &cx.an.ideal(b)) {
                Ok(v) => v,
                Err(e) => {
                    log.engine_error(&e);
                    continue;
                }
            };
            let pair = if first {
                v.regular_images
            } else {
                v.torsion_free
            };
            log.case(
                pair.is_some(),
                || {
                    let mut c = cx.set_ctx(si);
                    c.push(("b".into(), cx.fmt(cx.an.set(b))));
                    c.push(("sides".into(), format!("{:?}", pair)));
                    c
                },
                |cl| {
                    let (a, b) = pair.unwrap_or_default();
                    cl.req(
                        a == b,
                        if first {
                            "S̄ ∈ Den_l(R/b, 0) iff S̄ is regular in R/b"
                        } else {
                            "S̃ ∈ Den_l(R̄/c̄, 0) iff the right S̃-torsion vanishes"
                        },
                    );
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn b14oct(cx: &FiniteCtx, log: &mut CaseLog) {
    epi(cx, log, true)
}

pub(super) fn c14oct(cx: &FiniteCtx, log: &mut CaseLog) {
    epi(cx, log, false)
}

// ------------------------------------------------------- minimal primes

pub(super) fn a29(cx: &FiniteCtx, log: &mut CaseLog) {
    let an = &cx.an;
    let k = an.primes.len();
    let mins = sorted(an.min_prime_sets());
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut len = 0;
    while len < 6 && words.len() * k <= 4096 {
        len += 1;
        words = words
            .iter()
            .flat_map(|w| {
                an.primes
                    .iter()
                    .map(move |&p| [w.as_slice(), &[p]].concat())
            })
            .collect();
        for w in &words {
            let product = w
                .iter()
                .skip(1)
                .fold(w[0], |acc, &p| an.lattice.product(acc, p));
            let letters: Vec<ElementSet> = w.iter().map(|&p| an.set(p)).collect();
            log.case(
                product == 0,
                || {
                    vec![
                        ("word".into(), cx.fmt_list(&letters)),
                        ("min R".into(), cx.fmt_list(&mins)),
                    ]
                },
                |cl| {
                    cl.req(
                        minimal_sets(&letters) == mins,
                        "min R is the set of minimal letters",
                    );
                    cl.req(
                        mins.len() <= w.len(),
                        "|min R| is at most the length of the product",
                    );
                    Ok(())
                },
            );
        }
    }
}

pub(super) fn aa29(cx: &FiniteCtx, log: &mut CaseLog) {
    match cx.an.prime_rich_evidence() {
        Err(e) => log.engine_error(&e),
        Ok(ev) => {
            for e in ev {
                log.case(
                    true,
                    || {
                        vec![
                            ("ideal".into(), cx.fmt(e.ideal)),
                            ("evidence".into(), format!("{e:?}")),
                        ]
                    },
                    |cl| {
                        cl.req(e.by_primes, "contains a product of primes over it");
                        cl.req(e.by_min_primes, "contains a product of its minimal primes");
                        cl.req(
                            e.nilpotent_radical,
                            "finitely many minimal primes and nilpotent radical modulo it",
                        );
                        Ok(())
                    },
                );
            }
        }
    }
}

pub(super) fn b29(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        log.case(
            true,
            || cx.set_ctx(si),
            |cl| {
                let bad = cx
                    .an
                    .proper_ideals()
                    .find(|&i| !two_sided(&l.target, l.localize_set(cx.an.set(i))));
                cl.req_with(bad.is_none(), || {
                    format!(
                        "S⁻¹I is an ideal for I = {}",
                        cx.fmt(cx.an.set(bad.unwrap_or(0)))
                    )
                });
                Ok(())
            },
        );
    }
}

/// `[S⁻¹p : p ∈ min(R,S)]`, duplicates kept.
fn localized_mins(cx: &FiniteCtx, si: &SetInfo, l: &Localization) -> Vec<ElementSet> {
    min_rs(&cx.an, si.set.members())
        .into_iter()
        .map(|p| l.localize_set(cx.an.set(p)))
        .collect()
}

pub(super) fn t29(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        let t = cx.target(l);
        let list = localized_mins(cx, si, l);
        let hyp = si.class.is_denominator()
            && respects_prime_structure(l, &cx.an)
            && list.iter().all(|&q| prime_in(&t, q));
        log.case(
            hyp,
            || {
                let mut c = cx.set_ctx(si);
                c.push(("S⁻¹min(R,S)".into(), fmt_in(&l.target, &list)));
                c.push(("min S⁻¹R".into(), fmt_in(&l.target, &t.min_prime_sets())));
                c
            },
            |cl| {
                let tmin = sorted(t.min_prime_sets());
                let nrs = list.len();
                cl.req(
                    nrs >= 1 && nrs <= cx.an.min_primes.len(),
                    "1 ≤ |min(R,S)| ≤ |min R|",
                );
                cl.req(
                    minimal_sets(&list) == tmin,
                    "min S⁻¹R is the set of minimal S⁻¹p",
                );
                cl.req(tmin.len() <= nrs, "|min S⁻¹R| ≤ |min(R,S)|");
                let strict = list
                    .iter()
                    .any(|a| list.iter().any(|b| a != b && a.is_subset(b)));
                cl.req(
                    (sorted(list.clone()) == tmin) == !strict,
                    "all S⁻¹p are minimal iff no strict inclusions among them",
                );
                cl.req(
                    sorted(list.clone()) == tmin,
                    "min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}",
                );
                Ok(())
            },
        );
    }
}

pub(super) fn a29_zero(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        log.case(
            si.class.is_denominator() && l.ass.is_zero(),
            || cx.set_ctx(si),
            |cl| {
                let t = cx.target(l);
                let list = localized_mins(cx, si, l);
                cl.req(!list.is_empty(), "min(R,S) is nonempty");
                cl.req(
                    sorted(list) == sorted(t.min_prime_sets()),
                    "min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}",
                );
                Ok(())
            },
        );
    }
}

pub(super) fn b10(cx: &FiniteCtx, log: &mut CaseLog) {
    let an = &cx.an;
    let primes = an.prime_sets();
    let k = primes.len().min(10);
    let mins = sorted(an.min_prime_sets());
    for mask in 1u32..1 << k {
        let family: Vec<ElementSet> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| primes[i])
            .collect();
        log.case(
            an.semiprime,
            || {
                vec![
                    ("family".into(), cx.fmt_list(&family)),
                    ("min R".into(), cx.fmt_list(&mins)),
                ]
            },
            |cl| {
                cl.req(
                    is_irredundant(&cx.ring, &family) == (sorted(family.clone()) == mins),
                    "a family of primes is irredundant iff it is min R",
                );
                Ok(())
            },
        );
    }
}

// ------------------------------------------------- semiprime localization

/// Conclusions shared by the semiprime localization statements for a left
/// denominator set `S` with `ass = a`: the target is semiprime, the minimal
/// primes over `a` localize bijectively onto `min S⁻¹R`, and each residue
/// ring matches.
fn semiprime_conclusions(
    cx: &FiniteCtx,
    si: &SetInfo,
    l: &Localization,
    cl: &mut super::Clauses,
) -> Result<()> {
    let t = cx.target(l);
    cl.req(t.semiprime, "S⁻¹R is semiprime");
    let over: Vec<ElementSet> = cx
        .an
        .min_primes_over(l.ass.members())
        .into_iter()
        .map(|p| cx.an.set(p))
        .collect();
    let images: Vec<ElementSet> = over.iter().map(|&p| l.localize_set(p)).collect();
    cl.req(
        bijective_onto(&images, &t.min_prime_sets()),
        "p ↦ S⁻¹p maps min(ass) bijectively onto min S⁻¹R",
    );
    for (&p, &j) in over.iter().zip(&images) {
        cl.req_with(den_zero_mod(&cx.ring, p, si.set.members(), false)?, || {
            format!(
                "S is a left denominator set with zero kernel modulo {}",
                cx.fmt(p)
            )
        });
        cl.req_with(residue_iso(l, p, j), || {
            format!("R/p ≅ S⁻¹R/S⁻¹p for p = {}", cx.fmt(p))
        });
    }
    Ok(())
}

pub(super) fn a10_semiprime(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        log.case(
            cx.an.semiprime && l.ass.is_zero(),
            || cx.set_ctx(si),
            |cl| semiprime_conclusions(cx, si, l, cl),
        );
    }
}

pub(super) fn c10(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    let units = r.units();
    let Some((si, l)) = cx.left_den().find(|(si, _)| si.set.members() == units) else {
        log.case(cx.an.semiprime, Vec::new, |cl| {
            cl.req(false, "the units form a left denominator set");
            Ok(())
        });
        return;
    };
    log.case(
        cx.an.semiprime,
        || cx.set_ctx(si),
        |cl| {
            semiprime_conclusions(cx, si, l, cl)?;
            let mins = cx.an.min_prime_sets();
            cl.req(
                mins.iter().all(|&p| units.is_subset(&units_mod(r, p))),
                "units stay units modulo every minimal prime",
            );
            Ok(())
        },
    );
}

pub(super) fn aa10(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        let semiprime_ass = classify_prime_set(&cx.ring, l.ass.members()).semiprime;
        log.case(
            semiprime_ass,
            || cx.set_ctx(si),
            |cl| semiprime_conclusions(cx, si, l, cl),
        );
    }
}

pub(super) fn a15(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    log.case(
        cx.an.semiprime,
        || {
            vec![
                ("units".into(), cx.fmt(r.units())),
                ("min R".into(), cx.fmt_list(&cx.an.min_prime_sets())),
            ]
        },
        |cl| {
            let meet = cx
                .an
                .min_prime_sets()
                .iter()
                .fold(r.full_set(), |acc, &p| acc.intersection(&units_mod(r, p)));
            cl.req(r.units().is_subset(&meet), "S(R) ⊆ ∩ S(p) over min R");
            cl.req(
                min_prime_product_injective(&cx.an)?,
                "R embeds in the product of R/p over min R",
            );
            Ok(())
        },
    );
}

pub(super) fn a20(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    let mut done: Vec<ElementSet> = Vec::new();
    for (si, l) in cx.left_den() {
        let a = l.ass.members();
        if done.contains(&a) {
            continue;
        }
        done.push(a);
        log.case(
            true,
            || {
                vec![
                    ("ass".into(), cx.fmt(a)),
                    ("S(ass)".into(), cx.fmt(units_mod(r, a))),
                    ("witness S".into(), cx.fmt(si.set.members())),
                ]
            },
            |cl| {
                let big = units_mod(r, a);
                let c = classify_members(r, big);
                cl.req(
                    c.left_den && c.ass_l == a,
                    "S(ass) is a left denominator set with the same kernel",
                );
                let all_inside = cx
                    .left_den()
                    .filter(|(_, l2)| l2.ass.members() == a)
                    .all(|(s2, _)| s2.set.members().is_subset(&big));
                cl.req(
                    all_inside,
                    "S(ass) contains every left denominator set with that kernel",
                );
                cl.req(
                    l.sigma.image(big) == l.target.units(),
                    "the image of S(ass) is the unit group of R/ass",
                );
                Ok(())
            },
        );
    }
}

pub(super) fn t19(cx: &FiniteCtx, log: &mut CaseLog) {
    let (r, an) = (&cx.ring, &cx.an);
    let mins = an.min_prime_sets();
    let classes: Vec<OreClass> = mins
        .iter()
        .map(|&p| classify_members(r, units_mod(r, p)))
        .collect();
    for (&p, c) in mins.iter().zip(&classes) {
        let tset = units_mod(r, p);
        log.case(
            an.semiprime,
            || {
                vec![
                    ("p".into(), cx.fmt(p)),
                    ("T(p)".into(), cx.fmt(tset)),
                    ("a_l".into(), cx.fmt(c.ass_l)),
                    ("a_r".into(), cx.fmt(c.ass_r)),
                ]
            },
            |cl| {
                cl.req(
                    c.ass_l.is_subset(&p) && c.ass_r.is_subset(&p),
                    "a_l(p), a_r(p) ⊆ p",
                );
                let meet_l = classes
                    .iter()
                    .fold(r.full_set(), |acc, c| acc.intersection(&c.ass_l));
                let meet_r = classes
                    .iter()
                    .fold(r.full_set(), |acc, c| acc.intersection(&c.ass_r));
                cl.req(
                    meet_l.len() == 1 && meet_r.len() == 1,
                    "the a_l(p) and the a_r(p) each meet in 0",
                );
                let restricted = tset.iter().all(|s| {
                    p.iter().all(|x| {
                        tset.iter().any(|s2| {
                            r.elements()
                                .any(|y| c.ass_l.contains(r.sub(r.mul(s2, x), r.mul(y, s))))
                        })
                    })
                });
                cl.req(
                    c.left_ore == restricted,
                    "T(p) is left Ore iff the Ore condition holds on p modulo a_l(p)",
                );
                if c.left_den {
                    let set = MultSet::new(r, tset)?;
                    let l = localize_classified(&set, c)?;
                    let j = l.localize_set(p);
                    cl.req(two_sided(&l.target, j), "T(p)⁻¹p is an ideal");
                    cl.req(residue_iso(&l, p, j), "T(p)⁻¹R / T(p)⁻¹p ≅ R/p");
                    if c.ass_l == p {
                        let inside = cx
                            .left_den()
                            .filter(|(_, l2)| l2.ass.members() == p)
                            .all(|(s2, _)| s2.set.members().is_subset(&tset));
                        cl.req(
                            inside,
                            "T(p) is the largest left denominator set with kernel p",
                        );
                    }
                }
                Ok(())
            },
        );
    }
}

pub(super) fn t28(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        log.case(
            cx.an.semiprime,
            || {
                let mut c = cx.set_ctx(si);
                c.push((
                    "S⁻¹min(R,S)".into(),
                    fmt_in(&l.target, &localized_mins(cx, si, l)),
                ));
                c
            },
            |cl| {
                let t = cx.target(l);
                let list = localized_mins(cx, si, l);
                cl.req(!list.is_empty(), "min(R,S) is nonempty");
                let c1 = t.semiprime && sorted(list.clone()) == sorted(t.min_prime_sets());
                let c2 = list
                    .iter()
                    .all(|&q| two_sided(&l.target, q) && prime_in(&t, q));
                cl.req(c1 == c2, "(1) iff (2)");
                let distinct = sorted(list.clone()).len() == list.len();
                if c1 && si.normal {
                    cl.req(
                        distinct,
                        "the S⁻¹p are distinct when S consists of normal elements",
                    );
                }
                if c1 && si.normalizable {
                    cl.req(
                        distinct,
                        "the S⁻¹p are distinct when every s has t with ts normal",
                    );
                }
                Ok(())
            },
        );
    }
}

pub(super) fn a28(cx: &FiniteCtx, log: &mut CaseLog) {
    let comm = cx.ring.is_commutative();
    for (si, l) in cx.left_den() {
        log.case(
            comm && cx.an.semiprime,
            || cx.set_ctx(si),
            |cl| {
                let t = cx.target(l);
                let list = localized_mins(cx, si, l);
                cl.req(t.semiprime, "S⁻¹R is semiprime");
                cl.req(
                    sorted(list.clone()) == sorted(t.min_prime_sets()),
                    "min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}",
                );
                cl.req(t.min_primes.len() == list.len(), "|min S⁻¹R| = |min(R,S)|");
                Ok(())
            },
        );
    }
}

pub(super) fn b28(cx: &FiniteCtx, log: &mut CaseLog) {
    for (si, l) in cx.left_den() {
        let mrs = min_rs(&cx.an, si.set.members());
        let list = localized_mins(cx, si, l);
        let hyp = cx.an.semiprime
            && si.class.is_denominator()
            && mrs.iter().all(|&p| cx.an.reports[p].completely_prime)
            && list.iter().all(|&q| two_sided(&l.target, q));
        log.case(
            hyp,
            || cx.set_ctx(si),
            |cl| {
                let t = cx.target(l);
                cl.req(t.semiprime, "S⁻¹R is semiprime");
                cl.req(
                    sorted(list.clone()) == sorted(t.min_prime_sets()),
                    "min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}",
                );
                cl.req(
                    list.iter().all(|&q| completely_prime_in(&t, q)),
                    "each S⁻¹p is completely prime",
                );
                cl.req(
                    sorted(list.clone()).len() == list.len(),
                    "the S⁻¹p are distinct",
                );
                Ok(())
            },
        );
    }
}

// ------------------------------------------------------- normal elements

/// `I_min`: the least ideal modulo which every element of `S` is a unit.
fn i_min(cx: &FiniteCtx, s: ElementSet) -> ElementSet {
    let r = &cx.ring;
    cx.an
        .lattice
        .ideals
        .iter()
        .filter(|&&i| s.is_subset(&units_mod(r, i)))
        .fold(r.full_set(), |acc, i| acc.intersection(i))
}

pub(super) fn j10(cx: &FiniteCtx, log: &mut CaseLog) {
    for si in cx.sets.iter().filter(|s| s.normal) {
        log.case(
            true,
            || {
                vec![
                    ("S".into(), cx.fmt(si.set.members())),
                    ("I_min".into(), cx.fmt(i_min(cx, si.set.members()))),
                ]
            },
            |cl| {
                let l = localize_normal(&cx.ring, si.set.members())?;
                let a = l.ass.members();
                cl.req(!a.contains(cx.ring.one()), "ass(S) ≠ R");
                cl.req(
                    a == i_min(cx, si.set.members()),
                    "ass(S) is the least ideal modulo which S is invertible",
                );
                let img = l.sigma.image(si.set.members());
                let c = classify_members(&l.target, img);
                cl.req(c.is_denominator() && c.ass_l.len() == 1, "S̄ ∈ Den(R̄, 0)");
                Ok(())
            },
        );
    }
}

pub(super) fn a2oct(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    for si in cx.sets.iter().filter(|s| s.normal) {
        log.case(
            true,
            || vec![("S".into(), cx.fmt(si.set.members()))],
            |cl| {
                let l = localize_normal(r, si.set.members())?;
                let t = cx.target(&l);
                let a = l.ass.members();
                let over: Vec<ElementSet> = cx
                    .an
                    .min_primes_over(a)
                    .into_iter()
                    .map(|p| cx.an.set(p))
                    .collect();
                let images: Vec<ElementSet> = over.iter().map(|&p| l.localize_set(p)).collect();
                // (1)
                cl.req(
                    sorted(images.clone()).len() == images.len(),
                    "p ↦ S⁻¹p is injective on min(ass)",
                );
                cl.req(
                    images.iter().all(|&j| prime_in(&t, j)),
                    "each S⁻¹p is prime",
                );
                // (2) modulo the radical of R̄
                let (tilde, pi) = quotient_by_set(&l.target, t.radical)?;
                let ta = RingAnalysis::new(&tilde);
                let s_tilde = pi.image(l.sigma.image(si.set.members()));
                let c = classify_members(&tilde, s_tilde);
                cl.req(c.is_denominator() && c.ass_l.len() == 1, "S̃ ∈ Den(R̃, 0)");
                let reduced: Vec<ElementSet> = images.iter().map(|&j| pi.image(j)).collect();
                cl.req(
                    bijective_onto(&reduced, &ta.min_prime_sets()),
                    "min(ass) corresponds to min R̃",
                );
                // (3)
                for (&p, &j) in over.iter().zip(&images) {
                    cl.req_with(den_zero_mod(r, p, si.set.members(), true)?, || {
                        format!("S ∈ Den(R/p, 0) for p = {}", cx.fmt(p))
                    });
                    cl.req_with(residue_iso(&l, p, j), || {
                        format!("R/p ≅ S⁻¹R/S⁻¹p for p = {}", cx.fmt(p))
                    });
                }
                // (4)
                cl.req(
                    bijective_onto(&images, &t.min_prime_sets()),
                    "min(ass) maps bijectively onto min S⁻¹R",
                );
                let rad_a = over.iter().fold(r.full_set(), |acc, p| acc.intersection(p));
                cl.req(
                    l.localize_set(rad_a) == t.radical,
                    "the radical of S⁻¹R is S⁻¹ of the radical of ass",
                );
                Ok(())
            },
        );
    }
}

pub(super) fn a5oct(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    let normal = r.normal_elements();
    for (si, l) in cx.left_den() {
        log.case(
            si.normalizable,
            || cx.set_ctx(si),
            |cl| {
                let s = si.set.members().intersection(&normal);
                let set = MultSet::new(r, s)?;
                let c = classify_set(&set)?;
                cl.req(
                    c.left_den,
                    "the normal elements of S form a left denominator set",
                );
                cl.req(c.ass_l == si.class.ass_l, "they have the same kernel as S");
                let t = cx.target(l);
                let over: Vec<ElementSet> = cx
                    .an
                    .min_primes_over(l.ass.members())
                    .into_iter()
                    .map(|p| cx.an.set(p))
                    .collect();
                let images: Vec<ElementSet> = over.iter().map(|&p| l.localize_set(p)).collect();
                cl.req(
                    bijective_onto(&images, &t.min_prime_sets()),
                    "min(ass) maps bijectively onto min S⁻¹R",
                );
                Ok(())
            },
        );
    }
}

// ---------------------------------------------------------------- centre

fn with_rho(cx: &FiniteCtx, log: &mut CaseLog, f: impl FnOnce(&RestrictionMap, &mut CaseLog)) {
    match &cx.rho {
        Ok(rm) => f(rm, log),
        Err(e) => log.engine_error(e),
    }
}

pub(super) fn a25(cx: &FiniteCtx, log: &mut CaseLog) {
    with_rho(cx, log, |rm, log| {
        for q in rm.centre.prime_sets() {
            log.case(
                true,
                || {
                    vec![
                        ("q".into(), cx.cd.centre.fmt_set(q)),
                        ("in R".into(), cx.fmt(cx.cd.lift(q))),
                    ]
                },
                |cl| {
                    let c = central_localize(&cx.an, &cx.cd, q)?;
                    cl.req(c.in_image == c.extension_proper, "q ∈ im ρ iff R_q q ≠ R_q");
                    cl.req(
                        c.fibre_bijection,
                        "the fibre over q matches the primes of R_q over R_q q",
                    );
                    cl.req(
                        c.residue_bijection,
                        "those primes match the primes of R_q / R_q q",
                    );
                    if c.in_image {
                        cl.req(c.hit_by_min, "some minimal prime lies over q");
                    }
                    Ok(())
                },
            );
        }
    });
}

fn rho_criteria(cx: &FiniteCtx, log: &mut CaseLog, upto: usize, text: &str) {
    with_rho(cx, log, |rm, log| {
        let crit = check_rho_criteria(&cx.an, &cx.cd, rm);
        log.case(
            crit.is_some(),
            || vec![("criteria".into(), format!("{:?}", crit))],
            |cl| {
                let a = crit.map(|c| c.as_array()).unwrap_or_default();
                cl.req(a[..upto].iter().all(|&x| x == a[0]), text);
                Ok(())
            },
        );
    });
}

pub(super) fn ab25(cx: &FiniteCtx, log: &mut CaseLog) {
    rho_criteria(
        cx,
        log,
        3,
        "C_Z ⊆ C_R, C_Z avoids every minimal prime, ρ maps min R into min Z: all or none",
    );
}

pub(super) fn c25(cx: &FiniteCtx, log: &mut CaseLog) {
    rho_criteria(
        cx,
        log,
        3,
        "failure of one of the three conditions forces failure of the others",
    );
}

pub(super) fn b25(cx: &FiniteCtx, log: &mut CaseLog) {
    rho_criteria(cx, log, 4, "the four conditions on ρ agree");
}

pub(super) fn ac25(cx: &FiniteCtx, log: &mut CaseLog) {
    with_rho(cx, log, |rm, log| {
        let crit = check_rho_criteria(&cx.an, &cx.cd, rm);
        log.case(
            crit.is_some_and(|c| c.regular_centre_regular),
            Vec::new,
            |cl| {
                let v = check_pierce(&cx.an, &cx.cd, rm)?;
                cl.req(v.homomorphisms_ok, "each R → R_q is a ring homomorphism");
                cl.req(v.bijective, "R ≅ ∏ R_q over min Z");
                cl.req(
                    v.centre_componentwise,
                    "each R_q has a field as centre, the image of Z",
                );
                cl.req(v.factors_semiprime, "each R_q is semiprime");
                cl.req(
                    v.min_primes_localize,
                    "min R_q consists of the proper localized minimal primes",
                );
                Ok(())
            },
        );
    });
}

pub(super) fn a25_semiprime(cx: &FiniteCtx, log: &mut CaseLog) {
    with_rho(cx, log, |rm, log| {
        log.case(
            cx.an.semiprime,
            || vec![("centre".into(), cx.cd.centre.label().to_string())],
            |cl| {
                cl.req(rm.centre.semiprime, "the centre is semiprime");
                let img = rm.image();
                let hit = rm
                    .centre
                    .min_prime_sets()
                    .into_iter()
                    .filter(|q| img.contains(q))
                    .count();
                cl.req(hit <= cx.an.min_primes.len(), "|min Z ∩ im ρ| ≤ |min R|");
                Ok(())
            },
        );
    });
}

pub(super) fn spec_rzr(cx: &FiniteCtx, log: &mut CaseLog) {
    let za = RingAnalysis::new(&cx.cd.centre);
    for p in cx.an.prime_sets() {
        log.case(
            true,
            || {
                vec![
                    ("P".into(), cx.fmt(p)),
                    ("P ∩ Z".into(), cx.cd.centre.fmt_set(cx.cd.restrict(p))),
                ]
            },
            |cl| {
                cl.req(
                    prime_in(&za, cx.cd.restrict(p)),
                    "P ∩ Z is a prime of the centre",
                );
                Ok(())
            },
        );
    }
    ring_meta(cx, log);
}

// ---------------------------------------------------------- quotient rings

pub(super) fn j4(cx: &FiniteCtx, log: &mut CaseLog) {
    let r = &cx.ring;
    let units = r.units();
    let regular = r.regular_elements();
    log.case(
        true,
        || {
            vec![
                ("units".into(), cx.fmt(units)),
                ("regular".into(), cx.fmt(regular)),
            ]
        },
        |cl| {
            let c = classify_members(r, units);
            cl.req(
                c.left_den && c.ass_l.len() == 1,
                "the regular elements form a left denominator set with zero kernel",
            );
            let all_inside = cx
                .sets
                .iter()
                .filter(|s| s.class.left_ore && s.set.members().is_subset(&regular))
                .all(|s| s.set.members().is_subset(&units));
            cl.req(
                all_inside,
                "every left Ore set of regular elements lies in the largest one",
            );
            let set = MultSet::new(r, units)?;
            let l = localize_classified(&set, &c)?;
            cl.req(
                l.sigma.is_injective() && l.sigma.is_surjective(),
                "R → Q_l(R) is an isomorphism",
            );
            let fractions = ElementSet::from_elems(
                r.order(),
                units
                    .iter()
                    .flat_map(|s| units.iter().map(move |t| (s, t)))
                    .map(|(s, t)| {
                        let inv = r.inverse(s).unwrap_or(s);
                        r.mul(inv, t)
                    }),
            );
            cl.req(
                fractions == r.units(),
                "the units of Q_l(R) are the fractions s⁻¹t",
            );
            let q = &l.target;
            let qc = classify_members(q, q.units());
            let q2 = localize_classified(&MultSet::new(q, q.units())?, &qc)?;
            cl.req(
                q2.sigma.is_injective() && q2.sigma.is_surjective(),
                "Q_l(Q_l(R)) = Q_l(R)",
            );
            Ok(())
        },
    );
}
