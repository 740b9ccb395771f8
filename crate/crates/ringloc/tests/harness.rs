use std::collections::BTreeMap;

use ringloc::harness::*;

fn corpus(max_order: usize) -> Vec<Instance> {
    build_corpus(&CorpusConfig {
        max_order,
        ..Default::default()
    })
    .unwrap()
}

fn finite_recipes(c: &[Instance]) -> Vec<String> {
    c.iter()
        .filter(|i| i.is_finite())
        .map(|i| i.provenance.recipe.clone())
        .collect()
}

/// The cap-6 finite corpus, frozen.
const CAP6: [&str; 32] = [
    "zmod(2)",
    "zmod(3)",
    "zmod(4)",
    "quot(zmod(4), gens=[2])",
    "zmod(5)",
    "zmod(6)",
    "quot(zmod(6), gens=[3])",
    "quot(zmod(6), gens=[2])",
    "gf(2)",
    "gf(3)",
    "gf(4)",
    "prod(zmod(2), zmod(2))",
    "quot(prod(zmod(2), zmod(2)), gens=[1])",
    "quot(prod(zmod(2), zmod(2)), gens=[2])",
    "prod(zmod(2), zmod(3))",
    "quot(prod(zmod(2), zmod(3)), gens=[3])",
    "quot(prod(zmod(2), zmod(3)), gens=[1])",
    "prod(zmod(2), gf(2))",
    "quot(prod(zmod(2), gf(2)), gens=[1])",
    "quot(prod(zmod(2), gf(2)), gens=[2])",
    "prod(zmod(2), gf(3))",
    "quot(prod(zmod(2), gf(3)), gens=[3])",
    "quot(prod(zmod(2), gf(3)), gens=[1])",
    "prod(zmod(3), gf(2))",
    "quot(prod(zmod(3), gf(2)), gens=[1])",
    "quot(prod(zmod(3), gf(2)), gens=[2])",
    "prod(gf(2), gf(2))",
    "quot(prod(gf(2), gf(2)), gens=[1])",
    "quot(prod(gf(2), gf(2)), gens=[2])",
    "prod(gf(2), gf(3))",
    "quot(prod(gf(2), gf(3)), gens=[3])",
    "quot(prod(gf(2), gf(3)), gens=[1])",
];

fn divisors(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

#[test]
fn cap6_corpus_is_frozen() {
    let c = corpus(6);
    assert_eq!(finite_recipes(&c), CAP6);
}

#[test]
fn cap6_corpus_matches_counting_oracle() {
    // Atoms of order ≤ 6 with their number of ideals; products of fields and
    // Z/n have product ideal lattices, and each base contributes its proper
    // nonzero ideals as quotients.
    let atoms: Vec<(String, usize, usize)> = (2..=6)
        .map(|n| (format!("zmod({n})"), n, divisors(n)))
        .chain([2, 3, 4].map(|q| (format!("gf({q})"), q, 2)))
        .collect();
    let mut want: BTreeMap<String, usize> = BTreeMap::new();
    for (i, (a, oa, ia)) in atoms.iter().enumerate() {
        want.insert(a.clone(), ia - 2);
        for (b, ob, ib) in &atoms[i..] {
            if oa * ob <= 6 {
                want.insert(format!("prod({a}, {b})"), ia * ib - 2);
            }
        }
    }
    let c = corpus(6);
    let mut got: BTreeMap<String, usize> = BTreeMap::new();
    for inst in c.iter().filter(|i| i.is_finite()) {
        let r = &inst.provenance.recipe;
        match r.strip_prefix("quot(") {
            Some(rest) => {
                let base = &rest[..rest.rfind(", gens=").unwrap()];
                *got.get_mut(base).expect("base listed before its quotients") += 1;
            }
            None => {
                got.insert(r.clone(), 0);
            }
        }
    }
    assert_eq!(got, want);
}

#[test]
fn quotient_orders_in_corpus() {
    for inst in corpus(12) {
        let InstanceKind::Finite(r) = &inst.kind else {
            continue;
        };
        let e: ringloc::dsl::RingExpr = inst.provenance.recipe.parse().unwrap();
        if let ringloc::dsl::RingExpr::Quot(base, gens) = &e {
            let b = ringloc::dsl::eval(base, 64).unwrap().finite().unwrap();
            assert!(
                r.order() > 1 && r.order() < b.order() && b.order().is_multiple_of(r.order()),
                "{}",
                inst.provenance.recipe
            );
            if let ringloc::dsl::RingExpr::Zmod(n) = **base {
                let g = gens.iter().fold(n, |acc, &x| gcd(acc, x));
                assert_eq!(r.order(), g, "{}", inst.provenance.recipe);
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn default_corpus_shape() {
    let c = corpus(16);
    let finite = c.iter().filter(|i| i.is_finite()).count();
    let comm = c
        .iter()
        .filter(|i| matches!(i.kind, InstanceKind::Comm(_)))
        .count();
    let an = c
        .iter()
        .filter(|i| matches!(i.kind, InstanceKind::An(_)))
        .count();
    assert!(finite >= 60, "{finite}");
    // antichains of nonempty subsets of {1..n}: Dedekind numbers 3, 6, 20 less one,
    // plus five ideals that are not radical
    assert_eq!(comm, 2 + 5 + 19 + 5);
    assert_eq!(an, 6);
    let mut recipes: Vec<&str> = c.iter().map(|i| i.provenance.recipe.as_str()).collect();
    recipes.sort();
    recipes.dedup();
    assert_eq!(recipes.len(), c.len(), "recipes are unique");
}

#[test]
fn corpus_config_errors() {
    let bad = |cfg: CorpusConfig| build_corpus(&cfg).unwrap_err();
    assert!(matches!(
        bad(CorpusConfig {
            max_order: 1,
            ..Default::default()
        }),
        ringloc::Error::InvalidArgument(_)
    ));
    assert!(matches!(
        bad(CorpusConfig {
            max_order: 65,
            ..Default::default()
        }),
        ringloc::Error::InvalidArgument(_)
    ));
    assert!(matches!(
        bad(CorpusConfig {
            allow: vec!["zmod".into(), "poly".into()],
            ..Default::default()
        }),
        ringloc::Error::InvalidArgument(_)
    ));
    assert!(build_corpus(&CorpusConfig {
        allow: vec![],
        include_fault: true,
        ..Default::default()
    })
    .unwrap()
    .is_empty());
    let only_zmod = build_corpus(&CorpusConfig {
        allow: vec!["zmod".into()],
        ..Default::default()
    })
    .unwrap();
    assert_eq!(only_zmod.len(), 15);
    assert!(only_zmod
        .iter()
        .all(|i| i.provenance.recipe.starts_with("zmod(")));
}

#[test]
fn suite_is_independent_of_job_count() {
    let c = corpus(8);
    let a = run_suite(&c, &Selection::all(), 1).unwrap();
    let b = run_suite(&c, &Selection::all(), 4).unwrap();
    assert_eq!(a.to_json(0, 8, false), b.to_json(0, 8, false));
    assert_eq!(a.to_text(false), b.to_text(false));
}

fn fault_report() -> SuiteReport {
    let c = build_corpus(&CorpusConfig {
        max_order: 6,
        include_fault: true,
        ..Default::default()
    })
    .unwrap();
    run_suite(&c, &Selection::parse("finite").unwrap(), 2).unwrap()
}

#[test]
fn injected_fault_yields_exactly_one_counterexample() {
    let rep = fault_report();
    assert_eq!(rep.counterexample_count(), 1);
    let audit = rep.get("ring-axioms").unwrap();
    assert_eq!(audit.counterexamples.len(), 1);
    let cx = &audit.counterexamples[0];
    assert_eq!(cx.provenance.recipe, "zmod(6)");
    assert_eq!(
        cx.provenance.fault,
        Some(Fault {
            x: 2,
            y: 3,
            value: 1
        })
    );
    assert!(rep
        .to_text(false)
        .contains("ring-axioms: 1 counterexample(s)"));
}

#[test]
fn witness_survives_json_and_rebuilds() {
    let rep = fault_report();
    let cx = &rep.get("ring-axioms").unwrap().counterexamples[0];
    let json = serde_json::to_string(cx).unwrap();
    let back: Counterexample = serde_json::from_str(&json).unwrap();
    assert_eq!(&back, cx);
    let inst = Instance::rebuild(&back.provenance).unwrap();
    let InstanceKind::Finite(r) = &inst.kind else {
        panic!()
    };
    assert!(r.audit().is_err());
    for x in 0..6 {
        for y in 0..6 {
            let want = if (x, y) == (2, 3) { 1 } else { x * y % 6 };
            assert_eq!(r.mul(x, y), want, "{x}·{y}");
            assert_eq!(r.add(x, y), (x + y) % 6);
        }
    }
}

#[test]
fn machine_output_fields() {
    let rep = fault_report();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json(7, 6, false)).unwrap();
    let keys = |v: &serde_json::Value| {
        let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    assert_eq!(keys(&v), ["instances", "max_order", "reports", "seed"]);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["max_order"], 6);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), registry().len());
    let audit = &reports[0];
    assert_eq!(
        keys(audit),
        [
            "applicable",
            "considered",
            "counterexamples",
            "finite_applicable",
            "monomial_applicable",
            "not_applicable",
            "note",
            "passed",
            "substantive",
            "theorem_id",
            "title",
            "track"
        ]
    );
    assert_eq!(audit["track"], "finite");
    let cx = &audit["counterexamples"][0];
    assert_eq!(keys(cx), ["clause", "context", "provenance"]);
    assert_eq!(cx["provenance"]["fault"]["value"], 1);
    let timed: serde_json::Value = serde_json::from_str(&rep.to_json(7, 6, true)).unwrap();
    assert!(timed["reports"][0]["wall_time_ms"].is_number());
    assert!(reports.iter().all(|r| r.get("wall_time_ms").is_none()));
}

#[test]
fn explain_renderings() {
    let rep = fault_report();
    let audit = rep.get("ring-axioms").unwrap();
    let text = explain(audit, 0).unwrap();
    for needle in [
        "check      ring-axioms",
        "instance   zmod(6)",
        "fault      mul[2][3] := 1",
        "failed     ring axiom audit failed",
        "audit      ",
    ] {
        assert!(text.contains(needle), "{needle} missing from\n{text}");
    }
    assert!(explain(audit, 1).is_err());
    let clean = rep.get("A11Sep23").unwrap();
    assert_eq!(explain(clean, 0).unwrap(), "A11Sep23: no counterexamples");
}

#[test]
fn selection_parsing() {
    assert_eq!(Selection::parse("all").unwrap(), Selection::all());
    let f = Selection::parse("finite").unwrap();
    assert!(f.finite && !f.monomial);
    let s = Selection::parse(" A11Sep23, 4Jul10 ,A11Sep23").unwrap();
    assert_eq!(s.ids, ["A11Sep23", "4Jul10"]);
    assert!(Selection::parse("A11Sep23,nope").is_err());
    assert!(Selection::parse(",").is_err());
    assert!(Selection::parse("").is_err());
}

#[test]
fn semiprime_localization_on_zmod6() {
    let c: Vec<Instance> = corpus(6)
        .into_iter()
        .filter(|i| i.provenance.recipe == "zmod(6)")
        .collect();
    let rep = run_suite(
        &c,
        &Selection::parse("A10Sep23,28Sep23,b10Sep23").unwrap(),
        1,
    )
    .unwrap();
    for r in &rep.reports {
        assert!(r.applicable > 0 && r.is_clean(), "{r:?}");
    }
}

#[test]
fn monomial_normal_localization_passes() {
    let c: Vec<Instance> = corpus(2).into_iter().filter(|i| !i.is_finite()).collect();
    let rep = run_suite(
        &c,
        &Selection::parse("A2Oct23,10Jan19,a28Sep23,c10Sep23").unwrap(),
        2,
    )
    .unwrap();
    for r in &rep.reports {
        assert!(r.monomial_applicable > 0, "{}", r.theorem_id);
        assert!(r.is_clean(), "{:?}", r.counterexamples.first());
    }
}

#[test]
fn every_statement_is_exercised_on_its_substantive_track() {
    let rep = run_suite(&corpus(16), &Selection::all(), 4).unwrap();
    for id in IN_SCOPE {
        let r = rep.get(id).unwrap();
        let (f, m) = (r.finite_applicable, r.monomial_applicable);
        let ok = match r.substantive {
            Track::Finite => f > 0,
            Track::Monomial => m > 0,
            Track::Both => f > 0 && m > 0,
        };
        assert!(ok, "{id}: finite {f}, monomial {m}");
        if id != "b29Sep23" {
            assert!(r.is_clean(), "{id}: {:?}", r.counterexamples.first());
        }
    }
}
