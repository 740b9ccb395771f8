use proptest::prelude::*;
use ringloc::dsl::{eval, parse_ring_expr, render, Evaluated, RingExpr};
use ringloc::finring::MAX_ORDER;
use ringloc::Error;

mod common;
use common::ROUND_TRIP;

#[test]
fn fifty_expression_round_trip() {
    for text in ROUND_TRIP {
        let e = parse_ring_expr(text).unwrap_or_else(|err| panic!("{text}: {err}"));
        let printed = render(&e);
        let again = parse_ring_expr(&printed).unwrap();
        assert_eq!(again, e, "{text} → {printed}");
        assert_eq!(render(&again), printed);
    }
}

#[test]
fn spec_examples_parse() {
    assert_eq!(parse_ring_expr("zmod(12)").unwrap(), RingExpr::Zmod(12));
    assert_eq!(
        parse_ring_expr("quot(zmod(12), gens=[6])").unwrap(),
        RingExpr::Quot(Box::new(RingExpr::Zmod(12)), vec![6])
    );
    assert_eq!(
        parse_ring_expr("mono(vars=2, gens=[v1*v2])").unwrap(),
        RingExpr::Mono {
            vars: 2,
            gens: vec![vec![1, 1]]
        }
    );
    // exponents add up when a variable repeats
    assert_eq!(
        parse_ring_expr("mono(vars=2, gens=[v1*v1^2])").unwrap(),
        RingExpr::Mono {
            vars: 2,
            gens: vec![vec![3, 0]]
        }
    );
}

fn err(text: &str) -> (usize, usize, String) {
    let e = parse_ring_expr(text).unwrap_err();
    (e.line, e.column, e.expected)
}

#[test]
fn parse_error_positions() {
    assert_eq!(err("zmod(").0..=err("zmod(").1, 1..=6);
    let (l, c, _) = err("prod(zmod(2),\n  foo(3))");
    assert_eq!((l, c), (2, 3));
    let (l, c, exp) = err("quot(zmod(12), gens=[6)");
    assert_eq!((l, c), (1, 23));
    assert!(exp.contains(']'), "{exp}");
    // wrong arity is reported at the constructor
    let (l, c, exp) = err("  zmod(2, 3)");
    assert_eq!((l, c), (1, 3));
    assert!(exp.starts_with("zmod("), "{exp}");
    let (_, c, _) = err("mono(vars=2, gens=[v3])");
    assert_eq!(c, 14);
    let (_, c, _) = err("zmod(12) extra");
    assert_eq!(c, 10);
    let (_, c, _) = err("zmod(1 $ 2)");
    assert_eq!(c, 8);
    // every reported position lies inside the text or just past its end
    for text in [
        "",
        "(",
        "zmod",
        "gf(x)",
        "mat(2)",
        "an(k=2)",
        "quot(zmod(4), gens=[v1])",
    ] {
        let e = parse_ring_expr(text).unwrap_err();
        let line_len = text
            .lines()
            .nth(e.line - 1)
            .map(|l| l.chars().count())
            .unwrap_or(0);
        assert!(e.column <= line_len + 1, "{text}: {e}");
    }
}

fn order_of(text: &str) -> usize {
    eval(&parse_ring_expr(text).unwrap(), MAX_ORDER)
        .unwrap()
        .finite()
        .unwrap()
        .order()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn evaluation_orders() {
    // Z/12 / (6) ≅ Z/6
    assert_eq!(order_of("quot(zmod(12), gens=[6])"), 6);
    assert_eq!(order_of("quot(zmod(12), gens=[4, 6])"), 2);
    assert_eq!(order_of("mat(2, gf(2))"), 16);
    assert_eq!(order_of("tri(2, gf(3))"), 27);
    assert_eq!(order_of("prod(gf(4), zmod(3))"), 12);
    assert_eq!(order_of("prod(tri(2, gf(2)), zmod(2))"), 16);
    match eval(
        &parse_ring_expr("mono(vars=2, gens=[v1*v2])").unwrap(),
        MAX_ORDER,
    )
    .unwrap()
    {
        Evaluated::Comm(c) => assert_eq!(c.gens, vec![vec![1, 1]]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn evaluation_errors() {
    let e = |t: &str| eval(&parse_ring_expr(t).unwrap(), 16).unwrap_err();
    assert!(matches!(e("zmod(17)"), Error::SizeLimit { .. }));
    assert!(matches!(e("mat(2, gf(3))"), Error::SizeLimit { .. }));
    assert!(matches!(
        e("gf(6)"),
        Error::InvalidOrder(6) | Error::InvalidArgument(_)
    ));
    assert_eq!(e("quot(zmod(4), gens=[9])"), Error::ElementOutOfRange(9));
    assert!(matches!(e("prod(an(n=1), zmod(2))"), Error::Unsupported(_)));
}

fn expr_strategy() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2usize..40).prop_map(RingExpr::Zmod),
        prop::sample::select(vec![2usize, 3, 4, 5, 7, 8, 9]).prop_map(RingExpr::Gf),
        (
            1usize..4,
            prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..3)
        )
            .prop_map(|(n, gens)| RingExpr::Mono {
                vars: n,
                gens: gens.into_iter().map(|g| g[..n].to_vec()).collect()
            }),
        (0usize..4, 0usize..3, prop::option::of(1u32..8))
            .prop_map(|(n, extra, degree)| RingExpr::An { n, extra, degree }),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (1usize..4, inner.clone()).prop_map(|(k, e)| RingExpr::Mat(k, Box::new(e))),
            (1usize..4, inner.clone()).prop_map(|(k, e)| RingExpr::Tri(k, Box::new(e))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| RingExpr::Prod(Box::new(a), Box::new(b))),
            (inner, prop::collection::vec(0usize..20, 0..4))
                .prop_map(|(e, g)| RingExpr::Quot(Box::new(e), g)),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(e in expr_strategy()) {
        prop_assert_eq!(parse_ring_expr(&render(&e)).unwrap(), e);
    }

    #[test]
    fn cyclic_quotient_orders(n in 2usize..=40, g in 0usize..40) {
        let g = g % n;
        let want = if g == 0 { n } else { gcd(n, g) };
        let text = format!("quot(zmod({n}), gens=[{g}])");
        if want == 1 {
            // the zero ring is not built
            let r = eval(&parse_ring_expr(&text).unwrap(), MAX_ORDER);
            prop_assert!(matches!(r, Err(Error::ImproperIdeal)));
        } else {
            prop_assert_eq!(order_of(&text), want);
        }
    }
}
