use proptest::prelude::*;
use ringloc::monomial::an::*;
use ringloc::monomial::comm::*;
use ringloc::Error;

fn ring(n: usize, gens: &[&[u32]]) -> CommMonomialRing {
    CommMonomialRing::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

fn covers(r: &CommMonomialRing) -> Vec<u64> {
    min_primes_monomial(r)
        .unwrap()
        .into_iter()
        .map(|p| p.vars)
        .collect()
}

// Cover oracle written independently of the library: enumerate subsets in
// increasing size and keep those that hit every support and contain no
// smaller cover already found.
fn oracle_covers(n: usize, supports: &[u64]) -> Vec<u64> {
    let mut subsets: Vec<u64> = (0..1u64 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut found: Vec<u64> = Vec::new();
    for s in subsets {
        if supports.iter().all(|e| e & s != 0) && !found.iter().any(|f| f & s == *f) {
            found.push(s);
        }
    }
    found
}

#[test]
fn minimal_covers_examples() {
    // (yz) in k[y, z]
    assert_eq!(covers(&ring(2, &[&[1, 1]])), vec![0b01, 0b10]);
    // zero ideal: a domain
    assert_eq!(covers(&ring(3, &[])), vec![0]);
    // (x1 z1, x2 z2) in k[x1, z1, x2, z2]
    let r = ring(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    assert_eq!(covers(&r).len(), 4);
    assert_eq!(covers(&r), oracle_covers(4, &r.supports()));
    assert_eq!(
        min_primes_monomial(&ring(2, &[&[0, 0]])).unwrap_err(),
        Error::UnitIdeal
    );
}

#[test]
fn generators_are_minimized() {
    let r = ring(2, &[&[2, 1], &[1, 0], &[1, 0]]);
    assert_eq!(r.gens, vec![vec![1, 0]]);
    assert!(CommMonomialRing::new(2, vec![vec![1]]).is_err());
}

#[test]
fn saturation_examples() {
    // (y²z, yz²) : y^∞ = (z)
    let r = ring(2, &[&[2, 1], &[1, 2]]);
    assert_eq!(saturate_monomial(&r, 0b01).unwrap().gens, vec![vec![0, 1]]);
    assert_eq!(saturation_mismatch(&r, 0b01), None);
    let yz = ring(2, &[&[1, 1]]);
    assert_eq!(saturate_monomial(&yz, 0b01).unwrap().gens, vec![vec![0, 1]]);
    assert_eq!(saturate_monomial(&r, 0).unwrap(), r);
    assert_eq!(
        saturate_monomial(&ring(2, &[&[1, 0]]), 0b01).unwrap_err(),
        Error::CollapsedLocalization
    );
}

#[test]
fn localization_examples() {
    // k[u, y, z]/(yz) with u inverted
    let r = ring(3, &[&[0, 1, 1]]);
    let l = localize_monomial(&r, 0b001).unwrap();
    assert!(l.regular && l.bijective);
    assert_eq!(l.count_preserved, Some(true));
    let mins: Vec<u64> = l.localized_min.iter().map(|p| p.vars).collect();
    assert_eq!(mins, vec![0b010, 0b100]);
    // k[y, z]/(yz) with y inverted: kernel (z), one prime
    let r = ring(2, &[&[1, 1]]);
    let l = localize_monomial(&r, 0b01).unwrap();
    assert!(!l.regular && l.bijective);
    assert_eq!(l.saturation.gens, vec![vec![0, 1]]);
    assert_eq!(l.min_ass.len(), 1);
    assert_eq!(l.localized_min.len(), 1);
    let id = localize_monomial(&r, 0).unwrap();
    assert_eq!(id.saturation, r);
    assert!(id.bijective);
}

#[test]
fn regular_variables_via_colon() {
    // (x², xy): y is a zero divisor though no minimal cover contains it
    let r = ring(2, &[&[2, 0], &[1, 1]]);
    assert_eq!(covers(&r), vec![0b01]);
    assert!(!is_regular_variable(&r, 1));
    assert!(is_regular_variable(&ring(3, &[&[0, 1, 1]]), 0));
}

#[test]
fn radical_detection() {
    let r = ring(2, &[&[2, 0], &[1, 1]]);
    assert!(!r.is_squarefree());
    assert_eq!(radical_witness(&r).unwrap(), Some(vec![1, 0]));
    assert_eq!(r.radical().gens, vec![vec![1, 0]]);
    assert_eq!(radical_witness(&ring(2, &[&[1, 1]])).unwrap(), None);
}

#[test]
fn monomial_enumeration_count() {
    // C(n + d, d) monomials of degree ≤ d in n variables
    let r = ring(3, &[]);
    assert_eq!(r.monomials_up_to(4).len(), 35);
    let r = ring(2, &[]);
    assert_eq!(r.monomials_up_to(6).len(), 28);
}

fn ideal_strategy() -> impl Strategy<Value = CommMonomialRing> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=2, n), 0..=4)
            .prop_filter("proper", |gens| {
                gens.iter().all(|g| g.iter().any(|&x| x > 0))
            })
            .prop_map(move |gens| CommMonomialRing::new(n, gens).unwrap())
    })
}

proptest! {
    #[test]
    fn covers_match_brute_force(r in ideal_strategy()) {
        let expected = oracle_covers(r.n, &r.supports());
        prop_assert_eq!(covers(&r), expected.clone());
        prop_assert_eq!(min_covers_brute(r.all_vars(), &r.supports()), expected);
    }

    #[test]
    fn saturation_matches_definition(r in ideal_strategy(), v in 0u64..16) {
        let v = v & r.all_vars();
        prop_assert_eq!(saturation_mismatch(&r, v), None);
    }

    #[test]
    fn radical_iff_squarefree(r in ideal_strategy()) {
        prop_assert_eq!(radical_witness(&r).unwrap().is_none(), r.is_squarefree());
    }

    #[test]
    fn saturation_and_radical_commute(r in ideal_strategy(), v in 0u64..16) {
        let v = v & r.all_vars();
        if saturate_monomial(&r, v).is_ok() {
            prop_assert!(saturation_commutes_with_radical(&r, v).unwrap());
            prop_assert!(localize_monomial(&r, v).unwrap().bijective);
        }
    }
}

#[test]
fn an_multiplication() {
    let a = an_build(2, 6).unwrap();
    let x1 = a.x(0);
    let z1 = a.z(0);
    let x2 = a.x(1);
    match a.multiply(&x1, &z1) {
        Product::Monomial(m) => assert!(m.is_zero),
        other => panic!("{other:?}"),
    }
    let zx = a.multiply(&z1, &x2);
    let xz = a.multiply(&x2, &z1);
    assert_eq!(zx, xz);
    assert!(matches!(zx, Product::Monomial(ref m) if !m.is_zero));
    assert_eq!(a.multiply(&a.one(), &x1), Product::Monomial(x1.clone()));
    let big = a.monomial(vec![0, 1, 0, 1], vec![0, 0]);
    assert_eq!(a.multiply(&big, &big), Product::Truncated { degree: 8 });
    assert!(an_build(5, 4).is_err());
    assert!(an_build(2, 9).is_err());
}

#[test]
fn an_monomial_counts() {
    // nonzero normal forms of A_1 in degree ≤ d: 1 + 2d (x^k or z^k)
    let a = an_build(1, 6).unwrap();
    assert_eq!(a.monomials(6).len(), 13);
    // A_2 in degree ≤ 2: 1, x1, x2, z1, z2, four words of length 2,
    // z1², z2², z1z2, x1z2, x2z1
    let a = an_build(2, 6).unwrap();
    assert_eq!(a.monomials(2).len(), 14);
}

#[test]
fn an_prime_lists() {
    assert_eq!(an_min_primes(&an_build(0, 4).unwrap()), vec![0]);
    assert_eq!(an_min_primes(&an_build(1, 6).unwrap()).len(), 2);
    assert_eq!(an_min_primes(&an_build(2, 6).unwrap()).len(), 4);
    let a = an_build(1, 6).unwrap();
    // p_∅ = (z1), p_{1} = (x1)
    assert!(a.in_prime(0, &a.z(0)) && !a.in_prime(0, &a.x(0)));
    assert!(a.in_prime(1, &a.x(0)) && !a.in_prime(1, &a.z(0)));
}

#[test]
fn an_associativity() {
    for n in 1..=3 {
        let a = an_build(n, default_degree(n)).unwrap();
        assert!(associativity_failures(&a, 10_000, 7).is_empty());
    }
}

#[test]
fn an_structure_clauses_that_hold() {
    for n in 1..=3 {
        let a = an_build(n, default_degree(n)).unwrap();
        let rep = an_verify(&a);
        for id in ["i", "ii", "iii"] {
            assert!(
                rep.clause(id).unwrap().passed,
                "n={n} clause {id}: {}",
                rep.clause(id).unwrap().detail
            );
        }
    }
}

#[test]
fn centre_of_a1_is_everything() {
    // A_1 = k[x, z]/(xz) is commutative
    let a = an_build(1, 6).unwrap();
    let cs = centre_scan(&a);
    assert_eq!(cs.basis.len(), a.monomials(5).len());
    assert!(!an_verify(&a).clause("iv").unwrap().passed);
}

#[test]
fn centre_of_a2_contains_x1_z2() {
    let a = an_build(2, 6).unwrap();
    let cs = centre_scan(&a);
    let x1z2 = a.monomial(vec![0], vec![0, 1]);
    assert!(cs.basis.iter().any(|p| p.len() == 1 && p.contains(&x1z2)));
}

#[test]
fn two_free_letters_restore_the_polynomial_centre() {
    for n in 1..=3 {
        let a = AnAlgebra::new(n, 2, default_degree(n)).unwrap();
        let rep = an_verify(&a);
        assert!(
            rep.passed(),
            "n={n}: {:?}",
            rep.clauses.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
    }
}

#[test]
fn an_localization() {
    let a = an_build(1, 6).unwrap();
    let l = an_localize_normal(&a, 0b1).unwrap();
    assert!(l.passed());
    assert_eq!(l.min_ass, vec![0b1]);
    assert_eq!(l.localized_primes, vec![0]);
    for n in 1..=3usize {
        let a = an_build(n, default_degree(n)).unwrap();
        for v in 1..1u64 << n {
            let l = an_localize_normal(&a, v).unwrap();
            assert!(l.passed(), "n={n} V={v:b}: {l:?}");
            assert_eq!(l.min_ass.len(), 1 << (n - v.count_ones() as usize));
        }
    }
    assert!(an_localize_normal(&a, 0).is_err());
}
