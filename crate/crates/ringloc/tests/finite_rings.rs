use ringloc::finring::*;
use ringloc::ideals::*;
use ringloc::Error;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// M_2(F_2) ids: a + 2b + 4c + 8d for [[a, b], [c, d]]
const E11: usize = 1;
const E22: usize = 8;
// T_2(F_2) ids: a + 2b + 4c for [[a, b], [0, c]]
const T_E12: usize = 2;

#[test]
fn zmod_units_are_coprime_residues() {
    for n in 2..=16 {
        let r = zmod(n, 16).unwrap();
        let expected = ElementSet::from_elems(n, (0..n).filter(|&x| gcd(x, n) == 1));
        assert_eq!(r.units(), expected, "zmod({n})");
        assert_eq!(r.regular_elements(), expected);
    }
}

#[test]
fn field_tables() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = gf(q, 16).unwrap();
        assert_eq!(f.order(), q);
        assert_eq!(f.units().len(), q - 1, "gf({q})");
        assert!(f.is_commutative());
    }
    let f4 = gf(4, 16).unwrap();
    // characteristic 2
    assert!(f4.elements().all(|x| f4.add(x, x) == 0));
    assert!(matches!(gf(6, 16), Err(Error::InvalidArgument(_))));
}

#[test]
fn matrix_rings() {
    let f2 = gf(2, 16).unwrap();
    let m = matrix_ring(2, &f2, 16).unwrap();
    assert_eq!(m.order(), 16);
    assert_eq!(m.units().len(), 6); // |GL_2(F_2)|
    assert_eq!(m.centre_set().len(), 2);
    assert_eq!(m.mul(E11, E22), 0);
    assert_eq!(m.one(), E11 + E22);
    let t = upper_triangular(2, &f2, 16).unwrap();
    assert_eq!(t.order(), 8);
    assert_eq!(t.centre_set().len(), 2);
    assert_eq!(t.mul(T_E12, T_E12), 0);
    let f3 = gf(3, 16).unwrap();
    assert_eq!(
        upper_triangular(2, &f3, 16).unwrap_err(),
        Error::SizeLimit { order: 27, cap: 16 }
    );
    assert_eq!(upper_triangular(2, &f3, 27).unwrap().order(), 27);
    assert!(matrix_ring(2, &m, 64).is_err());
}

#[test]
fn products_and_centres() {
    let f2 = gf(2, 16).unwrap();
    let t = upper_triangular(2, &f2, 16).unwrap();
    let z3 = zmod(3, 16).unwrap();
    let p = product(&t, &z3, 64).unwrap();
    assert_eq!(p.order(), 24);
    assert_eq!(p.centre_set().len(), t.centre_set().len() * 3);
    assert_eq!(
        product(&t, &z3, 16).unwrap_err(),
        Error::SizeLimit { order: 24, cap: 16 }
    );
}

#[test]
fn quotient_of_zmod() {
    let r = zmod(12, 16).unwrap();
    let six = ideal_generated_by(&r, &[6], Side::Two).unwrap();
    let (q, pi) = make_quotient(&six).unwrap();
    assert_eq!(q.order(), 6);
    assert!(pi.verify());
    assert_eq!(pi.kernel(), six.members());
    // identical tables to zmod(6) because representatives are least ids
    let z6 = zmod(6, 16).unwrap();
    assert!(q.elements().all(|x| q
        .elements()
        .all(|y| q.mul(x, y) == z6.mul(x, y) && q.add(x, y) == z6.add(x, y))));
    assert_eq!(
        make_quotient(&Ideal::whole(&r)).unwrap_err(),
        Error::ImproperIdeal
    );
}

#[test]
fn corrupted_cell_fails_audit() {
    let r = zmod(6, 16).unwrap();
    let bad = r.with_corrupted_mul(2, 3, 1).unwrap();
    let err = bad.audit().unwrap_err();
    assert!(err.witness.iter().all(|&x| x < 6));
    assert!(r.audit().is_ok());
}

#[test]
fn zmod_ideals_are_divisors() {
    for n in 2..=16 {
        let r = zmod(n, 16).unwrap();
        let lat = IdealLattice::new(&r);
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(lat.len(), divisors.len(), "zmod({n})");
        for d in divisors {
            let multiples = ElementSet::from_elems(n, (0..n).filter(|x| x % d == 0));
            assert!(lat.index_of(multiples).is_some());
        }
    }
}

#[test]
fn ideal_arithmetic_examples() {
    let r = zmod(12, 16).unwrap();
    let two = ideal_generated_by(&r, &[2], Side::Two).unwrap();
    let three = ideal_generated_by(&r, &[3], Side::Two).unwrap();
    assert_eq!(
        ideal_product(&two, &three).unwrap().members(),
        ElementSet::from_elems(12, [0, 6])
    );
    assert_eq!(
        ideal_product(&two, &Ideal::zero(&r)).unwrap(),
        Ideal::zero(&r)
    );
    assert_eq!(
        ideal_intersection(&two, &three).unwrap().members(),
        ElementSet::from_elems(12, [0, 6])
    );
    assert_eq!(
        left_annihilator(&r, ElementSet::singleton(12, 4)).members(),
        ElementSet::from_elems(12, [0, 3, 6, 9])
    );
    assert!(left_annihilator(&r, ElementSet::singleton(12, 1)).is_zero());
    let f2 = gf(2, 16).unwrap();
    let t = upper_triangular(2, &f2, 16).unwrap();
    let j = ideal_generated_by(&t, &[T_E12], Side::Two).unwrap();
    assert_eq!(j.len(), 2);
    assert!(ideal_product(&j, &j).unwrap().is_zero());
    let other = zmod(12, 16).unwrap();
    let foreign = ideal_generated_by(&zmod(6, 16).unwrap(), &[2], Side::Two).unwrap();
    assert!(ideal_product(
        &ideal_generated_by(&other, &[2], Side::Two).unwrap(),
        &foreign
    )
    .is_err());
}

#[test]
fn classification_examples() {
    let f2 = gf(2, 16).unwrap();
    let m = matrix_ring(2, &f2, 16).unwrap();
    let rep = classify_ideal(&Ideal::zero(&m)).unwrap();
    assert!(rep.prime && !rep.completely_prime && rep.semiprime);
    let r = zmod(12, 16).unwrap();
    let two = ideal_generated_by(&r, &[2], Side::Two).unwrap();
    assert!(classify_ideal(&two).unwrap().completely_prime);
    let zero = classify_ideal(&Ideal::zero(&r)).unwrap();
    assert!(!zero.prime && !zero.semiprime);
}

#[test]
fn minimal_primes_and_radicals() {
    let r = zmod(12, 16).unwrap();
    let mins: Vec<ElementSet> = min_primes(&r).iter().map(|p| p.members()).collect();
    let evens = ElementSet::from_elems(12, (0..12).step_by(2));
    let threes = ElementSet::from_elems(12, (0..12).step_by(3));
    assert_eq!(mins.len(), 2);
    assert!(mins.contains(&evens) && mins.contains(&threes));
    assert_eq!(
        prime_radical(&r).unwrap().members(),
        ElementSet::from_elems(12, [0, 6])
    );
    assert!(!is_semiprime_ring(&r).unwrap());
    assert!(is_semiprime_ring(&zmod(6, 16).unwrap()).unwrap());
    let f2 = gf(2, 16).unwrap();
    let m = matrix_ring(2, &f2, 16).unwrap();
    assert_eq!(min_primes(&m), vec![Ideal::zero(&m)]);
    let t = upper_triangular(2, &f2, 16).unwrap();
    assert_eq!(
        prime_radical(&t).unwrap().members(),
        ElementSet::from_elems(8, [0, T_E12])
    );
    assert!(is_nilpotent_ideal(&prime_radical(&t).unwrap()));
    // minimal primes over (4) in zmod(12): only (2)
    let four = ideal_generated_by(&r, &[4], Side::Two).unwrap();
    let over: Vec<ElementSet> = min_primes_over(&four)
        .unwrap()
        .iter()
        .map(|p| p.members())
        .collect();
    assert_eq!(over, vec![evens]);
}

#[test]
fn prime_rich_exponents() {
    let r = zmod(12, 16).unwrap();
    let an = RingAnalysis::new(&r);
    let ev = an.prime_rich_evidence().unwrap();
    let zero = ev.iter().find(|e| e.ideal.len() == 1).unwrap();
    assert_eq!(zero.exponent, Some(2));
    assert_eq!(zero.min_prime_count, 2);
    let f2 = gf(2, 16).unwrap();
    let m = matrix_ring(2, &f2, 16).unwrap();
    let ev = RingAnalysis::new(&m).prime_rich_evidence().unwrap();
    assert_eq!(ev[0].exponent, Some(1));
    assert!(is_prime_rich(&r).unwrap());
}

#[test]
fn irredundance() {
    let r = zmod(6, 16).unwrap();
    let two = ElementSet::from_elems(6, [0, 2, 4]);
    let three = ElementSet::from_elems(6, [0, 3]);
    let zero = r.zero_set();
    assert!(is_irredundant(&r, &[two, three]));
    assert!(!is_irredundant(&r, &[two, three, zero]));
    let f5 = gf(5, 16).unwrap();
    assert!(is_irredundant(&f5, &[f5.zero_set()]));
}

#[test]
fn strongly_nilpotent_matches_radical_on_small_rings() {
    let f2 = gf(2, 16).unwrap();
    let rings = vec![
        zmod(8, 16).unwrap(),
        zmod(12, 16).unwrap(),
        upper_triangular(2, &f2, 16).unwrap(),
        matrix_ring(2, &f2, 16).unwrap(),
    ];
    for r in rings {
        let an = RingAnalysis::new(&r);
        assert_eq!(strongly_nilpotent_set(&r), an.radical, "{}", r.label());
    }
}
