use proptest::prelude::*;
use ringloc::centre::*;
use ringloc::finring::*;
use ringloc::ideals::*;
use ringloc::localization::*;
use ringloc::Error;

// T_2(F_2): [[a, b], [0, c]] has id a + 2b + 4c
const T_E11: usize = 1;
const T_E12: usize = 2;
const T_E22: usize = 4;

fn set(n: usize, xs: &[usize]) -> ElementSet {
    ElementSet::from_elems(n, xs.iter().copied())
}

fn small_rings() -> Vec<Ring> {
    let f2 = gf(2, 16).unwrap();
    let t = upper_triangular(2, &f2, 16).unwrap();
    vec![
        zmod(4, 16).unwrap(),
        zmod(6, 16).unwrap(),
        zmod(8, 16).unwrap(),
        zmod(12, 16).unwrap(),
        gf(4, 16).unwrap(),
        t.clone(),
        product(&t, &f2, 16).unwrap(),
        product(&zmod(2, 16).unwrap(), &zmod(4, 16).unwrap(), 16).unwrap(),
    ]
}

#[test]
fn mult_set_validation() {
    let r = zmod(12, 16).unwrap();
    assert!(MultSet::new(&r, set(12, &[1, 4])).is_ok());
    assert!(MultSet::new(&r, set(12, &[1, 2])).is_err());
    assert!(MultSet::new(&r, set(12, &[4])).is_err());
    match close_multiplicative(&r, set(12, &[4, 3])) {
        Err(Error::ZeroInClosure { .. }) => {}
        other => panic!("expected zero in closure, got {other:?}"),
    }
    assert_eq!(
        close_multiplicative(&r, set(12, &[2])).unwrap().members(),
        set(12, &[1, 2, 4, 8])
    );
}

#[test]
fn inverting_two_in_z12_gives_z3() {
    let r = zmod(12, 16).unwrap();
    let s = MultSet::new(&r, set(12, &[1, 4])).unwrap();
    let l = localize(&s).unwrap();
    assert_eq!(l.ass.members(), set(12, &[0, 3, 6, 9]));
    assert_eq!(l.target.order(), 3);
    assert!(l.sigma.verify());
    let n = localize_normal(&r, set(12, &[2])).unwrap();
    assert_eq!(n.ass.members(), set(12, &[0, 3, 6, 9]));
    assert_eq!(n.kind, LocKind::NormalLocalizable);
}

#[test]
fn one_sided_denominator_sets_in_t2() {
    let f2 = gf(2, 16).unwrap();
    let t = upper_triangular(2, &f2, 16).unwrap();
    let one = t.one();
    let c22 = classify_members(&t, set(8, &[one, T_E22]));
    assert!(c22.left_den && !c22.right_ore);
    assert_eq!(c22.ass_l, set(8, &[0, T_E11, T_E12, T_E11 + T_E12]));
    let c11 = classify_members(&t, set(8, &[one, T_E11]));
    assert!(!c11.left_den && c11.right_den);
    assert_eq!(c11.ass_r, set(8, &[0, T_E12, T_E22, T_E12 + T_E22]));
    let s11 = MultSet::new(&t, set(8, &[one, T_E11])).unwrap();
    assert!(matches!(localize(&s11), Err(Error::NotDenominator(_))));
}

#[test]
fn units_mod_and_t_l() {
    let r = zmod(12, 16).unwrap();
    assert_eq!(units_mod(&r, set(12, &[0, 6])), set(12, &[1, 5, 7, 11]));
    let two = ideal_generated_by(&r, &[2], Side::Two).unwrap();
    assert_eq!(
        t_l(&r, &two).unwrap().members(),
        set(12, &[1, 3, 5, 7, 9, 11])
    );
    let four = ideal_generated_by(&r, &[4], Side::Two).unwrap();
    assert_eq!(t_l(&r, &four).unwrap_err(), Error::NotPrime);
    assert_eq!(largest_regular_set(&r).members(), r.units());
    let a = ideal_generated_by(&r, &[3], Side::Two).unwrap();
    let big = largest_set_assoc(&r, &a, &MultSetBudget::default()).unwrap();
    assert_eq!(big.members(), set(12, &[1, 2, 4, 5, 7, 8, 10, 11]));
    let six = ideal_generated_by(&r, &[6], Side::Two).unwrap();
    assert_eq!(
        largest_set_assoc(&r, &six, &MultSetBudget::default()).unwrap_err(),
        Error::NotAssassinator
    );
}

#[test]
fn exhaustive_enumeration_counts() {
    // multiplicative submonoids of Z/4 avoiding 0: {1}, {1,3}; of F_4: {1}, F_4^*
    let r = zmod(4, 16).unwrap();
    assert_eq!(enumerate_mult_sets(&r, &MultSetBudget::default()).len(), 2);
    let f4 = gf(4, 16).unwrap();
    assert_eq!(enumerate_mult_sets(&f4, &MultSetBudget::default()).len(), 2);
    // brute force over all subsets of Z/6 containing 1 and not 0
    let z6 = zmod(6, 16).unwrap();
    let brute = (0u64..1 << 6)
        .filter(|m| m & 2 != 0 && m & 1 == 0)
        .filter(|&m| {
            let s = ElementSet::from_bits(6, m);
            s.iter().all(|a| s.iter().all(|b| s.contains(z6.mul(a, b))))
        })
        .count();
    assert_eq!(
        enumerate_mult_sets(&z6, &MultSetBudget::default()).len(),
        brute
    );
}

#[test]
fn a11_conditions_agree_on_small_rings() {
    for r in small_rings() {
        let an = RingAnalysis::new(&r);
        for s in enumerate_mult_sets(&r, &MultSetBudget::default()) {
            let c = classify_set(&s).unwrap();
            if !c.left_den {
                continue;
            }
            let l = localize_classified(&s, &c).unwrap();
            for i in an.proper_ideals() {
                let v = check_a11(&l, &an.ideal(i)).unwrap();
                assert!(
                    v.agree() && v.chain_stabilizes,
                    "{} {} {:?}",
                    r.label(),
                    s.describe(),
                    v
                );
            }
        }
    }
}

#[test]
fn epimorphism_criteria_agree() {
    for r in small_rings() {
        let an = RingAnalysis::new(&r);
        for s in enumerate_mult_sets(&r, &MultSetBudget::default()) {
            let c = classify_set(&s).unwrap();
            if !c.left_den {
                continue;
            }
            let l = localize_classified(&s, &c).unwrap();
            for i in an.proper_ideals() {
                let v = check_epimorphic_den(&l, &an.ideal(i)).unwrap();
                if let Some((a, b)) = v.regular_images {
                    assert_eq!(a, b);
                }
                if let Some((a, b)) = v.torsion_free {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn centre_of_matrix_ring_and_pierce() {
    let f2 = gf(2, 16).unwrap();
    let m = matrix_ring(2, &f2, 16).unwrap();
    let cd = centre_ring(&m).unwrap();
    assert_eq!(cd.centre.order(), 2);
    let z3 = zmod(3, 16).unwrap();
    let p = product(&m, &z3, 64).unwrap();
    let an = RingAnalysis::new(&p);
    let cd = centre_ring(&p).unwrap();
    assert_eq!(cd.centre.order(), 6);
    let rm = rho(&an, &cd).unwrap();
    assert!(rm.well_defined && rm.surjective_onto_min);
    let crit = check_rho_criteria(&an, &cd, &rm).unwrap();
    assert!(crit.agree() && crit.regular_centre_regular);
    let pv = check_pierce(&an, &cd, &rm).unwrap();
    let mut orders = pv.factor_orders.clone();
    orders.sort();
    assert_eq!(orders, vec![3, 16]);
    assert!(
        pv.bijective && pv.centre_componentwise && pv.factors_semiprime && pv.min_primes_localize
    );
    assert!(min_prime_product_injective(&an).unwrap());
}

#[test]
fn rho_needs_semiprime() {
    let f2 = gf(2, 16).unwrap();
    let t = upper_triangular(2, &f2, 16).unwrap();
    let an = RingAnalysis::new(&t);
    let cd = centre_ring(&t).unwrap();
    let rm = rho(&an, &cd).unwrap();
    assert!(check_rho_criteria(&an, &cd, &rm).is_none());
    assert!(!min_prime_product_injective(&an).unwrap());
}

#[test]
fn central_localization_of_z12() {
    let r = zmod(12, 16).unwrap();
    let an = RingAnalysis::new(&r);
    let cd = centre_ring(&r).unwrap();
    let q = cd.restrict(set(12, &[0, 2, 4, 6, 8, 10]));
    let cl = central_localize(&an, &cd, q).unwrap();
    assert_eq!(cl.loc.target.order(), 4);
    assert!(
        cl.in_image
            && cl.extension_proper
            && cl.fibre_bijection
            && cl.residue_bijection
            && cl.hit_by_min
    );
    assert_eq!(
        central_localize(&an, &cd, cd.restrict(set(12, &[0, 4, 8]))).unwrap_err(),
        Error::NotPrime
    );
}

fn ring_strategy() -> impl Strategy<Value = Ring> {
    let rings = small_rings();
    (0..rings.len()).prop_map(move |i| rings[i].clone())
}

proptest! {
    #[test]
    fn den_sets_invert_into_units(r in ring_strategy(), seed in any::<u64>()) {
        let sets = enumerate_mult_sets(&r, &MultSetBudget::default());
        let s = &sets[(seed as usize) % sets.len()];
        let c = classify_set(s).unwrap();
        if c.left_den {
            let l = localize_classified(s, &c).unwrap();
            let target_units = l.target.units();
            prop_assert!(l.sigma.image(s.members()).is_subset(&target_units));
            prop_assert_eq!(l.sigma.kernel(), c.ass_l);
            prop_assert!(s.members().is_subset(&units_mod(&r, c.ass_l)));
            let an = RingAnalysis::new(&r);
            let full = min_rs_id(&l, &an).unwrap();
            prop_assert!(min_rs(&an, s.members()).iter().all(|p| full.contains(p)));
        }
    }

    #[test]
    fn localized_ideals_contract_back(r in ring_strategy(), seed in any::<u64>()) {
        let sets = enumerate_mult_sets(&r, &MultSetBudget::default());
        let s = &sets[(seed as usize) % sets.len()];
        if let Ok(l) = localize(s) {
            for i in all_ideals(&r) {
                let li = localize_left_ideal(&l, &i).unwrap();
                prop_assert!(li.source.is_subset(&l.contract(li.target)));
            }
        }
    }
}
