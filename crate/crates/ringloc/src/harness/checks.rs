//! The check registry. Ids of structural checks are the labels of the
//! statements they execute; the first four ids are engine self-checks.

use super::finite::{self as f, FiniteCtx};
use super::mono as m;
use super::{CaseLog, Instance, Track};

type FiniteFn = fn(&FiniteCtx, &mut CaseLog);
type MonoFn = fn(&Instance, &mut CaseLog);

pub struct TheoremCheck {
    pub id: &'static str,
    pub title: &'static str,
    pub track: Track,
    /// The track on which the statement is not vacuous or trivially true.
    pub substantive: Track,
    /// Runs the ring-axiom audit instead of a structural check.
    pub audit: bool,
    pub(super) finite: Option<FiniteFn>,
    pub(super) monomial: Option<MonoFn>,
    pub note: Option<&'static str>,
}

const fn fin(id: &'static str, title: &'static str, run: FiniteFn) -> TheoremCheck {
    TheoremCheck {
        id,
        title,
        track: Track::Finite,
        substantive: Track::Finite,
        audit: false,
        finite: Some(run),
        monomial: None,
        note: None,
    }
}

const fn both(
    id: &'static str,
    title: &'static str,
    run: FiniteFn,
    mono: MonoFn,
    substantive: Track,
) -> TheoremCheck {
    TheoremCheck {
        id,
        title,
        track: Track::Both,
        substantive,
        audit: false,
        finite: Some(run),
        monomial: Some(mono),
        note: None,
    }
}

const fn noted(mut c: TheoremCheck, note: &'static str) -> TheoremCheck {
    c.note = Some(note);
    c
}

static CHECKS: [TheoremCheck; 39] = [
    TheoremCheck {
        id: "ring-axioms",
        title: "the multiplication and addition tables satisfy the ring axioms",
        track: Track::Finite,
        substantive: Track::Finite,
        audit: true,
        finite: None,
        monomial: None,
        note: Some("instances failing this audit are skipped by every other finite check"),
    },
    fin(
        "radical-oracle",
        "prime radical versus strongly nilpotent elements; minimal primes two ways",
        f::radical_oracle,
    ),
    fin(
        "prime-test-oracle",
        "elementwise versus ideal-lattice primality (order ≤ 8)",
        f::prime_test_oracle,
    ),
    fin(
        "finite-facts",
        "regular = units, σ(S) invertible, prime-rich with bounded exponent",
        f::finite_facts,
    ),
    fin(
        "A11Sep23",
        "S⁻¹b is an ideal: five equivalent conditions",
        f::a11,
    ),
    fin(
        "aA11Sep23",
        "in a left Noetherian ring every S⁻¹b is an ideal",
        f::a_a11,
    ),
    fin("a10Sep23", "R prime and ass(S) = 0 ⇒ S⁻¹R prime", f::a10),
    fin(
        "a6Oct23",
        "S ∈ Den_l(R,0): S⁻¹p prime iff S⁻¹p an ideal",
        f::a6oct,
    ),
    fin("Aa6Oct23", "S ∩ p = ∅ ⇒ σ⁻¹(S⁻¹p) = p", f::aa6oct),
    fin("Xa10Sep23", "ass(S) prime ⇒ S⁻¹R prime", f::xa10),
    fin(
        "b14Oct23",
        "S̄ ∈ Den_l(R/b, 0) iff S̄ is regular modulo b",
        f::b14oct,
    ),
    fin(
        "c14Oct23",
        "S̃ ∈ Den_l(R̄/c̄, 0) iff the right torsion vanishes",
        f::c14oct,
    ),
    fin(
        "A29Sep23",
        "a product of primes equal to 0 contains all minimal primes among its letters",
        f::a29,
    ),
    fin(
        "aA29Sep23",
        "prime-rich: three characterisations agree and hold",
        f::aa29,
    ),
    fin(
        "B29Sep23",
        "every S⁻¹I is an ideal when R is left Noetherian",
        f::b29,
    ),
    fin("29Sep23", "min S⁻¹R read off {S⁻¹p : p ∈ min(R,S)}", f::t29),
    noted(
        fin(
            "a29Sep23",
            "S ∈ Den(R,0): min S⁻¹R = {S⁻¹p : p ∈ min(R,S)}",
            f::a29_zero,
        ),
        "on finite rings ass(S) = 0 forces S ⊆ units, so this coincides with the semiprime case",
    ),
    fin(
        "b10Sep23",
        "in a semiprime ring min R is the only irredundant family of primes",
        f::b10,
    ),
    both(
        "A10Sep23",
        "R semiprime, ass(S) = 0 ⇒ S⁻¹R semiprime with min S⁻¹R ≅ min R",
        f::a10_semiprime,
        m::a10,
        Track::Monomial,
    ),
    both(
        "c10Sep23",
        "the classical left quotient ring of a semiprime ring",
        f::c10,
        m::c10,
        Track::Monomial,
    ),
    fin(
        "aA10Sep23",
        "ass(S) semiprime ⇒ S⁻¹R semiprime with min S⁻¹R ≅ min(ass)",
        f::aa10,
    ),
    fin(
        "A15Sep23",
        "S(R) ⊆ ∩ S(p) over min R; R embeds in ∏ R/p",
        f::a15,
    ),
    fin(
        "a20Sep23",
        "the largest left denominator set with a given kernel",
        f::a20,
    ),
    fin("19Sep23", "the sets T(p) for minimal primes p", f::t19),
    both(
        "28Sep23",
        "R semiprime: S⁻¹R semiprime with min S⁻¹R = S⁻¹min(R,S) iff each S⁻¹p is prime",
        f::t28,
        m::t28,
        Track::Both,
    ),
    both(
        "a28Sep23",
        "commutative semiprime R: S⁻¹R semiprime, min S⁻¹R = S⁻¹min(R,S)",
        f::a28,
        m::a28,
        Track::Both,
    ),
    fin(
        "b28Sep23",
        "completely prime min(R,S) with ideal localizations",
        f::b28,
    ),
    both(
        "10Jan19",
        "S generated by normal elements: ass(S) and S̄ ∈ Den(R̄, 0)",
        f::j10,
        m::j10,
        Track::Both,
    ),
    both(
        "A2Oct23",
        "normal S: min(ass) ≅ min S⁻¹R and the residue rings",
        f::a2oct,
        m::a2oct,
        Track::Both,
    ),
    fin(
        "a5Oct23",
        "S with ts normal: the normal part of S has the same kernel",
        f::a5oct,
    ),
    noted(
        fin(
            "A25Sep23",
            "central localization R_q at primes q of the centre",
            f::a25,
        ),
        "run on every ring; a prime of the centre outside im ρ is a legitimate case",
    ),
    fin(
        "aB25Sep23",
        "semiprime: three conditions on ρ coincide",
        f::ab25,
    ),
    noted(
        fin(
            "C25Sep23",
            "semiprime: failure of the three conditions on ρ coincides",
            f::c25,
        ),
        "the contrapositive of aB25Sep23; both are computed from the same three booleans",
    ),
    fin(
        "B25Sep23",
        "semiprime: four conditions on ρ coincide",
        f::b25,
    ),
    fin("aC25Sep23", "C_Z ⊆ C_R ⇒ R ≅ ∏ R_q over min Z", f::ac25),
    fin(
        "a25Sep23",
        "semiprime: Z semiprime and |min Z ∩ im ρ| ≤ |min R|",
        f::a25_semiprime,
    ),
    fin(
        "SpecRZR",
        "ρ: P ↦ P ∩ Z maps Spec R into Spec Z",
        f::spec_rzr,
    ),
    TheoremCheck {
        id: "b29Sep23",
        title: "the algebras A_n: min primes, centre, normal elements, localization",
        track: Track::Monomial,
        substantive: Track::Monomial,
        audit: false,
        finite: None,
        monomial: Some(m::b29),
        note: Some(
            "the number of free letters in F_m is not fixed; with none the centre clauses fail",
        ),
    },
    TheoremCheck {
        id: "4Jul10",
        title: "the largest left denominator set of regular elements and Q_l(R)",
        track: Track::Both,
        substantive: Track::Both,
        audit: false,
        finite: Some(f::j4),
        monomial: Some(m::j4),
        note: Some("regular elements of a finite ring are units, so Q_l(R) = R"),
    },
];

/// Every check, in run order.
pub fn registry() -> &'static [TheoremCheck] {
    &CHECKS
}

/// Statement labels the suite is required to cover.
pub const IN_SCOPE: [&str; 35] = [
    "A11Sep23",
    "aA11Sep23",
    "a10Sep23",
    "a6Oct23",
    "Aa6Oct23",
    "Xa10Sep23",
    "b14Oct23",
    "c14Oct23",
    "A29Sep23",
    "aA29Sep23",
    "B29Sep23",
    "29Sep23",
    "a29Sep23",
    "b10Sep23",
    "A10Sep23",
    "c10Sep23",
    "aA10Sep23",
    "A15Sep23",
    "a20Sep23",
    "19Sep23",
    "28Sep23",
    "a28Sep23",
    "b28Sep23",
    "10Jan19",
    "A2Oct23",
    "a5Oct23",
    "A25Sep23",
    "aB25Sep23",
    "C25Sep23",
    "B25Sep23",
    "aC25Sep23",
    "a25Sep23",
    "SpecRZR",
    "b29Sep23",
    "4Jul10",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_label_has_exactly_one_check() {
        for id in IN_SCOPE {
            assert_eq!(registry().iter().filter(|c| c.id == id).count(), 1, "{id}");
        }
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }
}
