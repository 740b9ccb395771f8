//! The centre as a ring, restriction of primes to the centre, and central
//! localization at primes of the centre.

use crate::error::{Error, Result};
use crate::finring::{quotient_by_set, subring, ElementSet, Ring, RingHom};
use crate::ideals::{generate_set, RingAnalysis, Side};
use crate::localization::{classify_set, localize_classified, Localization, MultSet};

#[derive(Clone, Debug)]
pub struct CentreData {
    pub ambient: Ring,
    pub centre: Ring,
    /// Inclusion `Z(R) → R`.
    pub embedding: RingHom,
}

impl CentreData {
    /// `P ∩ Z(R)` in centre ids.
    pub fn restrict(&self, p: ElementSet) -> ElementSet {
        self.embedding.preimage(p)
    }

    /// Centre ids to ambient ids.
    pub fn lift(&self, s: ElementSet) -> ElementSet {
        self.embedding.image(s)
    }
}

pub fn centre_ring(r: &Ring) -> Result<CentreData> {
    let (centre, embedding) = subring(r, r.centre_set(), format!("Z({})", r.label()))?;
    Ok(CentreData {
        ambient: r.clone(),
        centre,
        embedding,
    })
}

/// `P ↦ P ∩ Z(R)` on all primes, and its restriction to minimal primes.
#[derive(Clone, Debug)]
pub struct RestrictionMap {
    pub centre: RingAnalysis,
    /// `(P, P ∩ Z)` for every prime `P` of `R`, in lattice order.
    pub table: Vec<(ElementSet, ElementSet)>,
    pub min_restriction: Vec<(ElementSet, ElementSet)>,
    pub well_defined: bool,
    pub surjective_onto_min: bool,
}

impl RestrictionMap {
    pub fn image(&self) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = self.table.iter().map(|&(_, q)| q).collect();
        v.sort_by_key(|s| (s.len(), s.bits()));
        v.dedup();
        v
    }
}

pub fn rho(an: &RingAnalysis, cd: &CentreData) -> Result<RestrictionMap> {
    let za = RingAnalysis::new(&cd.centre);
    let mut table = Vec::new();
    for p in an.prime_sets() {
        let q = cd.restrict(p);
        let prime = za.index_of(q).map(|i| za.reports[i].prime).unwrap_or(false);
        if !prime {
            return Err(Error::Inconsistent(format!(
                "{} ∩ Z(R) is not a prime of the centre",
                an.ring.fmt_set(p)
            )));
        }
        table.push((p, q));
    }
    let zmin = za.min_prime_sets();
    let min_restriction: Vec<(ElementSet, ElementSet)> = an
        .min_prime_sets()
        .into_iter()
        .map(|p| (p, cd.restrict(p)))
        .collect();
    let well_defined = min_restriction.iter().all(|(_, q)| zmin.contains(q));
    let surjective_onto_min = zmin
        .iter()
        .all(|q| min_restriction.iter().any(|(_, q2)| q2 == q));
    Ok(RestrictionMap {
        centre: za,
        table,
        min_restriction,
        well_defined,
        surjective_onto_min,
    })
}

/// The four conditions that should coincide on a semiprime ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RhoCriteria {
    /// `𝒞_Z ⊆ 𝒞_R`
    pub regular_centre_regular: bool,
    /// `𝒞_Z ∩ 𝔭 = ∅` for every minimal prime
    pub regular_centre_avoids_min: bool,
    pub well_defined: bool,
    pub surjective: bool,
}

impl RhoCriteria {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.regular_centre_regular,
            self.regular_centre_avoids_min,
            self.well_defined,
            self.surjective,
        ]
    }
    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

pub fn check_rho_criteria(
    an: &RingAnalysis,
    cd: &CentreData,
    rm: &RestrictionMap,
) -> Option<RhoCriteria> {
    if !an.semiprime {
        return None;
    }
    let cz = cd.lift(cd.centre.regular_elements());
    let cr = an.ring.regular_elements();
    Some(RhoCriteria {
        regular_centre_regular: cz.is_subset(&cr),
        regular_centre_avoids_min: an.min_prime_sets().iter().all(|p| p.is_disjoint(&cz)),
        well_defined: rm.well_defined,
        surjective: rm.surjective_onto_min,
    })
}

/// `R_𝔮` for a prime `𝔮` of the centre, with the fibre of `ρ_R` over `𝔮`.
#[derive(Clone, Debug)]
pub struct CentralLocalization {
    pub q: ElementSet,
    pub loc: Localization,
    /// Some prime of `R` restricts to `𝔮`.
    pub in_image: bool,
    /// `R_𝔮 𝔮 ≠ R_𝔮`
    pub extension_proper: bool,
    /// Primes `P` of `R` with `P ∩ Z = 𝔮`.
    pub fibre: Vec<ElementSet>,
    /// Primes of `R_𝔮` containing `R_𝔮 𝔮`.
    pub primes_over_extension: Vec<ElementSet>,
    /// `P ↦ P_𝔮` is a bijection from the fibre onto those primes.
    pub fibre_bijection: bool,
    /// Those primes correspond bijectively to the primes of `R_𝔮 / R_𝔮 𝔮`.
    pub residue_bijection: bool,
    /// Some minimal prime of `R` restricts to `𝔮`.
    pub hit_by_min: bool,
}

pub fn central_localize(
    an: &RingAnalysis,
    cd: &CentreData,
    q: ElementSet,
) -> Result<CentralLocalization> {
    let za = RingAnalysis::new(&cd.centre);
    if !za.index_of(q).map(|i| za.reports[i].prime).unwrap_or(false) {
        return Err(Error::NotPrime);
    }
    let r = &an.ring;
    let s = MultSet::new(r, cd.lift(q.complement()))?;
    let class = classify_set(&s)?;
    let loc = localize_classified(&s, &class)?;
    let t = &loc.target.clone();
    let ta = RingAnalysis::new(t);
    let ext = generate_set(t, loc.sigma.image(cd.lift(q)), Side::Two);
    let fibre: Vec<ElementSet> = an
        .prime_sets()
        .into_iter()
        .filter(|&p| cd.restrict(p) == q)
        .collect();
    let in_image = !fibre.is_empty();
    let hit_by_min = an.min_prime_sets().iter().any(|&p| cd.restrict(p) == q);
    let primes_over_extension: Vec<ElementSet> = ta
        .prime_sets()
        .into_iter()
        .filter(|p| ext.is_subset(p))
        .collect();
    let images: Vec<ElementSet> = fibre.iter().map(|&p| loc.sigma.image(p)).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let fibre_bijection = sorted.len() == images.len()
        && images.iter().all(|p| primes_over_extension.contains(p))
        && images.len() == primes_over_extension.len();
    let residue_bijection = if ext.contains(t.one()) {
        primes_over_extension.is_empty()
    } else {
        let (k, pi) = quotient_by_set(t, ext)?;
        let ka = RingAnalysis::new(&k);
        let kprimes = ka.prime_sets();
        let mapped: Vec<ElementSet> = primes_over_extension.iter().map(|&p| pi.image(p)).collect();
        mapped.len() == kprimes.len() && kprimes.iter().all(|p| mapped.contains(p))
    };
    Ok(CentralLocalization {
        q,
        loc,
        in_image,
        extension_proper: !ext.contains(t.one()),
        fibre,
        primes_over_extension,
        fibre_bijection,
        residue_bijection,
        hit_by_min,
    })
}

/// The map `R → ∏_{𝔮 ∈ min Z(R)} R_𝔮` and what it preserves.
#[derive(Clone, Debug)]
pub struct PierceVerdict {
    /// Orders of the factors `R_𝔮`, in the order of `min Z(R)`.
    pub factor_orders: Vec<usize>,
    pub homomorphisms_ok: bool,
    pub injective: bool,
    pub bijective: bool,
    /// `Z(R_𝔮)` equals the image of `Z(R)` and that image is a field.
    pub centre_componentwise: bool,
    /// Every `R_𝔮` is semiprime with minimal primes exactly the proper `𝔭_𝔮`.
    pub factors_semiprime: bool,
    pub min_primes_localize: bool,
}

pub fn check_pierce(
    an: &RingAnalysis,
    cd: &CentreData,
    rm: &RestrictionMap,
) -> Result<PierceVerdict> {
    let r = &an.ring;
    let mut factor_orders = Vec::new();
    let mut homomorphisms_ok = true;
    let mut kernel = r.full_set();
    let mut centre_componentwise = true;
    let mut factors_semiprime = true;
    let mut min_primes_localize = true;
    for q in rm.centre.min_prime_sets() {
        let s = MultSet::new(r, cd.lift(q.complement()))?;
        let loc = localize_classified(&s, &classify_set(&s)?)?;
        let t = &loc.target;
        factor_orders.push(t.order());
        homomorphisms_ok &= loc.sigma.verify();
        kernel = kernel.intersection(&loc.sigma.kernel());
        let zimg = loc.sigma.image(cd.lift(cd.centre.full_set()));
        let is_field = zimg.iter().all(|x| x == t.zero() || t.is_unit(x));
        centre_componentwise &= t.centre_set() == zimg && is_field;
        let ta = RingAnalysis::new(t);
        factors_semiprime &= ta.semiprime;
        let mut localized: Vec<ElementSet> = an
            .min_prime_sets()
            .iter()
            .map(|&p| loc.sigma.image(p))
            .filter(|p| !p.contains(t.one()))
            .collect();
        localized.sort();
        localized.dedup();
        let mut tmin = ta.min_prime_sets();
        tmin.sort();
        min_primes_localize &= localized == tmin;
    }
    let injective = kernel.len() == 1;
    let product: usize = factor_orders.iter().product();
    Ok(PierceVerdict {
        bijective: injective && product == r.order(),
        factor_orders,
        homomorphisms_ok,
        injective,
        centre_componentwise,
        factors_semiprime,
        min_primes_localize,
    })
}

/// Is `R → ∏_{𝔭 ∈ min R} R/𝔭` injective? Computed from the quotient maps.
pub fn min_prime_product_injective(an: &RingAnalysis) -> Result<bool> {
    let r = &an.ring;
    let mut kernel = r.full_set();
    for p in an.min_prime_sets() {
        let (_, pi) = quotient_by_set(r, p)?;
        kernel = kernel.intersection(&pi.kernel());
    }
    Ok(kernel.len() == 1)
}
