//! Multiplicative sets, Ore and denominator conditions, and localizations of
//! finite rings.
//!
//! In a finite ring every regular element is a unit, so a left denominator
//! set `S` with `ass_l(S) = 𝔞` localizes to `R/𝔞` itself: the images of `S`
//! are already invertible there. [`Localization`] records that quotient and
//! re-checks on construction that every `σ(s)` really is a unit.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finring::{quotient_by_set, ElementSet, Ring, RingHom, RingTable};
use crate::ideals::{generate_set, is_ideal_set, Ideal, RingAnalysis, Side};

#[derive(Clone)]
pub struct MultSet {
    ring: Ring,
    members: ElementSet,
}

impl fmt::Debug for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultSet{}", self.ring.fmt_set(self.members))
    }
}

impl PartialEq for MultSet {
    fn eq(&self, o: &Self) -> bool {
        self.members == o.members && self.ring.same_ring(&o.ring)
    }
}

impl MultSet {
    /// Checks: contains 1, excludes 0, closed under multiplication.
    pub fn new(ring: &Ring, members: ElementSet) -> Result<MultSet> {
        if members.order() != ring.order() {
            return Err(Error::RingMismatch);
        }
        if !members.contains(ring.one()) {
            return Err(Error::InvalidArgument(
                "multiplicative set must contain 1".into(),
            ));
        }
        if members.contains(ring.zero()) {
            return Err(Error::ZeroInClosure {
                x: ring.zero(),
                y: ring.one(),
            });
        }
        for x in members.iter() {
            for y in members.iter() {
                if !members.contains(ring.mul(x, y)) {
                    return Err(Error::InvalidArgument(format!("not closed: {x} * {y}")));
                }
            }
        }
        Ok(MultSet {
            ring: ring.clone(),
            members,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn members(&self) -> ElementSet {
        self.members
    }
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn describe(&self) -> String {
        self.ring.fmt_set(self.members)
    }
}

fn closure_from(r: &RingTable, start: ElementSet) -> ElementSet {
    let mut cur = start;
    loop {
        let mut next = cur;
        for x in cur.iter() {
            for y in cur.iter() {
                next.insert(r.mul(x, y));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Multiplicative closure of `gens ∪ {1}`.
pub fn close_multiplicative(r: &Ring, gens: ElementSet) -> Result<MultSet> {
    if gens.order() != r.order() {
        return Err(Error::RingMismatch);
    }
    let mut start = gens;
    start.insert(r.one());
    let cl = closure_from(r, start);
    if cl.contains(r.zero()) {
        if gens.contains(r.zero()) {
            return Err(Error::ZeroInClosure {
                x: r.zero(),
                y: r.one(),
            });
        }
        let nz: Vec<usize> = cl.iter().filter(|&x| x != r.zero()).collect();
        for &x in &nz {
            for &y in &nz {
                if r.mul(x, y) == r.zero() {
                    return Err(Error::ZeroInClosure { x, y });
                }
            }
        }
    }
    Ok(MultSet {
        ring: r.clone(),
        members: cl,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct MultSetBudget {
    /// Up to this order every submonoid avoiding 0 is produced; above it only
    /// closures of one or two generators.
    pub exhaustive_max_order: usize,
}

impl Default for MultSetBudget {
    fn default() -> Self {
        MultSetBudget {
            exhaustive_max_order: 12,
        }
    }
}

impl MultSetBudget {
    pub fn is_exhaustive(&self, r: &RingTable) -> bool {
        r.order() <= self.exhaustive_max_order
    }
}

/// Multiplicative sets avoiding zero, sorted by size then bitmask.
pub fn enumerate_mult_sets(r: &Ring, budget: &MultSetBudget) -> Vec<MultSet> {
    let one = ElementSet::singleton(r.order(), r.one());
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut found = Vec::new();
    let mut push = |s: ElementSet, found: &mut Vec<ElementSet>| {
        if !s.contains(r.zero()) && seen.insert(s) {
            found.push(s);
        }
    };
    push(one, &mut found);
    let nonzero: Vec<usize> = r.elements().filter(|&x| x != r.zero()).collect();
    if budget.is_exhaustive(r) {
        // adding one generator at a time reaches every submonoid
        let mut i = 0;
        while i < found.len() {
            let m = found[i];
            for &x in &nonzero {
                if !m.contains(x) {
                    let mut s = m;
                    s.insert(x);
                    push(closure_from(r, s), &mut found);
                }
            }
            i += 1;
        }
    } else {
        for (i, &x) in nonzero.iter().enumerate() {
            push(
                closure_from(r, one.union(&ElementSet::singleton(r.order(), x))),
                &mut found,
            );
            for &y in &nonzero[i + 1..] {
                push(
                    closure_from(r, one.union(&ElementSet::from_elems(r.order(), [x, y]))),
                    &mut found,
                );
            }
        }
    }
    found.sort_by_key(|s| (s.len(), s.bits()));
    found
        .into_iter()
        .map(|members| MultSet {
            ring: r.clone(),
            members,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreClass {
    pub left_ore: bool,
    pub right_ore: bool,
    pub left_den: bool,
    pub right_den: bool,
    /// `{r : sr = 0 for some s}`
    pub ass_l: ElementSet,
    /// `{r : rs = 0 for some s}`
    pub ass_r: ElementSet,
    /// `(r, s)` with `Sr ∩ Rs = ∅`
    pub left_ore_witness: Option<(usize, usize)>,
    pub right_ore_witness: Option<(usize, usize)>,
    /// `r` with `rs = 0` but no `t` with `tr = 0`
    pub left_den_witness: Option<usize>,
    pub right_den_witness: Option<usize>,
}

impl OreClass {
    pub fn is_denominator(&self) -> bool {
        self.left_den && self.right_den && self.ass_l == self.ass_r
    }

    fn left_violation(&self) -> String {
        if let Some((r, s)) = self.left_ore_witness {
            format!("left Ore condition fails for r = {r}, s = {s}")
        } else if let Some(r) = self.left_den_witness {
            format!("r = {r} is killed on the right by S but not on the left")
        } else {
            "no violation".into()
        }
    }
}

fn ore_witness(r: &RingTable, s: ElementSet, left: bool) -> Option<(usize, usize)> {
    for x in r.elements() {
        // S·x (left) or x·S (right)
        let sx = ElementSet::from_elems(
            r.order(),
            s.iter()
                .map(|t| if left { r.mul(t, x) } else { r.mul(x, t) }),
        );
        for t in s.iter() {
            let multiples = if left {
                r.left_multiples(t)
            } else {
                r.right_multiples(t)
            };
            if sx.is_disjoint(&multiples) {
                return Some((x, t));
            }
        }
    }
    None
}

pub fn classify_members(r: &RingTable, s: ElementSet) -> OreClass {
    let z = r.zero();
    let ass_l = ElementSet::from_elems(
        r.order(),
        r.elements().filter(|&x| s.iter().any(|t| r.mul(t, x) == z)),
    );
    let ass_r = ElementSet::from_elems(
        r.order(),
        r.elements().filter(|&x| s.iter().any(|t| r.mul(x, t) == z)),
    );
    let left_ore_witness = ore_witness(r, s, true);
    let right_ore_witness = ore_witness(r, s, false);
    let left_den_witness = ass_r.difference(&ass_l).first();
    let right_den_witness = ass_l.difference(&ass_r).first();
    OreClass {
        left_ore: left_ore_witness.is_none(),
        right_ore: right_ore_witness.is_none(),
        left_den: left_ore_witness.is_none() && left_den_witness.is_none(),
        right_den: right_ore_witness.is_none() && right_den_witness.is_none(),
        ass_l,
        ass_r,
        left_ore_witness,
        right_ore_witness,
        left_den_witness,
        right_den_witness,
    }
}

/// Ore and denominator flags on both sides; under the left Ore condition
/// `ass_l` must be a two-sided ideal, otherwise the classifier is wrong.
pub fn classify_set(s: &MultSet) -> Result<OreClass> {
    let c = classify_members(&s.ring, s.members);
    if c.left_ore && !is_ideal_set(&s.ring, c.ass_l, Side::Two) {
        return Err(Error::Inconsistent(format!(
            "ass_l {} of a left Ore set is not an ideal",
            s.ring.fmt_set(c.ass_l)
        )));
    }
    if c.right_ore && !is_ideal_set(&s.ring, c.ass_r, Side::Two) {
        return Err(Error::Inconsistent(format!(
            "ass_r {} of a right Ore set is not an ideal",
            s.ring.fmt_set(c.ass_r)
        )));
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocKind {
    Denominator,
    NormalLocalizable,
}

#[derive(Clone, Debug)]
pub struct Localization {
    pub source: Ring,
    pub set: MultSet,
    pub kind: LocKind,
    pub ass: Ideal,
    pub target: Ring,
    pub sigma: RingHom,
    /// `(s, σ(s)⁻¹)` for every `s ∈ S`.
    pub inverses: Vec<(usize, usize)>,
}

impl Localization {
    fn build(set: &MultSet, ass: ElementSet, kind: LocKind) -> Result<Localization> {
        let r = &set.ring;
        let ass = Ideal::new(r, ass, Side::Two)?;
        let (target, sigma) = quotient_by_set(r, ass.members())?;
        let mut inverses = Vec::new();
        for s in set.members.iter() {
            let inv = target.inverse(sigma.apply(s)).ok_or_else(|| {
                Error::Inconsistent(format!("image of {s} is not a unit of the localization"))
            })?;
            inverses.push((s, inv));
        }
        if sigma.kernel() != ass.members() {
            return Err(Error::Inconsistent(
                "kernel of the localization map differs from ass".into(),
            ));
        }
        Ok(Localization {
            source: r.clone(),
            set: set.clone(),
            kind,
            ass,
            target,
            sigma,
            inverses,
        })
    }

    pub fn inverse_of(&self, s: usize) -> usize {
        self.inverses
            .iter()
            .find(|&&(t, _)| t == s)
            .map(|&(_, i)| i)
            .expect("s in S")
    }

    /// `S⁻¹I` as a subset of the target: the left ideal generated by `σ(I)`.
    pub fn localize_set(&self, i: ElementSet) -> ElementSet {
        generate_set(&self.target, self.sigma.image(i), Side::Left)
    }

    /// `σ⁻¹(J)`
    pub fn contract(&self, j: ElementSet) -> ElementSet {
        self.sigma.preimage(j)
    }
}

pub fn localize(s: &MultSet) -> Result<Localization> {
    let c = classify_set(s)?;
    localize_classified(s, &c)
}

pub fn localize_classified(s: &MultSet, c: &OreClass) -> Result<Localization> {
    if !c.left_den {
        return Err(Error::NotDenominator(c.left_violation()));
    }
    Localization::build(s, c.ass_l, LocKind::Denominator)
}

#[derive(Clone, Debug)]
pub struct LocalizedLeftIdeal {
    pub source: ElementSet,
    pub target: ElementSet,
    pub two_sided: bool,
}

pub fn localize_left_ideal(l: &Localization, i: &Ideal) -> Result<LocalizedLeftIdeal> {
    if i.side() == Side::Right {
        return Err(Error::Sidedness("left"));
    }
    if !i.ring().same_ring(&l.source) {
        return Err(Error::RingMismatch);
    }
    let target = l.localize_set(i.members());
    debug_assert!(i.members().is_subset(&l.contract(target)));
    Ok(LocalizedLeftIdeal {
        source: i.members(),
        target,
        two_sided: is_ideal_set(&l.target, target, Side::Two),
    })
}

/// Conditions (1)–(5) for "`S⁻¹𝔟` is an ideal", each computed on its own terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A11Verdict {
    pub conditions: [bool; 5],
    /// The ascending-chain condition; always true on finite rings.
    pub chain_stabilizes: bool,
}

impl A11Verdict {
    pub fn agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// `tor_r ⊆ tor_l` for the image of `s` in the quotient ring `m`.
fn torsion_inclusion(m: &RingTable, s: ElementSet) -> bool {
    let z = m.zero();
    m.elements()
        .all(|x| !s.iter().any(|t| m.mul(x, t) == z) || s.iter().any(|t| m.mul(t, x) == z))
}

pub fn check_a11(l: &Localization, b: &Ideal) -> Result<A11Verdict> {
    if b.side() != Side::Two {
        return Err(Error::Sidedness("two-sided"));
    }
    let r = &l.source;
    if !b.is_proper() {
        return Ok(A11Verdict {
            conditions: [true; 5],
            chain_stabilizes: true,
        });
    }
    let t = &l.target;
    let s_members = l.set.members;
    let sb = l.localize_set(b.members());
    let c1 = is_ideal_set(t, sb, Side::Two);
    let sigma_b = l.sigma.image(b.members());
    let c2 = l
        .inverses
        .iter()
        .all(|&(_, u)| sigma_b.iter().all(|x| sb.contains(t.mul(x, u))));
    let satisfies = |ideal: ElementSet| {
        r.elements().all(|x| {
            let hit = s_members.iter().any(|s| ideal.contains(r.mul(x, s)));
            !hit || s_members.iter().any(|s| ideal.contains(r.mul(s, x)))
        })
    };
    let c3 = satisfies(b.members());
    let a_plus_b = r.additive_span(l.ass.members().union(&b.members()));
    let c4 = satisfies(a_plus_b);
    // R̄/π(𝔟) with R̄ = R/𝔞, which is the target
    let c5 = if sigma_b.contains(t.one()) {
        true
    } else {
        let (m, pi) = quotient_by_set(t, sigma_b)?;
        let s_img = ElementSet::from_elems(
            m.order(),
            s_members.iter().map(|s| pi.apply(l.sigma.apply(s))),
        );
        torsion_inclusion(&m, s_img)
    };
    let chain_stabilizes = l.inverses.iter().all(|&(_, u)| {
        let mut cur = sb;
        let mut shifted = sb;
        for _ in 0..=t.order() {
            shifted = ElementSet::from_elems(t.order(), shifted.iter().map(|x| t.mul(x, u)));
            let next = t.additive_span(cur.union(&shifted));
            if next == cur {
                return true;
            }
            cur = next;
        }
        false
    });
    Ok(A11Verdict {
        conditions: [c1, c2, c3, c4, c5],
        chain_stabilizes,
    })
}

/// Every prime localizes to a two-sided ideal.
pub fn respects_prime_structure(l: &Localization, an: &RingAnalysis) -> bool {
    an.primes
        .iter()
        .all(|&p| is_ideal_set(&l.target, l.localize_set(an.set(p)), Side::Two))
}

/// Minimal primes disjoint from `S`, as lattice indices.
pub fn min_rs(an: &RingAnalysis, s: ElementSet) -> Vec<usize> {
    an.min_primes
        .iter()
        .copied()
        .filter(|&p| an.set(p).is_disjoint(&s))
        .collect()
}

/// Minimal primes whose localization generates a proper ideal; must contain [`min_rs`].
pub fn min_rs_id(l: &Localization, an: &RingAnalysis) -> Result<Vec<usize>> {
    let t = &l.target;
    let out: Vec<usize> = an
        .min_primes
        .iter()
        .copied()
        .filter(|&p| !generate_set(t, l.localize_set(an.set(p)), Side::Two).contains(t.one()))
        .collect();
    if let Some(p) = min_rs(an, l.set.members)
        .into_iter()
        .find(|p| !out.contains(p))
    {
        return Err(Error::Inconsistent(format!(
            "{} is in min(R,S) but not in min(R,S,id)",
            an.ideal(p).describe()
        )));
    }
    Ok(out)
}

/// Localization at the set generated by normal elements; the kernel is
/// `{r : srt = 0 for some s, t ∈ S}`.
pub fn localize_normal(r: &Ring, gens: ElementSet) -> Result<Localization> {
    if let Some(g) = gens.iter().find(|&g| !r.is_normal_element(g)) {
        return Err(Error::NotNormal(g));
    }
    let s = close_multiplicative(r, gens)?;
    let z = r.zero();
    let a = ElementSet::from_elems(
        r.order(),
        r.elements().filter(|&x| {
            s.members
                .iter()
                .any(|u| s.members.iter().any(|v| r.mul(r.mul(u, x), v) == z))
        }),
    );
    if !is_ideal_set(r, a, Side::Two) {
        return Err(Error::Inconsistent(format!(
            "kernel {} of a normal localization is not an ideal",
            r.fmt_set(a)
        )));
    }
    Localization::build(&s, a, LocKind::NormalLocalizable)
}

/// `π⁻¹(units(R/𝔞))`, computed without building the quotient.
pub fn units_mod(r: &RingTable, a: ElementSet) -> ElementSet {
    let one = r.one();
    ElementSet::from_elems(
        r.order(),
        r.elements().filter(|&x| {
            r.elements()
                .any(|y| a.contains(r.sub(r.mul(x, y), one)) && a.contains(r.sub(r.mul(y, x), one)))
        }),
    )
}

/// The largest left denominator set of regular elements: the units.
pub fn largest_regular_set(r: &Ring) -> MultSet {
    MultSet {
        ring: r.clone(),
        members: r.units(),
    }
}

/// Largest left denominator set with kernel `𝔞`. `𝔞` must be realised as
/// `ass_l` of some enumerated left denominator set.
pub fn largest_set_assoc(r: &Ring, a: &Ideal, budget: &MultSetBudget) -> Result<MultSet> {
    let realised = enumerate_mult_sets(r, budget).iter().any(|s| {
        let c = classify_members(r, s.members);
        c.left_den && c.ass_l == a.members()
    });
    if !realised {
        return Err(Error::NotAssassinator);
    }
    let members = units_mod(r, a.members());
    let c = classify_members(r, members);
    if !(c.left_den && c.ass_l == a.members()) {
        return Err(Error::Inconsistent(
            "preimage of the units is not a denominator set with the given kernel".into(),
        ));
    }
    MultSet::new(r, members)
}

/// `T_l(𝔭) = π_𝔭⁻¹(units(R/𝔭))` for a prime `𝔭`.
pub fn t_l(r: &Ring, p: &Ideal) -> Result<MultSet> {
    if !crate::ideals::classify_ideal(p)?.prime {
        return Err(Error::NotPrime);
    }
    MultSet::new(r, units_mod(r, p.members()))
}

/// Both sides of the two epimorphism criteria; `None` when the hypothesis fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpiVerdict {
    /// `S̄ ∈ Den_l(R/𝔟, 0)` vs `S̄ ⊆ 𝒞_{R/𝔟}`, when `ass ⊆ 𝔟 ≠ R`.
    pub regular_images: Option<(bool, bool)>,
    /// `S̃ ∈ Den_l(R̄/𝔠̄, 0)` vs `tor_r(R̄/𝔠̄) = 0`, when `S ∩ (𝔞 + 𝔟) = ∅`.
    pub torsion_free: Option<(bool, bool)>,
}

fn is_den_with_zero_kernel(m: &RingTable, s: ElementSet) -> bool {
    if s.contains(m.zero()) {
        return false;
    }
    let c = classify_members(m, s);
    c.left_den && c.ass_l.len() == 1
}

pub fn check_epimorphic_den(l: &Localization, b: &Ideal) -> Result<EpiVerdict> {
    if b.side() != Side::Two {
        return Err(Error::Sidedness("two-sided"));
    }
    let r = &l.source;
    let s = l.set.members;
    let regular_images = if l.ass.is_subset(b) && b.is_proper() {
        let (m, pi) = quotient_by_set(r, b.members())?;
        let img = pi.image(s);
        Some((
            is_den_with_zero_kernel(&m, img),
            img.is_subset(&m.regular_elements()),
        ))
    } else {
        None
    };
    let a_plus_b = r.additive_span(l.ass.members().union(&b.members()));
    let torsion_free = if s.is_disjoint(&a_plus_b) {
        let (rbar, pi) = quotient_by_set(r, a_plus_b)?;
        let sbar = pi.image(s);
        let cbar = classify_members(&rbar, sbar).ass_l;
        if !is_ideal_set(&rbar, cbar, Side::Two) {
            return Err(Error::Inconsistent(
                "ass_l of the image set is not an ideal".into(),
            ));
        }
        let (m, rho) = quotient_by_set(&rbar, cbar)?;
        let stilde = rho.image(sbar);
        let z = m.zero();
        let tor_free = m
            .elements()
            .all(|x| x == z || stilde.iter().all(|t| m.mul(x, t) != z));
        Some((is_den_with_zero_kernel(&m, stilde), tor_free))
    } else {
        None
    };
    Ok(EpiVerdict {
        regular_images,
        torsion_free,
    })
}
