//! Ideals of finite rings: generation, lattice, prime classification,
//! minimal primes, prime radical and nilpotency.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finring::{quotient_by_set, ElementSet, Ring, RingTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    Two,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Two => "two-sided",
        }
    }
}

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    members: ElementSet,
    side: Side,
}

impl PartialEq for Ideal {
    fn eq(&self, o: &Self) -> bool {
        self.members == o.members && self.side == o.side && self.ring.same_ring(&o.ring)
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ideal {}",
            self.side.name(),
            self.ring.fmt_set(self.members)
        )
    }
}

impl Ideal {
    /// Wraps `members` after checking it is an ideal of the given side.
    pub fn new(ring: &Ring, members: ElementSet, side: Side) -> Result<Ideal> {
        if members.order() != ring.order() {
            return Err(Error::RingMismatch);
        }
        if !is_ideal_set(ring, members, side) {
            return Err(Error::Sidedness(side.name()));
        }
        Ok(Ideal {
            ring: ring.clone(),
            members,
            side,
        })
    }

    pub(crate) fn trusted(ring: &Ring, members: ElementSet, side: Side) -> Ideal {
        debug_assert!(is_ideal_set(ring, members, side));
        Ideal {
            ring: ring.clone(),
            members,
            side,
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ring.zero_set(),
            side: Side::Two,
        }
    }

    pub fn whole(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ring.full_set(),
            side: Side::Two,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn members(&self) -> ElementSet {
        self.members
    }
    pub fn side(&self) -> Side {
        self.side
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
    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }
    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }
    pub fn is_subset(&self, o: &Ideal) -> bool {
        self.members.is_subset(&o.members)
    }
    pub fn describe(&self) -> String {
        self.ring.fmt_set(self.members)
    }

    fn same_ring(&self, o: &Ideal) -> Result<()> {
        if self.ring.same_ring(&o.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

pub fn is_ideal_set(r: &RingTable, s: ElementSet, side: Side) -> bool {
    if !s.contains(r.zero()) {
        return false;
    }
    let elems = s.to_vec();
    for &x in &elems {
        if !s.contains(r.neg(x)) {
            return false;
        }
        if matches!(side, Side::Left | Side::Two) && !r.left_multiples(x).is_subset(&s) {
            return false;
        }
        if matches!(side, Side::Right | Side::Two) && !r.right_multiples(x).is_subset(&s) {
            return false;
        }
        for &y in &elems {
            if !s.contains(r.add(x, y)) {
                return false;
            }
        }
    }
    true
}

/// Smallest ideal of the given side containing `gens`.
pub fn generate_set(r: &RingTable, gens: ElementSet, side: Side) -> ElementSet {
    let mut cur = r.additive_span(gens);
    loop {
        let mut next = cur;
        for x in cur.iter() {
            if matches!(side, Side::Left | Side::Two) {
                next = next.union(&r.left_multiples(x));
            }
            if matches!(side, Side::Right | Side::Two) {
                next = next.union(&r.right_multiples(x));
            }
        }
        let next = r.additive_span(next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// A generating list for a two-sided ideal: repeatedly add the least element
/// not yet reached.
pub fn two_sided_generators(r: &RingTable, ideal: ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = r.zero_set();
    for x in ideal.iter() {
        if !reached.contains(x) {
            gens.push(x);
            reached = generate_set(
                r,
                ElementSet::from_elems(r.order(), gens.iter().copied()),
                Side::Two,
            );
        }
    }
    gens
}

pub fn ideal_generated_by(r: &Ring, gens: &[usize], side: Side) -> Result<Ideal> {
    for &g in gens {
        r.check_elem(g)?;
    }
    let set = generate_set(
        r,
        ElementSet::from_elems(r.order(), gens.iter().copied()),
        side,
    );
    Ok(Ideal::trusted(r, set, side))
}

fn meet_side(a: Side, b: Side) -> Side {
    if a == b {
        a
    } else if a == Side::Two {
        b
    } else if b == Side::Two {
        a
    } else {
        // a left ideal plus a right ideal has no side in general; the caller
        // gets the additive span and the sidedness check below decides.
        Side::Two
    }
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.same_ring(b)?;
    let side = meet_side(a.side, b.side);
    let set = a.ring.additive_span(a.members.union(&b.members));
    Ideal::new(&a.ring, set, side)
}

pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.same_ring(b)?;
    let side = meet_side(a.side, b.side);
    Ideal::new(&a.ring, a.members.intersection(&b.members), side)
}

pub(crate) fn product_set(r: &RingTable, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut prods = r.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            prods.insert(r.mul(x, y));
        }
    }
    r.additive_span(prods)
}

/// `AB`: additive span of products. Left ideal times anything is a left
/// ideal, anything times a right ideal is a right ideal.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.same_ring(b)?;
    let left = matches!(a.side, Side::Left | Side::Two);
    let right = matches!(b.side, Side::Right | Side::Two);
    let side = match (left, right) {
        (true, true) => Side::Two,
        (true, false) => Side::Left,
        (false, true) => Side::Right,
        (false, false) => return Err(Error::Sidedness("left or right")),
    };
    Ideal::new(&a.ring, product_set(&a.ring, a.members, b.members), side)
}

/// `{r : rX = 0}`, a left ideal (two-sided when `X` is a left ideal).
pub fn left_annihilator(r: &Ring, x: ElementSet) -> Ideal {
    let set = ElementSet::from_elems(
        r.order(),
        r.elements()
            .filter(|&a| x.iter().all(|b| r.mul(a, b) == r.zero())),
    );
    let side = if is_ideal_set(r, set, Side::Two) {
        Side::Two
    } else {
        Side::Left
    };
    Ideal::trusted(r, set, side)
}

/// `{r : Xr = 0}`, a right ideal (two-sided when `X` is a right ideal).
pub fn right_annihilator(r: &Ring, x: ElementSet) -> Ideal {
    let set = ElementSet::from_elems(
        r.order(),
        r.elements()
            .filter(|&a| x.iter().all(|b| r.mul(b, a) == r.zero())),
    );
    let side = if is_ideal_set(r, set, Side::Two) {
        Side::Two
    } else {
        Side::Right
    };
    Ideal::trusted(r, set, side)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PrimeReport {
    pub prime: bool,
    pub completely_prime: bool,
    pub semiprime: bool,
}

/// Elementwise tests: `aRb ⊆ P ⇒ a ∈ P or b ∈ P`, `ab ∈ P ⇒ …`, `aRa ⊆ P ⇒ a ∈ P`.
/// The whole ring is reported as none of the three.
pub fn classify_prime_set(r: &RingTable, p: ElementSet) -> PrimeReport {
    if p.contains(r.one()) {
        return PrimeReport::default();
    }
    let outside = p.complement().to_vec();
    let escapes = |a: usize, b: usize| {
        r.right_multiples(a)
            .iter()
            .any(|y| !p.contains(r.mul(y, b)))
    };
    PrimeReport {
        prime: outside
            .iter()
            .all(|&a| outside.iter().all(|&b| escapes(a, b))),
        completely_prime: outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !p.contains(r.mul(a, b)))),
        semiprime: outside.iter().all(|&a| escapes(a, a)),
    }
}

pub fn classify_ideal(i: &Ideal) -> Result<PrimeReport> {
    if i.side != Side::Two {
        return Err(Error::Sidedness("two-sided"));
    }
    Ok(classify_prime_set(&i.ring, i.members))
}

/// All two-sided ideals, sorted by size and then by bitmask.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub ideals: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    products: Vec<Vec<usize>>,
}

impl IdealLattice {
    pub fn new(r: &RingTable) -> IdealLattice {
        let principal: Vec<ElementSet> = r
            .elements()
            .map(|x| generate_set(r, ElementSet::singleton(r.order(), x), Side::Two))
            .collect();
        let mut found: Vec<ElementSet> = vec![r.zero_set()];
        let mut seen: std::collections::HashSet<ElementSet> = found.iter().copied().collect();
        let mut i = 0;
        while i < found.len() {
            let a = found[i];
            for p in &principal {
                if p.is_subset(&a) {
                    continue;
                }
                let s = r.additive_span(a.union(p));
                if seen.insert(s) {
                    found.push(s);
                }
            }
            i += 1;
        }
        found.sort_by_key(|s| (s.len(), s.bits()));
        let index: HashMap<ElementSet, usize> =
            found.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let products = found
            .iter()
            .map(|&a| {
                found
                    .iter()
                    .map(|&b| index[&product_set(r, a, b)])
                    .collect()
            })
            .collect();
        IdealLattice {
            ideals: found,
            index,
            products,
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.index.get(&s).copied()
    }
    /// Index of `I_a · I_b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.products[a][b]
    }
    pub fn includes(&self, a: usize, b: usize) -> bool {
        self.ideals[a].is_subset(&self.ideals[b])
    }
    /// `AB ⊆ P ⇒ A ⊆ P or B ⊆ P` over all pairs of ideals.
    pub fn is_prime_by_lattice(&self, p: usize) -> bool {
        let n = self.ideals.len();
        if p == n - 1 {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.includes(self.products[a][b], p) || self.includes(a, p) || self.includes(b, p)
            })
        })
    }
}

/// Everything about the two-sided ideal structure of one ring, computed once.
#[derive(Clone, Debug)]
pub struct RingAnalysis {
    pub ring: Ring,
    pub lattice: IdealLattice,
    pub reports: Vec<PrimeReport>,
    pub primes: Vec<usize>,
    pub min_primes: Vec<usize>,
    pub radical: ElementSet,
    pub semiprime: bool,
}

fn minimal_among(lat: &IdealLattice, cands: &[usize]) -> Vec<usize> {
    cands
        .iter()
        .copied()
        .filter(|&p| !cands.iter().any(|&q| q != p && lat.includes(q, p)))
        .collect()
}

impl RingAnalysis {
    pub fn new(ring: &Ring) -> RingAnalysis {
        let lattice = IdealLattice::new(ring);
        let reports: Vec<PrimeReport> = lattice
            .ideals
            .iter()
            .map(|&s| classify_prime_set(ring, s))
            .collect();
        let primes: Vec<usize> = (0..lattice.len()).filter(|&i| reports[i].prime).collect();
        let min_primes = minimal_among(&lattice, &primes);
        let radical = min_primes.iter().fold(ring.full_set(), |acc, &p| {
            acc.intersection(&lattice.ideals[p])
        });
        let semiprime = radical.len() == 1;
        RingAnalysis {
            ring: ring.clone(),
            lattice,
            reports,
            primes,
            min_primes,
            radical,
            semiprime,
        }
    }

    pub fn ideal(&self, i: usize) -> Ideal {
        Ideal::trusted(&self.ring, self.lattice.ideals[i], Side::Two)
    }

    pub fn set(&self, i: usize) -> ElementSet {
        self.lattice.ideals[i]
    }

    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.lattice.index_of(s)
    }

    pub fn proper_ideals(&self) -> std::ops::Range<usize> {
        0..self.lattice.len() - 1
    }

    pub fn min_prime_sets(&self) -> Vec<ElementSet> {
        self.min_primes.iter().map(|&i| self.set(i)).collect()
    }

    pub fn prime_sets(&self) -> Vec<ElementSet> {
        self.primes.iter().map(|&i| self.set(i)).collect()
    }

    /// Minimal primes over `a`, read off the lattice.
    pub fn min_primes_over(&self, a: ElementSet) -> Vec<usize> {
        let over: Vec<usize> = self
            .primes
            .iter()
            .copied()
            .filter(|&p| a.is_subset(&self.set(p)))
            .collect();
        minimal_among(&self.lattice, &over)
    }

    /// Minimal primes over `a`, computed as preimages of the minimal primes of `R/a`.
    pub fn min_primes_over_via_quotient(&self, a: ElementSet) -> Result<Vec<usize>> {
        let (q, pi) = quotient_by_set(&self.ring, a)?;
        let qa = RingAnalysis::new(&q);
        let mut out: Vec<usize> = qa
            .min_primes
            .iter()
            .map(|&p| {
                self.index_of(pi.preimage(qa.set(p))).ok_or_else(|| {
                    Error::Inconsistent("preimage of a prime is not an ideal".into())
                })
            })
            .collect::<Result<_>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// Minimal primes over `a` with the quotient route as a cross-check.
    pub fn min_primes_over_checked(&self, a: ElementSet) -> Result<Vec<usize>> {
        let direct = self.min_primes_over(a);
        if a.contains(self.ring.one()) {
            return Ok(direct);
        }
        let via = self.min_primes_over_via_quotient(a)?;
        if direct != via {
            return Err(Error::Inconsistent(format!(
                "minimal primes over {} disagree: direct {:?}, via quotient {:?}",
                self.ring.fmt_set(a),
                direct,
                via
            )));
        }
        Ok(direct)
    }

    /// Smallest `k` with `I^k = 0`, if any.
    pub fn nilpotency_index(&self, i: usize) -> Option<usize> {
        let zero = 0;
        let mut cur = i;
        for k in 1..=self.ring.order() + 1 {
            if cur == zero {
                return Some(k);
            }
            let next = self.lattice.product(cur, i);
            if next == cur {
                return None;
            }
            cur = next;
        }
        None
    }

    /// Products of ideals drawn from `factors` (repetition allowed): does one
    /// of them land inside `target`?
    fn some_product_inside(&self, factors: &[usize], target: usize) -> bool {
        let mut seen = vec![false; self.lattice.len()];
        let mut stack: Vec<usize> = factors.to_vec();
        for &f in factors {
            seen[f] = true;
        }
        while let Some(x) = stack.pop() {
            if self.lattice.includes(x, target) {
                return true;
            }
            for &f in factors {
                let y = self.lattice.product(x, f);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Three independent characterisations of "every ideal contains a finite
    /// product of primes over it", per proper ideal.
    pub fn prime_rich_evidence(&self) -> Result<Vec<PrimeRichEvidence>> {
        let mut out = Vec::new();
        for a in self.proper_ideals() {
            let aset = self.set(a);
            let over: Vec<usize> = self
                .primes
                .iter()
                .copied()
                .filter(|&p| self.lattice.includes(a, p))
                .collect();
            let mins = self.min_primes_over_checked(aset)?;
            let by_primes = self.some_product_inside(&over, a);
            let by_min_primes = self.some_product_inside(&mins, a);
            let (q, _) = quotient_by_set(&self.ring, aset)?;
            let qa = RingAnalysis::new(&q);
            let rad = qa
                .index_of(qa.radical)
                .ok_or_else(|| Error::Inconsistent("radical is not an ideal".into()))?;
            let nilpotent_radical = qa.nilpotency_index(rad).is_some();
            let full = mins.iter().fold(self.lattice.len() - 1, |acc, &p| {
                self.lattice.product(acc, p)
            });
            let mut exponent = None;
            let mut pw = full;
            for k in 1..=self.ring.order() {
                if self.lattice.includes(pw, a) {
                    exponent = Some(k);
                    break;
                }
                pw = self.lattice.product(pw, full);
            }
            let ev = PrimeRichEvidence {
                ideal: aset,
                by_primes,
                by_min_primes,
                nilpotent_radical,
                exponent,
                min_prime_count: mins.len(),
            };
            if !(by_primes == by_min_primes && by_min_primes == nilpotent_radical) {
                return Err(Error::Inconsistent(format!(
                    "prime-rich characterisations disagree at {:?}",
                    ev
                )));
            }
            out.push(ev);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRichEvidence {
    pub ideal: ElementSet,
    /// Contains a product of primes containing it.
    pub by_primes: bool,
    /// Contains a product of its minimal primes.
    pub by_min_primes: bool,
    /// Finitely many minimal primes and nilpotent prime radical mod the ideal.
    pub nilpotent_radical: bool,
    /// Least `k` with `(p_1 ⋯ p_m)^k` inside the ideal, minimal primes in lattice order.
    pub exponent: Option<usize>,
    pub min_prime_count: usize,
}

pub fn all_ideals(r: &Ring) -> Vec<Ideal> {
    IdealLattice::new(r)
        .ideals
        .into_iter()
        .map(|s| Ideal::trusted(r, s, Side::Two))
        .collect()
}

/// Minimal primes over a two-sided ideal; the direct and quotient routes must agree.
pub fn min_primes_over(a: &Ideal) -> Result<Vec<Ideal>> {
    if a.side != Side::Two {
        return Err(Error::Sidedness("two-sided"));
    }
    let an = RingAnalysis::new(&a.ring);
    Ok(an
        .min_primes_over_checked(a.members)?
        .into_iter()
        .map(|i| an.ideal(i))
        .collect())
}

pub fn min_primes(r: &Ring) -> Vec<Ideal> {
    let an = RingAnalysis::new(r);
    an.min_primes.iter().map(|&i| an.ideal(i)).collect()
}

/// Elements `a` such that every sequence `a_{i+1} ∈ a_i R a_i` reaches zero.
pub fn strongly_nilpotent_set(r: &RingTable) -> ElementSet {
    let n = r.order();
    let succ: Vec<ElementSet> = (0..n)
        .map(|x| {
            let mut s = r.empty_set();
            for y in r.right_multiples(x).iter() {
                s.insert(r.mul(y, x));
            }
            s.remove(r.zero());
            s
        })
        .collect();
    let mut safe = r.zero_set();
    loop {
        let mut grew = false;
        for (x, next) in succ.iter().enumerate() {
            if !safe.contains(x) && next.is_subset(&safe) {
                safe.insert(x);
                grew = true;
            }
        }
        if !grew {
            return safe;
        }
    }
}

/// Intersection of the minimal primes, checked against the strongly nilpotent elements.
pub fn prime_radical(r: &Ring) -> Result<Ideal> {
    let an = RingAnalysis::new(r);
    let sn = strongly_nilpotent_set(r);
    if sn != an.radical {
        return Err(Error::Inconsistent(format!(
            "prime radical {} differs from strongly nilpotent set {}",
            r.fmt_set(an.radical),
            r.fmt_set(sn)
        )));
    }
    Ok(Ideal::trusted(r, an.radical, Side::Two))
}

pub fn is_semiprime_ring(r: &Ring) -> Result<bool> {
    Ok(prime_radical(r)?.is_zero())
}

pub fn is_nilpotent_ideal(i: &Ideal) -> bool {
    let r = &i.ring;
    let mut cur = i.members;
    for _ in 0..=r.order() {
        if cur.len() == 1 {
            return true;
        }
        let next = product_set(r, cur, i.members);
        if next == cur {
            return false;
        }
        cur = next;
    }
    false
}

pub fn is_prime_rich(r: &Ring) -> Result<bool> {
    Ok(RingAnalysis::new(r)
        .prime_rich_evidence()?
        .iter()
        .all(|e| e.by_min_primes))
}

/// Zero intersection, and dropping any member makes the intersection nonzero.
pub fn is_irredundant(r: &RingTable, family: &[ElementSet]) -> bool {
    let meet = |skip: Option<usize>| {
        family
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != skip)
            .fold(r.full_set(), |acc, (_, s)| acc.intersection(s))
    };
    meet(None).len() == 1 && (0..family.len()).all(|i| meet(Some(i)).len() > 1)
}
