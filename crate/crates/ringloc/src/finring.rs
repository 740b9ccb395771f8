//! Finite rings given by explicit addition and multiplication tables.
//!
//! Elements are dense ids `0..order`. Subsets are [`ElementSet`] bitmasks, so
//! the hard ceiling on the order is [`MAX_ORDER`]; the working cap used by the
//! constructors is a separate, smaller number chosen by the caller.

use std::fmt;
use std::sync::Arc;

use crate::error::{AuditFailure, Error, Result};
use crate::ideals::{Ideal, Side};

pub const MAX_ORDER: usize = 64;
pub const DEFAULT_CAP: usize = 16;

pub type Ring = Arc<RingTable>;

/// Subset of a finite ring, stored as a bitmask over element ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u64,
    order: u8,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        ElementSet {
            bits: 0,
            order: order as u8,
        }
    }

    pub fn full(order: usize) -> Self {
        let bits = if order == 64 {
            u64::MAX
        } else {
            (1u64 << order) - 1
        };
        ElementSet {
            bits,
            order: order as u8,
        }
    }

    pub fn from_bits(order: usize, bits: u64) -> Self {
        let full = Self::full(order).bits;
        ElementSet {
            bits: bits & full,
            order: order as u8,
        }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(order: usize, it: I) -> Self {
        let mut s = Self::empty(order);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order as usize && self.bits >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.order as usize);
        let had = self.contains(x);
        self.bits |= 1 << x;
        !had
    }

    pub fn remove(&mut self, x: usize) {
        self.bits &= !(1 << x);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn union(&self, o: &Self) -> Self {
        debug_assert_eq!(self.order, o.order);
        ElementSet {
            bits: self.bits | o.bits,
            order: self.order,
        }
    }

    pub fn intersection(&self, o: &Self) -> Self {
        debug_assert_eq!(self.order, o.order);
        ElementSet {
            bits: self.bits & o.bits,
            order: self.order,
        }
    }

    pub fn difference(&self, o: &Self) -> Self {
        ElementSet {
            bits: self.bits & !o.bits,
            order: self.order,
        }
    }

    pub fn complement(&self) -> Self {
        ElementSet {
            bits: !self.bits & Self::full(self.order()).bits,
            order: self.order,
        }
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.bits & !o.bits == 0
    }

    pub fn is_disjoint(&self, o: &Self) -> bool {
        self.bits & o.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut b = self.bits;
        std::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let x = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable finite ring with identity.
#[derive(Clone)]
pub struct RingTable {
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: usize,
    one: usize,
    label: String,
    names: Vec<String>,
    // R·x and x·R for each x
    left_mult: Vec<ElementSet>,
    right_mult: Vec<ElementSet>,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingTable({}, order {})", self.label, self.order)
    }
}

impl PartialEq for RingTable {
    fn eq(&self, o: &Self) -> bool {
        self.order == o.order && self.add == o.add && self.mul == o.mul
    }
}

impl RingTable {
    /// Builds a ring from raw tables and audits every axiom.
    pub fn from_tables(
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<u8>,
        mul: Vec<u8>,
    ) -> Result<Ring> {
        let t = Self::from_tables_unchecked(label, names, add, mul)?;
        t.audit().map_err(Error::Audit)?;
        Ok(Arc::new(t))
    }

    /// Builds a ring without the axiom audit. Identities are located on a
    /// best-effort basis; [`RingTable::audit`] reports what is broken.
    pub fn from_tables_unchecked(
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<u8>,
        mul: Vec<u8>,
    ) -> Result<RingTable> {
        let n = names.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::InvalidArgument(
                "table size does not match order".into(),
            ));
        }
        if add.iter().chain(mul.iter()).any(|&v| v as usize >= n) {
            return Err(Error::InvalidArgument("table entry out of range".into()));
        }
        let zero = (0..n)
            .find(|&e| (0..n).all(|x| add[e * n + x] as usize == x && add[x * n + e] as usize == x))
            .unwrap_or(0);
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .unwrap_or(0);
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| add[x * n + y] as usize == zero)
                    .unwrap_or(zero) as u8
            })
            .collect();
        let mut left_mult = vec![ElementSet::empty(n); n];
        let mut right_mult = vec![ElementSet::empty(n); n];
        for x in 0..n {
            for r in 0..n {
                left_mult[x].insert(mul[r * n + x] as usize);
                right_mult[x].insert(mul[x * n + r] as usize);
            }
        }
        Ok(RingTable {
            order: n,
            add,
            mul,
            neg,
            zero,
            one,
            label: label.into(),
            names,
            left_mult,
            right_mult,
        })
    }

    /// Checks abelian group, associativity, identity and both distributive laws.
    pub fn audit(&self) -> std::result::Result<(), AuditFailure> {
        let n = self.order;
        let fail = |axiom: &str, w: Vec<usize>| {
            Err(AuditFailure {
                axiom: axiom.into(),
                witness: w,
            })
        };
        for x in 0..n {
            if self.add(self.zero, x) != x || self.add(x, self.zero) != x {
                return fail("additive identity", vec![self.zero, x]);
            }
            if self.add(x, self.neg(x)) != self.zero {
                return fail("additive inverse", vec![x]);
            }
            if self.mul(self.one, x) != x || self.mul(x, self.one) != x {
                return fail("multiplicative identity", vec![self.one, x]);
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return fail("commutativity of addition", vec![x, y]);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.add(x, y);
                let pxy = self.mul(x, y);
                for z in 0..n {
                    if self.add(xy, z) != self.add(x, self.add(y, z)) {
                        return fail("associativity of addition", vec![x, y, z]);
                    }
                    if self.mul(pxy, z) != self.mul(x, self.mul(y, z)) {
                        return fail("associativity of multiplication", vec![x, y, z]);
                    }
                    if self.mul(x, self.add(y, z)) != self.add(pxy, self.mul(x, z)) {
                        return fail("left distributivity", vec![x, y, z]);
                    }
                    if self.mul(self.add(y, z), x) != self.add(self.mul(y, x), self.mul(z, x)) {
                        return fail("right distributivity", vec![y, z, x]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Copy of this table with one multiplication cell overwritten.
    pub fn with_corrupted_mul(&self, x: usize, y: usize, value: usize) -> Result<RingTable> {
        let mut mul = self.mul.clone();
        mul[x * self.order + y] = value as u8;
        Self::from_tables_unchecked(
            format!("{} (corrupted)", self.label),
            self.names.clone(),
            self.add.clone(),
            mul,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn one(&self) -> usize {
        self.one
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }
    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }
    pub fn zero_set(&self) -> ElementSet {
        ElementSet::singleton(self.order, self.zero)
    }
    /// `R·x`
    pub fn left_multiples(&self, x: usize) -> ElementSet {
        self.left_mult[x]
    }
    /// `x·R`
    pub fn right_multiples(&self, x: usize) -> ElementSet {
        self.right_mult[x]
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    pub fn check_elem(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(x))
        }
    }

    /// Additive subgroup generated by `s`.
    pub fn additive_span(&self, s: ElementSet) -> ElementSet {
        let mut out = self.zero_set();
        for g in s.iter() {
            if out.contains(g) {
                continue;
            }
            // out + <g>
            let mut cur = out;
            let mut m = g;
            while !out.contains(m) {
                for a in out.iter() {
                    cur.insert(self.add(a, m));
                }
                m = self.add(m, g);
            }
            out = cur;
        }
        out
    }

    pub fn image_set(&self, f: impl Fn(usize) -> usize, s: ElementSet) -> ElementSet {
        ElementSet::from_elems(self.order, s.iter().map(f))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.order).any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        (0..self.order).find(|&y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn units(&self) -> ElementSet {
        ElementSet::from_elems(self.order, (0..self.order).filter(|&x| self.is_unit(x)))
    }

    /// Elements that are neither left nor right zero divisors.
    pub fn regular_elements(&self) -> ElementSet {
        let n = self.order;
        let z = self.zero;
        ElementSet::from_elems(
            n,
            (0..n).filter(|&x| {
                (0..n).all(|y| y == z || (self.mul(x, y) != z && self.mul(y, x) != z))
            }),
        )
    }

    /// `Rx = xR`
    pub fn is_normal_element(&self, x: usize) -> bool {
        self.left_mult[x] == self.right_mult[x]
    }

    pub fn normal_elements(&self) -> ElementSet {
        ElementSet::from_elems(
            self.order,
            (0..self.order).filter(|&x| self.is_normal_element(x)),
        )
    }

    pub fn centre_set(&self) -> ElementSet {
        let n = self.order;
        ElementSet::from_elems(
            n,
            (0..n).filter(|&x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x))),
        )
    }

    pub fn same_ring(&self, o: &RingTable) -> bool {
        std::ptr::eq(self, o) || self == o
    }

    /// Human-readable rendering of a subset.
    pub fn fmt_set(&self, s: ElementSet) -> String {
        let v: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", v.join(", "))
    }
}

/// Ring homomorphism given by its table of values.
#[derive(Clone, Debug)]
pub struct RingHom {
    pub source: Ring,
    pub target: Ring,
    pub map: Vec<usize>,
}

impl RingHom {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, s: ElementSet) -> ElementSet {
        ElementSet::from_elems(self.target.order(), s.iter().map(|x| self.map[x]))
    }

    pub fn preimage(&self, t: ElementSet) -> ElementSet {
        ElementSet::from_elems(
            self.source.order(),
            (0..self.source.order()).filter(|&x| t.contains(self.map[x])),
        )
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage(self.target.zero_set())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full_set()) == self.target.full_set()
    }

    /// Checks additivity, multiplicativity and `f(1) = 1`.
    pub fn verify(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        if self.map.len() != s.order() || self.map[s.one()] != t.one() {
            return false;
        }
        s.elements().all(|x| {
            s.elements().all(|y| {
                self.map[s.add(x, y)] == t.add(self.map[x], self.map[y])
                    && self.map[s.mul(x, y)] == t.mul(self.map[x], self.map[y])
            })
        })
    }

    pub fn compose(&self, g: &RingHom) -> RingHom {
        RingHom {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.iter().map(|&x| g.map[x]).collect(),
        }
    }
}

fn check_cap(order: u128, cap: usize) -> Result<usize> {
    if cap > MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "cap {cap} exceeds the hard limit {MAX_ORDER}"
        )));
    }
    if order == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if order > cap as u128 {
        return Err(Error::SizeLimit { order, cap });
    }
    Ok(order as usize)
}

fn build(
    label: String,
    names: Vec<String>,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<Ring> {
    let n = names.len();
    let mut at = Vec::with_capacity(n * n);
    let mut mt = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            at.push(add(x, y) as u8);
            mt.push(mul(x, y) as u8);
        }
    }
    RingTable::from_tables(label, names, at, mt)
}

pub fn zmod(n: usize, cap: usize) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    check_cap(n as u128, cap)?;
    build(
        format!("zmod({n})"),
        (0..n).map(|x| x.to_string()).collect(),
        |x, y| (x + y) % n,
        |x, y| (x * y) % n,
    )
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

// Polynomials over F_p as little-endian coefficient vectors.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = (1..p).find(|&i| i * m[dm] % p == 1).unwrap();
    while a.len() > dm {
        let c = a[a.len() - 1] * lead_inv % p;
        let shift = a.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * mi % p) % p;
        }
        a.pop();
    }
    a
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g: Vec<usize> = (0..d).map(|i| low / p.pow(i as u32) % p).collect();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_name(c: &[usize]) -> String {
    let mut terms = Vec::new();
    for (i, &ci) in c.iter().enumerate().rev() {
        if ci == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        };
        terms.push(match (ci, i) {
            (_, 0) => ci.to_string(),
            (1, _) => mono,
            _ => format!("{ci}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Finite field of prime-power order `q`, built from the first monic
/// irreducible polynomial in lexicographic order.
pub fn gf(q: usize, cap: usize) -> Result<Ring> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    check_cap(q as u128, cap)?;
    let label = format!("gf({q})");
    if k == 1 {
        return build(
            label,
            (0..p).map(|x| x.to_string()).collect(),
            |x, y| (x + y) % p,
            |x, y| (x * y) % p,
        );
    }
    let modulus = (0..p.pow(k as u32))
        .map(|low| {
            let mut f: Vec<usize> = (0..k).map(|i| low / p.pow(i as u32) % p).collect();
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");
    let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| x / p.pow(i as u32) % p).collect() };
    let encode = |c: &[usize]| -> usize {
        c.iter()
            .enumerate()
            .map(|(i, &ci)| ci * p.pow(i as u32))
            .sum()
    };
    let names = (0..q).map(|x| poly_name(&digits(x))).collect();
    build(
        label,
        names,
        |x, y| {
            let (a, b) = (digits(x), digits(y));
            encode(
                &a.iter()
                    .zip(&b)
                    .map(|(u, v)| (u + v) % p)
                    .collect::<Vec<_>>(),
            )
        },
        |x, y| {
            let (a, b) = (digits(x), digits(y));
            let mut prod = vec![0; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(k, 0);
            encode(&r)
        },
    )
}

fn matrix_like(k: usize, base: &Ring, cap: usize, upper: bool) -> Result<Ring> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be positive".into(),
        ));
    }
    if !base.is_commutative() {
        return Err(Error::InvalidArgument(
            "base ring must be commutative".into(),
        ));
    }
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let q = base.order();
    let order = (q as u128)
        .checked_pow(slots.len() as u32)
        .unwrap_or(u128::MAX);
    let n = check_cap(order, cap)?;
    let decode = |x: usize| -> Vec<Vec<usize>> {
        let mut m = vec![vec![base.zero(); k]; k];
        let mut rest = x;
        for &(i, j) in &slots {
            m[i][j] = rest % q;
            rest /= q;
        }
        m
    };
    let encode = |m: &Vec<Vec<usize>>| -> usize {
        slots.iter().rev().fold(0, |acc, &(i, j)| acc * q + m[i][j])
    };
    let names = (0..n)
        .map(|x| {
            let m = decode(x);
            let rows: Vec<String> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&e| base.name(e).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            format!("[{}]", rows.join("; "))
        })
        .collect();
    let label = format!(
        "{}({k}, {})",
        if upper { "tri" } else { "mat" },
        base.label()
    );
    build(
        label,
        names,
        |x, y| {
            let (a, b) = (decode(x), decode(y));
            let c = (0..k)
                .map(|i| (0..k).map(|j| base.add(a[i][j], b[i][j])).collect())
                .collect();
            encode(&c)
        },
        |x, y| {
            let (a, b) = (decode(x), decode(y));
            let c = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            (0..k).fold(base.zero(), |acc, l| {
                                base.add(acc, base.mul(a[i][l], b[l][j]))
                            })
                        })
                        .collect()
                })
                .collect();
            encode(&c)
        },
    )
}

/// Full `k × k` matrix ring over a commutative base.
pub fn matrix_ring(k: usize, base: &Ring, cap: usize) -> Result<Ring> {
    matrix_like(k, base, cap, false)
}

/// Upper triangular `k × k` matrices over a commutative base.
pub fn upper_triangular(k: usize, base: &Ring, cap: usize) -> Result<Ring> {
    matrix_like(k, base, cap, true)
}

/// Direct product; the pair `(a, b)` has id `a * |B| + b`.
pub fn product(a: &Ring, b: &Ring, cap: usize) -> Result<Ring> {
    let (na, nb) = (a.order(), b.order());
    check_cap(na as u128 * nb as u128, cap)?;
    let names = (0..na * nb)
        .map(|x| format!("({}, {})", a.name(x / nb), b.name(x % nb)))
        .collect();
    build(
        format!("prod({}, {})", a.label(), b.label()),
        names,
        |x, y| a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb),
        |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb),
    )
}

/// Quotient by a proper two-sided ideal. Each coset is represented by its
/// least element id; cosets are numbered in order of their representatives.
pub fn make_quotient(ideal: &Ideal) -> Result<(Ring, RingHom)> {
    if ideal.side() != Side::Two {
        return Err(Error::Sidedness("two-sided"));
    }
    quotient_by_set(ideal.ring(), ideal.members())
}

pub(crate) fn quotient_by_set(r: &Ring, members: ElementSet) -> Result<(Ring, RingHom)> {
    if members.contains(r.one()) {
        return Err(Error::ImproperIdeal);
    }
    let n = r.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for i in members.iter() {
            coset_of[r.add(x, i)] = c;
        }
    }
    let names = reps
        .iter()
        .map(|&x| {
            if members.len() == 1 {
                r.name(x).to_string()
            } else {
                format!("[{}]", r.name(x))
            }
        })
        .collect();
    let label = format!("{} / {}", r.label(), r.fmt_set(members));
    let q = build(
        label,
        names,
        |a, b| coset_of[r.add(reps[a], reps[b])],
        |a, b| coset_of[r.mul(reps[a], reps[b])],
    )?;
    let hom = RingHom {
        source: r.clone(),
        target: q.clone(),
        map: coset_of,
    };
    Ok((q, hom))
}

/// The subring on `set`, re-indexed in increasing id order, with its inclusion.
pub(crate) fn subring(r: &Ring, set: ElementSet, label: String) -> Result<(Ring, RingHom)> {
    let elems = set.to_vec();
    let mut index = vec![usize::MAX; r.order()];
    for (i, &x) in elems.iter().enumerate() {
        index[x] = i;
    }
    let closed = elems.iter().all(|&x| {
        elems
            .iter()
            .all(|&y| set.contains(r.add(x, y)) && set.contains(r.mul(x, y)))
    });
    if !closed || !set.contains(r.one()) {
        return Err(Error::InvalidArgument("set is not a subring".into()));
    }
    let names = elems.iter().map(|&x| r.name(x).to_string()).collect();
    let s = build(
        label,
        names,
        |a, b| index[r.add(elems[a], elems[b])],
        |a, b| index[r.mul(elems[a], elems[b])],
    )?;
    let hom = RingHom {
        source: s.clone(),
        target: r.clone(),
        map: elems,
    };
    Ok((s, hom))
}
