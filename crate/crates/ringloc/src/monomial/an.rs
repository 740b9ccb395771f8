//! The algebras `A_n = K⟨x_1..x_m⟩ ⊗ K[z_1..z_n] / (x_i z_i)`, worked with
//! through monomial normal forms up to a degree bound. Linear algebra is over
//! the two-element field.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_N: usize = 4;
pub const MAX_EXTRA: usize = 2;
pub const MAX_DEGREE: u32 = 8;

/// A normal form `w·z^e`: the letters of `w` in order, then the central part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NCMonomial {
    pub word: Vec<u8>,
    pub zexp: Vec<u32>,
    pub is_zero: bool,
}

impl NCMonomial {
    pub fn degree(&self) -> u32 {
        self.word.len() as u32 + self.zexp.iter().sum::<u32>()
    }

    pub fn word_support(&self) -> u64 {
        self.word.iter().fold(0, |acc, &l| acc | 1 << l)
    }

    pub fn z_support(&self) -> u64 {
        self.zexp
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Letters and exponents, forgetting the order of the letters.
    fn content(&self) -> (Vec<u8>, Vec<u32>) {
        let mut w = self.word.clone();
        w.sort();
        (w, self.zexp.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Monomial(NCMonomial),
    /// The product has degree above the bound.
    Truncated {
        degree: u32,
    },
}

/// Sums of distinct nonzero monomials over `F_2`.
pub type Poly = BTreeSet<NCMonomial>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AnAlgebra {
    pub n: usize,
    /// Free letters `y_1..y_extra` with no relations, so `m = n + extra`.
    pub extra: usize,
    pub degree: u32,
}

pub fn default_degree(n: usize) -> u32 {
    match n {
        0..=2 => 6,
        3 => 5,
        _ => 4,
    }
}

pub fn an_build(n: usize, degree: u32) -> Result<AnAlgebra> {
    AnAlgebra::new(n, 0, degree)
}

pub fn fmt_index_set(i: u64) -> String {
    let v: Vec<String> = (0..64)
        .filter(|k| i >> k & 1 == 1)
        .map(|k| (k + 1).to_string())
        .collect();
    format!("{{{}}}", v.join(","))
}

impl AnAlgebra {
    pub fn new(n: usize, extra: usize, degree: u32) -> Result<AnAlgebra> {
        if n > MAX_N {
            return Err(Error::SizeLimit {
                order: n as u128,
                cap: MAX_N,
            });
        }
        if extra > MAX_EXTRA {
            return Err(Error::SizeLimit {
                order: extra as u128,
                cap: MAX_EXTRA,
            });
        }
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "degree bound {degree} outside 1..={MAX_DEGREE}"
            )));
        }
        Ok(AnAlgebra { n, extra, degree })
    }

    pub fn letters(&self) -> usize {
        self.n + self.extra
    }

    pub fn full_index_set(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn monomial(&self, word: Vec<u8>, zexp: Vec<u32>) -> NCMonomial {
        assert_eq!(zexp.len(), self.n);
        assert!(word.iter().all(|&l| (l as usize) < self.letters()));
        let is_zero = word
            .iter()
            .any(|&l| (l as usize) < self.n && zexp[l as usize] > 0);
        NCMonomial {
            word,
            zexp,
            is_zero,
        }
    }

    pub fn one(&self) -> NCMonomial {
        self.monomial(vec![], vec![0; self.n])
    }

    /// `x_{i+1}`
    pub fn x(&self, i: usize) -> NCMonomial {
        self.monomial(vec![i as u8], vec![0; self.n])
    }

    /// `y_{k+1}`
    pub fn y(&self, k: usize) -> NCMonomial {
        self.monomial(vec![(self.n + k) as u8], vec![0; self.n])
    }

    /// `z_{i+1}`
    pub fn z(&self, i: usize) -> NCMonomial {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.monomial(vec![], e)
    }

    fn mul_unbounded(&self, a: &NCMonomial, b: &NCMonomial) -> NCMonomial {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        let zexp = a.zexp.iter().zip(&b.zexp).map(|(x, y)| x + y).collect();
        let mut m = self.monomial(word, zexp);
        m.is_zero |= a.is_zero || b.is_zero;
        m
    }

    pub fn multiply(&self, a: &NCMonomial, b: &NCMonomial) -> Product {
        let m = self.mul_unbounded(a, b);
        if m.degree() > self.degree {
            Product::Truncated { degree: m.degree() }
        } else {
            Product::Monomial(m)
        }
    }

    pub fn name(&self, m: &NCMonomial) -> String {
        if m.is_zero {
            return "0".into();
        }
        let mut parts: Vec<String> = m
            .word
            .iter()
            .map(|&l| {
                let l = l as usize;
                if l < self.n {
                    format!("x{}", l + 1)
                } else {
                    format!("y{}", l - self.n + 1)
                }
            })
            .collect();
        for (i, &e) in m.zexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("z{}", i + 1)),
                _ => parts.push(format!("z{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn poly_name(&self, p: &Poly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        p.iter()
            .map(|m| self.name(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Nonzero monomials of degree `≤ d`, by degree, then word, then exponents.
    pub fn monomials(&self, d: u32) -> Vec<NCMonomial> {
        let mut zparts: Vec<Vec<Vec<u32>>> = vec![vec![vec![0; self.n]]];
        for k in 1..=d as usize {
            let mut next = BTreeSet::new();
            for e in &zparts[k - 1] {
                for i in 0..self.n {
                    let mut f = e.clone();
                    f[i] += 1;
                    next.insert(f);
                }
            }
            zparts.push(next.into_iter().collect());
        }
        let mut words: Vec<Vec<Vec<u8>>> = vec![vec![vec![]]];
        for k in 1..=d as usize {
            let mut next = Vec::new();
            for w in &words[k - 1] {
                for l in 0..self.letters() {
                    let mut v = w.clone();
                    v.push(l as u8);
                    next.push(v);
                }
            }
            words.push(next);
        }
        let mut out = Vec::new();
        for total in 0..=d as usize {
            for wl in 0..=total {
                for w in &words[wl] {
                    for e in &zparts[total - wl] {
                        let m = self.monomial(w.clone(), e.clone());
                        if !m.is_zero {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    /// `m ∈ 𝔭_I = (x_i, z_j)_{i∈I, j∉I}`.
    pub fn in_prime(&self, i: u64, m: &NCMonomial) -> bool {
        m.is_zero || m.word_support() & i != 0 || m.z_support() & !i & self.full_index_set() != 0
    }

    pub fn prime_name(&self, i: u64) -> String {
        let mut gens: Vec<String> = (0..self.n)
            .filter(|k| i >> k & 1 == 1)
            .map(|k| format!("x{}", k + 1))
            .collect();
        gens.extend(
            (0..self.n)
                .filter(|k| i >> k & 1 == 0)
                .map(|k| format!("z{}", k + 1)),
        );
        format!("p_{} = ({})", fmt_index_set(i), gens.join(", "))
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for p in a {
            for q in b {
                let m = self.mul_unbounded(p, q);
                if !m.is_zero && !out.remove(&m) {
                    out.insert(m);
                }
            }
        }
        out
    }
}

impl fmt::Display for AnAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.extra == 0 {
            write!(f, "A_{} (degree ≤ {})", self.n, self.degree)
        } else {
            write!(
                f,
                "A_{} with {} free letters (degree ≤ {})",
                self.n, self.extra, self.degree
            )
        }
    }
}

/// The index sets `I ⊆ [n]` of the minimal primes `𝔭_I`.
pub fn an_min_primes(a: &AnAlgebra) -> Vec<u64> {
    (0..1u64 << a.n).collect()
}

/// The centre in degrees `≤ d - 1`, as a basis of the kernel of all
/// commutators `[g, ·]` with the letters `g`.
#[derive(Clone, Debug)]
pub struct CentreScan {
    pub max_degree: u32,
    pub basis: Vec<Poly>,
}

impl CentreScan {
    /// Basis vectors whose monomials contain a letter.
    pub fn non_z(&self) -> impl Iterator<Item = &Poly> {
        self.basis
            .iter()
            .filter(|p| p.iter().next().map(|m| !m.word.is_empty()).unwrap_or(false))
    }
}

fn nullspace(columns: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    let mut pivots: BTreeMap<usize, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        let mut v = col;
        let mut combo: BTreeSet<usize> = [j].into();
        while let Some(&lead) = v.iter().next() {
            match pivots.get(&lead) {
                Some((pv, pc)) => {
                    v = v.symmetric_difference(pv).copied().collect();
                    combo = combo.symmetric_difference(pc).copied().collect();
                }
                None => break,
            }
        }
        match v.iter().next() {
            Some(&lead) => {
                pivots.insert(lead, (v, combo));
            }
            None => kernel.push(combo),
        }
    }
    kernel
}

pub fn centre_scan(a: &AnAlgebra) -> CentreScan {
    let max_degree = a.degree - 1;
    let mut classes: BTreeMap<(Vec<u8>, Vec<u32>), Vec<NCMonomial>> = BTreeMap::new();
    for m in a.monomials(max_degree) {
        classes.entry(m.content()).or_default().push(m);
    }
    let mut basis = Vec::new();
    for ms in classes.into_values() {
        let mut rows: BTreeMap<NCMonomial, usize> = BTreeMap::new();
        let columns: Vec<BTreeSet<usize>> = ms
            .iter()
            .map(|m| {
                let mut col = BTreeSet::new();
                for g in 0..a.letters() {
                    let gm = a.monomial(vec![g as u8], vec![0; a.n]);
                    for t in [a.mul_unbounded(&gm, m), a.mul_unbounded(m, &gm)] {
                        if !t.is_zero {
                            let next = rows.len();
                            let r = *rows.entry(t).or_insert(next);
                            if !col.remove(&r) {
                                col.insert(r);
                            }
                        }
                    }
                }
                col
            })
            .collect();
        for combo in nullspace(columns) {
            basis.push(combo.into_iter().map(|j| ms[j].clone()).collect());
        }
    }
    CentreScan { max_degree, basis }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnClause {
    pub id: &'static str,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnReport {
    pub algebra: AnAlgebra,
    pub clauses: Vec<AnClause>,
}

impl AnReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, id: &str) -> Option<&AnClause> {
        self.clauses.iter().find(|c| c.id == id)
    }
}

fn random_poly(a: &AnAlgebra, pool: &[NCMonomial], rng: &mut ChaCha8Rng) -> Poly {
    let terms = rng.gen_range(1..=4);
    let mut p = Poly::new();
    for _ in 0..terms {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        if !p.remove(&m) {
            p.insert(m);
        }
    }
    if p.is_empty() {
        p.insert(a.one());
    }
    p
}

fn clause_domain(a: &AnAlgebra, all: &[NCMonomial]) -> AnClause {
    let d = a.degree;
    let mut failure = None;
    'outer: for i in an_min_primes(a) {
        let q: Vec<&NCMonomial> = all.iter().filter(|m| !a.in_prime(i, m)).collect();
        // `all` is sorted by degree
        for p in &q {
            for r in q.iter().take_while(|r| p.degree() + r.degree() <= d) {
                let m = a.mul_unbounded(p, r);
                if m.is_zero || a.in_prime(i, &m) {
                    failure = Some(format!(
                        "in A/{}: {} * {} = 0",
                        a.prime_name(i),
                        a.name(p),
                        a.name(r)
                    ));
                    break 'outer;
                }
            }
        }
        let half: Vec<NCMonomial> = q
            .iter()
            .filter(|m| m.degree() <= d / 2)
            .map(|m| (*m).clone())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ i);
        for _ in 0..64 {
            let p = random_poly(a, &half, &mut rng);
            let r = random_poly(a, &half, &mut rng);
            let prod: Poly = a
                .poly_mul(&p, &r)
                .into_iter()
                .filter(|m| !a.in_prime(i, m))
                .collect();
            if prod.is_empty() {
                failure = Some(format!(
                    "in A/{}: ({}) * ({}) = 0",
                    a.prime_name(i),
                    a.poly_name(&p),
                    a.poly_name(&r)
                ));
                break 'outer;
            }
        }
    }
    AnClause {
        id: "i",
        statement: "every A/p_I has no zero divisors among normal forms".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| {
            format!("verified to degree {d} (all monomial pairs, 64 random sums per prime)")
        }),
    }
}

fn clause_incomparable(a: &AnAlgebra) -> AnClause {
    let gens: Vec<NCMonomial> = (0..a.n)
        .map(|i| a.x(i))
        .chain((0..a.n).map(|i| a.z(i)))
        .collect();
    let primes = an_min_primes(a);
    let mut failure = None;
    for &i in &primes {
        for &j in &primes {
            if i != j && !gens.iter().any(|g| a.in_prime(i, g) && !a.in_prime(j, g)) {
                failure = Some(format!("{} ⊆ {}", a.prime_name(i), a.prime_name(j)));
            }
        }
    }
    AnClause {
        id: "ii",
        statement: "the primes p_I are pairwise incomparable".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "each ordered pair separated by a generator".into()),
    }
}

fn clause_intersection(a: &AnAlgebra, all: &[NCMonomial]) -> AnClause {
    let primes = an_min_primes(a);
    let hit = all
        .iter()
        .find(|m| primes.iter().all(|&i| a.in_prime(i, m)));
    AnClause {
        id: "iii",
        statement: "the intersection of all p_I has no nonzero monomial".into(),
        passed: hit.is_none(),
        detail: match hit {
            Some(m) => format!("{} lies in every p_I", a.name(m)),
            None => format!("verified to degree {}", a.degree),
        },
    }
}

fn clause_centre(a: &AnAlgebra, cs: &CentreScan) -> AnClause {
    let extra: Vec<&Poly> = cs.non_z().collect();
    let mut detail = Vec::new();
    for i in 0..a.n {
        let xi = a.x(i);
        let partner = (0..a.letters())
            .map(|g| a.monomial(vec![g as u8], vec![0; a.n]))
            .find(|g| a.mul_unbounded(&xi, g) != a.mul_unbounded(g, &xi));
        match partner {
            Some(g) => detail.push(format!(
                "{} not central: {}·{} ≠ {}·{}",
                a.name(&xi),
                a.name(&xi),
                a.name(&g),
                a.name(&g),
                a.name(&xi)
            )),
            None => detail.push(format!("{} commutes with every generator", a.name(&xi))),
        }
    }
    let passed = extra.is_empty();
    if let Some(p) = extra.first() {
        detail.push(format!(
            "{} central elements outside K[z]; first: {}",
            extra.len(),
            a.poly_name(p)
        ));
    }
    AnClause {
        id: "iv",
        statement: format!(
            "centre in degrees ≤ {} is spanned by z-monomials",
            cs.max_degree
        ),
        passed,
        detail: detail.join("; "),
    }
}

fn in_prime_poly(a: &AnAlgebra, i: u64, p: &Poly) -> bool {
    p.iter().all(|m| a.in_prime(i, m))
}

fn clause_centre_meet(a: &AnAlgebra, cs: &CentreScan) -> AnClause {
    // a basis vector lies in a monomial ideal iff its content does; pure z
    // vectors are single monomials, so the claim reduces to: no basis vector
    // with a letter lies in p_I
    let mut failure = None;
    for i in an_min_primes(a) {
        if let Some(p) = cs.non_z().find(|p| in_prime_poly(a, i, p)) {
            failure = Some(format!(
                "{} ∩ Z contains {}, not in (z_j)_{{j ∉ I}}",
                a.prime_name(i),
                a.poly_name(p)
            ));
            break;
        }
    }
    AnClause {
        id: "v",
        statement: "p_I ∩ Z = (z_j)_{j ∉ I}".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| format!("verified in degrees ≤ {}", cs.max_degree)),
    }
}

fn clause_rho(a: &AnAlgebra, cs: &CentreScan) -> AnClause {
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    'dom: for p in &cs.basis {
        for q in &cs.basis {
            let deg = p.iter().next().unwrap().degree() + q.iter().next().unwrap().degree();
            if deg <= cs.max_degree && a.poly_mul(p, q).is_empty() {
                problems.push(format!(
                    "centre has zero divisors: ({}) * ({}) = 0",
                    a.poly_name(p),
                    a.poly_name(q)
                ));
                break 'dom;
            }
        }
    }
    let full = a.full_index_set();
    let mut well_defined = Vec::new();
    for i in an_min_primes(a) {
        let meets_zero = !cs.basis.iter().any(|p| in_prime_poly(a, i, p));
        if meets_zero {
            well_defined.push(i);
        }
    }
    if well_defined == vec![full] {
        notes.push(format!(
            "p_I ∩ Z = 0 exactly for I = {}",
            fmt_index_set(full)
        ));
    } else {
        let v: Vec<String> = well_defined.iter().map(|&i| fmt_index_set(i)).collect();
        problems.push(format!(
            "p_I ∩ Z = 0 for I in [{}], expected only {}",
            v.join(", "),
            fmt_index_set(full)
        ));
    }
    if a.n > 0 {
        let z1 = a.z(0);
        let x1 = a.x(0);
        let z1_kills = cs
            .basis
            .iter()
            .find(|p| p.iter().all(|m| a.mul_unbounded(&z1, m).is_zero));
        match z1_kills {
            Some(p) => problems.push(format!(
                "z1 is a zero divisor of the centre: z1 * ({}) = 0",
                a.poly_name(p)
            )),
            None => notes.push("z1 is regular in Z".into()),
        }
        if a.mul_unbounded(&z1, &x1).is_zero {
            notes.push(
                "z1*x1 = 0, so z1 is a regular central element that is not regular in A".into(),
            );
        } else {
            problems.push("z1*x1 ≠ 0".into());
        }
    }
    AnClause {
        id: "vi",
        statement:
            "Z is a domain and restriction of minimal primes lands in min Z only for I = [n]".into(),
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            notes.join("; ")
        } else {
            problems.join("; ")
        },
    }
}

/// Bounded-degree verification of the structure of `A_n`: minimal primes,
/// their quotients, the centre and restriction to it.
pub fn an_verify(a: &AnAlgebra) -> AnReport {
    let all = a.monomials(a.degree);
    let cs = centre_scan(a);
    AnReport {
        algebra: *a,
        clauses: vec![
            clause_domain(a, &all),
            clause_incomparable(a),
            clause_intersection(a, &all),
            clause_centre(a, &cs),
            clause_centre_meet(a, &cs),
            clause_rho(a, &cs),
        ],
    }
}

/// Monomials of the localization at `V`: letters other than `x_v`, exponents
/// of `z_v` allowed to be negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct LocalMonomial {
    word: Vec<u8>,
    zexp: Vec<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnLocalization {
    pub algebra: AnAlgebra,
    pub v: u64,
    /// The kernel computed as `{m : s m t = 0}` equals `(x_v : v ∈ V)` in degrees `≤ d`.
    pub ass_matches: bool,
    pub ass_witness: Option<String>,
    /// Index sets of the `𝔭_I` containing the kernel.
    pub min_ass: Vec<u64>,
    pub expected_count: usize,
    /// Index sets `J ⊆ [n] \ V` of the minimal primes of the localized model.
    pub localized_primes: Vec<u64>,
    /// For each member of `min_ass`, the `J` whose prime equals its extension.
    pub images: Vec<Option<u64>>,
    pub bijective: bool,
    /// `σ⁻¹(S⁻¹𝔭_I) = 𝔭_I` in degrees `≤ d`.
    pub contraction_ok: bool,
    /// The localized quotients have no zero products of normal forms.
    pub domain_ok: bool,
}

impl AnLocalization {
    pub fn passed(&self) -> bool {
        self.ass_matches
            && self.min_ass.len() == self.expected_count
            && self.bijective
            && self.contraction_ok
            && self.domain_ok
    }
}

/// Localization at the multiplicative set generated by the central elements
/// `z_v`, `v ∈ V`.
pub fn an_localize_normal(a: &AnAlgebra, v: u64) -> Result<AnLocalization> {
    if v == 0 {
        return Err(Error::InvalidArgument("V must be non-empty".into()));
    }
    if v & !a.full_index_set() != 0 {
        return Err(Error::InvalidArgument(format!(
            "V = {} is not a subset of [{}]",
            fmt_index_set(v),
            a.n
        )));
    }
    let d = a.degree;
    let all = a.monomials(d);
    let mut sv = a.one();
    for k in (0..a.n).filter(|k| v >> k & 1 == 1) {
        sv = a.mul_unbounded(&sv, &a.z(k));
    }
    let in_ass = |m: &NCMonomial| a.mul_unbounded(&a.mul_unbounded(&sv, m), &sv).is_zero;
    let ass_witness = all
        .iter()
        .find(|m| in_ass(m) != (m.word_support() & v != 0))
        .map(|m| {
            format!(
                "{}: kernel membership {} disagrees with (x_v)",
                a.name(m),
                in_ass(m)
            )
        });
    let ass_gens: Vec<&NCMonomial> = all
        .iter()
        .filter(|m| m.degree() == 1 && in_ass(m))
        .collect();
    let min_ass: Vec<u64> = an_min_primes(a)
        .into_iter()
        .filter(|&i| ass_gens.iter().all(|g| a.in_prime(i, g)))
        .collect();
    let rest = a.full_index_set() & !v;
    let expected_count = 1usize << rest.count_ones();

    // the localized model
    let local_letters: Vec<u8> = (0..a.letters())
        .filter(|&l| l >= a.n || rest >> l & 1 == 1)
        .map(|l| l as u8)
        .collect();
    let mut local = Vec::new();
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    for wl in 0..=d {
        let zs: Vec<Vec<i32>> = {
            let mut out = vec![vec![0i32; a.n]];
            for _ in 0..(d - wl) {
                let mut next = BTreeSet::new();
                for e in &out {
                    next.insert(e.clone());
                    for k in 0..a.n {
                        let mut f = e.clone();
                        f[k] += 1;
                        next.insert(f.clone());
                        if v >> k & 1 == 1 {
                            let mut g = e.clone();
                            g[k] -= 1;
                            next.insert(g);
                        }
                    }
                }
                out = next.into_iter().collect();
            }
            out
        };
        for w in &words {
            for e in &zs {
                let zero = w.iter().any(|&l| (l as usize) < a.n && e[l as usize] > 0);
                if !zero {
                    local.push(LocalMonomial {
                        word: w.clone(),
                        zexp: e.clone(),
                    });
                }
            }
        }
        words = words
            .iter()
            .flat_map(|w| {
                local_letters
                    .iter()
                    .map(move |&l| [w.clone(), vec![l]].concat())
            })
            .collect();
    }
    let size =
        |m: &LocalMonomial| m.word.len() as i32 + m.zexp.iter().map(|e| e.abs()).sum::<i32>();
    local.sort();
    local.dedup();
    local.sort_by_key(|m| size(m));
    let local_in_prime = |j: u64, m: &LocalMonomial| {
        m.word
            .iter()
            .any(|&l| j >> l & 1 == 1 && (l as usize) < a.n)
            || m.zexp
                .iter()
                .enumerate()
                .any(|(k, &e)| e > 0 && rest >> k & 1 == 1 && j >> k & 1 == 0)
    };
    let localized_primes: Vec<u64> = (0..1u64 << a.n).filter(|&j| j & !rest == 0).collect();

    let mut images = Vec::new();
    for &i in &min_ass {
        // generators x_i (i ∈ I) and z_j (j ∉ I) pushed through σ
        let mut unit = false;
        let mut gx = 0u64;
        let mut gz = 0u64;
        for k in 0..a.n {
            if i >> k & 1 == 1 {
                if !in_ass(&a.x(k)) {
                    gx |= 1 << k;
                }
            } else if v >> k & 1 == 1 {
                unit = true;
            } else {
                gz |= 1 << k;
            }
        }
        let member = |m: &LocalMonomial| {
            unit || m
                .word
                .iter()
                .any(|&l| gx >> l & 1 == 1 && (l as usize) < a.n)
                || m.zexp
                    .iter()
                    .enumerate()
                    .any(|(k, &e)| e > 0 && gz >> k & 1 == 1)
        };
        let found = localized_primes
            .iter()
            .copied()
            .find(|&j| local.iter().all(|m| member(m) == local_in_prime(j, m)));
        images.push(found);
    }
    let mut hit: Vec<u64> = images.iter().flatten().copied().collect();
    hit.sort();
    hit.dedup();
    let bijective =
        images.iter().all(|x| x.is_some()) && hit.len() == images.len() && hit == localized_primes;

    let contraction_ok = localized_primes.iter().all(|&j| {
        all.iter().all(|m| {
            let lm = LocalMonomial {
                word: m.word.clone(),
                zexp: m.zexp.iter().map(|&e| e as i32).collect(),
            };
            let pulled = in_ass(m) || local_in_prime(j, &lm);
            pulled == a.in_prime(j | v, m)
        })
    });

    let domain_ok = localized_primes.iter().all(|&j| {
        let q: Vec<&LocalMonomial> = local.iter().filter(|m| !local_in_prime(j, m)).collect();
        q.iter().all(|p| {
            q.iter()
                .take_while(|r| size(p) + size(r) <= d as i32)
                .all(|r| {
                    let word = [p.word.clone(), r.word.clone()].concat();
                    let zexp: Vec<i32> = p.zexp.iter().zip(&r.zexp).map(|(x, y)| x + y).collect();
                    let zero = word
                        .iter()
                        .any(|&l| (l as usize) < a.n && zexp[l as usize] > 0);
                    !zero && !local_in_prime(j, &LocalMonomial { word, zexp })
                })
        })
    });
    Ok(AnLocalization {
        algebra: *a,
        v,
        ass_matches: ass_witness.is_none(),
        ass_witness,
        min_ass,
        expected_count,
        localized_primes,
        images,
        bijective,
        contraction_ok,
        domain_ok,
    })
}

/// Associativity of normal-form multiplication on seeded random triples.
pub fn associativity_failures(
    a: &AnAlgebra,
    samples: usize,
    seed: u64,
) -> Vec<(NCMonomial, NCMonomial, NCMonomial)> {
    let pool = a.monomials((a.degree / 3).max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let p = &pool[rng.gen_range(0..pool.len())];
        let q = &pool[rng.gen_range(0..pool.len())];
        let r = &pool[rng.gen_range(0..pool.len())];
        let left = a.mul_unbounded(&a.mul_unbounded(p, q), r);
        let right = a.mul_unbounded(p, &a.mul_unbounded(q, r));
        if left != right {
            bad.push((p.clone(), q.clone(), r.clone()));
        }
    }
    bad
}
