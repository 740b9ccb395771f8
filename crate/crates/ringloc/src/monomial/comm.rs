//! Quotients `k[v_1..v_n]/I` of polynomial rings by monomial ideals. Minimal
//! primes are the minimal vertex covers of the generator supports, and
//! inverting variables is saturation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CommMonomialRing {
    pub n: usize,
    /// Minimal monomial generators of `I`.
    pub gens: Vec<Exponents>,
    /// Only a label: nothing here depends on the coefficients.
    pub field: String,
    /// Bound for the elementwise scans.
    pub degree: u32,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

fn support(e: &[u32]) -> u64 {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn minimize(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    gens.sort_by(|a, b| total(a).cmp(&total(b)).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Exponents> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

pub fn fmt_monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| {
            if x == 1 {
                format!("v{}", i + 1)
            } else {
                format!("v{}^{}", i + 1, x)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn fmt_vars(vars: u64) -> String {
    if vars == 0 {
        return "(0)".into();
    }
    let v: Vec<String> = (0..64)
        .filter(|i| vars >> i & 1 == 1)
        .map(|i| format!("v{}", i + 1))
        .collect();
    format!("({})", v.join(", "))
}

impl CommMonomialRing {
    pub fn new(n: usize, gens: Vec<Exponents>) -> Result<CommMonomialRing> {
        if n > MAX_VARS {
            return Err(Error::SizeLimit {
                order: n as u128,
                cap: MAX_VARS,
            });
        }
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "exponent vector {g:?} has length {} ≠ {n}",
                g.len()
            )));
        }
        let gens = minimize(gens);
        let degree = gens.iter().map(|g| total(g) + 2).max().unwrap_or(0).max(6);
        Ok(CommMonomialRing {
            n,
            gens,
            field: "k".into(),
            degree,
        })
    }

    pub fn with_degree(mut self, degree: u32) -> CommMonomialRing {
        self.degree = degree;
        self
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| total(g) == 0)
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn supports(&self) -> Vec<u64> {
        self.gens.iter().map(|g| support(g)).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&x| x <= 1))
    }

    pub fn radical(&self) -> CommMonomialRing {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().map(|&x| x.min(1)).collect())
            .collect();
        CommMonomialRing {
            gens: minimize(gens),
            ..self.clone()
        }
    }

    pub fn all_vars(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// All exponent vectors of total degree `≤ d`.
    pub fn monomials_up_to(&self, d: u32) -> Vec<Exponents> {
        let mut out = vec![vec![0; self.n]];
        let mut frontier = out.clone();
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &frontier {
                // extend only at or after the last nonzero slot, so each vector appears once
                let start = m.iter().rposition(|&x| x > 0).unwrap_or(0);
                for i in start..self.n {
                    let mut e = m.clone();
                    e[i] += 1;
                    next.push(e);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for CommMonomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (1..=self.n).map(|i| format!("v{i}")).collect();
        let gens: Vec<String> = self.gens.iter().map(|g| fmt_monomial(g)).collect();
        write!(
            f,
            "{}[{}]/({})",
            self.field,
            vars.join(","),
            gens.join(", ")
        )
    }
}

/// A prime generated by the variables in `vars`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialPrime {
    pub vars: u64,
}

impl MonomialPrime {
    pub fn contains(&self, m: &[u32]) -> bool {
        support(m) & self.vars != 0
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vars(self.vars))
    }
}

fn sort_covers(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_by_key(|c| (c.count_ones(), *c));
    v.dedup();
    v
}

fn keep_minimal(v: Vec<u64>) -> Vec<u64> {
    let v = sort_covers(v);
    let mut out: Vec<u64> = Vec::new();
    for c in v {
        if !out.iter().any(|&d| d & !c == 0) {
            out.push(c);
        }
    }
    out
}

/// Minimal transversals of a hypergraph, adding one edge at a time.
pub fn min_covers(edges: &[u64]) -> Vec<u64> {
    let mut covers = vec![0u64];
    for &e in edges {
        let mut next = Vec::new();
        for &c in &covers {
            if c & e != 0 {
                next.push(c);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    next.push(c | v);
                    bits &= bits - 1;
                }
            }
        }
        covers = keep_minimal(next);
    }
    covers
}

/// Every subset of `allowed` tested directly for covering and minimality.
pub fn min_covers_brute(allowed: u64, edges: &[u64]) -> Vec<u64> {
    let is_cover = |c: u64| edges.iter().all(|&e| e & c != 0);
    let mut out = Vec::new();
    let mut sub = allowed;
    loop {
        if is_cover(sub) {
            let minimal = (0..64)
                .filter(|i| sub >> i & 1 == 1)
                .all(|i| !is_cover(sub & !(1 << i)));
            if minimal {
                out.push(sub);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & allowed;
    }
    sort_covers(out)
}

pub fn min_primes_monomial(r: &CommMonomialRing) -> Result<Vec<MonomialPrime>> {
    if r.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    Ok(min_covers(&r.supports())
        .into_iter()
        .map(|vars| MonomialPrime { vars })
        .collect())
}

/// `I : v`, computed generator by generator.
pub fn colon_variable(r: &CommMonomialRing, v: usize) -> CommMonomialRing {
    let gens = r
        .gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(1);
            h
        })
        .collect();
    CommMonomialRing {
        gens: minimize(gens),
        ..r.clone()
    }
}

/// `v` is a non-zero-divisor modulo `I` iff `I : v = I`.
pub fn is_regular_variable(r: &CommMonomialRing, v: usize) -> bool {
    colon_variable(r, v).gens == r.gens
}

/// `I : (∏V)^∞`: zero every exponent in `vars`, then re-minimize.
pub fn saturate_monomial(r: &CommMonomialRing, vars: u64) -> Result<CommMonomialRing> {
    let gens = r
        .gens
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .map(|(i, &x)| if vars >> i & 1 == 1 { 0 } else { x })
                .collect()
        })
        .collect();
    let sat = CommMonomialRing {
        gens: minimize(gens),
        ..r.clone()
    };
    if sat.is_unit_ideal() {
        return Err(Error::CollapsedLocalization);
    }
    Ok(sat)
}

/// Membership in the saturation straight from the definition: `m·(∏V)^k ∈ I`
/// for `k` the largest exponent in any generator.
pub fn saturation_contains(r: &CommMonomialRing, vars: u64, m: &[u32]) -> bool {
    let k = r.gens.iter().flatten().copied().max().unwrap_or(0);
    let shifted: Exponents = m
        .iter()
        .enumerate()
        .map(|(i, &x)| if vars >> i & 1 == 1 { x + k } else { x })
        .collect();
    r.contains(&shifted)
}

/// First monomial of degree `≤ r.degree` on which stripping and the
/// definition disagree.
pub fn saturation_mismatch(r: &CommMonomialRing, vars: u64) -> Option<Exponents> {
    let gens = r
        .gens
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .map(|(i, &x)| if vars >> i & 1 == 1 { 0 } else { x })
                .collect()
        })
        .collect();
    let stripped = CommMonomialRing {
        gens: minimize(gens),
        ..r.clone()
    };
    r.monomials_up_to(r.degree)
        .into_iter()
        .find(|m| stripped.contains(m) != saturation_contains(r, vars, m))
}

/// First monomial of degree `≤ r.degree` lying in every minimal prime but not
/// in `I`. Exists iff `I` is not radical, provided the degree bound reaches
/// the largest generator degree.
pub fn radical_witness(r: &CommMonomialRing) -> Result<Option<Exponents>> {
    let mins = min_primes_monomial(r)?;
    Ok(r.monomials_up_to(r.degree)
        .into_iter()
        .find(|m| mins.iter().all(|p| p.contains(m)) && !r.contains(m)))
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialLocalization {
    pub vars: u64,
    /// Every variable of `V` is a non-zero-divisor.
    pub regular: bool,
    /// `sat(I, V)`; its image in `R` is the kernel of the localization.
    pub saturation: CommMonomialRing,
    pub min_r: Vec<MonomialPrime>,
    /// Minimal primes over the kernel.
    pub min_ass: Vec<MonomialPrime>,
    /// Minimal primes of the localized ring, by brute force over covers that
    /// avoid the inverted variables.
    pub localized_min: Vec<MonomialPrime>,
    /// Index into `localized_min` of the extension of each member of `min_ass`.
    pub images: Vec<Option<usize>>,
    pub bijective: bool,
    /// `|min S⁻¹R| = |min R|`, reported when `regular`.
    pub count_preserved: Option<bool>,
}

pub fn localize_monomial(r: &CommMonomialRing, vars: u64) -> Result<MonomialLocalization> {
    if vars & !r.all_vars() != 0 {
        return Err(Error::InvalidArgument(format!(
            "variable set {} outside the ring",
            fmt_vars(vars)
        )));
    }
    let saturation = saturate_monomial(r, vars)?;
    let regular = (0..r.n)
        .filter(|i| vars >> i & 1 == 1)
        .all(|i| is_regular_variable(r, i));
    let min_r = min_primes_monomial(r)?;
    let min_ass = min_primes_monomial(&saturation)?;
    let localized_min: Vec<MonomialPrime> =
        min_covers_brute(r.all_vars() & !vars, &saturation.supports())
            .into_iter()
            .map(|v| MonomialPrime { vars: v })
            .collect();
    let images: Vec<Option<usize>> = min_ass
        .iter()
        .map(|p| {
            if p.vars & vars != 0 {
                None
            } else {
                localized_min.iter().position(|q| q == p)
            }
        })
        .collect();
    let mut hit: Vec<usize> = images.iter().flatten().copied().collect();
    hit.sort();
    hit.dedup();
    let bijective = images.iter().all(|i| i.is_some())
        && hit.len() == images.len()
        && hit.len() == localized_min.len();
    let count_preserved = regular.then_some(localized_min.len() == min_r.len());
    Ok(MonomialLocalization {
        vars,
        regular,
        saturation,
        min_r,
        min_ass,
        localized_min,
        images,
        bijective,
        count_preserved,
    })
}

/// `sat(rad I, V) = rad(sat(I, V))`, with equal minimal primes.
pub fn saturation_commutes_with_radical(r: &CommMonomialRing, vars: u64) -> Result<bool> {
    let a = saturate_monomial(&r.radical(), vars)?;
    let b = saturate_monomial(r, vars)?.radical();
    Ok(a.gens == b.gens && min_primes_monomial(&a)? == min_primes_monomial(&b)?)
}
