//! The instance corpus. Every instance is built from a DSL recipe, so its
//! provenance alone is enough to rebuild it.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dsl::{eval, parse_ring_expr, Evaluated, RingExpr};
use crate::error::{Error, Result};
use crate::finring::{Ring, MAX_ORDER};
use crate::ideals::{two_sided_generators, IdealLattice};
use crate::monomial::an::AnAlgebra;
use crate::monomial::comm::CommMonomialRing;

pub const CONSTRUCTORS: [&str; 8] = ["zmod", "gf", "mat", "tri", "prod", "quot", "mono", "an"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_order: usize,
    /// Constructor names an instance recipe may use.
    pub allow: Vec<String>,
    pub seed: u64,
    /// Append a copy of `zmod(6)` with one corrupted multiplication cell.
    pub include_fault: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_order: 16,
            allow: CONSTRUCTORS.iter().map(|s| s.to_string()).collect(),
            seed: 0,
            include_fault: false,
        }
    }
}

/// One overwritten cell of the multiplication table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fault {
    pub x: usize,
    pub y: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub recipe: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

#[derive(Clone, Debug)]
pub enum InstanceKind {
    Finite(Ring),
    Comm(CommMonomialRing),
    An(AnAlgebra),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub provenance: Provenance,
    pub kind: InstanceKind,
}

impl Instance {
    pub fn rebuild(p: &Provenance) -> Result<Instance> {
        let e = parse_ring_expr(&p.recipe)
            .map_err(|e| Error::InvalidArgument(format!("recipe `{}`: {e}", p.recipe)))?;
        let kind = match eval(&e, MAX_ORDER)? {
            Evaluated::Finite(r) => match p.fault {
                None => InstanceKind::Finite(r),
                Some(f) => {
                    if f.x >= r.order() || f.y >= r.order() || f.value >= r.order() {
                        return Err(Error::ElementOutOfRange(f.x.max(f.y).max(f.value)));
                    }
                    InstanceKind::Finite(Arc::new(r.with_corrupted_mul(f.x, f.y, f.value)?))
                }
            },
            Evaluated::Comm(c) => InstanceKind::Comm(c),
            Evaluated::An(a) => InstanceKind::An(a),
        };
        Ok(Instance {
            provenance: p.clone(),
            kind,
        })
    }

    pub fn label(&self) -> String {
        match self.provenance.fault {
            Some(f) => format!(
                "{} with {}·{} := {}",
                self.provenance.recipe, f.x, f.y, f.value
            ),
            None => self.provenance.recipe.clone(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, InstanceKind::Finite(_))
    }
}

fn ctor_name(e: &RingExpr) -> &'static str {
    match e {
        RingExpr::Zmod(_) => "zmod",
        RingExpr::Gf(_) => "gf",
        RingExpr::Mat(..) => "mat",
        RingExpr::Tri(..) => "tri",
        RingExpr::Prod(..) => "prod",
        RingExpr::Quot(..) => "quot",
        RingExpr::Mono { .. } => "mono",
        RingExpr::An { .. } => "an",
    }
}

fn uses_only(e: &RingExpr, allow: &[String]) -> bool {
    let ok = allow.iter().any(|a| a == ctor_name(e));
    ok && match e {
        RingExpr::Mat(_, b) | RingExpr::Tri(_, b) | RingExpr::Quot(b, _) => uses_only(b, allow),
        RingExpr::Prod(a, b) => uses_only(a, allow) && uses_only(b, allow),
        _ => true,
    }
}

fn finite_atoms(cap: usize) -> Vec<RingExpr> {
    let mut atoms: Vec<RingExpr> = (2..=cap.min(16)).map(RingExpr::Zmod).collect();
    for q in [2, 3, 4] {
        if q <= cap {
            atoms.push(RingExpr::Gf(q));
        }
    }
    atoms.push(RingExpr::Mat(2, Box::new(RingExpr::Gf(2))));
    atoms.push(RingExpr::Tri(2, Box::new(RingExpr::Gf(2))));
    atoms.push(RingExpr::Tri(2, Box::new(RingExpr::Gf(3))));
    atoms
}

fn expr_order(e: &RingExpr) -> u128 {
    match e {
        RingExpr::Zmod(n) | RingExpr::Gf(n) => *n as u128,
        RingExpr::Mat(k, b) => expr_order(b).pow((k * k) as u32),
        RingExpr::Tri(k, b) => expr_order(b).pow((k * (k + 1) / 2) as u32),
        RingExpr::Prod(a, b) => expr_order(a) * expr_order(b),
        _ => 0,
    }
}

/// Squarefree monomial ideals in `n` variables: antichains of non-empty supports.
fn squarefree_ideals(n: usize) -> Vec<Vec<u64>> {
    let supports: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    for family in 0u64..1 << supports.len() {
        let chosen: Vec<u64> = (0..supports.len())
            .filter(|i| family >> i & 1 == 1)
            .map(|i| supports[i])
            .collect();
        let antichain = chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| a == b || a & b != a));
        if antichain {
            out.push(chosen);
        }
    }
    out
}

fn mono_expr(n: usize, gens: Vec<Vec<u32>>) -> RingExpr {
    RingExpr::Mono { vars: n, gens }
}

fn monomial_exprs() -> Vec<RingExpr> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for family in squarefree_ideals(n) {
            let gens = family
                .iter()
                .map(|&s| (0..n).map(|i| (s >> i & 1) as u32).collect())
                .collect();
            out.push(mono_expr(n, gens));
        }
    }
    // a few ideals that are not radical
    out.push(mono_expr(2, vec![vec![2, 1], vec![1, 2]]));
    out.push(mono_expr(2, vec![vec![2, 0], vec![1, 1]]));
    out.push(mono_expr(2, vec![vec![2, 2]]));
    out.push(mono_expr(3, vec![vec![2, 1, 0], vec![0, 2, 1]]));
    out.push(mono_expr(3, vec![vec![2, 0, 0], vec![0, 1, 1]]));
    out
}

fn an_exprs() -> Vec<RingExpr> {
    let mut out = Vec::new();
    for extra in [0, 2] {
        for n in 1..=3 {
            out.push(RingExpr::An {
                n,
                extra,
                degree: None,
            });
        }
    }
    out
}

/// Deterministic instance list; see [`CorpusConfig`].
pub fn build_corpus(config: &CorpusConfig) -> Result<Vec<Instance>> {
    let cap = config.max_order;
    if !(2..=MAX_ORDER).contains(&cap) {
        return Err(Error::InvalidArgument(format!(
            "order cap {cap} must lie in 2..={MAX_ORDER}"
        )));
    }
    if let Some(bad) = config
        .allow
        .iter()
        .find(|a| !CONSTRUCTORS.contains(&a.as_str()))
    {
        return Err(Error::InvalidArgument(format!(
            "unknown constructor `{bad}` in allow-list"
        )));
    }
    let atoms: Vec<RingExpr> = finite_atoms(cap)
        .into_iter()
        .filter(|e| expr_order(e) <= cap as u128)
        .collect();
    let mut bases = atoms.clone();
    for (i, a) in atoms.iter().enumerate() {
        for b in &atoms[i..] {
            if expr_order(a) * expr_order(b) <= cap as u128 {
                bases.push(RingExpr::Prod(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
    }
    let mut exprs = Vec::new();
    for base in &bases {
        exprs.push(base.clone());
        let r = eval(base, cap)?.finite()?;
        let lattice = IdealLattice::new(&r);
        for &ideal in &lattice.ideals[1..lattice.len() - 1] {
            exprs.push(RingExpr::Quot(
                Box::new(base.clone()),
                two_sided_generators(&r, ideal),
            ));
        }
    }
    exprs.extend(monomial_exprs());
    exprs.extend(an_exprs());

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in exprs {
        if !uses_only(&e, &config.allow) {
            continue;
        }
        let recipe = e.to_string();
        if !seen.insert(recipe.clone()) {
            continue;
        }
        out.push(Instance::rebuild(&Provenance {
            recipe,
            seed: config.seed,
            fault: None,
        })?);
    }
    if config.include_fault && config.allow.iter().any(|a| a == "zmod") {
        let p = Provenance {
            recipe: "zmod(6)".into(),
            seed: config.seed,
            fault: Some(Fault {
                x: 2,
                y: 3,
                value: 1,
            }),
        };
        out.push(Instance::rebuild(&p)?);
    }
    Ok(out)
}
