//! `ringloc`: inspect finite rings and monomial algebras, and run the
//! structural check suite.
//!
//! Exit codes: 0 clean, 1 counterexample or engine error, 2 usage or parse
//! error, 3 size budget exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ringloc::centre::{centre_ring, check_pierce, check_rho_criteria, rho};
use ringloc::dsl::{eval, parse_ring_expr, Evaluated};
use ringloc::finring::{ElementSet, Ring, MAX_ORDER};
use ringloc::harness::{build_corpus, explain, run_suite, CorpusConfig, Selection};
use ringloc::ideals::{two_sided_generators, RingAnalysis};
use ringloc::localization::{
    classify_set, close_multiplicative, enumerate_mult_sets, localize_classified, localize_normal,
    min_rs, Localization, MultSetBudget,
};
use ringloc::monomial::an::{an_min_primes, an_verify, default_degree, AnAlgebra};
use ringloc::monomial::comm::{fmt_vars, localize_monomial, min_primes_monomial, CommMonomialRing};
use ringloc::Error;

#[derive(Parser)]
#[command(
    name = "ringloc",
    version,
    about = "Minimal primes and localizations of finite rings and monomial algebras"
)]
struct Cli {
    /// Largest finite ring the evaluator will build.
    #[arg(long, global = true, default_value_t = MAX_ORDER)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, units, centre, semiprimality, and the element id table.
    Describe { expr: String },
    /// All two-sided ideals with their prime flags.
    Ideals { expr: String },
    /// Minimal primes (finite rings, monomial quotients, or A_n).
    Minprimes { expr: String },
    /// Multiplicative sets avoiding 0, with their Ore classification.
    Multsets {
        expr: String,
        /// Enumerate every submonoid up to this order, generator pairs above it.
        #[arg(long, default_value_t = 12)]
        exhaustive_max: usize,
    },
    /// Ore and denominator flags of the set generated by `--gens`.
    ClassifySet {
        expr: String,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
    /// Localize at the set generated by `--gens`.
    Localize {
        expr: String,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
    /// The centre as a ring.
    Centre { expr: String },
    /// The restriction map P ↦ P ∩ Z on primes.
    Rho { expr: String },
    /// Monomial quotients of polynomial rings.
    Mono {
        #[command(subcommand)]
        op: MonoOp,
    },
    /// The algebras A_n.
    An {
        #[command(subcommand)]
        op: AnOp,
    },
    /// Run the structural check suite over the generated corpus.
    Verify {
        /// all, finite, monomial, or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include per-check wall times.
        #[arg(long)]
        timings: bool,
        /// Append a ring with one corrupted multiplication cell.
        #[arg(long)]
        fault: bool,
        /// Print counterexample ID[:INDEX] in full instead of the table.
        #[arg(long, value_name = "ID[:INDEX]")]
        explain: Option<String>,
    },
}

#[derive(Subcommand)]
enum MonoOp {
    Minprimes {
        expr: String,
    },
    Localize {
        expr: String,
        /// Variables to invert, numbered from 1.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum AnOp {
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<u32>,
        /// Free letters added to the alphabet.
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

enum Failure {
    Usage(String),
    Engine(Error),
    Counterexamples,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Out = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexamples) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeLimit { .. } => ExitCode::from(3),
                Error::InvalidArgument(_)
                | Error::InvalidOrder(_)
                | Error::ElementOutOfRange(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load(text: &str, cap: usize) -> Result<Evaluated, Failure> {
    let e =
        parse_ring_expr(text).map_err(|e| Failure::Usage(format!("cannot parse `{text}`: {e}")))?;
    Ok(eval(&e, cap)?)
}

fn load_finite(text: &str, cap: usize) -> Result<Ring, Failure> {
    match load(text, cap)? {
        Evaluated::Finite(r) => Ok(r),
        _ => Err(Failure::Usage(format!("`{text}` is not a finite ring"))),
    }
}

fn load_comm(text: &str) -> Result<CommMonomialRing, Failure> {
    match load(text, MAX_ORDER)? {
        Evaluated::Comm(c) => Ok(c),
        _ => Err(Failure::Usage(format!(
            "`{text}` is not a monomial quotient"
        ))),
    }
}

/// `(g1, g2) = {…}`: generators read off greedily, then the members.
fn ideal_str(r: &Ring, s: ElementSet) -> String {
    let gens: Vec<&str> = two_sided_generators(r, s)
        .into_iter()
        .map(|g| r.name(g))
        .collect();
    let gens = if gens.is_empty() {
        "0".to_string()
    } else {
        gens.join(", ")
    };
    format!("({gens}) = {}", r.fmt_set(s))
}

fn elems(r: &Ring, gens: &[usize]) -> Result<ElementSet, Failure> {
    for &g in gens {
        r.check_elem(g)?;
    }
    Ok(ElementSet::from_elems(r.order(), gens.iter().copied()))
}

fn run(cli: Cli) -> Out {
    let cap = cli.cap;
    match cli.command {
        Command::Describe { expr } => describe(&expr, cap),
        Command::Ideals { expr } => {
            let r = load_finite(&expr, cap)?;
            let an = RingAnalysis::new(&r);
            for i in 0..an.lattice.len() {
                let rep = &an.reports[i];
                let mut flags = Vec::new();
                if i == an.lattice.len() - 1 {
                    flags.push("whole ring");
                }
                if rep.prime {
                    flags.push("prime");
                }
                if rep.completely_prime {
                    flags.push("completely prime");
                }
                if rep.semiprime {
                    flags.push("semiprime");
                }
                if an.min_primes.contains(&i) {
                    flags.push("minimal prime");
                }
                println!("{:<40} {}", ideal_str(&r, an.set(i)), flags.join(", "));
            }
            Ok(())
        }
        Command::Minprimes { expr } => {
            match load(&expr, cap)? {
                Evaluated::Finite(r) => {
                    let an = RingAnalysis::new(&r);
                    for p in an.min_prime_sets() {
                        println!("{}", ideal_str(&r, p));
                    }
                }
                Evaluated::Comm(c) => {
                    for p in min_primes_monomial(&c)? {
                        println!("{p}");
                    }
                }
                Evaluated::An(a) => {
                    for i in an_min_primes(&a) {
                        println!("{}", a.prime_name(i));
                    }
                }
            }
            Ok(())
        }
        Command::Multsets {
            expr,
            exhaustive_max,
        } => {
            let r = load_finite(&expr, cap)?;
            let budget = MultSetBudget {
                exhaustive_max_order: exhaustive_max,
            };
            if !budget.is_exhaustive(&r) {
                println!(
                    "# order {} above {exhaustive_max}: sets generated by one or two elements only",
                    r.order()
                );
            }
            for s in enumerate_mult_sets(&r, &budget) {
                let c = classify_set(&s)?;
                let kind = if c.is_denominator() {
                    "denominator"
                } else if c.left_den {
                    "left denominator"
                } else if c.right_den {
                    "right denominator"
                } else if c.left_ore || c.right_ore {
                    "Ore"
                } else {
                    "-"
                };
                println!(
                    "{:<32} {:<18} ass_l = {}",
                    s.describe(),
                    kind,
                    r.fmt_set(c.ass_l)
                );
            }
            Ok(())
        }
        Command::ClassifySet { expr, gens } => {
            let r = load_finite(&expr, cap)?;
            let s = close_multiplicative(&r, elems(&r, &gens)?)?;
            let c = classify_set(&s)?;
            println!("S           {}", s.describe());
            println!("left Ore    {}", c.left_ore);
            println!("right Ore   {}", c.right_ore);
            println!("left den    {}", c.left_den);
            println!("right den   {}", c.right_den);
            println!("ass_l       {}", r.fmt_set(c.ass_l));
            println!("ass_r       {}", r.fmt_set(c.ass_r));
            if let Some((x, t)) = c.left_ore_witness {
                println!("left Ore fails at r = {}, s = {}", r.name(x), r.name(t));
            }
            if let Some(x) = c.left_den_witness {
                println!(
                    "{} is killed on the right by S but not on the left",
                    r.name(x)
                );
            }
            Ok(())
        }
        Command::Localize { expr, gens } => {
            let r = load_finite(&expr, cap)?;
            let g = elems(&r, &gens)?;
            let s = close_multiplicative(&r, g)?;
            let c = classify_set(&s)?;
            let l = if c.left_den {
                localize_classified(&s, &c)?
            } else {
                // not a denominator set; sets of normal elements still localize
                localize_normal(&r, g)?
            };
            print_localization(&r, &l);
            Ok(())
        }
        Command::Centre { expr } => {
            let r = load_finite(&expr, cap)?;
            let cd = centre_ring(&r)?;
            let za = RingAnalysis::new(&cd.centre);
            println!(
                "Z(R)        {} (order {})",
                r.fmt_set(r.centre_set()),
                cd.centre.order()
            );
            println!("commutative {}", cd.centre.order() == r.order());
            println!("semiprime   {}", za.semiprime);
            for p in za.min_prime_sets() {
                println!("min prime   {}", r.fmt_set(cd.lift(p)));
            }
            Ok(())
        }
        Command::Rho { expr } => {
            let r = load_finite(&expr, cap)?;
            let an = RingAnalysis::new(&r);
            let cd = centre_ring(&r)?;
            let rm = rho(&an, &cd)?;
            for (p, q) in &rm.table {
                let tag = if an.min_prime_sets().contains(p) {
                    " (minimal)"
                } else {
                    ""
                };
                println!("{} ↦ {}{tag}", r.fmt_set(*p), r.fmt_set(cd.lift(*q)));
            }
            println!("ρ_min well defined  {}", rm.well_defined);
            println!("ρ_min onto min Z    {}", rm.surjective_onto_min);
            if let Some(c) = check_rho_criteria(&an, &cd, &rm) {
                println!("C_Z ⊆ C_R           {}", c.regular_centre_regular);
                println!("C_Z avoids min R    {}", c.regular_centre_avoids_min);
                if c.regular_centre_regular {
                    let v = check_pierce(&an, &cd, &rm)?;
                    println!(
                        "R ≅ ∏ R_q           {} (factor orders {:?})",
                        v.bijective, v.factor_orders
                    );
                }
            }
            Ok(())
        }
        Command::Mono { op } => match op {
            MonoOp::Minprimes { expr } => {
                let c = load_comm(&expr)?;
                for p in min_primes_monomial(&c)? {
                    println!("{p}");
                }
                Ok(())
            }
            MonoOp::Localize { expr, vars } => {
                let c = load_comm(&expr)?;
                let mut v = 0u64;
                for i in vars {
                    if i == 0 || i > c.n {
                        return Err(Failure::Usage(format!("variable {i} outside 1..={}", c.n)));
                    }
                    v |= 1 << (i - 1);
                }
                let l = localize_monomial(&c, v)?;
                let list = |ps: &[ringloc::monomial::comm::MonomialPrime]| {
                    ps.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                println!("ring        {c}");
                println!("inverted    {}", fmt_vars(v));
                println!("regular     {}", l.regular);
                println!("kernel      {}", l.saturation);
                println!("min R       {}", list(&l.min_r));
                println!("min(ass)    {}", list(&l.min_ass));
                println!("min S⁻¹R    {}", list(&l.localized_min));
                println!("bijective   {}", l.bijective);
                Ok(())
            }
        },
        Command::An {
            op: AnOp::Verify { n, degree, extra },
        } => {
            let a = AnAlgebra::new(n, extra, degree.unwrap_or_else(|| default_degree(n)))?;
            let rep = an_verify(&a);
            println!("{a}");
            for c in &rep.clauses {
                println!(
                    "({:<3}) {:<4} {}",
                    c.id,
                    if c.passed { "ok" } else { "FAIL" },
                    c.statement
                );
                if !c.passed {
                    println!("           {}", c.detail);
                }
            }
            if rep.passed() {
                Ok(())
            } else {
                Err(Failure::Counterexamples)
            }
        }
        Command::Verify {
            suite,
            max_order,
            seed,
            jobs,
            format,
            timings,
            fault,
            explain: which,
        } => {
            let sel = Selection::parse(&suite).map_err(|e| Failure::Usage(e.to_string()))?;
            let config = CorpusConfig {
                max_order,
                seed,
                include_fault: fault,
                ..Default::default()
            };
            let corpus = build_corpus(&config).map_err(|e| Failure::Usage(e.to_string()))?;
            let report = run_suite(&corpus, &sel, jobs)?;
            if let Some(which) = which {
                let (id, idx) = match which.split_once(':') {
                    Some((id, i)) => (
                        id,
                        i.parse()
                            .map_err(|_| Failure::Usage(format!("bad index `{i}`")))?,
                    ),
                    None => (which.as_str(), 0),
                };
                let r = report
                    .get(id)
                    .ok_or_else(|| Failure::Usage(format!("check `{id}` was not run")))?;
                print!(
                    "{}",
                    explain(r, idx).map_err(|e| Failure::Usage(e.to_string()))?
                );
            } else {
                match format {
                    Format::Text => print!("{}", report.to_text(timings)),
                    Format::Machine => println!("{}", report.to_json(seed, max_order, timings)),
                }
            }
            if report.counterexample_count() == 0 {
                Ok(())
            } else {
                Err(Failure::Counterexamples)
            }
        }
    }
}

fn describe(expr: &str, cap: usize) -> Out {
    match load(expr, cap)? {
        Evaluated::Finite(r) => {
            let an = RingAnalysis::new(&r);
            println!("ring        {}", r.label());
            println!("order       {}", r.order());
            println!("commutative {}", r.is_commutative());
            println!("units       {}", r.fmt_set(r.units()));
            println!("centre      {}", r.fmt_set(r.centre_set()));
            println!("semiprime   {}", an.semiprime);
            println!("radical     {}", ideal_str(&r, an.radical));
            println!("elements");
            for x in r.elements() {
                println!("  {x:>3}  {}", r.name(x));
            }
        }
        Evaluated::Comm(c) => {
            println!("ring        {c}");
            println!("squarefree  {}", c.is_squarefree());
            let mins: Vec<String> = min_primes_monomial(&c)?
                .iter()
                .map(|p| p.to_string())
                .collect();
            println!("min primes  {}", mins.join(", "));
        }
        Evaluated::An(a) => {
            println!("algebra     {a}");
            println!("min primes  {}", an_min_primes(&a).len());
        }
    }
    Ok(())
}

fn print_localization(r: &Ring, l: &Localization) {
    let an = RingAnalysis::new(r);
    let t = RingAnalysis::new(&l.target);
    println!("S           {}", l.set.describe());
    println!("ass         {}", ideal_str(r, l.ass.members()));
    println!(
        "target      {} (order {})",
        l.target.label(),
        l.target.order()
    );
    let mrs: Vec<String> = min_rs(&an, l.set.members())
        .into_iter()
        .map(|p| ideal_str(r, an.set(p)))
        .collect();
    println!("min(R,S)    {}", mrs.join(", "));
    let tm: Vec<String> = t
        .min_prime_sets()
        .into_iter()
        .map(|p| ideal_str(&l.target, p))
        .collect();
    println!("min S⁻¹R    {}", tm.join(", "));
}
