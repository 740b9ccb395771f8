//! A small expression language for naming rings:
//!
//! ```text
//! zmod(12)   gf(4)   mat(2, gf(2))   tri(2, zmod(4))   prod(zmod(2), gf(3))
//! quot(zmod(12), gens=[6])   mono(vars=3, gens=[v1*v2, v3^2])   an(n=2)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finring::{gf, make_quotient, matrix_ring, product, upper_triangular, zmod, Ring};
use crate::ideals::{ideal_generated_by, Side};
use crate::monomial::an::{default_degree, AnAlgebra};
use crate::monomial::comm::{fmt_monomial, CommMonomialRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RingExpr {
    Zmod(usize),
    Gf(usize),
    Mat(usize, Box<RingExpr>),
    Tri(usize, Box<RingExpr>),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Quot(Box<RingExpr>, Vec<usize>),
    Mono {
        vars: usize,
        gens: Vec<Vec<u32>>,
    },
    An {
        n: usize,
        extra: usize,
        degree: Option<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: expected {}, found {}",
            self.line, self.column, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().map_err(|_| ParseError {
                line: l0,
                column: c0,
                expected: "an integer that fits in 64 bits".into(),
                found: format!("`{s}`"),
            })?)
        } else if "()[],=*^".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError {
                line: l0,
                column: c0,
                expected: "a token".into(),
                found: format!("`{c}`"),
            });
        };
        col += i - start;
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

/// A positional or keyword argument, before it is checked against the constructor.
enum Arg {
    Int(u64, usize),
    Expr(RingExpr, usize),
    Key(String, Value, usize),
}

enum Value {
    Int(u64),
    List(Vec<ListItem>),
}

enum ListItem {
    Int(u64),
    Monomial(Vec<(u64, u32)>),
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Spanned, expected: &str) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            expected: expected.into(),
            found: t.tok.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(self.error_at(&t, &format!("`{c}`")))
        }
    }

    fn expr(&mut self) -> std::result::Result<RingExpr, ParseError> {
        let head = self.bump();
        let name = match &head.tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error_at(&head, "a constructor name")),
        };
        if !["zmod", "gf", "mat", "tri", "prod", "quot", "mono", "an"].contains(&name.as_str()) {
            return Err(self.error_at(&head, "one of zmod, gf, mat, tri, prod, quot, mono, an"));
        }
        self.expect('(')?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::Sym(')') {
            loop {
                args.push(self.arg()?);
                if self.peek().tok == Tok::Sym(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(')')?;
        self.build(&head, &name, args)
    }

    fn arg(&mut self) -> std::result::Result<Arg, ParseError> {
        let t = self.peek().clone();
        let idx = self.pos;
        match &t.tok {
            Tok::Int(n) => {
                self.bump();
                Ok(Arg::Int(*n, idx))
            }
            Tok::Ident(s) if self.toks[self.pos + 1].tok == Tok::Sym('=') => {
                let key = s.clone();
                self.bump();
                self.bump();
                let v = self.value()?;
                Ok(Arg::Key(key, v, idx))
            }
            Tok::Ident(_) => Ok(Arg::Expr(self.expr()?, idx)),
            _ => Err(self.error_at(&t, "an integer, a ring expression or key=value")),
        }
    }

    fn value(&mut self) -> std::result::Result<Value, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => Ok(Value::Int(n)),
            Tok::Sym('[') => {
                let mut items = Vec::new();
                if self.peek().tok != Tok::Sym(']') {
                    loop {
                        items.push(self.list_item()?);
                        if self.peek().tok == Tok::Sym(',') {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(']')?;
                Ok(Value::List(items))
            }
            _ => Err(self.error_at(&t, "an integer or `[`")),
        }
    }

    fn list_item(&mut self) -> std::result::Result<ListItem, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.bump();
                Ok(ListItem::Int(*n))
            }
            Tok::Ident(_) => {
                let mut factors = vec![self.factor()?];
                while self.peek().tok == Tok::Sym('*') {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Ok(ListItem::Monomial(factors))
            }
            _ => Err(self.error_at(&t, "an element id or a monomial")),
        }
    }

    /// `y3^2` → (3, 2)
    fn factor(&mut self) -> std::result::Result<(u64, u32), ParseError> {
        let t = self.bump();
        let Tok::Ident(s) = &t.tok else {
            return Err(self.error_at(&t, "a variable such as v1"));
        };
        let split = s.find(|c: char| c.is_ascii_digit());
        let index = match split {
            Some(k) if k > 0 && s[k..].chars().all(|c| c.is_ascii_digit()) => {
                s[k..].parse::<u64>().ok()
            }
            _ => None,
        };
        let Some(index) = index else {
            return Err(self.error_at(
                &t,
                "a variable written as letters then an index, such as v1",
            ));
        };
        let mut exp = 1;
        if self.peek().tok == Tok::Sym('^') {
            self.bump();
            let e = self.bump();
            match e.tok {
                Tok::Int(n) if n <= u32::MAX as u64 => exp = n as u32,
                _ => return Err(self.error_at(&e, "an exponent")),
            }
        }
        Ok((index, exp))
    }

    fn arg_pos(&self, a: &Arg) -> usize {
        match a {
            Arg::Int(_, p) | Arg::Expr(_, p) | Arg::Key(_, _, p) => *p,
        }
    }

    fn build(
        &self,
        head: &Spanned,
        name: &str,
        args: Vec<Arg>,
    ) -> std::result::Result<RingExpr, ParseError> {
        let arity = |want: &str| ParseError {
            line: head.line,
            column: head.column,
            expected: format!("{name}({want})"),
            found: format!("{} argument(s)", args.len()),
        };
        let at = |a: &Arg, what: &str| {
            let t = &self.toks[self.arg_pos(a)];
            self.error_at(t, what)
        };
        let small = |a: &Arg, n: u64| -> std::result::Result<usize, ParseError> {
            usize::try_from(n).map_err(|_| at(a, "a smaller integer"))
        };
        match name {
            "zmod" | "gf" => match args.as_slice() {
                [a @ Arg::Int(n, _)] => {
                    let n = small(a, *n)?;
                    Ok(if name == "zmod" {
                        RingExpr::Zmod(n)
                    } else {
                        RingExpr::Gf(n)
                    })
                }
                [a] => Err(at(a, "an integer")),
                _ => Err(arity("n")),
            },
            "mat" | "tri" => match args.as_slice() {
                [a @ Arg::Int(k, _), Arg::Expr(e, _)] => {
                    let k = small(a, *k)?;
                    let e = Box::new(e.clone());
                    Ok(if name == "mat" {
                        RingExpr::Mat(k, e)
                    } else {
                        RingExpr::Tri(k, e)
                    })
                }
                [Arg::Int(..), b] => Err(at(b, "a ring expression")),
                [a, _] => Err(at(a, "an integer")),
                _ => Err(arity("k, expr")),
            },
            "prod" => match args.as_slice() {
                [Arg::Expr(a, _), Arg::Expr(b, _)] => {
                    Ok(RingExpr::Prod(Box::new(a.clone()), Box::new(b.clone())))
                }
                [Arg::Expr(..), b] => Err(at(b, "a ring expression")),
                [a, _] => Err(at(a, "a ring expression")),
                _ => Err(arity("expr, expr")),
            },
            "quot" => match args.as_slice() {
                [Arg::Expr(e, _), g @ Arg::Key(k, v, _)] if k == "gens" => {
                    let Value::List(items) = v else {
                        return Err(at(g, "gens=[ids]"));
                    };
                    let mut ids = Vec::new();
                    for it in items {
                        match it {
                            ListItem::Int(n) => ids.push(small(g, *n)?),
                            ListItem::Monomial(_) => return Err(at(g, "element ids in gens")),
                        }
                    }
                    Ok(RingExpr::Quot(Box::new(e.clone()), ids))
                }
                [Arg::Expr(..), b] => Err(at(b, "gens=[ids]")),
                [a, _] => Err(at(a, "a ring expression")),
                _ => Err(arity("expr, gens=[ids]")),
            },
            "mono" => {
                let mut vars = None;
                let mut gens_items = None;
                for a in &args {
                    match a {
                        Arg::Key(k, Value::Int(n), _) if k == "vars" && vars.is_none() => {
                            vars = Some(small(a, *n)?)
                        }
                        Arg::Key(k, Value::List(items), _)
                            if k == "gens" && gens_items.is_none() =>
                        {
                            gens_items = Some((items, a))
                        }
                        _ => return Err(at(a, "vars=n or gens=[monomials]")),
                    }
                }
                let Some(vars) = vars else {
                    return Err(arity("vars=n, gens=[monomials]"));
                };
                let mut gens = Vec::new();
                if let Some((items, a)) = gens_items {
                    for it in items {
                        let mut e = vec![0u32; vars];
                        match it {
                            ListItem::Monomial(fs) => {
                                for &(idx, exp) in fs {
                                    if idx == 0 || idx as usize > vars {
                                        return Err(at(
                                            a,
                                            &format!("variable indices in 1..={vars}"),
                                        ));
                                    }
                                    e[idx as usize - 1] += exp;
                                }
                            }
                            ListItem::Int(1) => {}
                            ListItem::Int(_) => return Err(at(a, "monomials in gens")),
                        }
                        gens.push(e);
                    }
                }
                Ok(RingExpr::Mono { vars, gens })
            }
            "an" => {
                let (mut n, mut extra, mut degree) = (None, 0, None);
                for a in &args {
                    match a {
                        Arg::Key(k, Value::Int(v), _) if k == "n" => n = Some(small(a, *v)?),
                        Arg::Key(k, Value::Int(v), _) if k == "extra" => extra = small(a, *v)?,
                        Arg::Key(k, Value::Int(v), _) if k == "degree" => {
                            degree = Some(small(a, *v)? as u32)
                        }
                        _ => return Err(at(a, "n=k, extra=e or degree=d")),
                    }
                }
                let Some(n) = n else { return Err(arity("n=k")) };
                Ok(RingExpr::An { n, extra, degree })
            }
            _ => unreachable!(),
        }
    }
}

pub fn parse_ring_expr(text: &str) -> std::result::Result<RingExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(p.error_at(&t, "end of input"));
    }
    Ok(e)
}

impl FromStr for RingExpr {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_ring_expr(s)
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "zmod({n})"),
            RingExpr::Gf(q) => write!(f, "gf({q})"),
            RingExpr::Mat(k, e) => write!(f, "mat({k}, {e})"),
            RingExpr::Tri(k, e) => write!(f, "tri({k}, {e})"),
            RingExpr::Prod(a, b) => write!(f, "prod({a}, {b})"),
            RingExpr::Quot(e, ids) => {
                let ids: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
                write!(f, "quot({e}, gens=[{}])", ids.join(", "))
            }
            RingExpr::Mono { vars, gens } => {
                let gens: Vec<String> = gens.iter().map(|g| fmt_monomial(g)).collect();
                write!(f, "mono(vars={vars}, gens=[{}])", gens.join(", "))
            }
            RingExpr::An { n, extra, degree } => {
                write!(f, "an(n={n}")?;
                if *extra > 0 {
                    write!(f, ", extra={extra}")?;
                }
                if let Some(d) = degree {
                    write!(f, ", degree={d}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub fn render(e: &RingExpr) -> String {
    e.to_string()
}

#[derive(Clone, Debug)]
pub enum Evaluated {
    Finite(Ring),
    Comm(CommMonomialRing),
    An(AnAlgebra),
}

impl Evaluated {
    pub fn finite(self) -> Result<Ring> {
        match self {
            Evaluated::Finite(r) => Ok(r),
            _ => Err(Error::Unsupported("expected a finite ring".into())),
        }
    }
}

/// Builds the ring, refusing finite rings with more than `cap` elements.
pub fn eval(e: &RingExpr, cap: usize) -> Result<Evaluated> {
    let fin = |e: &RingExpr| eval(e, cap)?.finite();
    Ok(match e {
        RingExpr::Zmod(n) => Evaluated::Finite(zmod(*n, cap)?),
        RingExpr::Gf(q) => Evaluated::Finite(gf(*q, cap)?),
        RingExpr::Mat(k, b) => Evaluated::Finite(matrix_ring(*k, &fin(b)?, cap)?),
        RingExpr::Tri(k, b) => Evaluated::Finite(upper_triangular(*k, &fin(b)?, cap)?),
        RingExpr::Prod(a, b) => Evaluated::Finite(product(&fin(a)?, &fin(b)?, cap)?),
        RingExpr::Quot(b, ids) => {
            let r = fin(b)?;
            let i = ideal_generated_by(&r, ids, Side::Two)?;
            Evaluated::Finite(make_quotient(&i)?.0)
        }
        RingExpr::Mono { vars, gens } => {
            Evaluated::Comm(CommMonomialRing::new(*vars, gens.clone())?)
        }
        RingExpr::An { n, extra, degree } => Evaluated::An(AnAlgebra::new(
            *n,
            *extra,
            degree.unwrap_or_else(|| default_degree(*n)),
        )?),
    })
}
