//! Ring and group expressions.
//!
//! ```text
//! expr  := name [ "(" [ arg { "," arg } ] ")" ]
//! arg   := int | "[" [ int { "," int } ] "]" | expr
//! name  := letter { letter | digit | "_" }     (case-insensitive)
//! ```
//!
//! | name      | arguments                  | sort  |
//! |-----------|----------------------------|-------|
//! | `Z`       | `n`                        | ring  |
//! | `GF`      | `p, k`                     | ring  |
//! | `M`, `T`  | `k, ring`                  | ring  |
//! | `Prod`    | two or more rings, or two or more groups | either |
//! | `TrivExt` | `ring`                     | ring  |
//! | `Quot`    | `ring, [generators]`       | ring  |
//! | `Corner`  | `ring, idempotent`         | ring  |
//! | `GR`      | `ring, group`              | ring  |
//! | `C`       | `m`                        | group |
//! | `GProd`   | two or more groups         | group |
//! | `S3`      | none                       | group |
//!
//! Element arguments are indices in the child ring's encoding. The printer
//! emits the canonical form: canonical names, no whitespace, group products
//! as `Prod`, `S3` without parentheses.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::constructions::{
    corner, direct_product, group_ring, ideal_generated, matrix_ring, quotient, ring_gf, ring_zn, trivial_extension,
    upper_triangular,
};
use crate::error::AlgebraError;
use crate::group::{cyclic_group, group_product, symmetric_group_s3, FiniteGroup};
use crate::ring::{FiniteRing, Limits};

pub const MAX_EXPR_LEN: usize = 4096;
pub const MAX_DEPTH: usize = 128;

/// Byte range of a node in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sort {
    Ring,
    Group,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Ring => "ring",
            Sort::Group => "group",
        })
    }
}

#[derive(Debug, Clone)]
pub enum Node {
    Z(u64),
    GF(u64, u64),
    M(u64, Box<Expr>),
    T(u64, Box<Expr>),
    Prod(Vec<Expr>),
    TrivExt(Box<Expr>),
    Quot(Box<Expr>, Vec<u64>),
    Corner(Box<Expr>, u64),
    GR(Box<Expr>, Box<Expr>),
    C(u64),
    GProd(Vec<Expr>),
    S3,
}

/// A parsed expression. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub node: Node,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use Node::*;
        match (&self.node, &other.node) {
            (Z(a), Z(b)) | (C(a), C(b)) => a == b,
            (GF(a, b), GF(c, d)) => a == c && b == d,
            (M(a, x), M(b, y)) | (T(a, x), T(b, y)) => a == b && x == y,
            (Prod(a), Prod(b)) | (GProd(a), GProd(b)) => a == b,
            (TrivExt(a), TrivExt(b)) => a == b,
            (Quot(a, g), Quot(b, h)) => a == b && g == h,
            (Corner(a, e), Corner(b, f)) => a == b && e == f,
            (GR(a, g), GR(b, h)) => a == b && g == h,
            (S3, S3) => true,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn sort(&self) -> Sort {
        match self.node {
            Node::C(_) | Node::GProd(_) | Node::S3 => Sort::Group,
            _ => Sort::Ring,
        }
    }

    /// Canonical text.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

fn join(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Z(n) => write!(f, "Z({n})"),
            Node::GF(p, k) => write!(f, "GF({p},{k})"),
            Node::M(k, r) => write!(f, "M({k},{r})"),
            Node::T(k, r) => write!(f, "T({k},{r})"),
            Node::Prod(items) | Node::GProd(items) => {
                f.write_str("Prod(")?;
                join(f, items)?;
                f.write_str(")")
            }
            Node::TrivExt(r) => write!(f, "TrivExt({r})"),
            Node::Quot(r, gens) => {
                let gens: Vec<String> = gens.iter().map(u64::to_string).collect();
                write!(f, "Quot({r},[{}])", gens.join(","))
            }
            Node::Corner(r, e) => write!(f, "Corner({r},{e})"),
            Node::GR(r, g) => write!(f, "GR({r},{g})"),
            Node::C(m) => write!(f, "C({m})"),
            Node::S3 => f.write_str("S3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at {pos}: expected {}", expected.join(" or "))]
    Parse { pos: usize, expected: Vec<String> },
    #[error("{name} at {pos} takes {expected}, got {found} argument(s)")]
    Arity { name: String, pos: usize, expected: String, found: usize },
    #[error("unknown name `{name}` at {pos}")]
    UnknownName { name: String, pos: usize },
    #[error("argument at {pos} must be a {expected}, found a {found}")]
    SortMismatch { pos: usize, expected: String, found: String },
    #[error("expression is {len} characters, limit is {max}")]
    TooLong { len: usize, max: usize },
    #[error("expression nests deeper than {max} at {pos}")]
    TooDeep { pos: usize, max: usize },
    #[error("cannot build `{text}` at {}..{}: {source}", span.start, span.end)]
    Eval { span: Span, text: String, source: AlgebraError },
}

impl ExprError {
    /// The construction error inside an evaluation failure.
    pub fn algebra(&self) -> Option<&AlgebraError> {
        match self {
            ExprError::Eval { source, .. } => Some(source),
            _ => None,
        }
    }
}

#[derive(Debug)]
enum Arg {
    Int(u64, usize),
    List(Vec<u64>, usize),
    Expr(Expr),
}

impl Arg {
    fn pos(&self) -> usize {
        match self {
            Arg::Int(_, p) | Arg::List(_, p) => *p,
            Arg::Expr(e) => e.span.start,
        }
    }

    fn kind(&self) -> String {
        match self {
            Arg::Int(..) => "integer".into(),
            Arg::List(..) => "index list".into(),
            Arg::Expr(e) => e.sort().to_string(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let len = text.chars().count();
    if len > MAX_EXPR_LEN {
        return Err(ExprError::TooLong { len, max: MAX_EXPR_LEN });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.expected(&["end of input"]));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expected(&self, what: &[&str]) -> ExprError {
        ExprError::Parse { pos: self.pos, expected: what.iter().map(|s| s.to_string()).collect() }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected(&["integer"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| ExprError::Parse { pos: start, expected: vec!["integer below 2^64".into()] })
    }

    fn list(&mut self) -> Result<Vec<u64>, ExprError> {
        let mut out = Vec::new();
        if self.eat(b']') {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(b']') {
                return Ok(out);
            }
            if !self.eat(b',') {
                return Err(self.expected(&["`,`", "`]`"]));
            }
        }
    }

    fn arg(&mut self, depth: usize) -> Result<Arg, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let pos = self.pos;
                Ok(Arg::Int(self.int()?, pos))
            }
            Some(b'[') => {
                let pos = self.pos;
                self.pos += 1;
                Ok(Arg::List(self.list()?, pos))
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Arg::Expr(self.expr(depth + 1)?)),
            _ => Err(self.expected(&["integer", "`[`", "name"])),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, ExprError> {
        self.skip_ws();
        if depth > MAX_DEPTH {
            return Err(ExprError::TooDeep { pos: self.pos, max: MAX_DEPTH });
        }
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.expected(&["name"])),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name").to_string();
        let mut args = Vec::new();
        let mut has_parens = false;
        if self.eat(b'(') {
            has_parens = true;
            if !self.eat(b')') {
                loop {
                    args.push(self.arg(depth)?);
                    if self.eat(b')') {
                        break;
                    }
                    if !self.eat(b',') {
                        return Err(self.expected(&["`,`", "`)`"]));
                    }
                }
            }
        }
        let span = Span { start, end: self.pos };
        let node = build(&name, start, has_parens, args)?;
        Ok(Expr { node, span })
    }
}

fn arity(name: &str, pos: usize, expected: &str, found: usize) -> ExprError {
    ExprError::Arity { name: name.into(), pos, expected: expected.into(), found }
}

fn want_int(a: Arg) -> Result<u64, ExprError> {
    match a {
        Arg::Int(v, _) => Ok(v),
        other => Err(ExprError::SortMismatch { pos: other.pos(), expected: "integer".into(), found: other.kind() }),
    }
}

fn want_list(a: Arg) -> Result<Vec<u64>, ExprError> {
    match a {
        Arg::List(v, _) => Ok(v),
        other => Err(ExprError::SortMismatch { pos: other.pos(), expected: "index list".into(), found: other.kind() }),
    }
}

fn want_expr(a: Arg, sort: Sort) -> Result<Box<Expr>, ExprError> {
    match a {
        Arg::Expr(e) if e.sort() == sort => Ok(Box::new(e)),
        other => Err(ExprError::SortMismatch { pos: other.pos(), expected: sort.to_string(), found: other.kind() }),
    }
}

fn build(name: &str, pos: usize, has_parens: bool, args: Vec<Arg>) -> Result<Node, ExprError> {
    let lower = name.to_ascii_lowercase();
    let n = args.len();
    let mut it = args.into_iter();
    let fixed = |want: usize, desc: &str| -> Result<(), ExprError> {
        if n != want || (!has_parens && want > 0) {
            Err(arity(name, pos, desc, n))
        } else {
            Ok(())
        }
    };
    let node = match lower.as_str() {
        "z" => {
            fixed(1, "1 integer")?;
            Node::Z(want_int(it.next().unwrap())?)
        }
        "c" => {
            fixed(1, "1 integer")?;
            Node::C(want_int(it.next().unwrap())?)
        }
        "gf" => {
            fixed(2, "2 integers")?;
            Node::GF(want_int(it.next().unwrap())?, want_int(it.next().unwrap())?)
        }
        "m" | "t" => {
            fixed(2, "an integer and a ring")?;
            let k = want_int(it.next().unwrap())?;
            let r = want_expr(it.next().unwrap(), Sort::Ring)?;
            if lower == "m" {
                Node::M(k, r)
            } else {
                Node::T(k, r)
            }
        }
        "trivext" => {
            fixed(1, "1 ring")?;
            Node::TrivExt(want_expr(it.next().unwrap(), Sort::Ring)?)
        }
        "quot" => {
            fixed(2, "a ring and an index list")?;
            let r = want_expr(it.next().unwrap(), Sort::Ring)?;
            Node::Quot(r, want_list(it.next().unwrap())?)
        }
        "corner" => {
            fixed(2, "a ring and an index")?;
            let r = want_expr(it.next().unwrap(), Sort::Ring)?;
            Node::Corner(r, want_int(it.next().unwrap())?)
        }
        "gr" => {
            fixed(2, "a ring and a group")?;
            let r = want_expr(it.next().unwrap(), Sort::Ring)?;
            Node::GR(r, want_expr(it.next().unwrap(), Sort::Group)?)
        }
        "s3" => {
            fixed(0, "no arguments")?;
            Node::S3
        }
        "prod" | "gprod" => {
            if n < 2 {
                return Err(arity(name, pos, "at least 2 rings or groups", n));
            }
            let items: Vec<Arg> = it.collect();
            let sort = match &items[0] {
                Arg::Expr(e) if lower == "prod" => e.sort(),
                _ if lower == "gprod" => Sort::Group,
                other => {
                    return Err(ExprError::SortMismatch {
                        pos: other.pos(),
                        expected: "ring or group".into(),
                        found: other.kind(),
                    })
                }
            };
            let items = items.into_iter().map(|a| want_expr(a, sort).map(|b| *b)).collect::<Result<Vec<_>, _>>()?;
            match sort {
                Sort::Ring => Node::Prod(items),
                Sort::Group => Node::GProd(items),
            }
        }
        _ => return Err(ExprError::UnknownName { name: name.into(), pos }),
    };
    Ok(node)
}

/// An evaluated expression.
#[derive(Debug, Clone)]
pub enum Value {
    Ring(Arc<FiniteRing>),
    Group(Arc<FiniteGroup>),
}

impl Value {
    pub fn ring(&self) -> Option<&Arc<FiniteRing>> {
        match self {
            Value::Ring(r) => Some(r),
            Value::Group(_) => None,
        }
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        match self {
            Value::Group(g) => Some(g),
            Value::Ring(_) => None,
        }
    }
}

enum Built {
    Ring(FiniteRing),
    Group(FiniteGroup),
}

/// Evaluates expressions, sharing results for repeated sub-expressions.
#[derive(Debug)]
pub struct Evaluator {
    limits: Limits,
    memo: HashMap<String, Value>,
}

fn to_usize(v: u64) -> usize {
    usize::try_from(v).unwrap_or(usize::MAX)
}

impl Evaluator {
    pub fn new(limits: Limits) -> Evaluator {
        Evaluator { limits, memo: HashMap::new() }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn eval_text(&mut self, text: &str) -> Result<Value, ExprError> {
        let e = parse(text)?;
        self.eval(&e)
    }

    pub fn ring(&mut self, text: &str) -> Result<Arc<FiniteRing>, ExprError> {
        let e = parse(text)?;
        match self.eval(&e)? {
            Value::Ring(r) => Ok(r),
            Value::Group(_) => Err(ExprError::SortMismatch { pos: 0, expected: "ring".into(), found: "group".into() }),
        }
    }

    pub fn group(&mut self, text: &str) -> Result<Arc<FiniteGroup>, ExprError> {
        let e = parse(text)?;
        match self.eval(&e)? {
            Value::Group(g) => Ok(g),
            Value::Ring(_) => Err(ExprError::SortMismatch { pos: 0, expected: "group".into(), found: "ring".into() }),
        }
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value, ExprError> {
        let text = e.canonical();
        if let Some(v) = self.memo.get(&text) {
            return Ok(v.clone());
        }
        let fail = |source: AlgebraError| ExprError::Eval { span: e.span, text: text.clone(), source };
        let l = self.limits;
        let built = match &e.node {
            Node::Z(n) => Built::Ring(ring_zn(to_usize(*n), l).map_err(fail)?),
            Node::GF(p, k) => Built::Ring(ring_gf(*p, *k, l).map_err(fail)?),
            Node::M(k, r) => {
                let r = self.eval_ring(r)?;
                Built::Ring(matrix_ring(&r, to_usize(*k), l).map_err(fail)?)
            }
            Node::T(k, r) => {
                let r = self.eval_ring(r)?;
                Built::Ring(upper_triangular(&r, to_usize(*k), l).map_err(fail)?)
            }
            Node::Prod(items) => {
                let rings = items.iter().map(|x| self.eval_ring(x)).collect::<Result<Vec<_>, _>>()?;
                Built::Ring(direct_product(&rings, l).map_err(fail)?.0)
            }
            Node::TrivExt(r) => {
                let r = self.eval_ring(r)?;
                Built::Ring(trivial_extension(&r, l).map_err(fail)?)
            }
            Node::Quot(r, gens) => {
                let r = self.eval_ring(r)?;
                let gens: Vec<usize> = gens.iter().map(|&g| to_usize(g)).collect();
                let ideal = ideal_generated(&r, &gens).map_err(fail)?;
                Built::Ring(quotient(&r, &ideal, l).map_err(fail)?.0)
            }
            Node::Corner(r, idem) => {
                let r = self.eval_ring(r)?;
                Built::Ring(corner(&r, to_usize(*idem), l).map_err(fail)?)
            }
            Node::GR(r, g) => {
                let r = self.eval_ring(r)?;
                let g = self.eval_group(g)?;
                Built::Ring(group_ring(&r, &g, l).map_err(fail)?)
            }
            Node::C(m) => Built::Group(cyclic_group(to_usize(*m), l).map_err(fail)?),
            Node::GProd(items) => {
                let mut acc = (*self.eval_group(&items[0])?).clone();
                for x in &items[1..] {
                    let g = self.eval_group(x)?;
                    acc = group_product(&acc, &g, l).map_err(fail)?;
                }
                Built::Group(acc)
            }
            Node::S3 => Built::Group(symmetric_group_s3()),
        };
        let v = match built {
            Built::Ring(r) => Value::Ring(Arc::new(r.with_label(text.clone()))),
            Built::Group(g) => Value::Group(Arc::new(g.with_label(text.clone()))),
        };
        self.memo.insert(text, v.clone());
        Ok(v)
    }

    fn eval_ring(&mut self, e: &Expr) -> Result<Arc<FiniteRing>, ExprError> {
        Ok(self.eval(e)?.ring().expect("parser checks sorts").clone())
    }

    fn eval_group(&mut self, e: &Expr) -> Result<Arc<FiniteGroup>, ExprError> {
        Ok(self.eval(e)?.group().expect("parser checks sorts").clone())
    }
}

/// One-shot evaluation.
pub fn eval(e: &Expr, limits: Limits) -> Result<Value, ExprError> {
    Evaluator::new(limits).eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_examples() {
        let e = parse("GR(Z(3),C(3))").unwrap();
        assert!(matches!(e.node, Node::GR(..)));
        let e = parse("M(2, Z(2))").unwrap();
        assert!(matches!(e.node, Node::M(2, _)));
        assert_eq!(e.canonical(), "M(2,Z(2))");
        let e = parse("Quot(Z(6), [2])").unwrap();
        assert!(matches!(&e.node, Node::Quot(_, g) if g == &vec![2]));
    }

    #[test]
    fn names_are_case_insensitive_and_printing_is_canonical() {
        let e = parse("  gr( z(2) , gprod(c(2), C(2)) )").unwrap();
        assert_eq!(e.canonical(), "GR(Z(2),Prod(C(2),C(2)))");
        assert_eq!(parse(&e.canonical()).unwrap(), e);
        assert_eq!(parse("s3").unwrap().canonical(), "S3");
        assert_eq!(parse("S3()").unwrap().canonical(), "S3");
        assert_eq!(parse("Quot(Z(4),[])").unwrap().canonical(), "Quot(Z(4),[])");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("Z(2"), Err(ExprError::Parse { pos: 3, .. })));
        assert!(matches!(parse("Z(2,3)"), Err(ExprError::Arity { .. })));
        assert!(matches!(parse("Z"), Err(ExprError::Arity { .. })));
        assert!(matches!(parse("Foo(1)"), Err(ExprError::UnknownName { .. })));
        assert!(matches!(parse("M(2,C(2))"), Err(ExprError::SortMismatch { .. })));
        assert!(matches!(parse("Prod(Z(2),C(2))"), Err(ExprError::SortMismatch { .. })));
        assert!(matches!(parse("Z(99999999999999999999)"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("Z(2) x"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse(&"x".repeat(5000)), Err(ExprError::TooLong { .. })));
        let deep = format!("{}Z(2){}", "TrivExt(".repeat(200), ")".repeat(200));
        assert!(matches!(parse(&deep), Err(ExprError::TooDeep { .. })));
    }

    #[test]
    fn evaluation_matches_constructors() {
        let l = Limits::default();
        let mut ev = Evaluator::new(l);
        assert_eq!(ev.ring("Z(9)").unwrap().hash(), ring_zn(9, l).unwrap().hash());
        let t = ev.ring("TrivExt(Z(3))").unwrap();
        assert_eq!(t.order(), 9);
        assert_eq!(t.label(), "TrivExt(Z(3))");
        assert_eq!(ev.ring("GR(Z(2), Prod(C(2),C(2)))").unwrap().order(), 16);
        assert_eq!(
            ev.ring("gr(z(2),gprod(c(2),c(2)))").unwrap().hash(),
            ev.ring("GR(Z(2),Prod(C(2),C(2)))").unwrap().hash()
        );
        assert_eq!(ev.group("Prod(C(2),C(3))").unwrap().order(), 6);
    }

    #[test]
    fn evaluation_errors_carry_spans() {
        let l = Limits::new(64);
        let err = eval(&parse("Prod(Z(2), M(2,Z(3)))").unwrap(), l).unwrap_err();
        match err {
            ExprError::Eval { span, text, source } => {
                assert_eq!(span, Span { start: 11, end: 20 });
                assert_eq!(text, "M(2,Z(3))");
                assert!(matches!(source, AlgebraError::SizeCapExceeded { requested: 81, .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = eval(&parse("Corner(Z(6),2)").unwrap(), l).unwrap_err();
        assert_eq!(err.algebra(), Some(&AlgebraError::NotIdempotent(2)));
    }
}
