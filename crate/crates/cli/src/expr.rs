//! Expression language for diagram sums and Feynman diagrams.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := rational | diagram | '(' expr ')' | '-' factor
//! rational:= int ['/' int]
//! diagram := 'cd[' [pair (',' pair)*] ']' | fdlit
//! pair    := int '-' int
//! fdlit   := 'fd{legs=' int (';' item)* '}'
//! item    := 'v' int '=(' anchor ',' anchor ',' anchor ')' | 'L' int '-' 'L' int
//! anchor  := 'L' int | 'v' int '.' slot
//! ```
//!
//! Whitespace is allowed between tokens. `*` scales by a rational or
//! connect-sums two diagram sums; Feynman diagrams are STU-resolved as soon
//! as they meet chord diagrams.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;
use vassiliev_core::operators::product;
use vassiliev_core::{Anchor, ChordDiagram, DiagramSum, FeynmanDiagram, Rational};

/// A parse or evaluation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ExprError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    fn err(self, msg: impl Into<String>) -> ExprError {
        ExprError { line: self.line, col: self.col, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Rational(Rational),
    Chord(ChordDiagram),
    Feynman(FeynmanDiagram),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>, Pos),
    Sub(Box<Expr>, Box<Expr>, Pos),
    Mul(Box<Expr>, Box<Expr>, Pos),
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Chord(DiagramSum),
    /// A combination of Feynman diagrams of one degree, kept unresolved.
    Feynman(Vec<(FeynmanDiagram, Rational)>),
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
}

impl<'a> Parser<'a> {
    fn pos_of(&self, at: usize) -> Pos {
        let before = &self.src[..at.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = at - before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
        Pos { line, col }
    }

    fn pos(&self) -> Pos {
        self.pos_of(self.at)
    }

    fn skip_ws(&mut self) {
        while self.at < self.src.len() && self.src[self.at].is_ascii_whitespace() {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.at).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", c as char)))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ExprError> {
        self.skip_ws();
        if self.src[self.at..].starts_with(w.as_bytes()) {
            self.at += w.len();
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{w}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ExprError {
        let p = self.pos();
        match self.peek() {
            None => p.err(format!("expected {wanted}, found end of input")),
            Some(c) => p.err(format!("expected {wanted}, found '{}'", c as char)),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ExprError> {
        self.skip_ws();
        let start = self.at;
        while self.at < self.src.len() && self.src[self.at].is_ascii_digit() {
            self.at += 1;
        }
        if start == self.at {
            return Err(self.unexpected("an integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.at]).expect("ascii digits"))
    }

    fn index(&mut self) -> Result<usize, ExprError> {
        let p = self.pos();
        let d = self.digits()?;
        d.parse().map_err(|_| p.err(format!("integer {d} is too large")))
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut left = self.term()?;
        loop {
            let p = self.pos();
            if self.eat(b'+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?), p);
            } else if self.eat(b'-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?), p);
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut left = self.factor()?;
        loop {
            let p = self.pos();
            if self.eat(b'*') {
                left = Expr::Mul(Box::new(left), Box::new(self.factor()?), p);
            } else {
                return Ok(left);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.at += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(b'c') => self.chord_literal(),
            Some(b'f') => self.feynman_literal(),
            _ => Err(self.unexpected("a number, 'cd[', 'fd{' or '('")),
        }
    }

    fn rational(&mut self) -> Result<Expr, ExprError> {
        let num = self.digits()?.to_string();
        if self.eat(b'/') {
            let p = self.pos();
            let den = self.digits()?;
            if den.bytes().all(|b| b == b'0') {
                return Err(p.err("zero denominator"));
            }
            let r: Rational = format!("{num}/{den}").parse().expect("digits");
            return Ok(Expr::Rational(r));
        }
        Ok(Expr::Rational(num.parse().expect("digits")))
    }

    fn chord_literal(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos();
        let pairs = self.chord_pairs()?;
        ChordDiagram::from_pairs(&pairs).map(Expr::Chord).map_err(|e| start.err(e.to_string()))
    }

    fn chord_pairs(&mut self) -> Result<Vec<(usize, usize)>, ExprError> {
        self.expect_word("cd[")?;
        let mut pairs = Vec::new();
        if !self.eat(b']') {
            loop {
                let a = self.index()?;
                self.expect(b'-')?;
                let b = self.index()?;
                pairs.push((a, b));
                if self.eat(b']') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        Ok(pairs)
    }

    fn anchor(&mut self) -> Result<Anchor, ExprError> {
        match self.peek() {
            Some(b'L') => {
                self.at += 1;
                Ok(Anchor::Leg(self.index()?))
            }
            Some(b'v') => {
                self.at += 1;
                let v = self.index()?;
                self.expect(b'.')?;
                let p = self.pos();
                let s = self.index()?;
                if s > 2 {
                    return Err(p.err(format!("slot {s} out of range (slots are 0, 1, 2)")));
                }
                Ok(Anchor::Slot(v, s as u8))
            }
            _ => Err(self.unexpected("an anchor 'L<k>' or 'v<i>.<slot>'")),
        }
    }

    fn feynman_literal(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos();
        self.expect_word("fd{")?;
        self.expect_word("legs")?;
        self.expect(b'=')?;
        let legs = self.index()?;
        let mut defs: Vec<Option<[Anchor; 3]>> = Vec::new();
        let mut edges = BTreeSet::new();
        while self.eat(b';') {
            let p = self.pos();
            match self.peek() {
                Some(b'v') => {
                    self.at += 1;
                    let v = self.index()?;
                    self.expect(b'=')?;
                    self.expect(b'(')?;
                    let a = self.anchor()?;
                    self.expect(b',')?;
                    let b = self.anchor()?;
                    self.expect(b',')?;
                    let c = self.anchor()?;
                    self.expect(b')')?;
                    if defs.len() <= v {
                        defs.resize(v + 1, None);
                    }
                    if defs[v].replace([a, b, c]).is_some() {
                        return Err(p.err(format!("vertex v{v} defined twice")));
                    }
                }
                Some(b'L') => {
                    let a = self.anchor()?;
                    self.expect(b'-')?;
                    let b = self.anchor()?;
                    if !matches!(b, Anchor::Leg(_)) {
                        return Err(p.err("a chord joins two legs"));
                    }
                    edges.insert((a.min(b), a.max(b)));
                }
                _ => return Err(self.unexpected("a vertex definition or a chord")),
            }
        }
        self.expect(b'}')?;
        for (v, def) in defs.iter().enumerate() {
            let Some(anchors) = def else {
                return Err(start.err(format!("vertex v{v} is not defined")));
            };
            for (s, &a) in anchors.iter().enumerate() {
                let own = Anchor::Slot(v, s as u8);
                edges.insert((own.min(a), own.max(a)));
            }
        }
        let edges: Vec<(Anchor, Anchor)> = edges.into_iter().collect();
        FeynmanDiagram::new(legs, defs.len(), &edges)
            .map(Expr::Feynman)
            .map_err(|e| start.err(e.to_string()))
    }
}

/// Parses an expression; the whole input must be consumed.
pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: text.as_bytes(), at: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

fn resolve_all(terms: &[(FeynmanDiagram, Rational)], degree: usize, pos: Pos) -> Result<DiagramSum, ExprError> {
    let mut out = DiagramSum::zero(degree);
    for (f, c) in terms {
        out.add_scaled(c, &f.stu_resolve().map_err(|e| pos.err(e.to_string()))?);
    }
    Ok(out)
}

impl Value {
    pub fn degree(&self) -> usize {
        match self {
            Value::Scalar(_) => 0,
            Value::Chord(v) => v.degree(),
            Value::Feynman(t) => t.first().map_or(0, |(f, _)| f.degree()),
        }
    }

    /// The value as a chord-diagram sum, resolving Feynman diagrams.
    pub fn into_sum(self, pos: Pos) -> Result<DiagramSum, ExprError> {
        match self {
            Value::Scalar(c) => Ok(DiagramSum::term(ChordDiagram::empty(), c)),
            Value::Chord(v) => Ok(v),
            Value::Feynman(t) => {
                let degree = t.first().map_or(0, |(f, _)| f.degree());
                resolve_all(&t, degree, pos)
            }
        }
    }

    fn scale(self, c: &Rational) -> Value {
        match self {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Chord(v) => Value::Chord(v.scaled(c)),
            Value::Feynman(t) => Value::Feynman(t.into_iter().map(|(f, x)| (f, x * c)).collect()),
        }
    }
}

fn mismatch(a: usize, b: usize, pos: Pos) -> ExprError {
    pos.err(format!("degree mismatch: {a} vs {b}"))
}

fn add(a: Value, b: Value, pos: Pos) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
        (Value::Feynman(mut s), Value::Feynman(t)) => {
            let (da, db) = (Value::Feynman(s.clone()).degree(), Value::Feynman(t.clone()).degree());
            if da != db {
                return Err(mismatch(da, db, pos));
            }
            s.extend(t);
            Ok(Value::Feynman(s))
        }
        (a, b) => {
            let (da, db) = (a.degree(), b.degree());
            if da != db {
                return Err(mismatch(da, db, pos));
            }
            let a = a.into_sum(pos)?;
            let b = b.into_sum(pos)?;
            a.checked_add(&b).map(Value::Chord).map_err(|_| mismatch(da, db, pos))
        }
    }
}

/// Evaluates an expression.
pub fn evaluate(e: &Expr) -> Result<Value, ExprError> {
    Ok(match e {
        Expr::Rational(r) => Value::Scalar(r.clone()),
        Expr::Chord(d) => Value::Chord(DiagramSum::from_diagram(d.clone())),
        Expr::Feynman(f) => Value::Feynman(vec![(f.clone(), Rational::one())]),
        Expr::Neg(x) => evaluate(x)?.scale(&-Rational::one()),
        Expr::Add(a, b, p) => add(evaluate(a)?, evaluate(b)?, *p)?,
        Expr::Sub(a, b, p) => add(evaluate(a)?, evaluate(b)?.scale(&-Rational::one()), *p)?,
        Expr::Mul(a, b, p) => match (evaluate(a)?, evaluate(b)?) {
            (Value::Scalar(x), v) | (v, Value::Scalar(x)) => v.scale(&x),
            (a, b) => Value::Chord(product(&a.into_sum(*p)?, &b.into_sum(*p)?)),
        },
    })
}

/// A single `cd[...]` literal as its pairing at the written basepoint.
pub fn parse_pairing(text: &str) -> Result<Vec<usize>, ExprError> {
    let mut p = Parser { src: text.as_bytes(), at: 0 };
    let start = p.pos();
    let pairs = p.chord_pairs()?;
    if p.peek().is_some() {
        return Err(p.unexpected("end of input"));
    }
    ChordDiagram::from_pairs(&pairs).map_err(|e| start.err(e.to_string()))?;
    let mut partner = vec![0; 2 * pairs.len()];
    for (a, b) in pairs {
        partner[a] = b;
        partner[b] = a;
    }
    Ok(partner)
}

/// Parses and evaluates `text` to a diagram sum.
pub fn parse_sum(text: &str) -> Result<DiagramSum, ExprError> {
    let e = parse_expr(text)?;
    evaluate(&e)?.into_sum(Pos { line: 1, col: 1 })
}

/// Parses and evaluates `text` to a combination of Feynman diagrams; plain
/// chord diagrams are read as Feynman diagrams without internal vertices.
pub fn parse_feynman(text: &str) -> Result<Vec<(FeynmanDiagram, Rational)>, ExprError> {
    let e = parse_expr(text)?;
    let at = Pos { line: 1, col: 1 };
    match evaluate(&e)? {
        Value::Feynman(t) => Ok(t),
        Value::Chord(v) => Ok(v.iter().map(|(d, c)| (FeynmanDiagram::from_chord_diagram(d), c.clone())).collect()),
        Value::Scalar(c) if c.is_zero() => Ok(Vec::new()),
        Value::Scalar(_) => Err(at.err("expected a Feynman diagram expression")),
    }
}

/// Canonical printing; `parse_sum(&format_expr(v))` gives back `v`.
pub fn format_expr(v: &impl fmt::Display) -> String {
    v.to_string()
}
