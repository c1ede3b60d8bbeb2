//! Text syntax for the calculus.
//!
//! Keywords: `top`, `*`, `A /\ B`, `A |- B`, `name A`, `p1 t`, `p2 t`,
//! `<s, t>`, `s @ t`, `lam x1:A. s`; variables are `x1:A` (annotation
//! optional on bound occurrences).

use super::{TermExpr, TypeExpr, Var};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn at(line: usize, col: usize, msg: &str) -> ParseError {
        ParseError { line, col, msg: msg.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Star,
    At,
    Wedge,
    Turnstile,
    Colon,
    Dot,
    Comma,
    LParen,
    RParen,
    LAngle,
    RAngle,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '@' => {
                out.push((Tok::At, i));
                i += 1;
            }
            ':' => {
                out.push((Tok::Colon, i));
                i += 1;
            }
            '.' => {
                out.push((Tok::Dot, i));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '<' => {
                out.push((Tok::LAngle, i));
                i += 1;
            }
            '>' => {
                out.push((Tok::RAngle, i));
                i += 1;
            }
            '/' => {
                if chars.get(i + 1) == Some(&'\\') {
                    out.push((Tok::Wedge, i));
                    i += 2;
                } else {
                    return Err(ParseError::at(0, i, "expected /\\"));
                }
            }
            '|' => {
                if chars.get(i + 1) == Some(&'-') {
                    out.push((Tok::Turnstile, i));
                    i += 2;
                } else {
                    return Err(ParseError::at(0, i, "expected |-"));
                }
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
            }
            _ => return Err(ParseError::at(0, i, &format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct P<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    consts: &'a BTreeMap<String, TypeExpr>,
    scope: Vec<Var>,
}

impl<'a> P<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }
    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, c)| c).unwrap_or_else(|| {
            self.toks.last().map(|&(_, c)| c + 1).unwrap_or(0)
        })
    }
    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }
    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::at(0, self.col(), &format!("expected {what}")))
        }
    }
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::at(0, self.col(), msg))
    }

    fn ty(&mut self) -> Result<TypeExpr, ParseError> {
        let lhs = self.ty_prod()?;
        if self.peek() == Some(&Tok::Turnstile) {
            self.bump();
            let rhs = self.ty()?;
            Ok(TypeExpr::turn(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn ty_prod(&mut self) -> Result<TypeExpr, ParseError> {
        let lhs = self.ty_atom()?;
        if self.peek() == Some(&Tok::Wedge) {
            self.bump();
            let rhs = self.ty_prod()?;
            Ok(TypeExpr::and(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn ty_atom(&mut self) -> Result<TypeExpr, ParseError> {
        match self.bump() {
            Some(Tok::Ident(n)) if n == "top" => Ok(TypeExpr::Top),
            Some(Tok::Ident(n)) => Ok(TypeExpr::Base(n)),
            Some(Tok::LParen) => {
                let t = self.ty()?;
                self.expect(Tok::RParen, ")")?;
                Ok(t)
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected a type")
            }
        }
    }

    fn term(&mut self) -> Result<TermExpr, ParseError> {
        if let Some(Tok::Ident(n)) = self.peek() {
            if n == "lam" {
                self.bump();
                let v = match self.bump() {
                    Some(Tok::Ident(n)) => n,
                    _ => return self.err("expected a variable after lam"),
                };
                let depth = var_depth(&v)
                    .ok_or_else(|| ParseError::at(0, self.col(), "variables look like x1, x2, ..."))?;
                self.expect(Tok::Colon, ": after the bound variable")?;
                let ty = self.ty()?;
                self.expect(Tok::Dot, ". after the binder")?;
                let var = Var::new(ty, depth);
                self.scope.push(var.clone());
                let body = self.term()?;
                self.scope.pop();
                return Ok(TermExpr::lam(var, body));
            }
        }
        // application chain
        let mut head = self.atom()?;
        while self.peek() == Some(&Tok::At) {
            self.bump();
            let arg = self.atom()?;
            head = TermExpr::app(head, arg);
        }
        Ok(head)
    }

    fn atom(&mut self) -> Result<TermExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Star) => {
                self.bump();
                Ok(TermExpr::Star)
            }
            Some(Tok::LParen) => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, ")")?;
                Ok(t)
            }
            Some(Tok::LAngle) => {
                self.bump();
                let a = self.term()?;
                self.expect(Tok::Comma, ", in a pair")?;
                let b = self.term()?;
                self.expect(Tok::RAngle, "> closing the pair")?;
                Ok(TermExpr::pair(a, b))
            }
            Some(Tok::Ident(n)) if n == "p1" => {
                self.bump();
                Ok(TermExpr::p1(self.atom()?))
            }
            Some(Tok::Ident(n)) if n == "p2" => {
                self.bump();
                Ok(TermExpr::p2(self.atom()?))
            }
            Some(Tok::Ident(n)) if n == "name" => {
                self.bump();
                let t = self.ty_atom()?;
                Ok(TermExpr::Name(t))
            }
            Some(Tok::Ident(n)) => {
                self.bump();
                if let Some(depth) = var_depth(&n) {
                    // annotated or bound variable
                    if self.peek() == Some(&Tok::Colon) {
                        self.bump();
                        let ty = self.ty_atom_or_paren()?;
                        return Ok(TermExpr::var(ty, depth));
                    }
                    if let Some(v) = self.scope.iter().rev().find(|v| v.depth == depth) {
                        return Ok(TermExpr::Var(v.clone()));
                    }
                    return self.err(&format!("unbound variable {n} needs a type annotation"));
                }
                if let Some(ty) = self.consts.get(&n) {
                    return Ok(TermExpr::Const(n, ty.clone()));
                }
                self.err(&format!("unknown constant {n}"))
            }
            _ => self.err("expected a term"),
        }
    }

    fn ty_atom_or_paren(&mut self) -> Result<TypeExpr, ParseError> {
        if self.peek() == Some(&Tok::LParen) {
            self.bump();
            let t = self.ty()?;
            self.expect(Tok::RParen, ")")?;
            Ok(t)
        } else {
            self.ty_atom()
        }
    }
}

fn var_depth(name: &str) -> Option<u32> {
    let rest = name.strip_prefix('x')?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok().filter(|&d| d >= 1)
}

pub fn parse_type(text: &str) -> Result<TypeExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = P { toks: &toks, pos: 0, consts: &BTreeMap::new(), scope: Vec::new() };
    let t = p.ty()?;
    if p.pos != toks.len() {
        return p.err("trailing input after type");
    }
    Ok(t)
}

pub fn parse_term(text: &str) -> Result<TermExpr, ParseError> {
    parse_term_in(text, &BTreeMap::new())
}

pub(crate) fn parse_term_in(
    text: &str,
    consts: &BTreeMap<String, TypeExpr>,
) -> Result<TermExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = P { toks: &toks, pos: 0, consts, scope: Vec::new() };
    let t = p.term()?;
    if p.pos != toks.len() {
        return p.err("trailing input after term");
    }
    Ok(t)
}

pub fn print_type(t: &TypeExpr) -> String {
    fn go(t: &TypeExpr, parent: u8) -> String {
        // precedence: atom=2, wedge=1, turnstile=0
        let (s, level) = match t {
            TypeExpr::Base(n) => (n.clone(), 2),
            TypeExpr::Top => ("top".to_string(), 2),
            TypeExpr::And(a, b) => (format!("{} /\\ {}", go(a, 2), go(b, 1)), 1),
            TypeExpr::Turn(a, b) => (format!("{} |- {}", go(a, 1), go(b, 0)), 0),
            TypeExpr::Comp(a, b) => (format!("comp({}, {})", go(a, 0), go(b, 0)), 2),
            TypeExpr::Src(a) => (format!("src({})", go(a, 0)), 2),
            TypeExpr::Tgt(a) => (format!("tgt({})", go(a, 0)), 2),
            TypeExpr::Anchor { tag, .. } => (format!("#{tag}"), 2),
        };
        if level < parent {
            format!("({s})")
        } else {
            s
        }
    }
    go(t, 0)
}

pub fn print_term(t: &TermExpr) -> String {
    fn var_name(v: &Var) -> String {
        format!("x{}", v.depth)
    }
    fn go(t: &TermExpr, parent: u8, scope: &mut Vec<Var>) -> String {
        // precedence: atom=2, app=1, lam=0
        let (s, level) = match t {
            TermExpr::Star => ("*".to_string(), 2),
            TermExpr::Var(v) => {
                if scope.contains(v) {
                    (var_name(v), 2)
                } else {
                    (format!("{}:({})", var_name(v), print_type(&v.ty)), 2)
                }
            }
            TermExpr::Name(a) => (format!("name ({})", print_type(a)), 1),
            TermExpr::Const(n, _) => (n.clone(), 2),
            TermExpr::Proj1(s) => (format!("p1 {}", go(s, 2, scope)), 1),
            TermExpr::Proj2(s) => (format!("p2 {}", go(s, 2, scope)), 1),
            TermExpr::Pair(a, b) => {
                (format!("<{}, {}>", go(a, 0, scope), go(b, 0, scope)), 2)
            }
            TermExpr::App(a, b) => (format!("{} @ {}", go(a, 1, scope), go(b, 2, scope)), 1),
            TermExpr::Lam(x, body) => {
                scope.push(x.clone());
                let s = format!("lam {}:{}. {}", var_name(x), print_type(&x.ty), go(body, 0, scope));
                scope.pop();
                (s, 0)
            }
        };
        if level < parent {
            format!("({s})")
        } else {
            s
        }
    }
    go(t, 0, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::LambdaCalc;

    #[test]
    fn round_trips() {
        let l = LambdaCalc::new("demo")
            .with_base("A")
            .with_base("B")
            .with_const("c", TypeExpr::and(TypeExpr::base("A"), TypeExpr::base("B")));
        for src in ["lam x1:A. x1", "<p1 c, p2 c>", "*", "lam x1:A /\\ B. <p2 x1, p1 x1>"] {
            let t = l.parse(src).unwrap();
            let printed = print_term(&t);
            let t2 = l.parse(&printed).unwrap();
            assert_eq!(t, t2, "{src} -> {printed}");
        }
    }

    #[test]
    fn pair_example() {
        let l = LambdaCalc::new("demo")
            .with_base("A")
            .with_base("B")
            .with_const("c", TypeExpr::and(TypeExpr::base("A"), TypeExpr::base("B")));
        let t = l.parse("<p1 c, p2 c>").unwrap();
        assert_eq!(
            t,
            TermExpr::pair(
                TermExpr::p1(TermExpr::Const("c".into(), TypeExpr::and(TypeExpr::base("A"), TypeExpr::base("B")))),
                TermExpr::p2(TermExpr::Const("c".into(), TypeExpr::and(TypeExpr::base("A"), TypeExpr::base("B"))))
            )
        );
    }

    #[test]
    fn unbalanced_bracket_errors_with_position() {
        let l = LambdaCalc::new("demo").with_base("A").with_const("k", TypeExpr::base("A"));
        let err = l.parse("<k, k").unwrap_err();
        assert!(err.col > 0);
    }

    #[test]
    fn type_precedence() {
        let t = parse_type("A /\\ B |- A").unwrap();
        assert_eq!(
            t,
            TypeExpr::turn(TypeExpr::and(TypeExpr::base("A"), TypeExpr::base("B")), TypeExpr::base("A"))
        );
        let back = parse_type(&print_type(&t)).unwrap();
        assert_eq!(t, back);
    }
}
