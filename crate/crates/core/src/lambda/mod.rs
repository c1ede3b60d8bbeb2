//! The generalized typed lambda calculus: types, terms, substitution,
//! normalization, and decidable-fragment equality.

pub mod nameless;
mod parse;

pub use parse::{parse_term, parse_type, print_term, print_type, ParseError};

use crate::report::{Report, Verdict};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Types: the type layer forms an ideal category whose objects include the
/// declared base types.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeExpr {
    Base(String),
    Top,
    And(Box<TypeExpr>, Box<TypeExpr>),
    /// turnstile(A, B): source A, target B.
    Turn(Box<TypeExpr>, Box<TypeExpr>),
    Comp(Box<TypeExpr>, Box<TypeExpr>),
    Src(Box<TypeExpr>),
    Tgt(Box<TypeExpr>),
    /// A generated type constant with declared endpoints; `tag` identifies
    /// it and keys its name-action in the ambient anchor table.
    Anchor { src: Box<TypeExpr>, tgt: Box<TypeExpr>, tag: String },
}

impl TypeExpr {
    pub fn and(a: TypeExpr, b: TypeExpr) -> TypeExpr {
        TypeExpr::And(Box::new(a), Box::new(b))
    }
    pub fn turn(a: TypeExpr, b: TypeExpr) -> TypeExpr {
        TypeExpr::Turn(Box::new(a), Box::new(b))
    }
    pub fn base(n: &str) -> TypeExpr {
        TypeExpr::Base(n.to_string())
    }

    /// Source in the type layer (base types are objects).
    pub fn src(&self) -> TypeExpr {
        match self.normalized() {
            TypeExpr::Base(n) => TypeExpr::Base(n),
            TypeExpr::Top => TypeExpr::Top,
            TypeExpr::And(a, b) => TypeExpr::and(a.src(), b.src()),
            TypeExpr::Turn(a, _) => *a,
            TypeExpr::Comp(_, b) => b.src(),
            TypeExpr::Anchor { src, .. } => (*src).clone(),
            t => TypeExpr::Src(Box::new(t)),
        }
    }

    pub fn tgt(&self) -> TypeExpr {
        match self.normalized() {
            TypeExpr::Base(n) => TypeExpr::Base(n),
            TypeExpr::Top => TypeExpr::Top,
            TypeExpr::And(a, b) => TypeExpr::and(a.tgt(), b.tgt()),
            TypeExpr::Turn(_, b) => *b,
            TypeExpr::Comp(a, _) => a.tgt(),
            TypeExpr::Anchor { tgt, .. } => (*tgt).clone(),
            t => TypeExpr::Tgt(Box::new(t)),
        }
    }

    /// Normalization of the type layer: push src/tgt inward, resolve
    /// composites by the ideal-category absorption laws.
    pub fn normalized(&self) -> TypeExpr {
        match self {
            TypeExpr::Base(_) | TypeExpr::Top | TypeExpr::Anchor { .. } => self.clone(),
            TypeExpr::And(a, b) => TypeExpr::and(a.normalized(), b.normalized()),
            TypeExpr::Turn(a, b) => TypeExpr::turn(a.normalized(), b.normalized()),
            TypeExpr::Src(a) => a.normalized().src(),
            TypeExpr::Tgt(a) => a.normalized().tgt(),
            TypeExpr::Comp(f, g) => {
                let f = f.normalized();
                let g = g.normalized();
                // identity absorption: (a |- a) acts as 1_a
                if let TypeExpr::Turn(x, y) = &f {
                    if x == y && g.tgt() == **x {
                        return g;
                    }
                    // (tgt g |- h) . g = (src g |- h)
                    if **x == g.tgt() {
                        if **y == g.tgt() {
                            return g;
                        }
                        return TypeExpr::turn(g.src(), (**y).clone());
                    }
                }
                if let TypeExpr::Turn(x, y) = &g {
                    if x == y && f.src() == **x {
                        return f;
                    }
                    // f . (h |- src f) = (h |- tgt f)
                    if **y == f.src() {
                        if **x == f.src() {
                            return f;
                        }
                        return TypeExpr::turn((**x).clone(), f.tgt());
                    }
                }
                TypeExpr::Comp(Box::new(f), Box::new(g))
            }
        }
    }

    pub fn equal(&self, other: &TypeExpr) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_type(self))
    }
}

/// A standard variable: the depth-fold dotting of its type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub ty: TypeExpr,
    pub depth: u32,
}

impl Var {
    pub fn new(ty: TypeExpr, depth: u32) -> Var {
        assert!(depth >= 1);
        Var { ty, depth }
    }
    pub fn shifted(&self, n: u32) -> Var {
        Var { ty: self.ty.clone(), depth: self.depth + n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermExpr {
    Star,
    Var(Var),
    Name(TypeExpr),
    Const(String, TypeExpr),
    Proj1(Box<TermExpr>),
    Proj2(Box<TermExpr>),
    Pair(Box<TermExpr>, Box<TermExpr>),
    App(Box<TermExpr>, Box<TermExpr>),
    Lam(Var, Box<TermExpr>),
}

impl TermExpr {
    pub fn var(ty: TypeExpr, depth: u32) -> TermExpr {
        TermExpr::Var(Var::new(ty, depth))
    }
    pub fn app(s: TermExpr, t: TermExpr) -> TermExpr {
        TermExpr::App(Box::new(s), Box::new(t))
    }
    pub fn pair(s: TermExpr, t: TermExpr) -> TermExpr {
        TermExpr::Pair(Box::new(s), Box::new(t))
    }
    pub fn lam(x: Var, s: TermExpr) -> TermExpr {
        TermExpr::Lam(x, Box::new(s))
    }
    pub fn p1(s: TermExpr) -> TermExpr {
        TermExpr::Proj1(Box::new(s))
    }
    pub fn p2(s: TermExpr) -> TermExpr {
        TermExpr::Proj2(Box::new(s))
    }
}

impl fmt::Display for TermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print_term(self))
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum TypeError {
    #[error("projection applied to a non-product of type {0}")]
    BadProjection(String),
    #[error("application head has non-arrow type {0}")]
    BadApp(String),
    #[error("argument type {0} does not match parameter type {1}")]
    ArgMismatch(String, String),
}

/// ty(t) per the typing clauses; variables carry their types.
pub fn typecheck(t: &TermExpr) -> Result<TypeExpr, TypeError> {
    match t {
        TermExpr::Star => Ok(TypeExpr::Top),
        TermExpr::Var(v) => Ok(v.ty.clone()),
        TermExpr::Name(a) => Ok(TypeExpr::turn(a.src(), a.tgt())),
        TermExpr::Const(_, a) => Ok(a.clone()),
        TermExpr::Proj1(s) => match typecheck(s)?.normalized() {
            TypeExpr::And(a, _) => Ok(*a),
            other => Err(TypeError::BadProjection(other.to_string())),
        },
        TermExpr::Proj2(s) => match typecheck(s)?.normalized() {
            TypeExpr::And(_, b) => Ok(*b),
            other => Err(TypeError::BadProjection(other.to_string())),
        },
        TermExpr::Pair(s, t) => Ok(TypeExpr::and(typecheck(s)?, typecheck(t)?)),
        TermExpr::App(s, t) => match typecheck(s)?.normalized() {
            TypeExpr::Turn(a, b) => {
                let at = typecheck(t)?;
                if at.equal(&a) {
                    Ok(*b)
                } else {
                    Err(TypeError::ArgMismatch(at.to_string(), a.to_string()))
                }
            }
            other => Err(TypeError::BadApp(other.to_string())),
        },
        TermExpr::Lam(x, s) => Ok(TypeExpr::turn(x.ty.clone(), typecheck(s)?)),
    }
}

/// Free variables. Variables in `validated` count as constants.
pub fn fv_with(t: &TermExpr, validated: &BTreeSet<Var>) -> BTreeSet<Var> {
    fn go(t: &TermExpr, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>, validated: &BTreeSet<Var>) {
        match t {
            TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) => {}
            TermExpr::Var(v) => {
                if !bound.contains(v) && !validated.contains(v) {
                    out.insert(v.clone());
                }
            }
            TermExpr::Proj1(s) | TermExpr::Proj2(s) => go(s, bound, out, validated),
            TermExpr::Pair(a, b) | TermExpr::App(a, b) => {
                go(a, bound, out, validated);
                go(b, bound, out, validated);
            }
            TermExpr::Lam(x, s) => {
                bound.push(x.clone());
                go(s, bound, out, validated);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out, validated);
    out
}

pub fn fv(t: &TermExpr) -> BTreeSet<Var> {
    fv_with(t, &BTreeSet::new())
}

/// All variables appearing (free or bound).
pub fn all_vars(t: &TermExpr) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    fn go(t: &TermExpr, out: &mut BTreeSet<Var>) {
        match t {
            TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) => {}
            TermExpr::Var(v) => {
                out.insert(v.clone());
            }
            TermExpr::Proj1(s) | TermExpr::Proj2(s) => go(s, out),
            TermExpr::Pair(a, b) | TermExpr::App(a, b) => {
                go(a, out);
                go(b, out);
            }
            TermExpr::Lam(x, s) => {
                out.insert(x.clone());
                go(s, out);
            }
        }
    }
    go(t, &mut out);
    out
}

/// Variables appearing bound.
pub fn captured_vars(t: &TermExpr) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    fn go(t: &TermExpr, out: &mut BTreeSet<Var>) {
        match t {
            TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) | TermExpr::Var(_) => {}
            TermExpr::Proj1(s) | TermExpr::Proj2(s) => go(s, out),
            TermExpr::Pair(a, b) | TermExpr::App(a, b) => {
                go(a, out);
                go(b, out);
            }
            TermExpr::Lam(x, s) => {
                out.insert(x.clone());
                go(s, out);
            }
        }
    }
    go(t, &mut out);
    out
}

fn rename_bound(t: &TermExpr, targets: &BTreeSet<Var>, n: u32) -> TermExpr {
    fn go(t: &TermExpr, targets: &BTreeSet<Var>, n: u32, active: &mut Vec<Var>) -> TermExpr {
        match t {
            TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) => t.clone(),
            TermExpr::Var(v) => {
                if active.contains(v) {
                    TermExpr::Var(v.shifted(n))
                } else {
                    t.clone()
                }
            }
            TermExpr::Proj1(s) => TermExpr::p1(go(s, targets, n, active)),
            TermExpr::Proj2(s) => TermExpr::p2(go(s, targets, n, active)),
            TermExpr::Pair(a, b) => {
                TermExpr::pair(go(a, targets, n, active), go(b, targets, n, active))
            }
            TermExpr::App(a, b) => {
                TermExpr::app(go(a, targets, n, active), go(b, targets, n, active))
            }
            TermExpr::Lam(x, s) => {
                if targets.contains(x) {
                    active.push(x.clone());
                    let body = go(s, targets, n, active);
                    active.pop();
                    TermExpr::lam(x.shifted(n), body)
                } else {
                    TermExpr::lam(x.clone(), go(s, targets, n, active))
                }
            }
        }
    }
    go(t, targets, n, &mut Vec::new())
}

fn subst_naive(s: &TermExpr, x: &Var, t: &TermExpr) -> TermExpr {
    match s {
        TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) => s.clone(),
        TermExpr::Var(v) => {
            if v == x {
                t.clone()
            } else {
                s.clone()
            }
        }
        TermExpr::Proj1(a) => TermExpr::p1(subst_naive(a, x, t)),
        TermExpr::Proj2(a) => TermExpr::p2(subst_naive(a, x, t)),
        TermExpr::Pair(a, b) => TermExpr::pair(subst_naive(a, x, t), subst_naive(b, x, t)),
        TermExpr::App(a, b) => TermExpr::app(subst_naive(a, x, t), subst_naive(b, x, t)),
        TermExpr::Lam(y, a) => {
            if y == x {
                s.clone()
            } else {
                TermExpr::lam(y.clone(), subst_naive(a, x, t))
            }
        }
    }
}

/// Capture-avoiding substitution s[x/t]: the binders of s that would
/// capture a free variable of t are renamed in bulk by the least increment
/// that avoids every variable of s and t.
pub fn substitute(s: &TermExpr, x: &Var, t: &TermExpr) -> TermExpr {
    let clash: BTreeSet<Var> = fv(t).intersection(&captured_vars(s)).cloned().collect();
    let s = if clash.is_empty() {
        s.clone()
    } else {
        let avoid: BTreeSet<Var> = all_vars(s).union(&all_vars(t)).cloned().collect();
        let mut n = 1;
        loop {
            if clash.iter().all(|v| !avoid.contains(&v.shifted(n))) {
                break;
            }
            n += 1;
        }
        rename_bound(s, &clash, n)
    };
    subst_naive(&s, x, t)
}

/// Canonical alpha form: binders renumbered by binding order, using depths
/// beyond every free variable (alpha-equal terms share free variables, so
/// the offset is stable across representatives).
pub fn alpha_canonical(t: &TermExpr) -> TermExpr {
    let base = fv(t).iter().map(|v| v.depth).max().unwrap_or(0) + 1000;
    fn go(t: &TermExpr, base: u32, env: &mut Vec<(Var, Var)>) -> TermExpr {
        match t {
            TermExpr::Star | TermExpr::Name(_) | TermExpr::Const(_, _) => t.clone(),
            TermExpr::Var(v) => {
                for (from, to) in env.iter().rev() {
                    if from == v {
                        return TermExpr::Var(to.clone());
                    }
                }
                t.clone()
            }
            TermExpr::Proj1(s) => TermExpr::p1(go(s, base, env)),
            TermExpr::Proj2(s) => TermExpr::p2(go(s, base, env)),
            TermExpr::Pair(a, b) => TermExpr::pair(go(a, base, env), go(b, base, env)),
            TermExpr::App(a, b) => TermExpr::app(go(a, base, env), go(b, base, env)),
            TermExpr::Lam(x, s) => {
                let fresh = Var::new(x.ty.clone(), base + env.len() as u32);
                env.push((x.clone(), fresh.clone()));
                let body = go(s, base, env);
                env.pop();
                TermExpr::lam(fresh, body)
            }
        }
    }
    go(t, base, &mut Vec::new())
}

/// Registered bodies for anchor-type name actions.
pub type AnchorTable = BTreeMap<String, (Var, TermExpr)>;

/// One rewriting pass; returns None when no rule applies.
fn step(t: &TermExpr) -> Option<TermExpr> {
    step_in(t, &AnchorTable::new())
}

fn step_in(t: &TermExpr, anchors: &AnchorTable) -> Option<TermExpr> {
    // terminal collapse: non-star terms of type top
    if !matches!(t, TermExpr::Star) {
        if let Ok(ty) = typecheck(t) {
            if ty.normalized() == TypeExpr::Top {
                return Some(TermExpr::Star);
            }
        }
    }
    match t {
        TermExpr::App(s, a) => {
            if let TermExpr::Lam(x, body) = &**s {
                return Some(substitute(body, x, a));
            }
            // name actions through type structure
            if let TermExpr::Name(ty) = &**s {
                match ty.normalized() {
                    TypeExpr::And(ta, tb) => {
                        return Some(TermExpr::pair(
                            TermExpr::app(TermExpr::Name(*ta), TermExpr::p1((**a).clone())),
                            TermExpr::app(TermExpr::Name(*tb), TermExpr::p2((**a).clone())),
                        ));
                    }
                    TypeExpr::Comp(ta, tb) => {
                        return Some(TermExpr::app(
                            TermExpr::Name(*ta),
                            TermExpr::app(TermExpr::Name(*tb), (**a).clone()),
                        ));
                    }
                    TypeExpr::Anchor { tag, .. } => {
                        if let Some((v, body)) = anchors.get(&tag) {
                            return Some(substitute(body, v, a));
                        }
                    }
                    _ => {}
                }
            }
            if let Some(s2) = step_in(s, anchors) {
                return Some(TermExpr::app(s2, (**a).clone()));
            }
            step_in(a, anchors).map(|a2| TermExpr::app((**s).clone(), a2))
        }
        TermExpr::Proj1(s) => {
            if let TermExpr::Pair(a, _) = &**s {
                return Some((**a).clone());
            }
            step_in(s, anchors).map(TermExpr::p1)
        }
        TermExpr::Proj2(s) => {
            if let TermExpr::Pair(_, b) = &**s {
                return Some((**b).clone());
            }
            step_in(s, anchors).map(TermExpr::p2)
        }
        TermExpr::Pair(a, b) => {
            // surjective pairing
            if let (TermExpr::Proj1(c), TermExpr::Proj2(d)) = (&**a, &**b) {
                if c == d {
                    return Some((**c).clone());
                }
            }
            if let Some(a2) = step_in(a, anchors) {
                return Some(TermExpr::pair(a2, (**b).clone()));
            }
            step_in(b, anchors).map(|b2| TermExpr::pair((**a).clone(), b2))
        }
        TermExpr::Lam(x, s) => {
            // eta: lam x. (s @ x) -> s when x not free in s
            if let TermExpr::App(f, arg) = &**s {
                if let TermExpr::Var(v) = &**arg {
                    if v == x && !fv(f).contains(x) {
                        return Some((**f).clone());
                    }
                }
            }
            step_in(s, anchors).map(|s2| TermExpr::lam(x.clone(), s2))
        }
        _ => None,
    }
}

/// Rewrite to normal form under the fuel bound; the flag reports exhaustion.
pub fn normalize(t: &TermExpr, fuel: u64) -> (TermExpr, bool) {
    normalize_in(t, fuel, &AnchorTable::new())
}

/// Normalization with anchor-type name actions in scope.
pub fn normalize_in(t: &TermExpr, fuel: u64, anchors: &AnchorTable) -> (TermExpr, bool) {
    let mut cur = t.clone();
    let mut left = fuel;
    while let Some(next) = step_in(&cur, anchors) {
        if left == 0 {
            return (cur, true);
        }
        left -= 1;
        cur = next;
    }
    (cur, false)
}

/// Equality with anchor actions in scope.
pub fn term_eq_in(s: &TermExpr, t: &TermExpr, fuel: u64, anchors: &AnchorTable) -> Verdict {
    let (ns, ex1) = normalize_in(s, fuel, anchors);
    let (nt, ex2) = normalize_in(t, fuel, anchors);
    if ex1 || ex2 {
        return Verdict::Unknown;
    }
    if alpha_canonical(&ns) == alpha_canonical(&nt) {
        Verdict::Equal
    } else {
        Verdict::Distinct
    }
}

/// Equality by normalization and alpha comparison; fuel exhaustion yields
/// an unknown verdict, never a wrong one.
pub fn term_eq(s: &TermExpr, t: &TermExpr, fuel: u64) -> Verdict {
    let (ns, ex1) = normalize(s, fuel);
    let (nt, ex2) = normalize(t, fuel);
    if ex1 || ex2 {
        return Verdict::Unknown;
    }
    if alpha_canonical(&ns) == alpha_canonical(&nt) {
        Verdict::Equal
    } else {
        Verdict::Distinct
    }
}

/// A declared calculus: base types and typed constants.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LambdaCalc {
    pub name: String,
    pub base_types: BTreeSet<String>,
    pub constants: BTreeMap<String, TypeExpr>,
    /// Variables treated as valid constants (the calculus-with-parameter).
    pub validated: BTreeSet<Var>,
}

impl LambdaCalc {
    pub fn new(name: &str) -> LambdaCalc {
        LambdaCalc { name: name.to_string(), ..Default::default() }
    }

    pub fn with_base(mut self, n: &str) -> LambdaCalc {
        self.base_types.insert(n.to_string());
        self
    }

    pub fn with_const(mut self, n: &str, ty: TypeExpr) -> LambdaCalc {
        self.constants.insert(n.to_string(), ty);
        self
    }

    /// Parse a declarations file: `type A` and `const k : A` lines.
    pub fn from_decls(name: &str, text: &str) -> Result<LambdaCalc, ParseError> {
        let mut calc = LambdaCalc::new(name);
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("type ") {
                calc.base_types.insert(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("const ") {
                let (n, ty) = rest
                    .split_once(':')
                    .ok_or_else(|| ParseError::at(i, 0, "missing : in const declaration"))?;
                let ty = parse_type(ty.trim())?;
                calc.constants.insert(n.trim().to_string(), ty);
            } else {
                return Err(ParseError::at(i, 0, "expected `type` or `const` declaration"));
            }
        }
        Ok(calc)
    }

    pub fn to_decls(&self) -> String {
        let mut out = String::new();
        for b in &self.base_types {
            out.push_str(&format!("type {b}\n"));
        }
        for (n, ty) in &self.constants {
            out.push_str(&format!("const {n} : {}\n", print_type(ty)));
        }
        out
    }

    /// Parse a term against this calculus (resolving constants).
    pub fn parse(&self, text: &str) -> Result<TermExpr, ParseError> {
        parse::parse_term_in(text, &self.constants)
    }

    pub fn fv(&self, t: &TermExpr) -> BTreeSet<Var> {
        fv_with(t, &self.validated)
    }
}

/// A translation between calculi: images of base types and constants,
/// extended homomorphically.
#[derive(Debug, Clone)]
pub struct Translation {
    pub type_map: BTreeMap<String, TypeExpr>,
    pub const_map: BTreeMap<String, TermExpr>,
}

impl Translation {
    pub fn identity(l: &LambdaCalc) -> Translation {
        Translation {
            type_map: l.base_types.iter().map(|b| (b.clone(), TypeExpr::base(b))).collect(),
            const_map: l
                .constants
                .iter()
                .map(|(n, ty)| (n.clone(), TermExpr::Const(n.clone(), ty.clone())))
                .collect(),
        }
    }

    pub fn apply_type(&self, t: &TypeExpr) -> TypeExpr {
        match t {
            TypeExpr::Base(n) => self.type_map.get(n).cloned().unwrap_or_else(|| t.clone()),
            TypeExpr::Top => TypeExpr::Top,
            TypeExpr::And(a, b) => TypeExpr::and(self.apply_type(a), self.apply_type(b)),
            TypeExpr::Turn(a, b) => TypeExpr::turn(self.apply_type(a), self.apply_type(b)),
            TypeExpr::Comp(a, b) => {
                TypeExpr::Comp(Box::new(self.apply_type(a)), Box::new(self.apply_type(b)))
            }
            TypeExpr::Src(a) => self.apply_type(a).src(),
            TypeExpr::Tgt(a) => self.apply_type(a).tgt(),
            TypeExpr::Anchor { src, tgt, tag } => TypeExpr::Anchor {
                src: Box::new(self.apply_type(src)),
                tgt: Box::new(self.apply_type(tgt)),
                tag: tag.clone(),
            },
        }
    }

    pub fn apply(&self, t: &TermExpr) -> TermExpr {
        match t {
            TermExpr::Star => TermExpr::Star,
            TermExpr::Var(v) => {
                TermExpr::Var(Var::new(self.apply_type(&v.ty), v.depth))
            }
            TermExpr::Name(a) => TermExpr::Name(self.apply_type(a)),
            TermExpr::Const(n, ty) => self
                .const_map
                .get(n)
                .cloned()
                .unwrap_or_else(|| TermExpr::Const(n.clone(), self.apply_type(ty))),
            TermExpr::Proj1(s) => TermExpr::p1(self.apply(s)),
            TermExpr::Proj2(s) => TermExpr::p2(self.apply(s)),
            TermExpr::Pair(a, b) => TermExpr::pair(self.apply(a), self.apply(b)),
            TermExpr::App(a, b) => TermExpr::app(self.apply(a), self.apply(b)),
            TermExpr::Lam(x, s) => {
                TermExpr::lam(Var::new(self.apply_type(&x.ty), x.depth), self.apply(s))
            }
        }
    }
}

/// Homomorphism clauses on a generating fragment plus equality preservation
/// on supplied pairs.
pub fn check_translation(
    phi: &Translation,
    l1: &LambdaCalc,
    _l2: &LambdaCalc,
    terms: &[TermExpr],
    equal_pairs: &[(TermExpr, TermExpr)],
    fuel: u64,
) -> Report {
    let mut r = Report::new("translation");
    if phi.apply_type(&TypeExpr::Top) != TypeExpr::Top {
        r.violation("top", vec![], "translation does not preserve the terminal type");
    }
    for t in terms {
        // typing commutes
        if let Ok(ty) = typecheck(t) {
            match typecheck(&phi.apply(t)) {
                Ok(ty2) if ty2.equal(&phi.apply_type(&ty)) => {}
                _ => {
                    r.violation("typing", vec![print_term(t)], "ty(phi t) != phi(ty t)");
                }
            }
        }
        // structural clauses
        match t {
            TermExpr::Pair(a, b) => {
                if phi.apply(t) != TermExpr::pair(phi.apply(a), phi.apply(b)) {
                    r.violation("pair", vec![print_term(t)], "pair clause broken");
                }
            }
            TermExpr::Lam(x, s) => {
                let expect = TermExpr::lam(
                    Var::new(phi.apply_type(&x.ty), x.depth),
                    phi.apply(s),
                );
                if phi.apply(t) != expect {
                    r.violation("lam", vec![print_term(t)], "lambda clause broken");
                }
            }
            _ => {}
        }
    }
    for (s, t) in equal_pairs {
        if term_eq(s, t, fuel) == Verdict::Equal
            && term_eq(&phi.apply(s), &phi.apply(t), fuel) == Verdict::Distinct
        {
            r.violation(
                "equality_preservation",
                vec![print_term(s), print_term(t)],
                "translation breaks a term equality",
            );
        }
    }
    let _ = l1;
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> TypeExpr {
        TypeExpr::base("A")
    }
    fn b() -> TypeExpr {
        TypeExpr::base("B")
    }

    #[test]
    fn typing_clauses() {
        assert_eq!(typecheck(&TermExpr::Star), Ok(TypeExpr::Top));
        let x = Var::new(a(), 1);
        let id = TermExpr::lam(x.clone(), TermExpr::Var(x));
        assert_eq!(typecheck(&id), Ok(TypeExpr::turn(a(), a())));
        let c = TermExpr::Const("c".into(), TypeExpr::and(a(), b()));
        assert_eq!(
            typecheck(&TermExpr::pair(TermExpr::p1(c.clone()), TermExpr::p2(c))),
            Ok(TypeExpr::and(a(), b()))
        );
        // name A has type src A |- tgt A
        assert_eq!(typecheck(&TermExpr::Name(a())), Ok(TypeExpr::turn(a(), a())));
        // application of a non-arrow head fails
        let bad = TermExpr::app(TermExpr::Star, TermExpr::Star);
        assert!(typecheck(&bad).is_err());
    }

    #[test]
    fn beta_and_projections() {
        let x = Var::new(a(), 1);
        let k = TermExpr::Const("k".into(), a());
        let t = TermExpr::app(TermExpr::lam(x.clone(), TermExpr::Var(x)), k.clone());
        let (n, _) = normalize(&t, 100);
        assert_eq!(n, k);
        let c = TermExpr::Const("c".into(), TypeExpr::and(a(), b()));
        let sp = TermExpr::pair(TermExpr::p1(c.clone()), TermExpr::p2(c.clone()));
        let (n, _) = normalize(&sp, 100);
        assert_eq!(n, c);
    }

    #[test]
    fn terminal_collapse() {
        // any closed term of type top normalizes to star
        let f = TermExpr::Const("f".into(), TypeExpr::turn(a(), TypeExpr::Top));
        let k = TermExpr::Const("k".into(), a());
        let t = TermExpr::app(f, k);
        let (n, _) = normalize(&t, 100);
        assert_eq!(n, TermExpr::Star);
    }

    #[test]
    fn substitution_classical_capture() {
        // (lam x1:A. x1 @? ...) capture case: s = lam y. pair(x, y) with
        // t containing y free: binder must be renamed
        let x = Var::new(a(), 1);
        let y = Var::new(a(), 2);
        let s = TermExpr::lam(y.clone(), TermExpr::pair(TermExpr::Var(x.clone()), TermExpr::Var(y.clone())));
        let t = TermExpr::Var(y.clone());
        let r = substitute(&s, &x, &t);
        // result must be alpha-equal to lam y'. pair(y, y') with y free
        if let TermExpr::Lam(binder, body) = &r {
            assert_ne!(*binder, y, "binder must be renamed to avoid capture");
            assert_eq!(
                **body,
                TermExpr::pair(TermExpr::Var(y.clone()), TermExpr::Var(binder.clone()))
            );
        } else {
            panic!("expected a lambda");
        }
        // bound occurrences untouched
        let idx = TermExpr::lam(x.clone(), TermExpr::Var(x.clone()));
        assert_eq!(substitute(&idx, &x, &t), idx);
        // substitute(x, x, t) = t
        assert_eq!(substitute(&TermExpr::Var(x.clone()), &x, &t), t);
    }

    #[test]
    fn eta_rule() {
        let f = TermExpr::Const("f".into(), TypeExpr::turn(a(), b()));
        let x = Var::new(a(), 1);
        let t = TermExpr::lam(x.clone(), TermExpr::app(f.clone(), TermExpr::Var(x)));
        let (n, _) = normalize(&t, 100);
        assert_eq!(n, f);
    }

    #[test]
    fn alpha_equality() {
        let x = Var::new(a(), 1);
        let y = Var::new(a(), 5);
        let t1 = TermExpr::lam(x.clone(), TermExpr::Var(x));
        let t2 = TermExpr::lam(y.clone(), TermExpr::Var(y));
        assert_eq!(term_eq(&t1, &t2, 100), Verdict::Equal);
    }

    #[test]
    fn subject_reduction_and_idempotence() {
        let x = Var::new(a(), 1);
        let k = TermExpr::Const("k".into(), a());
        let t = TermExpr::app(
            TermExpr::lam(x.clone(), TermExpr::pair(TermExpr::Var(x.clone()), TermExpr::Var(x))),
            k,
        );
        let ty = typecheck(&t).unwrap();
        let (n, _) = normalize(&t, 100);
        assert!(typecheck(&n).unwrap().equal(&ty));
        let (n2, _) = normalize(&n, 100);
        assert_eq!(n, n2);
    }

    #[test]
    fn calculus_decl_roundtrip() {
        let l = LambdaCalc::new("demo")
            .with_base("A")
            .with_base("B")
            .with_const("k", a())
            .with_const("f", TypeExpr::turn(a(), b()));
        let text = l.to_decls();
        let l2 = LambdaCalc::from_decls("demo", &text).unwrap();
        assert_eq!(l, l2);
    }

    #[test]
    fn identity_translation_passes() {
        let l = LambdaCalc::new("demo").with_base("A").with_const("k", a());
        let phi = Translation::identity(&l);
        let k = TermExpr::Const("k".into(), a());
        let terms = vec![k.clone(), TermExpr::pair(k.clone(), k.clone())];
        let r = check_translation(&phi, &l, &l, &terms, &[], 100);
        assert!(r.passed(), "{:?}", r.entries);
    }
}
