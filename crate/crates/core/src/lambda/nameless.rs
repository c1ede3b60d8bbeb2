//! Nameless (de Bruijn) view of terms: an independent reference for the
//! named substitution. Used by the test suites as an oracle; nothing in the
//! implementation path depends on it.

use super::{TermExpr, TypeExpr, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nameless {
    Star,
    Bound(u32),
    Free(Var),
    Name(TypeExpr),
    Const(String, TypeExpr),
    Proj1(Box<Nameless>),
    Proj2(Box<Nameless>),
    Pair(Box<Nameless>, Box<Nameless>),
    App(Box<Nameless>, Box<Nameless>),
    Lam(TypeExpr, Box<Nameless>),
}

pub fn to_nameless(t: &TermExpr) -> Nameless {
    fn go(t: &TermExpr, env: &mut Vec<Var>) -> Nameless {
        match t {
            TermExpr::Star => Nameless::Star,
            TermExpr::Var(v) => {
                for (i, b) in env.iter().rev().enumerate() {
                    if b == v {
                        return Nameless::Bound(i as u32);
                    }
                }
                Nameless::Free(v.clone())
            }
            TermExpr::Name(a) => Nameless::Name(a.clone()),
            TermExpr::Const(n, a) => Nameless::Const(n.clone(), a.clone()),
            TermExpr::Proj1(s) => Nameless::Proj1(Box::new(go(s, env))),
            TermExpr::Proj2(s) => Nameless::Proj2(Box::new(go(s, env))),
            TermExpr::Pair(a, b) => {
                Nameless::Pair(Box::new(go(a, env)), Box::new(go(b, env)))
            }
            TermExpr::App(a, b) => Nameless::App(Box::new(go(a, env)), Box::new(go(b, env))),
            TermExpr::Lam(x, s) => {
                env.push(x.clone());
                let body = go(s, env);
                env.pop();
                Nameless::Lam(x.ty.clone(), Box::new(body))
            }
        }
    }
    go(t, &mut Vec::new())
}

fn shift(t: &Nameless, by: u32, cutoff: u32) -> Nameless {
    match t {
        Nameless::Star | Nameless::Free(_) | Nameless::Name(_) | Nameless::Const(_, _) => t.clone(),
        Nameless::Bound(i) => {
            if *i >= cutoff {
                Nameless::Bound(i + by)
            } else {
                t.clone()
            }
        }
        Nameless::Proj1(s) => Nameless::Proj1(Box::new(shift(s, by, cutoff))),
        Nameless::Proj2(s) => Nameless::Proj2(Box::new(shift(s, by, cutoff))),
        Nameless::Pair(a, b) => {
            Nameless::Pair(Box::new(shift(a, by, cutoff)), Box::new(shift(b, by, cutoff)))
        }
        Nameless::App(a, b) => {
            Nameless::App(Box::new(shift(a, by, cutoff)), Box::new(shift(b, by, cutoff)))
        }
        Nameless::Lam(ty, s) => Nameless::Lam(ty.clone(), Box::new(shift(s, by, cutoff + 1))),
    }
}

/// Substitute the free named variable x by u.
pub fn subst_free(t: &Nameless, x: &Var, u: &Nameless) -> Nameless {
    fn go(t: &Nameless, x: &Var, u: &Nameless, depth: u32) -> Nameless {
        match t {
            Nameless::Free(v) if v == x => shift(u, depth, 0),
            Nameless::Star
            | Nameless::Free(_)
            | Nameless::Bound(_)
            | Nameless::Name(_)
            | Nameless::Const(_, _) => t.clone(),
            Nameless::Proj1(s) => Nameless::Proj1(Box::new(go(s, x, u, depth))),
            Nameless::Proj2(s) => Nameless::Proj2(Box::new(go(s, x, u, depth))),
            Nameless::Pair(a, b) => {
                Nameless::Pair(Box::new(go(a, x, u, depth)), Box::new(go(b, x, u, depth)))
            }
            Nameless::App(a, b) => {
                Nameless::App(Box::new(go(a, x, u, depth)), Box::new(go(b, x, u, depth)))
            }
            Nameless::Lam(ty, s) => Nameless::Lam(ty.clone(), Box::new(go(s, x, u, depth + 1))),
        }
    }
    go(t, x, u, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{substitute, TermExpr, TypeExpr, Var};

    #[test]
    fn substitution_agrees_on_capture_case() {
        let a = TypeExpr::base("A");
        let x = Var::new(a.clone(), 1);
        let y = Var::new(a.clone(), 2);
        let s = TermExpr::lam(
            y.clone(),
            TermExpr::pair(TermExpr::Var(x.clone()), TermExpr::Var(y.clone())),
        );
        let t = TermExpr::Var(y.clone());
        let named = substitute(&s, &x, &t);
        let oracle = subst_free(&to_nameless(&s), &x, &to_nameless(&t));
        assert_eq!(to_nameless(&named), oracle);
    }
}
