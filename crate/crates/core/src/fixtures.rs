//! Shared presentation fixtures used across tests, the acceptance suite,
//! and the shipped fixture files.

use crate::functor::{FunctorMap, NatTrans, Variance};
use crate::gencat::{gencat, El, GenCat};
use crate::monad::Monad;
use std::collections::BTreeMap;

/// The trivial generalized category {a: a -> a}.
pub fn trivial() -> GenCat {
    gencat("trivial", &[("a", "a", "a")], &[], &[(("a", "a"), "a")])
}

/// {a: a -> a, b: a -> b}: the simplest generalized category that is not a
/// one-category.
pub fn arrow_gc() -> GenCat {
    gencat(
        "arrow-gc",
        &[("a", "a", "a"), ("b", "a", "b")],
        &[],
        &[(("a", "a"), "a"), (("b", "a"), "b")],
    )
}

/// {a: b -> b, b: a -> a}: objectless; each element is the other's identity.
pub fn loop_pair() -> GenCat {
    gencat(
        "loop-pair",
        &[("a", "b", "b"), ("b", "a", "a")],
        &[],
        &[(("a", "a"), "a"), (("b", "b"), "b")],
    )
}

pub fn discrete(n: usize) -> GenCat {
    let names: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
    let elems: Vec<(&str, &str, &str)> =
        names.iter().map(|n| (n.as_str(), n.as_str(), n.as_str())).collect();
    let comp: Vec<((&str, &str), &str)> =
        names.iter().map(|n| ((n.as_str(), n.as_str()), n.as_str())).collect();
    gencat("discrete", &elems, &[], &comp)
}

/// Two objects and one arrow: the walking arrow, as a one-category.
pub fn chain2() -> GenCat {
    gencat(
        "chain2",
        &[("X", "X", "X"), ("Y", "Y", "Y"), ("u", "X", "Y")],
        &[],
        &[(("X", "X"), "X"), (("Y", "Y"), "Y"), (("u", "X"), "u"), (("Y", "u"), "u")],
    )
}

/// Three-chain poset category 0 < 1 < 2.
pub fn chain3() -> GenCat {
    gencat(
        "chain3",
        &[
            ("0", "0", "0"),
            ("1", "1", "1"),
            ("2", "2", "2"),
            ("u01", "0", "1"),
            ("u12", "1", "2"),
            ("u02", "0", "2"),
        ],
        &[],
        &[
            (("0", "0"), "0"),
            (("1", "1"), "1"),
            (("2", "2"), "2"),
            (("u01", "0"), "u01"),
            (("1", "u01"), "u01"),
            (("u12", "1"), "u12"),
            (("2", "u12"), "u12"),
            (("u02", "0"), "u02"),
            (("2", "u02"), "u02"),
            (("u12", "u01"), "u02"),
        ],
    )
}

/// Poset diamond 0 < a, b < 1 as a thin category.
pub fn diamond() -> GenCat {
    let names = ["0", "a", "b", "1"];
    let leq = |x: &str, y: &str| x == y || x == "0" || y == "1";
    let mut elems: Vec<(String, String, String)> = Vec::new();
    for &n in &names {
        elems.push((n.to_string(), n.to_string(), n.to_string()));
    }
    let mut arrows = Vec::new();
    for &x in &names {
        for &y in &names {
            if x != y && leq(x, y) {
                arrows.push((format!("{x}_{y}"), x.to_string(), y.to_string()));
                elems.push((format!("{x}_{y}"), x.to_string(), y.to_string()));
            }
        }
    }
    let mut comp: Vec<((String, String), String)> = Vec::new();
    for &n in &names {
        comp.push(((n.to_string(), n.to_string()), n.to_string()));
    }
    for (a, s, t) in &arrows {
        comp.push(((a.clone(), s.clone()), a.clone()));
        comp.push(((t.clone(), a.clone()), a.clone()));
    }
    for (a1, s1, t1) in &arrows {
        for (a2, s2, _t2) in &arrows {
            if s1 == &arrows.iter().find(|(n, _, _)| n == a2).map(|(_, _, t)| t.clone()).unwrap() {
                let result = format!("{s2}_{t1}");
                if arrows.iter().any(|(n, _, _)| n == &result) {
                    comp.push(((a1.clone(), a2.clone()), result));
                }
            }
        }
        let _ = t1;
    }
    let er: Vec<(&str, &str, &str)> =
        elems.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    let cr: Vec<((&str, &str), &str)> =
        comp.iter().map(|((a, b), c)| ((a.as_str(), b.as_str()), c.as_str())).collect();
    gencat("diamond", &er, &[], &cr)
}

/// Parallel pair of arrows between two objects.
pub fn parallel_pair() -> GenCat {
    gencat(
        "parallel-pair",
        &[("A", "A", "A"), ("B", "B", "B"), ("p", "A", "B"), ("q", "A", "B")],
        &[],
        &[
            (("A", "A"), "A"),
            (("B", "B"), "B"),
            (("p", "A"), "p"),
            (("B", "p"), "p"),
            (("q", "A"), "q"),
            (("B", "q"), "q"),
        ],
    )
}

/// One-object group category on Z2: s . s = e.
pub fn z2() -> GenCat {
    gencat(
        "z2",
        &[("e", "e", "e"), ("s", "e", "e")],
        &[],
        &[(("e", "e"), "e"), (("e", "s"), "s"), (("s", "e"), "s"), (("s", "s"), "e")],
    )
}

/// One-object group category on S3 (dihedral presentation: r^3 = e,
/// s^2 = e, s r = r^2 s).
pub fn s3() -> GenCat {
    // elements: e, r, r2, s, sr, sr2 with x named by its normal form
    let mult = |a: (u8, u8), b: (u8, u8)| -> (u8, u8) {
        // elements are s^i r^j with i in {0,1}, j in {0,1,2}; r s = s r^2
        // (s^i r^j)(s^k r^l) = s^(i+k) r^(j*2^k + l)
        let (i, j) = a;
        let (k, l) = b;
        ((i + k) % 2, ((j * if k == 1 { 2 } else { 1 }) + l) % 3)
    };
    let name = |(i, j): (u8, u8)| -> String {
        match (i, j) {
            (0, 0) => "e".into(),
            (0, 1) => "r".into(),
            (0, 2) => "r2".into(),
            (1, 0) => "s".into(),
            (1, 1) => "sr".into(),
            (1, 2) => "sr2".into(),
            _ => unreachable!(),
        }
    };
    let all: Vec<(u8, u8)> =
        vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)];
    let elems: Vec<(String, String, String)> =
        all.iter().map(|&g| (name(g), "e".to_string(), "e".to_string())).collect();
    let mut elems2: Vec<(String, String, String)> = Vec::new();
    for (n, _, _) in &elems {
        if n == "e" {
            elems2.push(("e".into(), "e".into(), "e".into()));
        } else {
            elems2.push((n.clone(), "e".into(), "e".into()));
        }
    }
    let comp: Vec<((String, String), String)> = all
        .iter()
        .flat_map(|&a| all.iter().map(move |&b| ((name(a), name(b)), name(mult(a, b)))))
        .collect();
    let er: Vec<(&str, &str, &str)> =
        elems2.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    let cr: Vec<((&str, &str), &str)> =
        comp.iter().map(|((a, b), c)| ((a.as_str(), b.as_str()), c.as_str())).collect();
    gencat("s3", &er, &[], &cr)
}

/// Parallel arrows f, g with a connecting 2-cell and an explicit identity
/// on g: a small genuinely two-dimensional fixture.
pub fn two_cell() -> GenCat {
    gencat(
        "two-cell",
        &[
            ("X", "X", "X"),
            ("Y", "Y", "Y"),
            ("f", "X", "Y"),
            ("g", "X", "Y"),
            ("al", "f", "g"),
            ("ig", "g", "g"),
            ("be", "al", "ig"),
        ],
        &[],
        &[
            (("X", "X"), "X"),
            (("Y", "Y"), "Y"),
            (("f", "X"), "f"),
            (("Y", "f"), "f"),
            (("g", "X"), "g"),
            (("Y", "g"), "g"),
            (("ig", "al"), "al"),
            (("ig", "ig"), "ig"),
        ],
    )
}

/// A non-cellular fixture: h points from an object to an arrow.
pub fn noncellular() -> GenCat {
    gencat(
        "noncellular",
        &[("X", "X", "X"), ("Y", "Y", "Y"), ("u", "X", "Y"), ("h", "X", "u")],
        &[],
        &[
            (("X", "X"), "X"),
            (("Y", "Y"), "Y"),
            (("u", "X"), "u"),
            (("Y", "u"), "u"),
            (("h", "X"), "h"),
        ],
    )
}

/// 3-chain with the closure cells c01: u01 -> 1, m: u02 -> u12 and the
/// forced composite d = u12 . c01. Base of the monic-failing closure monad.
pub fn closure3() -> GenCat {
    gencat(
        "closure3",
        &[
            ("0", "0", "0"),
            ("1", "1", "1"),
            ("2", "2", "2"),
            ("u01", "0", "1"),
            ("u12", "1", "2"),
            ("u02", "0", "2"),
            ("c01", "u01", "1"),
            ("m", "u02", "u12"),
            ("d", "u01", "2"),
        ],
        &[],
        &[
            (("0", "0"), "0"),
            (("1", "1"), "1"),
            (("2", "2"), "2"),
            (("u01", "0"), "u01"),
            (("1", "u01"), "u01"),
            (("u12", "1"), "u12"),
            (("2", "u12"), "u12"),
            (("u02", "0"), "u02"),
            (("2", "u02"), "u02"),
            (("u12", "u01"), "u02"),
            (("1", "c01"), "c01"),
            (("u12", "c01"), "d"),
            (("2", "d"), "d"),
        ],
    )
}

/// The involution monad on Z2: T = id, unit and multiplication given by
/// the involution.
pub fn z2_unit_monad(base: &GenCat) -> Monad {
    let e = |n: &str| base.el(n).unwrap();
    let t = FunctorMap::identity(base);
    let mut comp: BTreeMap<El, El> = BTreeMap::new();
    comp.insert(e("e"), e("s"));
    for a in base.represented() {
        if !comp.contains_key(&a) {
            if let Some(i) = base.identity_of(a) {
                comp.insert(a, i);
            }
        }
    }
    let eta = NatTrans { f: FunctorMap::identity(base), g: t.clone(), component: comp.clone() };
    let mu = NatTrans { f: t.after(&t), g: t.clone(), component: comp };
    Monad { t, eta, mu }
}

/// Six-element conjugation category: objects X, Y with involutions t, s
/// and a conjugate pair of arrows u, u2 (s.u = u2 = u.t).
pub fn conj6() -> GenCat {
    gencat(
        "conj6",
        &[
            ("X", "X", "X"),
            ("Y", "Y", "Y"),
            ("t", "X", "X"),
            ("s", "Y", "Y"),
            ("u", "X", "Y"),
            ("u2", "X", "Y"),
        ],
        &[],
        &[
            (("X", "X"), "X"),
            (("Y", "Y"), "Y"),
            (("t", "X"), "t"),
            (("X", "t"), "t"),
            (("t", "t"), "X"),
            (("s", "Y"), "s"),
            (("Y", "s"), "s"),
            (("s", "s"), "Y"),
            (("u", "X"), "u"),
            (("Y", "u"), "u"),
            (("u2", "X"), "u2"),
            (("Y", "u2"), "u2"),
            (("s", "u"), "u2"),
            (("s", "u2"), "u"),
            (("u", "t"), "u2"),
            (("u2", "t"), "u"),
        ],
    )
}

/// Involution monad on conj6: T = id, the unit is t at X and s at Y.
pub fn conj6_involution_monad(base: &GenCat) -> Monad {
    let e = |n: &str| base.el(n).unwrap();
    let t = FunctorMap::identity(base);
    let mut comp: BTreeMap<El, El> = BTreeMap::new();
    comp.insert(e("X"), e("t"));
    comp.insert(e("Y"), e("s"));
    for a in base.represented() {
        if !comp.contains_key(&a) {
            if let Some(i) = base.identity_of(a) {
                comp.insert(a, i);
            }
        }
    }
    let eta = NatTrans { f: FunctorMap::identity(base), g: t.clone(), component: comp.clone() };
    let mu = NatTrans { f: t.after(&t), g: t.clone(), component: comp };
    Monad { t, eta, mu }
}

/// Closure-operator monad on closure3: lawful, but fails the monic
/// condition (the unit at 0 collides with u01).
pub fn closure3_monad(base: &GenCat) -> Monad {
    let e = |n: &str| base.el(n).unwrap();
    let mut tmap: BTreeMap<El, El> = [
        (e("0"), e("1")),
        (e("1"), e("1")),
        (e("2"), e("2")),
        (e("u01"), e("1")),
        (e("u12"), e("u12")),
        (e("u02"), e("u12")),
        (e("c01"), e("1")),
        (e("m"), base.identity_of(e("u12")).unwrap()),
        (e("d"), e("u12")),
    ]
    .into();
    for a in base.represented() {
        if !tmap.contains_key(&a) {
            if let Some(anchor) = base.identity_anchor(a) {
                if anchor != a {
                    if let Some(&ta) = tmap.get(&anchor) {
                        if let Some(i) = base.identity_of(ta) {
                            tmap.insert(a, i);
                        }
                    }
                }
            }
        }
    }
    let t = FunctorMap { variance: Variance::Covariant, map: tmap };
    let mut eta_comp: BTreeMap<El, El> = [
        (e("0"), e("u01")),
        (e("1"), e("1")),
        (e("2"), e("2")),
        (e("u01"), e("c01")),
        (e("u02"), e("m")),
    ]
    .into();
    for a in base.represented() {
        if !eta_comp.contains_key(&a) && t.apply(a) == Some(a) {
            if let Some(i) = base.identity_of(a) {
                eta_comp.insert(a, i);
            }
        }
    }
    let eta = NatTrans { f: FunctorMap::identity(base), g: t.clone(), component: eta_comp };
    let mut mu_comp = BTreeMap::new();
    for a in base.represented() {
        if let Some(ta) = t.apply(a) {
            if let Some(i) = base.identity_of(ta) {
                mu_comp.insert(a, i);
            }
        }
    }
    let mu = NatTrans { f: t.after(&t), g: t.clone(), component: mu_comp };
    Monad { t, eta, mu }
}
