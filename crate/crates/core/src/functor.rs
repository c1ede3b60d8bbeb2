//! Functors, morphisms of functors, natural transformations, adjunctions,
//! and the strict 2-category operations.
//!
//! A natural transformation is stored by its component map: for each
//! represented element `a` of the domain, the component at `a` is the value
//! of the underlying single map on the identity of `a`.

use crate::gencat::{category_of_invertibles, classify, El, GenCat};
use crate::report::Report;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// An element map between presentations, with law-checking metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorMap {
    pub variance: Variance,
    pub map: BTreeMap<El, El>,
}

impl FunctorMap {
    pub fn identity(g: &GenCat) -> FunctorMap {
        FunctorMap {
            variance: Variance::Covariant,
            map: g.represented().into_iter().map(|e| (e, e)).collect(),
        }
    }

    pub fn from_names(dom: &GenCat, cod: &GenCat, pairs: &[(&str, &str)]) -> FunctorMap {
        let mut map = BTreeMap::new();
        for &(a, b) in pairs {
            map.insert(
                dom.el(a).unwrap_or_else(|| panic!("unknown element {a}")),
                cod.el(b).unwrap_or_else(|| panic!("unknown element {b}")),
            );
        }
        let mut f = FunctorMap { variance: Variance::Covariant, map };
        f.extend_to_tags(dom, cod);
        f
    }

    /// Extend the stored map over identity tags: F(1_a) := 1_{F(a)}.
    pub fn extend_to_tags(&mut self, dom: &GenCat, cod: &GenCat) {
        let mut changed = true;
        while changed {
            changed = false;
            for e in dom.represented() {
                if self.map.contains_key(&e) {
                    continue;
                }
                if let Some(anchor) = dom.identity_anchor(e) {
                    if anchor != e {
                        if let Some(&fa) = self.map.get(&anchor) {
                            if let Some(i) = cod.identity_of(fa) {
                                self.map.insert(e, i);
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn apply(&self, e: El) -> Option<El> {
        self.map.get(&e).copied()
    }

    /// Compose two functors (`self` after `inner`).
    pub fn after(&self, inner: &FunctorMap) -> FunctorMap {
        let variance = if self.variance == inner.variance {
            Variance::Covariant
        } else {
            Variance::Contravariant
        };
        let map = inner
            .map
            .iter()
            .filter_map(|(&e, &m)| self.apply(m).map(|v| (e, v)))
            .collect();
        FunctorMap { variance, map }
    }
}

/// Verify order preservation, endpoint commutation, composition, and unit
/// preservation, exhaustively over the represented domain.
pub fn check_functor(f: &FunctorMap, dom: &GenCat, cod: &GenCat) -> Report {
    let mut r = Report::new("functor");
    let rep = dom.represented();
    let contra = f.variance == Variance::Contravariant;
    for &a in &rep {
        let Some(fa) = f.apply(a) else {
            if dom.is_identity(a) {
                r.note(
                    "truncation_boundary",
                    vec![dom.el_name(a)],
                    "image of an identity tag beyond the represented fragment",
                );
            } else {
                r.violation("totality", vec![dom.el_name(a)], "map not defined on element");
            }
            continue;
        };
        let (want_src, want_tgt) = if contra {
            (f.apply(dom.tgt(a)), f.apply(dom.src(a)))
        } else {
            (f.apply(dom.src(a)), f.apply(dom.tgt(a)))
        };
        if (want_src.is_none() && dom.is_identity(dom.src(a)))
            || (want_tgt.is_none() && dom.is_identity(dom.tgt(a)))
        {
            continue;
        }
        if want_src != Some(cod.src(fa)) || want_tgt != Some(cod.tgt(fa)) {
            r.violation(
                "src_tgt",
                vec![dom.el_name(a)],
                "image endpoints do not commute with the map",
            );
        }
    }
    for &a in &rep {
        for &b in &rep {
            if a != b && dom.leq(a, b) {
                if let (Some(fa), Some(fb)) = (f.apply(a), f.apply(b)) {
                    let ok = if contra { cod.leq(fb, fa) } else { cod.leq(fa, fb) };
                    if !ok {
                        r.violation(
                            "order",
                            vec![dom.el_name(a), dom.el_name(b)],
                            "order not preserved",
                        );
                    }
                }
            }
            if let Some(ab) = dom.compose(a, b) {
                // truncated tag images are out of the fragment
                let truncated = [a, b, ab]
                    .iter()
                    .any(|&x| f.apply(x).is_none() && dom.is_identity(x));
                if truncated {
                    continue;
                }
                let lhs = f.apply(ab);
                let rhs = if contra {
                    match (f.apply(b), f.apply(a)) {
                        (Some(fb), Some(fa)) => cod.compose(fb, fa),
                        _ => None,
                    }
                } else {
                    match (f.apply(a), f.apply(b)) {
                        (Some(fa), Some(fb)) => cod.compose(fa, fb),
                        _ => None,
                    }
                };
                if lhs.is_none() || lhs != rhs {
                    r.violation(
                        "composition",
                        vec![dom.el_name(a), dom.el_name(b)],
                        "F(ab) != F(a)F(b)",
                    );
                }
            }
        }
    }
    for &a in &rep {
        if let (Some(ia), Some(fa)) = (dom.identity_of(a), f.apply(a)) {
            let lhs = f.apply(ia);
            let rhs = cod.identity_of(fa);
            if lhs.is_some() && rhs.is_some() && lhs != rhs {
                r.violation("units", vec![dom.el_name(a)], "F(1_a) != 1_{F(a)}");
            }
        }
        if dom.is_identity(a) {
            if let Some(fa) = f.apply(a) {
                if !cod.is_identity(fa) {
                    r.violation(
                        "units",
                        vec![dom.el_name(a), cod.el_name(fa)],
                        "identity mapped to a non-identity",
                    );
                }
            }
        }
    }
    r
}

/// A morphism of functors: a pair of maps with the defining relation.
#[derive(Debug, Clone)]
pub struct MorphismOfFunctors {
    pub f: FunctorMap,
    pub g: FunctorMap,
    pub theta1: BTreeMap<El, El>,
    pub theta2: BTreeMap<El, El>,
}

/// theta1(a) F(a) = G(a) theta2(a), defined, for every a.
pub fn check_mof(m: &MorphismOfFunctors, dom: &GenCat, cod: &GenCat) -> Report {
    let mut r = Report::new("mof");
    for a in dom.represented() {
        let (t1, t2) = (m.theta1.get(&a), m.theta2.get(&a));
        let (fa, ga) = (m.f.apply(a), m.g.apply(a));
        let (Some(&t1), Some(&t2), Some(fa), Some(ga)) = (t1, t2, fa, ga) else {
            r.violation("totality", vec![dom.el_name(a)], "maps not defined on element");
            continue;
        };
        let lhs = cod.compose(t1, fa);
        let rhs = cod.compose(ga, t2);
        if lhs.is_none() || lhs != rhs {
            r.violation(
                "mof_equation",
                vec![dom.el_name(a)],
                "theta1(a)F(a) and G(a)theta2(a) undefined or unequal",
            );
        }
    }
    r
}

/// Naturality for a morphism of functors: theta1 factors through targets,
/// theta2 through sources.
pub fn check_mof_natural(m: &MorphismOfFunctors, dom: &GenCat, cod: &GenCat) -> Report {
    let mut r = check_mof(m, dom, cod);
    let rep = dom.represented();
    for &a in &rep {
        for &b in &rep {
            if dom.tgt(a) == dom.tgt(b) && m.theta1.get(&a) != m.theta1.get(&b) {
                r.violation(
                    "naturality",
                    vec![dom.el_name(a), dom.el_name(b)],
                    "theta1 differs on elements with equal targets",
                );
            }
            if dom.src(a) == dom.src(b) && m.theta2.get(&a) != m.theta2.get(&b) {
                r.violation(
                    "naturality",
                    vec![dom.el_name(a), dom.el_name(b)],
                    "theta2 differs on elements with equal sources",
                );
            }
        }
    }
    r
}

/// A natural transformation between functors dom -> cod, stored as a
/// component for every represented element of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub f: FunctorMap,
    pub g: FunctorMap,
    pub component: BTreeMap<El, El>,
}

impl NatTrans {
    /// The identity transformation 1_F.
    pub fn identity(f: &FunctorMap, dom: &GenCat, cod: &GenCat) -> NatTrans {
        let mut component = BTreeMap::new();
        for a in dom.represented() {
            if let Some(fa) = f.apply(a) {
                if let Some(i) = cod.identity_of(fa) {
                    component.insert(a, i);
                }
            }
        }
        NatTrans { f: f.clone(), g: f.clone(), component }
    }

    pub fn at(&self, a: El) -> Option<El> {
        self.component.get(&a).copied()
    }

    /// Derived morphism-of-functors maps: theta1(a) = component at tgt(a),
    /// theta2(a) = component at src(a).
    pub fn as_mof(&self, dom: &GenCat) -> MorphismOfFunctors {
        let mut theta1 = BTreeMap::new();
        let mut theta2 = BTreeMap::new();
        for a in dom.represented() {
            if let Some(c) = self.at(dom.tgt(a)) {
                theta1.insert(a, c);
            }
            if let Some(c) = self.at(dom.src(a)) {
                theta2.insert(a, c);
            }
        }
        MorphismOfFunctors { f: self.f.clone(), g: self.g.clone(), theta1, theta2 }
    }
}

/// Naturality: component(tgt f) . F(f) = G(f) . component(src f), defined,
/// for every represented f.
pub fn check_natural(t: &NatTrans, dom: &GenCat, cod: &GenCat) -> Report {
    let mut r = Report::new("nattrans");
    for a in dom.represented() {
        // data beyond the represented fragment: violations only at
        // non-identity elements, notes at tag level
        let have_all = t.at(dom.tgt(a)).is_some()
            && t.at(dom.src(a)).is_some()
            && t.f.apply(a).is_some()
            && t.g.apply(a).is_some();
        if !have_all && dom.is_identity(a) {
            r.note(
                "truncation_boundary",
                vec![dom.el_name(a)],
                "component beyond the represented fragment",
            );
            continue;
        }
        let lhs = match (t.at(dom.tgt(a)), t.f.apply(a)) {
            (Some(c), Some(fa)) => cod.compose(c, fa),
            _ => None,
        };
        let rhs = match (t.g.apply(a), t.at(dom.src(a))) {
            (Some(ga), Some(c)) => cod.compose(ga, c),
            _ => None,
        };
        if lhs.is_none() || lhs != rhs {
            r.violation(
                "naturality_square",
                vec![dom.el_name(a)],
                "component(tgt a) F(a) and G(a) component(src a) undefined or unequal",
            );
        }
    }
    r
}

/// Vertical composition: (b . a)(x) = b(x) a(x), componentwise.
pub fn vert_compose(b: &NatTrans, a: &NatTrans, cod: &GenCat) -> Result<NatTrans, String> {
    let mut component = BTreeMap::new();
    for (&x, &ax) in &a.component {
        let Some(&bx) = b.component.get(&x) else {
            return Err("missing component in vertical composition".to_string());
        };
        let Some(c) = cod.compose(bx, ax) else {
            return Err("vertical composite undefined".to_string());
        };
        component.insert(x, c);
    }
    Ok(NatTrans { f: a.f.clone(), g: b.g.clone(), component })
}

/// Horizontal composition `outer * inner` between transformations
/// inner: F' => G' (C -> D) and outer: F => G (D -> E):
/// component at a is outer(G'(a)) . F(inner(a)).
pub fn horiz_compose(
    outer: &NatTrans,
    inner: &NatTrans,
    cod: &GenCat,
) -> Result<NatTrans, String> {
    let mut component = BTreeMap::new();
    for (&a, &ia) in &inner.component {
        let gpa = inner.g.apply(a).ok_or("inner target functor undefined")?;
        let oc = outer.at(gpa).ok_or("outer component missing")?;
        let fia = outer.f.apply(ia).ok_or("outer source functor undefined on component")?;
        let c = cod.compose(oc, fia).ok_or("horizontal composite undefined")?;
        component.insert(a, c);
    }
    Ok(NatTrans { f: outer.f.after(&inner.f), g: outer.g.after(&inner.g), component })
}

/// Alternative form of the horizontal composite: G(inner(a)) . outer(F'(a)).
pub fn horiz_compose_alt(
    outer: &NatTrans,
    inner: &NatTrans,
    cod: &GenCat,
) -> Result<NatTrans, String> {
    let mut component = BTreeMap::new();
    for (&a, &ia) in &inner.component {
        let fpa = inner.f.apply(a).ok_or("inner source functor undefined")?;
        let oc = outer.at(fpa).ok_or("outer component missing")?;
        let gia = outer.g.apply(ia).ok_or("outer target functor undefined on component")?;
        let c = cod.compose(gia, oc).ok_or("horizontal composite (alt) undefined")?;
        component.insert(a, c);
    }
    Ok(NatTrans { f: outer.f.after(&inner.f), g: outer.g.after(&inner.g), component })
}

/// An adjunction F -| G with unit and counit.
#[derive(Debug, Clone)]
pub struct Adjunction {
    /// F: C -> D.
    pub f: FunctorMap,
    /// G: D -> C.
    pub g: FunctorMap,
    /// unit: id_C => G . F, components indexed by C.
    pub unit: NatTrans,
    /// counit: F . G => id_D, components indexed by D.
    pub counit: NatTrans,
}

impl Adjunction {
    pub fn identity(c: &GenCat) -> Adjunction {
        let idf = FunctorMap::identity(c);
        let unit = NatTrans::identity(&idf, c, c);
        Adjunction { f: idf.clone(), g: idf, unit: unit.clone(), counit: unit }
    }
}

/// Triangle identities, element-wise.
pub fn check_adjunction(adj: &Adjunction, c: &GenCat, d: &GenCat) -> Report {
    let mut r = Report::new("adjunction");
    r.absorb("F", check_functor(&adj.f, c, d));
    r.absorb("G", check_functor(&adj.g, d, c));
    r.absorb("unit", check_natural(&adj.unit, c, c));
    r.absorb("counit", check_natural(&adj.counit, d, d));
    for x in c.represented() {
        let lhs = (|| {
            let fx = adj.f.apply(x)?;
            let e = adj.counit.at(fx)?;
            let fu = adj.f.apply(adj.unit.at(x)?)?;
            d.compose(e, fu)
        })();
        let want = adj.f.apply(x).and_then(|fx| d.identity_of(fx));
        if lhs.is_none() && c.is_identity(x) {
            r.note("truncation_boundary", vec![c.el_name(x)], "triangle data beyond the fragment");
            continue;
        }
        if want.is_some() && (lhs.is_none() || lhs != want) {
            r.violation("triangle_F", vec![c.el_name(x)], "counit_{F x} . F(unit_x) != 1_{F x}");
        }
    }
    for y in d.represented() {
        let lhs = (|| {
            let gy = adj.g.apply(y)?;
            let ge = adj.g.apply(adj.counit.at(y)?)?;
            let u = adj.unit.at(gy)?;
            c.compose(ge, u)
        })();
        let want = adj.g.apply(y).and_then(|gy| c.identity_of(gy));
        if lhs.is_none() && d.is_identity(y) {
            r.note("truncation_boundary", vec![d.el_name(y)], "triangle data beyond the fragment");
            continue;
        }
        if want.is_some() && (lhs.is_none() || lhs != want) {
            r.violation("triangle_G", vec![d.el_name(y)], "G(counit_y) . unit_{G y} != 1_{G y}");
        }
    }
    r
}

/// The adjunction bijection phi: hom(F f, g) -> hom(f, G g),
/// u |-> G(u) . unit_f, tabulated with bijectivity verified.
pub fn hom_bijection(
    adj: &Adjunction,
    c: &GenCat,
    d: &GenCat,
    f: El,
    g: El,
) -> Result<Vec<(El, El)>, Report> {
    let mut r = Report::new("hom_bijection");
    let ff = adj.f.apply(f).expect("F defined on f");
    let lhs_hom = d.hom(ff, g);
    let gg = adj.g.apply(g).expect("G defined on g");
    let rhs_hom = c.hom(f, gg);
    let phi = |u: El| -> Option<El> {
        let gu = adj.g.apply(u)?;
        c.compose(gu, adj.unit.at(f)?)
    };
    let mut table = Vec::new();
    for &u in &lhs_hom {
        match phi(u) {
            Some(v) if rhs_hom.contains(&v) => table.push((u, v)),
            _ => r.violation(
                "phi_total",
                vec![d.el_name(u)],
                "phi undefined or lands outside hom(f, G g)",
            ),
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(_, v) in &table {
        if !seen.insert(v) {
            r.violation("phi_injective", vec![c.el_name(v)], "phi not injective");
        }
    }
    if table.len() != rhs_hom.len() {
        r.violation(
            "phi_surjective",
            vec![],
            format!("|hom(F f, g)| = {} vs |hom(f, G g)| = {}", table.len(), rhs_hom.len()),
        );
    }
    if r.passed() {
        Ok(table)
    } else {
        Err(r)
    }
}

/// Both naturality equations of the hom bijection, quantified over all
/// composable configurations in the finite carriers.
pub fn check_hom_bijection_natural(adj: &Adjunction, c: &GenCat, d: &GenCat) -> Report {
    let mut r = Report::new("hom_bijection_natural");
    let phi = |f: El, u: El| -> Option<El> {
        let gu = adj.g.apply(u)?;
        c.compose(gu, adj.unit.at(f)?)
    };
    let crep = c.represented();
    let drep = d.represented();
    for &f in &crep {
        let Some(ff) = adj.f.apply(f) else { continue };
        // phi(u . F(v)) = phi(u) . v whenever u . F(v) : F f -> g
        for &v in &crep {
            if c.src(v) != f {
                continue;
            }
            let Some(fv) = adj.f.apply(v) else { continue };
            for &u in &drep {
                let Some(ufv) = d.compose(u, fv) else { continue };
                if d.src(ufv) != ff {
                    continue;
                }
                let lhs = phi(f, ufv);
                let rhs = match phi(c.tgt(v), u) {
                    Some(pu) => c.compose(pu, v),
                    None => None,
                };
                if lhs.is_none() || lhs != rhs {
                    r.violation(
                        "natural_in_f",
                        vec![d.el_name(u), c.el_name(v)],
                        "phi(u . F v) != phi(u) . v",
                    );
                }
            }
        }
        // phi(v' . v) = G(v') . phi(v) whenever v' . v : F f -> g
        for &u in &drep {
            if d.src(u) != ff {
                continue;
            }
            for &vp in &drep {
                let Some(vpv) = d.compose(vp, u) else { continue };
                let lhs = phi(f, vpv);
                let rhs = (|| {
                    let gv = adj.g.apply(vp)?;
                    c.compose(gv, phi(f, u)?)
                })();
                if lhs.is_none() || lhs != rhs {
                    r.violation(
                        "natural_in_g",
                        vec![d.el_name(vp), d.el_name(u)],
                        "phi(v' . v) != G(v') . phi(v)",
                    );
                }
            }
        }
    }
    r
}

pub fn is_faithful(f: &FunctorMap, dom: &GenCat, _cod: &GenCat) -> bool {
    let rep = dom.represented();
    for &a in &rep {
        for &b in &rep {
            if a != b
                && dom.src(a) == dom.src(b)
                && dom.tgt(a) == dom.tgt(b)
                && f.apply(a) == f.apply(b)
            {
                return false;
            }
        }
    }
    true
}

pub fn is_full(f: &FunctorMap, dom: &GenCat, cod: &GenCat) -> bool {
    let rep = dom.represented();
    for &a in &rep {
        for &b in &rep {
            let (Some(fa), Some(fb)) = (f.apply(a), f.apply(b)) else { return false };
            for gamma in cod.hom(fa, fb) {
                let hit = dom.hom(a, b).into_iter().any(|c| f.apply(c) == Some(gamma));
                if !hit {
                    return false;
                }
            }
        }
    }
    true
}

pub fn essentially_surjective(f: &FunctorMap, dom: &GenCat, cod: &GenCat) -> bool {
    let cls = classify(cod);
    for class in &cls.iso_classes {
        let hit = dom
            .represented()
            .iter()
            .any(|&a| f.apply(a).map_or(false, |fa| class.contains(&fa)));
        if !hit {
            return false;
        }
    }
    true
}

pub fn essentially_injective(f: &FunctorMap, dom: &GenCat, _cod: &GenCat) -> bool {
    let cls = classify(dom);
    let class_of = |e: El| cls.iso_classes.iter().position(|c| c.contains(&e));
    for a in dom.explicit() {
        for b in dom.explicit() {
            if f.apply(a) == f.apply(b) && class_of(a) != class_of(b) {
                return false;
            }
        }
    }
    true
}

/// Equivalence by the full/faithful/essentially-surjective criterion, then
/// confirmed on the categories of invertibles.
pub fn check_equivalence(f: &FunctorMap, dom: &GenCat, cod: &GenCat) -> Report {
    let mut r = Report::new("equivalence");
    r.absorb("functor", check_functor(f, dom, cod));
    if !is_full(f, dom, cod) {
        r.violation("full", vec![], "functor is not full");
    }
    if !is_faithful(f, dom, cod) {
        r.violation("faithful", vec![], "functor is not faithful");
    }
    if !essentially_surjective(f, dom, cod) {
        let cls = classify(cod);
        let witness = cls
            .iso_classes
            .iter()
            .find(|class| {
                !dom.represented()
                    .iter()
                    .any(|&a| f.apply(a).map_or(false, |fa| class.contains(&fa)))
            })
            .map(|class| cod.el_name(class[0]))
            .unwrap_or_default();
        r.violation("essentially_surjective", vec![witness], "iso class not hit");
    }
    if r.passed() {
        let ci_dom = category_of_invertibles(dom);
        let ci_cod = category_of_invertibles(cod);
        if ci_dom.len_explicit() != ci_cod.len_explicit() {
            r.violation(
                "invertibles_iso",
                vec![],
                format!(
                    "categories of invertibles have sizes {} and {}",
                    ci_dom.len_explicit(),
                    ci_cod.len_explicit()
                ),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gencat::gencat;

    fn chain2() -> GenCat {
        gencat(
            "chain2",
            &[("X", "X", "X"), ("Y", "Y", "Y"), ("u", "X", "Y")],
            &[],
            &[(("X", "X"), "X"), (("Y", "Y"), "Y"), (("u", "X"), "u"), (("Y", "u"), "u")],
        )
    }

    #[test]
    fn identity_functor_passes() {
        let c = chain2();
        let f = FunctorMap::identity(&c);
        assert!(check_functor(&f, &c, &c).passed());
        assert!(is_full(&f, &c, &c));
        assert!(is_faithful(&f, &c, &c));
        assert!(essentially_surjective(&f, &c, &c));
        assert!(essentially_injective(&f, &c, &c));
        assert!(check_equivalence(&f, &c, &c).passed());
    }

    #[test]
    fn identity_transformation_natural() {
        let c = chain2();
        let f = FunctorMap::identity(&c);
        let t = NatTrans::identity(&f, &c, &c);
        assert!(check_natural(&t, &c, &c).passed());
        let m = t.as_mof(&c);
        assert!(check_mof_natural(&m, &c, &c).passed());
        for a in c.represented() {
            if c.is_identity(a) {
                assert_eq!(m.theta1.get(&a), m.theta2.get(&a));
            }
        }
    }

    #[test]
    fn identity_adjunction_passes() {
        let c = chain2();
        let adj = Adjunction::identity(&c);
        let rep = check_adjunction(&adj, &c, &c);
        assert!(rep.passed(), "{:?}", rep.entries);
        let x = c.el("X").unwrap();
        let table = hom_bijection(&adj, &c, &c, x, x).unwrap();
        assert_eq!(table.len(), c.hom(x, x).len());
        assert!(check_hom_bijection_natural(&adj, &c, &c).passed());
    }

    #[test]
    fn unit_breaking_functor_fails() {
        let c = chain2();
        let mut f = FunctorMap::identity(&c);
        f.map.insert(c.el("X").unwrap(), c.el("u").unwrap());
        let r = check_functor(&f, &c, &c);
        assert!(!r.passed());
    }

    #[test]
    fn vertical_and_horizontal_identities() {
        let c = chain2();
        let idf = FunctorMap::identity(&c);
        let one = NatTrans::identity(&idf, &c, &c);
        let v = vert_compose(&one, &one, &c).unwrap();
        assert_eq!(v.component, one.component);
        let h = horiz_compose(&one, &one, &c).unwrap();
        assert_eq!(h.component, one.component);
        let h2 = horiz_compose_alt(&one, &one, &c).unwrap();
        assert_eq!(h2.component, one.component);
    }
}
