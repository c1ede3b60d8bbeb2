//! Monads, Kleisli triples, and the generalized Kleisli construction.

use crate::functor::{check_adjunction, check_functor, Adjunction, FunctorMap, NatTrans, Variance};
use crate::gencat::{El, ElemDecl, ElemKind, GenCat};
use crate::report::Report;
use std::collections::{BTreeMap, BTreeSet};

/// A monad on a base presentation.
#[derive(Debug, Clone)]
pub struct Monad {
    pub t: FunctorMap,
    pub eta: NatTrans,
    pub mu: NatTrans,
}

impl Monad {
    pub fn identity(base: &GenCat) -> Monad {
        let t = FunctorMap::identity(base);
        let eta = NatTrans::identity(&t, base, base);
        Monad { t: t.clone(), eta: eta.clone(), mu: eta }
    }
}

/// Monad laws, element-wise, plus order preservation of the unit and
/// multiplication components.
pub fn check_monad(m: &Monad, base: &GenCat) -> Report {
    let mut r = Report::new("monad");
    r.absorb("T", check_functor(&m.t, base, base));
    r.absorb("eta", check_natural(&m.eta, base));
    r.absorb("mu", check_natural_t2(&m.mu, &m.t, base));
    let rep = base.represented();
    for &f in &rep {
        let Some(tf) = m.t.apply(f) else { continue };
        let (mu_f, eta_f) = (m.mu.at(f), m.eta.at(f));
        let (Some(mu_f), Some(eta_f)) = (mu_f, eta_f) else { continue };
        // associativity: mu_f . T(mu_f) = mu_f . mu_{T f}
        let lhs = m.t.apply(mu_f).and_then(|tmu| base.compose(mu_f, tmu));
        let rhs = m.mu.at(tf).and_then(|mu_tf| base.compose(mu_f, mu_tf));
        if lhs.is_none() || lhs != rhs {
            r.violation(
                "monad_assoc",
                vec![base.el_name(f)],
                "mu . T(mu) and mu . mu_T disagree",
            );
        }
        // units: mu_f . T(eta_f) = mu_f . eta_{T f} = 1_{T f}
        let one = base.identity_of(tf);
        if one.is_none() {
            continue;
        }
        let u1 = m.t.apply(eta_f).and_then(|te| base.compose(mu_f, te));
        let u2 = m.eta.at(tf).and_then(|e| base.compose(mu_f, e));
        if u1 != one {
            r.violation("monad_unit_left", vec![base.el_name(f)], "mu . T(eta) != 1_T");
        }
        if u2 != one {
            r.violation("monad_unit_right", vec![base.el_name(f)], "mu . eta_T != 1_T");
        }
    }
    // order preservation of components
    for &a in &rep {
        for &b in &rep {
            if a != b && base.leq(a, b) {
                for (name, tr) in [("eta", &m.eta), ("mu", &m.mu)] {
                    if let (Some(x), Some(y)) = (tr.at(a), tr.at(b)) {
                        if !base.leq(x, y) {
                            r.violation(
                                "order_preserving",
                                vec![name.into(), base.el_name(a), base.el_name(b)],
                                "component not monotone",
                            );
                        }
                    }
                }
            }
        }
    }
    r
}

fn check_natural(eta: &NatTrans, base: &GenCat) -> Report {
    crate::functor::check_natural(eta, base, base)
}

/// Naturality of mu as a transformation T^2 => T: its stored source functor
/// must be T after T.
fn check_natural_t2(mu: &NatTrans, t: &FunctorMap, base: &GenCat) -> Report {
    let mut r = crate::functor::check_natural(mu, base, base);
    let t2 = t.after(t);
    for (e, v) in &t2.map {
        if mu.f.apply(*e) != Some(*v) {
            r.violation("mu_shape", vec![base.el_name(*e)], "mu source functor is not T^2");
            break;
        }
    }
    r
}

/// Monic condition: eta(tgt x) . x <= eta(tgt y) . y implies x <= y.
pub fn check_monic_condition(m: &Monad, base: &GenCat) -> Report {
    let mut r = Report::new("monic_condition");
    let rep = base.represented();
    let key = |x: El| -> Option<El> {
        let e = m.eta.at(base.tgt(x))?;
        base.compose(e, x)
    };
    for &x in &rep {
        for &y in &rep {
            let (Some(kx), Some(ky)) = (key(x), key(y)) else { continue };
            if base.leq(kx, ky) && !base.leq(x, y) {
                r.violation(
                    "monic_condition",
                    vec![base.el_name(x), base.el_name(y)],
                    "eta(tgt x) x approximates eta(tgt y) y but x does not approximate y",
                );
            }
        }
    }
    r
}

/// The monad of an adjunction: T = G . F, unit, mu = G(counit at F(-)).
pub fn monad_from_adjunction(adj: &Adjunction, c: &GenCat, d: &GenCat) -> Monad {
    let t = adj.g.after(&adj.f);
    let mut mu_comp = BTreeMap::new();
    for a in c.represented() {
        if let Some(fa) = adj.f.apply(a) {
            if let Some(e) = adj.counit.at(fa) {
                if let Some(ge) = adj.g.apply(e) {
                    mu_comp.insert(a, ge);
                }
            }
        }
    }
    let _ = d;
    Monad {
        t: t.clone(),
        eta: adj.unit.clone(),
        mu: NatTrans { f: t.after(&t), g: t.clone(), component: mu_comp },
    }
}

/// The generalized Kleisli category with its adjunction data.
#[derive(Debug, Clone)]
pub struct KleisliCat {
    /// The full pair category C_T.
    pub cat: GenCat,
    /// The full subcategory generated by the image of F_T.
    pub image_cat: GenCat,
    /// F_T: base -> C_T (element of `cat` per base element).
    pub f_t: BTreeMap<El, El>,
    /// G_T: C_T -> base.
    pub g_t: BTreeMap<El, El>,
    /// Pair decomposition of each element of `cat`.
    pub pairs: BTreeMap<El, (El, El)>,
}

#[derive(Debug, thiserror::Error)]
pub enum KleisliError {
    #[error("monic condition fails on witness pair ({0}, {1})")]
    MonicCondition(String, String),
    #[error("monad laws fail: {0}")]
    BadMonad(String),
}

fn pair_name(base: &GenCat, y: El, f: El) -> String {
    format!("({}|{})", base.el_name(y), base.el_name(f))
}

/// Build C_T from a lawful monad satisfying the monic condition.
pub fn kleisli(m: &Monad, base: &GenCat) -> Result<KleisliCat, KleisliError> {
    let monad_rep = check_monad(m, base);
    if !monad_rep.passed() {
        return Err(KleisliError::BadMonad(
            monad_rep.entries.first().map(|e| e.law.clone()).unwrap_or_default(),
        ));
    }
    let mc = check_monic_condition(m, base);
    if !mc.passed() {
        let w = mc.entries.first().map(|e| e.witnesses.clone()).unwrap_or_default();
        return Err(KleisliError::MonicCondition(
            w.first().cloned().unwrap_or_default(),
            w.get(1).cloned().unwrap_or_default(),
        ));
    }
    let rep = base.represented();
    // candidate pairs: T(y) = tgt(f), with formula data available
    let mut pairs: Vec<(El, El)> = Vec::new();
    for &y in &rep {
        let Some(ty) = m.t.apply(y) else { continue };
        for &f in &rep {
            if base.tgt(f) != ty {
                continue;
            }
            let src_ok = m
                .eta
                .at(base.tgt(base.src(f)))
                .and_then(|e| base.compose(e, base.src(f)))
                .is_some();
            let tgt_ok = m
                .eta
                .at(base.tgt(y))
                .and_then(|e| base.compose(e, y))
                .is_some();
            if src_ok && tgt_ok {
                pairs.push((y, f));
            }
        }
    }
    let pair_src = |_y: El, f: El| -> (El, El) {
        let a = base.tgt(base.src(f));
        let e = m.eta.at(a).unwrap();
        (a, base.compose(e, base.src(f)).unwrap())
    };
    let pair_tgt = |y: El, f: El| -> (El, El) {
        let _ = f;
        let a = base.tgt(y);
        let e = m.eta.at(a).unwrap();
        (a, base.compose(e, y).unwrap())
    };
    // close: sources and targets of kept pairs must be kept pairs
    let mut kept: BTreeSet<(El, El)> = pairs.iter().copied().collect();
    loop {
        let mut drop = Vec::new();
        for &(y, f) in &kept {
            if !kept.contains(&pair_src(y, f)) || !kept.contains(&pair_tgt(y, f)) {
                drop.push((y, f));
            }
        }
        if drop.is_empty() {
            break;
        }
        for d in drop {
            kept.remove(&d);
        }
    }
    // the (*) filter: remove would-be identities whose anchor is not of the
    // image form (hat v, eta(hat v) v); vacuous on sharp presentations
    let image_form = |p: (El, El)| -> bool {
        rep.iter().any(|&v| {
            base.tgt(v) == p.0
                && m.eta
                    .at(base.tgt(v))
                    .and_then(|e| base.compose(e, v))
                    .map_or(false, |k| k == p.1)
        })
    };
    let star_violating: Vec<(El, El)> = kept
        .iter()
        .copied()
        .filter(|&p| {
            let s = pair_src(p.0, p.1);
            let t = pair_tgt(p.0, p.1);
            s == t && s != p && !image_form(s)
        })
        .collect();
    for p in star_violating {
        kept.remove(&p);
    }

    let kept: Vec<(El, El)> = kept.into_iter().collect();
    let name_of = |p: (El, El)| pair_name(base, p.0, p.1);
    let idx: BTreeMap<(El, El), u32> =
        kept.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
    let decls: Vec<ElemDecl> = kept
        .iter()
        .map(|&p| ElemDecl {
            name: name_of(p),
            kind: ElemKind::Proper,
            src: idx[&pair_src(p.0, p.1)],
            tgt: idx[&pair_tgt(p.0, p.1)],
        })
        .collect();
    // composition: (z,g) . (y,f) = (z, mu(z) . T(g) . f) when sources match;
    // composites whose formula data lies outside the fragment are recorded
    // as truncation boundary
    let mut comp: Vec<((String, String), String)> = Vec::new();
    let mut boundary_names: Vec<(String, String)> = Vec::new();
    for &(z, g) in &kept {
        for &(y, f) in &kept {
            let s = pair_src(z, g);
            let t = pair_tgt(y, f);
            if !(base.leq(s.0, t.0) && base.leq(s.1, t.1)) {
                continue;
            }
            let val = (|| {
                let tg = m.t.apply(g)?;
                let muz = m.mu.at(z)?;
                let mtg = base.compose(muz, tg)?;
                base.compose(mtg, f)
            })();
            match val {
                Some(v) if idx.contains_key(&(z, v)) => {
                    comp.push(((name_of((z, g)), name_of((y, f))), name_of((z, v))));
                }
                _ => boundary_names.push((name_of((z, g)), name_of((y, f)))),
            }
        }
    }
    // order: componentwise
    let mut order = Vec::new();
    for &p in &kept {
        for &q in &kept {
            if p != q && base.leq(p.0, q.0) && base.leq(p.1, q.1) {
                order.push((name_of(p), name_of(q)));
            }
        }
    }
    let mut cat = GenCat::build(format!("{}_T", base.name), base.depth_bound, decls, order, comp)
        .expect("Kleisli presentation is well-formed");
    for (a, b) in boundary_names {
        if let (Some(El::X(i)), Some(El::X(j))) = (cat.el(&a), cat.el(&b)) {
            cat.add_boundary(i, j);
        }
    }
    let lookup = |p: (El, El)| cat.el(&name_of(p)).expect("pair element present");
    let mut f_t = BTreeMap::new();
    for &a in &rep {
        let p = (
            base.tgt(a),
            m.eta
                .at(base.tgt(a))
                .and_then(|e| base.compose(e, a)),
        );
        if let (y, Some(k)) = p {
            if idx.contains_key(&(y, k)) {
                f_t.insert(a, lookup((y, k)));
            }
        }
    }
    let mut g_t = BTreeMap::new();
    let mut pair_map = BTreeMap::new();
    for &(y, f) in &kept {
        let e = lookup((y, f));
        pair_map.insert(e, (y, f));
        let val = (|| {
            let tf = m.t.apply(f)?;
            let muy = m.mu.at(y)?;
            base.compose(muy, tf)
        })();
        if let Some(v) = val {
            g_t.insert(e, v);
        }
    }
    // full subcategory generated by the image
    let mut seeds: BTreeSet<El> = f_t.values().copied().collect();
    loop {
        let mut grow: BTreeSet<El> = BTreeSet::new();
        for &a in &seeds {
            for c in [cat.src(a), cat.tgt(a)] {
                if let El::X(_) = c {
                    if !seeds.contains(&c) {
                        grow.insert(c);
                    }
                }
            }
        }
        let seed_list: Vec<El> = seeds.iter().copied().collect();
        for &a in &seed_list {
            for &b in &seed_list {
                for h in cat.hom(a, b) {
                    if let El::X(_) = h {
                        if !seeds.contains(&h) {
                            grow.insert(h);
                        }
                    }
                }
                if let Some(c) = cat.compose(a, b) {
                    if let El::X(_) = c {
                        if !seeds.contains(&c) {
                            grow.insert(c);
                        }
                    }
                }
            }
        }
        if grow.is_empty() {
            break;
        }
        seeds.extend(grow);
    }
    let image_cat = induced_subcategory(&cat, &seeds, &format!("{}_T0", base.name));
    Ok(KleisliCat { cat, image_cat, f_t, g_t, pairs: pair_map })
}

/// Presentation induced on a subset of explicit elements.
pub fn induced_subcategory(g: &GenCat, keep: &BTreeSet<El>, name: &str) -> GenCat {
    let names: BTreeSet<String> = keep.iter().map(|&e| g.el_name(e)).collect();
    let mut decls = Vec::new();
    let mut name_idx = BTreeMap::new();
    for e in g.explicit() {
        if names.contains(&g.el_name(e)) {
            name_idx.insert(g.el_name(e), decls.len() as u32);
            decls.push((g.el_name(e), g.el_name(g.src(e)), g.el_name(g.tgt(e))));
        }
    }
    let decls: Vec<ElemDecl> = decls
        .iter()
        .map(|(n, s, t)| ElemDecl {
            name: n.clone(),
            kind: ElemKind::Proper,
            src: *name_idx.get(s).unwrap_or(&0),
            tgt: *name_idx.get(t).unwrap_or(&0),
        })
        .collect();
    let mut comp = Vec::new();
    for a in g.explicit() {
        for b in g.explicit() {
            if names.contains(&g.el_name(a)) && names.contains(&g.el_name(b)) {
                if let Some(c) = g.compose(a, b) {
                    if names.contains(&g.el_name(c)) {
                        comp.push(((g.el_name(a), g.el_name(b)), g.el_name(c)));
                    }
                }
            }
        }
    }
    let mut order = Vec::new();
    for (a, b) in g.order_pairs() {
        if names.contains(&g.el_name(a)) && names.contains(&g.el_name(b)) {
            order.push((g.el_name(a), g.el_name(b)));
        }
    }
    GenCat::build(name, g.depth_bound, decls, order, comp)
        .expect("induced subcategory is well-formed")
}

/// The Kleisli adjunction between the base and the image subcategory.
/// Components that the bounded fragment cannot represent are omitted;
/// the truncation-aware checks skip them.
pub fn kleisli_adjunction(m: &Monad, base: &GenCat, k: &KleisliCat) -> Option<Adjunction> {
    let im = &k.image_cat;
    // F_T and G_T as functor maps relative to (base, image_cat)
    let to_im = |e: El| im.el(&k.cat.el_name(e));
    let mut f_map = BTreeMap::new();
    for (&a, &p) in &k.f_t {
        if let Some(q) = to_im(p) {
            f_map.insert(a, q);
        }
    }
    let mut g_map = BTreeMap::new();
    for e in im.explicit() {
        if let Some(in_cat) = k.cat.el(&im.el_name(e)) {
            if let Some(&v) = k.g_t.get(&in_cat) {
                g_map.insert(e, v);
            }
        }
    }
    // extend over image identities
    let mut f_t = FunctorMap { variance: Variance::Covariant, map: f_map };
    f_t.extend_to_tags(base, im);
    let mut g_t = FunctorMap { variance: Variance::Covariant, map: g_map };
    g_t.extend_to_tags(im, base);
    let unit = NatTrans { f: FunctorMap::identity(base), g: g_t.after(&f_t), component: m.eta.component.clone() };
    // counit at x: the unique pair in hom(F G x, x) whose second component
    // is the identity of G x
    let mut counit_comp = BTreeMap::new();
    for x in im.represented() {
        let Some(gx) = g_t.apply(x) else { continue };
        let Some(fgx) = f_t.apply(gx) else { continue };
        let Some(want) = base.identity_of(gx) else { continue };
        let mut found = None;
        for c in im.hom(fgx, x) {
            let in_cat = match c {
                El::X(_) => k.cat.el(&im.el_name(c)),
                El::V { .. } => None,
            };
            if let Some(in_cat) = in_cat {
                if let Some(&(_, second)) = k.pairs.get(&in_cat) {
                    if second == want {
                        found = Some(c);
                        break;
                    }
                }
            }
        }
        if let Some(fd) = found {
            counit_comp.insert(x, fd);
        } else if !im.is_identity(x) {
            // a missing counit component at an explicit element is fatal
            return None;
        }
    }
    let counit = NatTrans {
        f: f_t.after(&g_t),
        g: FunctorMap::identity(im),
        component: counit_comp,
    };
    Some(Adjunction { f: f_t, g: g_t, unit, counit })
}

/// phi(u, k) = k: tabulate hom(F_T f, p) -> hom(f, G_T p) and verify it is
/// a bijection for p in the image subcategory, natural in both slots.
pub fn check_phi(m: &Monad, base: &GenCat, k: &KleisliCat) -> Report {
    let mut r = Report::new("kleisli_phi");
    let _ = m;
    for (&f, &ff) in &k.f_t {
        for p in k.image_cat.explicit() {
            let in_cat = k.cat.el(&k.image_cat.el_name(p)).unwrap();
            let Some(&gp) = k.g_t.get(&in_cat) else { continue };
            let lhs: Vec<El> = k
                .cat
                .hom(ff, in_cat)
                .into_iter()
                .filter(|e| k.pairs.contains_key(e))
                .collect();
            let rhs = base.hom(f, gp);
            let mut seen = BTreeSet::new();
            let mut ok = true;
            for &u in &lhs {
                let (_, second) = k.pairs[&u];
                if !rhs.contains(&second) || !seen.insert(second) {
                    ok = false;
                }
            }
            if !ok || seen.len() != rhs.len() {
                r.violation(
                    "phi_bijective",
                    vec![base.el_name(f), k.cat.el_name(in_cat)],
                    format!("|hom(F f, p)| = {} vs |hom(f, G p)| = {}", lhs.len(), rhs.len()),
                );
            }
        }
    }
    // naturality: phi((w,h) . (u,k)) = G_T(w,h) . phi(u,k)
    for (&e1, &(_, k1)) in &k.pairs {
        for (&e2, &(_, k2)) in &k.pairs {
            if let Some(c) = k.cat.compose(e1, e2) {
                if let Some(&(_, kc)) = k.pairs.get(&c) {
                    if let Some(&g1) = k.g_t.get(&e1) {
                        let want = base.compose(g1, k2);
                        if want != Some(kc) {
                            r.violation(
                                "phi_natural",
                                vec![k.cat.el_name(e1), k.cat.el_name(e2)],
                                "phi(composite) != G(first) . phi(second)",
                            );
                        }
                    }
                }
            }
            let _ = k1;
        }
    }
    r
}

/// A Kleisli triple: unit map and partial extension operator.
#[derive(Debug, Clone)]
pub struct Triple {
    pub eta: BTreeMap<El, El>,
    pub star: BTreeMap<El, El>,
}

impl Triple {
    /// Derived endomap T(f) = (eta(tgt f) . f)*.
    pub fn t_of(&self, base: &GenCat, f: El) -> Option<El> {
        let e = self.eta.get(&base.tgt(f))?;
        let ef = base.compose(*e, f)?;
        self.star.get(&ef).copied()
    }
}

/// Triple axioms, wherever the partial data is defined.
pub fn check_triple(t: &Triple, base: &GenCat) -> Report {
    let mut r = Report::new("triple");
    let rep = base.represented();
    for &f in &rep {
        // (0^2): tgt(eta f) = T(f), src(eta f) = f
        if let Some(&ef) = t.eta.get(&f) {
            if base.src(ef) != f {
                r.violation("triple_0", vec![base.el_name(f)], "src(eta f) != f");
            }
            if let Some(tf) = t.t_of(base, f) {
                if base.tgt(ef) != tf {
                    r.violation("triple_0", vec![base.el_name(f)], "tgt(eta f) != T(f)");
                }
            }
        }
        // (0^1): tgt(f*) = tgt f, src(f*) = T(src f)
        if let Some(&fs) = t.star.get(&f) {
            if base.tgt(fs) != base.tgt(f) {
                r.violation("triple_0", vec![base.el_name(f)], "tgt(f*) != tgt(f)");
            }
            if let Some(tsf) = t.t_of(base, base.src(f)) {
                if base.src(fs) != tsf {
                    r.violation("triple_0", vec![base.el_name(f)], "src(f*) != T(src f)");
                }
            }
        }
        // (1): eta(f)* = 1_{T f}
        if let Some(&ef) = t.eta.get(&f) {
            if let (Some(&es), Some(tf)) = (t.star.get(&ef), t.t_of(base, f)) {
                if base.identity_of(tf) != Some(es) {
                    r.violation("triple_1", vec![base.el_name(f)], "eta(f)* != 1_{T f}");
                }
            }
        }
        // (2): f = f* . eta(src f)
        if let (Some(&fs), Some(&es)) = (t.star.get(&f), t.eta.get(&base.src(f))) {
            if base.compose(fs, es) != Some(f) {
                r.violation("triple_2", vec![base.el_name(f)], "f != f* . eta(src f)");
            }
        }
    }
    // (3): (g* . f)* = g* . f*
    for &g in &rep {
        let Some(&gs) = t.star.get(&g) else { continue };
        for &f in &rep {
            let Some(gf) = base.compose(gs, f) else { continue };
            if let (Some(&lhs), Some(&fs)) = (t.star.get(&gf), t.star.get(&f)) {
                if base.compose(gs, fs) != Some(lhs) {
                    r.violation(
                        "triple_3",
                        vec![base.el_name(g), base.el_name(f)],
                        "(g* . f)* != g* . f*",
                    );
                }
            }
        }
    }
    // monotone maps
    for &a in &rep {
        for &b in &rep {
            if a != b && base.leq(a, b) {
                if let (Some(&x), Some(&y)) = (t.eta.get(&a), t.eta.get(&b)) {
                    if !base.leq(x, y) {
                        r.violation("triple_monotone", vec![base.el_name(a), base.el_name(b)], "eta not monotone");
                    }
                }
                if let (Some(&x), Some(&y)) = (t.star.get(&a), t.star.get(&b)) {
                    if !base.leq(x, y) {
                        r.violation("triple_monotone", vec![base.el_name(a), base.el_name(b)], "star not monotone");
                    }
                }
            }
        }
    }
    r
}

/// Build the monad of a triple: T derived, mu(f) = (1_{T f})*.
pub fn monad_from_triple(t: &Triple, base: &GenCat) -> Option<Monad> {
    let rep = base.represented();
    let mut tmap = BTreeMap::new();
    for &f in &rep {
        if let Some(tf) = t.t_of(base, f) {
            tmap.insert(f, tf);
        }
    }
    let tfun = FunctorMap { variance: Variance::Covariant, map: tmap };
    let mut eta_comp = BTreeMap::new();
    for &f in &rep {
        if let Some(&e) = t.eta.get(&f) {
            eta_comp.insert(f, e);
        }
    }
    let mut mu_comp = BTreeMap::new();
    for &f in &rep {
        let Some(tf) = tfun.apply(f) else { continue };
        let Some(one) = base.identity_of(tf) else { continue };
        if let Some(&s) = t.star.get(&one) {
            mu_comp.insert(f, s);
        }
    }
    Some(Monad {
        t: tfun.clone(),
        eta: NatTrans { f: FunctorMap::identity(base), g: tfun.clone(), component: eta_comp },
        mu: NatTrans { f: tfun.after(&tfun), g: tfun, component: mu_comp },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gencat::check_axioms;

    #[test]
    fn identity_monad_laws() {
        let c = fixtures::chain2();
        let m = Monad::identity(&c);
        assert!(check_monad(&m, &c).passed());
        assert!(check_monic_condition(&m, &c).passed());
    }

    #[test]
    fn z2_unit_monad_laws() {
        let base = fixtures::z2();
        assert!(check_axioms(&base).passed());
        let m = fixtures::z2_unit_monad(&base);
        let r = check_monad(&m, &base);
        assert!(r.passed(), "{:?}", r.entries);
        let r = check_monic_condition(&m, &base);
        assert!(r.passed(), "{:?}", r.entries);
    }

    #[test]
    fn conj6_involution_monad_laws() {
        let base = fixtures::conj6();
        assert!(check_axioms(&base).passed());
        let m = fixtures::conj6_involution_monad(&base);
        let r = check_monad(&m, &base);
        assert!(r.passed(), "{:?}", r.entries);
        let r = check_monic_condition(&m, &base);
        assert!(r.passed(), "{:?}", r.entries);
    }

    #[test]
    fn closure_monad_lawful_but_not_monic() {
        let base = fixtures::closure3();
        assert!(check_axioms(&base).passed(), "{:?}", check_axioms(&base).entries);
        let m = fixtures::closure3_monad(&base);
        let r = check_monad(&m, &base);
        assert!(r.passed(), "{:?}", r.entries);
        let r = check_monic_condition(&m, &base);
        assert!(!r.passed());
        // kleisli refuses with a witness pair
        match kleisli(&m, &base) {
            Err(KleisliError::MonicCondition(a, b)) => {
                assert!(!a.is_empty() && !b.is_empty());
            }
            other => panic!("expected monic refusal, got {other:?}"),
        }
    }

    fn roundtrip(base: &GenCat, m: &Monad) {
        let k = kleisli(m, base).unwrap();
        let r = check_axioms(&k.cat);
        assert!(r.passed(), "{:?}", r.entries);
        // objects of C_T correspond to pairs (y, eta(y)) with y an object
        for e in k.cat.explicit() {
            if k.cat.is_object(e) {
                let (y, f) = k.pairs[&e];
                assert!(base.is_object(y));
                assert_eq!(m.eta.at(y), Some(f));
            }
        }
        // src formula on every pair
        for (&e, &(_, f)) in &k.pairs {
            let s = k.cat.src(e);
            if let Some(&(sy, sf)) = k.pairs.get(&s) {
                let a = base.tgt(base.src(f));
                assert_eq!(sy, a);
                assert_eq!(
                    Some(sf),
                    m.eta.at(a).and_then(|x| base.compose(x, base.src(f)))
                );
            }
        }
        let adj = kleisli_adjunction(m, base, &k).unwrap();
        let rep = check_adjunction(&adj, base, &k.image_cat);
        assert!(rep.passed(), "{:?}", rep.entries);
        let m2 = monad_from_adjunction(&adj, base, &k.image_cat);
        assert!(check_monad(&m2, base).passed());
        for a in base.explicit() {
            assert_eq!(m.t.apply(a), m2.t.apply(a), "T at {}", base.el_name(a));
            assert_eq!(m.eta.at(a), m2.eta.at(a), "eta at {}", base.el_name(a));
            assert_eq!(m.mu.at(a), m2.mu.at(a), "mu at {}", base.el_name(a));
        }
        let phi = check_phi(m, base, &k);
        assert!(phi.passed(), "{:?}", phi.entries);
        // order congruence on pairs: componentwise
        for (&e1, &p1) in &k.pairs {
            for (&e2, &p2) in &k.pairs {
                assert_eq!(
                    k.cat.leq(e1, e2),
                    base.leq(p1.0, p2.0) && base.leq(p1.1, p2.1)
                );
            }
        }
    }

    #[test]
    fn identity_monad_kleisli_roundtrip() {
        let c = fixtures::chain2();
        roundtrip(&c, &Monad::identity(&c));
    }

    #[test]
    fn z2_kleisli_roundtrip() {
        let base = fixtures::z2();
        roundtrip(&base, &fixtures::z2_unit_monad(&base));
    }

    #[test]
    fn conj6_kleisli_roundtrip() {
        let base = fixtures::conj6();
        roundtrip(&base, &fixtures::conj6_involution_monad(&base));
    }

    #[test]
    fn identity_triple() {
        let c = fixtures::chain2();
        let rep = c.represented();
        let mut eta = BTreeMap::new();
        let mut star = BTreeMap::new();
        for &f in &rep {
            if let Some(i) = c.identity_of(f) {
                eta.insert(f, i);
            }
            star.insert(f, f);
        }
        let t = Triple { eta, star };
        let r = check_triple(&t, &c);
        assert!(r.passed(), "{:?}", r.entries);
        let m = monad_from_triple(&t, &c).unwrap();
        let r = check_monad(&m, &c);
        assert!(r.passed(), "{:?}", r.entries);
        // derived T is functorial and eta(f)* = 1_{T f} on all elements
        for &f in &rep {
            assert_eq!(t.t_of(&c, f), Some(f));
        }
    }
}
