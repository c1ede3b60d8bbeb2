//! Finitely presented generalized categories.
//!
//! A presentation lists explicit elements (proper elements, possibly
//! including declared identity tags), total source/target maps, a partial
//! order given by generating pairs, and a composition table on explicit
//! pairs. Identity towers above elements that lack a declared identity are
//! represented virtually, up to the presentation's depth bound.

mod axioms;
mod json;
mod ops;

pub use axioms::check_axioms;
pub use json::PresentationError;
pub use ops::{
    category_of_invertibles, cell_dim, classify, close_identities, flat_zero, flatten, height,
    is_cellular, is_one_category, opposite, to_globular, tree_category, ElementClassification,
    GlobularSet, Height,
};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Reference to a represented element: an explicit entry or a virtual
/// identity tag of some depth above an explicit entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum El {
    /// Explicit element, index into the presentation's element list.
    X(u32),
    /// Virtual identity tag: `depth`-fold identity above explicit `base`.
    V { base: u32, depth: u32 },
}

/// Declared kind of an explicit element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElemKind {
    Proper,
    /// Declared (materialized) identity of the named element.
    IdTag { of: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemDecl {
    pub name: String,
    pub kind: ElemKind,
    /// Indices of declared source and target (explicit elements).
    pub src: u32,
    pub tgt: u32,
}

/// A finitely presented generalized category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenCat {
    pub name: String,
    pub depth_bound: u32,
    pub(crate) elems: Vec<ElemDecl>,
    pub(crate) index: BTreeMap<String, u32>,
    /// Strict part of the order relation on explicit elements, transitively closed.
    pub(crate) order: BTreeSet<(u32, u32)>,
    /// Generating pairs as loaded (before closure), for canonical serialization.
    pub(crate) order_gen: Vec<(String, String)>,
    /// Composition table on explicit element pairs.
    pub(crate) comp: BTreeMap<(u32, u32), u32>,
    /// For each explicit element, the explicit element designated as its
    /// identity (an object designates itself). Absent means the identity is
    /// virtual (or out of range).
    pub(crate) designated_id: BTreeMap<u32, u32>,
    /// Explicit pairs exempt from the composability requirement (truncation).
    pub(crate) boundary: BTreeSet<(u32, u32)>,
    /// Cached represented-element list (derived from the fields above).
    pub(crate) rep_cache: Vec<El>,
}

impl GenCat {
    /// Build a presentation from parts. Performs structural validation and
    /// order closure but no axiom checking.
    pub fn build(
        name: impl Into<String>,
        depth_bound: u32,
        elems: Vec<ElemDecl>,
        order_gen: Vec<(String, String)>,
        comp: Vec<((String, String), String)>,
    ) -> Result<GenCat, PresentationError> {
        let name = name.into();
        // canonicalize element order by name so presentations compare and
        // serialize stably regardless of construction order
        let mut elems = elems;
        {
            let mut perm: Vec<usize> = (0..elems.len()).collect();
            perm.sort_by(|&i, &j| elems[i].name.cmp(&elems[j].name));
            let mut inv = vec![0u32; elems.len()];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new as u32;
            }
            let mut sorted: Vec<ElemDecl> = perm.iter().map(|&i| elems[i].clone()).collect();
            for e in &mut sorted {
                e.src = inv[e.src as usize];
                e.tgt = inv[e.tgt as usize];
            }
            elems = sorted;
        }
        let mut index = BTreeMap::new();
        for (i, e) in elems.iter().enumerate() {
            if index.insert(e.name.clone(), i as u32).is_some() {
                return Err(PresentationError::DuplicateElement(e.name.clone()));
            }
        }
        for e in &elems {
            if e.src as usize >= elems.len() || e.tgt as usize >= elems.len() {
                return Err(PresentationError::Dangling(e.name.clone()));
            }
            if let ElemKind::IdTag { of } = &e.kind {
                let anchor = *index
                    .get(of)
                    .ok_or_else(|| PresentationError::Dangling(of.clone()))?;
                if e.src != anchor || e.tgt != anchor {
                    return Err(PresentationError::BadIdentityTag(e.name.clone()));
                }
            }
        }
        let mut order_gen = order_gen;
        order_gen.sort();
        order_gen.dedup();
        let mut order: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (a, b) in &order_gen {
            let ia = *index.get(a).ok_or_else(|| PresentationError::Dangling(a.clone()))?;
            let ib = *index.get(b).ok_or_else(|| PresentationError::Dangling(b.clone()))?;
            if ia != ib {
                order.insert((ia, ib));
            }
        }
        // transitive closure
        loop {
            let mut extra = Vec::new();
            for &(a, b) in &order {
                for &(c, d) in &order {
                    if b == c && a != d && !order.contains(&(a, d)) {
                        extra.push((a, d));
                    }
                }
            }
            if extra.is_empty() {
                break;
            }
            order.extend(extra);
        }
        for &(a, b) in &order {
            if order.contains(&(b, a)) {
                return Err(PresentationError::OrderNotAntisymmetric(
                    elems[a as usize].name.clone(),
                    elems[b as usize].name.clone(),
                ));
            }
        }
        let mut table = BTreeMap::new();
        for ((a, b), c) in comp {
            let ia = *index.get(&a).ok_or_else(|| PresentationError::Dangling(a.clone()))?;
            let ib = *index.get(&b).ok_or_else(|| PresentationError::Dangling(b.clone()))?;
            let ic = *index.get(&c).ok_or_else(|| PresentationError::Dangling(c.clone()))?;
            if table.insert((ia, ib), ic).is_some() {
                return Err(PresentationError::DuplicateComposite(a, b));
            }
        }
        let mut g = GenCat {
            name,
            depth_bound,
            elems,
            index,
            order,
            order_gen,
            comp: table,
            designated_id: BTreeMap::new(),
            boundary: BTreeSet::new(),
            rep_cache: Vec::new(),
        };
        g.designate_identities();
        g.rep_cache = g.compute_represented();
        Ok(g)
    }

    /// Designate explicit identities: objects are their own identity;
    /// declared tags bind to their anchor; otherwise a unique explicit
    /// self-loop at x whose neutrality is fully witnessed by the table.
    fn designate_identities(&mut self) {
        let n = self.elems.len() as u32;
        let mut desig: BTreeMap<u32, u32> = BTreeMap::new();
        for i in 0..n {
            if self.is_object_x(i) {
                desig.insert(i, i);
            }
        }
        for j in 0..n {
            if let ElemKind::IdTag { of } = &self.elems[j as usize].kind {
                let a = self.index[of];
                desig.entry(a).or_insert(j);
            }
        }
        for x in 0..n {
            if desig.contains_key(&x) {
                continue;
            }
            let mut candidates = Vec::new();
            for i in 0..n {
                if i == x || self.elems[i as usize].src != x || self.elems[i as usize].tgt != x {
                    continue;
                }
                // neutrality must be witnessed by table entries on every
                // composable explicit pair, not just vacuously true
                let mut witnessed = true;
                for c in 0..n {
                    let lhs_defined = self.leq_x(self.elems[i as usize].src, self.elems[c as usize].tgt);
                    if lhs_defined && self.comp.get(&(i, c)) != Some(&c) {
                        witnessed = false;
                        break;
                    }
                    let rhs_defined = self.leq_x(self.elems[c as usize].src, self.elems[i as usize].tgt);
                    if rhs_defined && self.comp.get(&(c, i)) != Some(&c) {
                        witnessed = false;
                        break;
                    }
                }
                if witnessed {
                    candidates.push(i);
                }
            }
            if candidates.len() == 1 {
                desig.insert(x, candidates[0]);
            }
        }
        self.designated_id = desig;
    }

    fn leq_x(&self, a: u32, b: u32) -> bool {
        a == b || self.order.contains(&(a, b))
    }

    pub fn len_explicit(&self) -> usize {
        self.elems.len()
    }

    pub fn explicit(&self) -> impl Iterator<Item = El> + '_ {
        (0..self.elems.len() as u32).map(El::X)
    }

    fn is_object_x(&self, i: u32) -> bool {
        self.elems[i as usize].src == i && self.elems[i as usize].tgt == i
    }

    pub fn is_object(&self, e: El) -> bool {
        match e {
            El::X(i) => self.is_object_x(i),
            El::V { .. } => false,
        }
    }

    /// All represented elements: explicit plus virtual tags up to the bound.
    pub fn represented(&self) -> Vec<El> {
        self.rep_cache.clone()
    }

    pub fn represented_ref(&self) -> &[El] {
        &self.rep_cache
    }

    fn compute_represented(&self) -> Vec<El> {
        let mut out: Vec<El> = self.explicit().collect();
        for b in 0..self.elems.len() as u32 {
            if self.tower_base(b) {
                for depth in 1..=self.depth_bound {
                    out.push(El::V { base: b, depth });
                }
            }
        }
        out
    }

    /// Whether a virtual identity tower hangs above explicit element `b`:
    /// exactly when no explicit element is designated as its identity.
    fn tower_base(&self, b: u32) -> bool {
        !self.designated_id.contains_key(&b)
    }

    pub fn el(&self, name: &str) -> Option<El> {
        self.index.get(name).map(|&i| El::X(i))
    }

    pub fn el_name(&self, e: El) -> String {
        match e {
            El::X(i) => self.elems[i as usize].name.clone(),
            El::V { base, depth } => {
                let mut s = self.elems[base as usize].name.clone();
                for _ in 0..depth {
                    s = format!("1({s})");
                }
                s
            }
        }
    }

    pub fn src(&self, e: El) -> El {
        match e {
            El::X(i) => El::X(self.elems[i as usize].src),
            El::V { base, depth: 1 } => El::X(base),
            El::V { base, depth } => El::V { base, depth: depth - 1 },
        }
    }

    pub fn tgt(&self, e: El) -> El {
        match e {
            El::X(i) => El::X(self.elems[i as usize].tgt),
            El::V { base, depth: 1 } => El::X(base),
            El::V { base, depth } => El::V { base, depth: depth - 1 },
        }
    }

    /// Order relation extended to virtual tags level-wise.
    pub fn leq(&self, a: El, b: El) -> bool {
        if a == b {
            return true;
        }
        match (a, b) {
            (El::X(i), El::X(j)) => self.order.contains(&(i, j)),
            (El::V { base: i, depth: d1 }, El::V { base: j, depth: d2 }) => {
                d1 == d2 && self.order.contains(&(i, j))
            }
            _ => false,
        }
    }

    /// The identity of an element, when representable within the bound.
    pub fn identity_of(&self, e: El) -> Option<El> {
        match e {
            El::X(i) => match self.designated_id.get(&i) {
                Some(&j) => Some(El::X(j)),
                None => {
                    if self.depth_bound >= 1 {
                        Some(El::V { base: i, depth: 1 })
                    } else {
                        None
                    }
                }
            },
            El::V { base, depth } => {
                if depth < self.depth_bound {
                    Some(El::V { base, depth: depth + 1 })
                } else {
                    None
                }
            }
        }
    }

    /// Whether `e` is an identity: an object, a virtual tag, a declared tag,
    /// or a designated identity of some element.
    pub fn is_identity(&self, e: El) -> bool {
        match e {
            El::V { .. } => true,
            El::X(i) => {
                self.is_object_x(i)
                    || matches!(self.elems[i as usize].kind, ElemKind::IdTag { .. })
                    || self.designated_id.values().any(|&j| j == i)
            }
        }
    }

    /// The element whose identity `e` is, if `e` is an identity.
    pub fn identity_anchor(&self, e: El) -> Option<El> {
        match e {
            El::V { base, depth: 1 } => Some(El::X(base)),
            El::V { base, depth } => Some(El::V { base, depth: depth - 1 }),
            El::X(i) => {
                if self.is_object_x(i) {
                    Some(El::X(i))
                } else {
                    self.designated_id
                        .iter()
                        .find(|&(_, &j)| j == i)
                        .map(|(&a, _)| El::X(a))
                }
            }
        }
    }

    /// Composability per the order: defined iff src(a) approximates tgt(b).
    pub fn composable(&self, a: El, b: El) -> bool {
        self.leq(self.src(a), self.tgt(b))
    }

    /// Evaluate a composite. Table entries take precedence (so mutated
    /// tables stay visible to the checker); identity absorption covers the
    /// rest. Returns `None` when undefined or not representable.
    pub fn compose(&self, a: El, b: El) -> Option<El> {
        if !self.composable(a, b) {
            return None;
        }
        if let (El::X(i), El::X(j)) = (a, b) {
            if let Some(&k) = self.comp.get(&(i, j)) {
                return Some(El::X(k));
            }
        }
        if self.is_identity(a) {
            return Some(b);
        }
        if self.is_identity(b) {
            return Some(a);
        }
        None
    }

    /// hom(a, b): represented elements with the given source and target.
    pub fn hom(&self, a: El, b: El) -> Vec<El> {
        self.rep_cache
            .iter()
            .copied()
            .filter(|&c| self.src(c) == a && self.tgt(c) == b)
            .collect()
    }

    pub fn objects(&self) -> Vec<El> {
        self.explicit().filter(|&e| self.is_object(e)).collect()
    }

    /// Pairs exempted from the composability requirement (height truncation
    /// in generated categories). Informational for the checker.
    pub fn is_boundary(&self, a: El, b: El) -> bool {
        match (a, b) {
            (El::X(i), El::X(j)) => self.boundary.contains(&(i, j)),
            _ => false,
        }
    }

    /// Explicit order pairs (strict part, closed).
    pub fn order_pairs(&self) -> impl Iterator<Item = (El, El)> + '_ {
        self.order.iter().map(|&(a, b)| (El::X(a), El::X(b)))
    }
}

impl fmt::Display for GenCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} elements)", self.name, self.elems.len())
    }
}

/// Convenience constructor used by fixtures and tests: elements given as
/// (name, src, tgt), composition as ((a, b), c).
pub fn gencat(
    name: &str,
    elems: &[(&str, &str, &str)],
    order: &[(&str, &str)],
    comp: &[((&str, &str), &str)],
) -> GenCat {
    gencat_d(name, 2, elems, order, comp)
}

/// Like [`gencat`] with an explicit depth bound.
pub fn gencat_d(
    name: &str,
    depth_bound: u32,
    elems: &[(&str, &str, &str)],
    order: &[(&str, &str)],
    comp: &[((&str, &str), &str)],
) -> GenCat {
    let idx: BTreeMap<&str, u32> =
        elems.iter().enumerate().map(|(i, &(n, _, _))| (n, i as u32)).collect();
    let decls = elems
        .iter()
        .map(|&(n, s, t)| ElemDecl {
            name: n.to_string(),
            kind: ElemKind::Proper,
            src: *idx.get(s).unwrap_or_else(|| panic!("unknown src {s}")),
            tgt: *idx.get(t).unwrap_or_else(|| panic!("unknown tgt {t}")),
        })
        .collect();
    GenCat::build(
        name,
        depth_bound,
        decls,
        order.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
        comp.iter()
            .map(|&((a, b), c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect(),
    )
    .expect("fixture presentation is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_category_model() {
        let g = gencat("trivial", &[("a", "a", "a")], &[], &[(("a", "a"), "a")]);
        let a = g.el("a").unwrap();
        assert!(g.is_object(a));
        assert_eq!(g.identity_of(a), Some(a));
        assert_eq!(g.compose(a, a), Some(a));
        assert_eq!(g.represented().len(), 1);
    }

    #[test]
    fn arrow_gc_virtual_tags() {
        let g = gencat(
            "arrow-gc",
            &[("a", "a", "a"), ("b", "a", "b")],
            &[],
            &[(("a", "a"), "a"), (("b", "a"), "b")],
        );
        let b = g.el("b").unwrap();
        // b: a -> b is not an object; its identity is a virtual tag
        assert!(!g.is_object(b));
        let ib = g.identity_of(b).unwrap();
        assert_eq!(g.src(ib), b);
        assert_eq!(g.tgt(ib), b);
        // tag absorbs: 1_b . b = b
        assert_eq!(g.compose(ib, b), Some(b));
        // represented: a, b, 1(b), 1(1(b)) at depth bound 2
        assert_eq!(g.represented().len(), 4);
        assert_eq!(g.el_name(El::V { base: 1, depth: 2 }), "1(1(b))");
    }

    #[test]
    fn order_closure_and_antisymmetry() {
        let g = gencat(
            "ord",
            &[("x", "x", "x"), ("y", "y", "y"), ("z", "z", "z")],
            &[("x", "y"), ("y", "z")],
            &[(("x", "x"), "x"), (("y", "y"), "y"), (("z", "z"), "z"), (("x", "y"), "x"), (("x", "z"), "x"), (("y", "z"), "y")],
        );
        assert!(g.leq(g.el("x").unwrap(), g.el("z").unwrap()));
        let bad = GenCat::build(
            "bad",
            2,
            vec![
                ElemDecl { name: "x".into(), kind: ElemKind::Proper, src: 0, tgt: 0 },
                ElemDecl { name: "y".into(), kind: ElemKind::Proper, src: 1, tgt: 1 },
            ],
            vec![("x".into(), "y".into()), ("y".into(), "x".into())],
            vec![],
        );
        assert!(matches!(bad, Err(PresentationError::OrderNotAntisymmetric(_, _))));
    }
}

impl GenCat {
    /// Mark an explicit pair as truncation boundary: exempt from the
    /// composability requirement when generated data cannot represent it.
    pub fn add_boundary(&mut self, a: u32, b: u32) {
        self.boundary.insert((a, b));
    }
}
