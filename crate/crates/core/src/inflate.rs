//! Inflation of a finite cartesian closed one-category into an ideal CCC
//! fragment: formal turnstile and wedge nodes over the base objects, with
//! hom sets identified through deflation. Arrows into turnstile nodes play
//! the role of higher cells; all nodes are objects (the classical reading).

use crate::gencat::{El, GenCat};
use crate::iccc::IcccOps;
use crate::report::Verdict;
use std::collections::BTreeMap;

/// Cartesian closed structure tables over a finite one-category.
#[derive(Debug, Clone, Default)]
pub struct CccMemo {
    pair: std::cell::RefCell<BTreeMap<(El, El), Option<El>>>,
    transpose: std::cell::RefCell<BTreeMap<(El, El, El), Option<El>>>,
}

/// Cartesian closed structure tables over a finite one-category.
#[derive(Debug, Clone)]
pub struct CccData {
    pub cat: GenCat,
    pub terminal: El,
    /// (object, object) -> (product object, first projection, second projection)
    pub product: BTreeMap<(El, El), (El, El, El)>,
    /// (object a, object b) -> (exponential object, evaluation arrow)
    pub exponential: BTreeMap<(El, El), (El, El)>,
    memo: CccMemo,
}

impl CccData {
    /// Derive the tables for a thin category by universal-property search.
    pub fn from_thin(cat: &GenCat) -> Option<CccData> {
        let objs = cat.objects();
        let hom1 = |a: El, b: El| -> Option<El> {
            if a == b {
                return Some(a);
            }
            let h = cat.hom(a, b);
            if h.len() == 1 {
                Some(h[0])
            } else {
                None
            }
        };
        let leq = |a: El, b: El| a == b || hom1(a, b).is_some();
        let terminal = *objs.iter().find(|&&t| objs.iter().all(|&o| leq(o, t)))?;
        let mut product = BTreeMap::new();
        for &a in &objs {
            for &b in &objs {
                let meet = *objs
                    .iter()
                    .find(|&&m| {
                        leq(m, a)
                            && leq(m, b)
                            && objs.iter().all(|&c| !(leq(c, a) && leq(c, b)) || leq(c, m))
                    })?;
                product.insert((a, b), (meet, hom1(meet, a)?, hom1(meet, b)?));
            }
        }
        let mut exponential = BTreeMap::new();
        for &a in &objs {
            for &b in &objs {
                let exp = *objs
                    .iter()
                    .find(|&&e| {
                        objs.iter().all(|&c| {
                            let ca = product[&(c, a)].0;
                            leq(c, e) == leq(ca, b)
                        })
                    })?;
                let ea = product[&(exp, a)].0;
                exponential.insert((a, b), (exp, hom1(ea, b)?));
            }
        }
        Some(CccData { cat: cat.clone(), terminal, product, exponential, memo: CccMemo::default() })
    }

    /// Unique mediator into the product: m with p1 . m = f and p2 . m = g.
    pub fn pair_arrow(&self, f: El, g: El) -> Option<El> {
        if let Some(v) = self.memo.pair.borrow().get(&(f, g)) {
            return *v;
        }
        let result = (|| {
            let (a, b) = (self.cat.tgt(f), self.cat.tgt(g));
            let &(_, p1, p2) = self.product.get(&(a, b))?;
            let mut found = None;
            for &m in self.cat.represented_ref() {
                if self.cat.compose(p1, m) == Some(f) && self.cat.compose(p2, m) == Some(g) {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(m);
                }
            }
            found
        })();
        self.memo.pair.borrow_mut().insert((f, g), result);
        result
    }

    /// Unique transpose of f: c /\ a -> b.
    pub fn transpose(&self, f: El, c: El, a: El) -> Option<El> {
        if let Some(v) = self.memo.transpose.borrow().get(&(f, c, a)) {
            return *v;
        }
        let result = self.transpose_uncached(f, c, a);
        self.memo.transpose.borrow_mut().insert((f, c, a), result);
        result
    }

    fn transpose_uncached(&self, f: El, c: El, a: El) -> Option<El> {
        let b = self.cat.tgt(f);
        let &(exp, eval) = self.exponential.get(&(a, b))?;
        let &(_, q1, q2) = self.product.get(&(c, a))?;
        let mut found = None;
        for h in self.cat.hom(c, exp) {
            let Some(hp) = self.cat.compose(h, q1) else { continue };
            let Some(arg) = self.pair_arrow(hp, q2) else { continue };
            if self.cat.compose(eval, arg) == Some(f) {
                if found.is_some() {
                    return None;
                }
                found = Some(h);
            }
        }
        found
    }

    /// The unique terminal arrow from an object.
    pub fn terminal_of(&self, a: El) -> Option<El> {
        if a == self.terminal {
            return Some(a);
        }
        let h = self.cat.hom(a, self.terminal);
        if h.len() == 1 {
            Some(h[0])
        } else {
            None
        }
    }
}

/// Formal object nodes of the inflation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    Base(El),
    Turn(Box<Node>, Box<Node>),
    Wedge(Box<Node>, Box<Node>),
}

/// Elements of the inflated fragment: nodes (all objects) and tagged base
/// arrows between nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum IEl {
    Node(Node),
    Tag(Node, Node, El),
}

/// The inflated ideal CCC fragment.
pub struct Inflated {
    pub ccc: CccData,
    pub nodes: Vec<Node>,
    elements: Vec<IEl>,
}

pub fn inflate_ccc(ccc: &CccData, depth: u32) -> Inflated {
    let mut scaffold = Inflated { ccc: ccc.clone(), nodes: vec![], elements: vec![] };
    let mut nodes: Vec<Node> = ccc.cat.objects().into_iter().map(Node::Base).collect();
    let mut frontier = nodes.clone();
    for _ in 1..depth {
        let mut next = Vec::new();
        for a in &nodes {
            for b in &frontier {
                for mk in [
                    Node::Turn(Box::new(a.clone()), Box::new(b.clone())),
                    Node::Turn(Box::new(b.clone()), Box::new(a.clone())),
                    Node::Wedge(Box::new(a.clone()), Box::new(b.clone())),
                    Node::Wedge(Box::new(b.clone()), Box::new(a.clone())),
                ] {
                    if !nodes.contains(&mk) && !next.contains(&mk) && scaffold.deflate(&mk).is_some()
                    {
                        next.push(mk);
                    }
                }
            }
        }
        nodes.extend(next.clone());
        frontier = next;
        nodes.sort();
        nodes.dedup();
    }
    nodes.sort();
    scaffold.nodes = nodes;
    // enumerate elements once
    let mut out: Vec<IEl> = scaffold.nodes.iter().cloned().map(IEl::Node).collect();
    for a in &scaffold.nodes {
        for b in &scaffold.nodes {
            let (Some(da), Some(db)) = (scaffold.deflate(a), scaffold.deflate(b)) else {
                continue;
            };
            for f in scaffold.ccc.cat.hom(da, db) {
                if let El::X(_) = f {
                    let t = scaffold.canonical(IEl::Tag(a.clone(), b.clone(), f));
                    if matches!(t, IEl::Tag(_, _, _)) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    scaffold.elements = out;
    scaffold
}

impl Inflated {
    pub fn deflate(&self, n: &Node) -> Option<El> {
        match n {
            Node::Base(o) => Some(*o),
            Node::Turn(a, b) => {
                let (da, db) = (self.deflate(a)?, self.deflate(b)?);
                self.ccc.exponential.get(&(da, db)).map(|&(e, _)| e)
            }
            Node::Wedge(a, b) => {
                let (da, db) = (self.deflate(a)?, self.deflate(b)?);
                self.ccc.product.get(&(da, db)).map(|&(p, _, _)| p)
            }
        }
    }

    fn node_of(&self, e: &IEl) -> Option<Node> {
        match e {
            IEl::Node(n) => Some(n.clone()),
            _ => None,
        }
    }

    fn canonical(&self, e: IEl) -> IEl {
        match e {
            IEl::Tag(a, b, f) if a == b => {
                if let Some(d) = self.deflate(&a) {
                    if f == d {
                        return IEl::Node(a);
                    }
                }
                IEl::Tag(a, b, f)
            }
            other => other,
        }
    }

    fn tag(&self, a: Node, b: Node, f: El) -> IEl {
        self.canonical(IEl::Tag(a, b, f))
    }

    /// The base arrow carried by an element; nodes carry their identity.
    fn carrier(&self, e: &IEl) -> Option<(Node, Node, El)> {
        match e {
            IEl::Tag(a, b, f) => Some((a.clone(), b.clone(), *f)),
            IEl::Node(n) => {
                let d = self.deflate(n)?;
                Some((n.clone(), n.clone(), d))
            }
        }
    }

    pub fn node_element(&self, n: Node) -> IEl {
        IEl::Node(n)
    }
}

impl IcccOps for Inflated {
    type El = IEl;

    fn label(&self) -> String {
        format!("inflate:{}", self.ccc.cat.name)
    }

    fn turnstile_is_arrow(&self) -> bool {
        false
    }

    fn elements(&self) -> Vec<IEl> {
        self.elements.clone()
    }

    fn el_name(&self, e: &IEl) -> String {
        fn node_name(infl: &Inflated, n: &Node) -> String {
            match n {
                Node::Base(o) => infl.ccc.cat.el_name(*o),
                Node::Turn(a, b) => format!("({}|-{})", node_name(infl, a), node_name(infl, b)),
                Node::Wedge(a, b) => format!("({}&{})", node_name(infl, a), node_name(infl, b)),
            }
        }
        match e {
            IEl::Node(n) => node_name(self, n),
            IEl::Tag(a, b, f) => format!(
                "{}:{}->{}",
                self.ccc.cat.el_name(*f),
                node_name(self, a),
                node_name(self, b)
            ),
        }
    }

    fn src(&self, e: &IEl) -> IEl {
        match e {
            IEl::Node(n) => IEl::Node(n.clone()),
            IEl::Tag(a, _, _) => IEl::Node(a.clone()),
        }
    }

    fn tgt(&self, e: &IEl) -> IEl {
        match e {
            IEl::Node(n) => IEl::Node(n.clone()),
            IEl::Tag(_, b, _) => IEl::Node(b.clone()),
        }
    }

    fn compose(&self, f: &IEl, g: &IEl) -> Option<IEl> {
        if self.src(f) != self.tgt(g) {
            return None;
        }
        if self.is_identity_el(f) {
            return Some(g.clone());
        }
        if self.is_identity_el(g) {
            return Some(f.clone());
        }
        let (ga, _, gf) = self.carrier(g)?;
        let (_, fb, ff) = self.carrier(f)?;
        let c = self.ccc.cat.compose(ff, gf)?;
        Some(self.tag(ga, fb, c))
    }

    fn eq(&self, a: &IEl, b: &IEl) -> Verdict {
        if a == b {
            Verdict::Equal
        } else {
            Verdict::Distinct
        }
    }

    fn is_valid(&self, _e: &IEl) -> bool {
        true
    }

    fn is_constant(&self, e: &IEl) -> bool {
        fn top_node(infl: &Inflated, n: &Node) -> bool {
            match n {
                Node::Base(o) => *o == infl.ccc.terminal,
                Node::Turn(a, b) | Node::Wedge(a, b) => top_node(infl, a) && top_node(infl, b),
            }
        }
        match e {
            IEl::Node(n) => top_node(self, n),
            IEl::Tag(a, b, _) => top_node(self, a) && top_node(self, b),
        }
    }

    fn turnstile(&self, a: &IEl, b: &IEl) -> Option<IEl> {
        let (na, nb) = (self.node_of(a)?, self.node_of(b)?);
        let n = Node::Turn(Box::new(na), Box::new(nb));
        self.deflate(&n)?;
        Some(IEl::Node(n))
    }

    fn top(&self) -> IEl {
        IEl::Node(Node::Base(self.ccc.terminal))
    }

    fn wedge(&self, a: &IEl, b: &IEl) -> Option<IEl> {
        match (a, b) {
            (IEl::Node(na), IEl::Node(nb)) => {
                let n = Node::Wedge(Box::new(na.clone()), Box::new(nb.clone()));
                self.deflate(&n)?;
                Some(IEl::Node(n))
            }
            _ => {
                let (sa, ta, fa) = self.carrier(a)?;
                let (sb, tb, fb) = self.carrier(b)?;
                let sw = Node::Wedge(Box::new(sa.clone()), Box::new(sb.clone()));
                let tw = Node::Wedge(Box::new(ta), Box::new(tb));
                self.deflate(&tw)?;
                let (dsa, dsb) = (self.deflate(&sa)?, self.deflate(&sb)?);
                let &(_, p1, p2) = self.ccc.product.get(&(dsa, dsb))?;
                let f1 = self.ccc.cat.compose(fa, p1)?;
                let f2 = self.ccc.cat.compose(fb, p2)?;
                let m = self.ccc.pair_arrow(f1, f2)?;
                Some(self.tag(sw, tw, m))
            }
        }
    }

    fn pair(&self, a: &IEl, b: &IEl) -> Option<IEl> {
        let (sa, ta, fa) = self.carrier(a)?;
        let (sb, tb, fb) = self.carrier(b)?;
        if sa != sb {
            return None;
        }
        let tw = Node::Wedge(Box::new(ta), Box::new(tb));
        self.deflate(&tw)?;
        let m = self.ccc.pair_arrow(fa, fb)?;
        Some(self.tag(sa, tw, m))
    }

    fn star(&self, a: &IEl) -> Option<IEl> {
        let (s, t, f) = self.carrier(a)?;
        let Node::Wedge(c, aa) = s else { return None };
        let (dc, da) = (self.deflate(&c)?, self.deflate(&aa)?);
        let h = self.ccc.transpose(f, dc, da)?;
        let tn = Node::Turn(aa, Box::new(t));
        self.deflate(&tn)?;
        Some(self.tag((*c).clone(), tn, h))
    }

    fn good_pair(&self, a: &IEl, b: &IEl) -> Option<(IEl, IEl)> {
        let (na, nb) = (self.node_of(a)?, self.node_of(b)?);
        let (da, db) = (self.deflate(&na)?, self.deflate(&nb)?);
        let &(_, p1, p2) = self.ccc.product.get(&(da, db))?;
        let w = Node::Wedge(Box::new(na.clone()), Box::new(nb.clone()));
        Some((self.tag(w.clone(), na, p1), self.tag(w, nb, p2)))
    }

    fn evaluation(&self, a: &IEl, b: &IEl) -> Option<IEl> {
        let (na, nb) = (self.node_of(a)?, self.node_of(b)?);
        let (da, db) = (self.deflate(&na)?, self.deflate(&nb)?);
        let &(_, ev) = self.ccc.exponential.get(&(da, db))?;
        let t = Node::Turn(Box::new(na.clone()), Box::new(nb.clone()));
        self.deflate(&t)?;
        let s = Node::Wedge(Box::new(t), Box::new(na));
        self.deflate(&s)?;
        Some(self.tag(s, nb, ev))
    }

    fn identity(&self, e: &IEl) -> Option<IEl> {
        match e {
            IEl::Node(n) => Some(IEl::Node(n.clone())),
            IEl::Tag(_, _, _) => None,
        }
    }

    fn is_identity_el(&self, e: &IEl) -> bool {
        matches!(e, IEl::Node(_))
    }

    fn terminal_arrow(&self, a: &IEl) -> Option<IEl> {
        let na = self.node_of(a)?;
        let da = self.deflate(&na)?;
        let t = self.ccc.terminal_of(da)?;
        Some(self.tag(na, Node::Base(self.ccc.terminal), t))
    }

    fn unwedge(&self, e: &IEl) -> Option<(IEl, IEl)> {
        match e {
            IEl::Node(Node::Wedge(a, b)) => {
                Some((IEl::Node((**a).clone()), IEl::Node((**b).clone())))
            }
            _ => None,
        }
    }

    fn as_projection(&self, e: &IEl) -> Option<(IEl, IEl, bool)> {
        let IEl::Tag(s, t, f) = e else {
            // identity-collapsed projections: pi_{a,a}-style arrows may have
            // collapsed onto the wedge node; not projections any more
            return None;
        };
        let Node::Wedge(a, b) = s else { return None };
        let (da, db) = (self.deflate(a)?, self.deflate(b)?);
        let &(_, p1, p2) = self.ccc.product.get(&(da, db))?;
        if t == &**a && *f == p1 {
            return Some((IEl::Node((**a).clone()), IEl::Node((**b).clone()), false));
        }
        if t == &**b && *f == p2 {
            return Some((IEl::Node((**a).clone()), IEl::Node((**b).clone()), true));
        }
        None
    }

    fn as_evaluation(&self, e: &IEl) -> Option<(IEl, IEl)> {
        let IEl::Tag(s, t, f) = e else { return None };
        let Node::Wedge(ta, a) = s else { return None };
        let Node::Turn(a2, b) = &**ta else { return None };
        if a2 != a || **b != *t {
            return None;
        }
        let (da, db) = (self.deflate(a)?, self.deflate(b)?);
        let &(_, ev) = self.ccc.exponential.get(&(da, db))?;
        if *f == ev {
            Some((IEl::Node((**a).clone()), IEl::Node((**b).clone())))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iccc::check_iccc;

    fn chain3_ccc() -> CccData {
        CccData::from_thin(&fixtures::chain3()).expect("chain3 is a Heyting chain")
    }

    #[test]
    fn thin_ccc_tables() {
        let ccc = chain3_ccc();
        let c = &ccc.cat;
        assert_eq!(c.el_name(ccc.terminal), "2");
        assert_eq!(c.el_name(ccc.product[&(c.el("1").unwrap(), c.el("2").unwrap())].0), "1");
        assert_eq!(c.el_name(ccc.exponential[&(c.el("2").unwrap(), c.el("0").unwrap())].0), "0");
        assert_eq!(c.el_name(ccc.exponential[&(c.el("1").unwrap(), c.el("2").unwrap())].0), "2");
    }

    #[test]
    fn terminal_only_inflation() {
        let t = fixtures::trivial();
        let ccc = CccData::from_thin(&t).unwrap();
        let infl = inflate_ccc(&ccc, 1);
        assert_eq!(infl.nodes.len(), 1);
        let r = check_iccc(&infl);
        assert!(r.passed(), "{:?}", r.entries);
    }

    #[test]
    fn inflated_chain3_passes_iccc() {
        let infl = inflate_ccc(&chain3_ccc(), 2);
        assert!(infl.nodes.len() > 3);
        let r = check_iccc(&infl);
        assert!(
            r.passed(),
            "{:?}",
            r.entries.iter().filter(|e| !e.informational).collect::<Vec<_>>()
        );
    }

    #[test]
    fn hom_identification() {
        let infl = inflate_ccc(&chain3_ccc(), 2);
        let c = &infl.ccc.cat;
        let one = Node::Base(c.el("1").unwrap());
        let zero = Node::Base(c.el("0").unwrap());
        let turn = Node::Turn(Box::new(one.clone()), Box::new(zero.clone()));
        assert_eq!(infl.deflate(&turn), c.el("0"));
        // hom(0, 1 |- 0) is a single identity-collapsed element: the arrow
        // 0 -> deflate(1|-0) = 0 is the identity, so it appears as a tag
        // from the base node to the turnstile node
        let tags: Vec<_> = infl
            .elements()
            .into_iter()
            .filter(|e| matches!(e, IEl::Tag(a, b, _) if *a == zero && *b == turn))
            .collect();
        assert_eq!(tags.len(), 1, "{tags:?}");
    }

    #[test]
    fn deflate_functorial() {
        let infl = inflate_ccc(&chain3_ccc(), 2);
        let els = infl.elements();
        for a in &els {
            for b in &els {
                if let Some(c) = infl.compose(a, b) {
                    let (fa, fb, fc) = (
                        infl.carrier(a).unwrap().2,
                        infl.carrier(b).unwrap().2,
                        infl.carrier(&c).unwrap().2,
                    );
                    assert_eq!(infl.ccc.cat.compose(fa, fb), Some(fc));
                }
            }
        }
    }
}
