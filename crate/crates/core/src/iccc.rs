//! Ideal categories and ideal cartesian closed categories, as an
//! operations trait over a finite fragment, plus the exhaustive checkers.

use crate::report::{Report, Verdict};
use std::fmt::Debug;

/// Operations of an ideal cartesian closed category on a finite fragment.
/// Partial operations return `None` where the fragment (or the structure)
/// does not define them; the checkers quantify over defined instances.
pub trait IcccOps {
    type El: Clone + Eq + Ord + Debug;

    fn label(&self) -> String;
    fn elements(&self) -> Vec<Self::El>;
    fn el_name(&self, e: &Self::El) -> String;
    fn src(&self, e: &Self::El) -> Self::El;
    fn tgt(&self, e: &Self::El) -> Self::El;
    /// f after g.
    fn compose(&self, f: &Self::El, g: &Self::El) -> Option<Self::El>;
    fn eq(&self, a: &Self::El, b: &Self::El) -> Verdict;
    fn is_valid(&self, e: &Self::El) -> bool;
    /// Membership in the constant set K.
    fn is_constant(&self, e: &Self::El) -> bool;
    fn turnstile(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;
    fn top(&self) -> Self::El;
    fn wedge(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;
    fn pair(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;
    fn star(&self, a: &Self::El) -> Option<Self::El>;
    /// The canonical good pair for a pair of subjects.
    fn good_pair(&self, a: &Self::El, b: &Self::El) -> Option<(Self::El, Self::El)>;
    /// The good evaluation for (a, b).
    fn evaluation(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;
    /// Identity element of e, when the fragment carries it.
    fn identity(&self, e: &Self::El) -> Option<Self::El>;
    fn is_identity_el(&self, e: &Self::El) -> bool;
    /// Decompose a wedge element into its factors.
    fn unwedge(&self, e: &Self::El) -> Option<(Self::El, Self::El)>;
    /// Recognize e as the first (false) or second (true) projection of a
    /// subject pair.
    fn as_projection(&self, e: &Self::El) -> Option<(Self::El, Self::El, bool)>;
    /// Recognize e as the evaluation of a subject pair.
    fn as_evaluation(&self, e: &Self::El) -> Option<(Self::El, Self::El)>;

    /// Whether turnstile results are arrows between their arguments (the
    /// quotient reading) rather than hom objects (the classical reading).
    fn turnstile_is_arrow(&self) -> bool {
        true
    }

    /// Subjects of the fragment: sources and targets of elements.
    fn subjects(&self) -> Vec<Self::El> {
        let mut out: Vec<Self::El> = Vec::new();
        for e in self.elements() {
            for s in [self.src(&e), self.tgt(&e)] {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Terminal arrow a |- top.
    fn terminal_arrow(&self, a: &Self::El) -> Option<Self::El> {
        self.turnstile(a, &self.top())
    }

    /// The name of f: the transpose of f . pi'_{top, src f}.
    fn name_of(&self, f: &Self::El) -> Option<Self::El> {
        let (_, p2) = self.good_pair(&self.top(), &self.src(f))?;
        let fp = self.compose(f, &p2)?;
        self.star(&fp)
    }
}

fn expect_eq<I: IcccOps>(
    r: &mut Report,
    i: &I,
    law: &str,
    lhs: &I::El,
    rhs: &I::El,
    witnesses: Vec<String>,
) {
    match i.eq(lhs, rhs) {
        Verdict::Equal => {}
        Verdict::Distinct => {
            let mut w = witnesses;
            w.push(i.el_name(lhs));
            w.push(i.el_name(rhs));
            r.violation(law, w, "sides differ");
        }
        Verdict::Unknown => {
            r.unknown(law, witnesses, "equality undecided at the fuel bound");
        }
    }
}

/// The ideal-category axioms, quantified over the fragment.
pub fn check_ideal_cat<I: IcccOps>(i: &I) -> Report {
    let mut r = Report::new(format!("idealcat:{}", i.label()));
    let els = i.elements();
    // turnstile endpoints: src(f |- g) = tgt f, tgt(f |- g) = tgt g
    // (asserted only in the quotient reading)
    if i.turnstile_is_arrow() {
        for a in &els {
            for b in &els {
                if let Some(t) = i.turnstile(a, b) {
                    expect_eq(&mut r, i, "turnstile_src", &i.src(&t), &i.tgt(a), vec![i.el_name(a), i.el_name(b)]);
                    expect_eq(&mut r, i, "turnstile_tgt", &i.tgt(&t), &i.tgt(b), vec![i.el_name(a), i.el_name(b)]);
                }
            }
        }
    }
    // absorption: f . (g |- src f) = (g |- tgt f), unless g = src f (then f),
    // unless f or the turnstile is constant
    for f in &els {
        for g in &els {
            let Some(t) = i.turnstile(g, &i.src(f)) else { continue };
            let Some(c) = i.compose(f, &t) else { continue };
            if i.is_constant(f) || i.is_constant(&t) {
                continue;
            }
            if i.eq(g, &i.src(f)).is_equal() {
                expect_eq(&mut r, i, "absorption_unit_right", &c, f, vec![i.el_name(f)]);
            } else if let Some(want) = i.turnstile(g, &i.tgt(f)) {
                expect_eq(&mut r, i, "absorption_right", &c, &want, vec![i.el_name(f), i.el_name(g)]);
            }
        }
    }
    // (tgt g |- f) . g = (src g |- f), unless f = tgt g (then g)
    for f in &els {
        for g in &els {
            let Some(t) = i.turnstile(&i.tgt(g), f) else { continue };
            let Some(c) = i.compose(&t, g) else { continue };
            if i.eq(f, &i.tgt(g)).is_equal() {
                expect_eq(&mut r, i, "absorption_unit_left", &c, g, vec![i.el_name(g)]);
            } else if let Some(want) = i.turnstile(&i.src(g), f) {
                expect_eq(&mut r, i, "absorption_left", &c, &want, vec![i.el_name(f), i.el_name(g)]);
            }
        }
    }
    // validity closure
    for f in &els {
        for g in &els {
            if let Some(c) = i.compose(f, g) {
                if i.is_valid(f) && i.is_valid(g) && !i.is_valid(&c) {
                    r.violation(
                        "validity_composition",
                        vec![i.el_name(f), i.el_name(g)],
                        "composite of valid elements is not valid",
                    );
                }
            }
        }
        if let Some(t) = i.turnstile(f, f) {
            if !i.is_valid(&t) {
                r.violation("validity_unit", vec![i.el_name(f)], "f |- f is not valid");
            }
        }
        if i.is_valid(f) {
            if let Some(t) = i.turnstile(&i.src(f), &i.tgt(f)) {
                if !i.is_valid(&t) {
                    r.violation(
                        "validity_witness",
                        vec![i.el_name(f)],
                        "inhabited type is not valid",
                    );
                }
            }
        }
    }
    r
}

/// The full ideal-CCC axioms on the fragment.
pub fn check_iccc<I: IcccOps>(i: &I) -> Report {
    let mut r = check_ideal_cat(i);
    let els = i.elements();
    let top = i.top();
    if !i.is_constant(&top) || !i.is_valid(&top) {
        r.violation("top", vec![], "top is not a valid constant");
    }
    expect_eq(&mut r, i, "top_endpoints", &i.src(&top), &top, vec![]);
    expect_eq(&mut r, i, "top_endpoints", &i.tgt(&top), &top, vec![]);

    // endpoint laws for wedge, pairing, transpose
    for a in &els {
        for b in &els {
            if let Some(w) = i.wedge(a, b) {
                if let (Some(ss), Some(tt)) = (
                    i.wedge(&i.src(a), &i.src(b)),
                    i.wedge(&i.tgt(a), &i.tgt(b)),
                ) {
                    expect_eq(&mut r, i, "wedge_src", &i.src(&w), &ss, vec![i.el_name(a), i.el_name(b)]);
                    expect_eq(&mut r, i, "wedge_tgt", &i.tgt(&w), &tt, vec![i.el_name(a), i.el_name(b)]);
                }
                if i.is_constant(a) && i.is_constant(b) && !i.is_constant(&w) {
                    r.violation("k_closure_wedge", vec![i.el_name(a), i.el_name(b)], "K not closed under wedge");
                }
            }
            if let Some(p) = i.pair(a, b) {
                expect_eq(&mut r, i, "pair_src", &i.src(&p), &i.src(a), vec![i.el_name(a), i.el_name(b)]);
                if let Some(tt) = i.wedge(&i.tgt(a), &i.tgt(b)) {
                    expect_eq(&mut r, i, "pair_tgt", &i.tgt(&p), &tt, vec![i.el_name(a), i.el_name(b)]);
                }
                if i.is_constant(a) && i.is_constant(b) && !i.is_constant(&p) {
                    r.violation("k_closure_pair", vec![i.el_name(a), i.el_name(b)], "K not closed under pairing");
                }
            }
        }
        if let Some(s) = i.star(a) {
            if let Some((c, d)) = i.unwedge(&i.src(a)) {
                expect_eq(&mut r, i, "star_src", &i.src(&s), &c, vec![i.el_name(a)]);
                if let Some(tt) = i.turnstile(&d, &i.tgt(a)) {
                    expect_eq(&mut r, i, "star_tgt", &i.tgt(&s), &tt, vec![i.el_name(a)]);
                }
            }
            if i.is_constant(a) && !i.is_constant(&s) {
                r.violation("k_closure_star", vec![i.el_name(a)], "K not closed under transpose");
            }
        }
    }

    // terminal arrow uniqueness: f : a -> top implies f = a |- top
    for f in &els {
        if i.eq(&i.tgt(f), &top).is_equal() {
            if let Some(want) = i.terminal_arrow(&i.src(f)) {
                expect_eq(&mut r, i, "terminal_unique", f, &want, vec![i.el_name(f)]);
            }
        }
    }

    // good pairs for every pair of subjects, with their equations
    let subjects = i.subjects();
    for a in &subjects {
        for b in &subjects {
            let Some((p1, p2)) = i.good_pair(a, b) else {
                r.violation(
                    "good_pair_exists",
                    vec![i.el_name(a), i.el_name(b)],
                    "no good pair for a pair of subjects",
                );
                continue;
            };
            if !i.is_valid(&p1) || !i.is_valid(&p2) {
                r.violation("good_pair_valid", vec![i.el_name(a), i.el_name(b)], "projections not valid");
            }
            if let Some(w) = i.wedge(a, b) {
                expect_eq(&mut r, i, "good_pair_src", &i.src(&p1), &w, vec![i.el_name(a), i.el_name(b)]);
            }
            expect_eq(&mut r, i, "good_pair_tgt", &i.tgt(&p1), a, vec![i.el_name(a), i.el_name(b)]);
            expect_eq(&mut r, i, "good_pair_tgt", &i.tgt(&p2), b, vec![i.el_name(a), i.el_name(b)]);
            // pi <f, g> = f, pi' <f, g> = g; <pi f, pi' f> = f;
            // <f pi, g pi'> = f /\ g
            // pairing needs common sources and matching targets; iterate the
            // relevant hom groups only
            let fa: Vec<&I::El> = els.iter().filter(|f| i.tgt(f) == *a).collect();
            let gb: Vec<&I::El> = els.iter().filter(|g| i.tgt(g) == *b).collect();
            for f in &fa {
                for g in &gb {
                    if i.src(f) != i.src(g) {
                        continue;
                    }
                    if let Some(fg) = i.pair(f, g) {
                        if let Some(c) = i.compose(&p1, &fg) {
                            expect_eq(&mut r, i, "gp_beta1", &c, f, vec![i.el_name(f), i.el_name(g)]);
                        }
                        if let Some(c) = i.compose(&p2, &fg) {
                            expect_eq(&mut r, i, "gp_beta2", &c, g, vec![i.el_name(f), i.el_name(g)]);
                        }
                    }
                }
            }
            let from_a: Vec<&I::El> = els.iter().filter(|f| i.src(f) == *a).collect();
            let from_b: Vec<&I::El> = els.iter().filter(|g| i.src(g) == *b).collect();
            for f in &from_a {
                for g in &from_b {
                    if let (Some(fp), Some(gp)) = (i.compose(f, &p1), i.compose(g, &p2)) {
                        if let (Some(pp), Some(w)) = (i.pair(&fp, &gp), i.wedge(f, g)) {
                            expect_eq(&mut r, i, "gp_wedge", &pp, &w, vec![i.el_name(f), i.el_name(g)]);
                        }
                    }
                }
            }
            let srcw = i.wedge(a, b);
            for f in &els {
                if srcw.as_ref().map_or(true, |w| i.tgt(f) != *w) {
                    continue;
                }
                if let (Some(pf), Some(ppf)) = (i.compose(&p1, f), i.compose(&p2, f)) {
                    if let Some(sp) = i.pair(&pf, &ppf) {
                        expect_eq(&mut r, i, "gp_surjective", &sp, f, vec![i.el_name(f)]);
                    }
                }
            }
        }
    }

    // good evaluations with Lambek's equations
    for a in &subjects {
        for b in &subjects {
            if i.good_pair(a, b).is_none() {
                continue;
            }
            let Some(ev) = i.evaluation(a, b) else {
                r.violation(
                    "good_evaluation_exists",
                    vec![i.el_name(a), i.el_name(b)],
                    "no good evaluation",
                );
                continue;
            };
            if !i.is_valid(&ev) {
                r.violation("good_evaluation_valid", vec![i.el_name(a), i.el_name(b)], "evaluation not valid");
            }
            if let (Some(t), Some(_)) = (i.turnstile(a, b), i.wedge(a, b)) {
                if let Some(want_src) = i.wedge(&t, a) {
                    expect_eq(&mut r, i, "evaluation_src", &i.src(&ev), &want_src, vec![i.el_name(a), i.el_name(b)]);
                }
                expect_eq(&mut r, i, "evaluation_tgt", &i.tgt(&ev), b, vec![i.el_name(a), i.el_name(b)]);
                // epsilon* = 1_{a |- b}
                if let (Some(st), Some(idt)) = (i.star(&ev), i.identity(&t)) {
                    expect_eq(&mut r, i, "evaluation_star", &st, &idt, vec![i.el_name(a), i.el_name(b)]);
                }
            }
            // epsilon . <f* . pi, pi'> = f and (epsilon . <f . pi, pi'>)* = f
            let t_ab = i.turnstile(a, b);
            for c in &subjects {
                let Some((pc1, pc2)) = i.good_pair(c, a) else { continue };
                let Some(ca) = i.wedge(c, a) else { continue };
                for f in &els {
                    // first law: f : c /\ a -> b
                    if i.src(f) == ca && i.eq(&i.tgt(f), b).is_equal() {
                        if let Some(fs) = i.star(f) {
                            if let Some(fspi) = i.compose(&fs, &pc1) {
                                if let Some(arg) = i.pair(&fspi, &pc2) {
                                    if let Some(out) = i.compose(&ev, &arg) {
                                        expect_eq(&mut r, i, "eval_beta", &out, f, vec![i.el_name(f)]);
                                    }
                                }
                            }
                        }
                    }
                    // second law: f : c -> (a |- b)
                    if i.src(f) == *c
                        && t_ab.as_ref().map_or(false, |t| i.eq(&i.tgt(f), t).is_equal())
                    {
                        if let Some(fpi) = i.compose(f, &pc1) {
                            if let Some(arg) = i.pair(&fpi, &pc2) {
                                if let Some(out) = i.compose(&ev, &arg) {
                                    if let Some(st) = i.star(&out) {
                                        expect_eq(&mut r, i, "eval_eta", &st, f, vec![i.el_name(f)]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r
}
