//! Canonical JSON interchange for presentations.
//!
//! Schema:
//! ```json
//! {
//!   "name": "arrow-gc",
//!   "depthBound": 2,
//!   "elements": ["a", "b", {"id": "1(b)", "identityOf": "b"}],
//!   "src": {"a": "a", "b": "a"},
//!   "tgt": {"a": "a", "b": "b"},
//!   "order": [["x", "y"]],
//!   "comp": {"a|a": "a", "b|a": "b"}
//! }
//! ```
//! The composition key separator is the literal `|`. Serialization is
//! canonical: elements and map keys are sorted, so save . load . save
//! equals save byte for byte.

use super::{ElemDecl, ElemKind, GenCat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("dangling identifier {0}")]
    Dangling(String),
    #[error("order is not antisymmetric on {0}, {1}")]
    OrderNotAntisymmetric(String, String),
    #[error("duplicate composite for {0}|{1}")]
    DuplicateComposite(String, String),
    #[error("identity tag {0} must have its element as source and target")]
    BadIdentityTag(String),
    #[error("composition key {0} lacks the | separator")]
    BadCompKey(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ElemJson {
    Proper(String),
    Tag {
        id: String,
        #[serde(rename = "identityOf")]
        identity_of: String,
    },
}

#[derive(Serialize, Deserialize)]
struct GenCatJson {
    name: String,
    #[serde(rename = "depthBound")]
    depth_bound: u32,
    elements: Vec<ElemJson>,
    src: BTreeMap<String, String>,
    tgt: BTreeMap<String, String>,
    order: Vec<(String, String)>,
    comp: BTreeMap<String, String>,
}

impl GenCat {
    pub fn to_json(&self) -> String {
        let mut elements: Vec<ElemJson> = self
            .elems
            .iter()
            .map(|e| match &e.kind {
                ElemKind::Proper => ElemJson::Proper(e.name.clone()),
                ElemKind::IdTag { of } => {
                    ElemJson::Tag { id: e.name.clone(), identity_of: of.clone() }
                }
            })
            .collect();
        elements.sort_by(|a, b| name_of(a).cmp(name_of(b)));
        let src = self
            .elems
            .iter()
            .map(|e| (e.name.clone(), self.elems[e.src as usize].name.clone()))
            .collect();
        let tgt = self
            .elems
            .iter()
            .map(|e| (e.name.clone(), self.elems[e.tgt as usize].name.clone()))
            .collect();
        let mut order = self.order_gen.clone();
        order.sort();
        order.dedup();
        let comp = self
            .comp
            .iter()
            .map(|(&(a, b), &c)| {
                (
                    format!("{}|{}", self.elems[a as usize].name, self.elems[b as usize].name),
                    self.elems[c as usize].name.clone(),
                )
            })
            .collect();
        let doc = GenCatJson {
            name: self.name.clone(),
            depth_bound: self.depth_bound,
            elements,
            src,
            tgt,
            order,
            comp,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<GenCat, PresentationError> {
        let doc: GenCatJson = serde_json::from_str(text)?;
        let mut decls = Vec::new();
        let names: Vec<String> = doc.elements.iter().map(|e| name_of(e).to_string()).collect();
        let idx: BTreeMap<&str, u32> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), i as u32)).collect();
        let look = |m: &BTreeMap<String, String>, n: &str| -> Result<u32, PresentationError> {
            let v = m.get(n).ok_or_else(|| PresentationError::Dangling(n.to_string()))?;
            idx.get(v.as_str()).copied().ok_or_else(|| PresentationError::Dangling(v.clone()))
        };
        for e in &doc.elements {
            let n = name_of(e);
            let kind = match e {
                ElemJson::Proper(_) => ElemKind::Proper,
                ElemJson::Tag { identity_of, .. } => ElemKind::IdTag { of: identity_of.clone() },
            };
            let (src, tgt) = match &kind {
                // tags may omit src/tgt entries: they are forced
                ElemKind::IdTag { of } => {
                    let a = *idx
                        .get(of.as_str())
                        .ok_or_else(|| PresentationError::Dangling(of.clone()))?;
                    (
                        doc.src.get(n).map_or(Ok(a), |_| look(&doc.src, n))?,
                        doc.tgt.get(n).map_or(Ok(a), |_| look(&doc.tgt, n))?,
                    )
                }
                ElemKind::Proper => (look(&doc.src, n)?, look(&doc.tgt, n)?),
            };
            decls.push(ElemDecl { name: n.to_string(), kind, src, tgt });
        }
        let mut comp = Vec::new();
        for (k, v) in &doc.comp {
            let (a, b) = k
                .split_once('|')
                .ok_or_else(|| PresentationError::BadCompKey(k.clone()))?;
            comp.push(((a.to_string(), b.to_string()), v.clone()));
        }
        GenCat::build(doc.name, doc.depth_bound, decls, doc.order, comp)
    }
}

fn name_of(e: &ElemJson) -> &str {
    match e {
        ElemJson::Proper(n) => n,
        ElemJson::Tag { id, .. } => id,
    }
}

#[cfg(test)]
mod tests {
    use crate::gencat::{check_axioms, close_identities, gencat, GenCat};

    #[test]
    fn canonical_round_trip() {
        let g = gencat(
            "arrow-gc",
            &[("a", "a", "a"), ("b", "a", "b")],
            &[],
            &[(("a", "a"), "a"), (("b", "a"), "b")],
        );
        let s1 = g.to_json();
        let g2 = GenCat::from_json(&s1).unwrap();
        let s2 = g2.to_json();
        assert_eq!(s1, s2);
        assert_eq!(g, g2);
        assert!(check_axioms(&g2).passed());
    }

    #[test]
    fn tags_round_trip() {
        let g = close_identities(
            &gencat(
                "arrow-gc",
                &[("a", "a", "a"), ("b", "a", "b")],
                &[],
                &[(("a", "a"), "a"), (("b", "a"), "b")],
            ),
            1,
        );
        let s = g.to_json();
        let g2 = GenCat::from_json(&s).unwrap();
        assert_eq!(g, g2);
        assert!(g2.el("1(b)").is_some());
    }
}
