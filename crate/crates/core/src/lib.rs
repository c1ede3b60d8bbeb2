//! Computational kernel for finitely presented generalized categories.
//!
//! A generalized category is a partially ordered carrier with source and
//! target endomaps and a composition defined exactly on the pairs whose
//! source approximates the target. Sources and targets of elements may be
//! arbitrary elements, so the same structure hosts ordinary categories,
//! higher cells, and objectless examples.
//!
//! The crate provides:
//!
//! - the data model and axiom checker for presentations ([`gencat`]);
//! - functors, natural transformations, adjunctions and the strict
//!   2-category laws ([`functor`]);
//! - brute-force limit search and the products-plus-equalizers
//!   construction ([`limits`]);
//! - monads, Kleisli triples, and the generalized Kleisli category
//!   ([`monad`]);
//! - a generalized typed lambda calculus with parser, normalizer and
//!   capture-avoiding substitution ([`lambda`]);
//! - ideal cartesian closed categories, polynomials over an indeterminate
//!   and the bracket-abstraction pipeline ([`iccc`], [`poly`], [`inflate`]);
//! - the symbol category of a calculus, its internal language, and the
//!   equivalence between the two ([`clam`]);
//! - sieves, Grothendieck topologies, sheaf checking, subobject
//!   classifiers and Lawvere-Tierney topologies on finite sites ([`sheaf`]).

pub mod report;

pub mod gencat;

pub mod functor;

pub mod limits;

pub mod monad;

pub mod lambda;

pub mod iccc;
pub mod inflate;
pub mod poly;
pub mod clam;

pub mod sheaf;

pub mod fixtures;

pub use report::{Report, ReportEntry, Status, Verdict};
