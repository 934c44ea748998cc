//! Exact analysis of the element-order class function Ξ(g) = |G|·o(g) on
//! small finite groups.
//!
//! Everything is computed in exact arithmetic: permutation groups with full
//! element enumeration ([`group`]), cyclotomic fields ℚ(ζₙ) with their
//! Galois action ([`cyclotomic`]), irreducible character tables by modular
//! eigenspace splitting and exact lifting ([`chartable`]), the multiplicity
//! analysis of Ξ including its Galois-orbit and Möbius coset formulas and
//! the minimality constant m(G) ([`xi`]), integer decompositions of Ξ over
//! characters induced from cyclic subgroups ([`artin`]), and a batch
//! verification scanner with built-in group families ([`catalog`],
//! [`report`]).

pub mod arith;
pub mod artin;
pub mod catalog;
pub mod chartable;
pub mod cyclotomic;
mod error;
mod fp;
pub mod group;
pub mod perm;
pub mod report;
pub mod xi;

pub use chartable::{CharacterTable, ClassFunction};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{close_group, ConjugacyData, Coset, FiniteGroup, Subgroup, DEFAULT_CAP};
pub use perm::Permutation;
