//! Compactly induced representations ind_{IZ}^G ρ with finite support, the
//! Iwahori-Hecke operators on them, and checks of the algebra relations.
//!
//! Cosets G/IZ are the oriented edges of the Bruhat–Tits tree; see
//! [`coset`] for the normal form and [`tree`] for an independent lattice
//! model used as a cross-check.

pub mod coset;
pub mod group;
pub mod operators;
pub mod relations;
pub mod tree;
pub mod vector;
pub mod weight;

pub use coset::{canonicalize, Canonical, CosetRep};
pub use group::{iz_membership, GroupElt, IzData};
pub use operators::{apply_operator, apply_operator_at, HeckeAlgebra, HeckeOp};
pub use relations::{check_characters, check_coset_invariance, check_sym_powers, check_tree, hecke_check, RelationOutcome};
pub use vector::InducedVec;
pub use weight::{Character, SymPower, SymVec, Weight};
