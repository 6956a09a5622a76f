//! Mod-p reductions of the semi-stable representations V_{k,L} for
//! 3 ≤ k ≤ p+1, together with exact verification suites for the identities,
//! matrix systems and Hecke relations that the classification rests on.
//!
//! The classification is [`classifier::classify`]. The remaining modules
//! check its supporting facts: [`identities`] rebuilds and solves the
//! matrix systems and verifies the binomial-harmonic identities,
//! [`bmcheck`] compares the constants with the Breuil–Mézard formulas,
//! [`hecke`] verifies the Iwahori-Hecke operator relations on the
//! Bruhat–Tits tree, and [`padiclog`] covers the branch log_L and the
//! coefficient lemma used to build test functions.

pub mod bmcheck;
pub mod classifier;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod hecke;
pub mod identities;
pub mod padiclog;

pub use error::{Error, Result};
