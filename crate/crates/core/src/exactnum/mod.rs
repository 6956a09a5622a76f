//! Exact arithmetic over Q, Q(√p), truncated Z_p, F_p and F_{p²}.
//!
//! Every value here is immutable; operations never round.

mod fp;
mod fp2;
mod halfint;
pub mod linalg;
mod padic;
mod quad;
pub mod rational;

pub use fp::FpElt;
pub use fp2::{canonical_nonresidue, fp2_solve_monic_quadratic, Fp2Elt};
pub use halfint::HalfInt;
pub use padic::{teichmuller, PadicTrunc, DEFAULT_PRECISION};
pub use quad::QuadElt;
pub use rational::{int, is_prime, rat, vp_rational, Integer, Rational};

pub fn vp_quad(x: &QuadElt) -> HalfInt {
    x.vp()
}

pub fn residue_mod_pi(x: &QuadElt) -> crate::error::Result<FpElt> {
    x.residue_mod_pi()
}
