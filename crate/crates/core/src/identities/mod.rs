//! Exact verification of the matrix systems and combinatorial identities
//! behind the boundary constants.
//!
//! [`systems`] rebuilds the five matrix equations, solves them by exact
//! elimination and compares the solution with the closed forms.
//! [`catalog`] verifies the binomial-harmonic identities one parameter at a
//! time, and [`wz`] checks the WZ certificate for the last of them.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exactnum::{QuadElt, Rational};

pub mod catalog;
pub mod systems;
pub mod wz;

pub use catalog::{verify_identity, IdentityId, IdentityName};
pub use systems::{build_system, closed_form, solve_affine, verify_appendix, AppendixId, AppendixSystem};
pub use wz::wz_certificate_check;

/// α + β·L with L symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineInL {
    pub const_part: Rational,
    pub l_coeff: Rational,
}

impl AffineInL {
    pub fn new(const_part: Rational, l_coeff: Rational) -> Self {
        AffineInL { const_part, l_coeff }
    }

    pub fn constant(c: Rational) -> Self {
        AffineInL { const_part: c, l_coeff: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// L − c.
    pub fn l_minus(c: Rational) -> Self {
        AffineInL { const_part: -c, l_coeff: num_traits::One::one() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AffineInL { const_part: &self.const_part * s, l_coeff: &self.l_coeff * s }
    }

    pub fn is_zero(&self) -> bool {
        self.const_part.is_zero() && self.l_coeff.is_zero()
    }

    pub fn evaluate(&self, l: &QuadElt) -> QuadElt {
        &l.scale(&self.l_coeff) + &QuadElt::rational(l.p, self.const_part.clone())
    }
}

impl fmt::Display for AffineInL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.const_part.is_zero(), self.l_coeff.is_zero()) {
            (_, true) => write!(f, "{}", self.const_part),
            (true, false) => write!(f, "{}*L", self.l_coeff),
            (false, false) => write!(f, "{} + {}*L", self.const_part, self.l_coeff),
        }
    }
}

impl Add for &AffineInL {
    type Output = AffineInL;
    fn add(self, rhs: &AffineInL) -> AffineInL {
        AffineInL {
            const_part: &self.const_part + &rhs.const_part,
            l_coeff: &self.l_coeff + &rhs.l_coeff,
        }
    }
}

impl Sub for &AffineInL {
    type Output = AffineInL;
    fn sub(self, rhs: &AffineInL) -> AffineInL {
        self + &(-rhs)
    }
}

impl Neg for &AffineInL {
    type Output = AffineInL;
    fn neg(self) -> AffineInL {
        AffineInL { const_part: -&self.const_part, l_coeff: -&self.l_coeff }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn affine_arithmetic() {
        let a = AffineInL::l_minus(rat(3, 2));
        let b = AffineInL::new(int(1), int(-1));
        assert_eq!(&a + &b, AffineInL::constant(rat(-1, 2)));
        assert_eq!((&a - &b).to_string(), "-5/2 + 2*L");
        assert_eq!(a.scale(&int(2)), AffineInL::new(int(-3), int(2)));
        let l = QuadElt::parse("1+1*sqrt(5)", 5).unwrap();
        assert_eq!(a.evaluate(&l), QuadElt::parse("-1/2+1*sqrt(5)", 5).unwrap());
    }
}
