//! 2×2 matrices over Q standing in for elements of GL2(Q_p), and the
//! membership test for IZ (Iwahori times scalars).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::rational::{p_pow, rational_mod_p, vp};
use crate::exactnum::{int, FpElt, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElt {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl GroupElt {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let g = GroupElt { a, b, c, d };
        if g.det().is_zero() {
            return Err(Error::InvalidInput(format!("singular matrix {g}")));
        }
        Ok(g)
    }

    /// Integer entries; panics on a singular matrix.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        GroupElt::new(int(a), int(b), int(c), int(d)).expect("nonsingular")
    }

    pub fn identity() -> Self {
        GroupElt::from_ints(1, 0, 0, 1)
    }

    pub fn scalar(x: Rational) -> Self {
        GroupElt::new(x.clone(), Rational::zero(), Rational::zero(), x).expect("nonzero scalar")
    }

    /// α = (1, 0; 0, p).
    pub fn alpha(p: u64) -> Self {
        GroupElt::from_ints(1, 0, 0, p as i64)
    }

    /// β = (0, 1; p, 0).
    pub fn beta(p: u64) -> Self {
        GroupElt::from_ints(0, 1, p as i64, 0)
    }

    /// (1, 0; pλ, p) = β·(λ, 1; 1, 0).
    pub fn lower(p: u64, lambda: i64) -> Self {
        let p = p as i64;
        GroupElt::from_ints(1, 0, p * lambda, p)
    }

    /// (p, λ; 0, 1).
    pub fn upper(p: u64, lambda: i64) -> Self {
        GroupElt::from_ints(p as i64, lambda, 0, 1)
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &GroupElt) -> GroupElt {
        GroupElt {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> GroupElt {
        let det = self.det();
        GroupElt {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }

    pub fn scale(&self, x: &Rational) -> GroupElt {
        GroupElt { a: &self.a * x, b: &self.b * x, c: &self.c * x, d: &self.d * x }
    }

    pub fn det_valuation(&self, p: u64) -> i64 {
        vp(&self.det(), p).expect("nonsingular")
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// How an element of IZ sits there: p^scale·g ∈ I, with diagonal (ā, d̄) mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IzData {
    pub scale: i64,
    pub a_bar: FpElt,
    pub d_bar: FpElt,
}

/// Some iff g ∈ IZ.
pub fn iz_membership(g: &GroupElt, p: u64) -> Option<IzData> {
    let v = g.det_valuation(p);
    if v % 2 != 0 {
        return None;
    }
    let scale = -v / 2;
    let h = g.scale(&p_pow(p, scale));
    let integral = |x: &Rational| vp(x, p).is_none_or(|e| e >= 0);
    if !h.entries().into_iter().all(integral) {
        return None;
    }
    if !vp(&h.c, p).is_none_or(|e| e >= 1) {
        return None;
    }
    let a_bar = FpElt::new(p, rational_mod_p(&h.a, p)?);
    let d_bar = FpElt::new(p, rational_mod_p(&h.d, p)?);
    // Unit determinant and c ≡ 0 force both diagonal entries to be units.
    debug_assert!(!a_bar.is_zero() && !d_bar.is_zero());
    Some(IzData { scale, a_bar, d_bar })
}

impl IzData {
    pub fn identity(p: u64) -> Self {
        IzData { scale: 0, a_bar: FpElt::one(p), d_bar: FpElt::one(p) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let p = 5;
        assert_eq!(iz_membership(&GroupElt::identity(), p), Some(IzData::identity(p)));
        assert_eq!(iz_membership(&GroupElt::beta(p), p), None);
        let data = iz_membership(&GroupElt::scalar(int(5)), p).unwrap();
        assert_eq!(data.scale, -1);
        assert!(data.a_bar.value == 1 && data.d_bar.value == 1);
        // lower-left entry a unit: not Iwahori
        assert_eq!(iz_membership(&GroupElt::from_ints(1, 0, 1, 1), p), None);
        // det a unit but an entry with p in the denominator
        let g = GroupElt::new(int(1), Rational::new(1.into(), 5.into()), int(0), int(1)).unwrap();
        assert_eq!(iz_membership(&g, p), None);
        let g = GroupElt::from_ints(2, 7, 10, 3);
        let data = iz_membership(&g, p).unwrap();
        assert_eq!((data.a_bar.value, data.d_bar.value), (2, 3));
    }

    #[test]
    fn beta_squared_is_scalar() {
        let b = GroupElt::beta(7);
        assert_eq!(b.mul(&b), GroupElt::scalar(int(7)));
        assert_eq!(GroupElt::alpha(7).mul(&GroupElt::from_ints(0, 1, 1, 0)), b);
        assert!(b.mul(&b.inverse()).is_identity());
    }
}
