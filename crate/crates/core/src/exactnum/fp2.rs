//! F_{p²} = F_p[θ]/(θ² − d) with d the smallest positive non-residue.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::FpElt;

pub fn canonical_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&d| !FpElt::new(p, d).is_square())
        .expect("odd prime has a non-residue")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Elt {
    pub c0: FpElt,
    pub c1: FpElt,
    pub d: FpElt,
}

impl Fp2Elt {
    pub fn new(p: u64, c0: u64, c1: u64) -> Self {
        Fp2Elt {
            c0: FpElt::new(p, c0),
            c1: FpElt::new(p, c1),
            d: FpElt::new(p, canonical_nonresidue(p)),
        }
    }

    pub fn from_fp(x: FpElt) -> Self {
        Fp2Elt::new(x.p, x.value, 0)
    }

    pub fn theta(p: u64) -> Self {
        Fp2Elt::new(p, 0, 1)
    }

    pub fn p(&self) -> u64 {
        self.c0.p
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c0.value == 1 && self.c1.is_zero()
    }

    pub fn in_base_field(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn norm(&self) -> FpElt {
        self.c0 * self.c0 - self.d * self.c1 * self.c1
    }

    pub fn conj(&self) -> Self {
        Fp2Elt { c0: self.c0, c1: -self.c1, d: self.d }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Fp2Elt { c0: c.c0 * n, c1: c.c1 * n, d: self.d })
    }

    /// Every element of F_{p²}, in lexicographic (c0, c1) order.
    pub fn all(p: u64) -> impl Iterator<Item = Fp2Elt> {
        (0..p).flat_map(move |a| (0..p).map(move |b| Fp2Elt::new(p, a, b)))
    }
}

impl fmt::Display for Fp2Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{} + {}θ", self.c0, self.c1)
        }
    }
}

impl Add for Fp2Elt {
    type Output = Fp2Elt;
    fn add(self, rhs: Fp2Elt) -> Fp2Elt {
        Fp2Elt { c0: self.c0 + rhs.c0, c1: self.c1 + rhs.c1, d: self.d }
    }
}

impl Sub for Fp2Elt {
    type Output = Fp2Elt;
    fn sub(self, rhs: Fp2Elt) -> Fp2Elt {
        Fp2Elt { c0: self.c0 - rhs.c0, c1: self.c1 - rhs.c1, d: self.d }
    }
}

impl Neg for Fp2Elt {
    type Output = Fp2Elt;
    fn neg(self) -> Fp2Elt {
        Fp2Elt { c0: -self.c0, c1: -self.c1, d: self.d }
    }
}

impl Mul for Fp2Elt {
    type Output = Fp2Elt;
    fn mul(self, rhs: Fp2Elt) -> Fp2Elt {
        Fp2Elt {
            c0: self.c0 * rhs.c0 + self.d * self.c1 * rhs.c1,
            c1: self.c0 * rhs.c1 + self.c1 * rhs.c0,
            d: self.d,
        }
    }
}

/// The two roots λ, λ⁻¹ of X² − cX + 1 over F_{p²}.
///
/// A repeated root (c = ±2) is returned twice. When the roots are
/// F_p-rational they come back with c1 = 0, the smaller value first.
pub fn fp2_solve_monic_quadratic(c: FpElt) -> (Fp2Elt, Fp2Elt) {
    let p = c.p;
    let half = FpElt::new(p, 2).inv().expect("p odd");
    let disc = c * c - FpElt::new(p, 4);
    let (r1, r2) = if let Some(s) = disc.sqrt() {
        let a = Fp2Elt::from_fp((c + s) * half);
        let b = Fp2Elt::from_fp((c - s) * half);
        if a.c0.value <= b.c0.value {
            (a, b)
        } else {
            (b, a)
        }
    } else {
        let d = FpElt::new(p, canonical_nonresidue(p));
        let y = (disc * d.inv().expect("d nonzero"))
            .sqrt()
            .expect("disc/d is a square when disc is not");
        let c0 = (c * half).value;
        let c1 = y * half;
        (Fp2Elt::new(p, c0, c1.value), Fp2Elt::new(p, c0, (-c1).value))
    };
    debug_assert!((r1 * r2).is_one());
    (r1, r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonresidues() {
        assert_eq!(canonical_nonresidue(5), 2);
        assert_eq!(canonical_nonresidue(7), 3);
        assert_eq!(canonical_nonresidue(11), 2);
        assert_eq!(canonical_nonresidue(13), 2);
        assert_eq!(canonical_nonresidue(17), 3);
    }

    #[test]
    fn field_inverse_exhaustive() {
        for p in [5u64, 7] {
            for x in Fp2Elt::all(p).filter(|x| !x.is_zero()) {
                assert!((x * x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        let (a, b) = fp2_solve_monic_quadratic(FpElt::new(5, 2));
        assert!(a.is_one() && b.is_one());

        let (a, b) = fp2_solve_monic_quadratic(FpElt::new(5, 0));
        let minus_one = Fp2Elt::new(5, 4, 0);
        assert_eq!(a * a, minus_one);
        assert_eq!(b * b, minus_one);
        assert!((a * b).is_one());
        // −1 = 2² in F_5, so both roots are rational
        assert!(a.in_base_field() && b.in_base_field());
        // brute force: exactly two elements of F_25 square to -1
        let brute: Vec<_> = Fp2Elt::all(5).filter(|x| *x * *x == minus_one).collect();
        assert_eq!(brute.len(), 2);
        assert!(brute.contains(&a) && brute.contains(&b));

        let (a, b) = fp2_solve_monic_quadratic(FpElt::new(7, 3));
        assert!(!a.in_base_field() && !b.in_base_field());
        assert_eq!((a + b).c0.value, 3);
        assert_eq!((a + b).c1.value, 0);
        let roots: Vec<_> = Fp2Elt::all(7)
            .filter(|x| *x * *x - Fp2Elt::new(7, 3, 0) * *x + Fp2Elt::new(7, 1, 0) == Fp2Elt::new(7, 0, 0))
            .collect();
        assert_eq!(roots, {
            let mut v = vec![a, b];
            v.sort_by_key(|x| (x.c0.value, x.c1.value));
            v
        });
    }

    #[test]
    fn quadratic_exhaustive() {
        for p in [5u64, 7, 11] {
            for c in 0..p {
                let c = FpElt::new(p, c);
                let (a, b) = fp2_solve_monic_quadratic(c);
                assert!((a * b).is_one());
                assert_eq!(a + b, Fp2Elt::from_fp(c));
                let split = (c * c - FpElt::new(p, 4)).is_square();
                assert_eq!(a.in_base_field(), split);
                assert_eq!(b.in_base_field(), split);
            }
        }
    }
}
