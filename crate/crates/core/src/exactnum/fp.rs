use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// An element of F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FpElt {
    pub p: u64,
    pub value: u64,
}

impl FpElt {
    pub fn new(p: u64, value: u64) -> Self {
        FpElt { p, value: value % p }
    }

    pub fn from_i64(p: u64, value: i64) -> Self {
        FpElt { p, value: value.rem_euclid(p as i64) as u64 }
    }

    pub fn zero(p: u64) -> Self {
        FpElt { p, value: 0 }
    }

    pub fn one(p: u64) -> Self {
        FpElt { p, value: 1 % p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = FpElt::one(self.p);
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self) -> bool {
        self.is_zero() || self.pow((self.p - 1) / 2).value == 1
    }

    /// A square root by Tonelli–Shanks, if one exists. Returns the smaller
    /// of the two roots (as integers in [0, p)).
    pub fn sqrt(self) -> Option<Self> {
        if self.is_zero() {
            return Some(self);
        }
        if !self.is_square() {
            return None;
        }
        let p = self.p;
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .map(|z| FpElt::new(p, z))
            .find(|z| !z.is_square())
            .expect("p odd has a non-residue");
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        let other = -r;
        Some(if other.value < r.value { other } else { r })
    }
}

impl fmt::Display for FpElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpElt {
    type Output = FpElt;
    fn add(self, rhs: FpElt) -> FpElt {
        debug_assert_eq!(self.p, rhs.p);
        FpElt { p: self.p, value: ((self.value as u128 + rhs.value as u128) % self.p as u128) as u64 }
    }
}

impl Sub for FpElt {
    type Output = FpElt;
    fn sub(self, rhs: FpElt) -> FpElt {
        self + (-rhs)
    }
}

impl Neg for FpElt {
    type Output = FpElt;
    fn neg(self) -> FpElt {
        FpElt { p: self.p, value: (self.p - self.value) % self.p }
    }
}

impl Mul for FpElt {
    type Output = FpElt;
    fn mul(self, rhs: FpElt) -> FpElt {
        debug_assert_eq!(self.p, rhs.p);
        FpElt { p: self.p, value: ((self.value as u128 * rhs.value as u128) % self.p as u128) as u64 }
    }
}
