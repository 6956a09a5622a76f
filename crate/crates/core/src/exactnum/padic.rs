//! Truncated p-adic numbers p^v·u with u a unit known modulo p^N.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::rational::{pk, rational_to_zp, vp, vp_integer, Rational};

pub const DEFAULT_PRECISION: u32 = 64;

/// A p-adic number known to finite precision.
///
/// Nonzero values are p^valuation·unit_digits with unit_digits a unit
/// modulo p^precision. Zero is flagged; for zero, `valuation` records how
/// many absolute digits are known (`i64::MAX` for an exact zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicTrunc {
    pub p: u64,
    pub valuation: i64,
    pub unit_digits: BigInt,
    pub precision: u32,
    pub zero: bool,
}

impl PadicTrunc {
    pub fn exact_zero(p: u64) -> Self {
        PadicTrunc { p, valuation: i64::MAX, unit_digits: BigInt::zero(), precision: 0, zero: true }
    }

    fn zero_to(p: u64, absolute: i64) -> Self {
        PadicTrunc { p, valuation: absolute, unit_digits: BigInt::zero(), precision: 0, zero: true }
    }

    /// A rational, expanded to relative precision n.
    pub fn from_rational(x: &Rational, p: u64, n: u32) -> Self {
        let Some(v) = vp(x, p) else {
            return Self::exact_zero(p);
        };
        let scaled = x * super::rational::p_pow(p, -v);
        let unit = rational_to_zp(&scaled, p, n).expect("unit after removing p^v");
        PadicTrunc { p, valuation: v, unit_digits: unit, precision: n, zero: false }
    }

    /// An integer known modulo p^n (absolute precision n).
    pub fn from_residue(value: &BigInt, p: u64, n: u32) -> Self {
        let m = pk(p, n);
        let w = value.mod_floor(&m);
        match vp_integer(&w, p) {
            None => Self::zero_to(p, n as i64),
            Some(t) => {
                let rel = n - t as u32;
                let unit = (&w / pk(p, t as u32)).mod_floor(&pk(p, rel));
                PadicTrunc { p, valuation: t as i64, unit_digits: unit, precision: rel, zero: false }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Highest power of p to which the value is known.
    pub fn absolute_precision(&self) -> i64 {
        if self.zero {
            self.valuation
        } else {
            self.valuation + self.precision as i64
        }
    }

    /// Representative in [0, p^k) of a value with nonnegative valuation.
    /// Requires k to be within the known absolute precision.
    pub fn residue_mod_pk(&self, k: u32) -> BigInt {
        assert!(
            (k as i64) <= self.absolute_precision(),
            "asked for {k} digits, only {} known",
            self.absolute_precision()
        );
        if self.zero || self.valuation >= k as i64 {
            return BigInt::zero();
        }
        assert!(self.valuation >= 0, "value is not p-integral");
        let m = pk(self.p, k);
        (&self.unit_digits * pk(self.p, self.valuation as u32)).mod_floor(&m)
    }

    pub fn mul(&self, other: &PadicTrunc) -> PadicTrunc {
        assert_eq!(self.p, other.p);
        if self.zero || other.zero {
            let absolute = self.valuation.saturating_add(other.valuation);
            return Self::zero_to(self.p, absolute);
        }
        let n = self.precision.min(other.precision);
        let m = pk(self.p, n);
        PadicTrunc {
            p: self.p,
            valuation: self.valuation + other.valuation,
            unit_digits: (&self.unit_digits * &other.unit_digits).mod_floor(&m),
            precision: n,
            zero: false,
        }
    }

    pub fn pow(&self, e: u64) -> PadicTrunc {
        let mut acc = PadicTrunc::from_rational(&Rational::one(), self.p, self.precision.max(1));
        if self.zero {
            return if e == 0 { acc } else { self.clone() };
        }
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn neg(&self) -> PadicTrunc {
        if self.zero {
            return self.clone();
        }
        let m = pk(self.p, self.precision);
        PadicTrunc { unit_digits: (-&self.unit_digits).mod_floor(&m), ..self.clone() }
    }

    pub fn add(&self, other: &PadicTrunc) -> PadicTrunc {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let absolute = self.absolute_precision().min(other.absolute_precision());
        let terms: Vec<&PadicTrunc> = [self, other].into_iter().filter(|x| !x.zero).collect();
        let Some(vmin) = terms.iter().map(|x| x.valuation).min() else {
            return Self::zero_to(p, absolute);
        };
        if vmin >= absolute {
            return Self::zero_to(p, absolute);
        }
        let rel = (absolute - vmin) as u32;
        let m = pk(p, rel);
        let mut w = BigInt::zero();
        for x in terms {
            w += &x.unit_digits * pk(p, (x.valuation - vmin) as u32);
        }
        let w = w.mod_floor(&m);
        match vp_integer(&w, p) {
            None => Self::zero_to(p, absolute),
            Some(t) => {
                let prec = rel - t as u32;
                PadicTrunc {
                    p,
                    valuation: vmin + t as i64,
                    unit_digits: (&w / pk(p, t as u32)).mod_floor(&pk(p, prec)),
                    precision: prec,
                    zero: false,
                }
            }
        }
    }

    pub fn sub(&self, other: &PadicTrunc) -> PadicTrunc {
        self.add(&other.neg())
    }

    /// True when self and other agree modulo p^k.
    pub fn congruent_mod(&self, other: &PadicTrunc, k: i64) -> bool {
        let d = self.sub(other);
        assert!(
            d.absolute_precision() >= k,
            "comparison needs {k} digits, only {} known",
            d.absolute_precision()
        );
        d.zero || d.valuation >= k
    }
}

impl fmt::Display for PadicTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            if self.valuation == i64::MAX {
                write!(f, "0")
            } else {
                write!(f, "O({}^{})", self.p, self.valuation)
            }
        } else {
            write!(
                f,
                "{}^{} * {} + O({}^{})",
                self.p,
                self.valuation,
                self.unit_digits,
                self.p,
                self.absolute_precision()
            )
        }
    }
}

/// Teichmüller representative of a mod p, modulo p^n: the fixed point of
/// x ↦ x^p. Returns exact zero when p | a.
pub fn teichmuller(a: &BigInt, p: u64, n: u32) -> PadicTrunc {
    let pb = BigInt::from(p);
    if a.mod_floor(&pb).is_zero() {
        return PadicTrunc::exact_zero(p);
    }
    let m = pk(p, n);
    let mut x = a.mod_floor(&m);
    loop {
        let next = x.modpow(&pb, &m);
        if next == x {
            break;
        }
        x = next;
    }
    PadicTrunc { p, valuation: 0, unit_digits: x, precision: n, zero: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    #[test]
    fn teichmuller_examples() {
        assert_eq!(teichmuller(&1.into(), 5, 10).unit_digits, BigInt::one());
        assert_eq!(teichmuller(&2.into(), 5, 2).unit_digits, BigInt::from(7));
        assert!(teichmuller(&0.into(), 7, 3).is_zero());
        assert!(teichmuller(&14.into(), 7, 3).is_zero());
    }

    #[test]
    fn teichmuller_is_root_of_unity() {
        for p in [5u64, 7, 11, 13] {
            for a in 1..p {
                let t = teichmuller(&BigInt::from(a), p, 20);
                let one = PadicTrunc::from_rational(&int(1), p, 20);
                assert!(t.pow(p - 1).congruent_mod(&one, 20));
                assert_eq!(t.residue_mod_pk(1), BigInt::from(a));
            }
        }
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let p = 5;
        let xs = [rat(3, 7), rat(10, 3), rat(-1, 25), rat(2, 1), rat(125, 4)];
        for x in &xs {
            for y in &xs {
                let a = PadicTrunc::from_rational(x, p, 20);
                let b = PadicTrunc::from_rational(y, p, 20);
                let sum = a.add(&b);
                let prod = a.mul(&b);
                let want_sum = PadicTrunc::from_rational(&(x + y), p, 30);
                let want_prod = PadicTrunc::from_rational(&(x * y), p, 30);
                let k = sum.absolute_precision();
                assert!(sum.congruent_mod(&want_sum, k));
                let k = prod.absolute_precision();
                assert!(prod.congruent_mod(&want_prod, k));
            }
        }
        let a = PadicTrunc::from_rational(&rat(3, 7), p, 10);
        let z = a.sub(&a);
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), 10);
    }
}
