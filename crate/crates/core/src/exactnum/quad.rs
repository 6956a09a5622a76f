//! Elements a + b√p of Q(√p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, p_pow, parse_rational, rational_mod_p, vp, Rational};
use super::{FpElt, HalfInt};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElt {
    pub p: u64,
    pub a: Rational,
    pub b: Rational,
}

impl QuadElt {
    pub fn new(p: u64, a: Rational, b: Rational) -> Self {
        QuadElt { p, a, b }
    }

    pub fn rational(p: u64, a: Rational) -> Self {
        QuadElt { p, a, b: Rational::zero() }
    }

    pub fn zero(p: u64) -> Self {
        Self::rational(p, Rational::zero())
    }

    pub fn one(p: u64) -> Self {
        Self::rational(p, Rational::one())
    }

    pub fn sqrt_p(p: u64) -> Self {
        QuadElt { p, a: Rational::zero(), b: Rational::one() }
    }

    /// (√p)^n for any integer n.
    pub fn sqrt_p_pow(p: u64, n: i64) -> Self {
        let half = n.div_euclid(2);
        let scale = p_pow(p, half);
        if n.rem_euclid(2) == 0 {
            Self::rational(p, scale)
        } else {
            QuadElt { p, a: Rational::zero(), b: scale }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadElt { p: self.p, a: &self.a * c, b: &self.b * c }
    }

    /// Multiplicative inverse; `None` only for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.a * &self.a - &self.b * &self.b * int(self.p as i64);
        Some(QuadElt { p: self.p, a: &self.a / &norm, b: -&self.b / &norm })
    }

    /// min(v(a), v(b) + ½). The two candidates never tie.
    pub fn vp(&self) -> HalfInt {
        let va = vp(&self.a, self.p).map(|v| 2 * v);
        let vb = vp(&self.b, self.p).map(|v| 2 * v + 1);
        match (va, vb) {
            (None, None) => HalfInt::Infinite,
            (Some(x), None) | (None, Some(x)) => HalfInt::from_twice(x),
            (Some(x), Some(y)) => HalfInt::from_twice(x.min(y)),
        }
    }

    /// Reduction modulo the uniformizer √p. √p itself reduces to 0.
    pub fn residue_mod_pi(&self) -> Result<FpElt> {
        let v = self.vp();
        if v < HalfInt::from_int(0) {
            return Err(Error::NegativeValuation { valuation: v.to_string() });
        }
        let r = rational_mod_p(&self.a, self.p).expect("v(a) >= 0 when vp >= 0");
        Ok(FpElt::new(self.p, r))
    }

    /// Parses `RAT` or `RAT (+|-) RAT*sqrt(p)`, whitespace-insensitive,
    /// with `RAT = [-]INT[/INT]`. A bare `RAT*sqrt(p)` is also accepted.
    pub fn parse(s: &str, p: u64) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(star) = t.find("*sqrt(") else {
            return Ok(Self::rational(p, parse_rational(&t)?));
        };
        let radicand = t[star + 6..]
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated sqrt in {s:?}")))?;
        let q: u64 = radicand
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
        if q != p {
            return Err(Error::Parse(format!(
                "only sqrt({p}) is supported for p = {p}, found sqrt({q})"
            )));
        }
        let head = &t[..star];
        let split = head
            .char_indices()
            .skip(1)
            .find(|&(i, c)| (c == '+' || c == '-') && !head[..i].ends_with('/'))
            .map(|(i, _)| i);
        let (a, b) = match split {
            None => (Rational::zero(), parse_rational(head)?),
            Some(i) => {
                let a = parse_rational(&head[..i])?;
                let b = parse_rational(&head[i + 1..])?;
                if head[i..].starts_with('-') {
                    (a, -b)
                } else {
                    (a, b)
                }
            }
        };
        Ok(QuadElt { p, a, b })
    }

    fn check(&self, other: &QuadElt) {
        assert_eq!(self.p, other.p, "mixing Q(sqrt p) for different p");
    }
}

impl fmt::Display for QuadElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.p);
        }
        if self.b < Rational::zero() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.p)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.p)
        }
    }
}

impl Add for &QuadElt {
    type Output = QuadElt;
    fn add(self, rhs: &QuadElt) -> QuadElt {
        self.check(rhs);
        QuadElt { p: self.p, a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QuadElt {
    type Output = QuadElt;
    fn sub(self, rhs: &QuadElt) -> QuadElt {
        self.check(rhs);
        QuadElt { p: self.p, a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QuadElt {
    type Output = QuadElt;
    fn mul(self, rhs: &QuadElt) -> QuadElt {
        self.check(rhs);
        let p = int(self.p as i64);
        QuadElt {
            p: self.p,
            a: &self.a * &rhs.a + &self.b * &rhs.b * p,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadElt {
    type Output = QuadElt;
    fn neg(self) -> QuadElt {
        QuadElt { p: self.p, a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadElt {
            type Output = QuadElt;
            fn $m(self, rhs: QuadElt) -> QuadElt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadElt {
    type Output = QuadElt;
    fn neg(self) -> QuadElt {
        -&self
    }
}
