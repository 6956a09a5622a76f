//! Rational helpers: p-adic valuations, reduction into Z/p^k, and parsing.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::HalfInt;
use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Exponent of p in a nonzero integer; `None` for zero.
pub fn vp_integer(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// Integer valuation of a rational, `None` for zero.
pub fn vp(x: &Rational, p: u64) -> Option<i64> {
    let num = vp_integer(x.numer(), p)?;
    let den = vp_integer(x.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

pub fn vp_rational(x: &Rational, p: u64) -> HalfInt {
    match vp(x, p) {
        Some(v) => HalfInt::from_int(v),
        None => HalfInt::Infinite,
    }
}

pub fn p_pow(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

pub fn pk(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

/// Inverse of `a` modulo `m`, if it exists. Result lies in [0, m).
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Image of a p-integral rational in Z/p^k, as an integer in [0, p^k).
pub fn rational_to_zp(x: &Rational, p: u64, k: u32) -> Option<BigInt> {
    let m = pk(p, k);
    if k == 0 {
        return Some(BigInt::zero());
    }
    let inv = mod_inverse(x.denom(), &m)?;
    Some((x.numer() * inv).mod_floor(&m))
}

/// Residue of a p-integral rational in [0, p).
pub fn rational_mod_p(x: &Rational, p: u64) -> Option<u64> {
    let r = rational_to_zp(x, p, 1)?;
    Some(u64::try_from(r).expect("residue below p"))
}

/// Canonical representative of x modulo p^k Z_p: the unique rational in
/// [0, p^k) with p-power denominator congruent to x. Works for any k,
/// including k <= 0.
pub fn reduce_mod_pk(x: &Rational, p: u64, k: i64) -> Rational {
    let Some(v) = vp(x, p) else {
        return Rational::zero();
    };
    let e = (-v).max(0);
    if k + e <= 0 {
        return Rational::zero();
    }
    let y = x * p_pow(p, e);
    let n = rational_to_zp(&y, p, (k + e) as u32).expect("p-integral after scaling");
    Rational::from_integer(n) / p_pow(p, e)
}

/// Parses `[-]INT[/INT]`, ignoring whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t.as_str(), None),
    };
    let digits = |x: &str| !x.is_empty() && x.chars().all(|c| c.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
