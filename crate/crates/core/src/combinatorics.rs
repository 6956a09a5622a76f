//! Harmonic numbers, binomials, the integers bracketing r/2, and power sums.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{int, Rational};

fn harmonic_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::zero()]))
}

/// H_n = 1 + 1/2 + … + 1/n, with H_0 = 0. Memoized.
pub fn harmonic(n: u64) -> Rational {
    let n = n as usize;
    if let Some(h) = harmonic_table().read().expect("harmonic table poisoned").get(n) {
        return h.clone();
    }
    let mut table = harmonic_table().write().expect("harmonic table poisoned");
    while table.len() <= n {
        let i = table.len();
        let next = &table[i - 1] + Rational::new(BigInt::one(), BigInt::from(i));
        table.push(next);
    }
    table[n].clone()
}

/// C(n, k) as an integer. Zero for k < 0 or k > n ≥ 0; for n < 0 the
/// usual extension C(n, k) = (−1)^k C(k − n − 1, k).
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let v = binom_int(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom_int(n, k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// The integers v₋ < r/2 < v₊ closest to r/2, with H₋ = H_{v₋}, H₊ = H_{v₊}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicPair {
    pub v_minus: u64,
    pub v_plus: u64,
    pub h_minus: Rational,
    pub h_plus: Rational,
}

impl HarmonicPair {
    pub fn sum(&self) -> Rational {
        &self.h_minus + &self.h_plus
    }
}

pub fn bracket_pair(r: u64) -> HarmonicPair {
    assert!(r >= 1, "r must be positive");
    let (v_minus, v_plus) = if r % 2 == 1 {
        ((r - 1) / 2, r.div_ceil(2))
    } else {
        ((r - 2) / 2, (r + 2) / 2)
    };
    HarmonicPair { v_minus, v_plus, h_minus: harmonic(v_minus), h_plus: harmonic(v_plus) }
}

/// S_l = Σ_{i=0}^{p−1} i^l with 0^0 = 1.
pub fn power_sum_s(p: u64, l: u32) -> Rational {
    let s: BigInt = (0..p).map(|i| BigInt::from(i).pow(l)).sum();
    Rational::from_integer(s)
}
