//! The branch log_L of the p-adic logarithm with log_L(p) = L, formal
//! sums of rational functions times logarithms, and the coefficient lemma.
//!
//! For z = p^v·ζ·u with ζ a root of unity and u ∈ 1 + pZ_p,
//! log_L(z) = v·L + log(u), where log(u) is the usual power series.

mod coefficients;
mod logpoly;

pub use coefficients::{solve_coefficients, CoefficientCase, CoefficientSolution};
pub use logpoly::{check_derivative_formula, formal_derivative, LogPoly, Poly, RatFunc};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::rational::{mod_inverse, p_pow, pk, rational_to_zp, vp, vp_integer};
use crate::exactnum::{teichmuller, PadicTrunc, QuadElt, Rational};

/// v·L + log(u): the L-multiple is exact, log(u) is known modulo p^N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogValue {
    pub p: u64,
    pub l_multiple: i64,
    pub unit_log: PadicTrunc,
}

impl LogValue {
    pub fn add(&self, other: &LogValue) -> LogValue {
        LogValue {
            p: self.p,
            l_multiple: self.l_multiple + other.l_multiple,
            unit_log: self.unit_log.add(&other.unit_log),
        }
    }

    /// Agreement of the L-multiples and of log(u) modulo p^k.
    pub fn congruent_mod(&self, other: &LogValue, k: i64) -> bool {
        self.l_multiple == other.l_multiple && self.unit_log.congruent_mod(&other.unit_log, k)
    }

    /// v·L plus the integer representative of log(u) in [0, p^N).
    pub fn evaluate(&self, l: &QuadElt) -> QuadElt {
        let n = self.unit_log.absolute_precision().min(u32::MAX as i64) as u32;
        let digits = self.unit_log.residue_mod_pk(n);
        let scaled = l.scale(&Rational::from_integer(self.l_multiple.into()));
        &scaled + &QuadElt::rational(self.p, Rational::from_integer(digits))
    }
}

fn ilog(p: u64, k: u64) -> u32 {
    let mut e = 0;
    let mut q = p;
    while q <= k {
        q = q.saturating_mul(p);
        e += 1;
    }
    e
}

/// log(u) modulo p^n for an integer u ≡ 1 mod p, by the series
/// Σ (−1)^{k+1} T^k / k with T = u − 1, carried at extra precision to
/// absorb the division by k.
pub fn log_one_plus(u: &BigInt, p: u64, n: u32) -> PadicTrunc {
    let pb = BigInt::from(p);
    let t0 = u - BigInt::one();
    assert!(t0.mod_floor(&pb).is_zero(), "log series needs u = 1 mod p");
    let mut kmax = 1u64;
    while kmax - (ilog(p, kmax) as u64) < n as u64 {
        kmax += 1;
    }
    let extra = ilog(p, kmax);
    let work = n + extra;
    let m = pk(p, work);
    let t = t0.mod_floor(&m);
    let target = pk(p, n);
    let mut power = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 1..=kmax {
        power = (&power * &t).mod_floor(&m);
        let e = vp_integer(&BigInt::from(k), p).unwrap_or(0) as u32;
        let pe = pk(p, e);
        let reduced = &power / &pe;
        let unit = BigInt::from(k) / &pe;
        let inv = mod_inverse(&unit, &target).expect("k / p^e is a unit");
        let term = (reduced * inv).mod_floor(&target);
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    PadicTrunc::from_residue(&acc, p, n)
}

/// log_L(z) for a nonzero rational z, with log(u) modulo p^n.
pub fn log_l_eval(z: &Rational, p: u64, n: u32) -> Result<LogValue> {
    let v = vp(z, p).ok_or(Error::ZeroArgument)?;
    let unit = z * p_pow(p, -v);
    // An error of p^n in u moves T^k/k by at most p^{n+k-1-v_p(k)}, so
    // u modulo p^n is enough for log(u) modulo p^n.
    let m = pk(p, n);
    let unit_int = rational_to_zp(&unit, p, n).expect("unit part is p-integral");
    let zeta = teichmuller(&unit_int, p, n);
    let zeta_inv = mod_inverse(&zeta.unit_digits, &m).expect("Teichmuller lift is a unit");
    let u = (unit_int * zeta_inv).mod_floor(&m);
    Ok(LogValue { p, l_multiple: v, unit_log: log_one_plus(&u, p, n) })
}

/// log_L(z) as an element of Q(√p), using the integer representative of
/// log(u) modulo p^n.
pub fn log_l_value(z: &Rational, l: &QuadElt, n: u32) -> Result<QuadElt> {
    Ok(log_l_eval(z, l.p, n)?.evaluate(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn log_of_p_is_l() {
        let l = QuadElt::parse("3/7 + 2*sqrt(7)", 7).unwrap();
        assert_eq!(log_l_value(&int(7), &l, 20).unwrap(), l);
        let v = log_l_eval(&int(49), 7, 20).unwrap();
        assert_eq!(v.l_multiple, 2);
        assert!(v.unit_log.is_zero());
    }

    #[test]
    fn log_of_roots_of_unity_vanishes() {
        for p in [5u64, 7, 11] {
            for a in 1..p {
                let zeta = teichmuller(&BigInt::from(a), p, 30);
                let z = Rational::from_integer(zeta.unit_digits.clone());
                let v = log_l_eval(&z, p, 30).unwrap();
                assert_eq!(v.l_multiple, 0);
                assert!(v.unit_log.is_zero() || v.unit_log.valuation >= 30);
            }
        }
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(log_l_eval(&int(0), 5, 10), Err(Error::ZeroArgument));
    }

    #[test]
    fn log_of_one_plus_p() {
        // log(1 + p) = p − p²/2 + p³/3 − …, so it has valuation exactly 1.
        let v = log_l_eval(&int(6), 5, 10).unwrap();
        assert_eq!(v.unit_log.valuation, 1);
        let v = log_l_eval(&rat(6, 11), 5, 10).unwrap();
        assert_eq!(v.l_multiple, 0);
    }
}
