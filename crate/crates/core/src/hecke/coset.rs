//! Canonical representatives of G/IZ, i.e. oriented edges of the tree.
//!
//! Every coset contains exactly one (p^m, μ; 0, 1)·β^ε with ε ∈ {0, 1},
//! m ∈ Z and μ ∈ Q_p/p^m Z_p. We store μ as the rational in [0, p^m) with
//! p-power denominator, which makes the key exact and totally ordered.

use std::fmt;

use num_traits::Zero;

use super::group::{iz_membership, GroupElt, IzData};
use crate::exactnum::rational::{p_pow, reduce_mod_pk, vp};
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetRep {
    pub parity: u8,
    pub m: i64,
    pub mu: Rational,
}

impl CosetRep {
    /// Reduces μ modulo p^m.
    pub fn new(p: u64, parity: u8, m: i64, mu: &Rational) -> Self {
        assert!(parity <= 1, "parity is 0 or 1");
        CosetRep { parity, m, mu: reduce_mod_pk(mu, p, m) }
    }

    /// The coset of the identity, i.e. the edge (Z_p², αZ_p²).
    pub fn origin() -> Self {
        CosetRep { parity: 0, m: 0, mu: Rational::zero() }
    }

    pub fn matrix(&self, p: u64) -> GroupElt {
        let base = GroupElt::new(p_pow(p, self.m), self.mu.clone(), Rational::zero(), Rational::from_integer(1.into()))
            .expect("nonsingular");
        if self.parity == 1 {
            base.mul(&GroupElt::beta(p))
        } else {
            base
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[e={} m={} mu={}]", self.parity, self.m, self.mu)
    }
}

/// g = rep·h with h ∈ IZ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub rep: CosetRep,
    pub h: GroupElt,
    pub iz: IzData,
}

pub fn canonicalize(g: &GroupElt, p: u64) -> Canonical {
    let vc = vp(&g.c, p);
    let vd = vp(&g.d, p);
    let vdet = g.det_valuation(p);
    // ε = 0 iff v(c) > v(d), with v(0) = ∞.
    let even = match (vc, vd) {
        (None, _) => true,
        (_, None) => false,
        (Some(c), Some(d)) => c > d,
    };
    let rep = if even {
        let vd = vd.expect("d nonzero when v(c) > v(d)");
        let m = vdet - 2 * vd;
        CosetRep::new(p, 0, m, &(&g.b / &g.d))
    } else {
        let vc = vc.expect("c nonzero");
        let m = 1 + vdet - 2 * vc;
        CosetRep::new(p, 1, m, &(&g.a / &g.c))
    };
    let h = rep.matrix(p).inverse().mul(g);
    let iz = iz_membership(&h, p).unwrap_or_else(|| panic!("{g} = {rep}·{h} with h outside IZ"));
    Canonical { rep, h, iz }
}
