//! Finitely supported vectors Σ [[rep, v]] in a compactly induced representation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;

use super::coset::{canonicalize, CosetRep};
use super::group::GroupElt;
use super::weight::Weight;
use crate::exactnum::rational::p_pow;
use crate::exactnum::{int, Rational};

/// [[g, v]] is the function supported on IZ·g⁻¹ with value v at g⁻¹, so
/// [[g·h, v]] = [[g, ρ(h)v]] for h ∈ IZ and G acts by g'[[g, v]] = [[g'g, v]].
#[derive(Clone, Debug, PartialEq)]
pub struct InducedVec<W: Weight> {
    pub weight: W,
    pub support: BTreeMap<CosetRep, W::Coeff>,
}

impl<W: Weight> InducedVec<W> {
    pub fn zero(weight: W) -> Self {
        InducedVec { weight, support: BTreeMap::new() }
    }

    /// [[g, v]] for an arbitrary g, recanonicalized.
    pub fn basis(weight: W, g: &GroupElt, v: W::Coeff) -> Self {
        let mut out = InducedVec::zero(weight);
        out.add_term_at(g, &v);
        out
    }

    pub fn p(&self) -> u64 {
        self.weight.p()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Adds [[rep, v]] for a canonical rep.
    pub fn add_term(&mut self, rep: CosetRep, v: W::Coeff) {
        let sum = match self.support.get(&rep) {
            Some(prev) => self.weight.add(prev, &v),
            None => v,
        };
        if self.weight.is_zero(&sum) {
            self.support.remove(&rep);
        } else {
            self.support.insert(rep, sum);
        }
    }

    /// Adds [[g, v]] for any g.
    pub fn add_term_at(&mut self, g: &GroupElt, v: &W::Coeff) {
        let c = canonicalize(g, self.p());
        let coeff = self.weight.iwahori_act(&c, v);
        self.add_term(c.rep, coeff);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (rep, v) in &other.support {
            out.add_term(rep.clone(), v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        InducedVec {
            weight: self.weight.clone(),
            support: self.support.iter().map(|(k, v)| (k.clone(), self.weight.neg(v))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Left translation by g.
    pub fn translate(&self, g: &GroupElt) -> Self {
        let p = self.p();
        let mut out = InducedVec::zero(self.weight.clone());
        for (rep, v) in &self.support {
            out.add_term_at(&g.mul(&rep.matrix(p)), v);
        }
        out
    }

    /// One line per coset, ordered by (parity, m, μ).
    pub fn debug_dump(&self) -> String {
        let mut s = String::new();
        for (rep, v) in &self.support {
            writeln!(s, "{} {} {} : {}", rep.parity, rep.m, rep.mu, v).expect("writing to a String");
        }
        s
    }
}

/// A coset (p^m, μ; 0, 1)·β^ε with |m| ≤ depth and p^depth·μ integral.
pub fn random_coset<R: Rng>(p: u64, depth: i64, rng: &mut R) -> CosetRep {
    let parity = rng.gen_range(0..=1);
    let m = rng.gen_range(-depth..=depth);
    let span = (p as i64).pow((2 * depth) as u32);
    let mu = int(rng.gen_range(0..span)) * p_pow(p, -depth);
    CosetRep::new(p, parity, m, &mu)
}

/// p^t·(a, b; p·c, d) with a, d units mod p^n and b, c ∈ [0, p^n).
pub fn random_iwahori<R: Rng>(p: u64, n: u32, rng: &mut R) -> GroupElt {
    let pn = (p as i64).pow(n);
    let unit = |rng: &mut R| loop {
        let x = rng.gen_range(1..pn);
        if x % p as i64 != 0 {
            break x;
        }
    };
    let (a, d) = (unit(rng), unit(rng));
    let (b, c) = (rng.gen_range(0..pn), rng.gen_range(0..pn));
    let t = rng.gen_range(-2..=2);
    GroupElt::from_ints(a, b, p as i64 * c, d).scale(&p_pow(p, t))
}

/// A random element of GL2(Q) with small entries, some of them divided by p.
pub fn random_group_elt<R: Rng>(p: u64, rng: &mut R) -> GroupElt {
    loop {
        let mut entry = || -> Rational {
            let x = int(rng.gen_range(-6..=6));
            x * p_pow(p, rng.gen_range(-1..=2))
        };
        if let Ok(g) = GroupElt::new(entry(), entry(), entry(), entry()) {
            return g;
        }
    }
}
