//! The representations of IZ being induced: characters a^s d^t over F_p,
//! and |det|^{r/2} ⊗ Sym^r over Q(√p), which is a representation of all of G.

use std::fmt;

use num_traits::Zero;

use super::coset::Canonical;
use super::group::GroupElt;
use super::operators::HeckeOp;
use crate::combinatorics::binom;
use crate::exactnum::rational::vp;
use crate::exactnum::{FpElt, QuadElt, Rational};

pub trait Weight: Clone + fmt::Debug + PartialEq {
    type Coeff: Clone + fmt::Debug + PartialEq + fmt::Display;

    fn p(&self) -> u64;
    fn is_zero(&self, v: &Self::Coeff) -> bool;
    fn add(&self, a: &Self::Coeff, b: &Self::Coeff) -> Self::Coeff;
    fn neg(&self, a: &Self::Coeff) -> Self::Coeff;
    /// ρ(h)v for the Iwahori factor h of a canonicalization.
    fn iwahori_act(&self, c: &Canonical, v: &Self::Coeff) -> Self::Coeff;
    fn supports(&self, op: HeckeOp) -> bool;
    /// The vector carried by the term [[g·k, ·]] of `op` applied to [[g, v]].
    fn twist(&self, op: HeckeOp, k: &GroupElt, v: &Self::Coeff) -> Self::Coeff;
}

/// h ↦ ā^s·d̄^t, with the scalar p acting trivially.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Character {
    pub p: u64,
    pub s: u64,
    pub t: u64,
}

impl Character {
    pub fn new(p: u64, s: u64, t: u64) -> Self {
        Character { p, s: s % (p - 1), t: t % (p - 1) }
    }

    /// Invariant under conjugation by β, which swaps the diagonal.
    pub fn is_symmetric(&self) -> bool {
        self.s == self.t
    }

    pub fn value(&self, a: FpElt, d: FpElt) -> FpElt {
        a.pow(self.s) * d.pow(self.t)
    }

    /// Every a^s d^t with 0 ≤ s, t ≤ p − 2.
    pub fn all(p: u64) -> Vec<Character> {
        (0..p - 1).flat_map(|s| (0..p - 1).map(move |t| Character::new(p, s, t))).collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} d^{}", self.s, self.t)
    }
}

impl Weight for Character {
    type Coeff = FpElt;

    fn p(&self) -> u64 {
        self.p
    }

    fn is_zero(&self, v: &FpElt) -> bool {
        v.is_zero()
    }

    fn add(&self, a: &FpElt, b: &FpElt) -> FpElt {
        *a + *b
    }

    fn neg(&self, a: &FpElt) -> FpElt {
        -*a
    }

    fn iwahori_act(&self, c: &Canonical, v: &FpElt) -> FpElt {
        self.value(c.iz.a_bar, c.iz.d_bar) * *v
    }

    fn supports(&self, op: HeckeOp) -> bool {
        match op {
            HeckeOp::T12 | HeckeOp::Tm10 => true,
            HeckeOp::T10 => self.is_symmetric(),
            HeckeOp::Wp | HeckeOp::Up => self.s == 0 && self.t == 0,
            HeckeOp::WpSym | HeckeOp::UpSym => false,
        }
    }

    fn twist(&self, op: HeckeOp, _k: &GroupElt, v: &FpElt) -> FpElt {
        if op == HeckeOp::T10 && self.s % 2 == 1 {
            -*v
        } else {
            *v
        }
    }
}

/// Σ cⱼ X^{r−j} Y^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymVec(pub Vec<QuadElt>);

impl fmt::Display for SymVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// |det|^{r/2} ⊗ Sym^r, acting by σ(g)P(X, Y) = |det g|^{r/2}·P((X, Y)g).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymPower {
    pub p: u64,
    pub r: usize,
}

impl SymPower {
    pub fn new(p: u64, r: usize) -> Self {
        SymPower { p, r }
    }

    /// X^{r−j} Y^j.
    pub fn basis(&self, j: usize) -> SymVec {
        let mut v = vec![QuadElt::zero(self.p); self.r + 1];
        v[j] = QuadElt::one(self.p);
        SymVec(v)
    }

    /// Coefficients of (uX + wY)^n by power of Y.
    fn linear_power(u: &Rational, w: &Rational, n: usize) -> Vec<Rational> {
        (0..=n)
            .map(|i| binom(n as i64, i as i64) * num_traits::pow(u.clone(), n - i) * num_traits::pow(w.clone(), i))
            .collect()
    }

    pub fn act(&self, g: &GroupElt, v: &SymVec) -> SymVec {
        let r = self.r;
        let mut out = vec![QuadElt::zero(self.p); r + 1];
        for (j, cj) in v.0.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            // (aX + cY)^{r−j}·(bX + dY)^j
            let left = Self::linear_power(&g.a, &g.c, r - j);
            let right = Self::linear_power(&g.b, &g.d, j);
            for (i1, x) in left.iter().enumerate() {
                for (i2, y) in right.iter().enumerate() {
                    let coef = x * y;
                    if !coef.is_zero() {
                        out[i1 + i2] = &out[i1 + i2] + &cj.scale(&coef);
                    }
                }
            }
        }
        let vdet = vp(&g.det(), self.p).expect("nonsingular");
        let norm = QuadElt::sqrt_p_pow(self.p, -vdet * r as i64);
        SymVec(out.iter().map(|c| c * &norm).collect())
    }
}

impl Weight for SymPower {
    type Coeff = SymVec;

    fn p(&self) -> u64 {
        self.p
    }

    fn is_zero(&self, v: &SymVec) -> bool {
        v.0.iter().all(QuadElt::is_zero)
    }

    fn add(&self, a: &SymVec, b: &SymVec) -> SymVec {
        SymVec(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &SymVec) -> SymVec {
        SymVec(a.0.iter().map(|x| -x).collect())
    }

    fn iwahori_act(&self, c: &Canonical, v: &SymVec) -> SymVec {
        self.act(&c.h, v)
    }

    fn supports(&self, op: HeckeOp) -> bool {
        matches!(op, HeckeOp::WpSym | HeckeOp::UpSym)
    }

    fn twist(&self, _op: HeckeOp, k: &GroupElt, v: &SymVec) -> SymVec {
        self.act(&k.inverse(), v)
    }
}
