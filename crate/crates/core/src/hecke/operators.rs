//! The Iwahori-Hecke operators, each given on [[g, v]] as a sum of
//! [[g·k, τ_k(v)]] over a fixed list of group elements k.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::coset::{canonicalize, Canonical, CosetRep};
use super::group::GroupElt;
use super::vector::InducedVec;
use super::weight::Weight;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeckeOp {
    T12,
    Tm10,
    T10,
    Wp,
    Up,
    WpSym,
    UpSym,
}

impl HeckeOp {
    pub const ALL: [HeckeOp; 7] =
        [HeckeOp::T12, HeckeOp::Tm10, HeckeOp::T10, HeckeOp::Wp, HeckeOp::Up, HeckeOp::WpSym, HeckeOp::UpSym];

    pub fn name(self) -> &'static str {
        match self {
            HeckeOp::T12 => "T12",
            HeckeOp::Tm10 => "Tm10",
            HeckeOp::T10 => "T10",
            HeckeOp::Wp => "Wp",
            HeckeOp::Up => "Up",
            HeckeOp::WpSym => "WpSym",
            HeckeOp::UpSym => "UpSym",
        }
    }

    /// T12 and Up use (1, 0; pλ, p) = β·(λ, 1; 1, 0); T−10 uses (p, λ; 0, 1);
    /// T10 and Wp use β. λ runs over 0..p, which is as good as the
    /// Teichmüller lifts since the difference is absorbed by I₁.
    pub fn kernel(self, p: u64) -> Vec<GroupElt> {
        let lambdas = 0..p as i64;
        match self {
            HeckeOp::T12 | HeckeOp::Up | HeckeOp::UpSym => lambdas.map(|l| GroupElt::lower(p, l)).collect(),
            HeckeOp::Tm10 => lambdas.map(|l| GroupElt::upper(p, l)).collect(),
            HeckeOp::T10 | HeckeOp::Wp | HeckeOp::WpSym => vec![GroupElt::beta(p)],
        }
    }
}

impl fmt::Display for HeckeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeckeOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HeckeOp::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown operator {s:?}")))
    }
}

/// Operator application with the canonicalizations of g·k cached per coset.
/// The cache does not depend on the weight, so one instance serves every
/// weight for a given p.
#[derive(Debug, Default)]
pub struct HeckeAlgebra {
    pub p: u64,
    kernels: HashMap<HeckeOp, Vec<GroupElt>>,
    cache: HashMap<(HeckeOp, CosetRep), Vec<Canonical>>,
    memo: HashMap<GroupElt, Canonical>,
}

impl HeckeAlgebra {
    pub fn new(p: u64) -> Self {
        let kernels = HeckeOp::ALL.into_iter().map(|op| (op, op.kernel(p))).collect();
        HeckeAlgebra { p, kernels, cache: HashMap::new(), memo: HashMap::new() }
    }

    /// Memoized [`canonicalize`].
    pub fn canonical(&mut self, g: &GroupElt) -> Canonical {
        let p = self.p;
        self.memo.entry(g.clone()).or_insert_with(|| canonicalize(g, p)).clone()
    }

    /// Left translation by g, sharing the memo.
    pub fn translate<W: Weight>(&mut self, g: &GroupElt, v: &InducedVec<W>) -> InducedVec<W> {
        let mut out = InducedVec::zero(v.weight.clone());
        for (rep, coeff) in &v.support {
            let c = self.canonical(&g.mul(&rep.matrix(self.p)));
            out.add_term(c.rep.clone(), v.weight.iwahori_act(&c, coeff));
        }
        out
    }

    /// op[[g, v]] from the defining sum, for any g; see [`apply_operator_at`].
    pub fn apply_at<W: Weight>(&mut self, op: HeckeOp, weight: &W, g: &GroupElt, v: &W::Coeff) -> Result<InducedVec<W>> {
        self.check(op, weight)?;
        let mut out = InducedVec::zero(weight.clone());
        for k in self.kernels[&op].clone() {
            let c = self.canonical(&g.mul(&k));
            out.add_term(c.rep.clone(), weight.iwahori_act(&c, &weight.twist(op, &k, v)));
        }
        Ok(out)
    }

    fn check<W: Weight>(&self, op: HeckeOp, weight: &W) -> Result<()> {
        if weight.supports(op) {
            Ok(())
        } else {
            Err(Error::WeightMismatch { op: op.name().to_string(), weight: format!("{weight:?}") })
        }
    }

    pub fn apply<W: Weight>(&mut self, op: HeckeOp, v: &InducedVec<W>) -> Result<InducedVec<W>> {
        self.check(op, &v.weight)?;
        let p = self.p;
        let w = &v.weight;
        let mut out = InducedVec::zero(w.clone());
        for (rep, coeff) in &v.support {
            let kernel = &self.kernels[&op];
            let terms = self.cache.entry((op, rep.clone())).or_insert_with(|| {
                let g = rep.matrix(p);
                kernel.iter().map(|k| canonicalize(&g.mul(k), p)).collect()
            });
            for (k, c) in kernel.iter().zip(terms.iter()) {
                let twisted = w.twist(op, k, coeff);
                out.add_term(c.rep.clone(), w.iwahori_act(c, &twisted));
            }
        }
        Ok(out)
    }

    /// Applies a word of operators, rightmost first.
    pub fn apply_word<W: Weight>(&mut self, word: &[HeckeOp], v: &InducedVec<W>) -> Result<InducedVec<W>> {
        let mut out = v.clone();
        for op in word.iter().rev() {
            out = self.apply(*op, &out)?;
        }
        Ok(out)
    }
}

pub fn apply_operator<W: Weight>(op: HeckeOp, v: &InducedVec<W>) -> Result<InducedVec<W>> {
    HeckeAlgebra::new(v.p()).apply(op, v)
}

/// op[[g, v]] straight from the defining sum, for g not necessarily a
/// canonical representative.
pub fn apply_operator_at<W: Weight>(op: HeckeOp, weight: &W, g: &GroupElt, v: &W::Coeff) -> Result<InducedVec<W>> {
    if !weight.supports(op) {
        return Err(Error::WeightMismatch { op: op.name().to_string(), weight: format!("{weight:?}") });
    }
    let mut out = InducedVec::zero(weight.clone());
    for k in op.kernel(weight.p()) {
        out.add_term_at(&g.mul(&k), &weight.twist(op, &k, v));
    }
    Ok(out)
}
