//! The classification of the semisimplified reduction of V_{k,L}.
//!
//! With r = k − 2 and M = L − H₋ − H₊, the reduction depends only on
//! ν = v_p(M) and, at the boundary values of ν, on the leading unit of M.
//! Intervals of ν give ind(ω₂^c); the boundaries ν = i − r/2 give split
//! reducible representations μ_λ ω^{r+1−i} ⊕ μ_{λ⁻¹} ω^i; for odd r the
//! last case only determines λ + λ⁻¹.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{binom, bracket_pair, sign};
use crate::error::{Error, Result};
use crate::exactnum::{fp2_solve_monic_quadratic, is_prime, FpElt, Fp2Elt, HalfInt, QuadElt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifierInput {
    pub p: u64,
    pub k: u64,
    pub l: QuadElt,
}

impl ClassifierInput {
    pub fn new(p: u64, k: u64, l: QuadElt) -> Result<Self> {
        if p < 5 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("p = {p} must be a prime >= 5")));
        }
        if !(3..=p + 1).contains(&k) {
            return Err(Error::InvalidInput(format!("k = {k} must lie in [3, {}]", p + 1)));
        }
        if l.p != p {
            return Err(Error::InvalidInput(format!("L lives in Q(sqrt {}), not Q(sqrt {p})", l.p)));
        }
        Ok(ClassifierInput { p, k, l })
    }

    pub fn r(&self) -> u64 {
        self.k - 2
    }

    /// M = L − H₋ − H₊.
    pub fn shifted_l(&self) -> QuadElt {
        let h = bracket_pair(self.r()).sum();
        &self.l - &QuadElt::rational(self.p, h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    Interval,
    Boundary,
    SelfDualTerminal,
    EvenLastInterval,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Interval => "interval",
            CaseKind::Boundary => "boundary",
            CaseKind::SelfDualTerminal => "self_dual_terminal",
            CaseKind::EvenLastInterval => "even_last_interval",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CasePoint {
    pub kind: CaseKind,
    pub i: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionResult {
    /// ind(ω₂^c); `c_raw` = (r+1) + (i−1)(p−1), `c` its residue mod p²−1.
    Irreducible { c_raw: u64, c: u64 },
    /// μ_λ ω^{e1} ⊕ μ_{λ⁻¹} ω^{e2}.
    ReducibleSplit { lambda: Fp2Elt, lambda_inv: Fp2Elt, e1: u64, e2: u64 },
    /// μ_λ ω^e ⊕ μ_{λ⁻¹} ω^e with only λ + λ⁻¹ = trace_c determined.
    SelfDual { trace_c: FpElt, lambda: Fp2Elt, lambda_inv: Fp2Elt, e: u64 },
}

impl fmt::Display for ReductionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionResult::Irreducible { c, .. } => write!(f, "ind(omega2^{c})"),
            ReductionResult::ReducibleSplit { lambda, lambda_inv, e1, e2 } => {
                write!(f, "mu_{{{lambda}}} omega^{e1} + mu_{{{lambda_inv}}} omega^{e2}")
            }
            ReductionResult::SelfDual { trace_c, lambda, lambda_inv, e } => write!(
                f,
                "mu_{{{lambda}}} omega^{e} + mu_{{{lambda_inv}}} omega^{e} (trace {trace_c})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub p: u64,
    pub k: u64,
    pub r: u64,
    pub nu: HalfInt,
    pub case: CasePoint,
    pub result: ReductionResult,
}

pub fn shifted_nu(input: &ClassifierInput) -> HalfInt {
    input.shifted_l().vp()
}

/// Locates ν in the case table for weight r = k − 2.
///
/// Boundaries sit at ν = i − r/2. The first interval is unbounded below;
/// for odd r everything from ν = 1/2 up (including ν = ∞) is the self-dual
/// case, and for even r everything above 0 is the last interval.
pub fn select_case(r: u64, nu: HalfInt) -> CasePoint {
    let r = r as i64;
    let top = if r % 2 == 1 { (r + 1) / 2 } else { (r + 2) / 2 };
    let terminal = if r % 2 == 1 {
        CasePoint { kind: CaseKind::SelfDualTerminal, i: top as u64 }
    } else {
        CasePoint { kind: CaseKind::EvenLastInterval, i: top as u64 }
    };
    let Some(t) = nu.twice() else {
        return terminal;
    };
    if (r % 2 == 1 && t >= 1) || (r % 2 == 0 && t > 0) {
        return terminal;
    }
    for i in 1..top {
        let bound = 2 * i - r;
        if t < bound {
            return CasePoint { kind: CaseKind::Interval, i: i as u64 };
        }
        if t == bound {
            return CasePoint { kind: CaseKind::Boundary, i: i as u64 };
        }
    }
    CasePoint { kind: CaseKind::Interval, i: top as u64 }
}

/// (−1)^i · i · C(r+1−i, i) · p^{r/2−i} · M, the quantity whose residue is λᵢ.
pub fn lambda_argument(input: &ClassifierInput, i: u64) -> QuadElt {
    let r = input.r() as i64;
    let i = i as i64;
    let coeff = sign(i) * crate::exactnum::int(i) * binom(r + 1 - i, i);
    let power = QuadElt::sqrt_p_pow(input.p, r - 2 * i);
    (&power * &input.shifted_l()).scale(&coeff)
}

pub fn lambda_boundary(input: &ClassifierInput, i: u64) -> Result<FpElt> {
    let x = lambda_argument(input, i);
    let v = x.vp();
    if v != HalfInt::from_int(0) {
        return Err(Error::NotAUnit { valuation: v.to_string() });
    }
    x.residue_mod_pi()
}

/// Trace λ + λ⁻¹ for odd r and ν ≥ 1/2, with the two roots of X² − cX + 1.
pub fn selfdual_constants(input: &ClassifierInput) -> Result<(FpElt, Fp2Elt, Fp2Elt)> {
    let r = input.r();
    if r.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("self-dual case needs odd r, got r = {r}")));
    }
    let c = lambda_argument(input, r.div_ceil(2)).residue_mod_pi()?;
    let (lambda, lambda_inv) = fp2_solve_monic_quadratic(c);
    Ok((c, lambda, lambda_inv))
}

fn irreducible(input: &ClassifierInput, i: u64) -> Result<ReductionResult> {
    let p = input.p;
    let c_raw = input.r() + 1 + (i - 1) * (p - 1);
    if c_raw.is_multiple_of(p + 1) {
        return Err(Error::IrreducibilityViolation { p, k: input.k, c: c_raw });
    }
    Ok(ReductionResult::Irreducible { c_raw, c: c_raw % (p * p - 1) })
}

pub fn classify_full(input: &ClassifierInput) -> Result<Classification> {
    let p = input.p;
    let r = input.r();
    let nu = shifted_nu(input);
    let case = select_case(r, nu);
    let result = match case.kind {
        CaseKind::Interval | CaseKind::EvenLastInterval => irreducible(input, case.i)?,
        CaseKind::Boundary => {
            let lambda = lambda_boundary(input, case.i)?;
            let lambda_inv = lambda.inv().expect("boundary constant is a unit");
            ReductionResult::ReducibleSplit {
                lambda: Fp2Elt::from_fp(lambda),
                lambda_inv: Fp2Elt::from_fp(lambda_inv),
                e1: (r + 1 - case.i) % (p - 1),
                e2: case.i % (p - 1),
            }
        }
        CaseKind::SelfDualTerminal => {
            let (trace_c, lambda, lambda_inv) = selfdual_constants(input)?;
            ReductionResult::SelfDual { trace_c, lambda, lambda_inv, e: r.div_ceil(2) % (p - 1) }
        }
    };
    Ok(Classification { p, k: input.k, r, nu, case, result })
}

pub fn classify(input: &ClassifierInput) -> Result<ReductionResult> {
    classify_full(input).map(|c| c.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn input(p: u64, k: u64, l: &str) -> ClassifierInput {
        ClassifierInput::new(p, k, QuadElt::parse(l, p).unwrap()).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(shifted_nu(&input(7, 5, "0")), HalfInt::from_int(0));
        assert_eq!(input(7, 5, "0").shifted_l(), QuadElt::rational(7, rat(-5, 2)));
        assert_eq!(shifted_nu(&input(5, 4, "3/2")), HalfInt::Infinite);
        assert_eq!(shifted_nu(&input(5, 3, "1+1*sqrt(5)")), HalfInt::from_twice(1));
    }

    #[test]
    fn case_examples() {
        assert_eq!(select_case(3, HalfInt::from_int(0)), CasePoint { kind: CaseKind::Interval, i: 2 });
        assert_eq!(select_case(2, HalfInt::from_int(0)), CasePoint { kind: CaseKind::Boundary, i: 1 });
        assert_eq!(
            select_case(3, HalfInt::from_int(2)),
            CasePoint { kind: CaseKind::SelfDualTerminal, i: 2 }
        );
        assert_eq!(select_case(2, HalfInt::from_int(1)).kind, CaseKind::EvenLastInterval);
        assert_eq!(select_case(4, HalfInt::from_int(-5)), CasePoint { kind: CaseKind::Interval, i: 1 });
        assert_eq!(select_case(4, HalfInt::from_twice(-1)), CasePoint { kind: CaseKind::Interval, i: 2 });
    }

    #[test]
    fn boundary_constants() {
        assert_eq!(lambda_boundary(&input(5, 4, "1/2"), 1).unwrap().value, 2);
        assert_eq!(lambda_boundary(&input(7, 6, "1/7"), 1).unwrap().value, 3);
        assert!(matches!(lambda_boundary(&input(7, 5, "0"), 1), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn selfdual_example() {
        let (c, a, b) = selfdual_constants(&input(5, 3, "1+1*sqrt(5)")).unwrap();
        assert_eq!(c.value, 4);
        assert!(!a.in_base_field());
        assert!((a * b).is_one());
        assert_eq!(a + b, Fp2Elt::new(5, 4, 0));

        let (c, a, _) = selfdual_constants(&input(5, 3, "1+5*sqrt(5)")).unwrap();
        assert_eq!(c.value, 0);
        assert_eq!(a * a, Fp2Elt::new(5, 4, 0));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&input(7, 5, "0")).unwrap(), ReductionResult::Irreducible { c_raw: 10, c: 10 });
        assert_eq!(classify(&input(5, 4, "3/2")).unwrap(), ReductionResult::Irreducible { c_raw: 7, c: 7 });
        assert_eq!(
            classify(&input(5, 4, "1/2")).unwrap(),
            ReductionResult::ReducibleSplit {
                lambda: Fp2Elt::new(5, 2, 0),
                lambda_inv: Fp2Elt::new(5, 3, 0),
                e1: 2,
                e2: 1
            }
        );
    }

    #[test]
    fn input_validation() {
        assert!(ClassifierInput::new(4, 3, QuadElt::zero(4)).is_err());
        assert!(ClassifierInput::new(3, 3, QuadElt::zero(3)).is_err());
        assert!(ClassifierInput::new(7, 9, QuadElt::zero(7)).is_err());
        assert!(ClassifierInput::new(7, 2, QuadElt::zero(7)).is_err());
        assert!(ClassifierInput::new(7, 5, QuadElt::zero(5)).is_err());
        assert!(ClassifierInput::new(7, 8, QuadElt::rational(7, int(1))).is_ok());
    }
}
