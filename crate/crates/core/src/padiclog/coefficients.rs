//! Coefficients λᵢ making Σ λᵢ zᵢ^j vanish for small j, in the three
//! configurations of nodes used to build test functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::linalg;
use crate::exactnum::rational::{p_pow, rational_mod_p, vp};
use crate::exactnum::{int, is_prime, teichmuller, FpElt, PadicTrunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientCase {
    /// Nodes the Teichmüller lifts [0], …, [p−1]; λ₀ = 1 − p, λᵢ = 1.
    Teichmuller,
    /// Nodes 0, …, n and p with λ_p = −1; Σ_{i≤n} λᵢ i^j = p^j for j ≤ n.
    ShiftedVandermonde,
    /// Nodes 0, …, p−1 with λ₀ = 1; Σ λᵢ i^j = 0 for j ≤ p − 2.
    FullResidues,
}

impl CoefficientCase {
    pub fn from_index(case: u8) -> Result<Self> {
        match case {
            1 => Ok(CoefficientCase::Teichmuller),
            2 => Ok(CoefficientCase::ShiftedVandermonde),
            3 => Ok(CoefficientCase::FullResidues),
            _ => Err(Error::InvalidInput(format!("coefficient case must be 1, 2 or 3, got {case}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSolution {
    pub case: CoefficientCase,
    pub p: u64,
    /// Node labels: the integer i for node i (or [i] in the Teichmüller case).
    pub indices: Vec<u64>,
    pub lambdas: Vec<Rational>,
    /// The Teichmüller lifts, present only in that case.
    pub teichmuller_nodes: Option<Vec<PadicTrunc>>,
}

impl CoefficientSolution {
    /// Every λ lies in Z_(p).
    pub fn p_integral(&self) -> bool {
        self.lambdas.iter().all(|l| vp(l, self.p).is_none_or(|v| v >= 0))
    }

    pub fn residues(&self) -> Vec<FpElt> {
        self.lambdas
            .iter()
            .map(|l| FpElt::new(self.p, rational_mod_p(l, self.p).expect("p-integral coefficient")))
            .collect()
    }

    /// Exact moments Σ λᵢ zᵢ^j over Q for the rational-node cases.
    pub fn moment(&self, j: u32) -> Rational {
        assert!(self.teichmuller_nodes.is_none(), "Teichmuller nodes are not rational");
        self.indices
            .iter()
            .zip(&self.lambdas)
            .map(|(&i, l)| l * Rational::from_integer(BigInt::from(i).pow(j)))
            .sum()
    }

    /// Σ λᵢ [i]^j modulo p^N in the Teichmüller case.
    pub fn teichmuller_moment(&self, j: u32) -> PadicTrunc {
        let nodes = self.teichmuller_nodes.as_ref().expect("Teichmuller case");
        let n = nodes.iter().find(|t| !t.is_zero()).map_or(1, |t| t.precision);
        let mut acc = PadicTrunc::from_residue(&BigInt::zero(), self.p, n);
        for (t, l) in nodes.iter().zip(&self.lambdas) {
            let power = if j == 0 { PadicTrunc::from_rational(&int(1), self.p, n) } else { t.pow(j as u64) };
            acc = acc.add(&power.mul(&PadicTrunc::from_rational(l, self.p, n)));
        }
        acc
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("p = {p} must be a prime >= 5")));
    }
    Ok(())
}

/// Solves Σ_{i ∈ nodes} λᵢ i^j = rhs_j for j = 0..nodes.len().
fn vandermonde(nodes: &[u64], rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let matrix: Vec<Vec<Rational>> = (0..nodes.len() as u32)
        .map(|j| nodes.iter().map(|&i| Rational::from_integer(BigInt::from(i).pow(j))).collect())
        .collect();
    Ok(linalg::solve(&matrix, &[rhs])?.remove(0))
}

/// The coefficients for one of the three node configurations. `n` is the
/// top node in the shifted Vandermonde case and ignored otherwise.
pub fn solve_coefficients(case: CoefficientCase, p: u64, n: u64) -> Result<CoefficientSolution> {
    check_prime(p)?;
    let pi = p as i64;
    match case {
        CoefficientCase::Teichmuller => {
            let precision = crate::exactnum::DEFAULT_PRECISION;
            let nodes = (0..p).map(|i| teichmuller(&BigInt::from(i), p, precision)).collect();
            let mut lambdas = vec![int(1); p as usize];
            lambdas[0] = int(1 - pi);
            Ok(CoefficientSolution {
                case,
                p,
                indices: (0..p).collect(),
                lambdas,
                teichmuller_nodes: Some(nodes),
            })
        }
        CoefficientCase::ShiftedVandermonde => {
            if n > p - 1 {
                return Err(Error::InvalidInput(format!("need n <= p - 1, got n = {n}, p = {p}")));
            }
            let nodes: Vec<u64> = (0..=n).collect();
            let rhs = (0..=n as i64).map(|j| p_pow(p, j)).collect();
            let mut lambdas = vandermonde(&nodes, rhs).map_err(|_| Error::Singular)?;
            let mut indices = nodes;
            indices.push(p);
            lambdas.push(-Rational::one());
            Ok(CoefficientSolution { case, p, indices, lambdas, teichmuller_nodes: None })
        }
        CoefficientCase::FullResidues => {
            // λ₀ = 1 is fixed; solve for λ₁..λ_{p−1} with Σ_{i≥1} λᵢ i^j = −0^j.
            let nodes: Vec<u64> = (1..p).collect();
            let rhs = (0..p - 1).map(|j| if j == 0 { int(-1) } else { int(0) }).collect();
            let rest = vandermonde(&nodes, rhs).map_err(|_| Error::Singular)?;
            let mut lambdas = vec![int(1)];
            lambdas.extend(rest);
            Ok(CoefficientSolution { case, p, indices: (0..p).collect(), lambdas, teichmuller_nodes: None })
        }
    }
}
