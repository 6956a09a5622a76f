//! Fraction-free (Bareiss) elimination for square rational systems.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Solves A·X = B for every column of B. `rhs` is given column-major.
///
/// Each augmented row is scaled to integers, eliminated with Bareiss'
/// exact-division recurrence, and back-substituted over Q.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let m = rhs.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(rhs.iter().all(|col| col.len() == n), "rhs length mismatch");

    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row: Vec<&Rational> = matrix[i].iter().chain(rhs.iter().map(|c| &c[i])).collect();
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (*x * &l).to_integer()).collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..n + m {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let mut out = vec![vec![Rational::zero(); n]; m];
    for (c, x) in out.iter_mut().enumerate() {
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(a[i][n + c].clone());
            for j in i + 1..n {
                acc -= Rational::from_integer(a[i][j].clone()) * &x[j];
            }
            x[i] = acc / Rational::from_integer(a[i][i].clone());
        }
    }
    Ok(out)
}

pub fn mat_vec(matrix: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    matrix
        .iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}
