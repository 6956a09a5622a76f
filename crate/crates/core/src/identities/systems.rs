//! The five matrix systems. Row j, column c of the generic block is
//!
//!   C(top − c, j − c) · c! · (r − c) / Π_{t=0}^{c} (r − j − t),
//!
//! which is lower triangular because the binomial vanishes for j < c. The
//! systems differ in `top`, in their size, and in a few special columns.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::AffineInL;
use crate::combinatorics::{binom, factorial, harmonic, sign};
use crate::error::{Error, Result};
use crate::exactnum::linalg;
use crate::exactnum::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AppendixId {
    A10,
    B11,
    C12,
    D16,
    E17,
}

impl AppendixId {
    pub const ALL: [AppendixId; 5] =
        [AppendixId::A10, AppendixId::B11, AppendixId::C12, AppendixId::D16, AppendixId::E17];

    pub fn name(self) -> &'static str {
        match self {
            AppendixId::A10 => "A10",
            AppendixId::B11 => "B11",
            AppendixId::C12 => "C12",
            AppendixId::D16 => "D16",
            AppendixId::E17 => "E17",
        }
    }

    pub fn odd(self) -> bool {
        matches!(self, AppendixId::A10 | AppendixId::B11 | AppendixId::C12)
    }

    pub fn min_r(self) -> u64 {
        match self {
            AppendixId::A10 => 3,
            AppendixId::B11 | AppendixId::C12 => 1,
            AppendixId::D16 | AppendixId::E17 => 2,
        }
    }

    pub fn accepts(self, r: u64) -> bool {
        r >= self.min_r() && (r % 2 == 1) == self.odd()
    }

    /// Admissible r up to `r_max`, increasing.
    pub fn range(self, r_max: u64) -> impl Iterator<Item = u64> {
        (self.min_r()..=r_max).filter(move |&r| self.accepts(r))
    }
}

impl fmt::Display for AppendixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AppendixId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AppendixId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown appendix system {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixSystem {
    pub appendix_id: AppendixId,
    pub r: u64,
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<AffineInL>,
    /// Subscript m of the unknown x_m in each column.
    pub unknowns: Vec<u64>,
}

fn generic_entry(top: i64, c: i64, j: i64, r: i64) -> Rational {
    let b = binom(top - c, j - c);
    if b.is_zero() {
        return b;
    }
    let den: BigInt = (0..=c).map(|t| BigInt::from(r - j - t)).product();
    assert!(!den.is_zero(), "generic entry hit a zero denominator at r={r}, j={j}, c={c}");
    b * Rational::from_integer(factorial(c as u64)) * int(r - c) / Rational::from_integer(den)
}

/// C(top, j)·(L − H_{top−j}).
fn binomial_l_rhs(top: i64, j: i64) -> AffineInL {
    AffineInL::l_minus(harmonic((top - j) as u64)).scale(&binom(top, j))
}

pub fn build_system(id: AppendixId, r: u64) -> Result<AppendixSystem> {
    if !id.accepts(r) {
        return Err(Error::ParityMismatch { id: id.name().into(), r });
    }
    let ri = r as i64;
    let (matrix, rhs, unknowns): (Vec<Vec<Rational>>, Vec<AffineInL>, Vec<u64>) = match id {
        AppendixId::A10 | AppendixId::B11 => {
            let n = (ri + 1) / 2;
            let top = if id == AppendixId::A10 { (ri + 3) / 2 } else { (ri + 1) / 2 };
            let matrix = (0..n).map(|j| (0..n).map(|c| generic_entry(top, c, j, ri)).collect()).collect();
            let rhs = (0..n).map(|j| binomial_l_rhs(top, j)).collect();
            let unknowns = (0..n).map(|c| (ri - c) as u64).collect();
            (matrix, rhs, unknowns)
        }
        AppendixId::C12 => {
            // The first (r+1)/2 rows are the B11 rows with a zero appended.
            // The extra row has the generic entries up to column (r−3)/2, a
            // zero in column (r−1)/2 and a one in the new column.
            let n = (ri + 1) / 2;
            let top = n;
            let mut matrix: Vec<Vec<Rational>> = (0..n)
                .map(|j| {
                    let mut row: Vec<Rational> = (0..n).map(|c| generic_entry(top, c, j, ri)).collect();
                    row.push(Rational::zero());
                    row
                })
                .collect();
            let mut last: Vec<Rational> = (0..n)
                .map(|c| if c <= (ri - 3) / 2 && ri >= 3 { generic_entry(top, c, n, ri) } else { Rational::zero() })
                .collect();
            last.push(int(1));
            matrix.push(last);
            let mut rhs: Vec<AffineInL> = (0..n).map(|j| binomial_l_rhs(top, j)).collect();
            rhs.push(AffineInL::zero());
            let mut unknowns: Vec<u64> = (0..n).map(|c| (ri - c) as u64).collect();
            unknowns.push((ri - 1) as u64 / 2);
            (matrix, rhs, unknowns)
        }
        AppendixId::D16 => {
            // Generic columns, except the last column, which is C((r+2)/2, j).
            let n = ri / 2;
            let top = (ri + 2) / 2;
            let matrix = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|c| if c < n - 1 { generic_entry(top, c, j, ri) } else { binom(top, j) })
                        .collect()
                })
                .collect();
            let rhs = (0..n).map(|j| binomial_l_rhs(top, j)).collect();
            let unknowns = (0..n).map(|c| (ri - c) as u64).collect();
            (matrix, rhs, unknowns)
        }
        AppendixId::E17 => {
            // Generic columns up to (r−4)/2, then C(r/2, j), then a final
            // column that is zero except for a one in the last row. The
            // right-hand side has no L.
            let h = ri / 2;
            let n = h + 1;
            let matrix = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|c| {
                            if c < h - 1 {
                                generic_entry(h, c, j, ri)
                            } else if c == h - 1 {
                                binom(h, j)
                            } else if j == n - 1 {
                                int(1)
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            let scale = -rat(ri + 2, 2);
            let rhs = (0..n)
                .map(|j| {
                    AffineInL::constant(&scale * binom(h, j) * (harmonic((h + 1 - j) as u64) - int(1)))
                })
                .collect();
            let mut unknowns: Vec<u64> = (0..h).map(|c| (ri - c) as u64).collect();
            unknowns.push(h as u64);
            (matrix, rhs, unknowns)
        }
    };
    Ok(AppendixSystem { appendix_id: id, r, matrix, rhs, unknowns })
}

/// A·x − rhs, componentwise.
pub fn residual(sys: &AppendixSystem, x: &[AffineInL]) -> Vec<AffineInL> {
    sys.matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let ax = row
                .iter()
                .zip(x)
                .fold(AffineInL::zero(), |acc, (a, xi)| &acc + &xi.scale(a));
            &ax - b
        })
        .collect()
}

/// Solves the system once for the constant column and once for the
/// L-coefficient column, then checks the residual is identically zero.
pub fn solve_affine(sys: &AppendixSystem) -> Result<Vec<AffineInL>> {
    let consts: Vec<Rational> = sys.rhs.iter().map(|b| b.const_part.clone()).collect();
    let coeffs: Vec<Rational> = sys.rhs.iter().map(|b| b.l_coeff.clone()).collect();
    let cols = linalg::solve(&sys.matrix, &[consts, coeffs])?;
    let x: Vec<AffineInL> = cols[0]
        .iter()
        .zip(&cols[1])
        .map(|(c, l)| AffineInL::new(c.clone(), l.clone()))
        .collect();
    if let Some((row, bad)) = residual(sys, &x).iter().enumerate().find(|(_, e)| !e.is_zero()) {
        return Err(Error::Mismatch {
            id: sys.appendix_id.name().into(),
            r: sys.r,
            component: format!("residual row {row}"),
            solved: bad.to_string(),
            expected: "0".into(),
        });
    }
    Ok(x)
}

/// An expected value for the unknown x_subscript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub subscript: u64,
    pub value: AffineInL,
}

pub fn closed_form(id: AppendixId, r: u64) -> Result<Vec<Target>> {
    if !id.accepts(r) {
        return Err(Error::ParityMismatch { id: id.name().into(), r });
    }
    let ri = r as i64;
    let pair = crate::combinatorics::bracket_pair(r);
    let m = AffineInL::l_minus(pair.sum());
    let targets = match id {
        AppendixId::A10 => {
            let s = sign((ri - 1) / 2) * rat(ri + 3, 4);
            vec![Target { subscript: r.div_ceil(2), value: m.scale(&s) }]
        }
        AppendixId::B11 => {
            vec![Target { subscript: r.div_ceil(2), value: m.scale(&sign((ri - 1) / 2)) }]
        }
        AppendixId::C12 => {
            let s = sign((ri - 1) / 2);
            let lower = &AffineInL::new(&s * rat(2, ri + 1), int(-1)) + &m.scale(&(&s * rat(ri + 1, 2)));
            vec![
                Target { subscript: r.div_ceil(2), value: m.scale(&s) },
                Target { subscript: (r - 1) / 2, value: lower },
            ]
        }
        AppendixId::D16 => vec![Target { subscript: (r + 2) / 2, value: m }],
        AppendixId::E17 => {
            let h = ri / 2;
            vec![
                Target {
                    subscript: (r + 2) / 2,
                    value: AffineInL::constant(rat(ri + 2, 2) * (int(1) - pair.sum())),
                },
                Target { subscript: r / 2, value: AffineInL::constant(-sign(h) * rat(1, h)) },
            ]
        }
    };
    Ok(targets)
}

/// The solved value of x_subscript.
pub fn component(sys: &AppendixSystem, x: &[AffineInL], subscript: u64) -> Option<AffineInL> {
    sys.unknowns.iter().position(|&m| m == subscript).map(|i| x[i].clone())
}

pub fn verify_appendix(id: AppendixId, r: u64) -> Result<bool> {
    let sys = build_system(id, r)?;
    let x = solve_affine(&sys)?;
    for target in closed_form(id, r)? {
        let solved = component(&sys, &x, target.subscript).expect("target is an unknown of the system");
        if solved != target.value {
            return Err(Error::Mismatch {
                id: id.name().into(),
                r,
                component: format!("x_{}", target.subscript),
                solved: solved.to_string(),
                expected: target.value.to_string(),
            });
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[Rational]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn b11_r3() {
        let sys = build_system(AppendixId::B11, 3).unwrap();
        assert_eq!(sys.matrix, ints(&[&[int(1), int(0)], &[int(3), int(1)]]));
        assert_eq!(sys.rhs, vec![AffineInL::l_minus(rat(3, 2)), AffineInL::new(int(-2), int(2))]);
        let x = solve_affine(&sys).unwrap();
        assert_eq!(x, vec![AffineInL::l_minus(rat(3, 2)), AffineInL::new(rat(5, 2), int(-1))]);
        assert_eq!(closed_form(AppendixId::B11, 3).unwrap()[0].value, AffineInL::new(rat(5, 2), int(-1)));
    }

    #[test]
    fn a10_r3() {
        let sys = build_system(AppendixId::A10, 3).unwrap();
        assert_eq!(sys.matrix, ints(&[&[int(1), int(0)], &[rat(9, 2), int(1)]]));
        let x = solve_affine(&sys).unwrap();
        assert_eq!(x[1], AffineInL::new(rat(15, 4), rat(-3, 2)));
        assert!(verify_appendix(AppendixId::A10, 5).unwrap());
    }

    #[test]
    fn small_even_systems() {
        let d = build_system(AppendixId::D16, 2).unwrap();
        assert_eq!(d.matrix.len(), 1);
        assert_eq!(solve_affine(&d).unwrap(), vec![AffineInL::l_minus(rat(3, 2))]);
        let d4 = build_system(AppendixId::D16, 4).unwrap();
        assert_eq!(d4.matrix, ints(&[&[int(1), int(1)], &[int(4), int(3)]]));

        let e = build_system(AppendixId::E17, 2).unwrap();
        assert_eq!(e.matrix, ints(&[&[int(1), int(0)], &[int(1), int(1)]]));
        let x = solve_affine(&e).unwrap();
        assert_eq!(x, vec![AffineInL::constant(int(-1)), AffineInL::constant(int(1))]);
        assert!(verify_appendix(AppendixId::E17, 4).unwrap());
    }

    #[test]
    fn c12_smallest() {
        let sys = build_system(AppendixId::C12, 1).unwrap();
        assert_eq!(sys.matrix, ints(&[&[int(1), int(0)], &[int(0), int(1)]]));
        assert!(verify_appendix(AppendixId::C12, 1).unwrap());
        assert!(verify_appendix(AppendixId::C12, 3).unwrap());
    }

    #[test]
    fn sizes_and_parity() {
        for r in [3u64, 7, 21] {
            assert_eq!(build_system(AppendixId::A10, r).unwrap().matrix.len() as u64, r.div_ceil(2));
            assert_eq!(build_system(AppendixId::B11, r).unwrap().matrix.len() as u64, r.div_ceil(2));
            assert_eq!(build_system(AppendixId::C12, r).unwrap().matrix.len() as u64, (r + 3) / 2);
        }
        for r in [2u64, 8, 30] {
            assert_eq!(build_system(AppendixId::D16, r).unwrap().matrix.len() as u64, r / 2);
            assert_eq!(build_system(AppendixId::E17, r).unwrap().matrix.len() as u64, (r + 2) / 2);
        }
        assert!(matches!(build_system(AppendixId::B11, 4), Err(Error::ParityMismatch { .. })));
        assert!(matches!(build_system(AppendixId::A10, 1), Err(Error::ParityMismatch { .. })));
        assert!(matches!(build_system(AppendixId::E17, 0), Err(Error::ParityMismatch { .. })));
    }
}
