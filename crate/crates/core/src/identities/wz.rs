//! WZ-style certificate for the recurrence satisfied by
//! S(n) = Σ_k (−1)^k C(n+k, k−1) C(n+1, k+1) H_{k+1}.
//!
//! With F(k, n) = (−1)^k C(n+k, k−1) C(n+1, k+1) C(x+k+1, k+1) and
//! R(k, n) = 2(k−1)(k+1)²(n+1)(n+2)(2n+3) / ((n+1−k)(n+2−k)) one has
//!
//!   n²(n+2)² F(k,n) − (2n+3)(3+6n+2n² + (4+6n+2n²)x) F(k,n+1)
//!     − (n+1)²(n+3)² F(k,n+2) = G(k+1,n) − G(k,n),   G = F·R.
//!
//! Summing over k telescopes; differentiating at x = 0 turns
//! C(x+k+1, k+1) into H_{k+1} and gives the recurrence for S(n).

use crate::combinatorics::{binom, factorial, sign};
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

use super::catalog::main17_sum;

/// C(x+k+1, k+1) = Π_{t=1}^{k+1} (x+t) / (k+1)!, evaluated at x.
pub fn binom_poly(x: &Rational, k: i64) -> Rational {
    let num: Rational = (1..=k + 1).map(|t| x + int(t)).product();
    num / Rational::from_integer(factorial((k + 1) as u64))
}

pub fn wz_f(k: i64, n: i64, x: &Rational) -> Rational {
    sign(k) * binom(n + k, k - 1) * binom(n + 1, k + 1) * binom_poly(x, k)
}

/// R(k, n); `None` at its poles k = n+1, n+2.
pub fn wz_r(k: i64, n: i64) -> Option<Rational> {
    let den = (n + 1 - k) * (n + 2 - k);
    if den == 0 {
        return None;
    }
    let num = 2 * (k - 1) * (k + 1) * (k + 1) * (n + 1) * (n + 2) * (2 * n + 3);
    Some(int(num) / int(den))
}

/// F·R with the removable poles cancelled:
/// (−1)^k C(n+k, k−1) (n+1)! / ((k+1)! (n+2−k)!) · 2(k−1)(k+1)²(n+1)(n+2)(2n+3) · C(x+k+1, k+1)
/// for 0 ≤ k ≤ n+2, and 0 otherwise.
pub fn wz_g(k: i64, n: i64, x: &Rational) -> Rational {
    if k < 0 || k > n + 2 {
        return int(0);
    }
    let ratio = Rational::new(
        factorial((n + 1) as u64),
        factorial((k + 1) as u64) * factorial((n + 2 - k) as u64),
    );
    let poly = int(2 * (k - 1) * (k + 1) * (k + 1) * (n + 1) * (n + 2) * (2 * n + 3));
    sign(k) * binom(n + k, k - 1) * ratio * poly * binom_poly(x, k)
}

fn recurrence_lhs(k: i64, n: i64, x: &Rational) -> Rational {
    let n2 = n * n;
    let a = int(n2 * (n + 2) * (n + 2));
    let b = int(2 * n + 3) * (int(3 + 6 * n + 2 * n2) + int(4 + 6 * n + 2 * n2) * x);
    let c = int((n + 1) * (n + 1) * (n + 3) * (n + 3));
    a * wz_f(k, n, x) - b * wz_f(k, n + 1, x) - c * wz_f(k, n + 2, x)
}

/// Checks the telescoped identity at one (k, n, x).
pub fn certificate_holds(k: i64, n: i64, x: &Rational) -> bool {
    recurrence_lhs(k, n, x) == wz_g(k + 1, n, x) - wz_g(k, n, x)
}

/// T(0, n+1) = Σ_{k=0}^{n+1} (−1)^k C(n+1+k, k−1) C(n+2, k+1), by direct summation.
pub fn t0(n: i64) -> Rational {
    (0..=n + 1)
        .map(|k| sign(k) * binom(n + 1 + k, k - 1) * binom(n + 2, k + 1))
        .sum()
}

/// n²(n+2)² S(n) − (2n+3)(4+6n+2n²) T(0,n+1) − (2n+3)(3+6n+2n²) S(n+1)
///   − (n+1)²(n+3)² S(n+2), which must vanish.
pub fn s_recurrence_defect(n: i64) -> Rational {
    let n2 = n * n;
    int(n2 * (n + 2) * (n + 2)) * main17_sum(n)
        - int((2 * n + 3) * (4 + 6 * n + 2 * n2)) * t0(n)
        - int((2 * n + 3) * (3 + 6 * n + 2 * n2)) * main17_sum(n + 1)
        - int((n + 1) * (n + 1) * (n + 3) * (n + 3)) * main17_sum(n + 2)
}

/// Verifies the certificate for 1 ≤ k ≤ n+1 ≤ n_max+1 at the given x
/// samples, plus enough further integer points to exceed the x-degree
/// (k + 2) of the identity, which certifies it as a polynomial identity.
/// Also checks the endpoint vanishing and the recurrence for S(n).
pub fn wz_certificate_check(n_max: u64, x_samples: &[i64]) -> Result<bool> {
    let fail = |detail: String| Err(Error::CertificateFailed { detail });
    for n in 1..=n_max as i64 {
        for k in 1..=n + 1 {
            let mut xs: Vec<i64> = x_samples.to_vec();
            let mut extra = 0;
            while (xs.len() as i64) < k + 3 {
                if !xs.contains(&extra) {
                    xs.push(extra);
                }
                extra += 1;
            }
            for x in xs {
                if !certificate_holds(k, n, &int(x)) {
                    return fail(format!("n={n} k={k} x={x}"));
                }
            }
        }
        for x in x_samples {
            if wz_f(n + 1, n, &int(*x)) != int(0) {
                return fail(format!("F(n+1, n) != 0 at n={n} x={x}"));
            }
        }
        if wz_r(1, n) != Some(int(0)) {
            return fail(format!("R(1, n) != 0 at n={n}"));
        }
        if t0(n) != sign(n + 1) {
            return fail(format!("T(0, n+1) != (-1)^(n+1) at n={n}"));
        }
        if s_recurrence_defect(n) != int(0) {
            return fail(format!("S(n) recurrence at n={n}"));
        }
    }
    Ok(true)
}

/// The certificate exactly as first written down, with C(n, k−1) in F and
/// the factor (n+3) in R. It does not satisfy the identity; kept so the
/// discrepancy stays visible in the tests.
pub fn printed_certificate_holds(k: i64, n: i64, x: &Rational) -> Option<bool> {
    let f = |k: i64, n: i64| sign(k) * binom(n, k - 1) * binom(n + 1, k + 1) * binom_poly(x, k);
    let r = |k: i64, n: i64| {
        let den = (n + 1 - k) * (n + 2 - k);
        (den != 0).then(|| int(2 * (k - 1) * (k + 1) * (k + 1) * (n + 1) * (n + 2) * (n + 3)) / int(den))
    };
    let n2 = n * n;
    let lhs = int(n2 * (n + 2) * (n + 2)) * f(k, n)
        - int(2 * n + 3) * (int(3 + 6 * n + 2 * n2) + int(4 + 6 * n + 2 * n2) * x) * f(k, n + 1)
        - int((n + 1) * (n + 1) * (n + 3) * (n + 3)) * f(k, n + 2);
    let rhs = f(k + 1, n) * r(k + 1, n)? - f(k, n) * r(k, n)?;
    Some(lhs == rhs)
}
