//! Comparison of the boundary constants λᵢ with the Breuil–Mézard formulas.
//!
//! The comparison assumes the normalization a_p = +p^{r/2}; nothing below
//! depends on the sign beyond that convention. Both sides of every identity
//! are affine in L, so agreement at L = 0 and L = 1 proves it.

use rand::Rng;

use crate::classifier::{lambda_boundary, ClassifierInput};
use crate::combinatorics::{binom, bracket_pair, harmonic, sign};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, FpElt, QuadElt, Rational};

/// The a_p-normalization under which the comparison is made.
pub const SIGN_CONVENTION: &str = "a_p = +p^{r/2}";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmParams {
    pub p: u64,
    pub k: u64,
    pub nu_int: i64,
    pub l: QuadElt,
}

fn check_even_k(p: u64, k: u64) -> Result<()> {
    if !k.is_multiple_of(2) || k < 4 || k > p - 1 {
        return Err(Error::InvalidInput(format!("need even k in [4, p-1], got k = {k}, p = {p}")));
    }
    Ok(())
}

/// b = (−1)^{k/2−ν}·(k/2−ν)·C(k/2−1−ν, −2ν+1)·(−L/p^ν) for integer ν ≤ 0.
pub fn bm_b(params: &BmParams) -> QuadElt {
    let half = params.k as i64 / 2;
    let nu = params.nu_int;
    let m = half - nu;
    let coeff = sign(m) * int(m) * binom(half - 1 - nu, 1 - 2 * nu);
    let scale = crate::exactnum::rational::p_pow(params.p, -nu);
    (-&params.l).scale(&(coeff * scale))
}

/// (−1)^i·i·C(r+1−i, i)·p^{r/2−i}·L, the b-side target.
fn lambda_formula_in_l(p: u64, r: i64, i: i64, l: &QuadElt) -> QuadElt {
    let coeff = sign(i) * int(i) * binom(r + 1 - i, i) * crate::exactnum::rational::p_pow(p, r / 2 - i);
    l.scale(&coeff)
}

fn affine_samples(p: u64) -> [QuadElt; 2] {
    [QuadElt::zero(p), QuadElt::one(p)]
}

pub fn check_b_identity(p: u64, k: u64, i: u64) -> Result<bool> {
    check_even_k(p, k)?;
    let r = k as i64 - 2;
    let i = i as i64;
    if i < 1 || i > r / 2 {
        return Err(Error::InvalidInput(format!("need 1 <= i <= r/2, got i = {i}, r = {r}")));
    }
    for l in affine_samples(p) {
        let params = BmParams { p, k, nu_int: i - r / 2, l: l.clone() };
        let lhs = bm_b(&params);
        let rhs = lambda_formula_in_l(p, r, i, &l);
        if lhs != rhs {
            return Err(Error::IdentityFailed {
                id: "BM_B".into(),
                param: format!("p={p} k={k} i={i} L={l}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(true)
}

/// a = (−1)^{k/2}·(−1 + (k/2)(k/2 − 1)(−L + 2H_{k/2−1})).
pub fn bm_a(p: u64, k: u64, l: &QuadElt) -> QuadElt {
    let half = k as i64 / 2;
    let inner = &(-l) + &QuadElt::rational(p, int(2) * harmonic(half as u64 - 1));
    let scaled = inner.scale(&(int(half) * int(half - 1)));
    (&scaled - &QuadElt::one(p)).scale(&sign(half))
}

pub fn check_a_identity(p: u64, k: u64) -> Result<bool> {
    check_even_k(p, k)?;
    let r = k as i64 - 2;
    let h = bracket_pair(r as u64).sum();
    for l in affine_samples(p) {
        let lhs = bm_a(p, k, &l);
        let m = &l - &QuadElt::rational(p, h.clone());
        let rhs = m.scale(&(sign(r / 2) * int(r / 2) * int(r / 2 + 1)));
        if lhs != rhs {
            return Err(Error::IdentityFailed {
                id: "BM_A".into(),
                param: format!("p={p} k={k} L={l}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(true)
}

/// Checks λ_{r/2} ≡ (−1)^{r/2} mod p for L with v_p(L − 2H_{k/2−1}) ≥ 1.
pub fn check_unit_case(p: u64, k: u64, samples: &[QuadElt]) -> Result<bool> {
    check_even_k(p, k)?;
    let r = k - 2;
    let centre = QuadElt::rational(p, int(2) * harmonic(k / 2 - 1));
    let expected = FpElt::from_i64(p, if (r / 2).is_multiple_of(2) { 1 } else { -1 });
    for l in samples {
        let offset = l - &centre;
        if offset.vp() < crate::exactnum::HalfInt::from_int(1) {
            return Err(Error::InvalidInput(format!(
                "sample L = {l} has v_p(L - 2H_(k/2-1)) < 1"
            )));
        }
        let input = ClassifierInput::new(p, k, l.clone())?;
        let lambda = lambda_boundary(&input, r / 2)?;
        if lambda != expected {
            return Err(Error::IdentityFailed {
                id: "BM_UNIT".into(),
                param: format!("p={p} k={k} L={l}"),
                lhs: lambda.to_string(),
                rhs: expected.to_string(),
            });
        }
    }
    Ok(true)
}

fn random_p_integral<R: Rng>(p: u64, rng: &mut R) -> Rational {
    let num = rng.gen_range(-1000i64..=1000);
    let den = loop {
        let d = rng.gen_range(1i64..=1000);
        if d % p as i64 != 0 {
            break d;
        }
    };
    rat(num, den)
}

/// Random L = 2H_{k/2−1} + p·(u + w√p) with u, w p-integral.
pub fn unit_case_samples<R: Rng>(p: u64, k: u64, count: usize, rng: &mut R) -> Vec<QuadElt> {
    let centre = int(2) * harmonic(k / 2 - 1);
    (0..count)
        .map(|_| {
            let u = random_p_integral(p, rng);
            let w = random_p_integral(p, rng);
            let pp = int(p as i64);
            QuadElt::new(p, &centre + &u * &pp, w * pp)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn b_example() {
        let params = BmParams { p: 7, k: 6, nu_int: -1, l: QuadElt::rational(7, rat(1, 7)) };
        assert_eq!(bm_b(&params), QuadElt::rational(7, int(-4)));
        let params = BmParams { p: 7, k: 6, nu_int: 0, l: QuadElt::rational(7, int(5)) };
        assert_eq!(bm_b(&params), QuadElt::rational(7, int(-2 * 3 * -5)));
        assert!(bm_b(&params).is_rational());
    }

    #[test]
    fn identity_examples() {
        assert!(check_b_identity(7, 6, 1).unwrap());
        assert!(check_b_identity(11, 8, 2).unwrap());
        assert!(check_b_identity(13, 6, 1).unwrap());
        assert!(check_a_identity(5, 4).unwrap());
        assert!(check_a_identity(7, 6).unwrap());
        assert!(check_a_identity(13, 12).unwrap());
    }

    #[test]
    fn unit_case_examples() {
        assert!(check_unit_case(5, 4, &[QuadElt::rational(5, int(2))]).unwrap());
        let l = QuadElt::rational(7, int(2) * harmonic(2) + int(7));
        assert!(check_unit_case(7, 6, &[l]).unwrap());
        let input = ClassifierInput::new(5, 4, QuadElt::rational(5, int(2))).unwrap();
        assert_eq!(lambda_boundary(&input, 1).unwrap().value, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples = unit_case_samples(11, 8, 20, &mut rng);
        assert!(check_unit_case(11, 8, &samples).unwrap());
    }

    #[test]
    fn unit_case_rejects_bad_samples() {
        let l = QuadElt::rational(7, int(0));
        assert!(matches!(check_unit_case(7, 6, &[l]), Err(Error::InvalidInput(_))));
    }
}
