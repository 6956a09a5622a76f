//! Binomial-harmonic identities, each checked exactly at one parameter.
//!
//! Parameters are n for the single-sum identities, r (with a parity) for the
//! combined identities, and a prime p for the congruences mod p.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{binom, harmonic, sign};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, teichmuller, FpElt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityName {
    Main10,
    EasyGauss,
    Tricky10,
    Tricky11,
    Main11,
    Main12,
    Sigma12a,
    Sigma12b,
    Main16,
    Main16a,
    Main16b,
    Gauss17,
    Main17,
    G1p4,
    G1p22,
    E17x,
    Gould183,
    Gould183b,
    Gould639,
    Gould639b,
    SumB,
    SumB2,
    Roots,
}

/// What the parameter of an identity ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    N { min: u64 },
    OddR { min: u64 },
    EvenR { min: u64 },
    Prime,
}

impl IdentityName {
    pub const ALL: [IdentityName; 23] = [
        IdentityName::Main10,
        IdentityName::EasyGauss,
        IdentityName::Tricky10,
        IdentityName::Tricky11,
        IdentityName::Main11,
        IdentityName::Main12,
        IdentityName::Sigma12a,
        IdentityName::Sigma12b,
        IdentityName::Main16,
        IdentityName::Main16a,
        IdentityName::Main16b,
        IdentityName::Gauss17,
        IdentityName::Main17,
        IdentityName::G1p4,
        IdentityName::G1p22,
        IdentityName::E17x,
        IdentityName::Gould183,
        IdentityName::Gould183b,
        IdentityName::Gould639,
        IdentityName::Gould639b,
        IdentityName::SumB,
        IdentityName::SumB2,
        IdentityName::Roots,
    ];

    pub fn name(self) -> &'static str {
        use IdentityName::*;
        match self {
            Main10 => "MAIN10",
            EasyGauss => "EASY_GAUSS",
            Tricky10 => "TRICKY10",
            Tricky11 => "TRICKY11",
            Main11 => "MAIN11",
            Main12 => "MAIN12",
            Sigma12a => "SIGMA12a",
            Sigma12b => "SIGMA12b",
            Main16 => "MAIN16",
            Main16a => "MAIN16a",
            Main16b => "MAIN16b",
            Gauss17 => "GAUSS17",
            Main17 => "MAIN17",
            G1p4 => "G1p4",
            G1p22 => "G1p22",
            E17x => "E17X",
            Gould183 => "GOULD183",
            Gould183b => "GOULD183b",
            Gould639 => "GOULD639",
            Gould639b => "GOULD639b",
            SumB => "SUMB",
            SumB2 => "SUMB2",
            Roots => "ROOTS",
        }
    }

    pub fn param_kind(self) -> ParamKind {
        use IdentityName::*;
        match self {
            Main10 | Gould183 | Gould183b | Gould639 | Gould639b => ParamKind::OddR { min: 3 },
            Main11 | Main12 => ParamKind::OddR { min: 1 },
            Main16 => ParamKind::EvenR { min: 2 },
            Gauss17 | G1p4 => ParamKind::N { min: 0 },
            EasyGauss | Tricky10 | Tricky11 | Sigma12a | Sigma12b | Main16a | Main16b | Main17
            | G1p22 | E17x => ParamKind::N { min: 1 },
            SumB | SumB2 | Roots => ParamKind::Prime,
        }
    }

    pub fn accepts(self, param: u64) -> bool {
        match self.param_kind() {
            ParamKind::N { min } => param >= min,
            ParamKind::OddR { min } => param >= min && param % 2 == 1,
            ParamKind::EvenR { min } => param >= min && param.is_multiple_of(2),
            ParamKind::Prime => param >= 5 && crate::exactnum::is_prime(param),
        }
    }

    /// Parameters checked by a batch run: n or r up to `max` (odd r up to
    /// max − 1 when max is even), or the primes {5, 7, 11, 13}.
    pub fn batch_params(self, max: u64) -> Vec<u64> {
        match self.param_kind() {
            ParamKind::Prime => vec![5, 7, 11, 13],
            ParamKind::N { .. } => (1..=max).filter(|&n| self.accepts(n)).collect(),
            _ => (0..=max).filter(|&n| self.accepts(n)).collect(),
        }
    }

    pub fn param_label(self) -> &'static str {
        match self.param_kind() {
            ParamKind::N { .. } => "n",
            ParamKind::OddR { .. } | ParamKind::EvenR { .. } => "r",
            ParamKind::Prime => "p",
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityName::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdentityId {
    pub name: IdentityName,
    pub param: u64,
}

impl IdentityId {
    pub fn new(name: IdentityName, param: u64) -> Self {
        IdentityId { name, param }
    }
}

fn c(n: i64, k: i64) -> Rational {
    binom(n, k)
}

fn h(n: i64) -> Rational {
    assert!(n >= 0, "harmonic index {n} is negative");
    harmonic(n as u64)
}

fn sum<F: Fn(i64) -> Rational>(lo: i64, hi: i64, f: F) -> Rational {
    (lo..=hi).map(f).sum()
}

/// Both sides of an identity over Q.
pub fn evaluate(id: IdentityId) -> Result<(Rational, Rational)> {
    use IdentityName::*;
    if !id.name.accepts(id.param) {
        return Err(Error::InvalidInput(format!("{} is not defined at {}", id.name, id.param)));
    }
    let x = id.param as i64;
    let pair = match id.name {
        Main10 => {
            let m = (x - 1) / 2;
            let lhs = sum(2, (x + 1) / 2, |n| {
                rat(1, n + 1) * sum(1, n - 1, |j| sign(j - 1) * c(2 * j - 1, j) * c(m + j, 2 * j - 1))
            });
            (lhs, sign(m) * (h((x + 3) / 2) - h(m) - h(m + 1)))
        }
        EasyGauss => {
            let n = x;
            let lhs = sum(1, n, |k| sign(k - 1) * c(n + k, k) * c(n, k - 1));
            (lhs, sign(n) * (int(1) - c(2 * n + 1, n + 1)))
        }
        Tricky10 => {
            let n = x;
            let lhs = sum(1, n, |k| sign(k) * c(n + k, k) * c(n, k - 1) * h(k + 1));
            let rhs = sign(n) * (-h(n) - h(n + 1))
                + sign(n) * rat((2 * n + 1) * (2 * n + 3), (n + 1) * (n + 1) * (n + 2)) * c(2 * n, n)
                + sign(n) * rat(2 * n + 1, n + 1) * c(2 * n, n) * h(n);
            (lhs, rhs)
        }
        Tricky11 => {
            let n = x;
            let lhs = sum(1, n, |k| sign(k) * c(n + k, k) * c(n, k - 1) * h(k));
            let rhs = sign(n) * (-h(n) - h(n + 1)) + sign(n) * h(n + 1) * c(2 * n + 1, n + 1);
            (lhs, rhs)
        }
        Main11 => {
            let m = (x - 1) / 2;
            let lhs = sum(1, m, |n| {
                rat(1, n + 1) * sum(1, n, |j| sign(j - 1) * c(2 * j - 1, j) * c(m + j, 2 * j - 1))
            });
            (lhs, -sign(m) * h(m))
        }
        Main12 => {
            let m = (x - 1) / 2;
            let lhs = sum(0, m, |n| {
                let inner = sum(2, n, |j| {
                    sign(j - 1) * rat(j - 1, j) * c(2 * j - 1, j) * c(m + j, 2 * j - 1)
                });
                rat(1, n + 1) * (int(1) + rat(x + 1, 2) * inner)
            });
            (lhs, sign(m) * rat(2, x + 1) - sign(m) * rat(x + 1, 2) * h(m))
        }
        Sigma12a => {
            let n = x;
            let lhs = sum(2, n, |k| sign(k - 1) * rat(k - 1, k) * c(n + k, k) * c(n, k - 1));
            let rhs = -rat(1, n + 1) + sign(n)
                - sign(n) * rat(n * (2 * n + 1), (n + 1) * (n + 1)) * c(2 * n, n);
            (lhs, rhs)
        }
        Sigma12b => {
            let n = x;
            let lhs = sum(2, n, |k| sign(k) * rat(k - 1, k) * c(n + k, k) * c(n, k - 1) * h(k));
            let rhs = -sign(n) * rat(n, (n + 1) * (n + 1)) - int(2) * sign(n) * h(n)
                + sign(n) * rat(n * (2 * n + 1), (n + 1).pow(3)) * c(2 * n, n)
                + sign(n) * rat(n * (2 * n + 1), (n + 1) * (n + 1)) * c(2 * n, n) * h(n);
            (lhs, rhs)
        }
        Main16 => {
            let half = x / 2;
            let lhs = sign((x - 2) / 2)
                * sum(2, half, |n| {
                    rat(1, n + 1) * sum(1, n - 1, |j| sign(j - 1) * c(2 * j, j - 1) * c(half + j, 2 * j))
                });
            (lhs, -h(half - 1))
        }
        Main16a => {
            let n = x;
            let lhs = sum(1, n - 1, |k| sign(k) * c(n + k, k - 1) * c(n + 1, k + 1));
            (lhs, sign(n) - sign(n) * c(2 * n, n - 1))
        }
        Main16b => {
            let n = x;
            let lhs = sum(1, n - 1, |k| sign(k) * c(n + k, k - 1) * c(n + 1, k + 1) * h(k + 1));
            let rhs = sign(n) * (h(n - 1) + h(n + 1)) - sign(n) * c(2 * n, n - 1) * h(n + 1);
            (lhs, rhs)
        }
        Gauss17 => {
            let n = x;
            let lhs = sum(0, n + 1, |k| sign(k) * c(n + 1 + k, k - 1) * c(n + 2, k + 1));
            (lhs, sign(n + 1))
        }
        Main17 => (main17_sum(x), sign(x) * (h(x - 1) + h(x + 1))),
        G1p4 => {
            let n = x;
            (sum(0, n, |k| sign(k) * c(2 * k, k) * c(n + k, 2 * k)), sign(n))
        }
        G1p22 => {
            let n = x;
            (sum(0, n, |k| sign(k) * rat(1, k + 1) * c(2 * k, k) * c(n + k, 2 * k)), int(0))
        }
        E17x => {
            let n = x;
            let lhs = sum(1, n, |k| sign(k) * rat(2 * k, k + 1) * c(2 * k - 1, k - 1) * c(n + k, 2 * k));
            (lhs, sign(n))
        }
        Gould183 => {
            let m = (x - 1) / 2;
            let lhs = int(1) + sum(1, m, |j| sign(j) * c((x + 1) / 2, j - 1) * c(x - j, (x + 1) / 2));
            (lhs, int(0))
        }
        Gould183b => {
            let m = (x - 1) / 2;
            let lhs = sum(1, m, |j| sign(j) * c(m, j - 1) * c(x - j, m));
            (lhs, sign(m) - int(1))
        }
        Gould639 => {
            let m = (x - 1) / 2;
            (sum(1, (x + 1) / 2, |j| sign(j) * c((x + 1) / 2, j - 1) * c(x - j, m)), int(0))
        }
        Gould639b => {
            let m = (x - 1) / 2;
            let lhs = sum(1, m, |j| sign(j) * c((x + 1) / 2, j - 1) * c(x - j, m));
            (lhs, -sign((x + 1) / 2) * rat(x + 1, 2))
        }
        SumB | SumB2 | Roots => {
            return Err(Error::InvalidInput(format!("{} is a congruence, not an identity over Q", id.name)))
        }
    };
    Ok(pair)
}

/// S(n) = Σ_{k=1}^{n} (−1)^k C(n+k, k−1) C(n+1, k+1) H_{k+1}.
pub fn main17_sum(n: i64) -> Rational {
    sum(1, n, |k| sign(k) * c(n + k, k - 1) * c(n + 1, k + 1) * h(k + 1))
}

fn fp_binom(p: u64, n: i64, k: i64) -> FpElt {
    let b = crate::combinatorics::binom_int(n, k);
    let m = BigInt::from(p);
    FpElt::new(p, u64::try_from(((b % &m) + &m) % &m).expect("residue"))
}

fn fp_pow_signed(x: FpElt, e: i64) -> FpElt {
    if e >= 0 {
        x.pow(e as u64)
    } else {
        x.inv().expect("negative power of a unit").pow(e.unsigned_abs())
    }
}

/// Σ_{b=1}^{p−1} (λ − b)^a b^t over F_p, with 0^0 = 1.
fn sum_over_b(p: u64, lambda: FpElt, a: u64, t: i64) -> FpElt {
    (1..p).fold(FpElt::zero(p), |acc, b| {
        let b = FpElt::new(p, b);
        acc + (lambda - b).pow(a) * fp_pow_signed(b, t)
    })
}

/// (−1)^{1−t}·C(a, −t)·λ^{a+t} when t ≤ 0, and 0 when t > 0.
fn sumb_closed(p: u64, lambda: FpElt, a: u64, t: i64) -> FpElt {
    if t > 0 || -t > a as i64 {
        return FpElt::zero(p);
    }
    let s = FpElt::from_i64(p, if (1 - t).rem_euclid(2) == 0 { 1 } else { -1 });
    s * fp_binom(p, a as i64, -t) * lambda.pow((a as i64 + t) as u64)
}

fn check_sumb(p: u64) -> Result<()> {
    let pi = p as i64;
    for a in 0..=(p - 2) {
        for t in (2 - pi)..=(pi - 2) {
            if a as i64 + t >= pi - 1 {
                continue;
            }
            for l in 0..p {
                let lambda = FpElt::new(p, l);
                let lhs = sum_over_b(p, lambda, a, t);
                let rhs = sumb_closed(p, lambda, a, t);
                if lhs != rhs {
                    return Err(Error::IdentityFailed {
                        id: "SUMB".into(),
                        param: format!("p={p} a={a} t={t} lambda={l}"),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_sumb2(p: u64) -> Result<()> {
    let pi = p as i64;
    for t in (2 - pi)..=(pi - 3) {
        for l in 0..p {
            let lambda = FpElt::new(p, l);
            let lhs = sum_over_b(p, lambda, 2, t);
            let rhs = if (-2..=0).contains(&t) {
                sumb_closed(p, lambda, 2, t)
            } else if t == pi - 3 {
                FpElt::from_i64(p, -1)
            } else {
                FpElt::zero(p)
            };
            if lhs != rhs {
                return Err(Error::IdentityFailed {
                    id: "SUMB2".into(),
                    param: format!("p={p} t={t} lambda={l}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Σ_{i=0}^{p−1} [i]^j is p − 1 when (p−1) | j and 0 otherwise, modulo p^4,
/// for 1 ≤ j ≤ 2(p − 1).
pub fn check_roots(p: u64, precision: u32) -> Result<()> {
    let modulus = BigInt::from(p).pow(precision);
    let lifts: Vec<BigInt> = (0..p)
        .map(|i| teichmuller(&BigInt::from(i), p, precision))
        .map(|t| if t.is_zero() { BigInt::from(0) } else { t.unit_digits })
        .collect();
    for j in 1..=2 * (p - 1) {
        let total: BigInt = lifts.iter().map(|x| x.modpow(&BigInt::from(j), &modulus)).sum();
        let total = ((total % &modulus) + &modulus) % &modulus;
        let expected = if j % (p - 1) == 0 { BigInt::from(p - 1) } else { BigInt::from(0) };
        if total != expected {
            return Err(Error::IdentityFailed {
                id: "ROOTS".into(),
                param: format!("p={p} j={j}"),
                lhs: total.to_string(),
                rhs: expected.to_string(),
            });
        }
    }
    Ok(())
}

pub fn verify_identity(id: IdentityId) -> Result<bool> {
    match id.name {
        IdentityName::SumB | IdentityName::SumB2 | IdentityName::Roots => {
            if !id.name.accepts(id.param) {
                return Err(Error::InvalidInput(format!("{} needs a prime >= 5, got {}", id.name, id.param)));
            }
            match id.name {
                IdentityName::SumB => check_sumb(id.param)?,
                IdentityName::SumB2 => check_sumb2(id.param)?,
                _ => check_roots(id.param, 4)?,
            }
            Ok(true)
        }
        _ => {
            let (lhs, rhs) = evaluate(id)?;
            if lhs != rhs {
                return Err(Error::IdentityFailed {
                    id: id.name.name().into(),
                    param: format!("{}={}", id.name.param_label(), id.param),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            Ok(true)
        }
    }
}
