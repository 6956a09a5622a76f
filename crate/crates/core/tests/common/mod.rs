//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the library's arithmetic; values are rebuilt
//! from plain big rationals so that a bug in the library cannot hide
//! behind the same bug in its check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use modp_reduction::classifier::{classify_full, ClassifierInput, ReductionResult};
use modp_reduction::exactnum::QuadElt;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn harmonic(n: u64) -> Q {
    (1..=n).fold(Q::zero(), |acc, j| acc + q(1, j as i64))
}

pub fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

fn int_val(n: &BigInt, p: u64) -> i64 {
    let pb = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    v
}

pub fn val(x: &Q, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(int_val(x.numer(), p) - int_val(x.denom(), p))
    }
}

pub fn pow_p(p: u64, e: i64) -> Q {
    let base = Q::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        base
    } else {
        base.recip()
    }
}

/// x mod m for a rational whose denominator is prime to m.
pub fn rat_mod(x: &Q, m: &BigInt) -> BigInt {
    let g = x.denom().extended_gcd(m);
    assert!(g.gcd.is_one(), "denominator not invertible");
    (x.numer() * g.x).mod_floor(m)
}

/// a + b√p as a pair of rationals.
#[derive(Clone, Debug)]
pub struct Surd {
    pub a: Q,
    pub b: Q,
}

impl Surd {
    /// Twice the valuation; None for zero.
    pub fn twice_val(&self, p: u64) -> Option<i64> {
        let va = val(&self.a, p).map(|v| 2 * v);
        let vb = val(&self.b, p).map(|v| 2 * v + 1);
        match (va, vb) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x),
            (Some(x), Some(y)) => Some(x.min(y)),
        }
    }

    /// Multiply by (√p)^e.
    pub fn shift(&self, p: u64, e: i64) -> Surd {
        if e % 2 == 0 {
            let s = pow_p(p, e / 2);
            Surd { a: &self.a * &s, b: &self.b * &s }
        } else {
            let s = pow_p(p, (e - 1).div_euclid(2));
            let pq = Q::from_integer(p.into());
            Surd { a: &self.b * &pq * &s, b: &self.a * &s }
        }
    }

    /// Image in F_p of an element of valuation ≥ 0.
    pub fn residue(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        if self.a.is_zero() {
            return 0;
        }
        rat_mod(&self.a, &m).try_into().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Irreducible { c: u64 },
    Split { lambda: u64, e1: u64, e2: u64 },
    SelfDual { trace: u64, e: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub twice_nu: Option<i64>,
    pub kind: &'static str,
    pub i: u64,
    pub outcome: Outcome,
}

pub type Region = (&'static str, i64, Box<dyn Fn(Option<i64>) -> bool>);

/// Every region of the case table for weight r as (kind, i, membership
/// test on twice ν, None meaning ν = ∞).
pub fn regions(r: i64) -> Vec<Region> {
    let mut out: Vec<Region> = Vec::new();
    let last_boundary = if r % 2 == 1 { (r - 1) / 2 } else { r / 2 };
    for i in 1..=last_boundary {
        out.push(("boundary", i, Box::new(move |t| t == Some(2 * i - r))));
    }
    for i in 1..=last_boundary + 1 {
        let lo = if i == 1 { i64::MIN } else { 2 * (i - 1) - r };
        let hi = 2 * i - r;
        let is_last = i == last_boundary + 1;
        if r % 2 == 0 && is_last {
            out.push(("even_last_interval", i, Box::new(move |t| t.is_none_or(|t| t > lo))));
        } else {
            out.push(("interval", i, Box::new(move |t| t.is_some_and(|t| t > lo && t < hi))));
        }
    }
    if r % 2 == 1 {
        let i = (r + 1) / 2;
        out.push(("self_dual_terminal", i, Box::new(|t| t.is_none_or(|t| t >= 1))));
    }
    out
}

/// The theorem's case table walked by hand for L = a + b√p.
pub fn hand_walk(p: u64, k: u64, a: &Q, b: &Q) -> Walk {
    let r = k as i64 - 2;
    let (vm, vp) = if r % 2 == 1 { ((r - 1) / 2, (r + 1) / 2) } else { ((r - 2) / 2, (r + 2) / 2) };
    let m = Surd { a: a - harmonic(vm as u64) - harmonic(vp as u64), b: b.clone() };
    let t = m.twice_val(p);
    let hits: Vec<_> = regions(r).into_iter().filter(|(_, _, f)| f(t)).collect();
    assert_eq!(hits.len(), 1, "case table is not a partition at r={r}, 2nu={t:?}");
    let (kind, i, _) = &hits[0];
    let i = *i;
    let pm1 = p as i64 - 1;
    let lambda_arg = |i: i64| {
        let coeff = Q::from_integer(choose(r + 1 - i, i) * BigInt::from(i) * if i % 2 == 0 { 1 } else { -1 });
        let s = m.shift(p, r - 2 * i);
        Surd { a: &s.a * &coeff, b: &s.b * &coeff }
    };
    let outcome = match *kind {
        "interval" | "even_last_interval" => {
            let c = (r + 1 + (i - 1) * pm1) as u64;
            Outcome::Irreducible { c: c % (p * p - 1) }
        }
        "boundary" => {
            let x = lambda_arg(i);
            assert_eq!(x.twice_val(p), Some(0));
            Outcome::Split { lambda: x.residue(p), e1: (r + 1 - i).rem_euclid(pm1) as u64, e2: i.rem_euclid(pm1) as u64 }
        }
        _ => Outcome::SelfDual { trace: lambda_arg(i).residue(p), e: ((r + 1) / 2).rem_euclid(pm1) as u64 },
    };
    Walk { twice_nu: t, kind, i: i as u64, outcome }
}

/// Compares the classifier with the hand walk on one input.
pub fn agrees_with_walk(p: u64, k: u64, a: &Q, b: &Q) -> Result<(), String> {
    let l = QuadElt::new(p, a.clone(), b.clone());
    let c = classify_full(&ClassifierInput::new(p, k, l.clone()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let w = hand_walk(p, k, a, b);
    let ctx = || format!("p={p} k={k} L={l}");
    if c.nu.twice() != w.twice_nu {
        return Err(format!("{}: nu {} vs 2nu {:?}", ctx(), c.nu, w.twice_nu));
    }
    if c.case.kind.name() != w.kind || c.case.i != w.i {
        return Err(format!("{}: case {} i={} vs {} i={}", ctx(), c.case.kind.name(), c.case.i, w.kind, w.i));
    }
    let same = match (&c.result, &w.outcome) {
        (ReductionResult::Irreducible { c, .. }, Outcome::Irreducible { c: c2 }) => c == c2,
        (ReductionResult::ReducibleSplit { lambda, lambda_inv, e1, e2 }, Outcome::Split { lambda: l2, e1: f1, e2: f2 }) => {
            lambda.in_base_field()
                && lambda.c0.value == *l2
                && (lambda.c0.value * lambda_inv.c0.value) % p == 1
                && e1 == f1
                && e2 == f2
        }
        (ReductionResult::SelfDual { trace_c, lambda, lambda_inv, e }, Outcome::SelfDual { trace, e: e2 }) => {
            let sum = *lambda + *lambda_inv;
            let prod = *lambda * *lambda_inv;
            trace_c.value == *trace && sum.in_base_field() && sum.c0.value == *trace && prod.is_one() && e == e2
        }
        _ => false,
    };
    if same {
        Ok(())
    } else {
        Err(format!("{}: {} vs {:?}", ctx(), c.result, w.outcome))
    }
}

/// A rational with numerator and denominator prime to p.
pub fn random_unit<R: Rng>(p: u64, rng: &mut R) -> Q {
    loop {
        let n = rng.gen_range(-500i64..=500);
        let d = rng.gen_range(1i64..=500);
        if n % p as i64 != 0 && d % p as i64 != 0 {
            return q(n, d);
        }
    }
}

/// L = H₋ + H₊ + (√p)^t·(u + w√p) with u a unit and p | w, so that
/// 2ν = t exactly; t = None gives L = H₋ + H₊.
pub fn l_with_twice_nu<R: Rng>(p: u64, k: u64, t: Option<i64>, rng: &mut R) -> (Q, Q) {
    let r = k as i64 - 2;
    let (vm, vp) = if r % 2 == 1 { ((r - 1) / 2, (r + 1) / 2) } else { ((r - 2) / 2, (r + 2) / 2) };
    let centre = harmonic(vm as u64) + harmonic(vp as u64);
    let Some(t) = t else {
        return (centre, Q::zero());
    };
    // u is a unit; the √p-part carries an extra factor p so it never
    // lowers the valuation.
    let u = random_unit(p, rng);
    let w = if rng.gen_bool(0.5) { Q::zero() } else { random_unit(p, rng) * Q::from_integer(p.into()) };
    let s = Surd { a: u, b: w }.shift(p, t);
    (centre + s.a, s.b)
}

// ---------------------------------------------------------------------
// Number-theory kernels

/// log(x) mod p^n for a rational principal unit x ≡ 1 mod p, summed
/// exactly over Q far enough that every dropped term vanishes mod p^n.
pub fn log_series_oracle(x: &Q, p: u64, n: u32) -> BigInt {
    let t = x - Q::one();
    let vt = val(&t, p).unwrap_or(i64::MAX);
    assert!(vt >= 1, "not a principal unit");
    let m = BigInt::from(p).pow(n);
    let mut acc = Q::zero();
    let mut power = Q::one();
    let mut k = 1i64;
    loop {
        power = &power * &t;
        if vt.saturating_mul(k) - (k as f64).log(p as f64).floor() as i64 > n as i64 && k > n as i64 {
            break;
        }
        let term = &power / Q::from_integer(k.into());
        acc = if k % 2 == 1 { acc + term } else { acc - term };
        k += 1;
    }
    rat_mod(&acc, &m)
}

/// log of the unit part of z, via log(u) = log(u^{p−1})/(p−1), which
/// avoids Teichmüller lifts altogether.
pub fn unit_log_oracle(z: &Q, p: u64, n: u32) -> BigInt {
    let v = val(z, p).expect("nonzero");
    let u = z * pow_p(p, -v);
    let up = (0..p - 1).fold(Q::one(), |acc, _| acc * &u);
    let m = BigInt::from(p).pow(n);
    let l = log_series_oracle(&up, p, n);
    rat_mod(&Q::new(l, BigInt::from(p - 1)), &m)
}

/// Σ_{i=0}^{p−1} i^l with 0^0 = 1.
pub fn power_sum(p: u64, l: u32) -> BigInt {
    (0..p).map(|i| BigInt::from(i).pow(l)).sum()
}

// ---------------------------------------------------------------------
// Matrix systems

/// The B11 system rebuilt from its entry formula and solved by forward
/// substitution (it is lower triangular). Returns x_{(r+1)/2} as
/// (constant, L-coefficient).
pub fn b11_middle_unknown(r: u64) -> (Q, Q) {
    let r = r as i64;
    let n = (r + 1) / 2;
    let top = n;
    let fact = |c: i64| (1..=c).fold(BigInt::one(), |acc, t| acc * BigInt::from(t));
    let entry = |j: i64, c: i64| {
        let b = choose(top - c, j - c);
        if b.is_zero() {
            return Q::zero();
        }
        let den: BigInt = (0..=c).map(|t| BigInt::from(r - j - t)).product();
        Q::new(b * fact(c) * BigInt::from(r - c), den)
    };
    // rhs_j = C(top, j)(L − H_{top−j})
    let mut xc: Vec<Q> = Vec::new();
    let mut xl: Vec<Q> = Vec::new();
    for j in 0..n {
        let b = Q::from_integer(choose(top, j));
        let mut c0 = -(&b * harmonic((top - j) as u64));
        let mut c1 = b;
        for c in 0..j {
            let e = entry(j, c);
            c0 -= &e * &xc[c as usize];
            c1 -= &e * &xl[c as usize];
        }
        let d = entry(j, j);
        xc.push(c0 / &d);
        xl.push(c1 / &d);
    }
    // column c holds x_{r−c}; x_{(r+1)/2} is column (r−1)/2
    let col = ((r - 1) / 2) as usize;
    (xc[col].clone(), xl[col].clone())
}

/// (−1)^{(r−1)/2}(L − H₋ − H₊) as (constant, L-coefficient), odd r.
pub fn b11_expected(r: u64) -> (Q, Q) {
    let s = if ((r - 1) / 2).is_multiple_of(2) { Q::one() } else { -Q::one() };
    let h = harmonic((r - 1) / 2) + harmonic(r.div_ceil(2));
    (-(&s * h), s)
}

/// Σ_{k=1}^{n} (−1)^k C(n+k, k−1) C(n+1, k+1) H_{k+1}.
pub fn main17_oracle(n: i64) -> Q {
    (1..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Q::from_integer(choose(n + k, k - 1) * choose(n + 1, k + 1) * sign) * harmonic(k as u64 + 1)
        })
        .fold(Q::zero(), |a, b| a + b)
}
