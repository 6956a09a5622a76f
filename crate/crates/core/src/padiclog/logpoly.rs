//! Polynomials and rational functions over Q, and formal sums
//! Σ Rᵢ(z)·log_L(z − zᵢ) + R₀(z) closed under d/dz.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{factorial, harmonic};
use crate::exactnum::{int, Rational};

/// Dense polynomial, coefficients from the constant term up, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// c·z^n.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        Poly::new(v)
    }

    /// z − a.
    pub fn linear(a: &Rational) -> Self {
        Poly::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); (self.degree() - d.degree() + 1).max(0) as usize];
        let lead = d.lead();
        while !rem.is_zero() && rem.degree() >= d.degree() {
            let shift = (rem.degree() - d.degree()) as usize;
            let c = rem.lead() / &lead;
            quot[shift] = c.clone();
            rem = rem.sub(&Poly::monomial(c, shift).mul(d));
        }
        (Poly::new(quot), rem)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.lead()))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// num/den in lowest terms with den monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::constant(Rational::one()) };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.lead();
        RatFunc { num: num.scale(&(Rational::one() / &lead)), den: den.scale(&(Rational::one() / lead)) }
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::constant(Rational::one()) }
    }

    pub fn zero() -> Self {
        RatFunc::poly(Poly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }

    pub fn derivative(&self) -> RatFunc {
        let num = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(num, self.den.mul(&self.den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Σ Rᵢ(z)·log_L(z − zᵢ) + R₀(z). Base points are the map keys, so they
/// are distinct; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LogPoly {
    pub terms: BTreeMap<Rational, RatFunc>,
    pub rational_part: Option<RatFunc>,
}

impl LogPoly {
    pub fn zero() -> Self {
        LogPoly::default()
    }

    pub fn log_term(coeff: RatFunc, base: Rational) -> Self {
        LogPoly::zero().add(&LogPoly { terms: BTreeMap::from([(base, coeff)]), rational_part: None })
    }

    pub fn rational(r: RatFunc) -> Self {
        LogPoly::zero().add(&LogPoly { terms: BTreeMap::new(), rational_part: Some(r) })
    }

    pub fn rational_part(&self) -> RatFunc {
        self.rational_part.clone().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, o: &LogPoly) -> LogPoly {
        let mut terms = self.terms.clone();
        for (z, c) in &o.terms {
            let sum = match terms.get(z) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(z);
            } else {
                terms.insert(z.clone(), sum);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let r = self.rational_part().add(&o.rational_part());
        LogPoly { terms, rational_part: (!r.is_zero()).then_some(r) }
    }

    pub fn scale(&self, c: &Rational) -> LogPoly {
        if c.is_zero() {
            return LogPoly::zero();
        }
        LogPoly {
            terms: self.terms.iter().map(|(z, r)| (z.clone(), r.scale(c))).collect(),
            rational_part: self.rational_part.as_ref().map(|r| r.scale(c)),
        }
    }
}

impl fmt::Display for LogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(z, c)| {
                if z.is_zero() {
                    format!("({c})*log(z)")
                } else {
                    format!("({c})*log(z - {z})")
                }
            })
            .collect();
        if let Some(r) = &self.rational_part {
            parts.push(format!("{r}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// d/dz, using d/dz log_L(z − z₀) = 1/(z − z₀) and the product rule.
pub fn formal_derivative(f: &LogPoly) -> LogPoly {
    let mut out = LogPoly::rational(f.rational_part().derivative());
    for (z0, c) in &f.terms {
        out = out.add(&LogPoly::log_term(c.derivative(), z0.clone()));
        let quotient = c.mul(&RatFunc::new(Poly::constant(Rational::one()), Poly::linear(z0)));
        out = out.add(&LogPoly::rational(quotient));
    }
    out
}

/// d^j/dz^j (z^n log_L z) = n!/(n−j)!·[z^{n−j} log_L z + (H_n − H_{n−j}) z^{n−j}].
pub fn check_derivative_formula(n: u64, j: u64) -> bool {
    assert!(j <= n, "need j <= n");
    let zero = Rational::zero();
    let mut f = LogPoly::log_term(RatFunc::poly(Poly::monomial(int(1), n as usize)), zero.clone());
    for _ in 0..j {
        f = formal_derivative(&f);
    }
    let scale = Rational::new(factorial(n), factorial(n - j));
    let power = Poly::monomial(int(1), (n - j) as usize);
    let expected = LogPoly::log_term(RatFunc::poly(power.clone()), zero)
        .add(&LogPoly::rational(RatFunc::poly(power.scale(&(harmonic(n) - harmonic(n - j))))))
        .scale(&scale);
    f == expected
}
