//! Sparse polynomials over the rationals in two commuting variables `m`, `k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact polynomial in `m` and `k`; keys are `(deg_m, deg_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, deg_m: u32, deg_k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_m, deg_k), c);
        p
    }

    pub fn m() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn k() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `c0 + cm * m + ck * k`.
    pub fn linear(c0: BigRational, cm: BigRational, ck: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c0);
        p.add_term((1, 0), cm);
        p.add_term((0, 1), ck);
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, deg_m: u32, deg_k: u32) -> BigRational {
        self.terms
            .get(&(deg_m, deg_k))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Degree in `m`; `None` for the zero polynomial.
    pub fn degree_m(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn degree_k(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (&key, v) in &self.terms {
            out.add_term(key, v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, m: &BigRational, k: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(a, b), c)| {
            acc + c * pow_rational(m, a) * pow_rational(k, b)
        })
    }

    /// Ring homomorphism `k -> replacement`, `m` fixed.
    pub fn substitute_k(&self, replacement: &BivariatePolynomial) -> Self {
        let max_k = self.degree_k().unwrap_or(0);
        let powers: Vec<BivariatePolynomial> = (0..=max_k)
            .scan(Self::one(), |acc, _| {
                let current = acc.clone();
                *acc = &*acc * replacement;
                Some(current)
            })
            .collect();
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let mono = Self::monomial(c.clone(), a, 0);
            out = &out + &(&mono * &powers[b as usize]);
        }
        out
    }
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&key, v) in &rhs.terms {
            out.add_term(key, v.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest total degree first
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        for (n, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let negative = c < &BigRational::zero();
            let abs = if negative { -c } else { c.clone() };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_unit = abs.is_one();
            let has_vars = key.0 + key.1 > 0;
            if !is_unit || !has_vars {
                write!(f, "{abs}")?;
            }
            let mut vars = Vec::new();
            for (name, e) in [("m", key.0), ("k", key.1)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            if !vars.is_empty() {
                if !is_unit {
                    f.write_str("*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}
