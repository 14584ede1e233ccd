//! Dense univariate polynomials; the home of the eigenvalue polynomials `q(z)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::poly::MultiPoly;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    /// `a + b·z`
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::from_coeffs(vec![a, b])
    }

    /// `c·z^e`
    pub fn monomial(e: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        UniPoly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + super::rational::to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// `z d/dz`
    pub fn euler(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// Multiplication by `z`.
    pub fn shift(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(Rational::zero());
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Synthetic division by `(z - root)`: returns quotient and remainder.
    pub fn div_linear(&self, root: &Rational) -> (UniPoly, Rational) {
        if self.coeffs.is_empty() {
            return (UniPoly::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (UniPoly::from_coeffs(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Exact quotient by `(z - 1)^power`.
    pub fn div_by_z_minus_one_pow(&self, power: u32) -> Result<UniPoly> {
        let one = Rational::one();
        let mut cur = self.clone();
        for _ in 0..power {
            let (q, r) = cur.div_linear(&one);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            cur = q;
        }
        Ok(cur)
    }

    /// Embeds `q(z)` as a multivariate polynomial in slot `slot` of `vars`.
    pub fn to_multi(&self, vars: Vec<String>, slot: usize) -> MultiPoly {
        let arity = vars.len();
        MultiPoly::from_terms(
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0u32; arity];
                e[slot] = i as u32;
                (e, c.clone())
            }),
        )
        .expect("exponent vectors sized to arity")
    }

    /// Reads back a polynomial whose only variable is `slot`.
    pub fn from_multi(p: &MultiPoly, slot: usize) -> Result<UniPoly> {
        let mut coeffs = vec![Rational::zero(); p.total_degree() as usize + 1];
        for (m, c) in p.terms() {
            let e = m.exps();
            if e.iter().enumerate().any(|(i, &v)| i != slot && v > 0) {
                return Err(Error::Invariant(format!(
                    "polynomial depends on slots other than {slot}"
                )));
            }
            coeffs[e[slot] as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let m = format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{m}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{m}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{m}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    /// Coefficient strings indexed by degree.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        v.serialize(s)
    }
}
