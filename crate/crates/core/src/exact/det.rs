//! Exact determinants over integral domains.
//!
//! Small matrices (order ≤ 5) use cofactor expansion; larger ones use
//! fraction-free Bareiss elimination, whose intermediate divisions are exact.

use num_traits::{One, Zero};

use super::poly::{ArithOp, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Ring operations needed by the determinant routines.
pub trait DetEntry: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn add_e(&self, other: &Self) -> Result<Self>;
    fn sub_e(&self, other: &Self) -> Result<Self>;
    fn mul_e(&self, other: &Self) -> Result<Self>;
    fn neg_e(&self) -> Self;
    fn div_exact_e(&self, other: &Self) -> Result<Self>;
}

impl DetEntry for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars().to_vec())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars().to_vec())
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn add_e(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Add)
    }
    fn sub_e(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Sub)
    }
    fn mul_e(&self, other: &Self) -> Result<Self> {
        self.arith(other, ArithOp::Mul)
    }
    fn neg_e(&self) -> Self {
        -self
    }
    fn div_exact_e(&self, other: &Self) -> Result<Self> {
        self.divide_exact(other)
    }
}

impl DetEntry for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn add_e(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn sub_e(&self, other: &Self) -> Result<Self> {
        Ok(self - other)
    }
    fn mul_e(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn neg_e(&self) -> Self {
        -self
    }
    fn div_exact_e(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }
}

const COFACTOR_MAX_ORDER: usize = 5;

pub fn determinant<T: DetEntry>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 0 {
        return Err(Error::OutOfRange("empty matrix".into()));
    }
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n <= COFACTOR_MAX_ORDER {
        cofactor(m)
    } else {
        bareiss(m)
    }
}

fn cofactor<T: DetEntry>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = m[0][0].zero_like();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero_entry() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul_e(&cofactor(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.add_e(&term)?
        } else {
            acc.sub_e(&term)?
        };
    }
    Ok(acc)
}

fn bareiss<T: DetEntry>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut negate = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero_entry() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero_entry()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(a[0][0].zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul_e(&a[k][k])?.sub_e(&a[i][k].mul_e(&a[k][j])?)?;
                a[i][j] = num.div_exact_e(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg_e() } else { d })
}
