//! Sparse multivariate polynomials over [`Rational`].
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! reverse lexicographic, so iteration is ascending grevlex and the leading
//! term is the last entry. Every polynomial carries display names for its
//! variable slots; binary operations require both arity and names to agree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, to_f64, Rational};
use crate::error::{Error, Result};

/// Exponent vector of a single term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic: higher total degree wins; on ties the
    /// monomial with the smaller exponent in the last differing slot is larger.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Standard slot names `prefix1, …, prefixN`.
pub fn var_names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        let m = Monomial::one(p.arity());
        p.add_term(m, c);
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    /// The single variable in `slot`.
    pub fn var(vars: Vec<String>, slot: usize) -> Self {
        assert!(slot < vars.len(), "slot {slot} out of range");
        let mut e = vec![0; vars.len()];
        e[slot] = 1;
        MultiPoly::monomial(vars, e, Rational::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(exps), c);
        p
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.arity() {
                return Err(Error::ArityMismatch {
                    left: p.arity(),
                    right: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &MultiPoly, op: ArithOp) -> Result<MultiPoly> {
        self.check_compatible(other)?;
        Ok(match op {
            ArithOp::Add => {
                let mut out = self.clone();
                for (m, c) in &other.terms {
                    out.add_term(m.clone(), c.clone());
                }
                out
            }
            ArithOp::Sub => {
                let mut out = self.clone();
                for (m, c) in &other.terms {
                    out.add_term(m.clone(), -c.clone());
                }
                out
            }
            ArithOp::Mul => {
                let mut out = MultiPoly::zero(self.vars.clone());
                for (ma, ca) in &self.terms {
                    for (mb, cb) in &other.terms {
                        out.add_term(ma.mul(mb), ca * cb);
                    }
                }
                out
            }
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies every coefficient by `factor(exponents)`; used for operators
    /// that are diagonal on monomials (polynomials in the Euler operators).
    pub fn scale_terms<F>(&self, mut factor: F) -> MultiPoly
    where
        F: FnMut(&[u32]) -> Rational,
    {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let f = factor(&m.0);
            out.add_term(m.clone(), c * f);
        }
        out
    }

    /// Exact quotient `self / den`; errors if the division leaves a remainder.
    pub fn divide_exact(&self, den: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(den)?;
        let (lm, lc) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars.clone());
        while let Some((rm, rc)) = rem.leading_term() {
            if !lm.divides(rm) {
                return Err(Error::NotDivisible);
            }
            let qm = rm.div(&lm);
            let qc = rc / &lc;
            for (m, c) in &den.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Composition `f(images[0], …, images[arity-1])`.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: images.len(),
            });
        }
        let out_vars = match images.first() {
            Some(p) => p.vars.clone(),
            None => Vec::new(),
        };
        for img in images {
            if img.vars != out_vars {
                return Err(Error::VariableMismatch {
                    left: out_vars.clone(),
                    right: img.vars.clone(),
                });
            }
        }
        if images.is_empty() {
            return Ok(MultiPoly::constant(
                out_vars,
                self.as_constant().unwrap_or_else(Rational::zero),
            ));
        }
        // powers[slot][e] = images[slot]^e, built lazily
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|_| vec![MultiPoly::one(out_vars.clone())])
            .collect();
        let mut out = MultiPoly::zero(out_vars.clone());
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars.clone(), c.clone());
            for (slot, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[slot].len() <= e as usize {
                    let next = powers[slot].last().unwrap() * &images[slot];
                    powers[slot].push(next);
                }
                term = &term * &powers[slot][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Euler operator `x_slot ∂/∂x_slot`.
    pub fn apply_euler(&self, slot: usize) -> MultiPoly {
        assert!(slot < self.arity(), "slot {slot} out of range");
        self.scale_terms(|e| Rational::from_integer(e[slot].into()))
    }

    pub fn partial(&self, slot: usize) -> MultiPoly {
        assert!(slot < self.arity(), "slot {slot} out of range");
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[slot];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[slot] -= 1;
            out.add_term(nm, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Antiderivative in `slot` with zero constant of integration.
    pub fn antiderivative(&self, slot: usize) -> MultiPoly {
        assert!(slot < self.arity(), "slot {slot} out of range");
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm.0[slot] += 1;
            let e = nm.0[slot];
            out.add_term(nm, c / Rational::from_integer(e.into()));
        }
        out
    }

    /// Replaces variable `slot` by the constant `value`; arity is kept and the
    /// slot exponent becomes zero.
    pub fn eval_slot(&self, slot: usize, value: &Rational) -> MultiPoly {
        assert!(slot < self.arity(), "slot {slot} out of range");
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let e = std::mem::replace(&mut nm.0[slot], 0);
            out.add_term(nm, c * super::rational::pow(value, e));
        }
        out
    }

    /// Definite integral in `slot` over `[lo, hi]`; the slot survives with
    /// exponent zero.
    pub fn integrate_slot(&self, slot: usize, lo: &Rational, hi: &Rational) -> MultiPoly {
        let anti = self.antiderivative(slot);
        &anti.eval_slot(slot, hi) - &anti.eval_slot(slot, lo)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= super::rational::pow(x, e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Floating evaluation; coefficients are rounded only here.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(to_f64(c), |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum())
    }

    /// Builds a polynomial over new slots: slot `i` of the result takes the
    /// exponent of old slot `map[i]`, or zero when `map[i]` is `None`. Every
    /// old slot not referenced must have exponent zero in every term.
    pub fn remap(&self, vars: Vec<String>, map: &[Option<usize>]) -> Result<MultiPoly> {
        if map.len() != vars.len() {
            return Err(Error::ArityMismatch {
                left: vars.len(),
                right: map.len(),
            });
        }
        let mut used = vec![false; self.arity()];
        for s in map.iter().flatten() {
            if *s >= self.arity() {
                return Err(Error::OutOfRange(format!("slot {s}")));
            }
            used[*s] = true;
        }
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            if m.0.iter().zip(&used).any(|(&e, &u)| e > 0 && !u) {
                return Err(Error::Invariant(format!(
                    "remap drops a slot that is still present in {m:?}"
                )));
            }
            let e = map.iter().map(|s| s.map_or(0, |s| m.0[s])).collect();
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same terms under new slot names.
    pub fn with_vars(&self, vars: Vec<String>) -> Result<MultiPoly> {
        if vars.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: vars.len(),
            });
        }
        Ok(MultiPoly {
            vars,
            terms: self.terms.clone(),
        })
    }

    /// Appends new slots (exponent zero everywhere).
    pub fn extend_vars(&self, extra: &[String]) -> MultiPoly {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        let pad = extra.len();
        MultiPoly {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.extend(std::iter::repeat(0).take(pad));
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn swap_slots(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e.0.swap(i, j);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Symmetry in the first `n` slots, checked with adjacent transpositions.
    pub fn is_symmetric_in(&self, n: usize) -> bool {
        (0..n.saturating_sub(1)).all(|i| self.swap_slots(i, i + 1) == *self)
    }

    /// Splits off the slots `n..` as coefficients: returns a map from the
    /// trailing exponent vector to the polynomial in the first `n` slots.
    pub fn split_front(&self, n: usize) -> BTreeMap<Vec<u32>, MultiPoly> {
        let front_vars = self.vars[..n].to_vec();
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (front, back) = m.0.split_at(n);
            out.entry(back.to_vec())
                .or_insert_with(|| MultiPoly::zero(front_vars.clone()))
                .add_term(Monomial(front.to_vec()), c.clone());
        }
        out
    }

    fn fmt_term(&self, m: &Monomial, c: &Rational, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let mut factors: Vec<String> = Vec::new();
        for (name, &e) in self.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => factors.push(name.clone()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            write!(f, "{}", format_rational(&mag))
        } else if mag.is_one() {
            write!(f, "{}", factors.join("*"))
        } else {
            write!(f, "{}*{}", format_rational(&mag), factors.join("*"))
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            self.fmt_term(m, c, i == 0, f)?;
        }
        Ok(())
    }
}

impl<'a> Add for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, ArithOp::Add).expect("incompatible operands")
    }
}

impl<'a> Sub for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, ArithOp::Sub).expect("incompatible operands")
    }
}

impl<'a> Mul for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, ArithOp::Mul).expect("incompatible operands")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    /// Terms are emitted leading-first (descending grevlex).
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    e: m.0.clone(),
                    c: format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = parse_rational(&t.c).map_err(D::Error::custom)?;
            terms.push((t.e, c));
        }
        MultiPoly::from_terms(raw.vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn xs(n: usize) -> Vec<String> {
        var_names("x", n)
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(xs(n), i)
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(2, 0), x(2, 1));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn additive_identity_and_distribution() {
        let f = &x(2, 0) + &x(2, 1);
        assert_eq!(&f + &MultiPoly::zero(xs(2)), f);
        let g = &f * &(&x(2, 0) * &x(2, 1));
        let expected = MultiPoly::from_terms(xs(2), [(vec![2, 1], int(1)), (vec![1, 2], int(1))]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn arity_and_name_mismatch() {
        assert!(matches!(
            x(2, 0).arith(&x(3, 0), ArithOp::Add),
            Err(Error::ArityMismatch { .. })
        ));
        let z = MultiPoly::var(var_names("z", 2), 0);
        assert!(matches!(
            x(2, 0).arith(&z, ArithOp::Mul),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn exact_division() {
        let (a, b) = (x(2, 0), x(2, 1));
        let num = &(&a * &a) - &(&b * &b);
        assert_eq!(num.divide_exact(&(&a - &b)).unwrap(), &a + &b);
        assert_eq!(num.divide_exact(&MultiPoly::one(xs(2))).unwrap(), num);
        assert_eq!(num.divide_exact(&(&a + &a)).unwrap_err(), Error::NotDivisible);
        assert_eq!(
            num.divide_exact(&MultiPoly::zero(xs(2))).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn grevlex_order() {
        // x1^2 > x1x2 > x2^2 > x1 > x2 > 1 for two variables
        let mut order: Vec<Monomial> = [vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]
            .into_iter()
            .map(Monomial)
            .collect();
        order.reverse();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted.first().unwrap().0, vec![0, 0]);
        assert_eq!(sorted.last().unwrap().0, vec![2, 0]);
        // grevlex distinguishes from lex on x1x3 vs x2^2 (degree 2, three variables)
        assert!(Monomial(vec![0, 2, 0]) > Monomial(vec![1, 0, 1]));
    }

    #[test]
    fn substitution() {
        let f = &x(2, 0) * &x(2, 1);
        let vars = vec!["x1".to_string(), "x2".to_string(), "z".to_string()];
        let z = MultiPoly::var(vars.clone(), 2);
        let images = [&z * &MultiPoly::var(vars.clone(), 0), MultiPoly::var(vars.clone(), 1)];
        let expected = MultiPoly::monomial(vars, vec![1, 1, 1], int(1));
        assert_eq!(f.substitute(&images).unwrap(), expected);
        assert_eq!(f.substitute(&[x(2, 0), x(2, 1)]).unwrap(), f);
        assert!(f.substitute(&[x(2, 0)]).is_err());
    }

    #[test]
    fn euler_operator() {
        let m = MultiPoly::monomial(xs(2), vec![3, 1], int(1));
        assert_eq!(m.apply_euler(0), m.scale(&int(3)));
        assert!(MultiPoly::constant(xs(2), int(5)).apply_euler(0).is_zero());
        let a = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        assert_eq!(&a.apply_euler(0) + &a.apply_euler(1), a.scale(&int(2)));
    }

    #[test]
    fn evaluation() {
        let f = &x(2, 0) + &x(2, 1);
        assert_eq!(f.eval(&[int(1), int(1)]).unwrap(), int(2));
        assert_eq!(f.eval(&[int(1), int(2)]).unwrap(), int(3));
        assert!(f.eval(&[int(1)]).is_err());
        assert_eq!(f.eval_f64(&[0.5, 0.25]).unwrap(), 0.75);
    }

    #[test]
    fn integration_in_a_slot() {
        let f = x(2, 0).pow(2);
        let g = f.integrate_slot(0, &int(0), &int(3));
        assert_eq!(g, MultiPoly::constant(xs(2), int(9)));
        assert_eq!(x(1, 0).antiderivative(0), MultiPoly::monomial(xs(1), vec![2], rat(1, 2)));
    }

    #[test]
    fn remap_slots() {
        let f = &x(3, 0) * &x(3, 1);
        let g = f.remap(var_names("z", 2), &[Some(1), Some(0)]).unwrap();
        assert_eq!(g, MultiPoly::monomial(var_names("z", 2), vec![1, 1], int(1)));
        assert!(f.remap(var_names("z", 1), &[Some(0)]).is_err());
    }

    #[test]
    fn json_round_trip_and_order() {
        let f = MultiPoly::from_terms(xs(2), [(vec![2, 0], rat(1, 2)), (vec![0, 2], rat(1, 2)), (vec![0, 0], int(-3))]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["x1","x2"],"terms":[{"e":[2,0],"c":"1/2"},{"e":[0,2],"c":"1/2"},{"e":[0,0],"c":"-3"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn display() {
        let f = MultiPoly::from_terms(xs(2), [(vec![2, 0], rat(1, 2)), (vec![0, 1], int(-1))]).unwrap();
        assert_eq!(f.to_string(), "1/2*x1^2 - x2");
    }
}
