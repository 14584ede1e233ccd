//! The monomial (`m`), elementary-product (`E`) and Schur (`s`) bases of
//! symmetric polynomials, their normalizations at `𝟏 = (1, …, 1)`, and
//! expansion of symmetric polynomials in each basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    determinant, format_rational, int, parse_rational, var_names, MultiPoly, Rational,
};
use crate::exact::rational::{binomial, factorial, pow};
use crate::partitions::{partitions_of, staircase_shift, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "E")]
    Elementary,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Monomial, Basis::Elementary, Basis::Schur];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "E",
            Basis::Schur => "s",
        }
    }

    /// `P_λ` together with its normalization.
    pub fn basis_poly(self, lambda: &Partition) -> Result<NormalizedBasisPoly> {
        match self {
            Basis::Monomial => monomial_sym(lambda),
            Basis::Elementary => e_poly(lambda),
            Basis::Schur => schur_poly(lambda),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "M" => Ok(Basis::Monomial),
            "e" | "E" => Ok(Basis::Elementary),
            "s" | "S" => Ok(Basis::Schur),
            _ => Err(Error::Parse(format!("unknown basis {s:?} (expected m, E or s)"))),
        }
    }
}

pub fn x_vars(n: usize) -> Vec<String> {
    var_names("x", n)
}

/// A basis polynomial `P_λ`, its value at `𝟏`, and `P̄_λ = P_λ / P_λ(𝟏)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedBasisPoly {
    pub raw: MultiPoly,
    pub value_at_one: Rational,
    pub normalized: MultiPoly,
}

impl NormalizedBasisPoly {
    fn from_raw(raw: MultiPoly, value_at_one: Rational) -> Result<Self> {
        if value_at_one.is_zero() {
            return Err(Error::Invariant("basis polynomial vanishes at 1".into()));
        }
        let normalized = raw.scale(&(Rational::one() / &value_at_one));
        Ok(NormalizedBasisPoly {
            raw,
            value_at_one,
            normalized,
        })
    }
}

fn ones(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

/// `Δ_n(x) = ∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let vars = x_vars(n);
    let mut acc = MultiPoly::one(vars.clone());
    for i in 0..n {
        for j in i + 1..n {
            let d = &MultiPoly::var(vars.clone(), i) - &MultiPoly::var(vars.clone(), j);
            acc = &acc * &d;
        }
    }
    acc
}

/// `Δ(v) = ∏_{i<j} (v_i − v_j)` for exact values.
pub fn vandermonde_value(v: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= &v[i] - &v[j];
        }
    }
    acc
}

fn distinct_permutations(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation until exhausted
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `m_λ`: sum over the distinct permutations of `x^λ`. The normalized form is
/// built independently as the average over all of `S_n` and checked against
/// `m_λ / m_λ(𝟏)`.
pub fn monomial_sym(lambda: &Partition) -> Result<NormalizedBasisPoly> {
    let n = lambda.len();
    let vars = x_vars(n);
    let raw = MultiPoly::from_terms(
        vars.clone(),
        distinct_permutations(lambda.parts())
            .into_iter()
            .map(|e| (e, Rational::one())),
    )?;
    let value = raw.eval(&ones(n))?;
    let out = NormalizedBasisPoly::from_raw(raw, value)?;

    let perms = all_permutations(n);
    let weight = Rational::one() / factorial(n as u32);
    let average = MultiPoly::from_terms(
        vars,
        perms.iter().map(|sigma| {
            (
                sigma.iter().map(|&s| lambda.parts()[s]).collect(),
                weight.clone(),
            )
        }),
    )?;
    if average != out.normalized {
        return Err(Error::Invariant(format!(
            "normalized m_{lambda} disagrees with the S_n average"
        )));
    }
    Ok(out)
}

/// `e_r(x_1, …, x_n)`.
pub fn elementary_sym(r: usize, n: usize) -> Result<MultiPoly> {
    if r > n {
        return Err(Error::OutOfRange(format!("e_{r} in {n} variables")));
    }
    let vars = x_vars(n);
    let mut parts = vec![1u32; r];
    parts.extend(std::iter::repeat(0).take(n - r));
    MultiPoly::from_terms(
        vars,
        distinct_permutations(&parts)
            .into_iter()
            .map(|e| (e, Rational::one())),
    )
}

/// `w_n(t) = ∏_i (1 + t x_i)` over slots `(x_1, …, x_n, t)`.
pub fn generating_function(n: usize) -> MultiPoly {
    let mut vars = x_vars(n);
    vars.push("t".into());
    let t = MultiPoly::var(vars.clone(), n);
    let one = MultiPoly::one(vars.clone());
    (0..n).fold(one.clone(), |acc, i| {
        let f = &one + &(&t * &MultiPoly::var(vars.clone(), i));
        &acc * &f
    })
}

/// Coefficient of `t^j` in a polynomial over `(x_1, …, x_n, t)`, as a
/// polynomial in the `x` slots.
pub fn t_coefficient(w: &MultiPoly, n: usize, j: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(x_vars(n));
    for (back, front) in w.split_front(n) {
        if back == [j] {
            out = &out + &front;
        }
    }
    Ok(out)
}

/// `E_λ = ∏_j e_j^{λ_j − λ_{j+1}}`.
pub fn e_poly(lambda: &Partition) -> Result<NormalizedBasisPoly> {
    let n = lambda.len();
    let mut raw = MultiPoly::one(x_vars(n));
    let mut value = Rational::one();
    for j in 1..=n {
        let d = lambda.diff(j, j + 1) as u32;
        if d == 0 {
            continue;
        }
        raw = &raw * &elementary_sym(j, n)?.pow(d);
        value *= pow(&binomial(n as u32, j as u32), d);
    }
    let out = NormalizedBasisPoly::from_raw(raw, value)?;
    if out.normalized.eval(&ones(n))? != Rational::one() {
        return Err(Error::Invariant(format!("Ē_{lambda}(1) ≠ 1")));
    }
    Ok(out)
}

/// Alternant `a_μ(x) = det{x_i^{μ_j}}`.
pub fn alternant(mu: &[u32]) -> Result<MultiPoly> {
    let n = mu.len();
    let vars = x_vars(n);
    let m: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            mu.iter()
                .map(|&e| {
                    let mut exps = vec![0; n];
                    exps[i] = e;
                    MultiPoly::monomial(vars.clone(), exps, Rational::one())
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Closed form `s_λ(𝟏) = Δ_n(μ)/Δ_n(δ)`.
pub fn schur_value_at_one(lambda: &Partition) -> Rational {
    let n = lambda.len();
    let mu: Vec<Rational> = staircase_shift(lambda)
        .parts()
        .iter()
        .map(|&m| int(m as i64))
        .collect();
    let delta: Vec<Rational> = (0..n).rev().map(|d| int(d as i64)).collect();
    vandermonde_value(&mu) / vandermonde_value(&delta)
}

/// Schur polynomial by the bialternant `a_{λ+δ} / a_δ`.
pub fn schur_poly(lambda: &Partition) -> Result<NormalizedBasisPoly> {
    let n = lambda.len();
    let mu = staircase_shift(lambda);
    let a_mu = alternant(mu.parts())?;
    let raw = a_mu.divide_exact(&vandermonde(n)).map_err(|e| match e {
        Error::NotDivisible => Error::Invariant(format!("a_μ not divisible by Δ for λ={lambda}")),
        other => other,
    })?;
    let direct = raw.eval(&ones(n))?;
    let closed = schur_value_at_one(lambda);
    if direct != closed {
        return Err(Error::Invariant(format!(
            "s_{lambda}(1): evaluation {direct} ≠ closed form {closed}"
        )));
    }
    NormalizedBasisPoly::from_raw(raw, direct)
}

/// Numerator `a_μ^{(k)}` and denominator `a_δ^{(k)}` of the Schur polynomial
/// restricted to `x_k = … = x_n = 1`, both as polynomials in `x_1, …, x_{k−1}`.
pub fn restricted_schur(lambda: &Partition, k: usize) -> Result<(MultiPoly, MultiPoly)> {
    let n = lambda.len();
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("k={k} for n={n}")));
    }
    let free = k - 1;
    let vars = x_vars(free);
    let mu = staircase_shift(lambda);
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for i in 0..free {
        rows.push(
            mu.parts()
                .iter()
                .map(|&e| {
                    let mut exps = vec![0; free];
                    exps[i] = e;
                    MultiPoly::monomial(vars.clone(), exps, Rational::one())
                })
                .collect(),
        );
    }
    for p in (0..=(n - k) as u32).rev() {
        rows.push(
            mu.parts()
                .iter()
                .map(|&m| MultiPoly::constant(vars.clone(), pow(&int(m as i64), p)))
                .collect(),
        );
    }
    let numerator = determinant(&rows)?;

    let mut denominator = MultiPoly::constant(
        vars.clone(),
        (1..=(n - k) as u32).map(factorial).product(),
    );
    let one = MultiPoly::one(vars.clone());
    for j in 0..free {
        let shifted = &MultiPoly::var(vars.clone(), j) - &one;
        denominator = &denominator * &shifted.pow((n - k + 1) as u32);
    }
    for i in 0..free {
        for j in i + 1..free {
            let d = &MultiPoly::var(vars.clone(), i) - &MultiPoly::var(vars.clone(), j);
            denominator = &denominator * &d;
        }
    }
    Ok((numerator, denominator))
}

/// `a_μ^{(k)} / a_δ^{(k)}` by exact division.
pub fn restricted_schur_ratio(lambda: &Partition, k: usize) -> Result<MultiPoly> {
    let (num, den) = restricted_schur(lambda, k)?;
    num.divide_exact(&den)
}

/// `f(x_1, …, x_{k−1}, 1, …, 1)` as a polynomial in the first `k − 1` slots.
pub fn restrict_to_ones(f: &MultiPoly, k: usize) -> Result<MultiPoly> {
    let n = f.arity();
    let mut g = f.clone();
    for slot in k - 1..n {
        g = g.eval_slot(slot, &Rational::one());
    }
    let map: Vec<Option<usize>> = (0..k - 1).map(Some).collect();
    g.remap(f.vars()[..k - 1].to_vec(), &map)
}

/// A symmetric polynomial written in one of the bases (raw, unnormalized
/// basis elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: Basis,
    pub n: usize,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl SymExpansion {
    pub fn reconstruct(&self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(x_vars(self.n));
        for (lambda, c) in &self.coeffs {
            let p = self.basis.basis_poly(lambda)?;
            acc = &acc + &p.raw.scale(c);
        }
        Ok(acc)
    }

    fn insert(&mut self, lambda: Partition, c: Rational) {
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    lambda: Partition,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    basis: Basis,
    n: usize,
    coeffs: Vec<CoeffJson>,
}

impl Serialize for SymExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries: Vec<(&Partition, &Rational)> = self.coeffs.iter().collect();
        // weight ascending, then reverse lexicographic
        entries.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.cmp(a.0)));
        ExpansionJson {
            basis: self.basis,
            n: self.n,
            coeffs: entries
                .into_iter()
                .map(|(l, c)| CoeffJson {
                    lambda: l.clone(),
                    c: format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ExpansionJson::deserialize(d)?;
        let mut out = SymExpansion {
            basis: raw.basis,
            n: raw.n,
            coeffs: BTreeMap::new(),
        };
        for c in raw.coeffs {
            if c.lambda.len() != raw.n {
                return Err(D::Error::custom("partition length differs from n"));
            }
            out.insert(c.lambda, parse_rational(&c.c).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

fn lex_leading(f: &MultiPoly) -> Option<(Vec<u32>, Rational)> {
    f.terms()
        .max_by(|a, b| a.0.exps().cmp(b.0.exps()))
        .map(|(m, c)| (m.exps().to_vec(), c.clone()))
}

/// Coefficients of `f` on `m_λ`: the coefficient of each sorted exponent.
fn monomial_coeffs(f: &MultiPoly) -> BTreeMap<Partition, Rational> {
    f.terms()
        .filter(|(m, _)| m.exps().windows(2).all(|w| w[0] >= w[1]))
        .map(|(m, c)| (Partition::new(m.exps().to_vec()).unwrap(), c.clone()))
        .collect()
}

/// Expands a symmetric polynomial in `n = f.arity()` variables.
pub fn expand_in_basis(f: &MultiPoly, basis: Basis) -> Result<SymExpansion> {
    let n = f.arity();
    if !f.is_symmetric_in(n) {
        return Err(Error::NotSymmetric(n));
    }
    let mut out = SymExpansion {
        basis,
        n,
        coeffs: BTreeMap::new(),
    };
    match basis {
        Basis::Monomial => out.coeffs = monomial_coeffs(f),
        Basis::Elementary => {
            let mut rem = f.clone();
            while let Some((e, c)) = lex_leading(&rem) {
                let lambda = Partition::new(e)?;
                let ep = e_poly(&lambda)?;
                rem = &rem - &ep.raw.scale(&c);
                out.insert(lambda, c);
            }
        }
        Basis::Schur => {
            let mut rem = monomial_coeffs(f);
            let mut cache: HashMap<Partition, BTreeMap<Partition, Rational>> = HashMap::new();
            // the lexicographically largest partition is dominance-maximal in the support
            while let Some((lambda, c)) = rem.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
                let s_in_m = match cache.get(&lambda) {
                    Some(v) => v,
                    None => {
                        let s = schur_poly(&lambda)?;
                        cache.entry(lambda.clone()).or_insert(monomial_coeffs(&s.raw))
                    }
                };
                for (nu, k) in s_in_m {
                    let entry = rem.entry(nu.clone()).or_insert_with(Rational::zero);
                    *entry -= k * &c;
                    if entry.is_zero() {
                        rem.remove(nu);
                    }
                }
                out.insert(lambda, c);
            }
        }
    }
    Ok(out)
}

/// Schur polynomial expanded on the monomial basis, for every partition of
/// the same weight (zeros omitted).
pub fn schur_in_monomials(lambda: &Partition) -> Result<BTreeMap<Partition, Rational>> {
    let s = schur_poly(lambda)?;
    let coeffs = expand_in_basis(&s.raw, Basis::Monomial)?.coeffs;
    debug_assert!(coeffs
        .keys()
        .all(|nu| partitions_of(lambda.weight(), lambda.len()).contains(nu)));
    Ok(coeffs)
}
