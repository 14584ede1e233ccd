//! Factorizing operators for the normalized elementary-product basis `Ē_λ`.
//!
//! Symmetric polynomials are moved to ε-coordinates (`ε_j = e_j(x)`) by Gauss
//! reduction; every operator then acts by substituting images for the `ε_j`.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::diagonal::{map_front, rho};
use crate::error::{Error, Result};
use crate::exact::rational::binomial;
use crate::exact::{int, var_names, MultiPoly, Rational, UniPoly};
use crate::partitions::Partition;
use crate::sym_bases::{e_poly, elementary_sym, expand_in_basis, x_vars, Basis};

pub fn eps_vars(n: usize) -> Vec<String> {
    var_names("eps", n)
}

/// A symmetric polynomial written as a polynomial in `ε_1, …, ε_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsCoordinates {
    pub poly: MultiPoly,
}

impl EpsCoordinates {
    pub fn n(&self) -> usize {
        self.poly.arity()
    }

    /// `ε_j ← e_j(x)`.
    pub fn to_x(&self) -> Result<MultiPoly> {
        let n = self.n();
        let images = (1..=n)
            .map(|j| elementary_sym(j, n))
            .collect::<Result<Vec<_>>>()?;
        self.poly.substitute(&images)
    }
}

/// `S_n^{(0)}`: `E_λ ↦ ∏ ε_j^{λ_j − λ_{j+1}}`.
pub fn s0_forward(f: &MultiPoly) -> Result<EpsCoordinates> {
    let n = f.arity();
    let exp = expand_in_basis(f, Basis::Elementary)?;
    let terms = exp.coeffs.iter().map(|(lambda, c)| {
        let e: Vec<u32> = (1..=n).map(|j| lambda.diff(j, j + 1) as u32).collect();
        (e, c.clone())
    });
    Ok(EpsCoordinates {
        poly: MultiPoly::from_terms(eps_vars(n), terms)?,
    })
}

/// `1 + (z − 1) j / n` as a polynomial over `vars` with `z` in `z_slot`.
fn scaling(vars: &[String], z_slot: usize, j: usize, n: usize) -> MultiPoly {
    let ratio = Rational::new((j as i64).into(), (n as i64).into());
    let z = MultiPoly::var(vars.to_vec(), z_slot);
    let one = MultiPoly::one(vars.to_vec());
    &one + &(&z - &one).scale(&ratio)
}

/// `H_j = (S^{(0)})⁻¹ ε_j∂/∂ε_j S^{(0)}`.
pub fn h_e_apply(j: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    let eps = s0_forward(f)?;
    EpsCoordinates {
        poly: eps.poly.apply_euler(j - 1),
    }
    .to_x()
}

/// Value with gradient, over exact rationals.
#[derive(Clone, Debug, PartialEq)]
struct Dual {
    v: Rational,
    g: Vec<Rational>,
}

impl Dual {
    fn constant(v: Rational, dim: usize) -> Self {
        Dual {
            v,
            g: vec![Rational::zero(); dim],
        }
    }

    fn variable(v: Rational, slot: usize, dim: usize) -> Self {
        let mut g = vec![Rational::zero(); dim];
        g[slot] = Rational::one();
        Dual { v, g }
    }

    fn recip(&self) -> Result<Self> {
        if self.v.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = Rational::one() / &self.v;
        let scale = -(&inv * &inv);
        Ok(Dual {
            g: self.g.iter().map(|d| d * &scale).collect(),
            v: inv,
        })
    }
}

impl Add for &Dual {
    type Output = Dual;
    fn add(self, o: &Dual) -> Dual {
        Dual {
            v: &self.v + &o.v,
            g: self.g.iter().zip(&o.g).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Dual {
    type Output = Dual;
    fn sub(self, o: &Dual) -> Dual {
        Dual {
            v: &self.v - &o.v,
            g: self.g.iter().zip(&o.g).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Dual {
    type Output = Dual;
    fn mul(self, o: &Dual) -> Dual {
        Dual {
            v: &self.v * &o.v,
            g: self
                .g
                .iter()
                .zip(&o.g)
                .map(|(a, b)| a * &o.v + &self.v * b)
                .collect(),
        }
    }
}

fn check_point(point: &[Rational], n: usize) -> Result<()> {
    if point.len() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: point.len(),
        });
    }
    for i in 0..n {
        for m in i + 1..n {
            if point[i] == point[m] {
                return Err(Error::Domain("explicit H_j needs distinct coordinates".into()));
            }
        }
    }
    Ok(())
}

/// Weights `w_i = (−x_i)^{n−j} / ∏_{m≠i}(x_m − x_i)` and `e_j(x)` as duals.
fn explicit_weights(j: usize, xs: &[Dual]) -> Result<(Dual, Vec<Dual>)> {
    let n = xs.len();
    let dim = n;
    let mut gen = vec![Dual::constant(Rational::one(), dim)];
    for x in xs {
        let mut next = gen.clone();
        next.push(Dual::constant(Rational::zero(), dim));
        for (k, a) in gen.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(a * x);
        }
        gen = next;
    }
    let ej = gen[j].clone();
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let minus_x = &Dual::constant(Rational::zero(), dim) - &xs[i];
        let mut num = Dual::constant(Rational::one(), dim);
        for _ in 0..n - j {
            num = &num * &minus_x;
        }
        let mut den = Dual::constant(Rational::one(), dim);
        for (m, xm) in xs.iter().enumerate() {
            if m != i {
                den = &den * &(xm - &xs[i]);
            }
        }
        weights.push(&num * &den.recip()?);
    }
    Ok((ej, weights))
}

fn eval_dual(f: &MultiPoly, point: &[Rational]) -> Result<Dual> {
    let n = point.len();
    let mut g = Vec::with_capacity(n);
    for i in 0..n {
        g.push(f.partial(i).eval(point)?);
    }
    Ok(Dual { v: f.eval(point)?, g })
}

/// The rational-coefficient form `H_j = e_j(x) Σ_i w_i(x) ∂/∂x_i` at a point
/// with distinct coordinates.
pub fn h_e_explicit_at(j: usize, f: &MultiPoly, point: &[Rational]) -> Result<Rational> {
    let n = f.arity();
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    check_point(point, n)?;
    let xs: Vec<Dual> = point.iter().cloned().map(|v| Dual::constant(v, n)).collect();
    let (ej, w) = explicit_weights(j, &xs)?;
    let mut acc = Rational::zero();
    for (i, wi) in w.iter().enumerate() {
        acc += &wi.v * f.partial(i).eval(point)?;
    }
    Ok(&ej.v * acc)
}

/// `H_j H_k f` at a point, both factors in the rational-coefficient form.
/// The inner application is carried as value plus gradient so the outer one
/// can differentiate it exactly.
pub fn h_e_explicit_composed_at(
    j: usize,
    k: usize,
    f: &MultiPoly,
    point: &[Rational],
) -> Result<Rational> {
    let n = f.arity();
    for idx in [j, k] {
        if idx < 1 || idx > n {
            return Err(Error::OutOfRange(format!("index {idx} for n={n}")));
        }
    }
    check_point(point, n)?;
    let xs: Vec<Dual> = point
        .iter()
        .enumerate()
        .map(|(i, v)| Dual::variable(v.clone(), i, n))
        .collect();
    let (ek, wk) = explicit_weights(k, &xs)?;
    let mut inner = Dual::constant(Rational::zero(), n);
    for (i, wi) in wk.iter().enumerate() {
        let di = eval_dual(&f.partial(i), point)?;
        inner = &inner + &(wi * &di);
    }
    let inner = &ek * &inner;
    let consts: Vec<Dual> = point.iter().cloned().map(|v| Dual::constant(v, n)).collect();
    let (ej, wj) = explicit_weights(j, &consts)?;
    let mut acc = Rational::zero();
    for (i, wi) in wj.iter().enumerate() {
        acc += &wi.v * &inner.g[i];
    }
    Ok(&ej.v * acc)
}

/// `q_λ(z) = ∏_j (1 + (z − 1) j / n)^{λ_j − λ_{j+1}}`.
pub fn q_e(lambda: &Partition) -> UniPoly {
    let n = lambda.len();
    let mut acc = UniPoly::one();
    for j in 1..=n {
        let d = lambda.diff(j, j + 1) as u32;
        let r = Rational::new((j as i64).into(), (n as i64).into());
        let factor = UniPoly::linear(Rational::one() - &r, r);
        acc = &acc * &factor.pow(d);
    }
    acc
}

/// Residual of `q′ = Σ_j λ_{j,j+1} q / (z + (n−j)/j)` after multiplying through
/// by `∏_j (j z + n − j)`; zero for the true eigenvalue polynomial.
pub fn q_e_ode_residual(lambda: &Partition, q: &UniPoly) -> UniPoly {
    let n = lambda.len();
    let factor = |j: usize| UniPoly::linear(int((n - j) as i64), int(j as i64));
    let all: UniPoly = (1..=n).fold(UniPoly::one(), |acc, j| &acc * &factor(j));
    let mut rhs = UniPoly::zero();
    for j in 1..=n {
        let d = lambda.diff(j, j + 1);
        if d == 0 {
            continue;
        }
        let others = (1..=n)
            .filter(|&i| i != j)
            .fold(UniPoly::one(), |acc, i| &acc * &factor(i));
        rhs = &rhs + &(&others * q).scale(&int(d * j as i64));
    }
    &(&q.derivative() * &all) - &rhs
}

/// `Q_z`: `ε_j ↦ (1 + (z − 1) j / n) ε_j` on the first `n` slots.
pub fn q_e_apply(f: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
    map_front(f, n, |g| {
        let mut vars = x_vars(n);
        vars.push(z_name.to_string());
        let eps = s0_forward(g)?;
        let images = (1..=n)
            .map(|j| {
                let e = elementary_sym(j, n)?.extend_vars(&vars[n..]);
                Ok(&scaling(&vars, n, j, n) * &e)
            })
            .collect::<Result<Vec<_>>>()?;
        eps.poly.substitute(&images)
    })
}

/// `A_k` on a polynomial symmetric in its first `k` slots, through the images
/// of `e_j^{(k)}`; output slots are `[x_1, …, x_{k−1}, z_name, trailing…]`.
pub fn a_e_apply(k: usize, g: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
    if k < 1 || k > n || g.arity() < k {
        return Err(Error::OutOfRange(format!("k={k} for n={n}, arity {}", g.arity())));
    }
    map_front(g, k, |h| {
        let mut vars = x_vars(k - 1);
        vars.push(z_name.to_string());
        let z_slot = k - 1;
        let lower = |j: usize| -> Result<MultiPoly> {
            Ok(elementary_sym(j, k - 1)?.extend_vars(&vars[k - 1..]))
        };
        let eps = s0_forward(h)?;
        let mut images = Vec::with_capacity(k);
        for j in 1..k {
            let a = &lower(j)? * &scaling(&vars, z_slot, j, n);
            let b = &lower(j - 1)? * &scaling(&vars, z_slot, n - k + j, n);
            images.push(&a + &b);
        }
        images.push(&MultiPoly::var(vars.clone(), z_slot) * &lower(k - 1)?);
        eps.poly.substitute(&images)
    })
}

/// `S_n`: `ε_j ↦ C(n, j) ∏_i (1 + (z_i − 1) j / n)` over `z_1, …, z_n`.
pub fn s_e_via_substitution(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    let z = var_names("z", n);
    let eps = s0_forward(f)?;
    let images: Vec<MultiPoly> = (1..=n)
        .map(|j| {
            (0..n).fold(
                MultiPoly::constant(z.clone(), binomial(n as u32, j as u32)),
                |acc, i| &acc * &scaling(&z, i, j, n),
            )
        })
        .collect();
    eps.poly.substitute(&images)
}

pub fn s_e_via_chain(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    let mut g = f.clone();
    for k in (1..=n).rev() {
        g = a_e_apply(k, &g, n, &format!("z{k}"))?;
    }
    Ok(g)
}

pub fn s_e_via_q_composition(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    let mut g = f.clone();
    for k in (1..=n).rev() {
        g = q_e_apply(&g, n, &format!("z{k}"))?;
    }
    rho(&g, n)
}

/// Separating operator; debug builds require the `A`-chain to agree.
pub fn s_e_apply(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    if !f.is_symmetric_in(n) {
        return Err(Error::NotSymmetric(n));
    }
    let out = s_e_via_substitution(f)?;
    if cfg!(debug_assertions) && s_e_via_chain(f)? != out {
        return Err(Error::Invariant("ε-substitution and A-chain routes differ".into()));
    }
    Ok(out)
}

/// `Q_0′`: `e_j^{(n−1)} ↦ ((n − j)/n) e_j^{(n)}`.
pub fn q0prime_e_apply(f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    if f.arity() + 1 != n {
        return Err(Error::ArityMismatch {
            left: f.arity() + 1,
            right: n,
        });
    }
    if f.arity() == 0 {
        let c = f.as_constant().unwrap_or_else(Rational::zero);
        return Ok(MultiPoly::constant(x_vars(n), c));
    }
    let eps = s0_forward(f)?;
    let images = (1..n)
        .map(|j| {
            Ok(elementary_sym(j, n)?.scale(&Rational::new(((n - j) as i64).into(), (n as i64).into())))
        })
        .collect::<Result<Vec<_>>>()?;
    eps.poly.substitute(&images)
}

pub fn e_bar(lambda: &Partition) -> Result<MultiPoly> {
    Ok(e_poly(lambda)?.normalized)
}

/// `(n choose j)`-normalized generator `ē_j`.
pub fn e_bar_generator(j: usize, n: usize) -> Result<MultiPoly> {
    Ok(elementary_sym(j, n)?.scale(&(Rational::one() / binomial(n as u32, j as u32))))
}

/// Exact `e_j(point)` helper for pointwise checks.
pub fn e_value(j: usize, point: &[Rational]) -> Rational {
    crate::diagonal::elementary_value(point, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(x_vars(n), i)
    }

    #[test]
    fn forward_isomorphism_examples() {
        let eps = eps_vars(2);
        let f = &x(2, 0) + &x(2, 1);
        assert_eq!(s0_forward(&f).unwrap().poly, MultiPoly::var(eps.clone(), 0));
        let f = &x(2, 0).pow(2) + &x(2, 1).pow(2);
        let expected = &MultiPoly::var(eps.clone(), 0).pow(2) - &MultiPoly::var(eps.clone(), 1).scale(&int(2));
        assert_eq!(s0_forward(&f).unwrap().poly, expected);
        let f = e_poly(&p(&[2, 1])).unwrap().raw;
        assert_eq!(s0_forward(&f).unwrap().poly, MultiPoly::monomial(eps, vec![1, 1], int(1)));
        assert_eq!(s0_forward(&f).unwrap().to_x().unwrap(), f);
    }

    #[test]
    fn hamiltonian_examples() {
        let e10 = e_bar(&p(&[1, 0])).unwrap();
        assert_eq!(h_e_apply(1, &e10).unwrap(), e10);
        assert!(h_e_apply(2, &e10).unwrap().is_zero());
        let e1 = &x(2, 0) + &x(2, 1);
        assert_eq!(h_e_explicit_at(1, &e1, &[int(2), int(5)]).unwrap(), int(7));
        assert!(h_e_explicit_at(1, &e1, &[int(2), int(2)]).is_err());
    }

    #[test]
    fn explicit_form_agrees_with_eps_route() {
        let f = &e_poly(&p(&[2, 1, 0])).unwrap().raw + &e_poly(&p(&[1, 1, 1])).unwrap().raw;
        let pt = [rat(1, 2), int(3), rat(-2, 3)];
        for j in 1..=3 {
            let exact = h_e_apply(j, &f).unwrap().eval(&pt).unwrap();
            assert_eq!(h_e_explicit_at(j, &f, &pt).unwrap(), exact, "j={j}");
        }
        // composed explicit form against the ε-route composition
        for j in 1..=3 {
            for k in 1..=3 {
                let exact = h_e_apply(j, &h_e_apply(k, &f).unwrap()).unwrap().eval(&pt).unwrap();
                assert_eq!(h_e_explicit_composed_at(j, k, &f, &pt).unwrap(), exact);
            }
        }
    }

    #[test]
    fn q_polynomial_examples() {
        assert_eq!(q_e(&p(&[1, 0])), UniPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(q_e(&p(&[0, 0])), UniPoly::one());
        assert_eq!(q_e(&p(&[1, 1])), UniPoly::from_coeffs(vec![int(0), int(1)]));
        for lambda in crate::partitions::enumerate_partitions(5, 3) {
            assert!(q_e_ode_residual(&lambda, &q_e(&lambda)).is_zero());
            assert_eq!(q_e(&lambda).eval(&int(1)), int(1));
        }
        // a wrong candidate leaves a residual
        assert!(!q_e_ode_residual(&p(&[1, 0]), &UniPoly::from_coeffs(vec![int(0), int(1)])).is_zero());
    }

    #[test]
    fn q_operator_examples() {
        let vars = vec!["x1".to_string(), "x2".to_string(), "z".to_string()];
        let e1 = elementary_sym(1, 2).unwrap();
        let half = UniPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]).to_multi(vars.clone(), 2);
        assert_eq!(q_e_apply(&e1, 2, "z").unwrap(), &e1.extend_vars(&vars[2..]) * &half);
        let e2 = elementary_sym(2, 2).unwrap();
        let z = MultiPoly::var(vars.clone(), 2);
        assert_eq!(q_e_apply(&e2, 2, "z").unwrap(), &e2.extend_vars(&vars[2..]) * &z);
        let c = MultiPoly::constant(x_vars(2), int(5));
        assert_eq!(q_e_apply(&c, 2, "z").unwrap(), MultiPoly::constant(vars, int(5)));
    }

    #[test]
    fn a_operator_examples() {
        let vars = vec!["x1".to_string(), "z2".to_string()];
        let one = MultiPoly::one(vars.clone());
        let x1 = MultiPoly::var(vars.clone(), 0);
        let z2 = MultiPoly::var(vars.clone(), 1);
        let e1 = elementary_sym(1, 2).unwrap();
        let expected = (&(&x1 + &one) * &(&z2 + &one)).scale(&rat(1, 2));
        assert_eq!(a_e_apply(2, &e1, 2, "z2").unwrap(), expected);
        let e2 = elementary_sym(2, 2).unwrap();
        assert_eq!(a_e_apply(2, &e2, 2, "z2").unwrap(), &z2 * &x1);
        // k = 1: Ē_λ(x_1, 1, …, 1) ↦ q_λ(z_1)
        let lambda = p(&[2, 1, 0]);
        let restricted = crate::sym_bases::restrict_to_ones(&e_bar(&lambda).unwrap(), 2).unwrap();
        let out = a_e_apply(1, &restricted, 3, "z1").unwrap();
        assert_eq!(UniPoly::from_multi(&out, 0).unwrap(), q_e(&lambda));
    }

    #[test]
    fn separation_examples() {
        let z = var_names("z", 2);
        let one = MultiPoly::one(z.clone());
        let (z1, z2) = (MultiPoly::var(z.clone(), 0), MultiPoly::var(z.clone(), 1));
        let expected = (&(&z1 + &one) * &(&z2 + &one)).scale(&rat(1, 4));
        assert_eq!(s_e_apply(&e_bar(&p(&[1, 0])).unwrap()).unwrap(), expected);
        assert_eq!(s_e_apply(&MultiPoly::one(x_vars(2))).unwrap(), one);
        assert_eq!(s_e_apply(&e_bar(&p(&[1, 1])).unwrap()).unwrap(), &z1 * &z2);
        let f = e_bar(&p(&[2, 1])).unwrap();
        assert_eq!(s_e_via_q_composition(&f).unwrap(), s_e_via_substitution(&f).unwrap());
    }

    #[test]
    fn lifting_examples() {
        let x1 = MultiPoly::var(x_vars(1), 0);
        assert_eq!(q0prime_e_apply(&x1, 2).unwrap(), e_bar(&p(&[1, 0])).unwrap());
        assert_eq!(q0prime_e_apply(&MultiPoly::one(x_vars(1)), 2).unwrap(), MultiPoly::one(x_vars(2)));
        let sq = e_bar(&p(&[1, 0])).unwrap().pow(2);
        assert_eq!(q0prime_e_apply(&x1.pow(2), 2).unwrap(), sq);
        // ē_j^{(n−1)} ↦ ē_j^{(n)}
        for j in 1..3 {
            assert_eq!(q0prime_e_apply(&e_bar_generator(j, 3).unwrap(), 4).unwrap(), e_bar_generator(j, 4).unwrap());
        }
    }
}
