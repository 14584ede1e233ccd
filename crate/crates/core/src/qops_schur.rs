//! Operators for the normalized Schur basis `s̄_λ`.
//!
//! `Q_z`, `S_n` and `Q_0′` act spectrally. The inverse `S_n⁻¹` is the exact
//! differential operator built from `K_n = ∏_{i<j}(D_i − D_j)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagonal::{e_of_exponents, DiagonalOperator};
use crate::error::{Error, Result};
use crate::exact::rational::factorial;
use crate::exact::{int, var_names, MultiPoly, Rational, UniPoly};
use crate::partitions::{staircase_shift, Partition, ShiftedPartition};
use crate::sym_bases::{
    expand_in_basis, restricted_schur_ratio, restrict_to_ones, schur_poly, schur_value_at_one,
    vandermonde, vandermonde_value, x_vars, Basis,
};

/// `φ_λ(z) = Σ_j c_j z^{μ_j}` with `c_j = ∏_{k≠j} (μ_j − μ_k)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiData {
    pub mu: ShiftedPartition,
    pub c: Vec<Rational>,
    pub phi: UniPoly,
}

pub fn phi_lambda(lambda: &Partition) -> Result<PhiData> {
    let mu = staircase_shift(lambda);
    let m: Vec<Rational> = mu.parts().iter().map(|&v| int(v as i64)).collect();
    let n = m.len();
    let c: Vec<Rational> = (0..n)
        .map(|j| {
            let prod = (0..n)
                .filter(|&k| k != j)
                .fold(Rational::one(), |acc, k| acc * (&m[j] - &m[k]));
            Rational::one() / prod
        })
        .collect();
    // moment conditions: Σ μ_j^k c_j = δ_{k, n−1}
    for k in 0..n {
        let moment: Rational = (0..n).map(|j| crate::exact::rational::pow(&m[j], k as u32) * &c[j]).sum();
        let expected = if k + 1 == n { Rational::one() } else { Rational::zero() };
        if moment != expected {
            return Err(Error::Invariant(format!("moment {k} of c is {moment} for λ={lambda}")));
        }
    }
    let phi = mu.parts().iter().zip(&c).fold(UniPoly::zero(), |acc, (&e, cj)| {
        &acc + &UniPoly::monomial(e as usize, cj.clone())
    });
    phi.div_by_z_minus_one_pow(n.saturating_sub(1) as u32)
        .map_err(|_| Error::Invariant(format!("(z−1)^(n−1) does not divide φ for λ={lambda}")))?;
    Ok(PhiData { mu, c, phi })
}

/// `q_λ(z) = (n − 1)! φ_λ(z) / (z − 1)^{n−1}`.
pub fn q_s(lambda: &Partition) -> Result<UniPoly> {
    let n = lambda.len();
    let data = phi_lambda(lambda)?;
    let q = data
        .phi
        .scale(&factorial(n.saturating_sub(1) as u32))
        .div_by_z_minus_one_pow(n.saturating_sub(1) as u32)
        .map_err(|_| Error::Invariant(format!("q_λ division left a remainder for λ={lambda}")))?;
    if q.eval(&Rational::one()) != Rational::one() {
        return Err(Error::Invariant(format!("q_λ(1) ≠ 1 for λ={lambda}")));
    }
    Ok(q)
}

/// `q_λ` from the restricted-Schur determinant ratio at `k = 2`.
pub fn q_s_via_restriction(lambda: &Partition) -> Result<UniPoly> {
    let ratio = restricted_schur_ratio(lambda, 2)?;
    let q = UniPoly::from_multi(&ratio, 0)?;
    Ok(q.scale(&(Rational::one() / schur_value_at_one(lambda))))
}

/// `q_λ(z) = s̄_λ(z, 1, …, 1)` by direct substitution.
pub fn q_s_via_substitution(lambda: &Partition) -> Result<UniPoly> {
    let s = schur_poly(lambda)?.normalized;
    UniPoly::from_multi(&restrict_to_ones(&s, 2)?, 0)
}

/// `N(z) / (z − 1)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PoleFrac {
    num: UniPoly,
    order: u32,
}

impl PoleFrac {
    fn z_minus_one() -> UniPoly {
        UniPoly::linear(-Rational::one(), Rational::one())
    }

    fn lift(&self, order: u32) -> UniPoly {
        &self.num * &PoleFrac::z_minus_one().pow(order - self.order)
    }

    fn add(&self, other: &PoleFrac) -> PoleFrac {
        let order = self.order.max(other.order);
        PoleFrac {
            num: &self.lift(order) + &other.lift(order),
            order,
        }
    }

    fn scale(&self, c: &Rational) -> PoleFrac {
        PoleFrac {
            num: self.num.scale(c),
            order: self.order,
        }
    }

    /// `Z = z(∂_z + (n − 1)/(z − 1))`.
    fn apply_z(&self, n: usize) -> PoleFrac {
        let zm1 = PoleFrac::z_minus_one();
        let m = int(self.order as i64);
        let inner = &(&self.num.derivative() * &zm1) - &self.num.scale(&m);
        let inner = &inner + &self.num.scale(&int(n as i64 - 1));
        PoleFrac {
            num: inner.shift(),
            order: self.order + 1,
        }
    }
}

/// Residuals of both separated equations; each is identically zero when
/// the identities hold. `q` is the numerator after clearing `(z − 1)` poles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeResiduals {
    pub phi: UniPoly,
    pub q: UniPoly,
}

/// `∏_j (z∂ − μ_j) φ`.
pub fn phi_ode_residual(lambda: &Partition) -> Result<UniPoly> {
    let data = phi_lambda(lambda)?;
    Ok(data.mu.parts().iter().fold(data.phi, |acc, &m| {
        &acc.euler() - &acc.scale(&int(m as i64))
    }))
}

/// Numerator of `[Zⁿ + Σ_k (−1)^k e_k(μ) Z^{n−k}] q` for the separated
/// equation of `λ`, applied to an arbitrary `q`.
pub fn q_ode_residual(lambda: &Partition, q: &UniPoly) -> UniPoly {
    let n = lambda.len();
    let mu = staircase_shift(lambda);
    let mut powers = vec![PoleFrac {
        num: q.clone(),
        order: 0,
    }];
    for k in 0..n {
        let next = powers[k].apply_z(n);
        powers.push(next);
    }
    let mut acc = powers[n].clone();
    for k in 1..=n {
        let h = e_of_exponents(mu.parts(), k);
        let sign = if k % 2 == 0 { h } else { -h };
        acc = acc.add(&powers[n - k].scale(&sign));
    }
    acc.num
}

pub fn ode_residual_s(lambda: &Partition) -> Result<OdeResiduals> {
    Ok(OdeResiduals {
        phi: phi_ode_residual(lambda)?,
        q: q_ode_residual(lambda, &q_s(lambda)?),
    })
}

fn check_j(j: usize, n: usize) -> Result<()> {
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    Ok(())
}

/// `H_j = Δ_n⁻¹ e_j(D) Δ_n`.
pub fn h_s_apply(j: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    check_j(j, n)?;
    let delta = vandermonde(n).with_vars(f.vars().to_vec())?;
    let lifted = (&delta * f).scale_terms(|a| e_of_exponents(a, j));
    lifted
        .divide_exact(&delta)
        .map_err(|_| Error::Invariant("H_j image not divisible by Δ".into()))
}

pub fn q_operator() -> DiagonalOperator<'static> {
    DiagonalOperator::new(Basis::Schur, q_s)
}

/// `Q_z` on the first `n` slots; `z_name` follows the `x`-block.
pub fn q_s_apply(f: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
    q_operator().apply(f, n, z_name)
}

/// `K_n = ∏_{i<j} (D_i − D_j)`: diagonal on monomials.
pub fn k_n_apply(f: &MultiPoly) -> MultiPoly {
    f.scale_terms(|a| {
        let mut acc = Rational::one();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                acc *= int(a[i] as i64 - a[j] as i64);
            }
        }
        acc
    })
}

/// `S_n`: `s̄_λ ↦ ∏_j q_λ(z_j)`.
pub fn s_s_apply(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    if !f.is_symmetric_in(n) {
        return Err(Error::NotSymmetric(n));
    }
    let z = var_names("z", n);
    let exp = expand_in_basis(f, Basis::Schur)?;
    let mut acc = MultiPoly::zero(z.clone());
    for (lambda, c) in &exp.coeffs {
        let q = q_s(lambda)?;
        let prod = (0..n).fold(MultiPoly::one(z.clone()), |p, i| &p * &q.to_multi(z.clone(), i));
        acc = &acc + &prod.scale(&(c * schur_value_at_one(lambda)));
    }
    Ok(acc)
}

/// `S_n⁻¹ = (−1)^{n(n−1)/2} Δ_n(δ)/[(n−1)!]ⁿ · Δ_n(x)⁻¹ ∘ K_n ∘ ∏_k (x_k − 1)^{n−1}`,
/// with the `z`-slots identified with `x`. Inputs outside the image of `S_n`
/// are rejected with [`Error::NotInImage`].
pub fn s_s_inverse_apply(g: &MultiPoly) -> Result<MultiPoly> {
    let n = g.arity();
    let vars = x_vars(n);
    let g = g.with_vars(vars.clone())?;
    let one = MultiPoly::one(vars.clone());
    let weight = (0..n).fold(one.clone(), |acc, k| {
        &acc * &(&MultiPoly::var(vars.clone(), k) - &one).pow(n.saturating_sub(1) as u32)
    });
    let lifted = k_n_apply(&(&g * &weight));
    let quotient = lifted.divide_exact(&vandermonde(n)).map_err(|e| match e {
        Error::NotDivisible => Error::NotInImage,
        other => other,
    })?;
    let delta: Vec<Rational> = (0..n).rev().map(|d| int(d as i64)).collect();
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 0 { int(1) } else { int(-1) };
    let denom = crate::exact::rational::pow(&factorial(n.saturating_sub(1) as u32), n as u32);
    let out = quotient.scale(&(sign * vandermonde_value(&delta) / denom));
    if !out.is_symmetric_in(n) || s_s_apply(&out)?.with_vars(vars)? != g {
        return Err(Error::NotInImage);
    }
    Ok(out)
}

/// `Q_0′`: `s̄_{λ′} ↦ s̄_{λ′0}` from `n − 1` to `n` variables.
pub fn q0prime_s_apply(f: &MultiPoly, n: usize) -> Result<MultiPoly> {
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
    if !f.is_symmetric_in(n - 1) {
        return Err(Error::NotSymmetric(n - 1));
    }
    let exp = expand_in_basis(f, Basis::Schur)?;
    let mut acc = MultiPoly::zero(x_vars(n));
    for (lambda, c) in &exp.coeffs {
        let lifted = lambda.append_zero();
        let target = schur_poly(&lifted)?.normalized;
        acc = &acc + &target.scale(&(c * schur_value_at_one(lambda)));
    }
    Ok(acc)
}

/// `𝒫`: sets `x_n = 0` and drops the slot.
pub fn set_last_zero(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    if n == 0 {
        return Err(Error::OutOfRange("no slot to set to zero".into()));
    }
    let g = f.eval_slot(n - 1, &Rational::zero());
    let map: Vec<Option<usize>> = (0..n - 1).map(Some).collect();
    g.remap(f.vars()[..n - 1].to_vec(), &map)
}

/// Compares `Q_0 f` (spectral, at `z = 0`) with `Q_0′ 𝒫 f`.
pub fn lifting_consistency(f: &MultiPoly) -> Result<bool> {
    let n = f.arity();
    let direct = q_operator().apply_at(f, n, &Rational::zero())?;
    let lifted = q0prime_s_apply(&set_last_zero(f)?, n)?;
    Ok(direct == lifted)
}

/// `q_λ(0)`: `(n − 1)!/∏_{i<n} μ_i` when `λ_n = 0`, else `0`.
pub fn q_s_at_zero_closed_form(lambda: &Partition) -> Rational {
    let n = lambda.len();
    if n == 0 || lambda.part(n) != 0 {
        return Rational::zero();
    }
    let mu = staircase_shift(lambda);
    let prod = mu.parts()[..n - 1]
        .iter()
        .fold(Rational::one(), |acc, &m| acc * int(m as i64));
    factorial((n - 1) as u32) / prod
}

/// Partitions `ν ≠ λ` with `|ν| ≤ |λ|` whose `q_ν` also solves `λ`'s
/// separated equation. Empty for every case swept in tests.
pub fn uniqueness_violations(lambda: &Partition) -> Result<Vec<Partition>> {
    let n = lambda.len();
    let mut out = Vec::new();
    for nu in crate::partitions::enumerate_partitions(lambda.weight(), n) {
        if &nu != lambda && q_ode_residual(lambda, &q_s(&nu)?).is_zero() {
            out.push(nu);
        }
    }
    Ok(out)
}

pub fn s_bar(lambda: &Partition) -> Result<MultiPoly> {
    Ok(schur_poly(lambda)?.normalized)
}
