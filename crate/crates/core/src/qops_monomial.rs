//! Factorizing operators for the normalized monomial basis `m̄_λ`.
//!
//! Everything here has a closed substitution form, so no basis expansion is
//! needed except for the spectral cross-checks in tests.

use num_traits::{One, Zero};

use crate::diagonal::{e_of_exponents, map_front, rho};
use crate::error::{Error, Result};
use crate::exact::{int, var_names, MultiPoly, Rational, UniPoly};
use crate::partitions::Partition;
use crate::sym_bases::{monomial_sym, x_vars};

fn check_j(j: usize, n: usize) -> Result<()> {
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    Ok(())
}

/// `H_j = e_j(D_1, …, D_n)`; diagonal on monomials with eigenvalue `e_j(a)`.
pub fn h_m_apply(j: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    check_j(j, n)?;
    Ok(f.scale_terms(|a| e_of_exponents(a, j)))
}

/// `q_λ(z) = (1/n) Σ_j z^{λ_j}`.
pub fn q_m(lambda: &Partition) -> UniPoly {
    let n = lambda.len() as i64;
    lambda
        .parts()
        .iter()
        .fold(UniPoly::zero(), |acc, &p| {
            &acc + &UniPoly::monomial(p as usize, Rational::new(1.into(), n.into()))
        })
}

/// `∏_j (z d/dz − λ_j)` applied to `q_λ`; vanishes identically.
pub fn separation_residual_m(lambda: &Partition) -> UniPoly {
    lambda.parts().iter().fold(q_m(lambda), |acc, &l| {
        &acc.euler() - &acc.scale(&int(l as i64))
    })
}

/// `(Q_z f)(x) = (1/n) Σ_j f(…, z x_j, …)` on the first `n` slots; `z_name`
/// is inserted after the `x`-block. Valid on nonsymmetric input too.
pub fn q_m_apply(f: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
    map_front(f, n, |g| {
        let mut vars = g.vars().to_vec();
        vars.push(z_name.to_string());
        let z = MultiPoly::var(vars.clone(), n);
        let weight = Rational::new(1.into(), (n as i64).into());
        let mut acc = MultiPoly::zero(vars.clone());
        for j in 0..n {
            let images: Vec<MultiPoly> = (0..n)
                .map(|i| {
                    let x = MultiPoly::var(vars.clone(), i);
                    if i == j {
                        &z * &x
                    } else {
                        x
                    }
                })
                .collect();
            acc = &acc + &g.substitute(&images)?;
        }
        Ok(acc.scale(&weight))
    })
}

/// `ℙ_jk`: `x_j ← x_j x_k`, `x_k ← 1` (1-based, `j < k`); other slots untouched.
pub fn projector(f: &MultiPoly, j: usize, k: usize) -> Result<MultiPoly> {
    if !(1 <= j && j < k && k <= f.arity()) {
        return Err(Error::OutOfRange(format!("ℙ_{j}{k} on arity {}", f.arity())));
    }
    let vars = f.vars().to_vec();
    let images: Vec<MultiPoly> = (0..f.arity())
        .map(|i| {
            if i == j - 1 {
                &MultiPoly::var(vars.clone(), j - 1) * &MultiPoly::var(vars.clone(), k - 1)
            } else if i == k - 1 {
                MultiPoly::one(vars.clone())
            } else {
                MultiPoly::var(vars.clone(), i)
            }
        })
        .collect();
    f.substitute(&images)
}

fn check_k(k: usize, n: usize, f: &MultiPoly) -> Result<()> {
    if k < 1 || k > n || f.arity() < k {
        return Err(Error::OutOfRange(format!("k={k} for n={n}, arity {}", f.arity())));
    }
    Ok(())
}

/// `A_k = (1/n)(n − k + 1 + Σ_{j<k} ℙ_jk)` with `z_k` identified with `x_k`.
pub fn a_m_apply(k: usize, f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    check_k(k, n, f)?;
    let mut acc = f.scale(&int((n - k + 1) as i64));
    for j in 1..k {
        acc = &acc + &projector(f, j, k)?;
    }
    Ok(acc.scale(&Rational::new(1.into(), (n as i64).into())))
}

/// `A_k⁻¹ = (n − Σ_{j<k} ℙ_jk)/(n − k + 1)`.
pub fn a_m_inverse_apply(k: usize, f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    check_k(k, n, f)?;
    let mut acc = f.scale(&int(n as i64));
    for j in 1..k {
        acc = &acc - &projector(f, j, k)?;
    }
    Ok(acc.scale(&Rational::new(1.into(), ((n - k + 1) as i64).into())))
}

/// `S_n = A_1 A_2 ⋯ A_n`; the `x` slots are relabelled `z_1, …, z_n` at the end.
pub fn s_m_via_chain(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    let mut g = f.clone();
    for k in (1..=n).rev() {
        g = a_m_apply(k, &g, n)?;
    }
    g.with_vars(var_names("z", n))
}

/// `S_n = ρ_0 Q_{z_1} ⋯ Q_{z_n}` by direct composition.
pub fn s_m_via_q_composition(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    let mut g = f.clone();
    for k in (1..=n).rev() {
        g = q_m_apply(&g, n, &format!("z{k}"))?;
    }
    rho(&g, n)
}

/// Separating operator on a symmetric polynomial. Debug builds also run the
/// `Q`-composition route and require the two to agree.
pub fn s_m_apply(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.arity();
    if !f.is_symmetric_in(n) {
        return Err(Error::NotSymmetric(n));
    }
    let chain = s_m_via_chain(f)?;
    if cfg!(debug_assertions) && s_m_via_q_composition(f)? != chain {
        return Err(Error::Invariant("A-chain and Q-composition routes differ".into()));
    }
    Ok(chain)
}

/// `S_n⁻¹ = A_n⁻¹ ⋯ A_1⁻¹`, reading `z_k` as `x_k`.
pub fn s_m_inverse_apply(g: &MultiPoly) -> Result<MultiPoly> {
    let n = g.arity();
    let mut f = g.with_vars(x_vars(n))?;
    for k in 1..=n {
        f = a_m_inverse_apply(k, &f, n)?;
    }
    Ok(f)
}

/// `Q_0′ f = (1/n) Σ_j f(x_1, …, x̂_j, …, x_n)` for `f` in `n − 1` variables.
pub fn q0prime_m_apply(f: &MultiPoly, n: usize) -> Result<MultiPoly> {
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
    let vars = x_vars(n);
    let mut acc = MultiPoly::zero(vars.clone());
    for omit in 0..n {
        let images: Vec<MultiPoly> = (0..n)
            .filter(|&i| i != omit)
            .map(|i| MultiPoly::var(vars.clone(), i))
            .collect();
        acc = &acc + &f.substitute(&images)?;
    }
    Ok(acc.scale(&(Rational::one() / int(n as i64))))
}

/// `m̄_λ`, shorthand used across tests and suites.
pub fn m_bar(lambda: &Partition) -> Result<MultiPoly> {
    Ok(monomial_sym(lambda)?.normalized)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sym_bases::restrict_to_ones;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn xz() -> Vec<String> {
        vec!["x1".into(), "x2".into(), "z".into()]
    }

    #[test]
    fn hamiltonian_examples() {
        let f = m_bar(&p(&[2, 0])).unwrap().scale(&int(2));
        assert_eq!(h_m_apply(1, &f).unwrap(), f.scale(&int(2)));
        assert!(h_m_apply(2, &f).unwrap().is_zero());
        let g = m_bar(&p(&[1, 1])).unwrap();
        assert_eq!(h_m_apply(2, &g).unwrap(), g);
        assert!(h_m_apply(3, &g).is_err());
    }

    #[test]
    fn q_polynomials() {
        assert_eq!(q_m(&p(&[2, 0])), UniPoly::from_coeffs(vec![rat(1, 2), int(0), rat(1, 2)]));
        assert_eq!(q_m(&p(&[0, 0, 0])), UniPoly::one());
        let q = q_m(&p(&[2, 1, 0]));
        assert_eq!(q, UniPoly::from_coeffs(vec![rat(1, 3), rat(1, 3), rat(1, 3)]));
        // cross-check with m̄_λ(z, 1, 1)
        let restricted = restrict_to_ones(&m_bar(&p(&[2, 1, 0])).unwrap(), 2).unwrap();
        assert_eq!(UniPoly::from_multi(&restricted, 0).unwrap(), q);
    }

    #[test]
    fn q_operator_examples() {
        let m = m_bar(&p(&[2, 0])).unwrap();
        let q = q_m(&p(&[2, 0])).to_multi(xz(), 2);
        assert_eq!(q_m_apply(&m, 2, "z").unwrap(), &m.extend_vars(&["z".into()]) * &q);
        let one = MultiPoly::one(x_vars(2));
        assert_eq!(q_m_apply(&one, 2, "z").unwrap(), MultiPoly::one(xz()));
        let x1 = MultiPoly::var(x_vars(2), 0);
        let expected = MultiPoly::from_terms(xz(), [(vec![1, 0, 1], rat(1, 2)), (vec![1, 0, 0], rat(1, 2))]).unwrap();
        assert_eq!(q_m_apply(&x1, 2, "z").unwrap(), expected);
    }

    #[test]
    fn a_operator_examples() {
        let m = m_bar(&p(&[2, 0])).unwrap();
        let a2 = a_m_apply(2, &m, 2).unwrap();
        let expected = MultiPoly::from_terms(
            x_vars(2),
            [(vec![2, 2], rat(1, 4)), (vec![2, 0], rat(1, 4)), (vec![0, 2], rat(1, 4)), (vec![0, 0], rat(1, 4))],
        )
        .unwrap();
        assert_eq!(a2, expected);
        assert_eq!(a_m_apply(1, &m, 2).unwrap(), m);
        let f = m.scale(&int(2));
        assert_eq!(a_m_inverse_apply(2, &a_m_apply(2, &f, 2).unwrap(), 2).unwrap(), f);
    }

    #[test]
    fn separation_examples() {
        let z = var_names("z", 2);
        let s = s_m_apply(&m_bar(&p(&[2, 0])).unwrap()).unwrap();
        let q1 = q_m(&p(&[2, 0])).to_multi(z.clone(), 0);
        let q2 = q_m(&p(&[2, 0])).to_multi(z.clone(), 1);
        assert_eq!(s, &q1 * &q2);
        assert_eq!(s_m_apply(&MultiPoly::one(x_vars(2))).unwrap(), MultiPoly::one(z.clone()));
        let s = s_m_apply(&m_bar(&p(&[1, 1])).unwrap()).unwrap();
        assert_eq!(s, MultiPoly::monomial(z, vec![1, 1], int(1)));
        assert!(s_m_apply(&MultiPoly::var(x_vars(2), 0)).is_err());
        for lambda in crate::partitions::enumerate_partitions(4, 3) {
            let f = m_bar(&lambda).unwrap();
            assert_eq!(s_m_inverse_apply(&s_m_apply(&f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn lifting_examples() {
        let x1 = MultiPoly::var(x_vars(1), 0);
        assert_eq!(q0prime_m_apply(&x1, 2).unwrap(), m_bar(&p(&[1, 0])).unwrap());
        assert_eq!(
            q0prime_m_apply(&MultiPoly::one(x_vars(1)), 2).unwrap(),
            MultiPoly::one(x_vars(2))
        );
        assert_eq!(q0prime_m_apply(&x1.pow(2), 2).unwrap(), m_bar(&p(&[2, 0])).unwrap());
        assert!(q0prime_m_apply(&x1, 3).is_err());
    }

    #[test]
    fn separation_equation_annihilates_q() {
        for lambda in crate::partitions::enumerate_partitions(5, 3) {
            assert!(separation_residual_m(&lambda).is_zero(), "{lambda}");
        }
    }
}
