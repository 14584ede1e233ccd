//! One entry point per operator, dispatched on the basis.

use crate::diagonal::e_of_exponents;
use crate::error::{Error, Result};
use crate::exact::{int, MultiPoly, Rational, UniPoly};
use crate::partitions::{staircase_shift, Partition};
use crate::sym_bases::{restrict_to_ones, Basis};
use crate::{qops_elementary as qe, qops_monomial as qm, qops_schur as qs};

/// `P̄_λ`.
pub fn basis_bar(basis: Basis, lambda: &Partition) -> Result<MultiPoly> {
    Ok(basis.basis_poly(lambda)?.normalized)
}

/// `q_λ(z)` from the closed form belonging to each basis.
pub fn q_eigenvalue(basis: Basis, lambda: &Partition) -> Result<UniPoly> {
    match basis {
        Basis::Monomial => Ok(qm::q_m(lambda)),
        Basis::Elementary => Ok(qe::q_e(lambda)),
        Basis::Schur => qs::q_s(lambda),
    }
}

/// `P̄_λ(z, 1, …, 1)`, the defining value of `q_λ`.
pub fn q_by_substitution(basis: Basis, lambda: &Partition) -> Result<UniPoly> {
    let bar = basis_bar(basis, lambda)?;
    let one_var = if lambda.len() == 1 { bar } else { restrict_to_ones(&bar, 2)? };
    UniPoly::from_multi(&one_var, 0)
}

/// `Q_z` acting on the first `n` slots; `z_name` follows the `x`-block.
pub fn apply_q(basis: Basis, f: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
    match basis {
        Basis::Monomial => qm::q_m_apply(f, n, z_name),
        Basis::Elementary => qe::q_e_apply(f, n, z_name),
        Basis::Schur => qs::q_s_apply(f, n, z_name),
    }
}

pub fn apply_h(basis: Basis, j: usize, f: &MultiPoly) -> Result<MultiPoly> {
    match basis {
        Basis::Monomial => qm::h_m_apply(j, f),
        Basis::Elementary => qe::h_e_apply(j, f),
        Basis::Schur => qs::h_s_apply(j, f),
    }
}

/// Eigenvalue of `H_j` on `P̄_λ`.
pub fn h_eigenvalue(basis: Basis, lambda: &Partition, j: usize) -> Result<Rational> {
    let n = lambda.len();
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("j={j} for n={n}")));
    }
    Ok(match basis {
        Basis::Monomial => e_of_exponents(lambda.parts(), j),
        Basis::Elementary => int(lambda.diff(j, j + 1)),
        Basis::Schur => e_of_exponents(staircase_shift(lambda).parts(), j),
    })
}

/// `S_n f` over `z_1, …, z_n`.
pub fn separate(basis: Basis, f: &MultiPoly) -> Result<MultiPoly> {
    match basis {
        Basis::Monomial => qm::s_m_apply(f),
        Basis::Elementary => qe::s_e_apply(f),
        Basis::Schur => qs::s_s_apply(f),
    }
}

/// `Q_0′` from `n − 1` to `n` variables.
pub fn lift(basis: Basis, f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    match basis {
        Basis::Monomial => qm::q0prime_m_apply(f, n),
        Basis::Elementary => qe::q0prime_e_apply(f, n),
        Basis::Schur => qs::q0prime_s_apply(f, n),
    }
}

/// `S_n⁻¹` for the bases with a closed-form inverse.
pub fn invert(basis: Basis, g: &MultiPoly) -> Result<MultiPoly> {
    match basis {
        Basis::Monomial => qm::s_m_inverse_apply(g),
        Basis::Schur => qs::s_s_inverse_apply(g),
        other => Err(Error::Domain(format!(
            "no closed-form inverse for basis {other}; use m or s"
        ))),
    }
}
