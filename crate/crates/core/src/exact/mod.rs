//! Exact rational arithmetic, sparse multivariate polynomials, univariate
//! polynomials and determinants.

pub mod det;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use det::{determinant, DetEntry};
pub use poly::{var_names, ArithOp, Monomial, MultiPoly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use univariate::UniPoly;

use crate::error::Result;

pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: ArithOp) -> Result<MultiPoly> {
    a.arith(b, op)
}

pub fn poly_divide_exact(num: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly> {
    num.divide_exact(den)
}

pub fn poly_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    determinant(m)
}

pub fn poly_substitute(f: &MultiPoly, images: &[MultiPoly]) -> Result<MultiPoly> {
    f.substitute(images)
}

/// Euler operator `D_slot = x_slot ∂/∂x_slot`.
pub fn apply_euler(f: &MultiPoly, slot: usize) -> Result<MultiPoly> {
    if slot >= f.arity() {
        return Err(crate::error::Error::OutOfRange(format!(
            "slot {slot} for arity {}",
            f.arity()
        )));
    }
    Ok(f.apply_euler(slot))
}

pub fn poly_eval(f: &MultiPoly, point: &[Rational]) -> Result<Rational> {
    f.eval(point)
}
