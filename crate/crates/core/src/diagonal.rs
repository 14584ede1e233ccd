//! Operators defined through an eigenbasis, and the plumbing that lets every
//! operator act on the `x`-block of a polynomial while trailing slots (earlier
//! spectral parameters such as `z_2`) ride along as scalars.

use crate::error::Result;
use crate::exact::{MultiPoly, Rational, UniPoly};
use crate::partitions::Partition;
use crate::sym_bases::{expand_in_basis, x_vars, Basis};

/// Applies `op` to the first `n` slots of `f`, linearly over the trailing
/// slots. `op` receives a polynomial in exactly the `n` leading slots and
/// returns one over `[front…, new…]`; the result is laid out as
/// `[front…, new…, trailing…]`.
pub fn map_front<F>(f: &MultiPoly, n: usize, mut op: F) -> Result<MultiPoly>
where
    F: FnMut(&MultiPoly) -> Result<MultiPoly>,
{
    let trailing_vars = f.vars()[n..].to_vec();
    let template = op(&MultiPoly::zero(f.vars()[..n].to_vec()))?;
    let mut out_vars = template.vars().to_vec();
    out_vars.extend(trailing_vars.iter().cloned());
    let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
    for (back, front) in f.split_front(n) {
        let image = op(&front)?;
        for (m, c) in image.terms() {
            let mut e = m.exps().to_vec();
            e.extend_from_slice(&back);
            terms.push((e, c.clone()));
        }
    }
    MultiPoly::from_terms(out_vars, terms)
}

/// `ρ`: evaluates the first `n` slots at 1 and drops them.
pub fn rho(f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    let mut g = f.clone();
    for slot in 0..n {
        g = g.eval_slot(slot, &Rational::from_integer(1.into()));
    }
    let map: Vec<Option<usize>> = (n..f.arity()).map(Some).collect();
    g.remap(f.vars()[n..].to_vec(), &map)
}

/// An operator diagonal on one basis, `P_λ ↦ q_λ(z) P_λ`.
pub struct DiagonalOperator<'a> {
    pub basis: Basis,
    eigenvalue: Box<dyn Fn(&Partition) -> Result<UniPoly> + Send + Sync + 'a>,
}

impl<'a> DiagonalOperator<'a> {
    pub fn new<F>(basis: Basis, eigenvalue: F) -> Self
    where
        F: Fn(&Partition) -> Result<UniPoly> + Send + Sync + 'a,
    {
        DiagonalOperator {
            basis,
            eigenvalue: Box::new(eigenvalue),
        }
    }

    pub fn eigenvalue(&self, lambda: &Partition) -> Result<UniPoly> {
        (self.eigenvalue)(lambda)
    }

    /// Expand, scale each component by `q_λ(z)`, reassemble. The new slot
    /// `z_name` follows the `x`-block.
    pub fn apply(&self, f: &MultiPoly, n: usize, z_name: &str) -> Result<MultiPoly> {
        map_front(f, n, |g| {
            let mut vars = x_vars(n);
            vars.push(z_name.to_string());
            let exp = expand_in_basis(g, self.basis)?;
            let mut acc = MultiPoly::zero(vars.clone());
            for (lambda, c) in &exp.coeffs {
                let q = self.eigenvalue(lambda)?.to_multi(vars.clone(), n);
                let p = self.basis.basis_poly(lambda)?.raw.extend_vars(&vars[n..]);
                acc = &acc + &(&p * &q).scale(c);
            }
            Ok(acc)
        })
    }

    /// The same operator at a fixed numeric `z`.
    pub fn apply_at(&self, f: &MultiPoly, n: usize, z: &Rational) -> Result<MultiPoly> {
        map_front(f, n, |g| {
            let exp = expand_in_basis(g, self.basis)?;
            let mut acc = MultiPoly::zero(x_vars(n));
            for (lambda, c) in &exp.coeffs {
                let q = self.eigenvalue(lambda)?.eval(z);
                let p = self.basis.basis_poly(lambda)?.raw;
                acc = &acc + &p.scale(&(c * q));
            }
            Ok(acc)
        })
    }
}

/// `e_j(v_1, …, v_n)` of exact values.
pub fn elementary_value(values: &[Rational], j: usize) -> Rational {
    // coefficients of ∏ (1 + v_i t)
    let mut acc = vec![Rational::from_integer(1.into())];
    for v in values {
        let mut next = acc.clone();
        next.push(Rational::from_integer(0.into()));
        for (k, a) in acc.iter().enumerate() {
            next[k + 1] += a * v;
        }
        acc = next;
    }
    acc.get(j).cloned().unwrap_or_else(|| Rational::from_integer(0.into()))
}

pub(crate) fn e_of_exponents(exps: &[u32], j: usize) -> Rational {
    let vals: Vec<Rational> = exps.iter().map(|&e| Rational::from_integer(e.into())).collect();
    elementary_value(&vals, j)
}
