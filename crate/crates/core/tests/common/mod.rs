//! Oracles built from first principles (permutation sums, subset sums, the
//! hook-content formula) so tests never compare the library with itself.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use symfact::exact::{int, var_names, MultiPoly, Rational, UniPoly};
use symfact::partitions::Partition;

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out.into_iter()
        .map(|p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

pub fn xs(n: usize) -> Vec<String> {
    var_names("x", n)
}

/// `e_j(v)` by summing over `j`-subsets.
pub fn e_subsets(v: &[Rational], j: usize) -> Rational {
    let n = v.len();
    let mut acc = Rational::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == j {
            let mut prod = Rational::one();
            for (i, x) in v.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod *= x;
                }
            }
            acc += prod;
        }
    }
    acc
}

pub fn ints(parts: &[u32]) -> Vec<Rational> {
    parts.iter().map(|&p| int(p as i64)).collect()
}

pub fn mu_of(lambda: &Partition) -> Vec<u32> {
    let n = lambda.len() as u32;
    lambda.parts().iter().enumerate().map(|(i, &l)| l + n - 1 - i as u32).collect()
}

/// `m_λ` as the sum over the orbit of `x^λ`.
pub fn monomial_orbit(lambda: &Partition) -> MultiPoly {
    let n = lambda.len();
    let orbit: BTreeSet<Vec<u32>> = permutations(n)
        .into_iter()
        .map(|(p, _)| p.iter().map(|&i| lambda.parts()[i]).collect())
        .collect();
    MultiPoly::from_terms(xs(n), orbit.into_iter().map(|e| (e, Rational::one()))).unwrap()
}

/// `a_μ = Σ_σ sgn(σ) x^{σ(μ)}`.
pub fn alternant_by_permutations(mu: &[u32]) -> MultiPoly {
    let n = mu.len();
    let terms = permutations(n).into_iter().map(|(p, s)| {
        let e: Vec<u32> = (0..n).map(|i| mu[p[i]]).collect();
        (e, int(s))
    });
    MultiPoly::from_terms(xs(n), terms).unwrap()
}

/// Leibniz determinant.
pub fn leibniz_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    permutations(n)
        .into_iter()
        .map(|(p, s)| (0..n).fold(int(s), |acc, i| acc * &m[i][p[i]]))
        .sum()
}

/// `s_λ(1^n)` by the hook-content formula.
pub fn hook_content(lambda: &Partition) -> Rational {
    let n = lambda.len() as i64;
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let conj = |j: i64| parts.iter().filter(|&&p| p > j).count() as i64;
    let mut acc = Rational::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let content = j - i as i64;
            let hook = (row - j - 1) + (conj(j) - i as i64 - 1) + 1;
            acc *= Rational::new((n + content).into(), hook.into());
        }
    }
    acc
}

/// `f(z, 1, …, 1)` as a univariate polynomial, by plain substitution.
pub fn restrict_first(f: &MultiPoly) -> UniPoly {
    let z = vec!["z".to_string()];
    let images: Vec<MultiPoly> = (0..f.arity())
        .map(|i| if i == 0 { MultiPoly::var(z.clone(), 0) } else { MultiPoly::one(z.clone()) })
        .collect();
    UniPoly::from_multi(&f.substitute(&images).unwrap(), 0).unwrap()
}

/// Prefix-sum dominance `a ⪯ b` at equal weight.
pub fn dominated(a: &Partition, b: &Partition) -> bool {
    if a.weight() != b.weight() {
        return false;
    }
    let (mut sa, mut sb) = (0u32, 0u32);
    for (x, y) in a.parts().iter().zip(b.parts()) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    true
}

/// Exponent vectors of length `n` with total degree ≤ `d`.
pub fn exponents_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponents_up_to(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `∏_j q(z_j)` over `z_1, …, z_n`.
pub fn product_over_z(q: &UniPoly, n: usize) -> MultiPoly {
    let z = var_names("z", n);
    (0..n).fold(MultiPoly::one(z.clone()), |acc, i| &acc * &q.to_multi(z.clone(), i))
}

/// `p(x) · q(z)` with `z` appended after the `x`-block.
pub fn times_q(p: &MultiPoly, q: &UniPoly, z_name: &str) -> MultiPoly {
    let lifted = p.extend_vars(&[z_name.to_string()]);
    let slot = p.arity();
    &lifted * &q.to_multi(lifted.vars().to_vec(), slot)
}
