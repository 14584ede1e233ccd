//! Numerical checks of the integral representations of `Q_z`, `A_k` and
//! `Q_0′` in the Schur case, plus the exact determinant identities behind them.
//!
//! The delta constraint `x_1⋯x_K = c` is always eliminated analytically by
//! solving for the last variable. What remains is a Laurent polynomial in the
//! free variables, integrated in closed form for one free variable and by
//! adaptive Gauss–Kronrod (outer) over a closed-form inner integral for two.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{factorial, to_f64};
use crate::exact::{determinant, int, var_names, MultiPoly, Rational};
use crate::qops_schur::q_s;
use crate::sym_bases::{expand_in_basis, restrict_to_ones, schur_poly, vandermonde, x_vars, Basis};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl QuadratureResult {
    fn scaled(self, factor: f64) -> Self {
        QuadratureResult {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

/// `lower_j < x_j < upper_j` for the free variables, `x_K > tail` for the
/// eliminated one, and `x_1 ⋯ x_K = delta`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderedDomain {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub tail: f64,
    pub delta: f64,
    pub enforce_tail: bool,
}

impl OrderedDomain {
    /// `y_1 < x_1 < y_2 < … < y_n < x_n`, `∏x = z ∏y`.
    pub fn for_q(z: f64, y: &[f64]) -> Result<Self> {
        check_z(z)?;
        check_increasing(y, 0.0)?;
        let n = y.len();
        Ok(OrderedDomain {
            lower: y[..n - 1].to_vec(),
            upper: y[1..].to_vec(),
            tail: y[n - 1],
            delta: z * y.iter().product::<f64>(),
            enforce_tail: true,
        })
    }

    /// `1 < x̃_1 < ỹ_1 < … < ỹ_{k−1} < x̃_k`, `∏x̃ = z ∏ỹ`.
    pub fn for_a(z: f64, y_tilde: &[f64]) -> Result<Self> {
        check_z(z)?;
        check_increasing(y_tilde, 1.0)?;
        let mut lower = vec![1.0];
        lower.extend_from_slice(y_tilde);
        lower.pop();
        Ok(OrderedDomain {
            lower,
            upper: y_tilde.to_vec(),
            tail: y_tilde.last().copied().unwrap_or(1.0),
            delta: z * y_tilde.iter().product::<f64>(),
            enforce_tail: true,
        })
    }

    fn free(&self) -> usize {
        self.lower.len()
    }
}

fn check_z(z: f64) -> Result<()> {
    if !(z > 1.0 && z.is_finite()) {
        return Err(Error::Domain(format!("z must exceed 1, got {z}")));
    }
    Ok(())
}

fn check_increasing(v: &[f64], floor: f64) -> Result<()> {
    let mut prev = floor;
    for (i, &x) in v.iter().enumerate() {
        if !(x > prev && x.is_finite()) {
            return Err(Error::Domain(format!(
                "coordinates must be finite and strictly increasing above {floor}; entry {i} is {x}"
            )));
        }
        prev = x;
    }
    Ok(())
}

/// Laurent terms `coef · ∏_j x_j^{p_j}` over the free variables after the
/// last variable is replaced by `delta / ∏ x_{<K}` with Jacobian `1/∏ x_{<K}`.
fn eliminate_delta(p: &MultiPoly, delta: f64) -> Vec<(Vec<i32>, f64)> {
    let k = p.arity();
    p.terms()
        .map(|(m, c)| {
            let e = m.exps();
            let last = e[k - 1] as i32;
            let exps = e[..k - 1].iter().map(|&a| a as i32 - last - 1).collect();
            (exps, to_f64(c) * delta.powi(last))
        })
        .collect()
}

/// `∫_a^b x^p dx`.
fn power_integral(p: i32, a: f64, b: f64) -> f64 {
    if p == -1 {
        (b / a).ln()
    } else {
        (b.powi(p + 1) - a.powi(p + 1)) / (p + 1) as f64
    }
}

/// Delta-eliminated integral of `p` (arity `K = free + 1`) over `dom`.
pub fn integrate_delta(p: &MultiPoly, dom: &OrderedDomain) -> Result<QuadratureResult> {
    let m = dom.free();
    if p.arity() != m + 1 {
        return Err(Error::ArityMismatch {
            left: p.arity(),
            right: m + 1,
        });
    }
    let terms = eliminate_delta(p, dom.delta);
    let eps = f64::EPSILON;
    match m {
        0 => {
            if dom.enforce_tail && dom.delta <= dom.tail {
                return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 1 });
            }
            let value: f64 = terms.iter().map(|(_, c)| c).sum();
            let mag: f64 = terms.iter().map(|(_, c)| c.abs()).sum();
            Ok(QuadratureResult { value, error_estimate: 4.0 * eps * mag, evaluations: 1 })
        }
        1 => {
            let lo = dom.lower[0];
            let mut hi = dom.upper[0];
            if dom.enforce_tail {
                hi = hi.min(dom.delta / dom.tail);
            }
            if hi <= lo {
                return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
            }
            let parts: Vec<f64> = terms.iter().map(|(e, c)| c * power_integral(e[0], lo, hi)).collect();
            let mag: f64 = parts.iter().map(|v| v.abs()).sum();
            Ok(QuadratureResult {
                value: parts.iter().sum(),
                error_estimate: 8.0 * eps * mag,
                evaluations: terms.len(),
            })
        }
        2 => integrate_two_free(&terms, dom),
        _ => Err(Error::Domain(format!(
            "integral checks support at most 3 variables, got {}",
            m + 1
        ))),
    }
}

fn integrate_two_free(terms: &[(Vec<i32>, f64)], dom: &OrderedDomain) -> Result<QuadratureResult> {
    let (lo1, mut hi1) = (dom.lower[0], dom.upper[0]);
    let (lo2, hi2) = (dom.lower[1], dom.upper[1]);
    let c = dom.delta / dom.tail;
    if dom.enforce_tail {
        // the inner range (lo2, c/x1) is empty once x1 ≥ c/lo2
        hi1 = hi1.min(c / lo2);
    }
    if hi1 <= lo1 {
        return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }
    let inner = |x1: f64| -> f64 {
        let up = if dom.enforce_tail { hi2.min(c / x1) } else { hi2 };
        if up <= lo2 {
            return 0.0;
        }
        terms
            .iter()
            .map(|(e, k)| k * x1.powi(e[0]) * power_integral(e[1], lo2, up))
            .sum()
    };
    let mut breaks = vec![lo1];
    let kink = c / hi2;
    if dom.enforce_tail && kink > lo1 && kink < hi1 {
        breaks.push(kink);
    }
    breaks.push(hi1);
    let mut total = QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0 };
    for w in breaks.windows(2) {
        let r = adaptive_gk(&inner, w[0], w[1], 1e-13, 1e-12, 500)?;
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
    }
    Ok(total)
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const K15_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const G7_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with the embedded 7-point Gauss estimate.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid);
    let mut k = K15_WEIGHTS[7] * fc;
    let mut g = G7_WEIGHTS[3] * fc;
    for i in 0..7 {
        let d = half * GK_NODES[i];
        let s = f(mid - d) + f(mid + d);
        k += K15_WEIGHTS[i] * s;
        if i % 2 == 1 {
            g += G7_WEIGHTS[i / 2] * s;
        }
    }
    (k * half, ((k - g) * half).abs())
}

/// Adaptive bisection driven by the largest panel error. The panel set is
/// kept in a `Vec` and summed left to right, so results are reproducible.
pub fn adaptive_gk<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Result<QuadratureResult> {
    let (v, e) = gk15(f, a, b);
    let mut panels = vec![(a, b, v, e)];
    let mut evaluations = 15;
    loop {
        let value: f64 = panels.iter().map(|p| p.2).sum();
        let error: f64 = panels.iter().map(|p| p.3).sum();
        if error <= abs_tol.max(rel_tol * value.abs()) {
            return Ok(QuadratureResult { value, error_estimate: error, evaluations });
        }
        if panels.len() >= max_panels {
            return Err(Error::Quadrature(format!(
                "no convergence on [{a}, {b}] after {} panels: value {value}, error {error}",
                panels.len()
            )));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3).then(y.0.cmp(&x.0)))
            .map(|(i, _)| i)
            .unwrap();
        let (l, r, _, _) = panels[worst];
        let m = 0.5 * (l + r);
        let (v1, e1) = gk15(f, l, m);
        let (v2, e2) = gk15(f, m, r);
        evaluations += 30;
        panels[worst] = (l, m, v1, e1);
        panels.insert(worst + 1, (m, r, v2, e2));
    }
}

fn vandermonde_f64(v: &[f64]) -> f64 {
    let mut acc = 1.0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= v[i] - v[j];
        }
    }
    acc
}

/// Which power of `(z − 1)` multiplies the `Q_z` kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrefactorConvention {
    /// `(n − 1)!/((z − 1)^{n−1} Δ_n(y))`
    Reciprocal,
    /// `(n − 1)! (z − 1)^{n−1}/Δ_n(y)`
    Numerator,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QIntegral {
    /// `∫ δ(∏x − z∏y) Δ_n(x) f(x) dx` alone.
    pub raw: QuadratureResult,
    pub reciprocal: QuadratureResult,
    pub numerator: QuadratureResult,
}

impl QIntegral {
    /// Conventions whose value is within `rel_tol` of `oracle`.
    pub fn matching(&self, oracle: f64, rel_tol: f64) -> Vec<PrefactorConvention> {
        let mut out = Vec::new();
        for (conv, r) in [
            (PrefactorConvention::Reciprocal, &self.reciprocal),
            (PrefactorConvention::Numerator, &self.numerator),
        ] {
            if rel_err(r.value, oracle) <= rel_tol {
                out.push(conv);
            }
        }
        out
    }
}

pub fn rel_err(computed: f64, oracle: f64) -> f64 {
    let diff = (computed - oracle).abs();
    if oracle == 0.0 {
        diff
    } else {
        diff / oracle.abs()
    }
}

fn check_arity(f: &MultiPoly, n: usize) -> Result<()> {
    if f.arity() != n {
        return Err(Error::ArityMismatch { left: f.arity(), right: n });
    }
    Ok(())
}

/// The `Q_z` integral under both prefactor conventions.
pub fn integral_q(f: &MultiPoly, z: f64, y: &[f64]) -> Result<QIntegral> {
    integral_q_with(f, z, y, true)
}

/// As [`integral_q`], optionally dropping the `x_n > y_n` indicator.
pub fn integral_q_with(f: &MultiPoly, z: f64, y: &[f64], enforce_tail: bool) -> Result<QIntegral> {
    let n = y.len();
    if n == 0 {
        return Err(Error::Domain("empty y".into()));
    }
    check_arity(f, n)?;
    let mut dom = OrderedDomain::for_q(z, y)?;
    dom.enforce_tail = enforce_tail;
    let integrand = &vandermonde(n).with_vars(f.vars().to_vec())? * f;
    let raw = integrate_delta(&integrand, &dom)?;
    let base = to_f64(&factorial((n - 1) as u32)) / vandermonde_f64(y);
    let zp = (z - 1.0).powi((n - 1) as i32);
    Ok(QIntegral {
        raw,
        reciprocal: raw.scaled(base / zp),
        numerator: raw.scaled(base * zp),
    })
}

/// `(Q_z f)(y)` from the `s̄`-expansion and `q_λ`.
pub fn q_oracle(f: &MultiPoly, z: f64, y: &[f64]) -> Result<f64> {
    let n = f.arity();
    let f = f.with_vars(x_vars(n))?;
    let exp = expand_in_basis(&f, Basis::Schur)?;
    let mut acc = 0.0;
    for (lambda, c) in &exp.coeffs {
        let s = schur_poly(lambda)?;
        let weight = to_f64(&(c * &s.value_at_one));
        acc += weight * q_s(lambda)?.eval_f64(z) * s.normalized.eval_f64(y)?;
    }
    Ok(acc)
}

/// The `A_k` integral for `f` in `k` variables, with `n` the full size.
pub fn integral_a(k: usize, n: usize, f: &MultiPoly, z_k: f64, y_tilde: &[f64]) -> Result<QuadratureResult> {
    if k < 1 || k > n || y_tilde.len() + 1 != k {
        return Err(Error::OutOfRange(format!(
            "k={k}, n={n}, {} ỹ values",
            y_tilde.len()
        )));
    }
    check_arity(f, k)?;
    let dom = OrderedDomain::for_a(z_k, y_tilde)?;
    let vars = f.vars().to_vec();
    let one = MultiPoly::one(vars.clone());
    let mut integrand = &vandermonde(k).with_vars(vars.clone())? * f;
    for j in 0..k {
        integrand = &integrand * &(&MultiPoly::var(vars.clone(), j) - &one).pow((n - k) as u32);
    }
    let raw = integrate_delta(&integrand, &dom)?;
    let sign = if (k - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let mut den = to_f64(&factorial((n - k) as u32)) * (z_k - 1.0).powi((n - 1) as i32);
    den *= vandermonde_f64(y_tilde);
    for &yj in y_tilde {
        den *= (yj - 1.0).powi((n - k + 1) as i32);
    }
    Ok(raw.scaled(sign * to_f64(&factorial((n - 1) as u32)) / den))
}

/// `s̄_λ(x̃_1, …, x̃_k, 1, …, 1)` as a polynomial in `k` variables.
pub fn restricted_s_bar(lambda: &crate::partitions::Partition, k: usize) -> Result<MultiPoly> {
    let s = schur_poly(lambda)?.normalized;
    restrict_to_ones(&s, k + 1)
}

/// Right side of the chain relation: `s̄_λ(ỹ, 1, …, 1) q_λ(z_k)`.
pub fn a_oracle(lambda: &crate::partitions::Partition, z_k: f64, y_tilde: &[f64]) -> Result<f64> {
    let shorter = restricted_s_bar(lambda, y_tilde.len())?;
    Ok(shorter.eval_f64(y_tilde)? * q_s(lambda)?.eval_f64(z_k))
}

/// `Q_0′` integral: `(−1)^{n−1}(n−1)!/Δ_n(y) ∫ Δ_{n−1}(x′) f(x′) dx′` over
/// the box `y_j < x_j < y_{j+1}`, integrated term by term in closed form.
pub fn integral_q0prime(f: &MultiPoly, y: &[f64]) -> Result<QuadratureResult> {
    let n = y.len();
    if n == 0 {
        return Err(Error::Domain("empty y".into()));
    }
    check_arity(f, n - 1)?;
    check_increasing(y, 0.0)?;
    let integrand = &vandermonde(n - 1).with_vars(f.vars().to_vec())? * f;
    let mut value = 0.0;
    let mut mag = 0.0;
    for (m, c) in integrand.terms() {
        let mut t = to_f64(c);
        for (j, &a) in m.exps().iter().enumerate() {
            t *= power_integral(a as i32, y[j], y[j + 1]);
        }
        value += t;
        mag += t.abs();
    }
    let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let factor = sign * to_f64(&factorial((n - 1) as u32)) / vandermonde_f64(y);
    Ok(QuadratureResult {
        value: value * factor,
        error_estimate: 8.0 * f64::EPSILON * mag * factor.abs(),
        evaluations: integrand.len(),
    })
}

/// `s̄_{λ′0}(y)` for `f = Σ c s̄_{λ′}` in `n − 1` variables.
pub fn q0prime_oracle(f: &MultiPoly, y: &[f64]) -> Result<f64> {
    let n = y.len();
    let lifted = crate::qops_schur::q0prime_s_apply(f, n)?;
    lifted.eval_f64(y)
}

/// Both sides of the border identity: the `(n−1)`-order determinant of row
/// differences `t_{i+1} − t_i`, and `(−1)^{k−1}` times the order-`n`
/// determinant with a column of ones inserted at position `k` (1-based).
pub fn border_identity_sides(k: usize, t: &[Vec<Rational>]) -> Result<(Rational, Rational)> {
    let n = t.len();
    if n < 2 {
        return Err(Error::OutOfRange("border identity needs n ≥ 2".into()));
    }
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("k={k} for n={n}")));
    }
    for row in t {
        if row.len() + 1 != n {
            return Err(Error::NonSquare { rows: n, cols: row.len() + 1 });
        }
    }
    let diffs: Vec<Vec<Rational>> = (0..n - 1)
        .map(|i| t[i + 1].iter().zip(&t[i]).map(|(a, b)| a - b).collect())
        .collect();
    let lhs = determinant(&diffs)?;
    let bordered: Vec<Vec<Rational>> = t
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.insert(k - 1, Rational::one());
            r
        })
        .collect();
    let sign = if (k - 1) % 2 == 0 { int(1) } else { int(-1) };
    Ok((lhs, sign * determinant(&bordered)?))
}

/// `∫_{v_1}^{v_2} ⋯ ∫_{v_m}^{v_{m+1}} Δ_m(u) du` exactly, against
/// `(−1)^m/m! · Δ_{m+1}(v)`.
pub fn delta_integral_sides(v: &[Rational]) -> Result<(Rational, Rational)> {
    if v.is_empty() {
        return Err(Error::OutOfRange("need at least one bound".into()));
    }
    let m = v.len() - 1;
    let mut p = if m == 0 {
        MultiPoly::one(Vec::new())
    } else {
        vandermonde(m).with_vars(var_names("u", m))?
    };
    for j in 0..m {
        p = p.integrate_slot(j, &v[j], &v[j + 1]);
    }
    let lhs = p.eval(&vec![Rational::zero(); m])?;
    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
    let rhs = sign / factorial(m as u32) * crate::sym_bases::vandermonde_value(v);
    Ok((lhs, rhs))
}

/// Checks the border identity for column position `k` and the Δ-integral
/// identity with bounds taken from the first column of `t`.
pub fn matrix_identity_check(k: usize, t: &[Vec<Rational>]) -> Result<bool> {
    let (lhs, rhs) = border_identity_sides(k, t)?;
    let bounds: Vec<Rational> = t.iter().map(|row| row.first().cloned().unwrap_or_else(Rational::zero)).collect();
    let (il, ir) = delta_integral_sides(&bounds)?;
    Ok(lhs == rhs && il == ir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partitions::{enumerate_partitions, Partition};
    use crate::qops_schur::s_bar;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn core_alternant_integral_by_hand() {
        // ∫ δ a_μ with μ = (2, 0): antiderivative x²/2 + c²/(2x²)
        let a = crate::sym_bases::alternant(&[2, 0]).unwrap();
        let dom = OrderedDomain::for_q(1.5, &[1.0, 2.0]).unwrap();
        let r = integrate_delta(&a, &dom).unwrap();
        assert!((r.value + 1.875).abs() < 1e-14, "{}", r.value);
    }

    #[test]
    fn q_integral_prefactor_conventions() {
        let f = s_bar(&p(&[1, 0])).unwrap();
        let q = integral_q(&f, 1.5, &[1.0, 2.0]).unwrap();
        assert!((q.reciprocal.value - 1.875).abs() < 1e-13);
        assert!((q.numerator.value - 0.46875).abs() < 1e-13);
        let oracle = q_oracle(&f, 1.5, &[1.0, 2.0]).unwrap();
        assert!((oracle - 1.875).abs() < 1e-14);
        assert_eq!(q.matching(oracle, 1e-10), vec![PrefactorConvention::Reciprocal]);
    }

    #[test]
    fn tail_indicator_is_value_neutral_for_two_variables() {
        for lambda in enumerate_partitions(3, 2) {
            let f = s_bar(&lambda).unwrap();
            for (z, y) in [(1.5, [1.0, 2.0]), (1.2, [0.5, 3.0]), (4.0, [1.0, 1.5])] {
                let with = integral_q_with(&f, z, &y, true).unwrap().raw.value;
                let without = integral_q_with(&f, z, &y, false).unwrap().raw.value;
                assert!(rel_err(with, without) < 1e-10, "{lambda} z={z}: {with} vs {without}");
            }
        }
    }

    #[test]
    fn q_integral_matches_oracle() {
        for lambda in enumerate_partitions(3, 2) {
            let f = s_bar(&lambda).unwrap();
            let q = integral_q(&f, 1.7, &[0.8, 1.9]).unwrap();
            let oracle = q_oracle(&f, 1.7, &[0.8, 1.9]).unwrap();
            assert!(rel_err(q.reciprocal.value, oracle) < 1e-10, "{lambda}");
        }
        for lambda in enumerate_partitions(2, 3) {
            let f = s_bar(&lambda).unwrap();
            let y = [1.0, 1.6, 2.5];
            let q = integral_q(&f, 1.4, &y).unwrap();
            let oracle = q_oracle(&f, 1.4, &y).unwrap();
            assert!(rel_err(q.reciprocal.value, oracle) < 1e-6, "{lambda}: {} vs {oracle}", q.reciprocal.value);
        }
    }

    #[test]
    fn a_integral_examples() {
        // n = k = 2, ỹ = 3, z = 2: oracle s̄(3, 1)·q(2) = 2·(3/2)
        let f = restricted_s_bar(&p(&[1, 0]), 2).unwrap();
        let r = integral_a(2, 2, &f, 2.0, &[3.0]).unwrap();
        assert!((r.value - 3.0).abs() < 1e-12, "{}", r.value);
        assert!((a_oracle(&p(&[1, 0]), 2.0, &[3.0]).unwrap() - 3.0).abs() < 1e-14);
        // k = 1 reduces to q_λ(z)
        let f = restricted_s_bar(&p(&[2, 1, 0]), 1).unwrap();
        let r = integral_a(1, 3, &f, 1.8, &[]).unwrap();
        assert!(rel_err(r.value, a_oracle(&p(&[2, 1, 0]), 1.8, &[]).unwrap()) < 1e-12);
        // constant eigenfunction
        for (k, yt) in [(2usize, vec![2.0]), (3, vec![1.5, 2.5])] {
            let one = MultiPoly::one(x_vars(k));
            let r = integral_a(k, 3, &one, 1.6, &yt).unwrap();
            assert!(rel_err(r.value, 1.0) < 1e-8, "k={k}: {}", r.value);
        }
    }

    #[test]
    fn q0prime_examples() {
        let x1 = MultiPoly::var(x_vars(1), 0);
        assert!((integral_q0prime(&x1, &[1.0, 2.0]).unwrap().value - 1.5).abs() < 1e-14);
        let one = MultiPoly::one(x_vars(1));
        assert!((integral_q0prime(&one, &[1.0, 2.0]).unwrap().value - 1.0).abs() < 1e-14);
        let f = s_bar(&p(&[1, 0])).unwrap();
        let r = integral_q0prime(&f, &[1.0, 2.0, 3.0]).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
        assert!((q0prime_oracle(&f, &[1.0, 2.0, 3.0]).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn border_identity_examples() {
        let t = vec![vec![rat(2, 3)], vec![rat(-5, 7)]];
        let (l, r) = border_identity_sides(1, &t).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, rat(-5, 7) - rat(2, 3));
        let t = vec![
            vec![rat(1, 2), int(3)],
            vec![rat(-2, 5), int(1)],
            vec![int(4), rat(7, 3)],
        ];
        for k in 1..=3 {
            assert!(matrix_identity_check(k, &t).unwrap());
        }
        let (l, r) = delta_integral_sides(&[int(1), int(4)]).unwrap();
        assert_eq!((l.clone(), r), (int(3), int(3)));
        let (l, r) = delta_integral_sides(&[int(0), int(1), int(3)]).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn domain_errors() {
        let f = s_bar(&p(&[1, 0])).unwrap();
        assert!(integral_q(&f, 0.5, &[1.0, 2.0]).is_err());
        assert!(integral_q(&f, 1.5, &[2.0, 1.0]).is_err());
        let f4 = MultiPoly::one(x_vars(4));
        assert!(matches!(integral_q(&f4, 1.5, &[1.0, 2.0, 3.0, 4.0]), Err(Error::Domain(_))));
    }

    #[test]
    fn deterministic() {
        let f = s_bar(&p(&[2, 1, 0])).unwrap();
        let a = integral_q(&f, 1.3, &[1.0, 2.0, 2.5]).unwrap();
        let b = integral_q(&f, 1.3, &[1.0, 2.0, 2.5]).unwrap();
        assert_eq!(a.raw.value.to_bits(), b.raw.value.to_bits());
    }
}
