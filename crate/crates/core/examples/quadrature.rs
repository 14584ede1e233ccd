//! Numerical check of the integral kernel for `Q_z`, `A_k` and `Q_0′` in the
//! Schur case. The kernel prefactor is adjudicated against the spectral value.
//!
//! cargo run --example quadrature

use symfact::partitions::Partition;
use symfact::qops_schur as qs;
use symfact::quad_check as qc;

fn main() -> symfact::Result<()> {
    let lambda = Partition::parse("2,1,0")?;
    let f = qs::s_bar(&lambda)?;
    let (z, y) = (1.6, [0.5, 1.3, 2.2]);

    let qi = qc::integral_q(&f, z, &y)?;
    let oracle = qc::q_oracle(&f, z, &y)?;
    println!("(Q_z s̄)(y) spectral      = {oracle:.15}");
    println!("  reciprocal prefactor   = {:.15}", qi.reciprocal.value);
    println!("  numerator prefactor    = {:.15}", qi.numerator.value);
    println!("  matching conventions   = {:?}", qi.matching(oracle, 1e-6));

    for k in 1..=3 {
        let y_tilde: Vec<f64> = (1..k).map(|j| 1.0 + 0.7 * j as f64).collect();
        let fk = qc::restricted_s_bar(&lambda, k)?;
        let a = qc::integral_a(k, 3, &fk, 1.4, &y_tilde)?;
        let expected = qc::a_oracle(&lambda, 1.4, &y_tilde)?;
        println!("A_{k}: integral {:.12}, expected {expected:.12}", a.value);
    }

    let short = qs::s_bar(&lambda.truncate_last())?;
    let lift = qc::integral_q0prime(&short, &y)?;
    println!("Q_0′: integral {:.15}, expected {:.15}", lift.value, qc::q0prime_oracle(&short, &y)?);
    Ok(())
}
