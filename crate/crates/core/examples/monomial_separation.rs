//! Separation of variables on the monomial basis: `Q_z` by averaging over
//! which variable gets scaled, the `A_k` chain, and its exact inverse.
//!
//! cargo run --example monomial_separation

use symfact::partitions::Partition;
use symfact::qops_monomial as qm;

fn main() -> symfact::Result<()> {
    let lambda = Partition::parse("2,1,0")?;
    let n = lambda.len();
    let f = qm::m_bar(&lambda)?;
    println!("m̄_{lambda} = {f}");
    println!("q(z) = {}", qm::q_m(&lambda));

    let qf = qm::q_m_apply(&f, n, "z")?;
    println!("Q_z m̄ = {qf}");

    let chain = qm::s_m_via_chain(&f)?;
    let composed = qm::s_m_via_q_composition(&f)?;
    assert_eq!(chain, composed);
    println!("S_3 m̄ = {chain}");

    // S⁻¹ = A_3⁻¹ A_2⁻¹ A_1⁻¹ recovers the input
    let back = qm::s_m_inverse_apply(&chain)?;
    assert_eq!(back, f);
    println!("S_3⁻¹ S_3 m̄ = {back}");

    // Q_z works on nonsymmetric input as well
    let g = qm::projector(&f, 1, 2)?;
    println!("ℙ_12 m̄ = {g}");
    println!("Q_z ℙ_12 m̄ = {}", qm::q_m_apply(&g, n, "z")?);
    Ok(())
}
