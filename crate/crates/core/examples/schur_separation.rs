//! The Schur basis: `φ_λ`, its separated equation, the spectral `S_n`, and
//! the exact differential inverse built from `K_n`.
//!
//! cargo run --example schur_separation

use symfact::exact::var_names;
use symfact::exact::MultiPoly;
use symfact::partitions::Partition;
use symfact::qops_schur as qs;
use symfact::Error;

fn main() -> symfact::Result<()> {
    let lambda = Partition::parse("2,1,0")?;
    let data = qs::phi_lambda(&lambda)?;
    println!("μ = {:?}", data.mu.parts());
    println!("c = {:?}", data.c.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("φ(z) = {}", data.phi);
    println!("q(z) = {}", qs::q_s(&lambda)?);

    let res = qs::ode_residual_s(&lambda)?;
    println!("residuals: φ-equation {}, Z-equation {}", res.phi, res.q);

    let f = qs::s_bar(&lambda)?;
    let g = qs::s_s_apply(&f)?;
    println!("S_3 s̄ = {g}");
    let back = qs::s_s_inverse_apply(&g)?;
    assert_eq!(back, f);
    println!("S_3⁻¹ S_3 s̄ = {back}");

    // a polynomial that is not a separated image
    let stray = MultiPoly::var(var_names("z", 3), 0);
    match qs::s_s_inverse_apply(&stray) {
        Err(Error::NotInImage) => println!("z1 is not in the image of S_3"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
