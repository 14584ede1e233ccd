//! Adding a variable: `Q_0′` sends `P̄_{λ′}` to `P̄_{λ′0}` in every basis, and
//! in the Schur case `Q_0` factors through setting the last variable to 0.
//!
//! cargo run --example lifting

use symfact::ops;
use symfact::partitions::Partition;
use symfact::qops_schur as qs;
use symfact::sym_bases::Basis;

fn main() -> symfact::Result<()> {
    let short = Partition::parse("2,1")?;
    for basis in Basis::ALL {
        let f = ops::basis_bar(basis, &short)?;
        let lifted = ops::lift(basis, &f, 3)?;
        assert_eq!(lifted, ops::basis_bar(basis, &short.append_zero())?);
        println!("Q_0′ {basis}̄_{short} = {lifted}");
    }

    for text in ["2,1,0", "2,1,1"] {
        let lambda = Partition::parse(text)?;
        let f = qs::s_bar(&lambda)?;
        println!(
            "λ = {lambda}: q(0) = {}, Q_0 = Q_0′𝒫 holds: {}",
            qs::q_s_at_zero_closed_form(&lambda),
            qs::lifting_consistency(&f)?
        );
    }
    Ok(())
}
