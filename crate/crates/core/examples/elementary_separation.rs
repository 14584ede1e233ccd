//! The elementary basis: `Q_z` rescales the generators `e_j`, the separated
//! polynomial factors into linear pieces, and both separation routes agree.
//!
//! cargo run --example elementary_separation

use symfact::exact::{int, rat};
use symfact::ops;
use symfact::partitions::Partition;
use symfact::qops_elementary as qe;
use symfact::sym_bases::Basis;

fn main() -> symfact::Result<()> {
    let lambda = Partition::parse("3,1,0")?;
    let n = lambda.len();
    let f = qe::e_bar(&lambda)?;
    let q = qe::q_e(&lambda);
    println!("Ē_{lambda} = {f}");
    println!("q(z) = {q}");
    println!("ODE residual: {}", qe::q_e_ode_residual(&lambda, &q));

    // H_j has eigenvalue λ_j − λ_{j+1}
    for j in 1..=n {
        let eigenvalue = ops::h_eigenvalue(Basis::Elementary, &lambda, j)?;
        assert_eq!(qe::h_e_apply(j, &f)?, f.scale(&eigenvalue));
        println!("H_{j} Ē = {eigenvalue} · Ē");
    }

    // the rational-coefficient form of H_1 agrees pointwise
    let point = [int(2), int(5), rat(1, 3)];
    let explicit = qe::h_e_explicit_at(1, &f, &point)?;
    assert_eq!(explicit, f.eval(&point)? * int(2));
    println!("H_1 Ē at (2, 5, 1/3) = {explicit}");

    let by_chain = qe::s_e_via_chain(&f)?;
    let by_q = qe::s_e_via_q_composition(&f)?;
    assert_eq!(by_chain, by_q);
    println!("S_3 Ē = {by_chain}");
    Ok(())
}
