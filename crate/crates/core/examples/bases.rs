//! The three bases in three variables, their values at (1, 1, 1), and a
//! symmetric polynomial rewritten in each of them.
//!
//! cargo run --example bases

use symfact::exact::{var_names, MultiPoly};
use symfact::partitions::{enumerate_partitions, Partition};
use symfact::sym_bases::{expand_in_basis, schur_in_monomials, Basis};

fn main() -> symfact::Result<()> {
    let lambda = Partition::parse("2,1,0")?;
    for basis in Basis::ALL {
        let p = basis.basis_poly(&lambda)?;
        println!("{basis}_{lambda} = {}", p.raw);
        println!("  value at 1: {}, normalized: {}", p.value_at_one, p.normalized);
    }

    println!("\nSchur polynomials on the monomial basis (Kostka numbers):");
    for lambda in enumerate_partitions(3, 3).into_iter().filter(|l| l.weight() == 3) {
        let row: Vec<String> = schur_in_monomials(&lambda)?
            .iter()
            .rev()
            .map(|(nu, c)| format!("{c}·m_{nu}"))
            .collect();
        println!("  s_{lambda} = {}", row.join(" + "));
    }

    // p_2 = x1² + x2² + x3² in every basis
    let x = var_names("x", 3);
    let f = (0..3).fold(MultiPoly::zero(x.clone()), |acc, i| {
        &acc + &MultiPoly::var(x.clone(), i).pow(2)
    });
    println!("\nf = {f}");
    for basis in Basis::ALL {
        let exp = expand_in_basis(&f, basis)?;
        let terms: Vec<String> = exp.coeffs.iter().map(|(l, c)| format!("{c}·{basis}_{l}")).collect();
        println!("  = {}", terms.join(" + "));
        assert_eq!(exp.reconstruct()?, f);
    }
    Ok(())
}
