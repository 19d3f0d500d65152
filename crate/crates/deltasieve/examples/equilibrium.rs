//! Δ⇌Σ equilibrium anchors, constants tables and gec growth.
//!
//! cargo run --example equilibrium

use deltasieve::equilibrium::{equilibrium_anchor, equilibrium_table, gec_growth, residues_affine, write_equilibrium_csv, write_gec_csv, Compare};
use deltasieve::{int, Parity};

fn main() -> deltasieve::Result<()> {
    for (d, parity) in [(20, Parity::Odd), (22, Parity::Odd), (20, Parity::Even), (22, Parity::Even)] {
        let a = equilibrium_anchor(&int(d), parity)?;
        println!("delta={d} {parity}: anchor N={} first p={} od6={}", a.n_anchor, a.first_p, a.od6_ssv);
    }

    println!();
    write_equilibrium_csv(&equilibrium_table(&int(20), Parity::Odd, Some(10))?, std::io::stdout())?;

    println!();
    let stats = gec_growth(&int(20), &int(100), Parity::Odd, Compare::Prefix)?;
    write_gec_csv(&stats, std::io::stdout())?;
    println!("residues affine: {}", residues_affine(&stats));
    Ok(())
}
