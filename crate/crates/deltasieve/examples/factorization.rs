//! Quadratic, zone0 and scheduled-scan factorization.
//!
//! cargo run --example factorization

use deltasieve::factor::{default_schedule, factor_scan, factor_zone0, quadratic_factor, zone0_probe, FactorResult};
use deltasieve::steady::Registry;
use deltasieve::{int, Int};

fn main() -> deltasieve::Result<()> {
    let registry = Registry::standard();

    let n: Int = "524038280401".parse().unwrap();
    let r = quadratic_factor(&n, &int(137136)).expect("known delta");
    println!("quadratic: {}", r.key_values());

    println!("\n{}", FactorResult::CSV_HEADER);
    for n in [405i64, 3848, 325, 2501] {
        match factor_zone0(&int(n), &registry) {
            Some(r) => println!("{}", r.csv_line()),
            None => println!("{n}: not in zone0"),
        }
    }

    for probe in zone0_probe(&int(3848), &registry)? {
        println!("probe {} {} = {} -> {:?}", probe.dials, probe.deck, probe.value, probe.candidates);
    }

    let out = factor_scan(&int(455), &default_schedule(&[2, 4, 6]), 16, &registry)?;
    println!("\nscan 455: {:?} after {} steps", out.result.map(|r| r.key_values()), out.steps);
    Ok(())
}
