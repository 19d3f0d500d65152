//! Generate the head of a Δ-series and a Σ-series and print them as CSV.
//!
//! cargo run --example series

use deltasieve::series::{generate, write_csv};
use deltasieve::{DialPair, Limit, Parity, SeriesSpec};

fn main() -> deltasieve::Result<()> {
    let delta = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
    let rows = generate(&delta, Limit::Rows(8))?;
    write_csv(&rows, std::io::stdout())?;

    let r7 = &rows[6];
    println!("\nrow 7: n={} d1={} d2={} od4={}", r7.n, r7.d1, r7.d2, r7.od(deltasieve::DeckId::Od4).unwrap());

    println!("\nsum series, sigma=22:");
    let sum = SeriesSpec::sum(22, Parity::Odd, DialPair::NEG_ZERO);
    for r in generate(&sum, Limit::Rows(11))? {
        println!("p={:>2} q={:>2} n={:>3} od6={}", r.p, r.q, r.n, r.od(deltasieve::DeckId::Od6).unwrap());
    }
    Ok(())
}
