//! Closed-form steady values, the first steady p, and an empirical check.
//!
//! cargo run --example steady_state

use deltasieve::steady::{base_steady_deck, first_p_at_ssv, ssv_closed_form, verify_ssv_empirically, Registry, SsvQuery};
use deltasieve::{int, DeckId, DialPair, Parity};

fn main() -> deltasieve::Result<()> {
    let registry = Registry::standard();
    for delta in [12i64, 20, 22, 46, 540] {
        let dials = if delta % 4 == 0 { DialPair::ZERO_NEG } else { DialPair::NEG_ZERO };
        let deck = base_steady_deck(&int(delta), dials, Parity::Odd)?;
        let q = SsvQuery::new(deck, delta, dials, Parity::Odd);
        let value = ssv_closed_form(&q, &registry)?;
        let p = first_p_at_ssv(&int(delta), dials, Parity::Odd)?;
        println!("delta={delta:>3} {dials} {deck} steady={value:>6}  first p={p}");
    }

    let q = SsvQuery::new(DeckId::Od5, 46, DialPair::new(-1, -2, 4, 4), Parity::Odd);
    let report = verify_ssv_empirically(&q, 800, &registry)?;
    for c in &report.checks {
        println!("od5 delta={} expected={} zone={:?} open={} pass={}", c.delta, c.expected, c.zone, c.open, c.pass);
    }

    println!("\nregistered forms:");
    registry.write_csv(std::io::stdout())?;
    Ok(())
}
