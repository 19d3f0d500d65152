//! Sieve zones, switchover marks and coverage reports.
//!
//! cargo run --example zones_coverage

use deltasieve::series::generate;
use deltasieve::steady::Registry;
use deltasieve::zones::{coverage_report, detect_zones, find_switchover_points, ZoneCriterion};
use deltasieve::{int, DeckId, DialPair, Limit, Parity, SeriesSpec};

fn main() -> deltasieve::Result<()> {
    let rows = generate(&SeriesSpec::delta(22, Parity::Odd, DialPair::new(-1, 0, 6, 6)), Limit::Rows(60))?;
    let scan = detect_zones(&rows, &ZoneCriterion::od4())?;
    for z in &scan.zones {
        println!("zone {} of {}: ids {}..{:?} value {}", z.zone_index, z.steady_deck, z.id_start, z.id_end, z.steady_value);
    }
    for m in &scan.marks {
        println!("switchover {:?} at id {} (df {})", m.kind, m.id, m.df_anomaly);
    }

    let head = generate(&SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG), Limit::Rows(20))?;
    let ids: Vec<u64> = find_switchover_points(&head).iter().map(|m| m.id).collect();
    println!("switchover points for delta=12: {ids:?}");

    let decks = [DeckId::Od1, DeckId::Od2, DeckId::Od4, DeckId::Od5];
    let report = coverage_report(&int(160), Parity::Odd, &[DialPair::new(-2, 2, 12, 12)], &decks, None, &Registry::standard())?;
    println!("\ncoverage for delta=160, total {}:", report.total_coverage());
    report.write_csv(std::io::stdout())?;
    Ok(())
}
