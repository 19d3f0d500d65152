//! od6 reflection marks and the od6 neighbourhood search.
//!
//! cargo run --example reflection

use deltasieve::factor::{od6_search, reflection_scan, Direction, DEFAULT_TRIAL_BOUND};
use deltasieve::series::generate;
use deltasieve::{int, DialPair, Limit, Parity, SeriesSpec};

fn main() -> deltasieve::Result<()> {
    for (delta, dials) in [(22, DialPair::NEG_ZERO), (20, DialPair::ZERO_NEG)] {
        let rows = generate(&SeriesSpec::delta(delta, Parity::Odd, dials), Limit::Rows(24))?;
        for m in reflection_scan(&rows) {
            println!("delta={delta}: ro{{{},{}}}{} at ids {:?}, {} mirrored pairs", m.x, m.y, m.gap, m.center_ids, m.span);
        }
    }

    let found = od6_search(&int(455), DialPair::NEG_ZERO, Direction::Down, 500, Some(int(28)), DEFAULT_TRIAL_BOUND)?;
    for c in found.iter().filter(|c| !c.shared.is_empty()) {
        println!("m={} od6={} deltas={:?} shared={:?}", c.m, c.od6, c.deltas, c.shared);
    }
    Ok(())
}
