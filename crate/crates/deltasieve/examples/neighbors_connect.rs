//! Neighbor ranges, the od-connect step and inter-delta checks.
//!
//! cargo run --example neighbors_connect

use deltasieve::factor::{factor_in_range, factor_via_neighbor, inter_delta_verify, neighbor_ranges, od_connect_step, DEFAULT_TRIAL_BOUND};
use deltasieve::{int, DialPair};

fn main() -> deltasieve::Result<()> {
    for r in neighbor_ranges(&int(1643), DialPair::NEG_ZERO)? {
        println!("{:?}: [{}, {}]", r.which, r.lo, r.hi);
        if let Some(hit) = factor_in_range(&int(1643), &r, DEFAULT_TRIAL_BOUND) {
            println!("  shared delta in range: {}", hit.key_values());
        }
    }

    let step = od_connect_step(&int(219781), DialPair::ZERO_NEG)?;
    println!("\nconnect 219781 -> {} (d1 {} -> {})", step.n_next, step.d1, step.d1_next);
    if let Some(r) = factor_via_neighbor(&int(219781), &step.n_next, DEFAULT_TRIAL_BOUND) {
        println!("  {}", r.key_values());
    }

    let report = inter_delta_verify(&int(122), 93, DialPair::new(0, -1, 8, 8), &int(785539))?;
    for k in &report.known {
        println!("\nknown delta=122 id=93: {} = {}", k.deck, k.value);
    }
    for h in &report.unknown {
        println!("unknown: {} = {} -> delta {} p {} (id {})", h.deck, h.value, h.delta, h.p, h.id);
    }
    Ok(())
}
