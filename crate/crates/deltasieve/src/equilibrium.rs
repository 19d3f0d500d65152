//! Δ⇌Σ equilibrium: anchors, constant tables, gec growth and the jump route.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::{quadratic_factor, trial_factor_pairs, FactorResult, Method};
use crate::series::{decks_for, exact_sqrt, int, row_id_of, DeckId, DialPair, Int, Parity, SeriesSpec};
use crate::steady::first_p_at_ssv;

/// Dials whose `od4` reaches steady state for this class.
pub fn delta_dials(delta: &Int, parity: Parity) -> Result<DialPair> {
    if delta.is_odd() {
        return Err(Error::Unsupported(format!("odd delta {delta}")));
    }
    let zero_mod4 = delta.mod_floor(&int(4)) == int(0);
    Ok(match (zero_mod4, parity) {
        (true, Parity::Odd) | (false, Parity::Even) => DialPair::ZERO_NEG,
        _ => DialPair::NEG_ZERO,
    })
}

/// Integer roots of `x^2 - delta*x + n`, smaller first.
pub fn sum_series_factor_pair(n: &Int, delta: &Int) -> Option<(Int, Int)> {
    let disc = delta * delta - n * 4;
    let r = exact_sqrt(&disc)?;
    if (delta - &r).is_odd() {
        return None;
    }
    let p: Int = (delta - &r) / 2;
    let q = delta - &p;
    Some((p, q))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumAnchor {
    pub delta: Int,
    pub parity: Parity,
    pub dials: DialPair,
    pub first_p: Int,
    pub first_id: u64,
    pub od6_ssv: Int,
    pub n_anchor: Int,
}

pub fn equilibrium_anchor(delta: &Int, parity: Parity) -> Result<EquilibriumAnchor> {
    let dials = delta_dials(delta, parity)?;
    let first_p = first_p_at_ssv(delta, dials, parity)?;
    let first_id = row_id_of(&first_p, parity).ok_or_else(|| Error::Domain("delta too large for a row index".into()))?;
    let spec = SeriesSpec::delta(delta.clone(), parity, dials);
    let od6_ssv = spec
        .row_at(first_id)?
        .od(DeckId::Od6).cloned()
        .ok_or_else(|| Error::Domain("od6 undefined at the steady row".into()))?;
    let zero_mod4 = delta.mod_floor(&int(4)) == int(0);
    let n_anchor = if zero_mod4 == (parity == Parity::Odd) { od6_ssv.clone() } else { &od6_ssv + 1 };
    Ok(EquilibriumAnchor {
        delta: delta.clone(),
        parity,
        dials,
        first_p,
        first_id,
        od6_ssv,
        n_anchor,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumRow {
    pub n_sum: Int,
    pub od6_delta: Int,
    pub constant: Int,
    pub df: Option<Int>,
}

/// Constants `N - od6`, with `N` walking down the sum series from the anchor and
/// `od6` walking up the delta series from its first steady row. Stops at `length`
/// rows or when the delta series reaches id 1, whichever comes first.
pub fn equilibrium_table(delta: &Int, parity: Parity, length: Option<usize>) -> Result<Vec<EquilibriumRow>> {
    let anchor = equilibrium_anchor(delta, parity)?;
    let (p_anchor, _) = sum_series_factor_pair(&anchor.n_anchor, delta)
        .ok_or_else(|| Error::Domain(format!("anchor {} has no integer roots", anchor.n_anchor)))?;
    let len = length.unwrap_or(usize::MAX).min(anchor.first_id as usize);
    let spec = SeriesSpec::delta(delta.clone(), parity, anchor.dials);
    let mut rows: Vec<EquilibriumRow> = Vec::with_capacity(len);
    for k in 0..len {
        let p = &p_anchor - 2 * k as i64;
        let n_sum = &p * (delta - &p);
        let od6_delta = spec
            .row_at(anchor.first_id - k as u64)?
            .od(DeckId::Od6).cloned()
            .ok_or_else(|| Error::Domain("od6 undefined".into()))?;
        let constant = &n_sum - &od6_delta;
        let df = rows.last().map(|r| &r.constant - &constant);
        rows.push(EquilibriumRow { n_sum, od6_delta, constant, df });
    }
    Ok(rows)
}

pub fn write_equilibrium_csv<W: std::io::Write>(rows: &[EquilibriumRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(["n_sum", "od6_delta", "constant", "df"])?;
    for r in rows {
        w.write_record([
            r.n_sum.to_string(),
            r.od6_delta.to_string(),
            r.constant.to_string(),
            r.df.as_ref().map(Int::to_string).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Compare {
    /// Leading rows that agree, counted from the anchor.
    #[default]
    Prefix,
    /// Row `i` of one table against row `i` of the other.
    Positional,
    /// Multiset intersection.
    Multiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GecStats {
    pub delta: Int,
    pub total: u64,
    pub gec: u64,
    pub nce: u64,
    pub residue: i64,
}

pub fn compare_constants(prev: &[EquilibriumRow], cur: &[EquilibriumRow], mode: Compare) -> u64 {
    match mode {
        Compare::Prefix => prev.iter().zip(cur).take_while(|(a, b)| a.constant == b.constant).count() as u64,
        Compare::Positional => prev.iter().zip(cur).filter(|(a, b)| a.constant == b.constant).count() as u64,
        Compare::Multiset => {
            let mut pool: HashMap<&Int, u64> = HashMap::new();
            for r in prev {
                *pool.entry(&r.constant).or_default() += 1;
            }
            cur.iter()
                .filter(|r| match pool.get_mut(&r.constant) {
                    Some(c) if *c > 0 => {
                        *c -= 1;
                        true
                    }
                    _ => false,
                })
                .count() as u64
        }
    }
}

/// Compare each `Δ` with `Δ + 4` from `delta_start` up to `delta_end`.
/// Each record is labelled with the larger delta and counts against its table.
pub fn gec_growth(delta_start: &Int, delta_end: &Int, parity: Parity, mode: Compare) -> Result<Vec<GecStats>> {
    if (delta_end - delta_start).mod_floor(&int(4)) != int(0) {
        return Err(Error::Config("delta_start and delta_end must agree mod 4".into()));
    }
    let mut deltas = Vec::new();
    let mut d = delta_start.clone();
    while &d <= delta_end {
        deltas.push(d.clone());
        d += 4;
    }
    let tables: Vec<Vec<EquilibriumRow>> = deltas
        .par_iter()
        .map(|d| equilibrium_table(d, parity, None))
        .collect::<Result<_>>()?;
    Ok(tables
        .windows(2)
        .zip(&deltas[1..])
        .map(|(pair, delta)| {
            let total = pair[1].len() as u64;
            let gec = compare_constants(&pair[0], &pair[1], mode);
            GecStats {
                delta: delta.clone(),
                total,
                gec,
                nce: total - gec,
                residue: total as i64 - 2 * gec as i64,
            }
        })
        .collect())
}

pub fn write_gec_csv<W: std::io::Write>(stats: &[GecStats], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(["delta", "gec", "nce", "residue"])?;
    for s in stats {
        w.write_record([s.delta.to_string(), s.gec.to_string(), s.nce.to_string(), s.residue.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Whether consecutive residues differ by a constant.
pub fn residues_affine(stats: &[GecStats]) -> bool {
    let diffs: Vec<i64> = stats.windows(2).map(|w| w[1].residue - w[0].residue).collect();
    diffs.windows(2).all(|w| w[0] == w[1])
}

/// Jump from `od6(n)` to `N = od6 + c` on the sum series and read delta off a factor pair of `N`.
pub fn jump_factor(n: &Int, dials: DialPair, constants: &[Int], factor_bound: u64) -> Result<Option<FactorResult>> {
    if constants.is_empty() {
        return Err(Error::Config("jump_factor needs at least one constant".into()));
    }
    let od6 = match decks_for(n, dials, None)?.2[5].clone() {
        Some(x) => x,
        None => return Ok(None),
    };
    for (i, c) in constants.iter().enumerate() {
        let big_n = &od6 + c;
        if !big_n.is_positive() {
            continue;
        }
        let mut pairs = vec![(int(1), big_n.clone())];
        pairs.extend(trial_factor_pairs(&big_n, factor_bound));
        for (a, b) in pairs {
            if let Some(mut r) = quadratic_factor(n, &(a + b)) {
                r.method = Method::Equilibrium;
                r.steps = i as u64 + 1;
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}
