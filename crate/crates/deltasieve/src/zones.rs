//! Sieve zones, switchover marks and coverage.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{generate, DeckId, DialPair, Int, Limit, Parity, SeriesRow, SeriesSpec};
use crate::steady::{DialFamily, Registry};

/// `sum(a_i * df_i) = 0` together with constancy of `steady_deck`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoneCriterion {
    pub terms: Vec<(DeckId, i64)>,
    pub steady_deck: DeckId,
}

impl ZoneCriterion {
    pub fn new(terms: Vec<(DeckId, i64)>, steady_deck: DeckId) -> Result<Self> {
        if terms.iter().all(|(_, a)| *a == 0) {
            return Err(Error::Config("zone criterion needs a nonzero coefficient".into()));
        }
        Ok(ZoneCriterion { terms, steady_deck })
    }

    /// `df1 + df2` over `od4`.
    pub fn od4() -> Self {
        Self::for_deck(DeckId::Od4)
    }

    /// `df1 + df2 + df3 + df4` over `od5`.
    pub fn od5() -> Self {
        Self::for_deck(DeckId::Od5)
    }

    /// The canonical decomposition of a deck into the decks it is built from.
    pub fn for_deck(deck: DeckId) -> Self {
        use DeckId::*;
        let terms = match deck {
            Od3 => vec![(Od2, 1), (Od1, -1)],
            Od4 => vec![(Od1, 1), (Od2, 1)],
            Od5 => vec![(Od1, 1), (Od2, 1), (Od3, 1), (Od4, 1)],
            Od9 => vec![(Od2, 1), (Od8, 1)],
            Od10 => vec![(Od4, 1), (Od8, 1)],
            Od11 => vec![(Od2, 1), (Od8, 2), (Od4, 1)],
            other => vec![(other, 1)],
        };
        ZoneCriterion { terms, steady_deck: deck }
    }

    fn sum(&self, row: &SeriesRow) -> Result<Int> {
        let mut s = Int::zero();
        for (deck, a) in &self.terms {
            let df = row
                .df(*deck)
                .ok_or_else(|| Error::Config(format!("criterion reads unevaluated deck {deck}")))?;
            s += df * *a;
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoneReport {
    pub steady_deck: DeckId,
    /// 0 for the zone that runs to the end of the rows; bounded zones count
    /// up from 1 moving back toward the head of the series.
    pub zone_index: u32,
    pub id_start: u64,
    /// `None` for an open zone.
    pub id_end: Option<u64>,
    pub steady_value: Int,
    /// Rows inside the zone; for an open zone, rows inside the scanned window.
    pub coverage: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkKind {
    Zone,
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchoverMark {
    pub kind: MarkKind,
    pub id: u64,
    pub deck: DeckId,
    pub df_anomaly: Int,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZoneScan {
    pub zones: Vec<ZoneReport>,
    pub marks: Vec<SwitchoverMark>,
}

pub fn detect_zones(rows: &[SeriesRow], criterion: &ZoneCriterion) -> Result<ZoneScan> {
    let deck = criterion.steady_deck;
    let mut sums = Vec::with_capacity(rows.len());
    for r in rows {
        sums.push(criterion.sum(r)?);
    }
    let value = |i: usize| -> Result<&Int> {
        rows[i]
            .od(deck)
            .ok_or_else(|| Error::Config(format!("steady deck {deck} is not evaluated")))
    };
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    for i in 1..rows.len() {
        let held = value(i)? == value(i - 1)? && sums[i].is_zero();
        match (held, start) {
            (true, None) => start = Some(i - 1),
            (false, Some(s)) => {
                spans.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        spans.push((s, rows.len() - 1));
    }
    let last = rows.len().saturating_sub(1);
    let mut scan = ZoneScan::default();
    let bounded = spans.iter().filter(|(_, e)| *e != last).count() as u32;
    let mut next_index = bounded;
    for (s, e) in spans {
        let open = e == last;
        let zone_index = if open {
            0
        } else {
            let k = next_index;
            next_index -= 1;
            k
        };
        if !sums[s].is_zero() {
            scan.marks.push(SwitchoverMark {
                kind: MarkKind::Zone,
                id: rows[s].id,
                deck,
                df_anomaly: sums[s].clone(),
            });
        }
        scan.zones.push(ZoneReport {
            steady_deck: deck,
            zone_index,
            id_start: rows[s].id,
            id_end: (!open).then_some(rows[e].id),
            steady_value: value(s)?.clone(),
            coverage: (e - s + 1) as u64,
        });
    }
    Ok(scan)
}

/// Rows whose `|df3|` is twice the most common nonzero `|df3|`.
pub fn find_switchover_points(rows: &[SeriesRow]) -> Vec<SwitchoverMark> {
    if rows.len() < 3 {
        return Vec::new();
    }
    let steps: Vec<(u64, Int)> = rows[1..]
        .iter()
        .filter_map(|r| r.df(DeckId::Od3).map(|d| (r.id, d.clone())))
        .collect();
    let mut counts: HashMap<Int, usize> = HashMap::new();
    for (_, d) in &steps {
        if !d.is_zero() {
            *counts.entry(d.abs()).or_default() += 1;
        }
    }
    let Some(mode) = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .map(|(v, _)| v.clone())
    else {
        return Vec::new();
    };
    let doubled = mode * 2;
    steps
        .into_iter()
        .filter(|(_, d)| d.abs() == doubled)
        .map(|(id, d)| SwitchoverMark {
            kind: MarkKind::Point,
            id,
            deck: DeckId::Od3,
            df_anomaly: d,
        })
        .collect()
}

/// Default number of rows scanned for a delta: well past the head of the
/// series for every family in the registry.
pub fn default_horizon(delta: &Int) -> u64 {
    let d = u64::try_from(delta.abs()).unwrap_or(u64::MAX / 4);
    d.saturating_mul(d) / 8 + 100
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageRow {
    pub deck: DeckId,
    pub zone_index: u32,
    pub id_start: u64,
    pub id_end: Option<u64>,
    pub coverage: u64,
    pub steady_value: Int,
    pub form_id: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub rows: Vec<CoverageRow>,
    /// Rows in the window that fall in no zone of any requested deck.
    pub zoneless: u64,
    pub horizon: u64,
}

impl CoverageReport {
    pub fn total_coverage(&self) -> u64 {
        self.rows.iter().map(|r| r.coverage).sum()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["deck", "zone_index", "id_start", "id_end", "coverage", "steady_value", "form_id"])?;
        for r in &self.rows {
            w.write_record([
                r.deck.to_string(),
                r.zone_index.to_string(),
                r.id_start.to_string(),
                r.id_end.map(|e| e.to_string()).unwrap_or_else(|| "inf".into()),
                r.coverage.to_string(),
                r.steady_value.to_string(),
                r.form_id.clone(),
            ])?;
        }
        w.write_record([
            "zoneless".to_string(),
            String::new(),
            "1".to_string(),
            self.horizon.to_string(),
            self.zoneless.to_string(),
            String::new(),
            String::new(),
        ])?;
        w.flush()?;
        Ok(())
    }
}

/// Zones of every requested deck for odd or even `p` under one or two dial pairs.
pub fn coverage_report(
    delta: &Int,
    parity: Parity,
    dials: &[DialPair],
    decks: &[DeckId],
    horizon: Option<u64>,
    registry: &Registry,
) -> Result<CoverageReport> {
    let (primary, second) = match dials {
        [a] => (*a, None),
        [a, b] => (*a, Some(*b)),
        _ => return Err(Error::Config("coverage needs one or two dial pairs".into())),
    };
    let horizon = horizon.unwrap_or_else(|| default_horizon(delta));
    let mut spec = SeriesSpec::delta(delta.clone(), parity, primary);
    spec.second = second;
    let rows = generate(&spec, Limit::Rows(horizon))?;
    let family = DialFamily { primary, second };
    let mut covered = vec![false; rows.len()];
    let mut out = Vec::new();
    for &deck in decks {
        if deck.needs_second_pair() && second.is_none() {
            return Err(Error::Config(format!("{deck} needs a second dial pair")));
        }
        let scan = detect_zones(&rows, &ZoneCriterion::for_deck(deck))?;
        for z in scan.zones {
            let end = z.id_end.unwrap_or(rows.len() as u64);
            for c in &mut covered[(z.id_start - 1) as usize..end as usize] {
                *c = true;
            }
            let form_id = registry
                .identify(deck, family, delta, parity, &z.steady_value)
                .map(|f| f.form_id())
                .unwrap_or_else(|| "unregistered".into());
            out.push(CoverageRow {
                deck,
                zone_index: z.zone_index,
                id_start: z.id_start,
                id_end: z.id_end,
                coverage: z.coverage,
                steady_value: z.steady_value,
                form_id,
            });
        }
    }
    out.sort_by_key(|r| (r.deck, r.id_start));
    Ok(CoverageReport {
        rows: out,
        zoneless: covered.iter().filter(|c| !**c).count() as u64,
        horizon,
    })
}

/// Zones of `deck` as `v1 = v2 = v` moves through the schedule.
pub fn zone_shift_scan(
    delta: &Int,
    parity: Parity,
    base: DialPair,
    deck: DeckId,
    v_schedule: &[i64],
    horizon: Option<u64>,
) -> Result<BTreeMap<i64, Vec<ZoneReport>>> {
    if v_schedule.is_empty() {
        return Err(Error::Config("v schedule is empty".into()));
    }
    let horizon = horizon.unwrap_or_else(|| default_horizon(delta));
    let mut out = BTreeMap::new();
    for &v in v_schedule {
        let spec = SeriesSpec::delta(delta.clone(), parity, base.with_v(v));
        let rows = generate(&spec, Limit::Rows(horizon))?;
        out.insert(v, detect_zones(&rows, &ZoneCriterion::for_deck(deck))?.zones);
    }
    Ok(out)
}

/// A coefficient vector over `od1..od6` whose `df` sum vanishes on some span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionHit {
    pub coefficients: Vec<(DeckId, i64)>,
    /// Longest run of rows with a zero `df` sum: first and last id.
    pub span: (u64, u64),
    /// Value of `sum(a_i * od_i)` on that span.
    pub steady_value: Int,
    /// The same vector also yields a span of at least `min_len` rows at `delta + 4`.
    pub survives_delta_plus_4: bool,
}

fn longest_zero_run(rows: &[SeriesRow], coeffs: &[(DeckId, i64)]) -> Option<Option<(usize, usize)>> {
    let mut any_nonzero = false;
    let mut best: Option<(usize, usize)> = None;
    let mut start: Option<usize> = None;
    for i in 1..rows.len() {
        let mut s = Int::zero();
        for (deck, a) in coeffs {
            s += rows[i].df(*deck)? * *a;
        }
        if s.is_zero() {
            start.get_or_insert(i - 1);
        } else {
            any_nonzero = true;
            start = None;
        }
        if let Some(st) = start {
            if best.map_or(true, |(b0, b1)| i - st > b1 - b0) {
                best = Some((st, i));
            }
        }
    }
    Some(if any_nonzero { best } else { None })
}

/// Bounded search over `a_i` in `-range..=range` for the decks given.
///
/// Vectors whose `df` sum vanishes on every row are identities of the deck
/// definitions and are dropped. Sign-flipped duplicates are dropped too.
pub fn criterion_search(
    delta: &Int,
    parity: Parity,
    dials: DialPair,
    decks: &[DeckId],
    range: i64,
    rows: u64,
    min_len: u64,
) -> Result<Vec<CriterionHit>> {
    if decks.is_empty() || decks.len() > 6 || decks.iter().any(|d| *d > DeckId::Od6) {
        return Err(Error::Config("criterion search takes one to six of od1..od6".into()));
    }
    let here = generate(&SeriesSpec::delta(delta.clone(), parity, dials), Limit::Rows(rows))?;
    let there = generate(&SeriesSpec::delta(delta + 4, parity, dials), Limit::Rows(rows))?;
    let width = (2 * range + 1) as usize;
    let total = width.pow(decks.len() as u32);
    let mut hits = Vec::new();
    for code in 1..total {
        let mut c = code;
        let coeffs: Vec<(DeckId, i64)> = decks
            .iter()
            .map(|d| {
                let a = (c % width) as i64 - range;
                c /= width;
                (*d, a)
            })
            .collect();
        match coeffs.iter().find(|(_, a)| *a != 0) {
            Some((_, a)) if *a > 0 => {}
            _ => continue,
        }
        let Some(Some((s, e))) = longest_zero_run(&here, &coeffs) else { continue };
        if ((e - s + 1) as u64) < min_len {
            continue;
        }
        let survives = matches!(
            longest_zero_run(&there, &coeffs),
            Some(Some((a, b))) if (b - a + 1) as u64 >= min_len
        );
        let mut value = Int::zero();
        for (deck, a) in &coeffs {
            let od = here[s].od(*deck).ok_or_else(|| Error::Config(format!("{deck} undefined")))?;
            value += od * *a;
        }
        hits.push(CriterionHit {
            coefficients: coeffs.into_iter().filter(|(_, a)| *a != 0).collect(),
            span: (here[s].id, here[e].id),
            steady_value: value,
            survives_delta_plus_4: survives,
        });
    }
    Ok(hits)
}
