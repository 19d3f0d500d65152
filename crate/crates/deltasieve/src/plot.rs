//! Figure datasets as `x,y,series` CSV.

use std::io::Write;
use std::str::FromStr;

use num_integer::Integer;

use crate::equilibrium::{gec_growth, Compare};
use crate::error::{Error, Result};
use crate::series::{generate, int, DeckId, DialPair, Int, Limit, Parity, SeriesSpec};
use crate::steady::Registry;
use crate::zones::{coverage_report, default_horizon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    CoverageGrowth,
    RsaUnsafeZone,
    AGraph,
    GecGrowth,
    Residue,
}

impl FromStr for Figure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "coverage-growth" => Figure::CoverageGrowth,
            "rsa-unsafe-zone" => Figure::RsaUnsafeZone,
            "a-graph" => Figure::AGraph,
            "gec-growth" => Figure::GecGrowth,
            "residue" => Figure::Residue,
            _ => return Err(Error::Config(format!("unknown figure {s}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotPoint {
    pub x: Int,
    pub y: Int,
    pub series: String,
}

impl PlotPoint {
    fn new(x: impl Into<Int>, y: impl Into<Int>, series: impl Into<String>) -> Self {
        PlotPoint { x: x.into(), y: y.into(), series: series.into() }
    }
}

pub fn write_points<W: Write>(points: &[PlotPoint], mut out: W) -> Result<()> {
    writeln!(out, "x,y,series")?;
    for p in points {
        writeln!(out, "{},{},{}", p.x, p.y, p.series)?;
    }
    Ok(())
}

/// Per-deck bounded coverage for each Δ plus a `total` series.
pub fn coverage_growth(deltas: &[Int], parity: Parity, dials: &[DialPair], decks: &[DeckId]) -> Result<Vec<PlotPoint>> {
    let registry = Registry::standard();
    let mut out = Vec::new();
    for d in deltas {
        let report = coverage_report(d, parity, dials, decks, None, &registry)?;
        for r in report.rows.iter().filter(|r| r.id_end.is_some()) {
            out.push(PlotPoint::new(d.clone(), r.coverage, r.deck.to_string()));
        }
        out.push(PlotPoint::new(d.clone(), report.total_coverage(), "total"));
    }
    Ok(out)
}

/// p span of every od4/od5 zone for one Δ: two points per zone, y is the steady value.
pub fn rsa_unsafe_zone(delta: &Int, parity: Parity, dials: &[DialPair]) -> Result<Vec<PlotPoint>> {
    let report = coverage_report(delta, parity, dials, &[DeckId::Od4, DeckId::Od5], None, &Registry::standard())?;
    let p_of = |id: u64| delta_p(parity, id);
    let mut out = Vec::new();
    for r in &report.rows {
        let end = r.id_end.unwrap_or(report.horizon);
        out.push(PlotPoint::new(p_of(r.id_start), r.steady_value.clone(), r.deck.to_string()));
        out.push(PlotPoint::new(p_of(end), r.steady_value.clone(), r.deck.to_string()));
    }
    Ok(out)
}

fn delta_p(parity: Parity, id: u64) -> Int {
    int(parity.first()) + int(2) * (int(id as i64) - 1)
}

/// (n, od6) pairs from the head of the Δ-series until od6 holds for three rows.
pub fn a_graph(delta: &Int, parity: Parity, dials: DialPair) -> Result<Vec<PlotPoint>> {
    let spec = SeriesSpec::delta(delta.clone(), parity, dials);
    let limit = Limit::SteadyStop { deck: DeckId::Od6, k: 3, max_rows: default_horizon(delta) };
    let label = format!("delta={delta}");
    Ok(generate(&spec, limit)?
        .into_iter()
        .filter_map(|r| r.od(DeckId::Od6).cloned().map(|y| PlotPoint::new(r.n.clone(), y, label.clone())))
        .collect())
}

/// gec, nce and residue against Δ.
pub fn gec_points(start: &Int, end: &Int, parity: Parity, mode: Compare) -> Result<Vec<PlotPoint>> {
    let mut out = Vec::new();
    for s in gec_growth(start, end, parity, mode)? {
        out.push(PlotPoint::new(s.delta.clone(), s.gec, "gec"));
        out.push(PlotPoint::new(s.delta.clone(), s.nce, "nce"));
        out.push(PlotPoint::new(s.delta, s.residue, "residue"));
    }
    Ok(out)
}

/// Residue only, labelled by residue class of Δ mod 4.
pub fn residue_points(start: &Int, end: &Int, parity: Parity, mode: Compare) -> Result<Vec<PlotPoint>> {
    Ok(gec_growth(start, end, parity, mode)?
        .into_iter()
        .map(|s| {
            let class = if s.delta.mod_floor(&int(4)) == int(0) { "4k" } else { "4k+2" };
            PlotPoint::new(s.delta, s.residue, class)
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct PlotParams {
    pub deltas: Vec<Int>,
    pub parity: Parity,
    pub dials: Vec<DialPair>,
    pub decks: Vec<DeckId>,
    pub compare: Compare,
}

impl PlotParams {
    /// Defaults matching the paper's figure captions.
    pub fn for_figure(fig: Figure) -> Self {
        let (deltas, dials): (Vec<i64>, Vec<DialPair>) = match fig {
            Figure::CoverageGrowth => (vec![160, 480], vec![DialPair::new(-2, 2, 12, 12)]),
            Figure::RsaUnsafeZone => (vec![1002], vec![DialPair::new(-2, 2, 12, 12)]),
            Figure::AGraph => (vec![20], vec![DialPair::new(0, -1, 2, 2)]),
            Figure::GecGrowth | Figure::Residue => ((20..=100).step_by(4).collect(), Vec::new()),
        };
        PlotParams {
            deltas: deltas.into_iter().map(int).collect(),
            parity: Parity::Odd,
            dials,
            decks: vec![DeckId::Od1, DeckId::Od2, DeckId::Od4, DeckId::Od5],
            compare: Compare::Prefix,
        }
    }
}

pub fn plot_data(fig: Figure, params: &PlotParams) -> Result<Vec<PlotPoint>> {
    let first = params.deltas.first().ok_or_else(|| Error::Config("no delta given".into()))?;
    let last = params.deltas.last().unwrap_or(first);
    let primary = || params.dials.first().copied().ok_or_else(|| Error::Config("no dials given".into()));
    match fig {
        Figure::CoverageGrowth => coverage_growth(&params.deltas, params.parity, &params.dials, &params.decks),
        Figure::RsaUnsafeZone => {
            let mut out = Vec::new();
            for d in &params.deltas {
                out.extend(rsa_unsafe_zone(d, params.parity, &params.dials)?);
            }
            Ok(out)
        }
        Figure::AGraph => {
            let dials = primary()?;
            let mut out = Vec::new();
            for d in &params.deltas {
                out.extend(a_graph(d, params.parity, dials)?);
            }
            Ok(out)
        }
        Figure::GecGrowth => gec_points(first, last, params.parity, params.compare),
        Figure::Residue => residue_points(first, last, params.parity, params.compare),
    }
}
