//! Regenerates the reference tables listed in `data/catalog.csv`.

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::equilibrium::equilibrium_table;
use crate::error::{Error, Result};
use crate::series::{generate, DeckId, Int, Limit, Parity, SeriesKind, SeriesRow, SeriesSpec};
use crate::steady::{DialFamily, Registry};
use crate::zones::{coverage_report, default_horizon, detect_zones, ZoneCriterion};

pub const CATALOG: &str = include_str!("../data/catalog.csv");

/// Tables expected to regenerate byte for byte.
pub fn required_tables() -> Vec<u32> {
    (1..=16).chain(25..=28).chain(30..=47).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Delta,
    Sum,
    Equilibrium,
    Coverage,
    InterDelta,
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "delta" => TableKind::Delta,
            "sum" => TableKind::Sum,
            "equilibrium" => TableKind::Equilibrium,
            "coverage" => TableKind::Coverage,
            "interdelta" => TableKind::InterDelta,
            _ => return Err(Error::Parse(format!("unknown table kind {s}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub table: u32,
    pub kind: TableKind,
    pub value: Int,
    pub parity: Parity,
    pub dials: DialFamily,
    pub layout: String,
    pub rows: Vec<RangeInclusive<u64>>,
}

impl CatalogEntry {
    pub fn file_name(&self) -> String {
        format!("table_{:02}.csv", self.table)
    }

    pub fn ids(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flat_map(|r| r.clone())
    }
}

fn parse_rows(s: &str) -> Result<Vec<RangeInclusive<u64>>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|part| {
            let num = |x: &str| x.parse::<u64>().map_err(|_| Error::Parse(format!("bad row span {part}")));
            match part.split_once('-') {
                Some((a, b)) => Ok(num(a)?..=num(b)?),
                None => {
                    let a = num(part)?;
                    Ok(a..=a)
                }
            }
        })
        .collect()
}

pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut rd = csv::Reader::from_reader(CATALOG.as_bytes());
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).ok_or_else(|| Error::Parse("short catalog record".into()));
        out.push(CatalogEntry {
            table: field(0)?.parse().map_err(|_| Error::Parse("table number".into()))?,
            kind: field(1)?.parse()?,
            value: field(2)?.parse().map_err(|_| Error::Parse("table value".into()))?,
            parity: field(3)?.parse()?,
            dials: field(4)?.parse()?,
            layout: field(5)?.to_string(),
            rows: parse_rows(field(6)?)?,
        });
    }
    Ok(out)
}

fn layout_columns(layout: &str) -> Result<&'static [&'static str]> {
    Ok(match layout {
        "basic" => &["id", "p", "q", "n", "isqrt_n", "d1", "d2", "d1_sq", "d2_sq", "od1", "od2", "od3", "od4", "od6"],
        "zones" => &["id", "p", "q", "n", "od1", "df1", "od2", "df2", "od3", "df3", "od4", "df4", "zone"],
        "od5" => &["id", "p", "q", "n", "od1", "df1", "od2", "df2", "od3", "df3", "od4", "df4", "od5"],
        "od5_zone" => &["id", "p", "q", "n", "od1", "df1", "od2", "df2", "od3", "df3", "od4", "df4", "od5", "zone"],
        "od5_df5_zone" => &["id", "p", "q", "n", "od1", "od2", "od3", "od4", "od5", "df5", "zone"],
        "d1" => &["id", "p", "q", "n", "d1", "od1", "df1", "od2", "df2", "od3", "df3", "od4", "df4"],
        _ => return Err(Error::Config(format!("unknown layout {layout}"))),
    })
}

fn cell(row: &SeriesRow, col: &str, zone: &Option<u32>) -> String {
    let opt = |x: Option<&Int>| x.map(Int::to_string).unwrap_or_default();
    match col {
        "id" => row.id.to_string(),
        "p" => row.p.to_string(),
        "q" => row.q.to_string(),
        "n" => row.n.to_string(),
        "isqrt_n" => row.isqrt_n.to_string(),
        "d1" => row.d1.to_string(),
        "d2" => row.d2.to_string(),
        "d1_sq" => (&row.d1 * &row.d1).to_string(),
        "d2_sq" => (&row.d2 * &row.d2).to_string(),
        "zone" => zone.map(|z| z.to_string()).unwrap_or_else(|| "...".into()),
        c if c.starts_with("od") => opt(row.od(c.parse().expect("deck column"))),
        c if c.starts_with("df") => {
            let deck: DeckId = format!("od{}", &c[2..]).parse().expect("deck column");
            opt(row.df(deck))
        }
        _ => unreachable!("column {col}"),
    }
}

fn render_series(e: &CatalogEntry) -> Result<String> {
    let cols = layout_columns(&e.layout)?;
    let mut spec = match e.kind {
        TableKind::Delta => SeriesSpec::delta(e.value.clone(), e.parity, e.dials.primary),
        _ => SeriesSpec::sum(e.value.clone(), e.parity, e.dials.primary),
    };
    spec.second = e.dials.second;
    debug_assert!(matches!(spec.kind, SeriesKind::Delta | SeriesKind::Sum));
    let last = e.ids().max().unwrap_or(0);
    let span = if cols.contains(&"zone") { last.max(default_horizon(&e.value)) } else { last };
    let rows = generate(&spec, Limit::Rows(span))?;
    let mut zone_of = vec![None; rows.len()];
    if cols.contains(&"zone") {
        let deck = if cols.contains(&"od5") { DeckId::Od5 } else { DeckId::Od4 };
        for z in detect_zones(&rows, &ZoneCriterion::for_deck(deck))?.zones {
            let end = z.id_end.unwrap_or(span);
            for id in z.id_start..=end {
                zone_of[(id - 1) as usize] = Some(z.zone_index);
            }
        }
    }
    let mut out = cols.join(",");
    out.push('\n');
    for id in e.ids() {
        let i = (id - 1) as usize;
        let row = rows.get(i).ok_or_else(|| Error::Domain(format!("table {} has no row {id}", e.table)))?;
        let line: Vec<String> = cols.iter().map(|c| cell(row, c, &zone_of[i])).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    Ok(out)
}

fn render_equilibrium(e: &CatalogEntry) -> Result<String> {
    let len = e.ids().count();
    let rows = equilibrium_table(&e.value, e.parity, Some(len))?;
    let mut buf = Vec::new();
    crate::equilibrium::write_equilibrium_csv(&rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("ascii"))
}

fn render_coverage(e: &CatalogEntry) -> Result<String> {
    use DeckId::*;
    let decks: &[DeckId] = if e.dials.second.is_some() {
        &[Od7, Od8, Od9, Od10, Od11]
    } else {
        &[Od1, Od2, Od4, Od5]
    };
    let dials: Vec<_> = std::iter::once(e.dials.primary).chain(e.dials.second).collect();
    let report = coverage_report(&e.value, e.parity, &dials, decks, None, &Registry::standard())?;
    let mut rows = report.rows;
    rows.sort_by_key(|r| (r.id_start, r.deck));
    let mut out = String::from("deck,id_start,id_end,coverage,steady_value\n");
    for r in rows {
        let (end, cov) = match r.id_end {
            Some(end) => (end.to_string(), r.coverage.to_string()),
            None => ("inf".to_string(), "inf".to_string()),
        };
        out.push_str(&format!("{},{},{},{},{}\n", r.deck, r.id_start, end, cov, r.steady_value));
    }
    Ok(out)
}

/// CSV text for a catalog entry; `None` for tables that are not generated.
pub fn render(e: &CatalogEntry) -> Result<Option<String>> {
    match e.kind {
        TableKind::Delta | TableKind::Sum => render_series(e).map(Some),
        TableKind::Equilibrium => render_equilibrium(e).map(Some),
        TableKind::Coverage => render_coverage(e).map(Some),
        TableKind::InterDelta => Ok(None),
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("csv.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Write `table_NN.csv` for every generated table (or only `only`) into `out_dir`.
pub fn golden_tables(out_dir: &Path, only: Option<&[u32]>) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let entries: Vec<CatalogEntry> = catalog()?
        .into_iter()
        .filter(|e| only.map_or(true, |o| o.contains(&e.table)))
        .collect();
    let written: Vec<Option<PathBuf>> = entries
        .par_iter()
        .map(|e| -> Result<Option<PathBuf>> {
            let Some(text) = render(e)? else { return Ok(None) };
            let path = out_dir.join(e.file_name());
            write_atomic(&path, &text)?;
            Ok(Some(path))
        })
        .collect::<Result<_>>()?;
    Ok(written.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_parses() {
        let c = catalog().unwrap();
        assert_eq!(c.len(), 47);
        assert_eq!(c[0].ids().collect::<Vec<_>>(), (1..=8).collect::<Vec<_>>());
        assert_eq!(c[24].rows, vec![1..=1, 136..=137]);
        assert!(c[20].dials.second.is_some());
    }

    #[test]
    fn table_one_row_seven() {
        let c = catalog().unwrap();
        let text = render(&c[0]).unwrap().unwrap();
        assert_eq!(text.lines().nth(7).unwrap(), "7,13,25,325,18,18,20,324,400,-1,75,76,74,35");
    }

    #[test]
    fn table_fifteen_od5() {
        let c = catalog().unwrap();
        let text = render(&c[14]).unwrap().unwrap();
        let row56 = text.lines().find(|l| l.starts_with("56,")).unwrap();
        assert!(row56.ends_with(",2128"));
    }

    #[test]
    fn table_thirty_four_constants() {
        let c = catalog().unwrap();
        let text = render(&c[33]).unwrap().unwrap();
        let constants: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
        assert_eq!(constants, ["0", "-2", "-10", "-26", "-50", "-82", "-122", "-170", "-226", "-290"]);
    }
}
