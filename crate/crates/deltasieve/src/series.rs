//! Delta and sum series over dial pairs.
//!
//! A row is fully determined by `p` and the spec; only the `df` columns need
//! the previous row. Every value is an exact [`BigInt`].

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// The four parity-selected offsets `{a1, a2, v1, v2}`.
///
/// `a1` applies when `isqrt(n)` is even and `a2` when it is odd; `v1` applies
/// when `d1` is even and `v2` when `d1` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DialPair {
    pub a1: i64,
    pub a2: i64,
    pub v1: i64,
    pub v2: i64,
}

impl DialPair {
    /// `{0,-1,2,2}`
    pub const ZERO_NEG: DialPair = DialPair::new(0, -1, 2, 2);
    /// `{-1,0,2,2}`
    pub const NEG_ZERO: DialPair = DialPair::new(-1, 0, 2, 2);

    pub const fn new(a1: i64, a2: i64, v1: i64, v2: i64) -> Self {
        DialPair { a1, a2, v1, v2 }
    }

    /// Same offsets with `v1 = v2 = v`.
    pub const fn with_v(self, v: i64) -> Self {
        DialPair::new(self.a1, self.a2, v, v)
    }

    /// `Some(v)` when `v1 == v2`.
    pub fn symmetric_v(&self) -> Option<i64> {
        (self.v1 == self.v2).then_some(self.v1)
    }
}

impl fmt::Display for DialPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{},{}}}", self.a1, self.a2, self.v1, self.v2)
    }
}

impl FromStr for DialPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let parts: Vec<i64> = body
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("dial pair {s:?}: {e}")))?;
        match parts[..] {
            [a1, a2, v1, v2] => Ok(DialPair::new(a1, a2, v1, v2)),
            _ => Err(Error::Parse(format!(
                "dial pair {s:?} needs exactly four integers"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(x: &Int) -> Parity {
        if x.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// First positive integer of this parity.
    pub fn first(self) -> i64 {
        match self {
            Parity::Odd => 1,
            Parity::Even => 2,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(Error::Parse(format!("parity {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `q = p + delta`
    Delta,
    /// `q = sum - p`
    Sum,
}

/// Observation deck identifier, `od1` through `od11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeckId {
    Od1 = 1,
    Od2,
    Od3,
    Od4,
    Od5,
    Od6,
    Od7,
    Od8,
    Od9,
    Od10,
    Od11,
}

impl DeckId {
    pub const ALL: [DeckId; 11] = [
        DeckId::Od1,
        DeckId::Od2,
        DeckId::Od3,
        DeckId::Od4,
        DeckId::Od5,
        DeckId::Od6,
        DeckId::Od7,
        DeckId::Od8,
        DeckId::Od9,
        DeckId::Od10,
        DeckId::Od11,
    ];

    pub fn number(self) -> usize {
        self as usize
    }

    pub fn from_number(k: usize) -> Option<DeckId> {
        DeckId::ALL.get(k.checked_sub(1)?).copied()
    }

    fn slot(self) -> usize {
        self as usize - 1
    }

    /// Decks 7 to 11 read the second dial pair.
    pub fn needs_second_pair(self) -> bool {
        self >= DeckId::Od7
    }
}

impl fmt::Display for DeckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "od{}", self.number())
    }
}

impl FromStr for DeckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let digits = t.strip_prefix("od").unwrap_or(&t);
        digits
            .parse::<usize>()
            .ok()
            .and_then(DeckId::from_number)
            .ok_or_else(|| Error::Parse(format!("deck {s:?}")))
    }
}

/// Floor square root of a nonnegative integer.
pub fn integer_sqrt_floor(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::Domain(format!("square root of negative {n}")));
    }
    Ok(n.sqrt())
}

/// Exact root when `x` is a nonnegative perfect square.
pub fn exact_sqrt(x: &Int) -> Option<Int> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// `d1`, `d2` and the `v` actually applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub isqrt: Int,
    pub d1: Int,
    pub d2: Int,
    pub v: i64,
}

pub fn resolve_with_root(root: &Int, dials: DialPair) -> Resolved {
    let a = if root.is_even() { dials.a1 } else { dials.a2 };
    let d1 = root + a;
    let v = if d1.is_even() { dials.v1 } else { dials.v2 };
    let d2 = &d1 + v;
    Resolved {
        isqrt: root.clone(),
        d1,
        d2,
        v,
    }
}

pub fn resolve_dials(n: &Int, dials: DialPair) -> Result<Resolved> {
    let root = integer_sqrt_floor(n)?;
    Ok(resolve_with_root(&root, dials))
}

/// Row id of `p` in a series of the given parity (ids start at 1).
pub fn row_id_of(p: &Int, parity: Parity) -> Option<u64> {
    let off: Int = p - parity.first();
    if off.is_negative() || off.is_odd() {
        return None;
    }
    let k: Int = off / 2;
    k.to_u64().map(|k| k + 1)
}

/// What to generate: a delta or sum series from `p_start` upward in steps of 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub value: Int,
    pub parity: Parity,
    pub p_start: Int,
    pub dials: DialPair,
    pub second: Option<DialPair>,
}

impl SeriesSpec {
    pub fn delta(delta: impl Into<Int>, parity: Parity, dials: DialPair) -> Self {
        SeriesSpec {
            kind: SeriesKind::Delta,
            value: delta.into(),
            parity,
            p_start: int(parity.first()),
            dials,
            second: None,
        }
    }

    pub fn sum(sum: impl Into<Int>, parity: Parity, dials: DialPair) -> Self {
        SeriesSpec {
            kind: SeriesKind::Sum,
            ..SeriesSpec::delta(sum, parity, dials)
        }
    }

    pub fn with_second(mut self, second: DialPair) -> Self {
        self.second = Some(second);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.value < int(1) {
            return Err(Error::Domain(format!("series value {} < 1", self.value)));
        }
        if self.p_start < int(1) || Parity::of(&self.p_start) != self.parity {
            return Err(Error::Domain(format!(
                "p_start {} is not a positive {} integer",
                self.p_start, self.parity
            )));
        }
        Ok(())
    }

    /// `p` of row `id` (1-based).
    pub fn p_at(&self, id: u64) -> Int {
        &self.p_start + Int::from(2u64) * Int::from(id - 1)
    }

    /// Row `id`, with `df` taken against row `id - 1`.
    pub fn row_at(&self, id: u64) -> Result<SeriesRow> {
        let prev = if id > 1 {
            Some(compute_row(self, id - 1, &self.p_at(id - 1), None)?)
        } else {
            None
        };
        compute_row(self, id, &self.p_at(id), prev.as_ref())
    }

    /// Lazily generated rows from id 1; a sum series stops at `p = sum`.
    pub fn rows(&self) -> Rows<'_> {
        Rows {
            spec: self,
            next_id: 1,
            prev: None,
        }
    }
}

/// One row of a series. `od[k-1]` holds deck `k`; `None` marks a deck that is
/// not evaluated (no second pair) or undefined (`od6` with a non-square radicand).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRow {
    pub id: u64,
    pub p: Int,
    pub q: Int,
    pub n: Int,
    pub isqrt_n: Int,
    pub d1: Int,
    pub d2: Int,
    pub d3: Option<Int>,
    pub d4: Option<Int>,
    pub v: i64,
    pub od: [Option<Int>; 11],
    pub df: [Option<Int>; 11],
}

impl SeriesRow {
    pub fn od(&self, deck: DeckId) -> Option<&Int> {
        self.od[deck.slot()].as_ref()
    }

    pub fn df(&self, deck: DeckId) -> Option<&Int> {
        self.df[deck.slot()].as_ref()
    }
}

/// Deck values for `n` under one or two dial pairs.
pub fn decks_for(n: &Int, dials: DialPair, second: Option<DialPair>) -> Result<(Resolved, Option<Resolved>, [Option<Int>; 11])> {
    let root = integer_sqrt_floor(n)?;
    let r = resolve_with_root(&root, dials);
    let od1 = &r.d1 * &r.d1 - n;
    let od2 = &r.d2 * &r.d2 - n;
    let od3 = &od2 - &od1;
    let od4 = &od2 + &od1;
    let od5 = &od1 + &od2 + &od3 + &od4;
    let radicand = n * Int::from(r.v * r.v) + &od1 * &od2;
    let od6 = exact_sqrt(&radicand);
    let mut od: [Option<Int>; 11] = Default::default();
    let r2 = second.map(|s| resolve_with_root(&root, s));
    if let Some(r2) = &r2 {
        let od7 = &r2.d1 * &r2.d1 - n;
        let od8 = &r2.d2 * &r2.d2 - n;
        od[8] = Some(&od2 + &od8);
        od[9] = Some(&od4 + &od8);
        od[10] = Some(&od2 + Int::from(2) * &od8 + &od4);
        od[6] = Some(od7);
        od[7] = Some(od8);
    }
    od[0] = Some(od1);
    od[1] = Some(od2);
    od[2] = Some(od3);
    od[3] = Some(od4);
    od[4] = Some(od5);
    od[5] = od6;
    Ok((r, r2, od))
}

pub fn compute_row(spec: &SeriesSpec, id: u64, p: &Int, prev: Option<&SeriesRow>) -> Result<SeriesRow> {
    if Parity::of(p) != spec.parity {
        return Err(Error::Domain(format!("p={p} is not {}", spec.parity)));
    }
    let q = match spec.kind {
        SeriesKind::Delta => p + &spec.value,
        SeriesKind::Sum => {
            if p > &spec.value {
                return Err(Error::Domain(format!(
                    "p={p} exceeds sum {}",
                    spec.value
                )));
            }
            &spec.value - p
        }
    };
    let n = p * &q;
    let (r, r2, od) = decks_for(&n, spec.dials, spec.second)?;
    let mut df: [Option<Int>; 11] = Default::default();
    for k in 0..11 {
        df[k] = match (&od[k], prev) {
            (Some(cur), Some(prev)) => prev.od[k].as_ref().map(|before| before - cur),
            (Some(_), None) => Some(Int::zero()),
            (None, _) => None,
        };
    }
    Ok(SeriesRow {
        id,
        p: p.clone(),
        q,
        n,
        isqrt_n: r.isqrt,
        d1: r.d1,
        d2: r.d2,
        d3: r2.as_ref().map(|x| x.d1.clone()),
        d4: r2.map(|x| x.d2),
        v: r.v,
        od,
        df,
    })
}

pub struct Rows<'a> {
    spec: &'a SeriesSpec,
    next_id: u64,
    prev: Option<SeriesRow>,
}

impl Iterator for Rows<'_> {
    type Item = SeriesRow;

    fn next(&mut self) -> Option<SeriesRow> {
        let p = self.spec.p_at(self.next_id);
        if self.spec.kind == SeriesKind::Sum && p > self.spec.value {
            return None;
        }
        let row = compute_row(self.spec, self.next_id, &p, self.prev.as_ref()).ok()?;
        self.next_id += 1;
        self.prev = Some(row.clone());
        Some(row)
    }
}

/// How far [`generate`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    Rows(u64),
    /// Stop once `deck` has held the same value for `k` consecutive rows.
    SteadyStop { deck: DeckId, k: usize, max_rows: u64 },
}

impl Limit {
    pub fn steady(deck: DeckId, max_rows: u64) -> Limit {
        Limit::SteadyStop {
            deck,
            k: 3,
            max_rows,
        }
    }
}

pub fn generate(spec: &SeriesSpec, limit: Limit) -> Result<Vec<SeriesRow>> {
    spec.validate()?;
    match limit {
        Limit::Rows(0) => Err(Error::Domain("row limit must be at least 1".into())),
        Limit::Rows(count) => Ok(spec.rows().take(count as usize).collect()),
        Limit::SteadyStop { deck, k, max_rows } => {
            if deck.needs_second_pair() && spec.second.is_none() {
                return Err(Error::Config(format!("{deck} needs a second dial pair")));
            }
            let mut out: Vec<SeriesRow> = Vec::new();
            let mut run = 0usize;
            for row in spec.rows().take(max_rows as usize) {
                let same = match (out.last().and_then(|r| r.od(deck)), row.od(deck)) {
                    (Some(a), Some(b)) => a == b,
                    _ => false,
                };
                run = if same { run + 1 } else { 1 };
                out.push(row);
                if run >= k.max(1) {
                    break;
                }
            }
            Ok(out)
        }
    }
}

pub const CSV_HEADER: [&str; 29] = [
    "id", "p", "q", "n", "isqrt_n", "d1", "d2", "od1", "od2", "od3", "od4", "od5", "od6", "od7",
    "od8", "od9", "od10", "od11", "df1", "df2", "df3", "df4", "df5", "df6", "df7", "df8", "df9",
    "df10", "df11",
];

fn cell(x: &Option<Int>) -> String {
    x.as_ref().map(Int::to_string).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[SeriesRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let mut rec = vec![
            r.id.to_string(),
            r.p.to_string(),
            r.q.to_string(),
            r.n.to_string(),
            r.isqrt_n.to_string(),
            r.d1.to_string(),
            r.d2.to_string(),
        ];
        rec.extend(r.od.iter().map(cell));
        rec.extend(r.df.iter().map(cell));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(rows: &[SeriesRow], deck: DeckId) -> Vec<i64> {
        rows.iter()
            .map(|r| i64::try_from(r.od(deck).unwrap().clone()).unwrap())
            .collect()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(integer_sqrt_floor(&int(16)).unwrap(), int(4));
        assert_eq!(integer_sqrt_floor(&int(17)).unwrap(), int(4));
        assert_eq!(integer_sqrt_floor(&int(219781)).unwrap(), int(468));
        assert!(integer_sqrt_floor(&int(-1)).is_err());
        let big: Int = "123456789012345678901234567890".parse().unwrap();
        let r = integer_sqrt_floor(&(&big * &big + 5)).unwrap();
        assert_eq!(r, big);
    }

    #[test]
    fn dial_resolution() {
        let d = DialPair::new(-1, 1, 2, 4);
        let r = resolve_dials(&int(137), d).unwrap();
        assert_eq!((r.d1, r.d2), (int(12), int(14)));
        let r = resolve_dials(&int(147), d).unwrap();
        assert_eq!((r.d1, r.d2), (int(11), int(15)));
        let r = resolve_dials(&int(13), DialPair::ZERO_NEG).unwrap();
        assert_eq!((r.d1, r.d2), (int(2), int(4)));
    }

    #[test]
    fn negative_d1_uses_odd_offset() {
        let r = resolve_dials(&int(0), DialPair::NEG_ZERO).unwrap();
        assert_eq!(r.d1, int(-1));
        assert_eq!(r.v, 2);
        assert_eq!(r.d2, int(1));
    }

    #[test]
    fn dial_pair_text_round_trip() {
        let d: DialPair = "0,-1,2,2".parse().unwrap();
        assert_eq!(d, DialPair::ZERO_NEG);
        assert_eq!(d.to_string(), "{0,-1,2,2}");
        assert_eq!(d.to_string().parse::<DialPair>().unwrap(), d);
        assert!("1,2,3".parse::<DialPair>().is_err());
    }

    #[test]
    fn first_row_of_delta_12() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let r = spec.row_at(1).unwrap();
        let got: Vec<i64> = [DeckId::Od1, DeckId::Od2, DeckId::Od3, DeckId::Od4, DeckId::Od6]
            .iter()
            .map(|d| i64::try_from(r.od(*d).unwrap().clone()).unwrap())
            .collect();
        assert_eq!(got, vec![-9, 3, 12, -6, 5]);
    }

    #[test]
    fn delta_22_even_row_25() {
        let spec = SeriesSpec::delta(22, Parity::Even, DialPair::ZERO_NEG);
        let r = spec.row_at(25).unwrap();
        assert_eq!(r.p, int(50));
        assert_eq!(r.od(DeckId::Od4), Some(&int(244)));
        assert_eq!(r.od(DeckId::Od6), Some(&int(120)));
    }

    #[test]
    fn sum_22_middle_row() {
        let spec = SeriesSpec::sum(22, Parity::Odd, DialPair::NEG_ZERO);
        let r = spec.row_at(6).unwrap();
        assert_eq!(r.p, int(11));
        assert_eq!(r.n, int(121));
        assert_eq!(r.od(DeckId::Od1), Some(&int(0)));
        assert_eq!(r.od(DeckId::Od2), Some(&int(48)));
        assert_eq!(r.od(DeckId::Od6), Some(&int(22)));
    }

    #[test]
    fn od4_column_delta_12() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let rows = generate(&spec, Limit::Rows(8)).unwrap();
        assert_eq!(col(&rows, DeckId::Od4), vec![-6, 10, -6, -22, -38, -54, 74, 74]);
    }

    #[test]
    fn od5_delta_46_is_constant_from_56() {
        let spec = SeriesSpec::delta(46, Parity::Odd, DialPair::new(-1, -2, 4, 4));
        let rows = generate(&spec, Limit::Rows(60)).unwrap();
        assert_eq!(col(&rows[55..60], DeckId::Od5), vec![2128; 5]);
        assert_ne!(rows[54].od(DeckId::Od5), Some(&int(2128)));
    }

    #[test]
    fn sum_series_od6_and_truncation() {
        let spec = SeriesSpec::sum(20, Parity::Odd, DialPair::NEG_ZERO);
        let rows = generate(&spec, Limit::Rows(50)).unwrap();
        assert_eq!(rows.len(), 10);
        assert_eq!(col(&rows, DeckId::Od6), vec![4, 12, 12, 8, 0, 0, 8, 12, 12, 4]);
    }

    #[test]
    fn sum_series_keeps_q_zero_row() {
        let spec = SeriesSpec::sum(20, Parity::Even, DialPair::NEG_ZERO);
        let rows = generate(&spec, Limit::Rows(20)).unwrap();
        let last = rows.last().unwrap();
        assert_eq!((last.id, last.p.clone(), last.q.clone()), (10, int(20), int(0)));
        assert_eq!(last.d1, int(-1));
    }

    #[test]
    fn steady_stop_halts_after_k_equal_values() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let rows = generate(&spec, Limit::steady(DeckId::Od4, 1000)).unwrap();
        assert_eq!(rows.len(), 9);
        let rows = generate(
            &spec,
            Limit::SteadyStop { deck: DeckId::Od4, k: 5, max_rows: 1000 },
        )
        .unwrap();
        assert_eq!(rows.len(), 11);
    }

    #[test]
    fn df_sign_and_first_row() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let rows = generate(&spec, Limit::Rows(3)).unwrap();
        assert_eq!(rows[0].df(DeckId::Od1), Some(&int(0)));
        assert_eq!(rows[2].od(DeckId::Od1), Some(&int(-21)));
        assert_eq!(rows[2].df(DeckId::Od1), Some(&int(12)));
    }

    #[test]
    fn second_pair_decks_absent_without_second_pair() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let r = spec.row_at(3).unwrap();
        assert!(r.od(DeckId::Od7).is_none());
        assert!(generate(&spec, Limit::steady(DeckId::Od9, 10)).is_err());
    }

    #[test]
    fn spec_validation() {
        let mut spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        spec.p_start = int(2);
        assert!(spec.validate().is_err());
        assert!(generate(&SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG), Limit::Rows(0)).is_err());
    }

    #[test]
    fn csv_header_and_blank_cells() {
        let spec = SeriesSpec::delta(12, Parity::Odd, DialPair::ZERO_NEG);
        let rows = generate(&spec, Limit::Rows(1)).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("id,p,q,n,isqrt_n,d1,d2,od1,"));
        assert_eq!(lines.next().unwrap(), "1,1,13,13,3,2,4,-9,3,12,-6,0,5,,,,,,0,0,0,0,0,0,,,,,");
    }
}
