//! Factorization procedures built on deck values.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::series::{
    decks_for, exact_sqrt, generate, int, resolve_dials, row_id_of, DeckId, DialPair, Int, Limit, Parity, SeriesRow, SeriesSpec,
};
use crate::steady::{invert_ssv, DialFamily, Registry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Quadratic,
    Zone0,
    Scan,
    OdConnect,
    Range,
    Reflection,
    Equilibrium,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Quadratic => "quadratic",
            Method::Zone0 => "zone0",
            Method::Scan => "scan",
            Method::OdConnect => "od_connect",
            Method::Range => "range",
            Method::Reflection => "reflection",
            Method::Equilibrium => "equilibrium",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorResult {
    pub n: Int,
    pub p: Int,
    pub q: Int,
    pub delta: Int,
    pub method: Method,
    pub steps: u64,
}

impl FactorResult {
    pub const CSV_HEADER: &'static str = "n,p,q,delta,method,steps";

    pub fn csv_line(&self) -> String {
        format!("{},{},{},{},{},{}", self.n, self.p, self.q, self.delta, self.method, self.steps)
    }

    /// `n=..,p=..,q=..,delta=..,method=..`
    pub fn key_values(&self) -> String {
        format!("n={},p={},q={},delta={},method={}", self.n, self.p, self.q, self.delta, self.method)
    }

    fn with(mut self, method: Method, steps: u64) -> Self {
        self.method = method;
        self.steps = steps;
        self
    }
}

/// Solve `p^2 + p*delta - n = 0` over the integers.
pub fn quadratic_factor(n: &Int, delta: &Int) -> Option<FactorResult> {
    if !n.is_positive() || delta.is_negative() {
        return None;
    }
    let disc = delta * delta + n * 4;
    let s = exact_sqrt(&disc)?;
    if (&s - delta).is_odd() {
        return None;
    }
    let p: Int = (&s - delta) / 2;
    if !p.is_positive() {
        return None;
    }
    let q = &p + delta;
    assert_eq!(&p * &q, *n);
    Some(FactorResult {
        n: n.clone(),
        p,
        q,
        delta: delta.clone(),
        method: Method::Quadratic,
        steps: 1,
    })
}

/// The fixed probes tried by [`factor_zone0`].
pub const ZONE0_PROBES: [(DialPair, DeckId); 4] = [
    (DialPair::ZERO_NEG, DeckId::Od4),
    (DialPair::ZERO_NEG, DeckId::Od2),
    (DialPair::NEG_ZERO, DeckId::Od4),
    (DialPair::NEG_ZERO, DeckId::Od2),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone0Probe {
    pub dials: DialPair,
    pub deck: DeckId,
    pub value: Int,
    pub candidates: Vec<Int>,
}

/// Deck values of `n` under each probe and the deltas they invert to.
pub fn zone0_probe(n: &Int, registry: &Registry) -> Result<Vec<Zone0Probe>> {
    let mut out = Vec::with_capacity(ZONE0_PROBES.len());
    for (dials, deck) in ZONE0_PROBES {
        let (_, _, od) = decks_for(n, dials, None)?;
        let value = od[deck.number() - 1].clone().expect("base decks are always evaluated");
        let candidates = invert_ssv(deck, &value, DialFamily::single(dials), registry);
        out.push(Zone0Probe { dials, deck, value, candidates });
    }
    Ok(out)
}

/// Recover a factor pair when `n` sits in the terminal zone of its delta.
///
/// Always spends exactly four probes regardless of `n` or delta.
pub fn factor_zone0(n: &Int, registry: &Registry) -> Option<FactorResult> {
    if n < &int(3) {
        return None;
    }
    let probes = zone0_probe(n, registry).ok()?;
    let steps = probes.len() as u64;
    probes
        .iter()
        .flat_map(|pr| pr.candidates.iter())
        .find_map(|d| quadratic_factor(n, d))
        .map(|r| r.with(Method::Zone0, steps))
}

/// One step of a scan schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanStep {
    pub dials: DialPair,
    pub deck: DeckId,
}

/// `od4` then `od2` for each `v` under both base dial pairs.
pub fn default_schedule(vs: &[i64]) -> Vec<ScanStep> {
    let mut out = Vec::new();
    for &v in vs {
        for base in [DialPair::ZERO_NEG, DialPair::NEG_ZERO] {
            for deck in [DeckId::Od4, DeckId::Od2] {
                out.push(ScanStep { dials: base.with_v(v), deck });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub result: Option<FactorResult>,
    pub steps: u64,
}

/// Walk the schedule in order, at most `budget` steps. Steps run in parallel
/// but the earliest hit in schedule order wins.
pub fn factor_scan(n: &Int, schedule: &[ScanStep], budget: u64, registry: &Registry) -> Result<ScanOutcome> {
    if budget == 0 {
        return Err(Error::Config("scan budget must be at least 1".into()));
    }
    let take = schedule.len().min(budget as usize);
    let hits: Vec<Option<FactorResult>> = schedule[..take]
        .par_iter()
        .map(|step| -> Result<Option<FactorResult>> {
            if step.deck.needs_second_pair() || step.deck == DeckId::Od6 {
                return Err(Error::Config(format!("{} is not a scan deck", step.deck)));
            }
            let (_, _, od) = decks_for(n, step.dials, None)?;
            let value = od[step.deck.number() - 1].clone().expect("base deck");
            Ok(invert_ssv(step.deck, &value, DialFamily::single(step.dials), registry)
                .iter()
                .find_map(|d| quadratic_factor(n, d)))
        })
        .collect::<Result<_>>()?;
    Ok(match hits.into_iter().enumerate().find_map(|(i, h)| h.map(|r| (i as u64 + 1, r))) {
        Some((steps, r)) => ScanOutcome { result: Some(r.with(Method::Scan, steps)), steps },
        None => ScanOutcome { result: None, steps: take as u64 },
    })
}

/// Intermediate values of one od-connect step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectStep {
    pub n: Int,
    pub d1: Int,
    pub od1: Int,
    pub od2: Int,
    pub od3: Int,
    pub od4: Int,
    pub df4: Int,
    pub d1_next: Int,
    pub od1_next: Int,
    pub od2_next: Int,
    pub od3_next: Int,
    pub od4_next: Int,
    pub n_next: Int,
}

/// Predict the next composite of the same delta series, assuming `d1` moves by 2.
pub fn od_connect_step(n: &Int, dials: DialPair) -> Result<ConnectStep> {
    let r = resolve_dials(n, dials)?;
    let od1 = &r.d1 * &r.d1 - n;
    let od2 = &r.d2 * &r.d2 - n;
    let od3 = &od2 - &od1;
    let od4 = &od2 + &od1;
    if od3.is_odd() {
        return Err(Error::Step(format!("od3={od3} is odd")));
    }
    let df4: Int = &od3 / 2 - &od4;
    let od4_next: Int = &od4 - &df4;
    let od3_next: Int = &od3 + 8;
    if (&od4_next - &od3_next).is_odd() {
        return Err(Error::Step("od3' and od4' differ in parity".into()));
    }
    let od1_next: Int = (&od4_next - &od3_next) / 2;
    let od2_next: Int = (&od3_next + &od4_next) / 2;
    let d1_next = &r.d1 + 2;
    let n_next = &d1_next * &d1_next - &od1_next;
    let check = resolve_dials(&n_next, dials)?;
    if check.d1 != d1_next {
        return Err(Error::Step(format!("n'={n_next} resolves to d1={} not {d1_next}", check.d1)));
    }
    if &check.d2 * &check.d2 - &n_next != od2_next {
        return Err(Error::Step(format!("od2' disagrees at n'={n_next}")));
    }
    Ok(ConnectStep {
        n: n.clone(),
        d1: r.d1,
        od1,
        od2,
        od3,
        od4,
        df4,
        d1_next,
        od1_next,
        od2_next,
        od3_next,
        od4_next,
        n_next,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Neighbor {
    Previous,
    Next,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborRange {
    pub which: Neighbor,
    pub lo: Int,
    pub hi: Int,
}

impl NeighborRange {
    pub fn contains(&self, x: &Int) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

pub fn neighbor_ranges(n: &Int, dials: DialPair) -> Result<Vec<NeighborRange>> {
    let r = resolve_dials(n, dials)?;
    let od1 = &r.d1 * &r.d1 - n;
    let at = |k: i64| {
        let d = &r.d1 + k;
        &d * &d - &od1
    };
    let mut prev = [at(-4), at(-2)];
    prev.sort();
    let [lo, hi] = prev;
    Ok(vec![
        NeighborRange { which: Neighbor::Previous, lo, hi },
        NeighborRange { which: Neighbor::Next, lo: at(2), hi: at(4) },
    ])
}

/// `ro{X,Y}`: an `od6` pivot with mirrored values on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionMark {
    pub x: Int,
    pub y: Int,
    pub gap: Int,
    pub center_ids: (u64, u64),
    pub span: usize,
}

pub fn reflection_scan(rows: &[SeriesRow]) -> Vec<ReflectionMark> {
    let od6: Vec<Option<&Int>> = rows.iter().map(|r| r.od(DeckId::Od6)).collect();
    let mut marks = Vec::new();
    for i in 1..rows.len().saturating_sub(2) {
        let (Some(l), Some(x), Some(y), Some(r)) = (od6[i - 1], od6[i], od6[i + 1], od6[i + 2]) else {
            continue;
        };
        let top = x.max(y);
        if top >= l || top >= r {
            continue;
        }
        let step = y - x;
        let mut span = 0;
        while span < i && i + 1 + span + 1 < rows.len() {
            let k = span + 1;
            match (od6[i - k], od6[i + 1 + k]) {
                (Some(a), Some(b)) if b - a == step => span += 1,
                _ => break,
            }
        }
        if span > 0 {
            marks.push(ReflectionMark {
                x: x.clone(),
                y: y.clone(),
                gap: step.abs(),
                center_ids: (rows[i].id, rows[i + 1].id),
                span,
            });
        }
    }
    marks
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Toward smaller `m`.
    Up,
    /// Toward larger `m`.
    Down,
    Both,
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            "both" => Ok(Direction::Both),
            _ => Err(Error::Parse(format!("direction must be up, down or both: {s}"))),
        }
    }
}

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Od6Candidate {
    pub m: Int,
    pub od6: Int,
    /// `b - a` for every factor pair `a * b = m` with `1 < a <= b` found below the trial bound.
    pub deltas: Vec<Int>,
    /// Those deltas that also factor `n`.
    pub shared: Vec<Int>,
}

/// Factor pairs `(a, m / a)` with `1 < a <= min(sqrt m, bound)`.
pub fn trial_factor_pairs(m: &Int, bound: u64) -> Vec<(Int, Int)> {
    if !m.is_positive() {
        return Vec::new();
    }
    let root = m.sqrt();
    if let Some(mm) = m.to_u128() {
        let lim = root.to_u64().unwrap_or(u64::MAX).min(bound);
        return (2..=lim)
            .filter(|a| mm % *a as u128 == 0)
            .map(|a| (Int::from(a), Int::from(mm / a as u128)))
            .collect();
    }
    let lim = root.min(Int::from(bound));
    let mut out = Vec::new();
    let mut a = int(2);
    while a <= lim {
        let (d, r) = m.div_rem(&a);
        if r.is_zero() {
            out.push((a.clone(), d));
        }
        a += 1;
    }
    out
}

fn od6_of(m: &Int, dials: DialPair) -> Result<Option<Int>> {
    Ok(decks_for(m, dials, None)?.2[5].clone())
}

/// Step `m` by 2 away from `n` looking for `od6(m) == target` (default `od6(n)`).
pub fn od6_search(
    n: &Int,
    dials: DialPair,
    direction: Direction,
    budget: u64,
    target: Option<Int>,
    trial_bound: u64,
) -> Result<Vec<Od6Candidate>> {
    let target = match target {
        Some(t) => t,
        None => match od6_of(n, dials)? {
            Some(t) => t,
            None => return Ok(Vec::new()),
        },
    };
    let n_deltas: Vec<Int> = trial_factor_pairs(n, trial_bound).into_iter().map(|(a, b)| b - a).collect();
    let mut out = Vec::new();
    let mut check = |m: Int| -> Result<()> {
        if m.is_positive() && od6_of(&m, dials)?.as_ref() == Some(&target) {
            let deltas: Vec<Int> = trial_factor_pairs(&m, trial_bound).into_iter().map(|(a, b)| b - a).collect();
            let shared = deltas.iter().filter(|d| n_deltas.contains(d)).cloned().collect();
            out.push(Od6Candidate { m, od6: target.clone(), deltas, shared });
        }
        Ok(())
    };
    for k in 1..=budget {
        let off = Int::from(2 * k);
        if matches!(direction, Direction::Down | Direction::Both) {
            check(n + &off)?;
        }
        if matches!(direction, Direction::Up | Direction::Both) {
            check(n - &off)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckValue {
    pub deck: DeckId,
    pub value: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterDeltaHit {
    pub deck: DeckId,
    pub value: Int,
    pub delta: Int,
    pub p: Int,
    pub id: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterDeltaReport {
    /// Decks constant at `id` on the known delta's series.
    pub known: Vec<DeckValue>,
    /// Decks of `n_unknown` that sit inside a zone of the recovered delta.
    pub unknown: Vec<InterDeltaHit>,
}

const INTER_DECKS: [DeckId; 3] = [DeckId::Od2, DeckId::Od4, DeckId::Od5];

fn constant_decks(rows: &[SeriesRow], at: usize) -> Vec<DeckValue> {
    INTER_DECKS
        .iter()
        .filter_map(|&deck| {
            let v = rows[at].od(deck)?;
            let held = [at.checked_sub(1), Some(at + 1)]
                .into_iter()
                .flatten()
                .filter_map(|j| rows.get(j))
                .any(|r| r.od(deck) == Some(v));
            held.then(|| DeckValue { deck, value: v.clone() })
        })
        .collect()
}

/// `c1 * D^2 + k` for `c1` in {1/4, 1/2, 1} and `k` in {0, v^2/2, 3v^2/4}.
fn generic_inverse(value: &Int, v: i64) -> Vec<Int> {
    let mut out = Vec::new();
    for den in [4i64, 2, 1] {
        for k in [0, v * v / 2, 3 * v * v / 4] {
            let rest: Int = value - k;
            if rest.is_negative() {
                continue;
            }
            if let Some(d) = exact_sqrt(&(&rest * den)) {
                if d.is_positive() && !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Check the known delta's zone at `id`, then find decks of `n_unknown`
/// whose value inverts to a delta that factors it and that hold at its row.
pub fn inter_delta_verify(known_delta: &Int, id: u64, dials: DialPair, n_unknown: &Int) -> Result<InterDeltaReport> {
    if id == 0 {
        return Err(Error::Domain("row ids start at 1".into()));
    }
    let v = dials
        .symmetric_v()
        .ok_or_else(|| Error::Config("inter-delta verification needs v1 = v2".into()))?;
    let spec = SeriesSpec::delta(known_delta.clone(), Parity::Odd, dials);
    let rows = generate(&spec, Limit::Rows(id + 1))?;
    let known = constant_decks(&rows, (id - 1) as usize);

    let (_, _, od) = decks_for(n_unknown, dials, None)?;
    let mut unknown = Vec::new();
    for deck in INTER_DECKS {
        let value = od[deck.number() - 1].clone().expect("base deck");
        for d in generic_inverse(&value, v) {
            let Some(f) = quadratic_factor(n_unknown, &d) else { continue };
            let parity = Parity::of(&f.p);
            let Some(row_id) = row_id_of(&f.p, parity) else { continue };
            let spec = SeriesSpec::delta(d.clone(), parity, dials);
            let lo = row_id.saturating_sub(1).max(1);
            let window: Vec<SeriesRow> = (lo..=row_id + 1).map(|i| spec.row_at(i)).collect::<Result<_>>()?;
            let at = (row_id - lo) as usize;
            if constant_decks(&window, at).iter().any(|c| c.deck == deck) {
                unknown.push(InterDeltaHit { deck, value: value.clone(), delta: d, p: f.p, id: row_id });
            }
        }
    }
    Ok(InterDeltaReport { known, unknown })
}

/// `n` factored through a delta recovered from a neighbouring composite.
pub fn factor_via_neighbor(n: &Int, neighbor: &Int, trial_bound: u64) -> Option<FactorResult> {
    trial_factor_pairs(neighbor, trial_bound)
        .into_iter()
        .find_map(|(a, b)| quadratic_factor(n, &(b - a)))
        .map(|r| r.with(Method::OdConnect, 1))
}

/// Search a neighbour range for composites whose factor deltas also factor `n`.
pub fn factor_in_range(n: &Int, range: &NeighborRange, trial_bound: u64) -> Option<FactorResult> {
    let mut m = range.lo.clone();
    let mut steps = 0;
    while m <= range.hi {
        steps += 1;
        if let Some(r) = factor_via_neighbor(n, &m, trial_bound) {
            if r.delta > Int::one() || r.p > Int::one() {
                return Some(r.with(Method::Range, steps));
            }
        }
        m += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> Int {
        int(v)
    }

    #[test]
    fn quadratic_examples() {
        let r = quadratic_factor(&i(325), &i(12)).unwrap();
        assert_eq!((r.p, r.q), (i(13), i(25)));
        let big: Int = "524038280401".parse().unwrap();
        let r = quadratic_factor(&big, &i(137136)).unwrap();
        assert_eq!((r.p, r.q), (i(658577), i(795713)));
        assert!(quadratic_factor(&i(100), &i(12)).is_none());
        assert!(quadratic_factor(&i(0), &i(4)).is_none());
    }

    #[test]
    fn zone0_examples() {
        let reg = Registry::standard();
        let r = factor_zone0(&i(405), &reg).unwrap();
        assert_eq!((r.p, r.q, r.delta, r.steps), (i(15), i(27), i(12), 4));
        let r = factor_zone0(&i(3848), &reg).unwrap();
        assert_eq!(r.key_values(), "n=3848,p=52,q=74,delta=22,method=zone0");
        let r = factor_zone0(&i(255), &reg).unwrap();
        assert_eq!((r.p, r.q), (i(15), i(17)));
        let probes = zone0_probe(&i(255), &reg).unwrap();
        assert!(probes.iter().all(|pr| !pr.candidates.contains(&i(46))));
        assert!(factor_zone0(&i(2), &reg).is_none());
    }

    #[test]
    fn scan_examples() {
        let reg = Registry::standard();
        let out = factor_scan(&i(455), &default_schedule(&[2, 6]), 16, &reg).unwrap();
        let r = out.result.unwrap();
        assert_eq!(r.delta, i(22));
        assert_eq!(out.steps, 7);
        let out = factor_scan(&i(3723), &default_schedule(&[2]), 4, &reg).unwrap();
        assert_eq!(out.result.unwrap().p, i(51));
        let only_od4 = [ScanStep { dials: DialPair::NEG_ZERO, deck: DeckId::Od4 }];
        let out = factor_scan(&i(725), &only_od4, 1, &reg).unwrap();
        assert!(out.result.is_none());
        assert_eq!(out.steps, 1);
        assert!(factor_scan(&i(725), &only_od4, 0, &reg).is_err());
    }

    #[test]
    fn connect_examples() {
        let s = od_connect_step(&i(219781), DialPair::ZERO_NEG).unwrap();
        assert_eq!(s.n_next, i(221949));
        let r = factor_via_neighbor(&i(219781), &s.n_next, DEFAULT_TRIAL_BOUND).unwrap();
        assert_eq!((r.p, r.q, r.delta), (i(271), i(811), i(540)));
        assert!(matches!(od_connect_step(&i(405), DialPair::ZERO_NEG), Err(Error::Step(_))));
    }

    #[test]
    fn neighbor_range_examples() {
        let r = neighbor_ranges(&i(1643), DialPair::NEG_ZERO).unwrap();
        assert_eq!((r[0].lo.clone(), r[0].hi.clone()), (i(1347), i(1491)));
        assert_eq!((r[1].lo.clone(), r[1].hi.clone()), (i(1803), i(1971)));
        assert!(r[0].contains(&i(1479)) && r[1].contains(&i(1815)));
        let head = neighbor_ranges(&i(13), DialPair::ZERO_NEG).unwrap();
        assert!(head.iter().all(|x| x.lo <= x.hi));
    }

    #[test]
    fn reflection_examples() {
        let rows = generate(&SeriesSpec::delta(22, Parity::Odd, DialPair::NEG_ZERO), Limit::Rows(24)).unwrap();
        let m = reflection_scan(&rows);
        assert_eq!(m.len(), 1);
        assert_eq!((m[0].x.clone(), m[0].y.clone(), m[0].gap.clone()), (i(4), i(4), i(0)));
        assert_eq!((m[0].center_ids, m[0].span), ((10, 11), 4));
        let rows = generate(&SeriesSpec::delta(20, Parity::Odd, DialPair::ZERO_NEG), Limit::Rows(24)).unwrap();
        let m = reflection_scan(&rows);
        assert_eq!(m.len(), 1);
        assert_eq!((m[0].x.clone(), m[0].y.clone(), m[0].gap.clone()), (i(3), i(5), i(2)));
        assert_eq!((m[0].center_ids, m[0].span), ((8, 9), 3));
        let mono: Vec<SeriesRow> = rows[12..20].to_vec();
        assert!(reflection_scan(&mono).is_empty());
    }

    #[test]
    fn od6_search_examples() {
        let c = od6_search(&i(455), DialPair::NEG_ZERO, Direction::Down, 500, Some(i(28)), DEFAULT_TRIAL_BOUND).unwrap();
        let hit = c.iter().find(|x| x.m == i(1323)).unwrap();
        assert_eq!(hit.shared, vec![i(22)]);
        let c = od6_search(&i(363), DialPair::NEG_ZERO, Direction::Down, 1000, Some(i(36)), DEFAULT_TRIAL_BOUND).unwrap();
        let first_shared = c.iter().find(|x| !x.shared.is_empty()).unwrap();
        assert_eq!(first_shared.m, i(1479));
        assert!(od6_search(&i(455), DialPair::NEG_ZERO, Direction::Both, 0, None, 100).unwrap().is_empty());
    }

    #[test]
    fn inter_delta_examples() {
        let dials = DialPair::new(0, -1, 8, 8);
        for (n, deck, value, delta) in [
            (441383, DeckId::Od2, 10201, 202),
            (785539, DeckId::Od4, 13154, 162),
            (936863, DeckId::Od5, 31732, 178),
        ] {
            let rep = inter_delta_verify(&i(122), 93, dials, &i(n)).unwrap();
            assert!(rep.known.iter().any(|k| k.deck == DeckId::Od2 && k.value == i(3721)));
            assert!(
                rep.unknown.iter().any(|h| h.deck == deck && h.value == i(value) && h.delta == i(delta)),
                "{n}: {:?}",
                rep.unknown
            );
        }
    }

    #[test]
    fn trial_pairs() {
        assert_eq!(trial_factor_pairs(&i(455), 100).len(), 3);
        assert!(trial_factor_pairs(&i(13), 100).is_empty());
    }
}
