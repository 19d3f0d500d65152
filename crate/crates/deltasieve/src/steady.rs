//! Closed-form steady values, the first `p` of the terminal zone, and their inversion.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{exact_sqrt, generate, int, DeckId, DialPair, Int, Limit, Parity, SeriesRow, SeriesSpec};

/// One or two dial pairs a form is registered against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DialFamily {
    pub primary: DialPair,
    pub second: Option<DialPair>,
}

impl DialFamily {
    pub fn single(d: DialPair) -> Self {
        DialFamily { primary: d, second: None }
    }

    pub fn pair(primary: DialPair, second: DialPair) -> Self {
        DialFamily { primary, second: Some(second) }
    }

    /// The part of the family a deck actually reads.
    pub fn for_deck(&self, deck: DeckId) -> DialFamily {
        if deck.needs_second_pair() {
            *self
        } else {
            DialFamily::single(self.primary)
        }
    }
}

impl From<DialPair> for DialFamily {
    fn from(d: DialPair) -> Self {
        DialFamily::single(d)
    }
}

impl fmt::Display for DialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second {
            Some(s) => write!(f, "{}+{}", self.primary, s),
            None => write!(f, "{}", self.primary),
        }
    }
}

impl FromStr for DialFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('+') {
            Some((a, b)) => Ok(DialFamily::pair(a.parse()?, b.parse()?)),
            None => Ok(DialFamily::single(s.parse()?)),
        }
    }
}

/// Exact rational `num/den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };

    pub const fn new(num: i64, den: i64) -> Ratio {
        Ratio { num, den }
    }
}

/// `c1*D^2 + c2*D + k` for one deck, dial family, residue class and parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteadyStateForm {
    pub deck: DeckId,
    pub family: DialFamily,
    pub delta_mod4: u8,
    pub parity: Parity,
    pub c1: Ratio,
    pub c2: Ratio,
    pub k: i64,
}

impl SteadyStateForm {
    pub fn quadratic(deck: DeckId, family: DialFamily, delta_mod4: u8, parity: Parity, c1: Ratio, k: i64) -> Self {
        SteadyStateForm { deck, family, delta_mod4, parity, c1, c2: Ratio::ZERO, k }
    }

    pub fn applies_to(&self, delta: &Int) -> bool {
        delta.mod_floor(&int(4)) == int(self.delta_mod4 as i64)
    }

    /// Value at `delta`; `None` when the result is not an integer.
    pub fn eval(&self, delta: &Int) -> Option<Int> {
        let den = self.c1.den * self.c2.den;
        let top = int(self.c1.num * self.c2.den) * delta * delta + int(self.c2.num * self.c1.den) * delta;
        let (quot, rem) = top.div_rem(&int(den));
        rem.is_zero().then(|| quot + self.k)
    }

    /// Positive integral roots of `form(D) = observed` in this form's residue class.
    pub fn invert(&self, observed: &Int) -> Vec<Int> {
        let a = int(self.c1.num * self.c2.den);
        let b = int(self.c2.num * self.c1.den);
        let c = (int(self.k) - observed) * int(self.c1.den * self.c2.den);
        let mut out = Vec::new();
        if a.is_zero() {
            if !b.is_zero() && (-&c).is_multiple_of(&b) {
                out.push(-&c / &b);
            }
        } else if let Some(s) = exact_sqrt(&(&b * &b - int(4) * &a * &c)) {
            for root_top in [-&b + &s, -&b - &s] {
                let two_a = int(2) * &a;
                if root_top.is_multiple_of(&two_a) {
                    out.push(root_top / two_a);
                }
            }
        }
        out.retain(|d| d.is_positive() && self.applies_to(d) && self.eval(d).as_ref() == Some(observed));
        out.sort();
        out.dedup();
        out
    }

    /// Canonical text of the expression, used as the form id in reports.
    pub fn form_id(&self) -> String {
        let mut s = match (self.c1.num, self.c1.den) {
            (0, _) => String::new(),
            (1, 1) => "D^2".to_string(),
            (n, 1) => format!("{n}D^2"),
            (1, d) => format!("D^2/{d}"),
            (n, d) => format!("{n}D^2/{d}"),
        };
        if self.c2.num != 0 {
            let c2 = match (self.c2.num.abs(), self.c2.den) {
                (1, 1) => "D".to_string(),
                (n, 1) => format!("{n}D"),
                (n, d) => format!("{n}D/{d}"),
            };
            let sign = if self.c2.num < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            s.push_str(sign);
            s.push_str(&c2);
        }
        if self.k != 0 || s.is_empty() {
            if self.k >= 0 && !s.is_empty() {
                s.push('+');
            }
            s.push_str(&self.k.to_string());
        }
        s
    }
}

const EVEN_A: [(i64, i64); 2] = [(0, -1), (-2, -1)];
const ODD_A: [(i64, i64); 2] = [(-1, 0), (-1, -2)];

/// Classes `(delta mod 4, parity)` where the deck that carries `v` steadies
/// for an even `a1` offset, and the complementary set for an odd one.
const LEAD: [(u8, Parity); 2] = [(0, Parity::Odd), (2, Parity::Even)];
const TRAIL: [(u8, Parity); 2] = [(2, Parity::Odd), (0, Parity::Even)];

/// Immutable table of known forms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Registry {
    forms: Vec<SteadyStateForm>,
}

impl Registry {
    pub fn new(forms: Vec<SteadyStateForm>) -> Self {
        Registry { forms }
    }

    /// Forms for the base dials, the `v` rules up to `v = 62`, odd deltas,
    /// the two-pair decks and the empirically observed coverage families.
    pub fn standard() -> Self {
        use DeckId::*;
        let mut f = Vec::new();
        let half = Ratio::new(1, 2);
        let quarter = Ratio::new(1, 4);
        let one = Ratio::new(1, 1);
        let base = |d: DialPair, classes: [(u8, Parity); 2], deck: DeckId, c1: Ratio, k: i64, f: &mut Vec<SteadyStateForm>| {
            for (m, par) in classes {
                f.push(SteadyStateForm::quadratic(deck, d.into(), m, par, c1, k));
            }
        };
        base(DialPair::ZERO_NEG, LEAD, Od4, half, 2, &mut f);
        base(DialPair::NEG_ZERO, TRAIL, Od4, half, 2, &mut f);
        base(DialPair::ZERO_NEG, TRAIL, Od2, quarter, 0, &mut f);
        base(DialPair::NEG_ZERO, LEAD, Od2, quarter, 0, &mut f);
        for v in (6..=62).step_by(4) {
            for (a1, a2) in EVEN_A {
                base(DialPair::new(a1, a2, v, v), LEAD, Od4, half, v * v / 2, &mut f);
            }
            for (a1, a2) in ODD_A {
                base(DialPair::new(a1, a2, v, v), TRAIL, Od4, half, v * v / 2, &mut f);
            }
        }
        for v in (4..=60).step_by(8) {
            for (a1, a2) in EVEN_A {
                base(DialPair::new(a1, a2, v, v), LEAD, Od5, one, 3 * v * v / 4, &mut f);
            }
            for (a1, a2) in ODD_A {
                base(DialPair::new(a1, a2, v, v), TRAIL, Od5, one, 3 * v * v / 4, &mut f);
            }
        }
        base(DialPair::NEG_ZERO, [(3, Parity::Odd), (1, Parity::Even)], Od5, one, 3, &mut f);
        base(DialPair::ZERO_NEG, [(1, Parity::Odd), (3, Parity::Even)], Od5, one, 3, &mut f);

        let (p1, p2) = two_pair_dials();
        let two = DialFamily::pair(p1, p2);
        for (m, par) in TRAIL {
            for (deck, c1, k) in [
                (Od9, half, 72),
                (Od9, half, 32),
                (Od10, Ratio::new(3, 4), 168),
                (Od11, Ratio::new(5, 4), 144),
                (Od7, quarter, 0),
                (Od8, quarter, 0),
            ] {
                f.push(SteadyStateForm::quadratic(deck, two, m, par, c1, k));
            }
            f.push(SteadyStateForm::quadratic(Od2, p1.into(), m, par, quarter, 0));
        }

        let wide = DialPair::new(-2, 2, 12, 12);
        for (deck, c1, k) in [(Od1, quarter, 0), (Od2, quarter, 0), (Od4, half, 72), (Od5, one, 108)] {
            f.push(SteadyStateForm::quadratic(deck, wide.into(), 0, Parity::Odd, c1, k));
        }
        let eight = DialPair::new(0, -1, 8, 8);
        for (m, par) in TRAIL {
            for (deck, c1, k) in [(Od2, quarter, 0), (Od4, half, 32), (Od5, one, 48)] {
                f.push(SteadyStateForm::quadratic(deck, eight.into(), m, par, c1, k));
            }
        }
        Registry { forms: f }
    }

    pub fn forms(&self) -> &[SteadyStateForm] {
        &self.forms
    }

    pub fn register(&mut self, form: SteadyStateForm) {
        self.forms.push(form);
    }

    /// Forms for `deck` under `family` whose class admits `delta` and `parity`.
    pub fn lookup(&self, deck: DeckId, family: DialFamily, delta: &Int, parity: Parity) -> Vec<&SteadyStateForm> {
        let key = family.for_deck(deck);
        self.forms
            .iter()
            .filter(|f| f.deck == deck && f.family == key && f.parity == parity && f.applies_to(delta))
            .collect()
    }

    /// The form whose value at `delta` equals `value`, if any.
    pub fn identify(&self, deck: DeckId, family: DialFamily, delta: &Int, parity: Parity, value: &Int) -> Option<&SteadyStateForm> {
        self.lookup(deck, family, delta, parity)
            .into_iter()
            .find(|f| f.eval(delta).as_ref() == Some(value))
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["deck", "dial_family", "delta_mod4", "p_parity", "c1_num", "c1_den", "c2_num", "c2_den", "k"])?;
        for f in &self.forms {
            w.write_record([
                f.deck.to_string(),
                f.family.to_string(),
                f.delta_mod4.to_string(),
                f.parity.to_string(),
                f.c1.num.to_string(),
                f.c1.den.to_string(),
                f.c2.num.to_string(),
                f.c2.den.to_string(),
                f.k.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Registry> {
        let mut r = csv::Reader::from_reader(input);
        let mut forms = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let field = |i: usize| rec.get(i).ok_or_else(|| Error::Parse(format!("registry row missing column {i}")));
            let num = |i: usize| -> Result<i64> {
                field(i)?.parse::<i64>().map_err(|e| Error::Parse(format!("registry column {i}: {e}")))
            };
            let c1 = Ratio::new(num(4)?, num(5)?);
            let c2 = Ratio::new(num(6)?, num(7)?);
            if c1.den <= 0 || c2.den <= 0 {
                return Err(Error::Parse("registry denominators must be positive".into()));
            }
            forms.push(SteadyStateForm {
                deck: field(0)?.parse()?,
                family: field(1)?.parse()?,
                delta_mod4: num(2)? as u8,
                parity: field(3)?.parse()?,
                c1,
                c2,
                k: num(8)?,
            });
        }
        Ok(Registry { forms })
    }
}

/// `{0,-1,6,6}` and `{-2,1,16,16}`.
pub fn two_pair_dials() -> (DialPair, DialPair) {
    (DialPair::new(0, -1, 6, 6), DialPair::new(-2, 1, 16, 16))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsvQuery {
    pub deck: DeckId,
    pub delta: Int,
    pub family: DialFamily,
    pub parity: Parity,
}

impl SsvQuery {
    pub fn new(deck: DeckId, delta: impl Into<Int>, family: impl Into<DialFamily>, parity: Parity) -> Self {
        SsvQuery { deck, delta: delta.into(), family: family.into(), parity }
    }
}

/// Every registered steady value for the query, with its form id.
pub fn ssv_closed_forms(q: &SsvQuery, registry: &Registry) -> Result<Vec<(String, Int)>> {
    if q.delta < int(1) {
        return Err(Error::Domain(format!("delta {} < 1", q.delta)));
    }
    let out: Vec<(String, Int)> = registry
        .lookup(q.deck, q.family, &q.delta, q.parity)
        .into_iter()
        .filter_map(|f| f.eval(&q.delta).map(|v| (f.form_id(), v)))
        .collect();
    if out.is_empty() {
        return Err(Error::NoClosedForm(format!(
            "{} with {} at delta {} ({} p)",
            q.deck, q.family, q.delta, q.parity
        )));
    }
    Ok(out)
}

/// First registered steady value for the query.
pub fn ssv_closed_form(q: &SsvQuery, registry: &Registry) -> Result<Int> {
    Ok(ssv_closed_forms(q, registry)?.remove(0).1)
}

/// Deck that reaches the terminal steady state for the two base dial pairs.
pub fn base_steady_deck(delta: &Int, dials: DialPair, parity: Parity) -> Result<DeckId> {
    let zero_mod4 = delta.mod_floor(&int(4)).is_zero();
    let od4 = match dials {
        d if d == DialPair::ZERO_NEG => zero_mod4 == (parity == Parity::Odd),
        d if d == DialPair::NEG_ZERO => zero_mod4 != (parity == Parity::Odd),
        other => return Err(Error::Unsupported(format!("no first-p formula for dials {other}"))),
    };
    Ok(if od4 { DeckId::Od4 } else { DeckId::Od2 })
}

/// `p` of the first row of the terminal zone for the two base dial pairs.
pub fn first_p_at_ssv(delta: &Int, dials: DialPair, parity: Parity) -> Result<Int> {
    if delta.is_odd() {
        return Err(Error::Unsupported(format!("odd delta {delta} has no first-p formula")));
    }
    if delta < &int(4) {
        return Err(Error::Domain(format!("delta {delta} below the smallest tabulated value 4")));
    }
    base_steady_deck(delta, dials, parity)?;
    let four = int(4);
    let one = int(1);
    let two = int(2);
    let zero_mod4 = delta.mod_floor(&four).is_zero();
    let kk = (delta - &four) / &four;
    let j = (delta - int(6)) / &four;
    let k_even = (delta / &four).is_even();
    let a = |x: &Int| two.clone() * x * (x + &one);
    let sq = |x: &Int| x * x;
    let p = match (dials == DialPair::ZERO_NEG, parity, zero_mod4) {
        (true, Parity::Odd, true) => a(&kk) + &one,
        (true, Parity::Odd, false) => sq(&(&j + &one)) - &j,
        (true, Parity::Even, true) if !k_even => sq(&kk),
        (true, Parity::Even, true) => &kk * (&kk + &one) - (&kk - &one),
        (true, Parity::Even, false) => two.clone() * (sq(&(&j + &one)) - &one) + &two,
        (false, Parity::Odd, true) if k_even => sq(&kk),
        (false, Parity::Odd, true) => &kk * (&kk + &one) - (&kk - &one),
        (false, Parity::Odd, false) => two.clone() * (sq(&(&j + &one)) - &one) + int(3),
        (false, Parity::Even, true) => a(&kk) + &two,
        (false, Parity::Even, false) => &j * (&j + &one) + &two,
    };
    Ok(p.max(int(parity.first())))
}

/// Candidate deltas whose registered steady value for `deck` under `family` equals `observed`.
pub fn invert_ssv(deck: DeckId, observed: &Int, family: DialFamily, registry: &Registry) -> Vec<Int> {
    let key = family.for_deck(deck);
    let mut out: Vec<Int> = registry
        .forms()
        .iter()
        .filter(|f| f.deck == deck && f.family == key)
        .flat_map(|f| f.invert(observed))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Outcome of checking one delta against its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCheck {
    pub delta: Int,
    pub expected: Int,
    /// First and last id of the run holding the expected value.
    pub zone: Option<(u64, u64)>,
    /// The run reached the end of the generated rows.
    pub open: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<DeltaCheck>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs of equal values of `deck` with length at least 2: `(first_id, last_id, value)`.
pub fn steady_runs(rows: &[SeriesRow], deck: DeckId) -> Vec<(u64, u64, Int)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let Some(v) = rows[i].od(deck) else {
            i += 1;
            continue;
        };
        let mut j = i;
        while j + 1 < rows.len() && rows[j + 1].od(deck) == Some(v) {
            j += 1;
        }
        if j > i {
            out.push((rows[i].id, rows[j].id, v.clone()));
        }
        i = j + 1;
    }
    out
}

/// Checks the closed form against generated series for `delta` and `delta + 4`.
///
/// A delta passes when the expected value holds for `horizon` consecutive rows,
/// or when it forms a bounded zone that ends inside the scanned window.
pub fn verify_ssv_empirically(q: &SsvQuery, horizon: u64, registry: &Registry) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    for delta in [q.delta.clone(), &q.delta + 4] {
        let sub = SsvQuery { delta: delta.clone(), ..q.clone() };
        let expected = ssv_closed_form(&sub, registry)?;
        let mut spec = SeriesSpec::delta(delta.clone(), q.parity, q.family.primary);
        spec.second = q.family.second;
        let reach = u64::try_from(&delta * &delta / 4).unwrap_or(u64::MAX / 2);
        let max_rows = reach + horizon + 64;
        let rows = generate(
            &spec,
            Limit::SteadyStop { deck: q.deck, k: horizon as usize, max_rows },
        )?;
        let last = rows.last().map(|r| r.id).unwrap_or(0);
        let hit = steady_runs(&rows, q.deck).into_iter().rev().find(|(_, _, v)| *v == expected);
        let (zone, open, pass) = match hit {
            Some((s, e, _)) => {
                let open = e == last;
                let long = e - s + 1 >= horizon;
                (Some((s, e)), open, long || !open)
            }
            None => (None, false, false),
        };
        checks.push(DeltaCheck { delta, expected, zone, open, pass });
    }
    Ok(VerificationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::standard()
    }

    #[test]
    fn closed_form_examples() {
        let r = reg();
        let q = SsvQuery::new(DeckId::Od4, 12, DialPair::ZERO_NEG, Parity::Odd);
        assert_eq!(ssv_closed_form(&q, &r).unwrap(), int(74));
        let q = SsvQuery::new(DeckId::Od5, 46, DialPair::new(-1, -2, 12, 12), Parity::Odd);
        assert_eq!(ssv_closed_form(&q, &r).unwrap(), int(2224));
        let q = SsvQuery::new(DeckId::Od5, 23, DialPair::NEG_ZERO, Parity::Odd);
        assert_eq!(ssv_closed_form(&q, &r).unwrap(), int(532));
    }

    #[test]
    fn unmatched_family_has_no_closed_form() {
        let q = SsvQuery::new(DeckId::Od4, 12, DialPair::new(3, 3, 7, 7), Parity::Odd);
        assert!(matches!(ssv_closed_form(&q, &reg()), Err(Error::NoClosedForm(_))));
    }

    #[test]
    fn two_pair_od9_has_two_forms() {
        let (a, b) = two_pair_dials();
        let q = SsvQuery::new(DeckId::Od9, 94, DialFamily::pair(a, b), Parity::Odd);
        let got: Vec<Int> = ssv_closed_forms(&q, &reg()).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(got, vec![int(4490), int(4450)]);
    }

    #[test]
    fn first_p_examples() {
        assert_eq!(first_p_at_ssv(&int(12), DialPair::ZERO_NEG, Parity::Odd).unwrap(), int(13));
        assert_eq!(first_p_at_ssv(&int(22), DialPair::ZERO_NEG, Parity::Even).unwrap(), int(50));
        assert_eq!(first_p_at_ssv(&int(24), DialPair::NEG_ZERO, Parity::Odd).unwrap(), int(25));
        assert!(matches!(
            first_p_at_ssv(&int(23), DialPair::NEG_ZERO, Parity::Odd),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn inversion_examples() {
        let r = reg();
        assert_eq!(invert_ssv(DeckId::Od4, &int(74), DialPair::ZERO_NEG.into(), &r), vec![int(12)]);
        assert_eq!(invert_ssv(DeckId::Od2, &int(121), DialPair::ZERO_NEG.into(), &r), vec![int(22)]);
        assert!(invert_ssv(DeckId::Od4, &int(75), DialPair::ZERO_NEG.into(), &r).is_empty());
    }

    #[test]
    fn form_ids_read_as_expressions() {
        let r = reg();
        let ids: Vec<String> = r.forms().iter().map(|f| f.form_id()).collect();
        for want in ["D^2/2+2", "D^2/4", "D^2+3", "3D^2/4+168", "5D^2/4+144", "D^2/2+18"] {
            assert!(ids.iter().any(|i| i == want), "{want}");
        }
        let f = SteadyStateForm { c2: Ratio::new(-3, 1), ..r.forms()[0].clone() };
        assert_eq!(f.form_id(), "D^2/2-3D+2");
        assert_eq!(f.eval(&int(12)), Some(int(72 - 36 + 2)));
        assert_eq!(f.invert(&int(38)), vec![int(12)]);
    }

    #[test]
    fn registry_csv_round_trip() {
        let r = reg();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("deck,dial_family,delta_mod4,p_parity,c1_num,c1_den,c2_num,c2_den,k\n"));
        assert_eq!(Registry::read_csv(&buf[..]).unwrap(), r);
    }

    #[test]
    fn empirical_verification_examples() {
        let r = reg();
        let rep = verify_ssv_empirically(&SsvQuery::new(DeckId::Od4, 12, DialPair::ZERO_NEG, Parity::Odd), 200, &r).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.checks[0].zone.map(|z| z.0), Some(7));
        let rep = verify_ssv_empirically(&SsvQuery::new(DeckId::Od4, 16, DialPair::ZERO_NEG, Parity::Odd), 200, &r).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.checks[0].expected, int(130));
        let rep = verify_ssv_empirically(&SsvQuery::new(DeckId::Od2, 16, DialPair::ZERO_NEG, Parity::Even), 200, &r).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.checks[0].expected, int(64));
        let start = rep.checks[0].zone.unwrap().0;
        assert_eq!(SeriesSpec::delta(16, Parity::Even, DialPair::ZERO_NEG).p_at(start), int(10));
    }

    #[test]
    fn bounded_zone_passes_without_persisting() {
        let q = SsvQuery::new(DeckId::Od4, 22, DialPair::NEG_ZERO.with_v(6), Parity::Odd);
        let rep = verify_ssv_empirically(&q, 200, &reg()).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.checks[0].zone, Some((6, 25)));
        assert!(!rep.checks[0].open);
    }
}
