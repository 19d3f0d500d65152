//! Command-line front end.
//!
//! Results go to stdout (or `--out`) as CSV, or as `key=value` lines for scalar
//! results. Exit codes: 0 success, 1 no result, 2 usage error, 3 internal error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::equilibrium::{equilibrium_table, gec_growth, write_equilibrium_csv, write_gec_csv, Compare};
use crate::error::{Error, Result};
use crate::factor::{
    default_schedule, factor_scan, factor_zone0, inter_delta_verify, neighbor_ranges, od6_search, od_connect_step,
    quadratic_factor, reflection_scan, Direction, FactorResult, Neighbor, DEFAULT_TRIAL_BOUND,
};
use crate::golden::golden_tables;
use crate::plot::{plot_data, write_points, Figure, PlotParams};
use crate::series::{generate, row_id_of, write_csv, DeckId, DialPair, Int, Limit, Parity, SeriesSpec};
use crate::steady::{first_p_at_ssv, ssv_closed_forms, verify_ssv_empirically, DialFamily, Registry, SsvQuery};
use crate::trapdoor::{decrypt, decrypt_integer, encrypt, encrypt_integer, Ciphertext, Codec, KeyFile, TrapdoorParams, TrapdoorPrivateKey};
use crate::zones::{coverage_report, default_horizon, detect_zones, find_switchover_points, ZoneCriterion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_RESULT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "deltasieve", version, about = "Delta-sieve series, zones, factorization and trapdoor tools")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Render aligned text instead of CSV.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SeriesArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<Int>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "delta")]
    pub sum: Option<Int>,
    #[arg(long, default_value = "odd")]
    pub parity: Parity,
    #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
    pub dials: DialPair,
    /// Second dial pair for od7..od11.
    #[arg(long, allow_hyphen_values = true)]
    pub dials2: Option<DialPair>,
}

impl SeriesArgs {
    fn spec(&self) -> Result<SeriesSpec> {
        let mut spec = match (&self.delta, &self.sum) {
            (Some(d), None) => SeriesSpec::delta(d.clone(), self.parity, self.dials),
            (None, Some(s)) => SeriesSpec::sum(s.clone(), self.parity, self.dials),
            _ => return Err(Error::Config("give exactly one of --delta or --sum".into())),
        };
        spec.second = self.dials2;
        Ok(spec)
    }

    fn magnitude(&self) -> Int {
        self.delta.clone().or_else(|| self.sum.clone()).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FactorMethod {
    Auto,
    Quadratic,
    Zone0,
    Scan,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CodecArg {
    TwoDigit,
    Wide,
}

impl From<CodecArg> for Codec {
    fn from(c: CodecArg) -> Codec {
        match c {
            CodecArg::TwoDigit => Codec::TwoDigit,
            CodecArg::Wide => Codec::Wide,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FigureArg {
    CoverageGrowth,
    RsaUnsafeZone,
    AGraph,
    GecGrowth,
    Residue,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Figure {
        match f {
            FigureArg::CoverageGrowth => Figure::CoverageGrowth,
            FigureArg::RsaUnsafeZone => Figure::RsaUnsafeZone,
            FigureArg::AGraph => Figure::AGraph,
            FigureArg::GecGrowth => Figure::GecGrowth,
            FigureArg::Residue => Figure::Residue,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CompareArg {
    Prefix,
    Positional,
    Multiset,
}

impl From<CompareArg> for Compare {
    fn from(c: CompareArg) -> Compare {
        match c {
            CompareArg::Prefix => Compare::Prefix,
            CompareArg::Positional => Compare::Positional,
            CompareArg::Multiset => Compare::Multiset,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a Δ- or Σ-series.
    Series {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 20)]
        rows: u64,
        /// Stop once this deck has held for three rows (capped by --rows).
        #[arg(long)]
        until_steady: Option<DeckId>,
    },
    /// Sieve zones of one deck, or switchover marks with --marks.
    Zones {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value = "od4")]
        deck: DeckId,
        /// Rows to scan; defaults to Δ²/8 + 100.
        #[arg(long)]
        rows: Option<u64>,
        #[arg(long)]
        marks: bool,
    },
    /// Zone coverage per deck.
    Coverage {
        #[arg(long, allow_hyphen_values = true)]
        delta: Int,
        #[arg(long, default_value = "odd")]
        parity: Parity,
        /// One or two dial pairs.
        #[arg(long, allow_hyphen_values = true, num_args = 1..=2, default_value = "-2,2,12,12")]
        dials: Vec<DialPair>,
        #[arg(long, value_delimiter = ',', default_value = "od1,od2,od4,od5")]
        decks: Vec<DeckId>,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Closed-form steady-state value of a deck.
    Ssv {
        #[arg(long)]
        deck: DeckId,
        #[arg(long, allow_hyphen_values = true)]
        delta: Int,
        #[arg(long, default_value = "odd")]
        parity: Parity,
        #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
        dials: DialPair,
        #[arg(long, allow_hyphen_values = true)]
        dials2: Option<DialPair>,
        /// Also check the value on the series over this many rows.
        #[arg(long)]
        verify_rows: Option<u64>,
    },
    /// First p at which the base deck reaches its steady value.
    FirstP {
        #[arg(long, allow_hyphen_values = true)]
        delta: Int,
        #[arg(long, default_value = "odd")]
        parity: Parity,
        #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
        dials: DialPair,
    },
    /// Factor n.
    Factor {
        #[arg(long)]
        n: Int,
        /// Known delta; implies the quadratic method.
        #[arg(long)]
        delta: Option<Int>,
        #[arg(long, value_enum, default_value = "auto")]
        method: FactorMethod,
        #[arg(long, value_delimiter = ',', default_value = "2,4,6,8,10,12")]
        v: Vec<i64>,
        #[arg(long, default_value_t = 64)]
        budget: u64,
    },
    /// Ranges that hold the previous and next composite of n's delta series.
    Neighbors {
        #[arg(long)]
        n: Int,
        #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
        dials: DialPair,
    },
    /// Predict the next composite of n's delta series.
    Connect {
        #[arg(long)]
        n: Int,
        #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
        dials: DialPair,
    },
    /// od6 reflection marks on a series.
    Reflect {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 40)]
        rows: u64,
    },
    /// Search nearby m with od6(m) equal to od6(n).
    Od6Search {
        #[arg(long)]
        n: Int,
        #[arg(long, default_value = "0,-1,2,2", allow_hyphen_values = true)]
        dials: DialPair,
        #[arg(long, default_value = "both")]
        direction: Direction,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, allow_hyphen_values = true)]
        target: Option<Int>,
        #[arg(long, default_value_t = DEFAULT_TRIAL_BOUND)]
        trial_bound: u64,
    },
    /// Inter-delta check between a known delta row and an unknown n.
    Interdelta {
        #[arg(long)]
        known_delta: Int,
        #[arg(long)]
        id: u64,
        #[arg(long, allow_hyphen_values = true)]
        dials: DialPair,
        #[arg(long)]
        n: Int,
    },
    /// Equilibrium constants table.
    Equilibrium {
        #[arg(long)]
        delta: Int,
        #[arg(long, default_value = "odd")]
        parity: Parity,
        #[arg(long)]
        length: Option<usize>,
    },
    /// gec/nce/residue across consecutive deltas.
    Gec {
        #[arg(long)]
        start: Int,
        #[arg(long)]
        end: Int,
        #[arg(long, default_value = "odd")]
        parity: Parity,
        #[arg(long, value_enum, default_value = "prefix")]
        compare: CompareArg,
    },
    /// Encrypt a message (or an integer with --integer).
    TrapdoorEncrypt {
        #[arg(long)]
        delta: Int,
        #[arg(long, required_unless_present = "integer")]
        message: Option<String>,
        #[arg(long, conflicts_with = "message")]
        integer: Option<Int>,
        #[arg(long, value_enum, default_value = "two-digit")]
        codec: CodecArg,
        /// Append every intermediate value.
        #[arg(long)]
        trace: bool,
    },
    /// Decrypt from a key file or from explicit values.
    TrapdoorDecrypt {
        #[arg(long)]
        key: Option<PathBuf>,
        #[arg(long, required_unless_present = "key")]
        delta: Option<Int>,
        #[arg(long, required_unless_present = "key")]
        ciphertext: Option<Int>,
        #[arg(long, required_unless_present = "key", allow_hyphen_values = true)]
        private: Option<Int>,
        #[arg(long, value_enum, default_value = "two-digit")]
        codec: CodecArg,
        /// Print the recovered integer instead of decoding it.
        #[arg(long)]
        integer: bool,
    },
    /// Regenerate the reference tables as table_NN.csv.
    GoldenTables {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, value_delimiter = ',')]
        tables: Option<Vec<u32>>,
    },
    /// Figure datasets as x,y,series CSV.
    PlotData {
        #[arg(long, value_enum)]
        figure: FigureArg,
        #[arg(long, value_delimiter = ',')]
        delta: Option<Vec<Int>>,
        #[arg(long)]
        parity: Option<Parity>,
        #[arg(long, allow_hyphen_values = true, num_args = 1..=2)]
        dials: Option<Vec<DialPair>>,
    },
}

/// Outcome of a command before rendering.
enum Output {
    Text(String),
    NoResult(String),
    Files(Vec<PathBuf>),
}

fn csv_bytes(f: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<String> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(String::from_utf8(buf).expect("utf-8 output"))
}

fn lines<I: IntoIterator<Item = String>>(header: &str, rows: I) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

fn factor_output(r: Option<FactorResult>, n: &Int) -> Output {
    match r {
        Some(r) => Output::Text(format!("{}\n", r.key_values())),
        None => Output::NoResult(format!("no factor found for n={n}")),
    }
}

fn execute(cmd: Command) -> Result<Output> {
    let registry = Registry::standard();
    Ok(match cmd {
        Command::Series { series, rows, until_steady } => {
            let spec = series.spec()?;
            let limit = match until_steady {
                Some(deck) => Limit::SteadyStop { deck, k: 3, max_rows: rows },
                None => Limit::Rows(rows),
            };
            let data = generate(&spec, limit)?;
            Output::Text(csv_bytes(|b| write_csv(&data, b))?)
        }
        Command::Zones { series, deck, rows, marks } => {
            let spec = series.spec()?;
            let n = rows.unwrap_or_else(|| default_horizon(&series.magnitude()));
            let data = generate(&spec, Limit::Rows(n))?;
            let scan = detect_zones(&data, &ZoneCriterion::for_deck(deck))?;
            if marks {
                let mut all = scan.marks;
                all.extend(find_switchover_points(&data));
                all.sort_by_key(|m| m.id);
                Output::Text(lines(
                    "kind,id,deck,df_anomaly",
                    all.iter().map(|m| format!("{:?},{},{},{}", m.kind, m.id, m.deck, m.df_anomaly).to_lowercase()),
                ))
            } else {
                Output::Text(lines(
                    "deck,zone_index,id_start,id_end,coverage,steady_value",
                    scan.zones.iter().map(|z| {
                        let end = z.id_end.map_or("inf".to_string(), |e| e.to_string());
                        format!("{},{},{},{},{},{}", z.steady_deck, z.zone_index, z.id_start, end, z.coverage, z.steady_value)
                    }),
                ))
            }
        }
        Command::Coverage { delta, parity, dials, decks, horizon } => {
            let report = coverage_report(&delta, parity, &dials, &decks, horizon, &registry)?;
            Output::Text(csv_bytes(|b| report.write_csv(b))?)
        }
        Command::Ssv { deck, delta, parity, dials, dials2, verify_rows } => {
            let family = match dials2 {
                Some(d2) => DialFamily::pair(dials, d2),
                None => DialFamily::single(dials),
            };
            let q = SsvQuery::new(deck, delta.clone(), family, parity);
            match verify_rows {
                Some(h) => {
                    let rep = verify_ssv_empirically(&q, h, &registry)?;
                    Output::Text(lines(
                        "delta,expected,id_start,id_end,open,pass",
                        rep.checks.iter().map(|c| {
                            let (a, b) = c.zone.map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
                            format!("{},{},{},{},{},{}", c.delta, c.expected, a, b, c.open, c.pass)
                        }),
                    ))
                }
                None => {
                    let forms = ssv_closed_forms(&q, &registry)?;
                    if forms.is_empty() {
                        return Err(Error::NoClosedForm(format!("{deck} at delta={delta}")));
                    }
                    Output::Text(
                        forms
                            .iter()
                            .map(|(id, v)| format!("deck={deck},delta={delta},value={v},form={id}\n"))
                            .collect(),
                    )
                }
            }
        }
        Command::FirstP { delta, parity, dials } => {
            let p = first_p_at_ssv(&delta, dials, parity)?;
            let id = row_id_of(&p, parity).map_or(String::new(), |i| i.to_string());
            Output::Text(format!("delta={delta},parity={parity},p={p},id={id}\n"))
        }
        Command::Factor { n, delta, method, v, budget } => {
            let method = if delta.is_some() { FactorMethod::Quadratic } else { method };
            match method {
                FactorMethod::Quadratic => {
                    let d = delta.ok_or_else(|| Error::Config("--delta is required for the quadratic method".into()))?;
                    factor_output(quadratic_factor(&n, &d), &n)
                }
                FactorMethod::Zone0 => factor_output(factor_zone0(&n, &registry), &n),
                FactorMethod::Scan => factor_output(factor_scan(&n, &default_schedule(&v), budget, &registry)?.result, &n),
                FactorMethod::Auto => {
                    let hit = match factor_zone0(&n, &registry) {
                        Some(r) => Some(r),
                        None => factor_scan(&n, &default_schedule(&v), budget, &registry)?.result,
                    };
                    factor_output(hit, &n)
                }
            }
        }
        Command::Neighbors { n, dials } => {
            let ranges = neighbor_ranges(&n, dials)?;
            Output::Text(lines(
                "which,lo,hi",
                ranges.iter().map(|r| {
                    let which = match r.which {
                        Neighbor::Previous => "previous",
                        Neighbor::Next => "next",
                    };
                    format!("{which},{},{}", r.lo, r.hi)
                }),
            ))
        }
        Command::Connect { n, dials } => {
            let s = od_connect_step(&n, dials)?;
            Output::Text(format!(
                "n={},d1={},od1={},od2={},od3={},od4={},df4={},d1_next={},od1_next={},od2_next={},od3_next={},od4_next={},n_next={}\n",
                s.n, s.d1, s.od1, s.od2, s.od3, s.od4, s.df4, s.d1_next, s.od1_next, s.od2_next, s.od3_next, s.od4_next, s.n_next
            ))
        }
        Command::Reflect { series, rows } => {
            let data = generate(&series.spec()?, Limit::Rows(rows))?;
            let marks = reflection_scan(&data);
            if marks.is_empty() {
                return Ok(Output::NoResult("no reflection marks".into()));
            }
            Output::Text(lines(
                "x,y,gap,center_start,center_end,span",
                marks.iter().map(|m| format!("{},{},{},{},{},{}", m.x, m.y, m.gap, m.center_ids.0, m.center_ids.1, m.span)),
            ))
        }
        Command::Od6Search { n, dials, direction, budget, target, trial_bound } => {
            let found = od6_search(&n, dials, direction, budget, target, trial_bound)?;
            if found.is_empty() {
                return Ok(Output::NoResult(format!("no od6 match for n={n}")));
            }
            let join = |v: &[Int]| v.iter().map(Int::to_string).collect::<Vec<_>>().join(";");
            Output::Text(lines(
                "m,od6,deltas,shared",
                found.iter().map(|c| format!("{},{},{},{}", c.m, c.od6, join(&c.deltas), join(&c.shared))),
            ))
        }
        Command::Interdelta { known_delta, id, dials, n } => {
            let rep = inter_delta_verify(&known_delta, id, dials, &n)?;
            if rep.unknown.is_empty() {
                return Ok(Output::NoResult(format!("no inter-delta hit for n={n}")));
            }
            let known = rep.known.iter().map(|k| format!("known,{},{},{known_delta},,{id}", k.deck, k.value));
            let unknown = rep.unknown.iter().map(|h| format!("unknown,{},{},{},{},{}", h.deck, h.value, h.delta, h.p, h.id));
            Output::Text(lines("role,deck,value,delta,p,id", known.chain(unknown)))
        }
        Command::Equilibrium { delta, parity, length } => {
            let rows = equilibrium_table(&delta, parity, length)?;
            Output::Text(csv_bytes(|b| write_equilibrium_csv(&rows, b))?)
        }
        Command::Gec { start, end, parity, compare } => {
            let stats = gec_growth(&start, &end, parity, compare.into())?;
            Output::Text(csv_bytes(|b| write_gec_csv(&stats, b))?)
        }
        Command::TrapdoorEncrypt { delta, message, integer, codec, trace } => {
            let params = TrapdoorParams::new(delta.clone())?;
            let (c, k, t) = match (message, integer) {
                (_, Some(p)) => encrypt_integer(&p, &params)?,
                (Some(m), None) => encrypt(m.as_bytes(), &params, codec.into())?,
                (None, None) => return Err(Error::Config("give --message or --integer".into())),
            };
            let mut text = KeyFile { delta, ciphertext: c.od6, private: k.constant }.to_string();
            if trace {
                for (name, v) in t.entries() {
                    text.push_str(&format!("trace.{name}={v}\n"));
                }
            }
            Output::Text(text)
        }
        Command::TrapdoorDecrypt { key, delta, ciphertext, private, codec, integer } => {
            let kf = match key {
                Some(path) => fs::read_to_string(path)?.parse::<KeyFile>()?,
                None => KeyFile {
                    delta: delta.ok_or_else(|| Error::Config("missing --delta".into()))?,
                    ciphertext: ciphertext.ok_or_else(|| Error::Config("missing --ciphertext".into()))?,
                    private: private.ok_or_else(|| Error::Config("missing --private".into()))?,
                },
            };
            let params = TrapdoorParams::new(kf.delta)?;
            let c = Ciphertext { od6: kf.ciphertext };
            let k = TrapdoorPrivateKey { constant: kf.private };
            if integer {
                Output::Text(format!("p={}\n", decrypt_integer(&c, &k, &params)?))
            } else {
                let bytes = decrypt(&c, &k, &params, codec.into())?;
                Output::Text(format!("message={}\n", String::from_utf8_lossy(&bytes)))
            }
        }
        Command::GoldenTables { dir, tables } => Output::Files(golden_tables(&dir, tables.as_deref())?),
        Command::PlotData { figure, delta, parity, dials } => {
            let fig: Figure = figure.into();
            let mut params = PlotParams::for_figure(fig);
            if let Some(d) = delta {
                params.deltas = d;
            }
            if let Some(p) = parity {
                params.parity = p;
            }
            if let Some(d) = dials {
                params.dials = d;
            }
            let pts = plot_data(fig, &params)?;
            Output::Text(csv_bytes(|b| write_points(&pts, b))?)
        }
    })
}

/// Aligned columns for CSV, one pair per line for `key=value` output.
pub fn prettify(text: &str) -> String {
    let first = text.lines().next().unwrap_or("");
    if first.contains('=') {
        let pairs: Vec<(&str, &str)> = text
            .lines()
            .flat_map(|l| l.split(','))
            .filter_map(|kv| kv.split_once('='))
            .collect();
        let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        return pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect();
    }
    let mut rd = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
    let rows: Vec<Vec<String>> = rd
        .records()
        .filter_map(|r| r.ok())
        .map(|r| r.iter().map(str::to_string).collect())
        .collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = widths[i])).collect();
            format!("{}\n", cells.join("  ").trim_end())
        })
        .collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Csv(_) => EXIT_INTERNAL,
        Error::NoClosedForm(_) | Error::Step(_) => EXIT_NO_RESULT,
        _ => EXIT_USAGE,
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("DELTASIEVE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second call in the same process finds the pool already built.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn write_out(cli_out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match cli_out {
        Some(path) => {
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, text)?;
            fs::rename(&tmp, path)?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parse `args` (including the program name) and run the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    configure_threads();
    let (out, pretty) = (cli.out.clone(), cli.pretty);
    let result = execute(cli.command).and_then(|o| match o {
        Output::Text(t) => {
            let t = if pretty { prettify(&t) } else { t };
            write_out(&out, &t, stdout).map(|_| EXIT_OK)
        }
        Output::Files(paths) => {
            let t: String = paths.iter().map(|p| format!("{}\n", p.display())).collect();
            write_out(&out, &t, stdout).map(|_| EXIT_OK)
        }
        Output::NoResult(msg) => {
            let _ = writeln!(stderr, "{msg}");
            Ok(EXIT_NO_RESULT)
        }
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Run against the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("deltasieve").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn factor_zone0() {
        let (code, out, _) = call(&["factor", "--n", "3848"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=3848,p=52,q=74,delta=22,method=zone0\n");
    }

    #[test]
    fn series_table_one() {
        let (code, out, _) = call(&["series", "--delta", "12", "--parity", "odd", "--dials", "0,-1,2,2", "--rows", "8"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 9);
    }

    #[test]
    fn negative_dials_and_usage_errors() {
        assert_eq!(call(&["first-p", "--delta", "22", "--dials", "-1,0,2,2"]).0, 0);
        assert_eq!(call(&["nosuch"]).0, EXIT_USAGE);
        assert_eq!(call(&["series", "--delta", "12", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["plot-data", "--figure", "histogram"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn trapdoor_round_trip() {
        let (code, out, _) = call(&["trapdoor-encrypt", "--delta", "137136", "--message", "AUM"]);
        assert_eq!(code, 0);
        assert_eq!(out, "delta=137136\nciphertext=168623\nprivate=-5522773392982230560\n");
        let (code, out, _) =
            call(&["trapdoor-decrypt", "--delta", "137136", "--ciphertext", "168623", "--private", "-5522773392982230560"]);
        assert_eq!(code, 0);
        assert_eq!(out, "message=AUM\n");
    }

    #[test]
    fn miss_is_exit_one() {
        assert_eq!(call(&["factor", "--n", "3848", "--delta", "10"]).0, EXIT_NO_RESULT);
    }

    #[test]
    fn pretty_key_values() {
        assert_eq!(prettify("n=1,delta=22\n"), "n      1\ndelta  22\n");
    }
}
