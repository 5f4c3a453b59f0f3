//! Command implementations behind the `montesinos` binary.

pub mod report;

use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use montesinos_core::family::{self, MemberCheck};
use montesinos_core::oracle::cross_check;
use montesinos_core::surface::system_twist;
use montesinos_core::system::{find_seifert_system, DEFAULT_COMBINATION_CAP};
use montesinos_core::{analyze_knot_capped, Error, Fraction, MontesinosKnot, PathType};
use serde::{Deserialize, Serialize};

use report::{decimal, order_reports, write_csv, write_json, write_text, ReportRecord};

#[derive(Debug, Parser)]
#[command(name = "montesinos", version, about = "Edgepath systems and boundary slopes of Montesinos knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report every candidate surface of a knot, sorted by slope.
    Enumerate {
        /// Comma-separated tangle fractions, e.g. -1/2,2/5,1/11
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Check the slope pair of M(-1/2, 2/5, 1/n) for every odd n in a range.
    VerifyFamily {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
    },
    /// Smallest difference between two distinct slopes.
    PairGap {
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// The Seifert reference system and its twist.
    Seifert {
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    /// Include type II systems (default: I and III).
    #[arg(long, global = true)]
    pub all_types: bool,
    /// One report per distinct slope.
    #[arg(long, global = true)]
    pub dedupe: bool,
    /// Upper bound on skeleton combinations per knot.
    #[arg(long, global = true, default_value_t = DEFAULT_COMBINATION_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    #[arg(long, global = true, hide = true)]
    pub cross_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Options {
    pub fn format(&self) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => Format::Text,
        }
    }

    pub fn types(&self) -> Vec<PathType> {
        if self.all_types {
            vec![PathType::I, PathType::II, PathType::III]
        } else {
            vec![PathType::I, PathType::III]
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Exit 1.
    Verification(String),
    /// Exit 2.
    Usage(String),
    /// Exit 3.
    Cap(String),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) | Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Cap(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::ZeroOverZero
            | Error::Parse(_)
            | Error::IntegerTangle(_)
            | Error::TooFewTangles(_)
            | Error::NotAKnot(_)
            | Error::FamilyIndex(_) => Failure::Usage(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub fn parse_knot(spec: &str) -> Result<MontesinosKnot, Failure> {
    spec.parse().map_err(|e: Error| Failure::Usage(format!("invalid knot {spec:?}: {e}")))
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let o = &cli.options;
    match &cli.command {
        Command::Enumerate { spec } => enumerate(spec, o, out),
        Command::VerifyFamily { from, to } => verify_family(*from, *to, o, out),
        Command::PairGap { spec } => pair_gap(spec, o, out),
        Command::Seifert { spec } => seifert(spec, o, out),
    }
}

pub fn enumerate_records(knot: &MontesinosKnot, o: &Options) -> Result<Vec<ReportRecord>, Failure> {
    let analysis = analyze_knot_capped(knot, o.cap)?;
    Ok(order_reports(&analysis.reports, &o.types(), o.dedupe).into_iter().map(ReportRecord::from_report).collect())
}

fn enumerate(spec: &str, o: &Options, out: &mut impl Write) -> Result<(), Failure> {
    let knot = parse_knot(spec)?;
    let records = enumerate_records(&knot, o)?;
    match o.format() {
        Format::Text => write_text(out, &records)?,
        Format::Json => write_json(out, &records)?,
        Format::Csv => write_csv(out, &records)?,
    }
    if o.cross_check {
        let check = cross_check(&knot, 64)?;
        eprintln!("cross-check: {} combinations, {} solved, {} degenerate", check.combinations, check.solved, check.degenerate);
        if !check.agrees() {
            return Err(Failure::Verification(format!("solver and brute force disagree:\n{}", check.mismatches.join("\n"))));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub n: i64,
    pub pass: bool,
    pub slope: Option<String>,
    pub slope_prime: Option<String>,
    pub gap: Option<String>,
    pub gap_decimal: Option<String>,
    pub reference_twist: String,
    pub sheets: [Option<String>; 2],
    pub euler: [Option<String>; 2],
    pub boundary_components: [Option<String>; 2],
    pub essential: [Option<String>; 2],
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl From<&MemberCheck> for FamilyRow {
    fn from(c: &MemberCheck) -> Self {
        let pick = |f: &dyn Fn(&family::SurfaceCheck) -> Option<String>| [c.first.as_ref().and_then(f), c.second.as_ref().and_then(f)];
        FamilyRow {
            n: c.n,
            pass: c.passed(),
            slope: c.first.as_ref().map(|s| s.slope.to_string()),
            slope_prime: c.second.as_ref().map(|s| s.slope.to_string()),
            gap: c.gap.as_ref().map(Fraction::to_string),
            gap_decimal: c.gap.as_ref().map(|g| decimal(g, 12)),
            reference_twist: c.reference_twist.to_string(),
            sheets: pick(&|s| Some(s.sheets.to_string())),
            euler: pick(&|s| s.euler.as_ref().map(|e| e.to_string())),
            boundary_components: pick(&|s| Some(s.boundary_components.to_string())),
            essential: pick(&|s| Some(s.essential.to_string())),
            failures: c.failures.clone(),
            notes: c.notes.clone(),
        }
    }
}

/// Runs [`family::verify_member`] for every odd `n` in `from..=to`, one
/// thread per member, results in order of `n`.
pub fn family_rows(from: i64, to: i64) -> Result<Vec<FamilyRow>, Failure> {
    if from < 11 || from % 2 == 0 || to % 2 == 0 || to < from {
        return Err(Failure::Usage(format!("need odd 11 <= from <= to, got --from {from} --to {to}")));
    }
    let checks: Vec<Result<MemberCheck, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = (from..=to).step_by(2).map(|n| s.spawn(move || family::verify_member(n))).collect();
        handles.into_iter().map(|h| h.join().expect("family worker panicked")).collect()
    });
    checks.into_iter().map(|c| Ok(FamilyRow::from(&c?))).collect()
}

fn verify_family(from: i64, to: i64, o: &Options, out: &mut impl Write) -> Result<(), Failure> {
    let rows = family_rows(from, to)?;
    match o.format() {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "result", "slope", "slope_prime", "gap", "gap_decimal", "reference_twist"])?;
            for r in &rows {
                let cell = |x: &Option<String>| x.clone().unwrap_or_default();
                w.write_record([
                    r.n.to_string(),
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                    cell(&r.slope),
                    cell(&r.slope_prime),
                    cell(&r.gap),
                    cell(&r.gap_decimal),
                    r.reference_twist.clone(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &rows {
                let cell = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "n={:<3} {}  slopes {}, {}  gap {}  twist_ref {}",
                    r.n,
                    if r.pass { "PASS" } else { "FAIL" },
                    cell(&r.slope),
                    cell(&r.slope_prime),
                    cell(&r.gap),
                    r.reference_twist
                )?;
                for f in &r.failures {
                    writeln!(out, "      failed: {f}")?;
                }
                for note in &r.notes {
                    writeln!(out, "      note: {note}")?;
                }
            }
        }
    }
    let failed: Vec<String> = rows.iter().filter(|r| !r.pass).flat_map(|r| r.failures.iter().map(move |f| format!("n={}: {f}", r.n))).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failed.join("\n")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub knot: String,
    pub gap: Option<String>,
    pub gap_decimal: Option<String>,
    pub pair: Option<[String; 2]>,
}

/// Smallest positive difference between distinct slopes, with the pair.
pub fn minimal_gap(slopes: impl IntoIterator<Item = Fraction>) -> Option<(Fraction, Fraction, Fraction)> {
    let mut s: Vec<Fraction> = slopes.into_iter().collect();
    s.sort();
    s.dedup();
    s.windows(2).map(|w| (&w[1] - &w[0], w[0].clone(), w[1].clone())).min_by(|a, b| a.0.cmp(&b.0))
}

fn pair_gap(spec: &str, o: &Options, out: &mut impl Write) -> Result<(), Failure> {
    let knot = parse_knot(spec)?;
    let analysis = analyze_knot_capped(&knot, o.cap)?;
    let slopes = order_reports(&analysis.reports, &o.types(), false).into_iter().map(|r| r.slope.clone());
    let record = match minimal_gap(slopes) {
        Some((g, a, b)) => GapRecord { knot: knot.to_string(), gap_decimal: Some(decimal(&g, 12)), gap: Some(g.to_string()), pair: Some([a.to_string(), b.to_string()]) },
        None => GapRecord { knot: knot.to_string(), gap: None, gap_decimal: None, pair: None },
    };
    match o.format() {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &record).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["knot", "gap", "gap_decimal", "low", "high"])?;
            let [lo, hi] = record.pair.clone().unwrap_or_default();
            w.write_record([record.knot.clone(), record.gap.clone().unwrap_or_default(), record.gap_decimal.clone().unwrap_or_default(), lo, hi])?;
            w.flush()?;
        }
        Format::Text => match (&record.gap, &record.pair) {
            (Some(g), Some([a, b])) => writeln!(out, "gap {g} ({}) between {a} and {b}", record.gap_decimal.as_deref().unwrap_or(""))?,
            _ => writeln!(out, "no pair")?,
        },
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertRecord {
    pub knot: String,
    pub twist: String,
    pub paths: Vec<String>,
}

fn seifert(spec: &str, o: &Options, out: &mut impl Write) -> Result<(), Failure> {
    let knot = parse_knot(spec)?;
    let sys = find_seifert_system(&knot)?;
    let record = SeifertRecord { knot: knot.to_string(), twist: system_twist(&sys)?.to_string(), paths: sys.paths().iter().map(|p| p.to_string()).collect() };
    match o.format() {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &record).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["knot", "twist", "paths"])?;
            w.write_record([record.knot.clone(), record.twist.clone(), record.paths.join("; ")])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "twist {}", record.twist)?;
            for p in &record.paths {
                writeln!(out, "  {p}")?;
            }
        }
    }
    Ok(())
}
