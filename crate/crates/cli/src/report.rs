//! Flat report records and the text, JSON and CSV emitters.

use std::io::Write;

use montesinos_core::{Fraction, PathType, SurfaceReport};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Number;

pub const CSV_COLUMNS: [&str; 9] = ["knot", "type", "slope", "twist", "sheets", "euler", "boundary_components", "essential", "seifert"];

/// One surface, with every exact quantity rendered as a fraction string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub knot: String,
    #[serde(rename = "type")]
    pub system_type: String,
    pub slope: String,
    /// `twist - reference twist`, before reduction.
    pub slope_expression: String,
    /// Display only.
    pub slope_decimal: String,
    pub twist: String,
    pub sheets: Number,
    pub euler: Option<Number>,
    pub boundary_components: Number,
    pub essential: String,
    pub seifert: bool,
    pub paths: Vec<String>,
}

impl ReportRecord {
    pub fn from_report(r: &SurfaceReport) -> Self {
        ReportRecord {
            knot: r.system.knot().to_string(),
            system_type: r.system_type().to_string(),
            slope: r.slope.to_string(),
            slope_expression: format!("{} - ({})", r.twist, r.reference_twist),
            slope_decimal: decimal(&r.slope, 12),
            twist: r.twist.to_string(),
            sheets: number(&r.sheets),
            euler: r.euler.as_ref().map(number),
            boundary_components: number(&r.boundary_components),
            essential: r.essential.to_string(),
            seifert: r.seifert,
            paths: r.system.paths().iter().map(|p| p.to_string()).collect(),
        }
    }
}

fn number(x: &impl ToString) -> Number {
    x.to_string().parse().expect("integers are valid JSON numbers")
}

/// Sorts by slope, then type; with `dedupe`, keeps the first report of each
/// slope.
pub fn order_reports<'a>(reports: impl IntoIterator<Item = &'a SurfaceReport>, types: &[PathType], dedupe: bool) -> Vec<&'a SurfaceReport> {
    let mut out: Vec<_> = reports.into_iter().filter(|r| types.contains(&r.system_type())).collect();
    out.sort_by(|a, b| a.slope.cmp(&b.slope).then(a.system_type().cmp(&b.system_type())));
    if dedupe {
        out.dedup_by(|b, a| a.slope == b.slope);
    }
    out
}

/// `x` to `digits` significant digits, rounded half away from zero. Exact
/// integer arithmetic throughout.
pub fn decimal(x: &Fraction, digits: u32) -> String {
    if x.is_infinite() {
        return "inf".into();
    }
    if x.is_zero() {
        return "0".into();
    }
    let num = x.numer().abs();
    let den = x.denom().clone();
    let ten = BigInt::from(10);
    // 10^e <= |x| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow = |k: i64| ten.pow(k.unsigned_abs() as u32);
    let below = |e: i64| if e >= 0 { num < &den * pow(e) } else { &num * pow(e) < den };
    while below(e) {
        e -= 1;
    }
    while !below(e + 1) {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let (n, d) = if shift >= 0 { (&num * pow(shift), den.clone()) } else { (num.clone(), &den * pow(shift)) };
    let mut scaled: BigInt = (&n * 2 + &d) / (&d * 2);
    if scaled == pow(digits as i64) {
        scaled /= 10;
        e += 1;
    }
    let s = scaled.to_string();
    let mut body = if e >= digits as i64 - 1 {
        format!("{s}{}", "0".repeat((e - (digits as i64 - 1)) as usize))
    } else if e >= 0 {
        let (int, frac) = s.split_at(e as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{s}", "0".repeat((-e - 1) as usize))
    };
    if body.contains('.') {
        body = body.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if x.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

pub fn write_text(out: &mut impl Write, records: &[ReportRecord]) -> std::io::Result<()> {
    for r in records {
        writeln!(
            out,
            "{:<3} slope {} ({})  twist {}  sheets {}  euler {}  components {}  {}{}",
            r.system_type,
            r.slope,
            r.slope_decimal,
            r.twist,
            r.sheets,
            r.euler.as_ref().map_or("-".into(), Number::to_string),
            r.boundary_components,
            r.essential,
            if r.seifert { "  seifert" } else { "" }
        )?;
        for p in &r.paths {
            writeln!(out, "      {p}")?;
        }
    }
    Ok(())
}

pub fn write_json(out: &mut impl Write, records: &[ReportRecord]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}

pub fn write_csv(out: &mut impl Write, records: &[ReportRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record([
            r.knot.clone(),
            r.system_type.clone(),
            r.slope.clone(),
            r.twist.clone(),
            r.sheets.to_string(),
            r.euler.as_ref().map(Number::to_string).unwrap_or_default(),
            r.boundary_components.to_string(),
            r.essential.clone(),
            r.seifert.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
