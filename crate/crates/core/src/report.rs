//! Rendering of code reports and curve tables as text, JSON or CSV.
//! Output is deterministic: identical inputs give identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::delpezzo::{CodeReport, FamilyId};
use crate::elliptic::{nq1, CurveError, WeierstrassCurve};
use crate::tables::{reference_tables, CurveRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub const REPORT_COLUMNS: [&str; 14] = [
    "family",
    "q",
    "n",
    "k",
    "d_star",
    "b",
    "d_lower",
    "d_exact",
    "delta",
    "lcd",
    "bch_identity",
    "conjecture_consistent",
    "d_minus_dstar_bound",
    "verified",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

/// Text-table cell; `-` marks a search that was not run.
fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn report_fields(r: &CodeReport) -> [String; 14] {
    [
        r.family.to_string(),
        r.q.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        r.d_star.to_string(),
        r.b.to_string(),
        r.d_lower.to_string(),
        opt(&r.d_exact),
        opt(&r.delta),
        r.lcd.to_string(),
        r.bch_identity.to_string(),
        opt(&r.conjecture_consistent),
        r.d_minus_dstar_bound.to_string(),
        r.verified.to_string(),
    ]
}

fn write_csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by " | ".
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 3 * widths.len().saturating_sub(1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.clone()));
        out.push('\n');
    }
    out
}

pub fn emit_reports(reports: &[CodeReport], format: Format) -> String {
    match format {
        Format::Json => json(reports),
        Format::Csv => write_csv(REPORT_COLUMNS, reports.iter().map(report_fields)),
        Format::Text => {
            let rows: Vec<Vec<String>> = reports.iter().map(|r| report_fields(r).to_vec()).collect();
            text_table(&REPORT_COLUMNS, &rows)
        }
    }
}

pub fn emit_report(report: &CodeReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        _ => emit_reports(std::slice::from_ref(report), format),
    }
}

/// q | n | k | d | LB(d) for C3 or C4 in text; full report rows otherwise.
pub fn emit_small_q_table(family: FamilyId, reports: &[CodeReport], format: Format) -> String {
    if format != Format::Text {
        return emit_reports(reports, format);
    }
    let tables = reference_tables();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let lb = tables.small_q(family, r.q).map(|row| row.lb.to_string()).unwrap_or_default();
            vec![r.q.to_string(), r.n.to_string(), r.k.to_string(), cell(&r.d_exact), lb]
        })
        .collect();
    let mut out = format!("The code {family} for small q\n");
    out.push_str(&text_table(&["q", "n", "k", "d", "LB(d)"], &rows));
    out
}

/// The parameter table: n, k, d (bound and exact), restriction, δ.
pub fn emit_parameter_table(reports: &[CodeReport], format: Format) -> String {
    if format != Format::Text {
        return emit_reports(reports, format);
    }
    let tables = reference_tables();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let fam = tables.family(r.family);
            vec![
                r.family.to_string(),
                r.q.to_string(),
                format!("{} = {}", fam.n, r.n),
                r.k.to_string(),
                format!("{} = {}", fam.d, r.d_lower),
                cell(&r.d_exact),
                fam.restriction.to_string(),
                format!("{} ; computed {}", fam.delta, cell(&r.delta)),
            ]
        })
        .collect();
    text_table(&["code", "q", "n", "k", "d", "d (exhaustive)", "restriction", "delta"], &rows)
}

/// The BCH table: h(x), d*, b, d - d*, LCD.
pub fn emit_bch_table(reports: &[CodeReport], format: Format) -> String {
    if format != Format::Text {
        return emit_reports(reports, format);
    }
    let tables = reference_tables();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let fam = tables.family(r.family);
            let diff = cell(&r.d_exact.map(|d| d as i64 - r.d_star as i64));
            vec![
                r.family.to_string(),
                r.q.to_string(),
                fam.h.to_string(),
                format!("{} = {}", fam.d_star, r.d_star),
                format!("{} = {}", fam.b, r.b),
                format!("{} ; computed {}", fam.d_minus_d_star, diff),
                if r.lcd { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    text_table(&["code", "q", "h(x)", "d*", "b", "d - d*", "LCD"], &rows)
}

/// Computed invariants of one optimal curve next to the reference ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveTableRow {
    pub q: u64,
    pub nq1: u64,
    pub equation: String,
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub a4: u32,
    pub a6: u32,
    pub count: u64,
    pub trace: i64,
    pub j: u32,
    pub j_tag: Option<i64>,
    pub supersingular: bool,
}

const CURVE_COLUMNS: [&str; 13] =
    ["q", "nq1", "equation", "a1", "a2", "a3", "a4", "a6", "count", "trace", "j", "j_tag", "supersingular"];

/// Tags a residue with the small integer it represents, if it is one of 0, 1, 1728.
pub fn j_tag(j: u32, p: u32) -> Option<i64> {
    [0i64, 1, 1728].into_iter().find(|&v| v.rem_euclid(p as i64) == j as i64)
}

pub fn curve_table_row(row: &CurveRow) -> Result<CurveTableRow, CurveError> {
    let curve = WeierstrassCurve::from_ints(row.q, row.coeffs)?;
    let stats = curve.stats();
    let [a1, a2, a3, a4, a6] = curve.coefficients();
    Ok(CurveTableRow {
        q: row.q,
        nq1: nq1(row.q)?,
        equation: row.equation.to_string(),
        a1,
        a2,
        a3,
        a4,
        a6,
        count: stats.count,
        trace: stats.trace,
        j: stats.j,
        j_tag: j_tag(stats.j, curve.field().characteristic()),
        supersingular: stats.supersingular,
    })
}

pub fn emit_curve_table(rows: &[CurveTableRow], format: Format) -> String {
    let fields = |r: &CurveTableRow| {
        [
            r.q.to_string(),
            r.nq1.to_string(),
            r.equation.clone(),
            r.a1.to_string(),
            r.a2.to_string(),
            r.a3.to_string(),
            r.a4.to_string(),
            r.a6.to_string(),
            r.count.to_string(),
            r.trace.to_string(),
            r.j.to_string(),
            opt(&r.j_tag),
            r.supersingular.to_string(),
        ]
    };
    match format {
        Format::Json => json(rows),
        Format::Csv => write_csv(CURVE_COLUMNS, rows.iter().map(fields)),
        Format::Text => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let j = match r.j_tag {
                        Some(t) if t != r.j as i64 => format!("{} ({t})", r.j),
                        _ => r.j.to_string(),
                    };
                    vec![
                        r.q.to_string(),
                        r.nq1.to_string(),
                        r.equation.clone(),
                        r.count.to_string(),
                        j,
                        if r.supersingular { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            text_table(&["q", "N_q(1)", "curve", "#E(F_q)", "j", "supersingular"], &body)
        }
    }
}

/// Free-form key/value rendering for one-off results.
pub fn emit_pairs(pairs: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = pairs
                .iter()
                .map(|(k, v)| {
                    let value = serde_json::from_str(v).unwrap_or_else(|_| serde_json::Value::String(v.clone()));
                    (k.to_string(), value)
                })
                .collect();
            json(&map)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(pairs.iter().map(|p| p.0)).expect("writing to memory");
            w.write_record(pairs.iter().map(|p| p.1.as_str())).expect("writing to memory");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in pairs {
                let _ = writeln!(out, "{k}: {v}");
            }
            out
        }
    }
}
