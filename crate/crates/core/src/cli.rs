//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::delpezzo::{
    build_family, build_family_forced, code_report, code_reports, is_admissible, FamilyId, ReportOptions,
};
use crate::distance::{min_distance_exhaustive, SearchOptions};
use crate::elliptic::{nq1, optimal_search, WeierstrassCurve};
use crate::report::{
    curve_table_row, emit_bch_table, emit_curve_table, emit_pairs, emit_parameter_table, emit_report,
    emit_small_q_table, Format,
};
use crate::tables::reference_tables;
use crate::verify::{run_suite, search_work, Suite, VerifyOptions, TABLE_QS, WORK_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "toric-codes", version, about = "Non-split toric cyclic codes and their elliptic-curve bounds")]
struct Cli {
    /// Worker threads for the exhaustive searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[arg(long)]
    q: u64,
    /// Build even when q is below the verified range (results marked unverified).
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one code and report its parameters.
    Code {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also compute the exact minimum distance.
        #[arg(long)]
        mindist: bool,
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
    /// Exact minimum distance by exhaustive search.
    Mindist {
        #[command(flatten)]
        family: FamilyArgs,
        /// Allow searches above the default work limit.
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
    /// Elliptic-curve computations.
    Ec {
        #[command(subcommand)]
        command: EcCommand,
    },
    /// Recompute the reference tables from scratch.
    Tables {
        #[arg(value_enum)]
        which: TableId,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
        #[arg(long)]
        slow: bool,
    },
    /// Compare computed values against the reference ones.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 9)]
        max_q: u64,
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
}

#[derive(Subcommand, Debug)]
enum EcCommand {
    /// Count points on a curve (the tabulated optimal curve unless --coeffs is given).
    Count {
        #[arg(long)]
        q: u64,
        /// a1,a2,a3,a4,a6 as field-element encodings.
        #[arg(long, value_delimiter = ',')]
        coeffs: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
    /// Brute-force the maximal point count over all curves.
    Optimal {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
    /// The optimal-curve table.
    Table2 {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableId {
    #[value(name = "2")]
    Curves,
    #[value(name = "3")]
    Parameters,
    #[value(name = "4")]
    Bch,
    #[value(name = "5")]
    C3,
    #[value(name = "6")]
    C4,
    All,
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: crate::delpezzo::FamilyError| e.to_string())
}

/// Failure modes of a subcommand.
enum Outcome {
    Usage(String),
    Failed(String),
}

impl<E: std::error::Error> From<E> for Outcome {
    fn from(e: E) -> Self {
        Outcome::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut output = String::new();
    let result = dispatch(&cli, &mut output);
    let status = match &result {
        Ok(()) => EXIT_OK,
        Err(Outcome::Failed(_)) => EXIT_FAILED,
        Err(Outcome::Usage(_)) => EXIT_USAGE,
    };
    if let Err(Outcome::Usage(msg) | Outcome::Failed(msg)) = &result {
        let _ = writeln!(stderr, "error: {msg}");
    }
    match &cli.out {
        Some(path) if !output.is_empty() => {
            if let Err(e) = std::fs::write(path, &output) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        _ => {
            let _ = stdout.write_all(output.as_bytes());
        }
    }
    status
}

fn search_options(threads: Option<usize>) -> SearchOptions {
    SearchOptions { threads, ..SearchOptions::default() }
}

fn gate(q: u64, k: usize, n: usize, slow: bool) -> Result<(), Outcome> {
    let work = search_work(q, k, n);
    if work > WORK_LIMIT && !slow {
        return Err(Outcome::Usage(format!(
            "exhaustive search needs about {work} evaluations (limit {WORK_LIMIT}); pass --slow to run it"
        )));
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), Outcome> {
    match &cli.command {
        Command::Code { family, mindist, slow, emit } => {
            let code = build(family)?;
            let distance = if *mindist {
                gate(family.q, code.k(), code.n(), *slow)?;
                Some(search_options(cli.threads))
            } else {
                None
            };
            let opts = ReportOptions { force: family.force, distance };
            let report = code_report(family.family, family.q, &opts)?;
            out.push_str(&emit_report(&report, *emit));
        }
        Command::Mindist { family, slow, emit } => {
            let code = build(family)?;
            gate(family.q, code.k(), code.n(), *slow)?;
            let r = min_distance_exhaustive(&code, &search_options(cli.threads))?;
            let witness: Vec<String> = r.witness.iter().map(u32::to_string).collect();
            out.push_str(&emit_pairs(
                &[
                    ("family", family.family.to_string()),
                    ("q", family.q.to_string()),
                    ("n", code.n().to_string()),
                    ("k", code.k().to_string()),
                    ("d", r.d.to_string()),
                    ("exact", r.exact.to_string()),
                    ("messages", r.messages.to_string()),
                    ("witness", format!("[{}]", witness.join(","))),
                    ("verified", is_admissible(family.family, family.q).to_string()),
                ],
                *emit,
            ));
        }
        Command::Ec { command } => ec(command, out)?,
        Command::Tables { which, emit, slow } => tables(*which, *emit, *slow, cli.threads, out)?,
        Command::Verify { suite, max_q, slow, emit } => {
            let opts = VerifyOptions { max_q: *max_q, slow: *slow, threads: cli.threads };
            let v = run_suite(*suite, &opts)?;
            match emit {
                Format::Json => {
                    out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
                    out.push('\n');
                }
                _ => out.push_str(&v.to_text()),
            }
            if !v.passed {
                return Err(Outcome::Failed("verification failed".to_string()));
            }
        }
    }
    Ok(())
}

fn build(args: &FamilyArgs) -> Result<crate::cyclic::CyclicCode, Outcome> {
    let code = if args.force { build_family_forced(args.family, args.q)? } else { build_family(args.family, args.q)? };
    Ok(code)
}

fn ec(command: &EcCommand, out: &mut String) -> Result<(), Outcome> {
    let refs = reference_tables();
    match command {
        EcCommand::Count { q, coeffs, emit } => {
            let curve = match coeffs {
                Some(c) => {
                    let field = crate::finite_field::field_of_order(*q)?;
                    if c.len() != 5 {
                        return Err(Outcome::Usage(format!("--coeffs needs 5 values, got {}", c.len())));
                    }
                    if c.iter().any(|&x| !field.contains(x)) {
                        return Err(Outcome::Usage(format!("coefficients must be encodings below {q}")));
                    }
                    WeierstrassCurve::new(&field, [c[0], c[1], c[2], c[3], c[4]])?
                }
                None => {
                    let row = refs
                        .curve(*q)
                        .ok_or_else(|| Outcome::Usage(format!("no tabulated curve for q = {q}; pass --coeffs")))?;
                    WeierstrassCurve::from_ints(*q, row.coeffs)?
                }
            };
            let s = curve.stats();
            let [a1, a2, a3, a4, a6] = curve.coefficients();
            out.push_str(&emit_pairs(
                &[
                    ("q", q.to_string()),
                    ("a1", a1.to_string()),
                    ("a2", a2.to_string()),
                    ("a3", a3.to_string()),
                    ("a4", a4.to_string()),
                    ("a6", a6.to_string()),
                    ("count", s.count.to_string()),
                    ("trace", s.trace.to_string()),
                    ("j", s.j.to_string()),
                    ("supersingular", s.supersingular.to_string()),
                ],
                *emit,
            ));
        }
        EcCommand::Optimal { q, emit } => {
            let r = optimal_search(*q)?;
            let js: Vec<String> = r.j_invariants.iter().map(u32::to_string).collect();
            out.push_str(&emit_pairs(
                &[
                    ("q", q.to_string()),
                    ("curves", r.curves.to_string()),
                    ("max_count", r.max_count.to_string()),
                    ("nq1", nq1(*q)?.to_string()),
                    ("maximizers", r.maximizers.len().to_string()),
                    ("j_invariants", format!("[{}]", js.join(","))),
                    ("unique_j", r.unique_j().to_string()),
                ],
                *emit,
            ));
        }
        EcCommand::Table2 { q, emit } => {
            let rows = refs
                .curves
                .iter()
                .filter(|r| q.is_none_or(|q| r.q == q))
                .map(curve_table_row)
                .collect::<Result<Vec<_>, _>>()?;
            out.push_str(&emit_curve_table(&rows, *emit));
        }
    }
    Ok(())
}

fn tables(which: TableId, emit: Format, slow: bool, threads: Option<usize>, out: &mut String) -> Result<(), Outcome> {
    let selected: Vec<TableId> = match which {
        TableId::All => vec![TableId::Curves, TableId::Parameters, TableId::Bch, TableId::C3, TableId::C4],
        one => vec![one],
    };
    for (i, table) in selected.into_iter().enumerate() {
        if i > 0 && emit == Format::Text {
            out.push('\n');
        }
        match table {
            TableId::Curves => {
                let rows = reference_tables().curves.iter().map(curve_table_row).collect::<Result<Vec<_>, _>>()?;
                out.push_str(&emit_curve_table(&rows, emit));
            }
            TableId::Parameters | TableId::Bch => {
                let pairs: Vec<(FamilyId, u64)> = FamilyId::ALL
                    .into_iter()
                    .flat_map(|f| TABLE_QS.into_iter().filter(move |&q| q >= f.min_q()).map(move |q| (f, q)))
                    .collect();
                let mut reports = Vec::new();
                for (f, q) in pairs {
                    let code = build_family(f, q)?;
                    let within = slow || search_work(q, code.k(), code.n()) <= WORK_LIMIT;
                    let opts = ReportOptions { force: false, distance: within.then(|| search_options(threads)) };
                    reports.push(code_report(f, q, &opts)?);
                }
                out.push_str(&if table == TableId::Parameters {
                    emit_parameter_table(&reports, emit)
                } else {
                    emit_bch_table(&reports, emit)
                });
            }
            TableId::C3 | TableId::C4 => {
                let family = if table == TableId::C3 { FamilyId::C3 } else { FamilyId::C4 };
                let pairs: Vec<(FamilyId, u64)> =
                    TABLE_QS.into_iter().filter(|&q| q >= family.min_q()).map(|q| (family, q)).collect();
                let opts = ReportOptions { force: false, distance: Some(search_options(threads)) };
                let reports = code_reports(&pairs, &opts)?;
                out.push_str(&emit_small_q_table(family, &reports, emit));
            }
            TableId::All => unreachable!("expanded above"),
        }
    }
    Ok(())
}
