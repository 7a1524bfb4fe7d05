//! `betatab list | show | verify | export`.
//!
//! Exit codes: 0 when everything passes, 1 when some outcome fails,
//! 2 for usage and I/O errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use betatab_core::catalog::{self, IdentityRecord, ParamKind, ParamSpec};
use clap::{Parser, Subcommand, ValueEnum};

use crate::export::catalog_json;
use crate::report::Report;
use crate::verify::{cross_check_consistency, verify_all, RunConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "betatab",
    version,
    about = "Check beta-function integral identities numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every identity id with its group and citation.
    List,
    /// Describe one identity.
    Show { id: String },
    /// Integrate sampled instances and compare with the closed forms.
    #[command(allow_negative_numbers = true)]
    Verify {
        /// Restrict to this id; repeatable. Consistency checks run only
        /// when no id is given.
        #[arg(long = "id", value_name = "ID")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 20)]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Override the per-entry relative tolerance.
        #[arg(long)]
        rtol: Option<f64>,
        #[arg(long, default_value_t = 1e-12)]
        atol: f64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock times (makes reports differ between runs).
        #[arg(long)]
        timings: bool,
    },
    /// Write the roster description as JSON.
    Export {
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

/// Runs the CLI with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::List => list(out),
        Command::Show { id } => show(&id, out),
        Command::Verify {
            ids,
            samples,
            seed,
            rtol,
            atol,
            jobs,
            report,
            format,
            timings,
        } => {
            let mut cfg = RunConfig {
                seed,
                samples_per_entry: samples,
                rtol_override: rtol,
                atol,
                entry_filter: (!ids.is_empty()).then_some(ids),
                timings,
                ..RunConfig::default()
            };
            if let Some(j) = jobs {
                cfg.parallelism = j;
            }
            verify(&cfg, report, format, out)
        }
        Command::Export { out: path } => fs::write(&path, catalog_json())
            .map(|()| EXIT_PASS)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: io::Error) -> String {
    e.to_string()
}

fn list(out: &mut dyn Write) -> Result<i32, String> {
    let mut recs: Vec<&IdentityRecord> = catalog::all_entries().collect();
    recs.sort_by_key(|r| r.id);
    let width = recs.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in recs {
        writeln!(out, "{:<width$}  {}  {}", r.id, r.group, r.citation).map_err(io_err)?;
    }
    Ok(EXIT_PASS)
}

fn range_text(p: &ParamSpec) -> String {
    match p.kind {
        ParamKind::Integer => format!("{}..={}", p.lo, p.hi),
        ParamKind::Real => {
            let open = if p.lo_open { '(' } else { '[' };
            let close = if p.hi_open { ')' } else { ']' };
            let mut s = format!("{open}{}, {}{close}", p.lo, p.hi);
            if !p.exclude.is_empty() {
                let ex: Vec<String> = p.exclude.iter().map(|x| x.to_string()).collect();
                s.push_str(&format!(" excluding {}", ex.join(", ")));
            }
            s
        }
    }
}

fn show(id: &str, out: &mut dyn Write) -> Result<i32, String> {
    let rec = catalog::entry(id).map_err(|e| e.to_string())?;
    let mut s = String::new();
    s.push_str(&format!("{}  (group {})\n", rec.id, rec.group));
    s.push_str(&format!("citation:   {}\n", rec.citation));
    s.push_str(&format!(
        "tolerance:  {} (rtol {:e})\n",
        rec.tolerance.as_str(),
        rec.tolerance.rtol()
    ));
    if rec.abs_tol > 0.0 {
        s.push_str(&format!("abs_tol:    {:e}\n", rec.abs_tol));
    }
    s.push_str("parameters:\n");
    let width = rec
        .domain
        .params
        .iter()
        .map(|p| p.name.len())
        .max()
        .unwrap_or(0);
    for p in rec.domain.params {
        let kind = match p.kind {
            ParamKind::Real => "real",
            ParamKind::Integer => "integer",
        };
        s.push_str(&format!(
            "  {:<width$}  {:<7}  {}\n",
            p.name,
            kind,
            range_text(p)
        ));
    }
    if !rec.domain.relations.is_empty() {
        s.push_str("relations:\n");
        for r in rec.domain.relations {
            s.push_str(&format!("  {}\n", r.text));
        }
    }
    s.push_str(&format!("sampling margin: {}\n", rec.domain.margin));
    out.write_all(s.as_bytes()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

fn verify(
    cfg: &RunConfig,
    report_path: Option<PathBuf>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    cfg.validate()?;
    let start = Instant::now();
    let mut outcomes = verify_all(cfg);
    if cfg.entry_filter.is_none() {
        outcomes.extend(cross_check_consistency(cfg));
    }
    let wall_ms = cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    let report = Report::new(outcomes, wall_ms);
    let mut bytes = Vec::new();
    match format {
        Format::Json => report.write_json_lines(&mut bytes).map_err(io_err)?,
        Format::Text => bytes.extend_from_slice(report.to_text().as_bytes()),
    }
    match report_path {
        Some(path) => {
            fs::write(&path, &bytes)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let m = &report.summary;
            writeln!(
                out,
                "{} outcomes, {} failed; report written to {}",
                m.outcomes,
                m.failures,
                path.display()
            )
            .map_err(io_err)?;
        }
        None => out.write_all(&bytes).map_err(io_err)?,
    }
    Ok(if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}
