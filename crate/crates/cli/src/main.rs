//! `pigeon`: generate pigeonhole formulas and DRAT proofs, check proofs, and
//! compare proof lengths.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pigeon_core::counts::{count_cook, count_cook_breakdown, count_ours, count_ours_breakdown};
use pigeon_core::dimacs::{parse_dimacs_with_warnings, write_dimacs};
use pigeon_core::proof_cook::write_cook;
use pigeon_core::proof_ours::write_ours;
use pigeon_core::{
    parse_drat, php_amo, php_standard, CheckOptions, Checker, DratWriter, GenOptions, ProofSink, Verdict,
};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "pigeon", version, about = "Pigeonhole principle DRAT proofs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Encoding {
    Standard,
    Amo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Style {
    Ours,
    Cook,
}

impl Style {
    fn name(self) -> &'static str {
        match self {
            Style::Ours => "ours",
            Style::Cook => "cook",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write PHP(n) as DIMACS CNF.
    GenCnf {
        n: usize,
        #[arg(long, value_enum, default_value = "standard")]
        encoding: Encoding,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a DRAT proof of PHP(n).
    GenProof {
        n: usize,
        #[arg(long, value_enum, default_value = "ours")]
        style: Style,
        /// Also emit deletion lines.
        #[arg(long)]
        deletions: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a DRAT proof against a DIMACS formula.
    Check {
        cnf: PathBuf,
        proof: PathBuf,
        /// Reject deletions of clauses that are not present.
        #[arg(long)]
        strict_deletions: bool,
    },
    /// Print the number of clauses a proof adds.
    Count {
        n: u64,
        #[arg(long, value_enum, default_value = "ours")]
        style: Style,
        /// Print the per-iteration breakdown.
        #[arg(long)]
        breakdown: bool,
    },
    /// Write proof lengths as CSV for n in [2, n_max], optionally verifying small proofs.
    Bench {
        n_max: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "ours,cook")]
        styles: Vec<Style>,
        /// Generate and check proofs for n up to this bound.
        #[arg(long, default_value_t = 0)]
        verify_up_to: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// Failures mapped to exit code 2.
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn gen_cnf(n: usize, encoding: Encoding, out: Option<&Path>) -> Result<()> {
    let formula = match encoding {
        Encoding::Standard => php_standard(n)?,
        Encoding::Amo => php_amo(n)?,
    };
    write_dimacs(&formula, output(out)?)?;
    Ok(())
}

fn write_proof(n: usize, style: Style, options: GenOptions, sink: &mut impl ProofSink) -> Result<()> {
    match style {
        Style::Ours => write_ours(n, options, sink)?,
        Style::Cook => write_cook(n, options, sink)?,
    }
    Ok(())
}

fn gen_proof(n: usize, style: Style, deletions: bool, out: Option<&Path>) -> Result<()> {
    // validate before creating the output file
    if n < 2 {
        bail!("n must be at least 2, got {n}");
    }
    let mut writer = DratWriter::new(output(out)?);
    write_proof(n, style, GenOptions { emit_deletions: deletions }, &mut writer)?;
    writer.finish().context("writing proof")?;
    Ok(())
}

fn check(cnf: &Path, proof: &Path, strict_deletions: bool) -> Result<Verdict> {
    let cnf_text = std::fs::read(cnf).with_context(|| format!("reading {}", cnf.display()))?;
    let (formula, warnings) =
        parse_dimacs_with_warnings(&cnf_text).with_context(|| format!("parsing {}", cnf.display()))?;
    for w in warnings {
        eprintln!("warning: {}: {w}", cnf.display());
    }
    let proof_text = std::fs::read(proof).with_context(|| format!("reading {}", proof.display()))?;
    let proof = parse_drat(&proof_text).with_context(|| format!("parsing {}", proof.display()))?;

    let start = Instant::now();
    let mut checker = Checker::new(&formula, CheckOptions { strict_deletions });
    for line in &proof.lines {
        if checker.apply(line).is_some() {
            break;
        }
    }
    let verdict = checker.finish();
    let stats = checker.stats();
    eprintln!(
        "checked {} lines in {:.3?}: {} RUP, {} RAT, {} deletions",
        checker.lines_seen(),
        start.elapsed(),
        stats.rup,
        stats.rat,
        stats.deletions
    );
    if stats.missing_deletions > 0 {
        eprintln!("warning: {} deleted clauses were not present", stats.missing_deletions);
    }
    Ok(verdict)
}

fn count(n: u64, style: Style, breakdown: bool) -> Result<()> {
    let mut out = io::stdout().lock();
    if !breakdown {
        let total = match style {
            Style::Ours => count_ours(n)?,
            Style::Cook => count_cook(n)?,
        };
        writeln!(out, "{total}")?;
        return Ok(());
    }
    let b = match style {
        Style::Ours => count_ours_breakdown(n)?,
        Style::Cook => count_cook_breakdown(n)?,
    };
    let middle = if style == Style::Ours { "group" } else { "pairs" };
    for it in &b.per_iteration {
        writeln!(
            out,
            "k={}: {} (definitions {}, {middle} {}, alo {})",
            it.k,
            it.total(),
            it.definitions,
            it.group_or_pair,
            it.alo
        )?;
    }
    writeln!(out, "empty: 1")?;
    writeln!(out, "total: {}", b.total)?;
    Ok(())
}

/// Generates and checks one proof without materializing it.
fn verify_streaming(n: usize, style: Style) -> Result<Verdict> {
    let formula = php_standard(n)?;
    let mut checker = Checker::new(&formula, CheckOptions { strict_deletions: true });
    write_proof(n, style, GenOptions { emit_deletions: true }, &mut checker)?;
    Ok(checker.finish())
}

fn bench(n_max: u64, styles: &[Style], verify_up_to: u64, out: Option<&Path>) -> Result<bool> {
    if n_max < 2 {
        bail!("n_max must be at least 2, got {n_max}");
    }
    let mut styles = styles.to_vec();
    styles.sort_by_key(|s| *s as u8);
    styles.dedup();

    let mut csv = output(out)?;
    let header: Vec<&str> = std::iter::once("n").chain(styles.iter().map(|s| s.name())).collect();
    writeln!(csv, "{}", header.join(","))?;
    for n in 2..=n_max {
        let mut row = n.to_string();
        for style in &styles {
            let total = match style {
                Style::Ours => count_ours(n)?,
                Style::Cook => count_cook(n)?,
            };
            row.push(',');
            row.push_str(&total.to_string());
        }
        writeln!(csv, "{row}")?;
    }
    csv.flush()?;

    let jobs: Vec<(u64, Style)> =
        (2..=verify_up_to.min(n_max)).flat_map(|n| styles.iter().map(move |&s| (n, s))).collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(n, style)| {
            let start = Instant::now();
            (n, style, verify_streaming(n as usize, style), start.elapsed())
        })
        .collect();
    let mut all_ok = true;
    for (n, style, verdict, elapsed) in results {
        let verdict = verdict?;
        all_ok &= verdict.is_accepted();
        eprintln!("verify {} n={n}: {verdict} in {elapsed:.3?}", style.name());
    }
    Ok(all_ok)
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::GenCnf { n, encoding, out } => gen_cnf(n, encoding, out.as_deref())?,
        Command::GenProof { n, style, deletions, out } => gen_proof(n, style, deletions, out.as_deref())?,
        Command::Check { cnf, proof, strict_deletions } => {
            let verdict = check(&cnf, &proof, strict_deletions)?;
            println!("{verdict}");
            return Ok(if verdict.is_accepted() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Count { n, style, breakdown } => count(n, style, breakdown)?,
        Command::Bench { n_max, styles, verify_up_to, out } => {
            if !bench(n_max, &styles, verify_up_to, out.as_deref())? {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
