//! Argument parsing and command dispatch for the `hodge` binary.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when a mathematical
//! self-check fails.

pub mod document;
pub mod format;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::moduli::{HodgeEngine, HodgeReport, Variant};
use document::{BettiDocument, ChiDocument, OutputDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hodge", version, about = "Hodge numbers of moduli spaces of stable bundles on curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: Hodge diamond, Betti numbers and chi(t). Defaults to the full space.
    Compute(QueryArgs),
    /// The chi-characteristic only. Defaults to the fixed-determinant space.
    Chi(QueryArgs),
    /// Betti numbers only. Defaults to the full space.
    Betti(QueryArgs),
    /// Run the identity battery over a range of ranks and genera.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub degree: i64,
    #[arg(long)]
    pub genus: u32,
    #[arg(long, conflicts_with = "full_space")]
    pub fixed_determinant: bool,
    #[arg(long)]
    pub full_space: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Series truncation cap; must be at least twice the full dimension.
    #[arg(long)]
    pub cap: Option<u32>,
    #[arg(long, env = "HODGE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl QueryArgs {
    fn variant(&self, default: Variant) -> Variant {
        if self.fixed_determinant {
            Variant::FixedDeterminant
        } else if self.full_space {
            Variant::Full
        } else {
            default
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub max_rank: u32,
    #[arg(long, default_value_t = 4)]
    pub max_genus: u32,
    #[arg(long, env = "HODGE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

fn engine(cache_dir: &Option<PathBuf>) -> Result<HodgeEngine> {
    match cache_dir {
        Some(dir) => HodgeEngine::with_cache_dir(dir),
        None => Ok(HodgeEngine::new()),
    }
}

fn report(args: &QueryArgs, default: Variant) -> Result<HodgeReport> {
    engine(&args.cache_dir)?.report_with_cap(
        args.rank,
        args.degree,
        args.genus,
        args.variant(default),
        args.cap,
    )
}

fn emit(args: &QueryArgs, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn compute(args: &QueryArgs, stdout: &mut dyn Write) -> Result<i32> {
    let r = report(args, Variant::Full)?;
    let text = match args.format {
        Format::Json => OutputDocument::from_report(&r)?.to_json(),
        Format::Text => format::render_text(&r),
        Format::Latex => format::render_latex(&r),
    };
    emit(args, &text, stdout)?;
    Ok(EXIT_OK)
}

fn chi(args: &QueryArgs, stdout: &mut dyn Write) -> Result<i32> {
    let r = report(args, Variant::FixedDeterminant)?;
    let text = match args.format {
        Format::Json => json(&ChiDocument::from_report(&r)),
        Format::Text => format!("chi = {}\n", r.chi),
        Format::Latex => format!("$\\chi(t) = {}$\n", format::latex_poly(&r.chi)),
    };
    emit(args, &text, stdout)?;
    Ok(EXIT_OK)
}

fn betti(args: &QueryArgs, stdout: &mut dyn Write) -> Result<i32> {
    let r = report(args, Variant::Full)?;
    let text = match args.format {
        Format::Json => json(&BettiDocument::from_report(&r)),
        Format::Text => format!("{}\n", format::betti_line(&r.betti)),
        Format::Latex => {
            let cells: Vec<String> = r.betti.iter().map(|b| b.to_string()).collect();
            format!(
                "\\begin{{tabular}}{{{}}}\n{} \\\\\n\\end{{tabular}}\n",
                "c".repeat(cells.len()),
                cells.join(" & ")
            )
        }
    };
    emit(args, &text, stdout)?;
    Ok(EXIT_OK)
}

fn run_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let engine = engine(&args.cache_dir)?;
    let results = verify::run(&engine, args.max_rank, args.max_genus);
    stdout.write_all(verify::render(&results).as_bytes())?;
    Ok(if results.iter().all(verify::CellResult::passed) {
        EXIT_OK
    } else {
        EXIT_CONSISTENCY
    })
}

/// Runs a parsed command and returns the process exit code. Errors are
/// reported on `stderr`.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Compute(a) => compute(a, stdout),
        Command::Chi(a) => chi(a, stdout),
        Command::Betti(a) => betti(a, stdout),
        Command::Verify(a) => run_verify(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_user_error() {
        EXIT_INPUT
    } else {
        EXIT_CONSISTENCY
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("hodge").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chi_defaults_to_fixed_determinant() {
        let (code, out, _) = invoke(&["chi", "--rank", "2", "--degree", "1", "--genus", "2", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "chi = 1 + t - t^2 - t^3\n");
        let (code, out, _) = invoke(&[
            "chi", "--rank", "2", "--degree", "1", "--genus", "2", "--format", "text", "--full-space",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "chi = 0\n");
    }

    #[test]
    fn input_errors_exit_two() {
        let (code, _, err) = invoke(&["compute", "--rank", "2", "--degree", "2", "--genus", "2"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("not coprime"), "{err}");
        let (code, _, err) = invoke(&["compute", "--rank", "2", "--degree", "1", "--genus", "2", "--cap", "5"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("cap 5"), "{err}");
    }

    #[test]
    fn negative_degrees_parse() {
        let (code, out, _) = invoke(&["betti", "--rank", "2", "--degree", "-1", "--genus", "2", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("betti = [1, 4, 7, 12, 24"), "{out}");
    }
}
