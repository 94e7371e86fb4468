//! The `ncschur` command-line tool.
//!
//! [`run`] parses arguments, executes one verb and writes either a human
//! summary or stable `key=value` lines (`--porcelain`). Exit codes: 0 on
//! success, 1 on domain errors, 2 on usage errors.

mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use ncschur::colouring::DEFAULT_NODE_BUDGET;
use ncschur::rational::parse_fraction;
use ncschur::Rational;

pub use report::Report;

/// Default node budget per group for `trend`.
pub const TREND_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "ncschur",
    version,
    about = "Commuting probability, non-commuting Schur numbers and corners in finite groups"
)]
pub struct Cli {
    /// Emit one stable key=value pair per line.
    #[arg(long, global = true)]
    pub porcelain: bool,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, abelian flag, class count and c(G).
    Info { group: String },
    /// Commuting pairs counted directly and via conjugacy classes.
    Cprob { group: String },
    /// Quadruple counts for each class of a cover.
    Quads {
        group: String,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Exhaustive search for the non-commuting Schur number.
    Schur {
        group: String,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Build a quadruple-avoiding cover from small conjugacy classes.
    CoverBuild {
        group: String,
        /// Defaults to c(G).
        #[arg(long, value_parser = parse_rational)]
        epsilon: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        eta: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        nu: Option<Rational>,
        /// Write the cover here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a cover avoids non-commuting quadruples.
    CoverCheck {
        group: String,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Corner statistic and triangle count of a pair set.
    Corners {
        group: String,
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Extract a colour class rich in quadruples.
    Witness {
        group: String,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        trials: u64,
        /// Shift strategy: sampled or exhaustive.
        #[arg(long, default_value = "sampled")]
        shifts: String,
    },
    /// c(G), cover size and k(G) along a group family.
    Trend {
        #[arg(long)]
        family: String,
        /// `a..b` (inclusive) or a comma list such as `3,5,7`.
        #[arg(long, value_parser = parse_range)]
        range: ParamRange,
        #[arg(long, default_value_t = TREND_NODE_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// List builtin group families.
    Catalog,
}

/// Family parameters for `trend`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamRange {
    /// Inclusive; members the family rejects are skipped.
    Span(u64, u64),
    /// Every member must be valid.
    List(Vec<u64>),
}

impl ParamRange {
    pub fn values(&self) -> Vec<u64> {
        match self {
            Self::Span(a, b) => (*a..=*b).collect(),
            Self::List(v) => v.clone(),
        }
    }
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    parse_fraction(text).ok_or_else(|| format!("expected a fraction p/q, got {text:?}"))
}

fn parse_range(text: &str) -> Result<ParamRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad number {t:?} in range"))
    };
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range {text:?}"));
        }
        Ok(ParamRange::Span(a, b))
    } else {
        Ok(ParamRange::List(
            text.split(',').map(num).collect::<Result<_, _>>()?,
        ))
    }
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let exec = || commands::execute(&cli.command);
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build()
        {
            Ok(pool) => pool.install(exec),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {j} worker threads: {e}");
                return 1;
            }
        },
        None => exec(),
    };
    match result {
        Ok(report) => {
            if report.write(cli.porcelain, out).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
