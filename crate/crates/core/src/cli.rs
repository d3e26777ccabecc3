//! The `regsc` command line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{BoundFamily, ScQuery};
use crate::dfa::Dfa;
use crate::document::{emit_dfa, emit_dot, parse_document, Automaton};
use crate::harness::{self, SearchMode, DEFAULT_PAIR_BUDGET};
use crate::ops::{Method, OpKind, Operation};
use crate::witness::WitnessFamily;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "regsc",
    version,
    about = "State complexity of reversal and star combined with catenation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Direct,
    Oracle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a member of a witness family.
    Witness {
        #[arg(long, value_parser = parse_family)]
        family: WitnessFamily,
        #[arg(long)]
        m: usize,
        /// Size for second-operand families; defaults to --m.
        #[arg(long)]
        n: Option<usize>,
        /// Letters for the one-state families.
        #[arg(long, default_value_t = 4)]
        sigma: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply a combined operation to two DFA documents.
    Compose {
        #[arg(long, value_parser = parse_op)]
        op: Operation,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
        #[arg(long)]
        minimize: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate a worst-case formula.
    Sc {
        #[arg(long, value_parser = parse_family_bound)]
        op: BoundFamily,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Evaluate the general star-catenation bound at this k1.
        #[arg(long)]
        k1: Option<u32>,
    },
    /// Check witnesses against the formulas over ranges of sizes.
    Verify {
        #[arg(long, value_parser = parse_family_bound)]
        op: BoundFamily,
        /// Inclusive range `A..B` or a single size.
        #[arg(long, value_parser = parse_range)]
        m: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
    },
    /// Find the largest result over all (or sampled) DFA pairs.
    Search {
        #[arg(long, value_parser = parse_op)]
        op: Operation,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: usize,
        /// Sample this many random pairs instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the argmax documents.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        budget: u128,
    },
}

fn parse_family(s: &str) -> Result<WitnessFamily, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_op(s: &str) -> Result<Operation, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_family_bound(s: &str) -> Result<BoundFamily, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected A..B or a number, got {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("range {s:?} must satisfy 1 <= A <= B"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_dfa(path: &Path) -> Result<Dfa, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    match parse_document(&text) {
        Ok(Automaton::Dfa(d)) => Ok(d),
        Ok(Automaton::Nfa(_)) => Err(Failure::Usage(format!(
            "{}: operands must be dfa documents",
            path.display()
        ))),
        Err(e) => Err(Failure::Usage(format!("{}: {e}", path.display()))),
    }
}

fn render(d: &Dfa, format: Format) -> String {
    match format {
        Format::Json => emit_dfa(d),
        Format::Dot => emit_dot(&Automaton::Dfa(d.clone())),
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Witness {
            family,
            m,
            n,
            sigma,
            format,
        } => {
            let size = match family {
                WitnessFamily::RevcatN
                | WitnessFamily::RevcatM1
                | WitnessFamily::StarcatSpecialB
                | WitnessFamily::StarcatB => n.unwrap_or(m),
                _ => m,
            };
            let d = family.build(size, sigma)?;
            write!(out, "{}", render(&d, format)).map_err(io)?;
        }
        Command::Compose {
            op,
            lhs,
            rhs,
            method,
            minimize,
            format,
        } => {
            let a = read_dfa(&lhs)?;
            let b = read_dfa(&rhs)?;
            let method = match method {
                MethodArg::Direct => Method::Direct,
                MethodArg::Oracle => Method::Oracle,
            };
            let d = harness::compose(OpKind { op, method }, &a, &b, minimize)?;
            let minimal = d.minimal_size();
            write!(out, "{}", render(&d, format)).map_err(io)?;
            writeln!(out, "states={} minimal={minimal}", d.state_count()).map_err(io)?;
        }
        Command::Sc { op, m, n, k1 } => {
            let v = ScQuery { op, m, n, k1 }.evaluate()?;
            writeln!(out, "{v}").map_err(io)?;
        }
        Command::Verify { op, m, n } => {
            let mut ok = true;
            for mm in m.0..=m.1 {
                for nn in n.0..=n.1 {
                    let r = harness::verify_witness(op, mm, nn)?;
                    ok &= r.pass;
                    writeln!(out, "{r}").map_err(io)?;
                }
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Search {
            op,
            m,
            n,
            sigma,
            sample,
            seed,
            out: dir,
            budget,
        } => {
            let mode = match sample {
                Some(count) => SearchMode::Sampled { count, seed },
                None => SearchMode::Full,
            };
            let r = harness::exhaustive_search_with_budget(op, m, n, sigma, mode, budget)?;
            writeln!(out, "{r}").map_err(io)?;
            fs::create_dir_all(&dir).map_err(io)?;
            let stem = format!("{op}_m{m}_n{n}_s{sigma}");
            for (side, d) in [("lhs", &r.argmax.0), ("rhs", &r.argmax.1)] {
                let path = dir.join(format!("{stem}_{side}.json"));
                fs::write(&path, emit_dfa(d)).map_err(io)?;
                writeln!(out, "wrote {}", path.display()).map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Runs the command line with explicit output streams and returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on bad input.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => {
            let _ = writeln!(err, "verification failed");
            EXIT_FAILED
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..3"), Ok((2, 3)));
        assert_eq!(parse_range("4"), Ok((4, 4)));
        assert!(parse_range("3..2").is_err());
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
