//! The `twistcert` command line tool. [`run`] does all the work and hands
//! back the exit code and output, so tests can drive it in-process.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use twistcert::certificate::DEFAULT_BUDGET;
use twistcert::expr::{eval_expression, parse_polynomial};
use twistcert::floer::{lspace_profile, staircase_from_alexander};
use twistcert::mapping_class::{alexander_polynomial, monodromy_phi};
use twistcert::{certify, cross_validate, replay, BigInt, Certificate, StandardCurveSystem, Verdict};

/// The published certificate schema.
pub const CERTIFICATE_SCHEMA: &str = include_str!("../certificate.schema.json");

#[derive(Parser, Debug)]
#[command(name = "twistcert", version, about = "Curves, twists and Floer-rank certificates on closed surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the standard curve system and its intersection table.
    Curves {
        #[arg(short, long)]
        genus: u32,
    },
    /// Geometric intersection number of two curve expressions.
    Intersect {
        #[arg(short, long)]
        genus: u32,
        first: String,
        second: String,
    },
    /// Normalized crossing word of a curve expression.
    Twist {
        #[arg(short, long)]
        genus: u32,
        expr: String,
    },
    /// Alexander polynomial of the closure of phi_n.
    Alexander {
        #[arg(short, long)]
        genus: u32,
        #[arg(short, long)]
        n: i64,
    },
    /// Staircase and knot Floer profile of an L-space Alexander polynomial.
    Staircase {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Build the rank certificate for K_n.
    Certify {
        #[arg(short, long)]
        genus: u32,
        #[arg(short, long)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Measure i(B, psi(B)) directly and compare it with the certified bound.
    Validate {
        #[arg(short, long)]
        genus: u32,
        #[arg(short, long)]
        n: i64,
        /// Cap on the estimated work of the intersection scan.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Certify every (g, n) in a grid.
    Sweep {
        /// Genus range, `A..B` (inclusive) or a single value.
        #[arg(short, long, value_parser = parse_range)]
        genus: RangeInclusive<i64>,
        /// Range of n, `A..B` (inclusive) or a single value.
        #[arg(short, long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        #[arg(short, long, default_value_t = 1)]
        jobs: usize,
        /// Replay each certificate and check the expected verdict.
        #[arg(long)]
        verify: bool,
        /// One JSON certificate per line instead of a table.
        #[arg(long)]
        json: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a sweep whose verification found a wrong verdict.
pub const EXIT_MISMATCH: i32 = 2;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: out,
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn system(genus: u32) -> anyhow::Result<StandardCurveSystem> {
    Ok(StandardCurveSystem::new(genus)?)
}

fn execute(cmd: Command, out: &mut String) -> anyhow::Result<i32> {
    match cmd {
        Command::Curves { genus } => {
            let sys = system(genus)?;
            let curves = sys.named_curves();
            for (name, c) in &curves {
                writeln!(out, "{name:<4} {c}")?;
            }
            writeln!(out)?;
            write!(out, "{:<4}", "")?;
            for (name, _) in &curves {
                write!(out, " {name:>4}")?;
            }
            writeln!(out)?;
            for (a, x) in &curves {
                write!(out, "{a:<4}")?;
                for (_, y) in &curves {
                    write!(out, " {:>4}", x.intersection_number(y)?)?;
                }
                writeln!(out)?;
            }
        }
        Command::Intersect { genus, first, second } => {
            let sys = system(genus)?;
            let a = eval_expression(&first, &sys).with_context(|| format!("in {first:?}"))?;
            let b = eval_expression(&second, &sys).with_context(|| format!("in {second:?}"))?;
            writeln!(out, "{}", a.intersection_number(&b)?)?;
        }
        Command::Twist { genus, expr } => {
            let sys = system(genus)?;
            let c = eval_expression(&expr, &sys).with_context(|| format!("in {expr:?}"))?;
            writeln!(out, "{c}")?;
        }
        Command::Alexander { genus, n } => {
            let w = monodromy_phi(genus, n)?;
            writeln!(out, "{}", alexander_polynomial::<BigInt>(&w))?;
        }
        Command::Staircase { polynomial } => {
            let p = parse_polynomial::<i64>(&polynomial)?;
            let s = staircase_from_alexander(&p)?;
            let list = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            writeln!(out, "n: {}", list(s.ns()))?;
            writeln!(out, "delta: {}", list(s.deltas()))?;
            writeln!(out, "genus: {}", s.genus())?;
            let prof = lspace_profile(&s);
            for (j, r) in &prof.gradings {
                match r.maslov {
                    Some(m) => writeln!(out, "j={j:>3}  rank {}  maslov {m}", r.rank)?,
                    None => writeln!(out, "j={j:>3}  rank {}", r.rank)?,
                }
            }
            writeln!(out, "total rank: {}", prof.total_rank())?;
        }
        Command::Certify { genus, n, json } => {
            let c = certify(genus, n)?;
            if json {
                writeln!(out, "{}", c.to_json())?;
            } else {
                out.push_str(&c.to_text());
            }
        }
        Command::Validate { genus, n, budget } => {
            let r = cross_validate(genus, n, budget)?;
            match r.direct {
                None => writeln!(out, "g={genus} n={n}: skipped, the measurement needs n >= 1")?,
                Some(d) => writeln!(
                    out,
                    "g={genus} n={n}: i(B, psi(B)) = {d} >= {} (slack {}), word lengths {} and {}",
                    r.bound,
                    r.slack.unwrap_or_default(),
                    r.lengths.0,
                    r.lengths.1
                )?,
            }
        }
        Command::Sweep {
            genus,
            n,
            jobs,
            verify,
            json,
        } => return sweep(genus, n, jobs, verify, json, out),
    }
    Ok(0)
}

fn sweep(
    genus: RangeInclusive<i64>,
    n: RangeInclusive<i64>,
    jobs: usize,
    verify: bool,
    json: bool,
    out: &mut String,
) -> anyhow::Result<i32> {
    if *genus.start() < 0 || *genus.end() > u32::MAX as i64 {
        bail!("genus range {genus:?} is out of bounds");
    }
    let grid: Vec<(u32, i64)> = genus
        .flat_map(|g| n.clone().map(move |k| (g as u32, k)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("starting worker threads")?;
    let results: Vec<twistcert::Result<(Certificate, Option<String>)>> = pool.install(|| {
        grid.par_iter()
            .map(|&(g, k)| {
                let c = certify(g, k)?;
                let problem = if verify { check(&c)? } else { None };
                Ok((c, problem))
            })
            .collect()
    });
    let mut mismatches = 0;
    for r in results {
        let (c, problem) = r?;
        if json {
            writeln!(out, "{}", serde_json::to_string(&c)?)?;
        } else {
            writeln!(
                out,
                "g={} n={} final_bound={} verdict={}",
                c.genus, c.n, c.final_bound, c.verdict
            )?;
        }
        if let Some(p) = problem {
            mismatches += 1;
            writeln!(out, "  mismatch: {p}")?;
        }
    }
    Ok(if mismatches > 0 { EXIT_MISMATCH } else { 0 })
}

/// Replays `c` and compares it with what the closed form predicts.
fn check(c: &Certificate) -> twistcert::Result<Option<String>> {
    replay(&Certificate::from_json(&c.to_json())?)?;
    let expected = if c.n >= 1 {
        Verdict::ObstructionFound
    } else {
        Verdict::Inconclusive
    };
    let bound = 16 * c.n * c.n - 5;
    Ok(if c.verdict != expected {
        Some(format!("expected {expected}, got {}", c.verdict))
    } else if c.final_bound != bound {
        Some(format!("expected final_bound {bound}, got {}", c.final_bound))
    } else {
        None
    })
}
