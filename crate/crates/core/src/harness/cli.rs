//! Command line: one subcommand per experiment, reports as key=value lines.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use super::experiments::{self, SuOptions};
use super::report::Report;
use super::verify::verify_homomorphism;
use super::whitebox::WhiteBox;
use crate::bbcore::io::parse_generators;
use crate::error::{Error, Result};
use crate::morphisms::morphism_from_pairs;

#[derive(Parser, Debug)]
#[command(name = "bbgroup", version, about = "Black-box group constructions with white-box verification", args_override_self = true)]
pub struct Cli {
    /// Seed for all randomness; defaults to $BBGROUP_SEED, then 0.
    #[arg(long, global = true, env = "BBGROUP_SEED")]
    pub seed: Option<u64>,
    /// key=value lines supplying default flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Append reports to this file as well as printing them.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record wall_time_ms=0 so reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub reproducible: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Frobenius is a ring map on random pairs of F_{p^n}.
    FfCheck {
        #[arg(long)]
        p: BigUint,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Involutions of SL₂(q), q a power of two.
    Involution {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Frobenius on PSL₂, SL₂ or SL_n over F_{p^k}.
    Frobenius {
        #[arg(long, value_parser = ["psl2", "sl2", "sl"])]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        /// Dimension for `--group sl`.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Random draws per search step.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Inverse-transpose on SL_n(q).
    Invtrans {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// SU_n(p^k) inside SL_n(p^{2k}).
    SuEmbed {
        #[arg(long)]
        p: BigUint,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Enumerate the closure of the generators.
        #[arg(long)]
        census: bool,
        /// Primes of q² − 1 beyond trial division, comma separated.
        #[arg(long, value_delimiter = ',')]
        hints: Vec<BigUint>,
    },
    /// Identity morphism on a generator file, optionally with a corrupted pair.
    Verify {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Map the first generator to the second as a negative control.
        #[arg(long)]
        corrupt: bool,
    },
    /// Miller–Rabin on an odd n.
    Mr {
        #[arg(long)]
        n: BigUint,
        #[arg(long, default_value_t = 20)]
        rounds: u32,
    },
}

/// Flags from a config file, as argv tokens.
pub fn config_args(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || k.contains(char::is_whitespace) {
            return Err(Error::Parse(format!("config line {}: bad key {k:?}", i + 1)));
        }
        out.push(format!("--{k}"));
        match v {
            "true" => {}
            "false" => {
                out.pop();
            }
            _ => out.push(v.to_string()),
        }
    }
    Ok(out)
}

/// Inserts config flags right after the subcommand so command-line flags win.
fn with_config(argv: Vec<String>) -> Result<Vec<String>> {
    let path = argv
        .iter()
        .position(|a| a == "--config")
        .and_then(|i| argv.get(i + 1))
        .cloned()
        .or_else(|| argv.iter().find_map(|a| a.strip_prefix("--config=").map(str::to_string)));
    let Some(path) = path else { return Ok(argv) };
    let extra = config_args(&std::fs::read_to_string(&path)?)?;
    let names = ["ff-check", "involution", "frobenius", "invtrans", "su-embed", "verify", "mr"];
    let Some(pos) = argv.iter().position(|a| names.contains(&a.as_str())) else { return Ok(argv) };
    let mut out = argv[..=pos].to_vec();
    out.extend(extra);
    out.extend_from_slice(&argv[pos + 1..]);
    Ok(out)
}

fn verify_file(path: &PathBuf, trials: usize, corrupt: bool, seed: u64) -> Result<Report> {
    let start = std::time::Instant::now();
    let gf = parse_generators(&std::fs::read_to_string(path)?)?;
    let (bb, group) = gf.into_box(seed)?;
    let gens: Vec<_> = gf.gens.iter().map(|m| group.encode(m)).collect();
    let mut pairs: Vec<_> = gens.iter().map(|g| (g.clone(), g.clone())).collect();
    if corrupt {
        if gens.len() < 2 {
            return Err(Error::Unsupported("corruption needs two generators".into()));
        }
        pairs[0].1 = gens[1].clone();
    }
    let w = WhiteBox::new(group);
    let mut m = morphism_from_pairs(&bb, &bb, &pairs)?;
    let mut r = verify_homomorphism(&mut m, &w, &w, trials)?;
    r.seed = seed;
    r.set_param("corrupt", corrupt);
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Parses argv (program name first) and runs the experiment.
pub fn run(argv: Vec<String>) -> Result<(Cli, Vec<Report>)> {
    let cli = Cli::try_parse_from(with_config(argv)?).map_err(|e| Error::Parse(e.to_string()))?;
    let seed = cli.seed.unwrap_or(0);
    let mut reports = match &cli.command {
        Command::FfCheck { p, n, trials } => vec![experiments::ff_check(p, *n, *trials, seed)?],
        Command::Involution { q, trials } => vec![experiments::involution(*q, *trials, seed)?],
        Command::Frobenius { group, p, k, n, trials, budget } => match group.as_str() {
            "sl" => experiments::frobenius_rank(*p, *k, *n, *trials, seed)?,
            g => experiments::frobenius_with_budget(g, *p, *k, *trials, *budget, seed)?,
        },
        Command::Invtrans { q, n, trials } => experiments::invtrans(*q, *n, *trials, seed)?,
        Command::SuEmbed { p, k, n, samples, census, hints } => {
            let opts = SuOptions { p: p.clone(), k: *k, n: *n, hints: hints.clone(), samples: *samples, census: *census, exponent_check: false };
            vec![experiments::su_embed(&opts, seed)?]
        }
        Command::Verify { gens, trials, corrupt } => vec![verify_file(gens, *trials, *corrupt, seed)?],
        Command::Mr { n, rounds } => vec![experiments::mr(n, *rounds, seed)?],
    };
    if cli.reproducible {
        for r in &mut reports {
            r.wall_time_ms = 0;
        }
    }
    if let Some(path) = &cli.out {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        for r in &reports {
            writeln!(f, "{r}")?;
        }
    }
    Ok((cli, reports))
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with(argv: Vec<String>) -> i32 {
    if let Err(e) = Cli::try_parse_from(with_config(argv.clone()).unwrap_or(argv.clone())) {
        let _ = e.print();
        return e.exit_code();
    }
    match run(argv) {
        Ok((_, reports)) => {
            for r in reports {
                println!("{r}");
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
