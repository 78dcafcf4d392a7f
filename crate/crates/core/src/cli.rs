//! Command-line front end.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuit::{
    circuit_cost, lnn_cost, lnn_worst_case_bound, worst_case_bound, Circuit,
};
use crate::error::{Error, Result};
use crate::io::{diff_csv, gen_hwb, gen_random_perm, parse_circuit, parse_spec, serialize_circuit, Rotation};
use crate::perm::{disjoint_cycles, distance_metric, nop_metric, Permutation};
use crate::pipeline::{
    classify, preprocess_fix_special, schedule_for, synthesize_hybrid_with, synthesize_kcycle_with,
    synthesize_mmd_with, verify, RouterConfig, SynthOptions, SynthesisReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_FORMAT: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cyclesynth", version, about = "Cycle-based reversible circuit synthesis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Kcycle,
    Mmd,
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hwb,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dir {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Synthesize a circuit for a specification.
    Synth {
        #[arg(long = "in", value_name = "SPEC")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "hybrid")]
        method: Method,
        /// Circuit output; stdout when absent.
        #[arg(long, value_name = "CIRC")]
        out: Option<PathBuf>,
        /// Report output; stderr when absent.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        #[arg(long)]
        no_verify: bool,
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
    },
    /// Check a circuit against a specification.
    Verify { circuit: PathBuf, spec: PathBuf },
    /// Print the cost of a circuit.
    Cost {
        circuit: PathBuf,
        /// Also report the nearest-neighbour cost (NOT/CNOT circuits only).
        #[arg(long)]
        lnn: bool,
    },
    /// Synthesize generated benchmarks and print their reports.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances, seeds `seed..seed+count`.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, value_enum, default_value = "hybrid")]
        method: Method,
        #[arg(long, value_enum, default_value = "left")]
        rotation: Dir,
    },
    /// Print routing metrics, cycle statistics, and the cost estimate.
    Analyze {
        spec: PathBuf,
        /// Write `i,f(i),f(i)-i` rows here.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Timeout(_) | Error::Unreachable(_) | Error::SimulationCapacity { .. } => EXIT_RUNTIME,
        _ => EXIT_FORMAT,
    }
}

fn synthesize(p: &Permutation, method: Method, opts: &SynthOptions) -> Result<(Circuit, SynthesisReport)> {
    match method {
        Method::Kcycle => synthesize_kcycle_with(p, opts),
        Method::Mmd => synthesize_mmd_with(p, opts),
        Method::Hybrid => synthesize_hybrid_with(p, &RouterConfig::default(), opts),
    }
}

fn status(report: &SynthesisReport) -> i32 {
    if report.verified == Some(false) {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    }
}

fn analyze(p: &Permutation) -> Result<String> {
    let cycles = disjoint_cycles(p);
    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    for c in cycles.iter() {
        *lengths.entry(c.len()).or_default() += 1;
    }
    let lengths: Vec<String> = lengths.iter().rev().map(|(l, k)| format!("{l}:{k}")).collect();
    let (pre, rest) = preprocess_fix_special(p);
    let schedule = schedule_for(&rest, 7)?;
    let estimate = circuit_cost(&pre) + crate::decompose::estimate_cost(&schedule, p.width());
    let c = schedule.counts();
    Ok(format!(
        "n={}\ndistance={}\nnop={}\ncategory={}\nparity={}\ncycles={}\ncycle_lengths={}\nmoved={}\n\
         schedule={},{},{},{},{},{},{},{}\nestimate={}\nworst_case_bound={}\n",
        p.width(),
        distance_metric(p),
        nop_metric(p),
        classify(p, &RouterConfig::default()),
        p.parity(),
        cycles.len(),
        lengths.join(","),
        p.moved_count(),
        c.pair55,
        c.single5,
        c.pair33,
        c.single3,
        c.pair44,
        c.pair42,
        c.pair22,
        c.transpositions,
        estimate,
        worst_case_bound(p.width()),
    ))
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Synth { input, method, out, report, no_verify, timeout } => {
            let p = parse_spec(&read(&input)?)?;
            let timeout = match timeout {
                Some(t) if !(t >= 0.0 && t.is_finite()) => {
                    return Err(Error::Precondition(format!("bad timeout {t}")))
                }
                t => t.map(Duration::from_secs_f64),
            };
            let opts = SynthOptions { verify: !no_verify, timeout, ..Default::default() };
            let (circuit, rep) = synthesize(&p, method, &opts)?;
            let text = serialize_circuit(&circuit);
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            match report {
                Some(path) => write(&path, &rep.to_kv())?,
                None => eprint!("{}", rep.to_kv()),
            }
            Ok(status(&rep))
        }
        Command::Verify { circuit, spec } => {
            let c = parse_circuit(&read(&circuit)?)?;
            let p = parse_spec(&read(&spec)?)?;
            let ok = c.width() == p.width() && verify(&c, &p)?;
            println!("verified={ok}");
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Cost { circuit, lnn } => {
            let c = parse_circuit(&read(&circuit)?)?;
            println!("n={}\ngates={}\ncost={}", c.width(), c.len(), circuit_cost(&c));
            if lnn {
                println!("lnn_cost={}", lnn_cost(&c)?);
                println!("lnn_worst_case_bound={}", lnn_worst_case_bound(c.width()));
            }
            Ok(EXIT_OK)
        }
        Command::Bench { family, n, seed, count, method, rotation } => {
            let perms: Vec<Permutation> = match family {
                Family::Hwb => {
                    let dir = match rotation {
                        Dir::Left => Rotation::Left,
                        Dir::Right => Rotation::Right,
                    };
                    vec![gen_hwb(n, dir)?]
                }
                Family::Random => {
                    (seed..seed + count.max(1)).map(|s| gen_random_perm(n, s, None)).collect::<Result<_>>()?
                }
            };
            let mut code = EXIT_OK;
            for (i, p) in perms.iter().enumerate() {
                let (_, rep) = synthesize(p, method, &SynthOptions::default())?;
                if i > 0 {
                    println!();
                }
                print!("{}", rep.to_kv());
                code = code.max(status(&rep));
            }
            Ok(code)
        }
        Command::Analyze { spec, csv } => {
            let p = parse_spec(&read(&spec)?)?;
            print!("{}", analyze(&p)?);
            if let Some(path) = csv {
                write(&path, &diff_csv(&p))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_FORMAT } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
