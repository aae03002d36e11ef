//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 when `decide` answers NO, 1 on usage, parse
//! or instance errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::approx::{solve_fptas_circle, solve_fptas_segment};
use crate::candidates::solve_exact;
use crate::decision::{decide_circle, decide_segment, DecisionOutcome};
use crate::error::{Error, Result};
use crate::geom::Metric;
use crate::io::{read_instance, to_json, AnyInstance};
use crate::oracle::{gen_circular_instance, gen_instance, oracle_report, GenParams};
use crate::parametric::{solve_k2, solve_parametric};
use crate::svg::render;

#[derive(Parser, Debug)]
#[command(name = "cofl", version, about = "Obnoxious facility placement on a segment or circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Can k facilities of the given radius be placed?
    Decide {
        file: PathBuf,
        #[arg(long)]
        radius: f64,
    },
    /// Maximum common radius.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Exact)]
        engine: Engine,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Random instance, written as JSON.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        circle: bool,
        #[arg(long, value_enum, default_value_t = MetricArg::L2)]
        metric: MetricArg,
        #[arg(long, default_value_t = 10.0)]
        length: f64,
        #[arg(long, default_value_t = 3.0)]
        height: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a placement as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        radius: f64,
        #[arg(long, num_args = 0.., allow_negative_numbers = true)]
        centers: Vec<f64>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Exact,
    Parametric,
    K2,
    Fptas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    L2,
    Linf,
}

/// Formats like C's `%.12g`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", x + 0.0);
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{:.11e}", x);
        let (mant, e) = s.split_once('e').expect("exponent present");
        let mant = trim_zeros(mant);
        let e: i32 = e.parse().expect("integer exponent");
        return format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|&x| fmt_num(x)).collect::<Vec<_>>().join(" ")
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Decide { file, radius } => {
            let outcome = match read_instance(&file)? {
                AnyInstance::Segment(s) => decide_segment(&s, radius)?,
                AnyInstance::Circle(c) => decide_circle(&c, radius)?,
            };
            match outcome {
                DecisionOutcome::Yes(pk) => {
                    writeln!(out, "YES {}", join(&pk.centers))?;
                    Ok(0)
                }
                DecisionOutcome::No => {
                    writeln!(out, "NO")?;
                    Ok(2)
                }
            }
        }
        Command::Solve { file, engine, eps, oracle } => {
            let inst = read_instance(&file)?;
            if oracle {
                let AnyInstance::Segment(s) = &inst else {
                    return Err(Error::Usage("the oracle handles segment instances only".into()));
                };
                let rep = oracle_report(s)?;
                writeln!(out, "{:.12}", rep.rmax())?;
                writeln!(
                    out,
                    "oracle candidate_max={} sweep_max={}",
                    fmt_num(rep.candidate_max),
                    fmt_num(rep.sweep_max)
                )?;
                return Ok(0);
            }
            solve(&inst, engine, eps, out)?;
            Ok(0)
        }
        Command::Gen { seed, n, k, circle, metric, length, height, output } => {
            let gp = GenParams {
                seed,
                n,
                k,
                segment_length: length,
                height_max: height,
                metric: match metric {
                    MetricArg::L2 => Metric::Euclidean,
                    MetricArg::Linf => Metric::Rectilinear,
                },
            };
            let inst = if circle {
                if metric != MetricArg::L2 {
                    return Err(Error::Usage("circle instances use the l2 metric".into()));
                }
                AnyInstance::Circle(gen_circular_instance(&gp)?)
            } else {
                AnyInstance::Segment(gen_instance(&gp)?)
            };
            let text = to_json(&inst);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Render { file, radius, centers, output } => {
            let inst = read_instance(&file)?;
            if !(radius.is_finite() && radius >= 0.0) {
                return Err(Error::Usage(format!("radius must be nonnegative, got {radius}")));
            }
            std::fs::write(output, render(&inst, radius, &centers))?;
            Ok(0)
        }
    }
}

fn solve(inst: &AnyInstance, engine: Engine, eps: f64, out: &mut dyn Write) -> Result<()> {
    let seg = match (inst, engine) {
        (AnyInstance::Circle(c), Engine::Fptas) => {
            let r = solve_fptas_circle(c, eps)?;
            if !r.feasible {
                writeln!(out, "infeasible")?;
                return Ok(());
            }
            writeln!(out, "{:.12}", r.radius)?;
            writeln!(out, "centers {}", join(&r.packing.centers))?;
            writeln!(out, "stats engine=fptas decision_calls={}", r.decision_calls)?;
            return Ok(());
        }
        (AnyInstance::Circle(_), _) => {
            return Err(Error::Usage("circle instances are solved with --engine fptas".into()))
        }
        (AnyInstance::Segment(s), _) => s,
    };
    let name = match engine {
        Engine::Exact => "exact",
        Engine::Parametric => "parametric",
        Engine::K2 => "k2",
        Engine::Fptas => "fptas",
    };
    let (radius, centers, stats) = match engine {
        Engine::Fptas => {
            let r = solve_fptas_segment(seg, eps)?;
            (r.radius, r.packing.centers, format!("decision_calls={}", r.decision_calls))
        }
        _ => {
            let r = match engine {
                Engine::Exact => solve_exact(seg)?,
                Engine::Parametric => solve_parametric(seg)?,
                _ => solve_k2(seg)?,
            };
            let s = r.stats;
            (
                r.r_max,
                r.packing.centers,
                format!(
                    "decision_calls={} candidates={} comparisons={} rounds={}",
                    s.decision_calls, s.candidates, s.comparisons, s.rounds
                ),
            )
        }
    };
    writeln!(out, "{:.12}", radius)?;
    writeln!(out, "centers {}", join(&centers))?;
    writeln!(out, "stats engine={name} {stats}")?;
    Ok(())
}
