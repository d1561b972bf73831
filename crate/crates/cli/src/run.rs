use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use ctrlab_core::cycle::{cycle_system, in_all_minimal_primes};
use ctrlab_core::hibi::order_polytope_system;
use ctrlab_core::lattice::decompose_with;
use ctrlab_core::perfect::{comparability_graph, perfect_system};
use ctrlab_core::verdict::RadicalEvidence;
use ctrlab_core::{check_membership, Engine, ScanBounds, ShiftedSystem, Witness};
use serde_json::{json, Value};

use crate::encode;
use crate::error::{CliError, Result};
use crate::input::{parse_json, read_source, PosetInput, SchubertInput};
use crate::parallel::Rayon;
use crate::report::{Body, Format};
use crate::request::Request;

/// Decide whether the canonical trace of a Hibi ring, a stable set ring
/// or a Schubert cycle is radical, with a checkable witness.
#[derive(Debug, Parser)]
#[command(name = "ctrlab", version)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Largest degree of ring monomials scanned.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(i64).range(0..))]
    pub degree_bound: i64,
    /// Largest power tried for radical membership [default: ground size + 2].
    #[arg(long, global = true)]
    pub power_bound: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Use plain box enumeration instead of the pruned search.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Add wall time to the report. Reports with timing are not reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schubert cycle G(X; gamma), from a file or from --m, --n, --gamma.
    Schubert {
        #[arg(long, conflicts_with_all = ["m", "n", "gamma"])]
        input: Option<String>,
        #[arg(long, requires_all = ["n", "gamma"])]
        m: Option<usize>,
        #[arg(long, requires_all = ["m", "gamma"])]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', requires_all = ["m", "n"])]
        gamma: Option<Vec<usize>>,
    },
    /// Stable set ring of the cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Hibi ring of a poset.
    Hibi {
        #[arg(long)]
        poset: String,
    },
    /// Stable set ring of a perfect graph, or of a poset's comparability graph.
    Perfect {
        #[arg(long, conflicts_with = "poset", required_unless_present = "poset")]
        graph: Option<String>,
        #[arg(long)]
        poset: Option<String>,
        /// When the clique test is inconclusive, scan ring monomials.
        #[arg(long)]
        deep: bool,
    },
    /// Generic determinantal ring K[X]/I_t(X).
    Det {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Segre-product hypotheses for Hibi rings, factor order as given.
    Segre {
        #[arg(long, required = true, num_args = 1..)]
        poset: Vec<String>,
        /// Degrees scanned above the first generator degree.
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
    /// Re-check a report written by this tool.
    Verify {
        #[arg(long)]
        report: String,
    },
}

/// What `main` prints and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn poset_input(path: &str) -> Result<PosetInput> {
    let input: PosetInput = parse_json(&read_source(path)?, path)?;
    input.build(path)?;
    Ok(input)
}

pub fn request(command: &Command) -> Result<Request> {
    Ok(match command {
        Command::Schubert { input: Some(path), .. } => {
            let s: SchubertInput = parse_json(&read_source(path)?, path)?;
            s.build(path)?;
            Request::Schubert(s)
        }
        Command::Schubert { m: Some(m), n: Some(n), gamma: Some(gamma), .. } => {
            let s = SchubertInput { m: *m, n: *n, gamma: gamma.clone() };
            s.build("--gamma")?;
            Request::Schubert(s)
        }
        Command::Schubert { .. } => {
            return Err(CliError::Usage("schubert needs --input or --m, --n and --gamma".into()))
        }
        Command::Cycle { n } => Request::Cycle { n: *n },
        Command::Hibi { poset } => Request::Hibi { poset: poset_input(poset)? },
        Command::Perfect { graph: Some(path), deep, .. } => {
            let g: crate::input::GraphInput = parse_json(&read_source(path)?, path)?;
            g.build(path)?;
            Request::Perfect { graph: Some(g), poset: None, deep: *deep }
        }
        Command::Perfect { poset: Some(path), deep, .. } => {
            Request::Perfect { graph: None, poset: Some(poset_input(path)?), deep: *deep }
        }
        Command::Perfect { .. } => return Err(CliError::Usage("perfect needs --graph or --poset".into())),
        Command::Det { m, n, t } => Request::Determinantal { m: *m, n: *n, t: *t },
        Command::Segre { poset, window } => {
            Request::Segre { posets: poset.iter().map(|p| poset_input(p)).collect::<Result<_>>()?, window: *window }
        }
        Command::Verify { .. } => return Err(CliError::Usage("verify is not a computation".into())),
    })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let exec = Rayon::from_env();
    if let Command::Verify { report } = &cli.command {
        return verify(&read_source(report)?, report, &exec, cli.opts.format);
    }
    let req = request(&cli.command)?;
    let bounds = ScanBounds {
        degree_bound: cli.opts.degree_bound,
        power_bound: cli.opts.power_bound.unwrap_or(req.ground_size() as u32 + 2),
    };
    let engine = if cli.opts.oracle { Engine::Exhaustive } else { Engine::Pruned };
    let start = Instant::now();
    let mut report = req.run(bounds, engine, &exec)?;
    if cli.opts.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(Outcome { stdout: report.render(cli.opts.format), code: report.exit_code() })
}

fn system_of(req: &Request) -> Result<Option<ShiftedSystem>> {
    Ok(match req {
        Request::Cycle { n } => Some(cycle_system(*n)?),
        Request::Hibi { poset } => Some(order_polytope_system(&poset.build("input poset")?)),
        Request::Perfect { graph: Some(g), .. } => Some(perfect_system(&g.build("input graph")?)),
        Request::Perfect { poset: Some(p), .. } => Some(perfect_system(&comparability_graph(&p.build("input poset")?))),
        _ => None,
    })
}

/// Replays the computation and re-checks the witness against the
/// membership conditions of the family.
pub fn verify(text: &str, context: &str, exec: &Rayon, format: Format) -> Result<Outcome> {
    let report: Value = parse_json(text, context)?;
    let family = encode::get_str(&report, "family")?;
    let input = report.get("input").ok_or_else(|| CliError::Report("missing field `input`".into()))?;
    let req = Request::from_parts(family, input)?;
    let b = report.get("bounds").ok_or_else(|| CliError::Report("missing field `bounds`".into()))?;
    let bounds = ScanBounds {
        degree_bound: encode::get_i64(b, "degree_bound")?,
        power_bound: u32::try_from(encode::get_i64(b, "power_bound")?)
            .map_err(|_| CliError::Report("`power_bound` out of range".into()))?,
    };
    let engine = match encode::get_str(&report, "engine")? {
        "pruned" => Engine::Pruned,
        "exhaustive" => Engine::Exhaustive,
        other => return Err(CliError::Report(format!("unknown engine `{other}`"))),
    };

    let mut checks: Vec<(String, bool)> = Vec::new();
    let fresh = req.run(bounds, engine, exec)?;
    let fresh_json = fresh.to_json();
    let same = ["verdict", "witness", "segre", "assumptions"].iter().all(|k| fresh_json.get(k) == report.get(k));
    checks.push(("recomputed verdict and witness match".into(), same));

    if let (Body::Verdict(v), Some(system)) = (&fresh.body, system_of(&req)?) {
        if same {
            witness_checks(&req, &system, &v.witness, &mut checks);
        }
    }

    let valid = checks.iter().all(|(_, ok)| *ok);
    let stdout = match format {
        Format::Json => {
            let list: Vec<Value> = checks.iter().map(|(name, ok)| json!({ "check": name, "ok": ok })).collect();
            let mut s = serde_json::to_string_pretty(&json!({ "valid": valid, "checks": list })).expect("serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (name, ok) in &checks {
                s.push_str(&format!("{}  {name}\n", if *ok { "ok  " } else { "FAIL" }));
            }
            s.push_str(if valid { "valid\n" } else { "invalid\n" });
            s
        }
    };
    Ok(Outcome { stdout, code: if valid { 0 } else { 1 } })
}

fn record<E>(checks: &mut Vec<(String, bool)>, name: &str, r: Result<bool, E>) {
    checks.push((name.to_string(), r.unwrap_or(false)));
}

fn witness_checks(req: &Request, system: &ShiftedSystem, w: &Witness, checks: &mut Vec<(String, bool)>) {
    match w {
        Witness::UnitDecomposes(d) => {
            record(checks, "eta in S(1), zeta in S(-1), eta + zeta = 0", d.validate(system, &system.origin()));
        }
        Witness::NonRadicalMonomial { mu, evidence } => {
            record(checks, "mu is a ring monomial", check_membership(system, 0, mu));
            let outside = decompose_with(system, mu, Engine::Exhaustive).map(|r| r.is_none());
            record(checks, "mu is not in the trace (exhaustive)", outside);
            let power = match evidence {
                RadicalEvidence::Power(d) => Some(d),
                RadicalEvidence::MinimalPrimes { power } => {
                    if let Request::Cycle { n } = req {
                        record(checks, "mu lies in every minimal prime", in_all_minimal_primes(*n, mu));
                    }
                    power.as_ref()
                }
            };
            if let Some(d) = power {
                record(checks, "k*mu = eta + zeta with eta in S(1), zeta in S(-1)", d.validate(system, mu));
            }
        }
        _ => {}
    }
}
