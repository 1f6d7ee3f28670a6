use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use chibound_core::graph::{
    acyclic_orientation, blow_up, generate, mycielskian, orientations, parse_digraph, parse_graph, power,
    serialize_digraph, serialize_graph, subdivide_exact, Family, Format, GraphSpec, DEFAULT_ORIENTATION_EDGE_CAP,
};
use chibound_core::holes::{enumerate_holes, hole_profile, is_even_hole_free, HoleCaps};
use chibound_core::hom::{homomorphism, verify_restricted_dual, HomCaps};
use chibound_core::invariants::{
    biclique_number, chi_p, chromatic_number, clique_number, degeneracy, star_chromatic_number, tree_depth, Caps,
};
use chibound_core::{Digraph, Error, Graph};
use chibound_harness::error::exit;
use chibound_harness::{run_suite, Claim, HarnessError, Result, SuiteConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Exact colouring invariants, shallow minors, holes and homomorphism dualities"
)]
struct Cli {
    /// Largest graph order accepted; larger inputs exit with code 3.
    #[arg(long, global = true)]
    cap_n: Option<usize>,

    #[arg(long, global = true, default_value_t = SuiteConfig::default().seed)]
    seed: u64,

    /// Encoding for graph output.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Graph6)]
    format: OutFormat,

    /// Write output here instead of stdout. For `verify --all`, a directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for suite instances.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Graph6 => Format::Graph6,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct Input {
    /// File holding a graph6 string or edge-list JSON; `-` reads stdin.
    input: Option<PathBuf>,

    /// The graph given inline instead of by file.
    #[arg(long, conflicts_with = "input")]
    graph: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants with their certificates.
    Invariant {
        #[command(flatten)]
        input: Input,
        /// Comma-separated: chi, chi_s, chi_p=<p>, td, omega, bomega, degeneracy.
        #[arg(long, default_value = "chi,chi_s,td,omega,bomega,degeneracy")]
        which: String,
    },
    /// Generate a graph: complete N | complete_bipartite S T | cycle N | path N |
    /// star T | gnp N P | high_girth N DEGREE GIRTH | mycielski GRAPH6 ITERATIONS.
    Generate { family: String, params: Vec<String> },
    /// Apply subdivide, blowup, power (each with --k) or orient to a graph.
    Transform {
        #[arg(value_enum)]
        op: TransformOp,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Enumerate holes and test even-hole-freeness.
    Holes {
        #[command(flatten)]
        input: Input,
        /// Longest hole enumerated; defaults to the graph order.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Search for a homomorphism between two digraphs (digraph6 or arc-list JSON).
    Hom {
        source: String,
        target: String,
        /// Read both sides as undirected graphs, each edge becoming two arcs.
        #[arg(long)]
        undirected: bool,
    },
    /// Check a candidate restricted dual D of F on a sample set.
    DualVerify {
        #[arg(long)]
        f: String,
        #[arg(long)]
        d: String,
        /// File with one digraph per line.
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Also use every orientation of every graph up to this order.
        #[arg(long, value_name = "N")]
        orientations: Option<usize>,
    },
    /// Run a claim suite (`S1`..`S11` or its name), or all of them.
    Verify {
        claim: Option<String>,
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// Override a suite parameter, e.g. `--set p=1,2`.
        #[arg(long = "set", value_name = "KEY=VALUES")]
        overrides: Vec<String>,
        /// Directory for the cached connected-graph corpus.
        #[arg(long)]
        corpus_cache: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Subdivide,
    Blowup,
    Power,
    Orient,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("chibound: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| HarnessError::io("<stdin>", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| HarnessError::io(path.display().to_string(), e))
    }
}

fn check_cap(cli: &Cli, n: usize) -> Result<()> {
    match cli.cap_n {
        Some(limit) if n > limit => Err(Error::Cap {
            what: "input order (--cap-n)",
            limit,
            actual: n,
        }
        .into()),
        _ => Ok(()),
    }
}

fn load_graph(cli: &Cli, input: &Input) -> Result<Graph> {
    let text = match (&input.graph, &input.input) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => read_text(path)?,
        (None, None) => return Err(HarnessError::Usage("give an input file, `-`, or --graph".into())),
    };
    let g = parse_graph(&text)?;
    check_cap(cli, g.n())?;
    Ok(g)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| HarnessError::io(path.display().to_string(), e))
        }
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| HarnessError::io("<stdout>", e))
        }
    }
}

fn emit_json(cli: &Cli, v: &Value) -> Result<()> {
    emit(cli, &serde_json::to_string_pretty(v).expect("JSON values serialise"))
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Invariant { input, which } => invariant(cli, input, which).map(|_| exit::PASS),
        Command::Generate { family, params } => {
            let g = generate(&parse_family(family, params)?, cli.seed)?;
            check_cap(cli, g.n())?;
            emit(cli, &serialize_graph(&g, cli.format.into())?)?;
            Ok(exit::PASS)
        }
        Command::Transform { op, input, k } => {
            let g = load_graph(cli, input)?;
            let text = match op {
                TransformOp::Subdivide => serialize_graph(&subdivide_exact(&g, *k), cli.format.into())?,
                TransformOp::Blowup => serialize_graph(&blow_up(&g, *k)?, cli.format.into())?,
                TransformOp::Power => serialize_graph(&power(&g, *k)?, cli.format.into())?,
                TransformOp::Orient => {
                    let order: Vec<usize> = (0..g.n()).collect();
                    serialize_digraph(&acyclic_orientation(&g, &order)?, cli.format.into())?
                }
            };
            emit(cli, &text)?;
            Ok(exit::PASS)
        }
        Command::Holes { input, max_len } => {
            let g = load_graph(cli, input)?;
            let caps = HoleCaps::default();
            let max_len = max_len.unwrap_or(g.n());
            let holes = enumerate_holes(&g, max_len, &caps)?;
            let even = is_even_hole_free(&g, &caps)?;
            emit_json(
                cli,
                &json!({
                    "graph6": serialize_graph(&g, Format::Graph6)?,
                    "max_len": max_len,
                    "counts": hole_profile(&g, max_len, &caps)?,
                    "holes": holes,
                    "even_hole_free": even,
                }),
            )?;
            Ok(exit::PASS)
        }
        Command::Hom {
            source,
            target,
            undirected,
        } => {
            let parse = |text: &str| -> Result<Digraph> {
                let d = if *undirected {
                    Digraph::symmetric(&parse_graph(text)?)
                } else {
                    parse_digraph(text)?
                };
                check_cap(cli, d.n())?;
                Ok(d)
            };
            let (f, g) = (parse(source)?, parse(target)?);
            let m = homomorphism(&f, &g, &HomCaps::default())?;
            emit_json(cli, &json!({ "exists": m.is_some(), "mapping": m }))?;
            Ok(exit::PASS)
        }
        Command::DualVerify {
            f,
            d,
            samples,
            orientations: up_to,
        } => {
            let f = parse_digraph(f)?;
            let d = parse_digraph(d)?;
            let mut set = Vec::new();
            if let Some(path) = samples {
                for line in read_text(path)?.lines().filter(|l| !l.trim().is_empty()) {
                    set.push(parse_digraph(line)?);
                }
            }
            if samples.is_none() && up_to.is_none() {
                return Err(HarnessError::Usage("give --samples, --orientations, or both".into()));
            }
            if let Some(max_n) = up_to {
                for n in 1..=*max_n {
                    for g in chibound_core::graph::all_graphs(n) {
                        set.extend(orientations(&g, DEFAULT_ORIENTATION_EDGE_CAP)?);
                    }
                }
            }
            for s in &set {
                check_cap(cli, s.n())?;
            }
            let report = verify_restricted_dual(&f, &d, &set, &HomCaps::default())?;
            emit_json(cli, &serde_json::to_value(&report).expect("report serialises"))?;
            Ok(if report.pass { exit::PASS } else { exit::CLAIM_FAILED })
        }
        Command::Verify {
            claim,
            all,
            overrides,
            corpus_cache,
        } => {
            let mut config = SuiteConfig {
                seed: cli.seed,
                cap_n: cli.cap_n,
                jobs: cli.jobs,
                corpus_cache: corpus_cache.clone(),
                overrides: BTreeMap::new(),
            };
            for o in overrides {
                let (k, v) = o
                    .split_once('=')
                    .ok_or_else(|| HarnessError::Usage(format!("--set {o:?}: expected KEY=VALUES")))?;
                config.overrides.insert(k.to_string(), v.to_string());
            }
            let claims: Vec<Claim> = match (claim, all) {
                (Some(c), false) => vec![c.parse()?],
                (None, true) => Claim::ALL.to_vec(),
                _ => return Err(HarnessError::Usage("give a claim id or --all".into())),
            };
            verify(cli, &claims, &config)
        }
    }
}

fn verify(cli: &Cli, claims: &[Claim], config: &SuiteConfig) -> Result<u8> {
    let mut all_pass = true;
    if claims.len() > 1 {
        if let Some(dir) = &cli.out {
            std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir.display().to_string(), e))?;
        }
    }
    for &claim in claims {
        let report = run_suite(claim, config)?;
        all_pass &= report.pass();
        eprintln!(
            "{claim}: {} ({}/{} instances, {} ms)",
            if report.pass() { "pass" } else { "FAIL" },
            report.summary.passed,
            report.summary.instances,
            report.elapsed_ms
        );
        let text = report.to_json();
        match (&cli.out, claims.len()) {
            (Some(dir), n) if n > 1 => {
                let path = dir.join(format!("{}.json", claim.id()));
                std::fs::write(&path, format!("{text}\n"))
                    .map_err(|e| HarnessError::io(path.display().to_string(), e))?;
            }
            _ => emit(cli, &text)?,
        }
    }
    Ok(if all_pass { exit::PASS } else { exit::CLAIM_FAILED })
}

fn invariant(cli: &Cli, input: &Input, which: &str) -> Result<()> {
    let g = load_graph(cli, input)?;
    let caps = Caps::default();
    let mut results = serde_json::Map::new();
    let start = Instant::now();
    for item in which.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let value = match item {
            "chi" => serde_json::to_value(chromatic_number(&g, &caps)?),
            "chi_s" => serde_json::to_value(star_chromatic_number(&g, &caps)?),
            "td" => serde_json::to_value(tree_depth(&g, &caps)?),
            "omega" => serde_json::to_value(clique_number(&g, &caps)?),
            "bomega" => serde_json::to_value(biclique_number(&g, &caps)?),
            "degeneracy" => serde_json::to_value(degeneracy(&g)),
            other => match other.strip_prefix("chi_p=").map(str::parse::<usize>) {
                Some(Ok(p)) => serde_json::to_value(chi_p(&g, p, &caps)?),
                _ => return Err(HarnessError::Usage(format!("unknown invariant {other:?}"))),
            },
        }
        .expect("results serialise");
        results.insert(item.to_string(), value);
    }
    emit_json(
        cli,
        &json!({
            "graph6": serialize_graph(&g, Format::Graph6)?,
            "n": g.n(),
            "m": g.m(),
            "results": results,
            "elapsed_ms": start.elapsed().as_millis() as u64,
        }),
    )
}

fn parse_family(name: &str, params: &[String]) -> Result<Family> {
    let int = |i: usize| -> Result<usize> {
        params
            .get(i)
            .ok_or_else(|| HarnessError::Usage(format!("{name}: missing parameter {}", i + 1)))?
            .parse()
            .map_err(|_| HarnessError::Usage(format!("{name}: parameter {} is not an integer", i + 1)))
    };
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(HarnessError::Usage(format!(
                "{name} takes {k} parameters, got {}",
                params.len()
            )))
        }
    };
    let family = match name {
        "complete" => {
            arity(1)?;
            Family::Complete { n: int(0)? }
        }
        "complete_bipartite" => {
            arity(2)?;
            Family::CompleteBipartite { s: int(0)?, t: int(1)? }
        }
        "cycle" => {
            arity(1)?;
            Family::Cycle { n: int(0)? }
        }
        "path" => {
            arity(1)?;
            Family::Path { n: int(0)? }
        }
        "star" => {
            arity(1)?;
            Family::Star { t: int(0)? }
        }
        "gnp" => {
            arity(2)?;
            let p: f64 = params[1]
                .parse()
                .map_err(|_| HarnessError::Usage(format!("gnp: {:?} is not a probability", params[1])))?;
            Family::RandomGnp { n: int(0)?, p }
        }
        "high_girth" => {
            arity(3)?;
            Family::HighGirth {
                n: int(0)?,
                degree: int(1)?,
                girth: int(2)?,
            }
        }
        "mycielski" => {
            arity(2)?;
            let base = parse_graph(&params[0])?;
            // Validated here so a bad base is a parse error, not a generator error.
            let _ = mycielskian(&base);
            Family::Mycielski {
                base: GraphSpec::of(&base),
                iterations: int(1)?,
            }
        }
        other => return Err(HarnessError::Usage(format!("unknown family {other:?}"))),
    };
    Ok(family)
}
