use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use qtau_core::export::{poset_to_dot, poset_to_json};
use qtau_core::extension::one_point_extension;
use qtau_core::homology::{is_uniserial, loewy_diagram, tau};
use qtau_core::literal::{parse_module, parse_pair};
use qtau_core::rep::dim_vector_string;
use qtau_core::suites::{run_suite_with, SuiteOptions, SUITES};
use qtau_core::tilting::{TauTilt, DEFAULT_NODE_CAP};
use qtau_core::BoundQuiverAlgebra;

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_PARTIAL: u8 = 3;

#[derive(Parser)]
#[command(name = "qtau", version, about = "Support tau-tilting posets and one-point extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the support tau-tilting pairs and their left mutations.
    Hasse {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        max_nodes: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the Auslander-Reiten translate of a module.
    Tau { file: PathBuf, module: String },
    /// Write the one-point extension by the projective sum at the given vertices.
    Extend {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Left-mutate a pair at one of its module summands.
    Mutate {
        file: PathBuf,
        pair: String,
        /// A summand label, or else a 1-based position in the pair literal.
        #[arg(long)]
        at: String,
    },
    /// List the two completions of an almost complete pair.
    Complements {
        file: PathBuf,
        pair: String,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        max_nodes: usize,
    },
    /// Run a named verification suite.
    VerifyPaper {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Golden node file replacing the built-in one for `s3-figure`.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<BoundQuiverAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    BoundQuiverAlgebra::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn seed() -> Result<u64> {
    match std::env::var("QTAU_SEED") {
        Ok(s) => s.trim().parse().with_context(|| format!("QTAU_SEED must be an unsigned integer, got `{s}`")),
        Err(_) => Ok(SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(0)),
    }
}

fn hasse(file: &Path, max_nodes: usize, dot: Option<&Path>, json: Option<&Path>) -> Result<u8> {
    let alg = load(file)?;
    let t = TauTilt::new(&alg);
    let poset = t.hasse(max_nodes)?;
    if let Some(p) = dot {
        fs::write(p, poset_to_dot(alg.name(), &poset, None)?)?;
    }
    if let Some(p) = json {
        fs::write(p, serde_json::to_string_pretty(&poset_to_json(&t, &poset))? + "\n")?;
    }
    println!("nodes={} arrows={} complete={}", poset.nodes.len(), poset.arrows.len(), poset.complete);
    if !poset.complete {
        eprintln!("node cap {max_nodes} reached; the poset is partial");
        return Ok(EXIT_PARTIAL);
    }
    Ok(0)
}

fn tau_cmd(file: &Path, module: &str) -> Result<u8> {
    let alg = load(file)?;
    let m = parse_module(&alg, module)?;
    let t = tau(&alg, &m);
    println!("dims={}", dim_vector_string(&alg, &t));
    if t.is_zero() {
        println!("tau M = 0");
    } else {
        println!("layers={}", loewy_diagram(&alg, &t));
        println!("uniserial={}", is_uniserial(&alg, &t));
    }
    Ok(0)
}

fn extend(file: &Path, at: &[String], out: &Path) -> Result<u8> {
    let b = load(file)?;
    let p0 = at.iter().map(|v| b.vertex(v.trim())).collect::<qtau_core::Result<Vec<_>>>()?;
    let ctx = one_point_extension(&b, &p0)?;
    fs::write(out, ctx.a.to_text())?;
    let q = ctx.a.quiver();
    let old: BTreeMap<String, usize> =
        (0..b.vertex_count()).map(|v| (b.quiver().vertex_label(v).to_string(), v)).collect();
    let arrows: Vec<_> = ctx
        .new_arrows
        .iter()
        .map(|&k| {
            let a = q.arrow(k);
            json!({"name": a.name, "source": q.vertex_label(a.source), "target": q.vertex_label(a.target)})
        })
        .collect();
    let map = json!({
        "base": b.name(),
        "extension": ctx.a.name(),
        "old_vertices": old,
        "new_vertex": {"label": q.vertex_label(ctx.v), "id": ctx.v},
        "new_arrows": arrows,
    });
    let sidecar = sidecar_path(out);
    fs::write(&sidecar, serde_json::to_string_pretty(&map)? + "\n")?;
    println!("wrote {} (dim {}) and {}", out.display(), ctx.a.dim(), sidecar.display());
    Ok(0)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".map.json");
    out.with_file_name(name)
}

fn mutate(file: &Path, pair: &str, at: &str) -> Result<u8> {
    let alg = load(file)?;
    let t = TauTilt::new(&alg);
    let (summands, support) = parse_pair(&alg, pair)?;
    let p = t.from_summands(&summands, &support);
    if !t.is_stt_pair(&p)? {
        bail!("`{pair}` is not a support tau-tilting pair");
    }
    let label = if p.summands.iter().any(|m| t.label_of(m) == at) {
        at.to_string()
    } else {
        match at.parse::<usize>() {
            Ok(k) if (1..=summands.len()).contains(&k) => t.label_of(&summands[k - 1]),
            Ok(k) => bail!("position {k} is out of range 1..={}", summands.len()),
            Err(_) => at.to_string(),
        }
    };
    let k = p
        .summands
        .iter()
        .position(|m| t.label_of(m) == label)
        .with_context(|| format!("no summand labelled `{label}`"))?;
    let step = t.left_mutation(&p, k)?;
    println!("from={}", t.key(&p).pretty());
    println!("at={label}");
    let codomain = if step.approximation.codomain.is_zero() {
        "0".to_string()
    } else {
        t.pair(&step.approximation.codomain, &[]).summands.iter().map(|m| t.label_of(m)).collect::<Vec<_>>().join(" + ")
    };
    println!("approximation={label} -> {codomain}");
    println!(
        "cokernel={}",
        if step.cokernel.is_zero() { "0".to_string() } else { loewy_diagram(&alg, &step.cokernel) }
    );
    println!("to={}", t.key(&step.result).pretty());
    Ok(0)
}

fn complements(file: &Path, pair: &str, max_nodes: usize) -> Result<u8> {
    let alg = load(file)?;
    let t = TauTilt::new(&alg);
    let (summands, support) = parse_pair(&alg, pair)?;
    let almost = t.from_summands(&summands, &support);
    if almost.size() + 1 != alg.vertex_count() || !t.is_tau_rigid_pair(&almost)? {
        bail!("`{pair}` is not an almost complete tau-rigid pair");
    }
    let poset = t.hasse(max_nodes)?;
    let base = t.key(&almost);
    for full in t.complements(&poset, &almost)? {
        let key = t.key(&full);
        let added: Vec<String> = key.modules.iter().filter(|m| !base.modules.contains(m)).cloned().collect();
        let added = match added.first() {
            Some(m) => format!("({m}, 0)"),
            None => {
                let v = key.support.iter().find(|s| !base.support.contains(s)).cloned().unwrap_or_default();
                format!("(0, P{v})")
            }
        };
        println!("{added} -> {}", key.pretty());
    }
    Ok(0)
}

fn verify(suite: &str, json: Option<&Path>, golden: Option<&Path>) -> Result<u8> {
    let seed = seed()?;
    let a1b_golden = golden.map(fs::read_to_string).transpose().context("reading golden file")?;
    let report = run_suite_with(suite, &SuiteOptions { seed, a1b_golden })?;
    println!("{report}");
    if suite == "properties" {
        println!("seed={seed}");
    }
    if let Some(p) = json {
        fs::write(p, report.to_json() + "\n")?;
    }
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Hasse { file, max_nodes, dot, json } => hasse(&file, max_nodes, dot.as_deref(), json.as_deref()),
        Command::Tau { file, module } => tau_cmd(&file, &module),
        Command::Extend { file, at, out } => extend(&file, &at, &out),
        Command::Mutate { file, pair, at } => mutate(&file, &pair, &at),
        Command::Complements { file, pair, max_nodes } => complements(&file, &pair, max_nodes),
        Command::VerifyPaper { suite, json, golden } => verify(&suite, json.as_deref(), golden.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
