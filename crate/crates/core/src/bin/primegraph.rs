use clap::{Parser, Subcommand};
use primegraph::chains::{chain_radius, is_prime};
use primegraph::configs::{build_config, ConfigKind};
use primegraph::error::{Error, Result};
use primegraph::graph::{emit_adjacency_list, emit_graph6, parse_auto, Graph};
use primegraph::pipeline::{
    find_witness, oracle_check, rows_to_csv, run_corpus, RunConfig,
};
use primegraph::ramsey::{bound_report, compare_bounds};
use primegraph::typetree::{arrange_full, SelectionPolicy};
use primegraph::configs::ladder_index;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "primegraph", about = "prime-graph structure toolkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test primality (no nontrivial module); prints a counterexample module otherwise
    IsPrime { file: String },
    /// Smallest n such that every triple admits a chain of length <= n
    ChainRadius { file: String },
    /// Arrange the graph into a type tree (JSON; optional DOT output)
    TypeTree {
        file: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Largest n with an induced half-graph pattern of height n
    LadderIndex {
        file: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Staged witness search with full decision trace
    FindWitness {
        file: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the explicit bound chain at n
    Bounds {
        #[arg(long)]
        n: u64,
    },
    /// Check each link of the asymptotic comparison at n
    CompareBounds {
        #[arg(long)]
        n: u64,
    },
    /// Cross-check fast paths against exhaustive oracles (order <= 8)
    OracleCheck { file: String },
    /// Per-graph statistics over a corpus ("order:N", "connected-order:N", or a file)
    Corpus {
        spec: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Build a named configuration at height n
    Generate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graph6: bool,
    },
}

fn read_graph(path: &str) -> Result<Graph> {
    let body = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {path:?}: {e}")))?
    };
    parse_auto(body.trim())
}

/// Exit code 1 signals a negative-but-valid answer (not prime, no witness).
fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::IsPrime { file } => {
            let g = read_graph(&file)?;
            let r = is_prime(&g);
            if r.prime {
                println!("prime");
                Ok(0)
            } else {
                let m: Vec<usize> = r.counterexample.unwrap().iter().collect();
                println!("not prime: module {m:?}");
                Ok(1)
            }
        }
        Cmd::ChainRadius { file } => {
            let g = read_graph(&file)?;
            match chain_radius(&g)? {
                Some(r) => {
                    println!("{r}");
                    Ok(0)
                }
                None => {
                    println!("none (some triple admits no chain)");
                    Ok(1)
                }
            }
        }
        Cmd::TypeTree { file, seed, dot } => {
            let g = read_graph(&file)?;
            let (policy, seed) = match seed {
                Some(s) => (SelectionPolicy::SeededRandom, s),
                None => (SelectionPolicy::MinIndex, 0),
            };
            let tree = arrange_full(&g, policy, seed)?;
            println!("{}", tree.to_json());
            if let Some(path) = dot {
                std::fs::write(&path, tree.to_dot())
                    .map_err(|e| Error::Input(format!("cannot write {path:?}: {e}")))?;
            }
            Ok(0)
        }
        Cmd::LadderIndex { file, cap } => {
            let g = read_graph(&file)?;
            let mut budget = 50_000_000u64;
            let r = ladder_index(&g, cap.unwrap_or(g.order()), &mut budget)?;
            println!(
                "{}{}",
                r.value,
                if r.exact { "" } else { " (lower bound: budget exhausted)" }
            );
            Ok(0)
        }
        Cmd::FindWitness { file, n, budget, json } => {
            let g = read_graph(&file)?;
            let mut cfg = RunConfig::new(n)?;
            if let Some(b) = budget {
                cfg.chain_budget = b;
                cfg.tree_budget = b;
                cfg.detector_budget = b;
            }
            let r = find_witness(&g, &cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("json"));
            } else {
                for line in &r.trace {
                    eprintln!("# {line}");
                }
                match &r.witness {
                    Some(w) => println!(
                        "{} height {} via {:?}{}",
                        w.kind.name(),
                        w.height,
                        r.route,
                        if w.complemented { " (complemented)" } else { "" }
                    ),
                    None => println!("no witness found"),
                }
            }
            Ok(if r.witness.is_some() { 0 } else { 1 })
        }
        Cmd::Bounds { n } => {
            let r = bound_report(n)?;
            println!("{}", serde_json::to_string_pretty(&r).expect("json"));
            Ok(0)
        }
        Cmd::CompareBounds { n } => {
            let v = compare_bounds(n)?;
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(if v.all_hold { 0 } else { 1 })
        }
        Cmd::OracleCheck { file } => {
            let g = read_graph(&file)?;
            let r = oracle_check(&g)?;
            for c in &r.checks {
                println!("{}: {} ({})", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
            }
            Ok(if r.all_pass { 0 } else { 1 })
        }
        Cmd::Corpus { spec, out, n } => {
            let cfg = RunConfig::new(n)?;
            let rows = run_corpus(&spec, &cfg)?;
            let csv = rows_to_csv(&rows);
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .map_err(|e| Error::Input(format!("cannot write {path:?}: {e}")))?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
        Cmd::Generate { kind, n, graph6 } => {
            let kind = ConfigKind::from_str(&kind)?;
            let g = build_config(kind, n)?;
            if graph6 {
                println!("{}", emit_graph6(&g));
            } else {
                print!("{}", emit_adjacency_list(&g));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
