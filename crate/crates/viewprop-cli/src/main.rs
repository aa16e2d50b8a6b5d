//! Benchmark command-line interface.
//!
//! Exit codes: 0 on success, 1 on usage or model errors, 2 on internal
//! invariant violations (including `--seed-check` failures).

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use viewprop::oracle;
use viewprop::oracle::theorems::CLAIMS;
use viewprop::search::{branch_and_bound, dfs, BranchSpec, RunStats};
use viewprop_cli::models::{self, Mode};

#[derive(Parser, Debug)]
#[command(name = "viewprop-cli", disable_help_subcommand = true)]
struct Cli {
    /// Model name: queens | alpha | golomb | bibd | steiner
    #[arg(long)]
    model: Option<String>,

    /// Model size (defaults per model: queens 8, golomb 8, bibd 7, steiner 7)
    #[arg(long)]
    size: Option<usize>,

    /// views | decomposed
    #[arg(long, default_value = "views")]
    mode: Mode,

    /// Enumerate all solutions
    #[arg(long, conflicts_with_all = ["first", "optimize"])]
    all: bool,

    /// Stop at the first solution (default action)
    #[arg(long, conflicts_with = "optimize")]
    first: bool,

    /// Branch and bound on the model objective
    #[arg(long)]
    optimize: bool,

    /// Output format: json | text
    #[arg(long, default_value = "text")]
    stats: StatsFmt,

    /// Run a fast self-check of the oracle suite and exit
    #[arg(long)]
    seed_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum StatsFmt {
    Json,
    Text,
}

impl std::str::FromStr for StatsFmt {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(StatsFmt::Json),
            "text" => Ok(StatsFmt::Text),
            other => Err(format!("unknown stats format '{other}' (json|text)")),
        }
    }
}

fn default_size(model: &str) -> usize {
    match model {
        "queens" | "golomb" => 8,
        "alpha" => 10,
        "bibd" | "steiner" => 7,
        _ => 0,
    }
}

/// Quick pass over the oracle catalog: every theorem claim at a modest
/// enumeration cap, plus the event-subscription checks.
fn seed_check() -> Result<(), String> {
    for case in oracle::catalog() {
        for claim in CLAIMS {
            oracle::check_theorem(&case, claim, 400)
                .map_err(|e| format!("{}/{claim:?}: {e}", case.name))?;
        }
        oracle::events::check_events(&case, 60)
            .map_err(|e| format!("{}/events: {e}", case.name))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), String> {
    let model = cli
        .model
        .as_deref()
        .ok_or_else(|| "missing --model".to_string())?;
    let size = cli.size.unwrap_or_else(|| default_size(model));
    let built = models::build(model, size, cli.mode)?;
    let branch = BranchSpec::default();

    let mode_str = match cli.mode {
        Mode::Views => "views",
        Mode::Decomposed => "decomposed",
    };
    let mut best: Option<i64> = None;
    let stats: RunStats = if cli.optimize {
        let obj = built
            .objective
            .ok_or_else(|| format!("model '{model}' has no objective to optimize"))?;
        let (opt, stats) = branch_and_bound(built.space, obj, branch);
        best = opt.map(|(_, v)| v);
        stats
    } else if cli.all {
        dfs(built.space, branch, None, |_| {})
    } else {
        dfs(built.space, branch, Some(1), |_| {})
    };

    match cli.stats {
        StatsFmt::Json => {
            let mut rec = json!({
                "model": model,
                "size": size,
                "mode": mode_str,
                "solutions": stats.solutions,
                "failures": stats.failures,
                "propagations": stats.propagations,
                "nodes": stats.nodes,
                "wall_ms": stats.wall_ms as u64,
            });
            if cli.optimize {
                rec["best"] = json!(best);
            }
            println!("{rec}");
        }
        StatsFmt::Text => {
            println!(
                "model={model} size={size} mode={mode_str} solutions={} failures={} \
                 propagations={} nodes={} wall_ms={}",
                stats.solutions, stats.failures, stats.propagations, stats.nodes, stats.wall_ms
            );
            if cli.optimize {
                match best {
                    Some(v) => println!("best={v}"),
                    None => println!("best=unsat"),
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints --help/--version output itself; those exit 0
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    if cli.seed_check {
        return match seed_check() {
            Ok(()) => {
                println!("seed-check: ok");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("seed-check failed: {e}");
                ExitCode::from(2)
            }
        };
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
