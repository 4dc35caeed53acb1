//! `lsc`: rank nodes by lexical sorting centrality and evaluate rankings
//! against SIR spreading.

mod commands;
mod config;
mod fetch;
mod registry;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use config::{RunArgs, RunConfig};
use registry::Registry;

#[derive(Parser)]
#[command(name = "lsc", version, about = "Lexical sorting centrality toolkit")]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute centrality measures and LSC, one CSV per method.
    Centrality(RunArgs),
    /// SIR spreading scores for every node, or a spread curve from chosen seeds.
    Sir(RunArgs),
    /// Compare every method with SIR ground truth (tau, top-x overlap, series).
    Evaluate(RunArgs),
    /// Time LSC against competitors.
    Bench(RunArgs),
    /// Print node count, edge count, mean and max degree, density.
    Stats(RunArgs),
    /// Download registry datasets into a data directory.
    Fetch(FetchArgs),
}

#[derive(clap::Args)]
struct FetchArgs {
    /// Dataset names; all downloadable ones if omitted.
    names: Vec<String>,
    #[arg(long, value_name = "DIR", default_value = "data")]
    data_dir: PathBuf,
    /// Read the archive from a local file instead of downloading it.
    #[arg(long, value_name = "FILE")]
    archive: Option<PathBuf>,
    /// List the registry and exit.
    #[arg(long)]
    list: bool,
}

fn set_threads(threads: Option<usize>) -> Result<()> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    Ok(())
}

fn run_fetch(args: &FetchArgs) -> Result<()> {
    let registry = Registry::builtin();
    if args.list {
        println!("name,nodes,edges,default_beta,source");
        for (name, e) in &registry.datasets {
            let origin = e.url.as_deref().or(e.generator.as_deref()).unwrap_or("");
            println!("{name},{},{},{},{origin}", e.nodes, e.edges, e.default_beta);
        }
        return Ok(());
    }
    let names: Vec<String> = if args.names.is_empty() {
        registry.datasets.iter().filter(|(_, e)| e.url.is_some()).map(|(n, _)| n.clone()).collect()
    } else {
        args.names.clone()
    };
    if args.archive.is_some() && names.len() != 1 {
        anyhow::bail!("--archive needs exactly one dataset name");
    }
    for name in names {
        let entry = registry.get(&name)?;
        let summary = fetch::fetch(&name, entry, &args.data_dir, args.archive.as_deref())?;
        if (summary.nodes, summary.edges) != (summary.expected_nodes, summary.expected_edges) {
            eprintln!(
                "note: {name} has {} nodes and {} edges; registry lists {} and {}",
                summary.nodes, summary.edges, summary.expected_nodes, summary.expected_edges
            );
        }
        println!("{}", serde_json::to_string(&summary)?);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let (args, action): (&RunArgs, fn(&RunConfig, &source::Source) -> Result<()>) = match &cli.command {
        Command::Fetch(args) => return run_fetch(args),
        Command::Centrality(a) => (a, commands::centrality),
        Command::Sir(a) => (a, commands::sir),
        Command::Evaluate(a) => (a, commands::evaluate),
        Command::Bench(a) => (a, commands::bench),
        Command::Stats(a) => (a, |_, s| commands::stats(s)),
    };
    let cfg = RunConfig::resolve(args, cli.threads)?;
    if let Some(path) = &args.dump_config {
        std::fs::write(path, cfg.to_toml()?).with_context(|| format!("writing {}", path.display()))?;
    }
    set_threads(cfg.threads)?;
    let source = source::load(&cfg)?;
    action(&cfg, &source)
}

fn error_kind(err: &anyhow::Error) -> &'static str {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<lsc_core::Error>() {
            return e.kind();
        }
        if cause.is::<std::io::Error>() {
            return "io";
        }
        if cause.is::<toml::de::Error>() {
            return "config";
        }
    }
    "error"
}

fn report(kind: &str, message: &str) {
    let line = serde_json::json!({ "error": kind, "message": message });
    eprintln!("{line}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            report("usage", first);
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let message: Vec<String> = err.chain().map(|c| c.to_string()).collect();
            report(error_kind(&err), &message.join(": "));
            ExitCode::FAILURE
        }
    }
}
