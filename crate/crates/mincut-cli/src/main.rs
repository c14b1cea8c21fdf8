//! `mincut`: global minimum cut of a weighted graph given in DIMACS form.
//!
//! Exit status is 0 on success, 1 when verification fails or the algorithm
//! gives up, and 2 for usage, input or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use mincut::approx::Constants;
use mincut::driver::{run_mincut, Algo, Report, RunConfig};
use mincut::graph::read_dimacs;
use mincut::Error;

#[derive(Debug, Parser)]
#[command(name = "mincut", version, about = "Global minimum cut of a weighted undirected graph")]
struct Args {
    /// Graph file: `p max <n> <m>` then `e <u> <v> <w>` lines, 1-based ids.
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One of exact, matula, kapprox, constapprox.
    #[arg(long, default_value = "exact")]
    algo: Algo,
    /// Number of packed spanning trees (default: ceil(delta * log2 n)).
    #[arg(long)]
    trees: Option<usize>,
    /// Worker threads, 0 for automatic.
    #[arg(long, env = "MINCUT_THREADS", default_value_t = 0)]
    threads: usize,
    /// Check the answer against the graph (and an exact oracle when small).
    #[arg(long)]
    verify: bool,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Approximation factor for kapprox.
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

impl Args {
    fn config(&self) -> RunConfig {
        let d = Constants::default();
        RunConfig {
            seed: self.seed,
            algo: self.algo,
            trees: self.trees,
            threads: self.threads,
            verify: self.verify,
            consts: Constants {
                alpha: self.alpha.unwrap_or(d.alpha),
                beta: self.beta.unwrap_or(d.beta),
                gamma: self.gamma.unwrap_or(d.gamma),
                delta: self.delta.unwrap_or(d.delta),
                eps: self.eps.unwrap_or(d.eps),
            },
            k: self.k,
            inject_fault: self.inject_fault,
        }
    }

    fn constants_invalid(&self) -> bool {
        [self.alpha, self.beta, self.gamma, self.delta, self.eps]
            .into_iter()
            .flatten()
            .any(|c| !c.is_finite() || c <= 0.0)
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. } | Error::InvalidEdge { .. } | Error::Disconnected | Error::WeightOverflow | Error::InvalidArgument(_)
    )
}

fn print_text(r: &Report) {
    println!("value: {}", r.value);
    let side: String = r.side.iter().map(|s| char::from(b'0' + s)).collect();
    println!("side: {side}");
    if let Some(w) = &r.witness {
        let edges: Vec<String> = w.edges.iter().map(|e| (e + 1).to_string()).collect();
        println!("witness: tree {} cuts input edges {}", w.tree, edges.join(" "));
    }
    if let Some(note) = &r.note {
        println!("note: {note}");
    }
    if let Some(v) = r.verified {
        println!("verified: {}", if v { "yes" } else { "NO" });
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.constants_invalid() {
        eprintln!("error: constants must be positive and finite");
        return ExitCode::from(2);
    }
    let text = match std::fs::read_to_string(&args.graph) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.graph.display());
            return ExitCode::from(2);
        }
    };
    let g = match read_dimacs(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {}: {e}", args.graph.display());
            return ExitCode::from(2);
        }
    };
    let (_, report) = match run_mincut(&g, &args.config()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_input_error(&e) { 2 } else { 1 });
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        print_text(&report);
    }
    if report.verified == Some(false) {
        eprintln!("error: verification failed");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
