//! `raag` — classify defining graphs, certify Heisenberg embeddings of
//! their automorphism groups, and compute canonical forms of group
//! elements.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use raag::{analyze, CertificateBounds, Embedding, RaagElement, SimplicialGraph};

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "Right-angled Artin group automorphisms and Heisenberg embedding certificates",
    after_help = "Exit codes:\n  \
        0  success (witness found / certificate passed / word printed)\n  \
        1  usage, file, or parse error\n  \
        2  the graph has no witness pair\n  \
        3  the requested pair fails the witness hypothesis\n  \
        4  certificate checks failed"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph by its adjacent transvections and witness pairs
    Analyze {
        /// Graph file (`vertices:` line, then `edge:` lines)
        graph: PathBuf,
    },
    /// Check a witness pair and emit a Heisenberg embedding certificate
    Verify {
        /// Graph file
        graph: PathBuf,
        /// Dominated vertex of the pair
        a: String,
        /// Dominating vertex of the pair
        b: String,
        /// Half-width of the coordinate box swept for injectivity
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        injectivity_bound: i64,
        /// Largest exponents checked in the conjugation-power identity
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
        eq1_bound: i64,
        /// Largest power checked in the power-subgroup relations
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        power_bound: i64,
        /// Write the certificate here instead of stdout
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print the canonical form of a word
    Nf {
        /// Graph file
        graph: PathBuf,
        /// Word over the graph's vertex names, e.g. "a b^-1 c^2"
        word: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; only real usage errors
            // should report failure.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Analyze { graph } => analyze_command(&graph),
        Command::Verify {
            graph,
            a,
            b,
            injectivity_bound,
            eq1_bound,
            power_bound,
            output,
        } => verify_command(
            &graph,
            &a,
            &b,
            CertificateBounds {
                injectivity: injectivity_bound,
                eq1: eq1_bound,
                power: power_bound,
            },
            output.as_deref(),
        ),
        Command::Nf { graph, word } => nf_command(&graph, &word),
    };
    ExitCode::from(code)
}

fn load_graph(path: &Path) -> Result<Arc<SimplicialGraph>, u8> {
    let text = fs::read_to_string(path).map_err(|err| {
        eprintln!("error: cannot read {}: {err}", path.display());
        1u8
    })?;
    SimplicialGraph::parse(&text).map(Arc::new).map_err(|err| {
        eprintln!("error: {}: {err}", path.display());
        1u8
    })
}

fn analyze_command(path: &Path) -> u8 {
    let graph = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let report = analyze(&graph);
    println!("{report}");
    if report.has_witness() {
        0
    } else {
        2
    }
}

fn verify_command(
    path: &Path,
    a: &str,
    b: &str,
    bounds: CertificateBounds,
    output: Option<&Path>,
) -> u8 {
    let graph = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let vertex = |name: &str| {
        graph.vertex(name).map_err(|err| {
            eprintln!("error: {err}");
            1u8
        })
    };
    let (va, vb) = match (vertex(a), vertex(b)) {
        (Ok(va), Ok(vb)) => (va, vb),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let embedding = match Embedding::build(&graph, va, vb) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("hypothesis not satisfied: {err}");
            return 3;
        }
    };
    let certificate = match embedding.certify(bounds) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("error: {err}");
            return 1;
        }
    };
    let text = format!("{certificate}\n");
    match output {
        Some(out) => {
            if let Err(err) = fs::write(out, &text) {
                eprintln!("error: cannot write {}: {err}", out.display());
                return 1;
            }
            eprintln!("certificate written to {}", out.display());
        }
        None => print!("{text}"),
    }
    if certificate.passed() {
        0
    } else {
        4
    }
}

fn nf_command(path: &Path, word: &str) -> u8 {
    let graph = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match RaagElement::parse(&graph, word) {
        Ok(element) => {
            println!("{element}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}
