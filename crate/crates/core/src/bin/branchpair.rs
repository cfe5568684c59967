use std::error::Error as StdError;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use branchpair::branchings::{find_good_pair, find_strong_arc_decomposition};
use branchpair::catalog::{self, all_keys};
use branchpair::connectivity::arc_strong_connectivity;
use branchpair::digraph::{
    is_semicomplete, parse_digraph, recognize_semicomplete_split, to_arc_list, to_dot, to_dot_highlighted, Digraph,
};
use branchpair::verify::{self, exhaustive_report, randomized_check, ReportOptions, Scope, VerificationReport};

type CliResult<T> = Result<T, Box<dyn StdError>>;

#[derive(Parser)]
#[command(
    name = "branchpair",
    version,
    about = "Good pairs of branchings and strong arc decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arc-strong connectivity, semicompleteness and split recognition.
    Check {
        file: PathBuf,
        /// Exit 1 when the arc-strong connectivity is below this.
        #[arg(long, default_value_t = 2)]
        min_k: u32,
    },
    /// Decide whether a good (u, v)-pair exists.
    Goodpair {
        file: PathBuf,
        u: String,
        v: String,
        /// Print both branchings.
        #[arg(long)]
        certificate: bool,
        /// Write the digraph with the pair highlighted as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Good-pair matrix over all ordered vertex pairs (rows: out-root).
    Matrix {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search for a strong arc decomposition.
    Decompose { file: PathBuf },
    /// Check the catalog digraphs against the case analysis.
    VerifyCatalog {
        #[arg(long, default_value = "paper16", value_parser = parse_scope)]
        scope: Scope,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Monte Carlo good-pair matrix from sampled spanning trees.
    Randomized {
        file: PathBuf,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write every catalog digraph as `<name>.arcs` and `<name>.dot`.
    ExportCatalog { dir: PathBuf },
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: branchpair::Error| e.to_string())
}

fn load(path: &Path) -> CliResult<Digraph> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_digraph(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_matrix(report: &VerificationReport) {
    let width = report.vertices.iter().map(String::len).max().unwrap_or(1);
    let head = width.max("out\\in".len());
    print!("{:>head$} ", "out\\in");
    for v in &report.vertices {
        print!(" {v:>width$}");
    }
    println!();
    for (u, row) in report.vertices.iter().zip(&report.matrix) {
        print!("{u:>head$} ");
        for &cell in row {
            print!(" {:>width$}", if cell { "1" } else { "." });
        }
        println!();
    }
    let good = report.matrix.iter().flatten().filter(|&&c| c).count();
    println!("good pairs: {good}/{}", report.n * report.n);
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Check { file, min_k } => {
            let d = load(&file)?;
            let cert = arc_strong_connectivity(&d);
            println!("vertices: {}, arcs: {}", d.n(), d.arc_count());
            println!("arc-strong connectivity: {}", cert.k);
            if let Some(cut) = &cert.witness_cut {
                let names: Vec<String> = cut.iter().map(|&a| d.arc_name(a)).collect();
                println!("minimum cut: [{}]", names.join(", "));
            }
            println!("semicomplete: {}", is_semicomplete(&d));
            match recognize_semicomplete_split(&d) {
                Some(p) => {
                    let names = |vs: &[_]| vs.iter().map(|&v| d.name(v)).collect::<Vec<_>>().join(" ");
                    println!(
                        "semicomplete split: V1 = {{{}}}, V2 = {{{}}}",
                        names(&p.v1),
                        names(&p.v2)
                    );
                }
                None => println!("semicomplete split: no"),
            }
            if cert.k < min_k {
                eprintln!("expected at least {min_k}-arc-strong, found {}", cert.k);
            }
            Ok(status(cert.k >= min_k))
        }
        Command::Goodpair {
            file,
            u,
            v,
            certificate,
            dot,
        } => {
            let d = load(&file)?;
            let (ru, rv) = (d.resolve(&u)?, d.resolve(&v)?);
            let Some(pair) = find_good_pair(&d, ru, rv)? else {
                println!("no good ({u},{v})-pair");
                return Ok(ExitCode::from(1));
            };
            println!("good ({},{})-pair", d.name(ru), d.name(rv));
            if certificate {
                let names = |arcs: &[_]| arcs.iter().map(|&a| d.arc_name(a)).collect::<Vec<_>>().join(" ");
                println!("out-branching at {}: {}", d.name(ru), names(&pair.out_branching.arcs));
                println!("in-branching at {}: {}", d.name(rv), names(&pair.in_branching.arcs));
            }
            if let Some(path) = dot {
                let text = to_dot_highlighted(&d, "goodpair", &pair.out_branching.arcs, &pair.in_branching.arcs);
                fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { file, json } => {
            let d = load(&file)?;
            let options = ReportOptions {
                certificates: true,
                decomposition: false,
            };
            let report = exhaustive_report("user", &d, options)?;
            print_matrix(&report);
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
            Ok(status(report.all_good))
        }
        Command::Decompose { file } => {
            let d = load(&file)?;
            match find_strong_arc_decomposition(&d)? {
                Some(dec) => {
                    let names = |arcs: &[_]| arcs.iter().map(|&a| d.arc_name(a)).collect::<Vec<_>>().join(" ");
                    println!("A1: {}", names(&dec.first));
                    println!("A2: {}", names(&dec.second));
                }
                None => println!("none"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCatalog { scope, json } => {
            let reports = verify::verify_catalog(scope)?;
            let mut ok = true;
            for report in &reports {
                let good = report.matrix.iter().flatten().filter(|&&c| c).count();
                let verdict = if report.passed() { "ok" } else { "FAIL" };
                println!(
                    "{:<24} k={} good={}/{} {verdict}",
                    report.graph,
                    report.k_arc_strong,
                    good,
                    report.n * report.n
                );
                for failure in &report.failures {
                    ok = false;
                    eprintln!("{}", serde_json::to_string(failure)?);
                }
            }
            println!("{} graphs, scope {scope}", reports.len());
            if let Some(path) = json {
                write_json(&path, &reports)?;
            }
            Ok(status(ok))
        }
        Command::Randomized {
            file,
            samples,
            seed,
            json,
        } => {
            let d = load(&file)?;
            let report = randomized_check(&d, samples, seed);
            print_matrix(&report);
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
            Ok(status(report.all_good))
        }
        Command::ExportCatalog { dir } => {
            fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for key in all_keys() {
                let d = catalog::build(key)?;
                let slug = key.slug();
                let notes = catalog::notes(key);
                let comments: Vec<&str> = notes.iter().map(String::as_str).collect();
                let arcs_path = dir.join(format!("{slug}.arcs"));
                fs::write(&arcs_path, to_arc_list(&d, &comments))
                    .map_err(|e| format!("{}: {e}", arcs_path.display()))?;
                let dot_path = dir.join(format!("{slug}.dot"));
                fs::write(&dot_path, to_dot(&d, &slug)).map_err(|e| format!("{}: {e}", dot_path.display()))?;
            }
            println!("wrote {} digraphs to {}", all_keys().len(), dir.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
