use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use chromsym::csf::{a_coefficient_via_tableaux, chromatic_symmetric_function, CsfReport};
use chromsym::orderstruct::acyclic_orientation_sink_counts;
use chromsym::tableaux::{enumerate_p_tableaux, enumerate_srht};
use chromsym::verify::{scan_e_positivity, Report, Suite, EXIT_CONJECTURE_VIOLATION};
use chromsym::{Basis, Graph, Partition, Poset};
use clap::{Args, Parser, Subcommand};

/// Exit status for command-line misuse, kept apart from the suite codes.
const EXIT_USAGE: u8 = 64;
const EXIT_ERROR: u8 = 1;

#[derive(Parser)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions and P-tableau combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Machine-readable JSON
    #[arg(long)]
    json: bool,
    /// Tab-separated table, one row per partition
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Expand X_G of a graph in a chosen basis
    Csf {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "m")]
        basis: Basis,
        #[command(flatten)]
        format: Format,
    },
    /// Coefficient report for the incomparability graph of a poset
    Coeffs {
        #[arg(long)]
        poset: PathBuf,
        /// Also compute every a_λ as a signed count of special rim hook P-tableaux
        #[arg(long)]
        theorem1: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Acyclic orientations counted by number of sinks
    Orientations {
        #[arg(long)]
        graph: PathBuf,
    },
    /// List the P-tableaux of a shape
    Tableaux {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        shape: Partition,
    },
    /// List special rim hook tabloids of a shape
    Srht {
        #[arg(long)]
        shape: Partition,
        #[arg(long = "type")]
        type_: Option<Partition>,
    },
    /// Run an identity suite
    Verify {
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        /// Vertex bound for suites that sweep arbitrary graphs
        #[arg(long)]
        max_graph_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search for counterexamples to a conjecture
    Scan {
        #[command(subcommand)]
        target: ScanTarget,
    },
}

#[derive(Subcommand)]
enum ScanTarget {
    /// Negative e-coefficients among (3+1)-free incomparability graphs
    EPositivity {
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Where to write violations
        #[arg(long, default_value = "e-positivity-witness.json")]
        witness: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    read_file(path)?.parse().map_err(|e| format!("{}: {e}", path.display()))
}

fn load_poset(path: &Path) -> Result<Poset, String> {
    read_file(path)?.parse().map_err(|e| format!("{}: {e}", path.display()))
}

fn file_id(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn execute(command: Command) -> CmdResult {
    let err = |e: chromsym::Error| e.to_string();
    match command {
        Command::Csf { graph, basis, format } => {
            let g = load_graph(&graph)?;
            let x = chromatic_symmetric_function(&g).map_err(err)?.convert(basis).map_err(err)?;
            if format.json {
                println!("{}", to_json(&x.to_json())?);
            } else if format.tsv {
                println!("partition\t{basis}");
                for (p, c) in x.coeffs_by_partition() {
                    println!("{p}\t{c}");
                }
            } else {
                println!("{x}");
            }
        }
        Command::Coeffs { poset, theorem1, format } => {
            let p = load_poset(&poset)?;
            let report = CsfReport::new(file_id(&poset), &p.incomparability_graph()).map_err(err)?;
            let signed = if theorem1 {
                let values = report
                    .a
                    .iter()
                    .map(|c| a_coefficient_via_tableaux(&p, &c.partition))
                    .collect::<Result<Vec<i64>, _>>()
                    .map_err(err)?;
                Some(values)
            } else {
                None
            };
            if format.json {
                let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                if let Some(s) = &signed {
                    value["a_signed_tableaux"] = serde_json::json!(s);
                }
                println!("{}", to_json(&value)?);
            } else if format.tsv {
                print!("{}", report.to_tsv());
            } else {
                print!("{}", report.to_text());
                if let Some(s) = &signed {
                    let items: Vec<String> = report.a.iter().zip(s).map(|(c, v)| format!("{}:{v}", c.partition)).collect();
                    println!("a (signed special rim hook P-tableaux): {}", items.join(" "));
                }
            }
        }
        Command::Orientations { graph } => {
            let g = load_graph(&graph)?;
            let counts = acyclic_orientation_sink_counts(&g).map_err(err)?;
            for (l, k) in &counts.0 {
                println!("{l} {}: {k}", if *l == 1 { "sink" } else { "sinks" });
            }
        }
        Command::Tableaux { poset, shape } => {
            let p = load_poset(&poset)?;
            let all = enumerate_p_tableaux(&p, &shape).map_err(err)?;
            for t in &all {
                println!("{t}");
            }
            println!("{} P-tableaux of shape {shape}", all.len());
        }
        Command::Srht { shape, type_ } => {
            if shape.is_empty() {
                return Err("shape must be nonempty".into());
            }
            let all = enumerate_srht(&shape, type_.as_ref());
            for t in &all {
                println!("{t}");
            }
            let signed: i64 = all.iter().map(|t| t.sign()).sum();
            println!("{} tabloids, signed sum {signed}", all.len());
        }
        Command::Verify { suite, max_n, max_graph_n, jobs, json } => {
            for w in suite.warnings(max_n.unwrap_or(0), max_graph_n) {
                eprintln!("{w}");
            }
            let report = suite.run(max_n, max_graph_n, jobs.unwrap_or_else(default_jobs)).map_err(err)?;
            print_report(&report, json)?;
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Scan {
            target: ScanTarget::EPositivity { max_n, jobs, witness, json },
        } => {
            let suite = Suite::EPositivity;
            let n = max_n.unwrap_or(suite.default_max_n());
            for w in suite.warnings(n, None) {
                eprintln!("{w}");
            }
            let start = Instant::now();
            let report = scan_e_positivity(n, jobs.unwrap_or_else(default_jobs)).map_err(err)?;
            if !report.passed() {
                fs::write(&witness, to_json(&report.failures)? + "\n")
                    .map_err(|e| format!("{}: {e}", witness.display()))?;
                eprintln!("witnesses written to {}", witness.display());
            }
            if json {
                println!("{}", to_json(&report)?);
            } else {
                println!("{} violations among {} posets with at most {n} elements", report.failures.len(), report.instances);
                for w in &report.failures {
                    println!("  {}: {}", w.instance, w.message);
                }
                eprintln!("wall time: {} ms", start.elapsed().as_millis());
            }
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_CONJECTURE_VIOLATION as u8));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &Report, json: bool) -> Result<(), String> {
    if json {
        println!("{}", to_json(report)?);
    } else {
        print!("{}", report.summary());
        eprintln!("wall time: {} ms", report.wall_time_ms);
    }
    Ok(())
}
