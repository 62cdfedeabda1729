use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtorus_core::forcing::{predicted_max_forcing, DEFAULT_VERTEX_BUDGET};
use qtorus_core::harness::{
    analyze, explore_open, load_instance, parse_list, rows_to_csv, verify, MatchingSource,
    SweepSpec,
};
use qtorus_core::torus::{check_star, classify, TorusClass, TorusGraph, TorusParams};
use qtorus_core::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "qtorus", version, about = "Forcing numbers of perfect matchings on quadriculated tori")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    n: usize,
    m: usize,
    r: usize,
}

impl Params {
    fn parse(self) -> Result<TorusParams, Error> {
        TorusParams::new(self.n, self.m, self.r)
    }
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatchingArg {
    #[value(name = "enumerate-all")]
    EnumerateAll,
    #[value(name = "M1-vertical")]
    M1Vertical,
    #[value(name = "M1-horizontal")]
    M1Horizontal,
    #[value(name = "from-file")]
    FromFile,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of T(n,m,r).
    Gen {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Print the parity class and the closed-form prediction.
    Classify {
        #[command(flatten)]
        params: Params,
    },
    /// Forcing number of one matching, or the whole spectrum.
    Analyze {
        /// n m r (omit when --graph-file is given).
        #[arg(num_args = 3, value_names = ["N", "M", "R"])]
        params: Vec<usize>,
        /// Edge-list file with a `p torus n m r` header.
        #[arg(long, conflicts_with = "params")]
        graph_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "enumerate-all")]
        matching: MatchingArg,
        /// Edge-list file of the matched edges (for `--matching from-file`).
        #[arg(long, required_if_eq("matching", "from-file"))]
        matching_file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Check the closed forms and constructions over a parameter sweep.
    Verify {
        /// Classes to include (repeatable; default: the five solved classes).
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long, default_value_t = 24)]
        max_vertices: usize,
        /// Largest instance the exhaustive solver may be run on.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Exact values for the unsolved class T(2n+1, 2m, 2r-1).
    ExploreOpen {
        /// Row counts, e.g. `3` or `3,5` or `3..7`.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long, default_value_t = 24)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Print the parameters of T* and check the isomorphism.
    Star {
        #[command(flatten)]
        params: Params,
    },
}

enum Failure {
    /// A verification mismatch.
    Mismatch,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Error(Error::InvalidParams(format!("{}: {e}", path.display())))
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::InvalidParams(e.to_string()))?;
    }
    match cli.command {
        Command::Gen { params, out } => {
            let t = TorusGraph::new(params.parse()?)?;
            emit(&out, &t.to_edge_list())
        }
        Command::Classify { params } => {
            let p = params.parse()?;
            let tag = classify(p)?;
            let record = json!({
                "params": p,
                "class": tag.class.name(),
                "pattern": tag.class.pattern(),
                "normalized": { "n": tag.n, "m": tag.m, "r": tag.r },
                "predicted": predicted_max_forcing(p)?,
                "i_cycles": p.g(),
            });
            print!("{}", to_json(&record));
            Ok(())
        }
        Command::Analyze {
            params,
            graph_file,
            matching,
            matching_file,
            max_vertices,
            out,
        } => {
            let t = match (graph_file, params.as_slice()) {
                (Some(path), _) => load_instance(&read(&path)?)?,
                (None, &[n, m, r]) => TorusGraph::new(TorusParams::new(n, m, r)?)?,
                _ => {
                    return Err(Error::InvalidParams("give n m r or --graph-file".into()).into())
                }
            };
            let source = match matching {
                MatchingArg::EnumerateAll => MatchingSource::EnumerateAll,
                MatchingArg::M1Vertical => MatchingSource::M1Vertical,
                MatchingArg::M1Horizontal => MatchingSource::M1Horizontal,
                MatchingArg::FromFile => {
                    MatchingSource::FromFile(read(&matching_file.expect("required by clap"))?)
                }
            };
            emit(&out, &to_json(&analyze(&t, &source, max_vertices)?))
        }
        Command::Verify {
            classes,
            max_vertices,
            budget,
            format,
            out,
        } => {
            let classes: Vec<TorusClass> = if classes.is_empty() {
                TorusClass::ALL.into_iter().filter(|c| c.is_solved()).collect()
            } else {
                classes.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
            };
            let manifest = verify(&SweepSpec::classes(classes, max_vertices), budget)?;
            let text = match format {
                Format::Json => to_json(&manifest),
                Format::Csv => rows_to_csv(manifest.records.iter().map(|r| &r.row))?,
            };
            emit(&out, &text)?;
            if manifest.has_failures() {
                return Err(Failure::Mismatch);
            }
            Ok(())
        }
        Command::ExploreOpen {
            n,
            m,
            r,
            max_vertices,
            budget,
            format,
            out,
        } => {
            let list = |s: Option<String>| s.as_deref().map(parse_list).transpose();
            let mut spec = SweepSpec::classes([TorusClass::OeOdd], max_vertices);
            spec.rows = list(n)?;
            spec.cols = list(m)?;
            spec.torsions = list(r)?;
            let rows = explore_open(&spec, budget)?;
            let text = match format {
                Format::Json => to_json(&rows),
                Format::Csv => rows_to_csv(&rows)?,
            };
            emit(&out, &text)
        }
        Command::Star { params } => {
            let check = check_star(params.parse()?)?;
            print!("{}", to_json(&json!({ "check": check, "ok": check.ok() })));
            if check.ok() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
