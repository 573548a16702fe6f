use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trapeze::enumerate::{census, census_csv, verify_theorems, EnumerationSpec, Status};
use trapeze::Word;
use trapeze_cli::{graph_ascii, graph_csv, parse_word, AnalysisRecord};

#[derive(Parser)]
#[command(
    name = "trapeze",
    version,
    about = "Factor complexity and palindromic richness of finite words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one or more words.
    Analyze {
        words: Vec<String>,
        /// Read words from standard input, one per line.
        #[arg(long)]
        stdin: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Complexity graph of a word as `n,C(n)` CSV.
    Graph {
        word: String,
        /// Also draw the graph.
        #[arg(long)]
        ascii: bool,
    },
    /// Check every invariant over all canonical words within the bounds.
    Verify {
        #[arg(short = 'k', long = "alphabet")]
        alphabet: usize,
        #[arg(short = 'n', long = "max-length")]
        max_length: usize,
        #[arg(long, env = "TRAPEZE_JOBS")]
        jobs: Option<usize>,
    },
    /// Per-length counts of GT, rich GT, triangular and RK words.
    Census {
        #[arg(short = 'k', long = "alphabet")]
        alphabet: usize,
        #[arg(short = 'n', long = "max-length")]
        max_length: usize,
        /// Count words up to renaming of letters.
        #[arg(long)]
        canonical: bool,
        #[arg(long, env = "TRAPEZE_JOBS")]
        jobs: Option<usize>,
    },
}

const USAGE_ERROR: u8 = 2;

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE_ERROR)
}

fn threads(jobs: Option<usize>) -> Result<usize, String> {
    match jobs {
        Some(0) => Err("--jobs must be at least 1".into()),
        Some(n) => Ok(n),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn analyze(words: Vec<String>, stdin: bool, format: Format) -> ExitCode {
    let mut inputs = words;
    if stdin {
        for line in io::stdin().lock().lines() {
            match line {
                Ok(line) if line.trim().is_empty() => {}
                Ok(line) => inputs.push(line.trim().to_string()),
                Err(e) => return fail(e),
            }
        }
    }
    if inputs.is_empty() {
        return fail("no word given");
    }
    let mut out = io::stdout().lock();
    for text in &inputs {
        let record = match parse_word(text).and_then(|w| AnalysisRecord::new(&w)) {
            Ok(record) => record,
            Err(e) => return fail(format!("{text:?}: {e}")),
        };
        let rendered = match format {
            Format::Json => record.to_json() + "\n",
            Format::Table => record.to_table(),
        };
        if out.write_all(rendered.as_bytes()).is_err() {
            return ExitCode::FAILURE;
        }
    }
    ExitCode::SUCCESS
}

fn graph(text: &str, ascii: bool) -> ExitCode {
    let profile = match parse_word(text).and_then(|w: Word| trapeze::complexity::complexity_profile(&w)) {
        Ok(p) => p.values,
        Err(e) => return fail(format!("{text:?}: {e}")),
    };
    print!("{}", graph_csv(&profile));
    if ascii {
        print!("\n{}", graph_ascii(&profile));
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { words, stdin, format } => analyze(words, stdin, format),
        Command::Graph { word, ascii } => graph(&word, ascii),
        Command::Verify {
            alphabet,
            max_length,
            jobs,
        } => {
            let report = threads(jobs).map_err(|e| e.to_string()).and_then(|t| {
                EnumerationSpec::new(alphabet, max_length, true)
                    .and_then(|spec| verify_theorems(&spec, t))
                    .map_err(|e| e.to_string())
            });
            match report {
                Ok(report) => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
                    if report.iter().all(|r| r.status == Status::Pass) {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => fail(e),
            }
        }
        Command::Census {
            alphabet,
            max_length,
            canonical,
            jobs,
        } => {
            let rows = threads(jobs).map_err(|e| e.to_string()).and_then(|t| {
                EnumerationSpec::new(alphabet, max_length, canonical)
                    .and_then(|spec| census(&spec, t))
                    .map_err(|e| e.to_string())
            });
            match rows {
                Ok(rows) => {
                    print!("{}", census_csv(&rows));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
    }
}
