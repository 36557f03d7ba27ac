mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use commands::{Failure, Output};

#[derive(Parser, Debug)]
#[command(name = "strlink", version, about = "Gassner and Burau matrices of string links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input files in the Morse DSL or braid shorthand.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Worker threads when several files are given.
    #[arg(long, value_name = "K")]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gassner matrix.
    Gassner(Common),
    /// One-variable Burau matrix.
    Burau(Common),
    /// Reduced Gassner matrix of a pure link.
    Reduce(Common),
    /// Alexander polynomials of the closure and the Alexander function.
    Alexander {
        #[command(flatten)]
        common: Common,
        /// Braid B for the knot-closure relation of the closure of L B.
        #[arg(long = "braid-b", value_name = "WORD")]
        braid_b: Option<String>,
    },
    /// String-link torsion.
    Torsion(Common),
    /// Every invariant with its consistency checks.
    Report(Common),
    /// Gassner matrix of the link with a twist added on one strand.
    Twist {
        #[command(flatten)]
        common: Common,
        /// 1-based strand.
        #[arg(long, default_value_t = 1)]
        strand: usize,
    },
    /// Taylor coefficients of the Gassner matrix at t = 1.
    Taylor {
        #[command(flatten)]
        common: Common,
        /// Truncation: keep total degrees up to N.
        #[arg(long, value_name = "N", default_value_t = 2)]
        order: u32,
    },
    /// Alternating sum over crossing changes.
    Altsum {
        #[command(flatten)]
        common: Common,
        /// 1-based event indices of the crossings to flip.
        #[arg(long, value_name = "i,j,...", value_delimiter = ',', required = true)]
        flips: Vec<usize>,
        /// Truncation; defaults to the number of flips plus two.
        #[arg(long, value_name = "N")]
        order: Option<u32>,
    },
    /// Compares the walk labeling matrix with the Fox-calculus Gassner matrix.
    Walkcheck {
        #[command(flatten)]
        common: Common,
        /// Print every edge label when the top of this strand carries 1.
        #[arg(long, value_name = "STRAND")]
        labels: Option<usize>,
    },
    /// Eigenvalues of the reduced Gassner matrix on the unit torus.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Angles a_j with t_j = exp(2 pi i a_j).
        #[arg(long, value_name = "a1,a2,...", value_delimiter = ',', allow_negative_numbers = true)]
        angles: Option<Vec<f64>>,
    },
    /// Runs the invariant suite; exits 2 on any violation.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Also check the knot-closure relation with this braid B.
        #[arg(long = "braid-b", value_name = "WORD")]
        braid_b: Option<String>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Gassner(c) | Command::Burau(c) | Command::Reduce(c) | Command::Torsion(c) | Command::Report(c) => c,
            Command::Alexander { common, .. }
            | Command::Twist { common, .. }
            | Command::Taylor { common, .. }
            | Command::Altsum { common, .. }
            | Command::Walkcheck { common, .. }
            | Command::Spectrum { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

fn run_all(cmd: &Command) -> Vec<(PathBuf, Result<Output, Failure>)> {
    let common = cmd.common();
    let one = |p: &PathBuf| (p.clone(), commands::run(cmd, p));
    match common.jobs {
        Some(k) if common.files.len() > 1 => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build().expect("thread pool");
            pool.install(|| common.files.par_iter().map(one).collect())
        }
        _ => common.files.iter().map(one).collect(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let common = cli.command.common().clone();
    let results = run_all(&cli.command);
    let many = results.len() > 1;
    let mut code = 0u8;
    let mut json_out = Vec::new();
    for (path, r) in results {
        let name = path.display().to_string();
        match r {
            Ok(out) => {
                if common.json {
                    json_out.push(json!({ "file": name, "result": out.json }));
                } else {
                    if many {
                        println!("== {name} ==");
                    }
                    print!("{}", out.text);
                }
                if let Some(v) = out.violation {
                    eprintln!("{name}: invariant violated: {v}");
                    code = code.max(2);
                }
            }
            Err(f) => {
                eprintln!("{name}: {}", f.message);
                code = code.max(f.code);
                if common.json {
                    json_out.push(json!({ "file": name, "error": f.message }));
                }
            }
        }
    }
    if common.json {
        let v = if many || json_out.iter().any(|o| o.get("error").is_some()) {
            Value::Array(json_out)
        } else {
            json_out.pop().and_then(|mut o| o.get_mut("result").map(Value::take)).unwrap_or(Value::Null)
        };
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    }
    ExitCode::from(code)
}
