//! Command-line front end for the nerve toolkit.
//!
//! Every subcommand reads and writes the JSON formats of `nervekit::io`,
//! prints canonical output, and follows one exit-code contract: 0 for
//! success or yes, 1 for a well-formed no or reject, 2 for invalid input or
//! an internal failure with a single-line message on standard error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use nervekit::complex::SimplicialComplex;
use nervekit::io;
use nervekit::lifting::{lift_suspension, project_suspension};
use nervekit::nerve::{full_nerve, nerve_skeleton, verify_certificate, ConvexFamily};
use nervekit::oracle::{brute_nerve, random_family, GeneratorConfig};
use nervekit::recognize::{classify, decide_r_k11};
use nervekit::VertexId;

#[derive(Parser)]
#[command(name = "nervekit", version, about = "Exact nerves of convex polytope families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the k-skeleton of a family's nerve, or the whole nerve.
    Nerve {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
        /// Fill faces beyond the ambient dimension instead of stopping at k.
        #[arg(long)]
        full: bool,
    },
    /// Restrict a complex to faces of dimension at most k.
    Skeleton {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Suspend a complex over two fresh apex vertices.
    Suspend {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Lift a family one dimension up so its nerve becomes a suspension.
    Lift {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Slice a lifted family back down by a hyperplane separating the apexes.
    Project {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Check a realizability certificate against a complex.
    Verify {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Decide whether a complex is the k-skeleton of a nerve of intervals.
    #[command(name = "decide-r-k11")]
    DecideRK11 {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        k: usize,
        /// Also write the witness family to this file on yes.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Report the complexity status of recognition for parameters (k, j, d).
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        d: usize,
    },
    /// Add every face forced by intersection patterns of h-point subsets.
    HellyFill {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        h: usize,
    },
    /// Generate a reproducible random family of polytopes.
    RandomFamily {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        d: usize,
        /// Confine members to random flats of this dimension.
        #[arg(long)]
        flat_dim: Option<usize>,
    },
    /// Compute the full nerve by brute-force subset enumeration.
    OracleNerve {
        #[arg(long)]
        family: PathBuf,
    },
}

fn read_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::complex_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_family(path: &Path) -> anyhow::Result<ConvexFamily> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::family_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn vertex(label: &str) -> anyhow::Result<VertexId> {
    Ok(VertexId::new(label)?)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Nerve { family, k, full } => {
            let f = read_family(&family)?;
            let complex = if full { full_nerve(&f) } else { nerve_skeleton(&f, k)? };
            println!("{}", io::complex_to_json(&complex));
        }
        Command::Skeleton { complex, k } => {
            let c = read_complex(&complex)?;
            println!("{}", io::complex_to_json(&c.skeleton(k)));
        }
        Command::Suspend { complex, a, b } => {
            let c = read_complex(&complex)?;
            let suspended = c.suspension(&vertex(&a)?, &vertex(&b)?)?;
            println!("{}", io::complex_to_json(&suspended));
        }
        Command::Lift { family, j, a, b } => {
            let f = read_family(&family)?;
            let lifted = lift_suspension(&f, j, &vertex(&a)?, &vertex(&b)?)?;
            println!("{}", io::family_to_json(&lifted));
        }
        Command::Project { family, a, b } => {
            let f = read_family(&family)?;
            let projected = project_suspension(&f, &vertex(&a)?, &vertex(&b)?)?;
            println!("{}", io::family_to_json(&projected));
        }
        Command::Verify { complex, k, j, d, certificate } => {
            let c = read_complex(&complex)?;
            let text = fs::read_to_string(&certificate)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let cert = io::certificate_from_json(&text)
                .with_context(|| format!("parsing {}", certificate.display()))?;
            let report = verify_certificate(&c, k, j, d, &cert)?;
            for line in &report.diagnostics {
                eprintln!("{line}");
            }
            if !report.accepted {
                return Ok(ExitCode::from(1));
            }
        }
        Command::DecideRK11 { complex, k, witness } => {
            let c = read_complex(&complex)?;
            let decision = decide_r_k11(&c, k)?;
            let Some(family) = decision.witness else {
                return Ok(ExitCode::from(1));
            };
            let json = io::family_to_json(&family);
            if let Some(path) = witness {
                fs::write(&path, format!("{json}\n"))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!("{json}");
        }
        Command::Classify { k, j, d } => {
            let status = classify(k, j, d)?;
            println!("{}", io::status_to_json(&status));
        }
        Command::HellyFill { complex, h } => {
            let c = read_complex(&complex)?;
            println!("{}", io::complex_to_json(&c.helly_fill(h)?));
        }
        Command::RandomFamily { seed, count, d, flat_dim } => {
            let mut cfg = GeneratorConfig::new(seed, count, d);
            cfg.flat_dim = flat_dim;
            let f = random_family(&cfg)?;
            println!("{}", io::family_to_json(&f));
        }
        Command::OracleNerve { family } => {
            let f = read_family(&family)?;
            println!("{}", io::complex_to_json(&brute_nerve(&f)?));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        use clap::error::ErrorKind;
        if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
            e.exit();
        }
        let text = e.to_string();
        let first = text.lines().next().unwrap_or("invalid arguments");
        let first = first.strip_prefix("error: ").unwrap_or(first);
        eprintln!("error: {first}");
        std::process::exit(2);
    });
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
