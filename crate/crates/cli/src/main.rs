use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcext::error::{Error, ErrorKind};
use qcext::explorer::{self, SearchConfig};
use qcext::gf::FieldSpec;
use qcext::pipeline::{analyze, CodeSpec, Mode, RunOptions};
use qcext::poly::factor_xn_minus_1;
use qcext::qcc::ExtensionKind;
use qcext::quantum::gv_bound;
use qcext::tables;

#[derive(Parser)]
#[command(name = "qcext", version, about = "Extended quasi-cyclic codes and the quantum codes built from them")]
struct Cli {
    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunFlags {
    /// Also write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Enumerate codes beyond the long-run threshold, with no message budget.
    #[arg(long)]
    allow_long: bool,
    /// Maximum number of enumerated messages per code.
    #[arg(long)]
    budget: Option<u128>,
    /// Report dimensions and entanglement without distances for codes over budget.
    #[arg(long)]
    bookkeeping: bool,
}

impl RunFlags {
    fn options(&self) -> RunOptions {
        let mut opts = RunOptions { allow_long: self.allow_long, require_distances: !self.bookkeeping, ..RunOptions::default() };
        if let Some(b) = self.budget {
            opts.budget = b;
        }
        opts
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    SelfOrthogonal,
    Entangled,
}

#[derive(Subcommand)]
enum Command {
    /// Build the code described by a JSON spec and report its parameters.
    Verify {
        spec: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Evaluate the quantum Gilbert-Varshamov bound for [[n,k,d]]_q.
    Gv {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Irreducible monic factors of x^n - 1 over GF(q²).
    Factor {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
    },
    /// Randomized search for good codes, or a summary of earlier results.
    Search {
        /// JSON search configuration.
        #[arg(long, required_unless_present = "summarize")]
        config: Option<PathBuf>,
        /// Overrides the configured seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the configured output file.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Summarize a JSONL result file instead of searching.
        #[arg(long, conflicts_with = "config")]
        summarize: Option<PathBuf>,
    },
    /// Recompute the built-in reference rows of a table.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        id: u8,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Search for extension vectors of (f, g) and report the extended code.
    Extend {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value = "self-orthogonal")]
        kind: Kind,
        /// Append two rows and columns instead of one.
        #[arg(long)]
        two: bool,
        #[command(flatten)]
        flags: RunFlags,
    },
}

enum Failure {
    Lib(Error),
    Rows,
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Lib(e.into())
    }
}

fn error_object(e: &Error) -> Value {
    let kind = match e.kind() {
        ErrorKind::Input => "input",
        ErrorKind::Budget => "budget",
        ErrorKind::Precondition => "precondition",
        ErrorKind::Io => "io",
        ErrorKind::Internal => "internal",
    };
    let mut obj = json!({ "code": e.code(), "kind": kind, "message": e.to_string() });
    if let Error::BudgetExceeded { required, budget } = e {
        obj["cost"] = json!({ "messages": required.to_string(), "budget": budget.to_string() });
    }
    json!({ "error": obj })
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Input | ErrorKind::Io => 2,
        ErrorKind::Budget => 3,
        ErrorKind::Precondition => 4,
        ErrorKind::Internal => 1,
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), Error> {
    fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

fn report(spec: &CodeSpec, flags: &RunFlags) -> Result<(), Failure> {
    let report = analyze(spec, &flags.options())?;
    print!("{}", report.to_text());
    if let Some(path) = &flags.json {
        write_json(path, &report)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { spec, flags } => {
            let text = fs::read_to_string(&spec)?;
            report(&CodeSpec::from_json(&text)?, &flags)
        }
        Command::Gv { q, n, k, d } => {
            FieldSpec::new(q)?;
            println!("[[{n},{k},{d}]]_{q}: {}", gv_bound(n, k, d, q));
            Ok(())
        }
        Command::Factor { q, n } => {
            let field = FieldSpec::new(q)?;
            let factors = factor_xn_minus_1(&field, n)?;
            println!("x^{n}-1 over GF({}) has {} irreducible factors:", field.order(), factors.len());
            for f in factors {
                println!("  {}  (degree {})", f.render(), f.degree().unwrap_or(0));
            }
            Ok(())
        }
        Command::Search { summarize: Some(path), .. } => {
            for row in explorer::report(&path)? {
                let reference = row.reference.as_deref().unwrap_or("-");
                println!("q={} n={} [{},{}]: {}   reference: {reference}", row.q, row.n, row.length, row.k, row.found);
            }
            Ok(())
        }
        Command::Search { config, seed, output, .. } => {
            let path = config.expect("clap requires --config");
            let mut config: SearchConfig =
                serde_json::from_str(&fs::read_to_string(&path)?).map_err(|e| Error::Spec(e.to_string()))?;
            if let Some(s) = seed {
                config.rng_seed = s;
            }
            if output.is_some() {
                config.output_path = output;
            }
            let summary = explorer::search(&config, |rec| println!("{}", rec.summary()))?;
            println!("{}", serde_json::to_string(&summary)?);
            Ok(())
        }
        Command::Table { id, flags } => {
            let opts = flags.options();
            let outcomes: Vec<_> = tables::rows(id).map(|row| tables::verify_row(row, id, &opts)).collect();
            for o in &outcomes {
                println!("{}", o.line());
            }
            if let Some(path) = &flags.json {
                write_json(path, &outcomes)?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            println!("{} of {} rows pass", outcomes.len() - failed, outcomes.len());
            if failed > 0 {
                return Err(Failure::Rows);
            }
            Ok(())
        }
        Command::Extend { q, n, f, g, kind, two, flags } => {
            let mut spec = CodeSpec::base(q, n, &f, &g);
            spec.mode = if two { Mode::ExtendTwo } else { Mode::ExtendOne };
            spec.kind = Some(match kind {
                Kind::SelfOrthogonal => ExtensionKind::SelfOrthogonal,
                Kind::Entangled => ExtensionKind::Entangled,
            });
            report(&spec, &flags)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rows) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("{}", error_object(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}
