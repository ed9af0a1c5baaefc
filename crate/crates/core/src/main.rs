use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use braidrep::cli::{self, ExtensionTarget, RepArgs, RepKind, RunReport, UsageError};
use braidrep::{LaurentPoly, Mode, Q};

/// Exact computations with braid group representations and their
/// singular and virtual extensions.
#[derive(Parser)]
#[command(name = "braidrep", version)]
struct Cli {
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RepOpts {
    /// standard, burau, f, singular-ext or vsb2
    kind: RepKind,
    n: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    a: LaurentPoly,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    c: LaurentPoly,
    /// Involution family (1-5) for vsb2.
    #[arg(long, default_value_t = 5)]
    family: u8,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    p: LaurentPoly,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    q: LaurentPoly,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    r: LaurentPoly,
    /// Require singular images to be invertible.
    #[arg(long)]
    group: bool,
}

impl RepOpts {
    fn to_args(&self) -> RepArgs {
        RepArgs {
            kind: self.kind,
            n: self.n,
            a: self.a.clone(),
            c: self.c.clone(),
            family: self.family,
            p: self.p.clone(),
            q: self.q.clone(),
            r: self.r.clone(),
            group: self.group,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator images of a representation.
    ShowRep(RepOpts),
    /// Check a representation against the defining relations.
    Verify {
        #[command(flatten)]
        rep: RepOpts,
        /// braid, singular or virtual
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Solve for the singular (sb) or virtual (vsb2, vsb) generator images.
    SolveExtension { target: ExtensionTarget, n: usize },
    /// Decide irreducibility of the singular extension.
    Irreducible {
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<Q>,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        a: LaurentPoly,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        c: LaurentPoly,
        /// Keep t transcendental and work over Q(t).
        #[arg(long, conflicts_with = "t")]
        symbolic: bool,
    },
    /// Sweep (t, a, c) cells described by a JSON file.
    Grid { n: usize, spec_file: PathBuf },
    /// Evaluate commutators of pure braid generators.
    KernelProbe {
        n: usize,
        /// Pairs like "1,2:1,3;1,2:3,4"; defaults to all pairs sharing a strand.
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "c")]
        a: Option<LaurentPoly>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        c: Option<LaurentPoly>,
    },
    /// List the involution families and classify random involutions.
    Involutions {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Defaults to BRAIDREP_SEED, or 0.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn run(cmd: Command) -> Result<RunReport, UsageError> {
    match cmd {
        Command::ShowRep(rep) => cli::show_rep(&rep.to_args()),
        Command::Verify { rep, mode } => cli::verify(&rep.to_args(), mode),
        Command::SolveExtension { target, n } => cli::solve_extension(target, n),
        Command::Irreducible { n, t, a, c, symbolic } => {
            let t0 = match (t, symbolic) {
                (Some(t), _) => Some(t),
                (None, true) => None,
                (None, false) => return Err(UsageError("give --t <value> or --symbolic".into())),
            };
            cli::irreducible(&cli::IrreducibleArgs { n, t0, a, c })
        }
        Command::Grid { n, spec_file } => {
            let text = std::fs::read_to_string(&spec_file)
                .map_err(|e| UsageError(format!("{}: {e}", spec_file.display())))?;
            let mut spec: cli::GridSpec =
                serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", spec_file.display())))?;
            if spec.n.is_empty() {
                spec.n = vec![n];
            }
            cli::grid(&spec)
        }
        Command::KernelProbe { n, pairs, a, c } => {
            let pairs = match pairs {
                Some(p) => cli::parse_pairs(&p)?,
                None => Vec::new(),
            };
            cli::kernel_probe(&cli::KernelArgs { n, pairs, ac: a.zip(c) })
        }
        Command::Involutions { samples, seed } => {
            cli::involutions(samples, seed.unwrap_or_else(braidrep::sample::seed_from_env))
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(report) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json"));
            } else {
                print!("{}", report.text);
                println!("status: {}", report.status.as_str());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(UsageError::EXIT_CODE as u8)
        }
    }
}
