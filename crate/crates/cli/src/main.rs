mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use kmsgraph::Settings;

use commands::{CliError, Ctx, Output, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "kmsgraph",
    version,
    about = "Partition functions, critical temperatures and KMS data for directed multigraphs"
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Relative tolerance for radius comparisons and the criticality band.
    #[arg(long, global = true, env = "KMSGRAPH_TOLERANCE", default_value_t = 1e-9)]
    tolerance: f64,

    /// Iteration cap for power iteration.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_iter: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
#[group(required = true, multiple = false)]
pub struct BetaArgs {
    /// Inverse temperature.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,

    /// Inverse temperature given as `ln x`.
    #[arg(long, value_name = "X")]
    pub beta_log: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Components, radii, periods, critical values and minimal components.
    Analyze {
        file: PathBuf,
        /// Also recover Bratteli levels.
        #[arg(long)]
        bratteli: bool,
    },
    /// Fixed-target partition functions.
    Partition(PartitionArgs),
    /// KMS classification at one inverse temperature.
    Kms {
        file: PathBuf,
        #[command(flatten)]
        beta: BetaArgs,
    },
    /// Ground states with their path-count rows.
    Ground {
        file: PathBuf,
        /// Rows up to this length (default twice the vertex count).
        #[arg(long)]
        depth: Option<usize>,
        /// Emit the full `|w E^n v|` table instead.
        #[arg(long)]
        spectral_data: bool,
    },
    /// Level counts and growth of the cover tree at a vertex.
    Growth {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 80)]
        depth: usize,
        /// Width of the trailing window used for the rates.
        #[arg(long, default_value_t = kmsgraph::covertree::DEFAULT_WINDOW)]
        window: usize,
        /// Compare with the tree pruned to paths with infinite past.
        #[arg(long)]
        prune: bool,
    },
    /// Compare two graphs through their path-count fingerprints.
    Compare {
        first: PathBuf,
        second: PathBuf,
        /// Fingerprint depth (default twice the larger vertex count).
        #[arg(long)]
        depth: Option<usize>,
        /// Also run the exact isomorphism check.
        #[arg(long)]
        iso: bool,
    },
    /// Infinite graph families through closed forms and truncations.
    Family(FamilyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["vertex", "all"])))]
#[command(group(ArgGroup::new("mode").required(true).args(["beta", "beta_log", "closed_form", "series"])))]
pub struct PartitionArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub vertex: Option<String>,
    /// Every vertex at once (`H_E` for closed forms and series).
    #[arg(long)]
    pub all: bool,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, value_name = "X")]
    pub beta_log: Option<f64>,
    /// Exact rational closed form in `t = e^-beta`.
    #[arg(long)]
    pub closed_form: bool,
    /// The first N exact series coefficients.
    #[arg(long, value_name = "N")]
    pub series: Option<usize>,
    /// Absolute tolerance on the omitted tail.
    #[arg(long, default_value_t = 1e-12)]
    pub tail_tol: f64,
    /// Skip the criticality check and report a bare partial sum.
    #[arg(long)]
    pub force: bool,
    /// Terms summed with --force.
    #[arg(long, default_value_t = 1000)]
    pub terms: usize,
}

impl PartitionArgs {
    pub fn beta_args(&self) -> Option<BetaArgs> {
        (self.beta.is_some() || self.beta_log.is_some()).then_some(BetaArgs {
            beta: self.beta,
            beta_log: self.beta_log,
        })
    }
}

#[derive(Args)]
pub struct FamilyArgs {
    /// Include the truncated graph in the report.
    #[arg(long, global = true)]
    pub emit_graph: bool,
    #[command(subcommand)]
    pub kind: FamilyKind,
}

#[derive(Subcommand)]
pub enum FamilyKind {
    /// Loops at every `v_i` and steps `v_i -> v_{i+1}`.
    Ladder {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        beta: BetaArgs,
        /// Terms summed for the truncation check.
        #[arg(long, default_value_t = 200)]
        depth: usize,
    },
    /// Shortcuts `w_i -> w_{i+1}` beside chains of `a_i + 1` steps.
    #[command(group(ArgGroup::new("rule").required(true).args(["a", "affine"])))]
    Staircase {
        /// Explicit sequence `a_0,a_1,...`.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<u64>>,
        /// Affine rule `a_n = p n + q`, given as `p,q`.
        #[arg(long, value_delimiter = ',', value_name = "P,Q")]
        affine: Option<Vec<u64>>,
        #[command(flatten)]
        beta: BetaArgs,
        /// Number of terms for affine rules.
        #[arg(long, default_value_t = 50)]
        depth: usize,
    },
    /// Steps `v_n -> v_{n+1}` and skips `v_n -> v_{n+2}`.
    Skip {
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long, default_value_t = 40)]
        depth: usize,
    },
    /// Chains with `floor(d^n / (a_1 ... a_{n-1}))` parallel edges.
    Wild {
        /// Growth parameters, each above 1.
        #[arg(long, value_delimiter = ',')]
        d: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
}

fn run(cli: Cli, args: Vec<String>) -> Result<Output, CliError> {
    if !(cli.tolerance > 0.0) {
        return Err(CliError::input(format!("tolerance must be positive, got {}", cli.tolerance)));
    }
    let ctx = Ctx {
        settings: Settings {
            max_iter: cli.max_iter,
            ..Settings::with_tolerance(cli.tolerance)
        },
        args,
    };
    match cli.command {
        Command::Analyze { file, bratteli } => commands::analyze::run(&ctx, &file, bratteli),
        Command::Partition(p) => commands::partition::run(&ctx, &p),
        Command::Kms { file, beta } => commands::states::kms(&ctx, &file, beta),
        Command::Ground {
            file,
            depth,
            spectral_data,
        } => commands::states::ground(&ctx, &file, depth, spectral_data),
        Command::Growth {
            file,
            vertex,
            depth,
            window,
            prune,
        } => commands::growth::run(&ctx, &file, &vertex, depth, window, prune),
        Command::Compare {
            first,
            second,
            depth,
            iso,
        } => commands::compare::run(&ctx, &first, &second, depth, iso),
        Command::Family(f) => commands::family::run(&ctx, &f),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let json = cli.json;
    match run(cli, argv[1..].to_vec()) {
        Ok(out) => {
            for w in &out.report.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&out.report.to_json()).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
