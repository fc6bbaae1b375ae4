mod commands;
mod input;
mod report;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use report::Format;

/// Bad input or arguments; reported with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Exact computations with clean conic Lagrangian cycles, Weyl characters and
/// theta divisors.
#[derive(Debug, Parser)]
#[command(name = "tannaka", version)]
struct Cli {
    /// Output format; csv is available for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// A ppav with `k` ordinary double points on its theta divisor.
#[derive(Debug, Args)]
pub struct PpavArgs {
    /// Dimension of the abelian variety.
    #[arg(long)]
    pub g: Option<usize>,
    /// Number of ordinary double points.
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// The theta divisor is not symmetric.
    #[arg(long)]
    pub asymmetric: bool,
    /// The double points do not sum to zero.
    #[arg(long)]
    pub sum_nonzero: bool,
    /// Two double points differ by a torsion point.
    #[arg(long)]
    pub torsion_dependent: bool,
    /// The translation stabilizer of the theta divisor is nontrivial.
    #[arg(long)]
    pub nontrivial_stabilizer: bool,
    /// The Gauss map of the theta divisor is finite.
    #[arg(long)]
    pub gauss_finite: bool,
    /// Read the ppav from a JSON file instead of the flags.
    #[arg(long, conflicts_with_all = ["g", "asymmetric", "sum_nonzero", "torsion_dependent", "nontrivial_stabilizer", "gauss_finite"])]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a Schur, elementary or power-sum function in power sums.
    Symfun {
        /// schur, elementary or powersum (s, e, p).
        basis: String,
        /// Partition such as `3,1`.
        partition: String,
    },
    /// Apply a tensor construction to group-ring elements.
    LambdaEval {
        #[arg(long)]
        input: PathBuf,
    },
    /// Convolve two clean cycle models.
    CycleConvolve {
        /// A cycle file; give the flag twice.
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        /// Chern–Mather layers computed up to this index.
        #[arg(long, default_value_t = 1)]
        d_trunc: usize,
    },
    /// Apply a Schur functor to a clean cycle model.
    CycleSchur {
        partition: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        d_trunc: usize,
    },
    /// Weyl dimension of an irreducible representation.
    RepDim {
        /// Dynkin type such as `A5`.
        ty: String,
        /// Highest weight in fundamental-weight coordinates, e.g. `0,0,1,0,0`.
        weight: String,
    },
    /// Character of an irreducible, or the decomposition of a character file.
    RepChar {
        #[arg(required_unless_present = "input")]
        ty: Option<String>,
        #[arg(required_unless_present = "input")]
        weight: Option<String>,
        #[arg(long, conflicts_with_all = ["ty", "weight"])]
        input: Option<PathBuf>,
    },
    /// Minuscule, multiplicity-free and self-duality data of an irreducible.
    RepClassify { ty: String, weight: String },
    /// Every weight-multiplicity-free irreducible within the bounds.
    WmfTables {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_rank: u64,
        #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u64).range(1..))]
        max_dim: u64,
    },
    /// Tannaka group of the theta divisor with ordinary double points.
    ThetaGroup(PpavArgs),
    /// Clean characteristic cycle of the theta divisor with ordinary double points.
    CcOdp(PpavArgs),
    /// Degree-one obstruction to a nonhyperelliptic fake Jacobian of dimension five.
    Genus5 {
        /// Number of ordinary double points; it does not enter the degree-one layer.
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Solve the lowest Chern–Mather layers for a fake Jacobian.
    FakeJacobian {
        /// Target cycle file; defaults to the cycle of a theta divisor with `k` double points.
        #[arg(long, conflicts_with = "k")]
        input: Option<PathBuf>,
        #[arg(long, required_unless_present = "input")]
        g: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        hyperelliptic: bool,
    },
    /// Lower bound on the dimension of summands of a divisor.
    SummandBound {
        /// Theta divisor on a ppav of this dimension.
        #[arg(long, required_unless_present = "d_z", conflicts_with_all = ["d_z", "support"])]
        g: Option<usize>,
        /// Also check the adjoint data of Sp_2m in its standard representation.
        #[arg(long, requires = "g", value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        /// Dimension of the divisor.
        #[arg(long, requires = "support")]
        d_z: Option<usize>,
        /// Support dimensions of the submodules of the adjoint module.
        #[arg(long, value_delimiter = ',')]
        support: Vec<usize>,
    },
    /// Sufficient criteria for a simple Lie algebra modulo the center.
    Simplicity {
        #[command(flatten)]
        ppav: PpavArgs,
        /// Cycle file to use instead of a theta divisor.
        #[arg(long, conflicts_with = "input")]
        cycle: Option<PathBuf>,
        /// Label of the divisor component.
        #[arg(long, default_value = "Theta")]
        divisor: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        m_bound: u32,
    },
    /// Degrees, representations and groups for indecomposable ppav of dimension four.
    FourfoldTable {
        /// One row per number of vanishing thetanulls.
        #[arg(long)]
        expanded: bool,
    },
    /// Quasi-minuscule irreducibles of a given dimension.
    QmSearch {
        dim: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        max_rank: u64,
    },
    /// Check `[e]₊ target = S(candidates)` in the group ring.
    VerifyIg {
        #[arg(long)]
        input: PathBuf,
    },
}

fn run(cli: Cli) -> anyhow::Result<report::Report> {
    use commands as c;
    match cli.command {
        Command::Symfun { basis, partition } => c::symfun(&basis, &partition),
        Command::LambdaEval { input } => c::lambda_eval(&input),
        Command::CycleConvolve { input, d_trunc } => match &input[..] {
            [a, b] => c::cycle_convolve(a, b, d_trunc),
            _ => Err(UsageError(format!("cycle-convolve needs exactly two --input files, got {}", input.len())).into()),
        },
        Command::CycleSchur { partition, input, d_trunc } => c::cycle_schur(&partition, &input, d_trunc),
        Command::RepDim { ty, weight } => c::rep_dim(&ty, &weight),
        Command::RepChar { ty, weight, input } => match input {
            Some(path) => c::rep_decompose(&path),
            None => c::rep_char(ty.as_deref().unwrap_or_default(), weight.as_deref().unwrap_or_default()),
        },
        Command::RepClassify { ty, weight } => c::rep_classify(&ty, &weight),
        Command::WmfTables { max_rank, max_dim } => c::wmf_tables(max_rank as usize, max_dim),
        Command::ThetaGroup(p) => c::theta_group(&p),
        Command::CcOdp(p) => c::cc_odp(&p),
        Command::Genus5 { k, input } => c::genus5(k, input.as_deref()),
        Command::FakeJacobian { input, g, k, hyperelliptic } => c::fake_jacobian(input.as_deref(), g, k, hyperelliptic),
        Command::SummandBound { g, m, d_z, support } => c::summand_bound(g, m, d_z, &support),
        Command::Simplicity { ppav, cycle, divisor, m_bound } => {
            c::simplicity(&ppav, cycle.as_deref(), &divisor, m_bound)
        }
        Command::FourfoldTable { expanded } => c::fourfold_table(expanded),
        Command::QmSearch { dim, max_rank } => c::qm_search(dim, max_rank as usize),
        Command::VerifyIg { input } => c::verify_ig(&input),
    }
}

fn emit(s: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    if out.write_all(s.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli).and_then(|r| Ok((r.render(format)?, r.negative))) {
        Ok((text, negative)) => {
            let code = emit(&text);
            if negative {
                ExitCode::from(1)
            } else {
                code
            }
        }
        Err(err) => {
            if let Some(e) = err.downcast_ref::<tannaka::Error>().filter(|e| e.is_verdict()) {
                let kind = match e {
                    tannaka::Error::NonIntegral(_) => "non_integral",
                    _ => "infeasible",
                };
                let body = match format {
                    Format::Text | Format::Csv => format!("{e}\n"),
                    Format::Json => {
                        serde_json::to_string_pretty(&json!({ "verdict": kind, "reason": e.to_string() })).unwrap()
                            + "\n"
                    }
                };
                emit(&body);
                return ExitCode::from(1);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
