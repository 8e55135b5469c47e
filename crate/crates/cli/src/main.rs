mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "eta",
    version,
    about = "Double eta polynomials and their verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute H_λ(c|t), Ĥ_λ(c|t) or the single eta polynomial H_λ(c).
    Compute(ComputeArgs),
    /// Reduce a JSON polynomial modulo the relation ideal.
    NormalForm(InputArgs),
    /// Expand a JSON polynomial in the b_λ or H_λ(c|t) basis.
    BasisExpand(ExpandArgs),
    /// The type A Schubert polynomial of a permutation.
    Schubert(SchubertArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List the typed k-strict partitions in a rectangle.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    B,
    Eta,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    k: u32,
    /// Partition such as "2,1:t2"; "-" is the empty partition. With --hat
    /// the type suffix is omitted.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, conflicts_with = "single")]
    hat: bool,
    /// Set every t_i to zero.
    #[arg(long)]
    single: bool,
    /// Reduce the result modulo the relation ideal.
    #[arg(long)]
    normal_form: bool,
    /// Emit the expansion in a basis instead of the polynomial.
    #[arg(long, value_enum)]
    expand: Option<Basis>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long)]
    k: u32,
    /// JSON file; standard input when omitted.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "b")]
    basis: Basis,
}

#[derive(Args, Debug)]
struct SchubertArgs {
    /// One-line notation, e.g. "3,1,2".
    #[arg(long)]
    perm: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// tables, identities, covers, hat, splitting, basis or all.
    suite: String,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_weight: Option<u32>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    k: u32,
    /// Rank; selects the (n-k) x (n+k-1) rectangle.
    #[arg(long, required_unless_present_all = ["rows", "cols"], conflicts_with_all = ["rows", "cols"])]
    n: Option<u32>,
    #[arg(long, requires = "cols")]
    rows: Option<usize>,
    #[arg(long, requires = "rows")]
    cols: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::NormalForm(a) => commands::normal_form_cmd(&a),
        Command::BasisExpand(a) => commands::basis_expand(&a),
        Command::Schubert(a) => commands::schubert(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Enumerate(a) => commands::enumerate(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
