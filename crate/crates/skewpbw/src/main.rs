use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use skewpbw::cli::{cmd_divide, cmd_groebner, cmd_member, exit_code, Request};

/// Right division and right Groebner bases over bijective skew PBW
/// extensions, with exact rational and Gaussian-rational arithmetic.
#[derive(Parser)]
#[command(name = "spbw", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Divide the first input by the remaining ones: f = sum f_i q_i + h.
    Divide(Common),
    /// Compute a right Groebner basis of the inputs.
    Groebner(Common),
    /// Decide membership of the first input in the module the rest generate.
    Member(Common),
}

#[derive(Args)]
struct Common {
    /// Algebra definition file.
    #[arg(long)]
    algebra: PathBuf,
    /// Base monomial order: deglex|gradlex|degrevlex|gradlexrev.
    #[arg(long, default_value = "deglex")]
    order: String,
    /// Module order: top|toprev.
    #[arg(long = "module-order", default_value = "top")]
    module_order: String,
    /// Hard cap on subset cardinality during completion.
    #[arg(long = "max-subset")]
    max_subset: Option<usize>,
    /// Trim the computed basis.
    #[arg(long)]
    trim: bool,
    /// Inline input expressions; used before any file inputs.
    #[arg(short = 'e', long = "expr")]
    exprs: Vec<String>,
    /// Input files, one expression each.
    inputs: Vec<PathBuf>,
}

fn gather(common: &Common) -> std::io::Result<Request> {
    let algebra_text = std::fs::read_to_string(&common.algebra)?;
    let mut inputs = common.exprs.clone();
    for p in &common.inputs {
        inputs.push(std::fs::read_to_string(p)?.trim().to_string());
    }
    Ok(Request {
        algebra_text,
        order: common.order.clone(),
        module_order: common.module_order.clone(),
        max_subset: common.max_subset,
        trim: common.trim,
        inputs,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, run): (&Common, fn(&Request) -> skewpbw::Result<String>) = match &cli.cmd {
        Cmd::Divide(c) => (c, cmd_divide),
        Cmd::Groebner(c) => (c, cmd_groebner),
        Cmd::Member(c) => (c, cmd_member),
    };
    let req = match gather(common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&req) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
