//! `fdb`: exact series composition, Hopf algebra, tree, incidence and operad
//! computations from the command line.

mod commands;
mod payload;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fdb", version, about = "Exact computations around the Faà di Bruno formula")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Read the payload from this file instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// f∘g of two diffeo series given as {"f": ..., "g": ...}.
    Compose { payload: Option<String> },
    /// Compositional inverse by solving f∘g = t degree by degree.
    Invert { payload: Option<String> },
    /// Multiplicative inverse of an invertible series.
    Mulinv { payload: Option<String> },
    /// Compositional inverse by the Lagrange inversion formula.
    Lagrange { payload: Option<String> },
    /// The partial Bell polynomial B_{n,m}(x_1, x_2, ...).
    Bell { n: usize, m: usize },
    /// Coefficients g_1..g_N of the Lambert W series.
    Lambert { n: usize },
    /// The Bell matrix M_ij = [t^j] f^i of a diffeo series.
    Bellmatrix {
        payload: Option<String>,
        /// Matrix size; the series truncation if omitted.
        #[arg(long)]
        size: Option<usize>,
    },
    /// The n-th derivative of f∘g in derivatives of f and g.
    Fdbderiv {
        n: usize,
        /// Expand the determinant formula instead of the Bell sum.
        #[arg(long)]
        determinant: bool,
    },
    /// Coproduct of an element of one of the Hopf algebras.
    Coproduct {
        #[arg(long)]
        algebra: Algebra,
        payload: Option<String>,
    },
    /// Antipode of an element of one of the Hopf algebras.
    Antipode {
        #[arg(long)]
        algebra: Algebra,
        /// Use the closed Lagrange form (fdbnc generators only).
        #[arg(long)]
        closed_form: bool,
        payload: Option<String>,
    },
    /// exp of an infinitesimal character, given by its values on x_1..x_N.
    Exp {
        #[arg(long)]
        algebra: CommAlgebra,
        #[arg(long)]
        degree: usize,
        payload: Option<String>,
    },
    /// log of a character, given by its values on x_1..x_N.
    Log {
        #[arg(long)]
        algebra: CommAlgebra,
        #[arg(long)]
        degree: usize,
        payload: Option<String>,
    },
    /// t → u: the sum of graftings of t onto each vertex of u.
    Graft { t: String, u: String },
    /// Image of a rooted tree in L_1 under the pre-Lie morphism with • ↦ e_1.
    Phi { tree: String },
    /// Image of x_n in the rooted-tree Hopf algebra.
    Psi { n: usize },
    /// A poset of a family and its incidence coproduct.
    Incidence {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Operadic group computations.
    Operad {
        action: OperadAction,
        #[arg(long)]
        operad: OperadArg,
        /// Truncation for alpha.
        #[arg(long)]
        degree: Option<usize>,
        payload: Option<String>,
    },
    /// Runs a named invariant suite, or "all".
    Check {
        suite: String,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Fdb,
    Inv,
    Fdbnc,
    Invnc,
    Rt,
}

#[derive(Clone, Copy, ValueEnum)]
enum CommAlgebra {
    Fdb,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Boolean,
    Partitions,
    Forest,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperadAction {
    Compose,
    Project,
    Section,
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperadArg {
    Assoc,
    Dup,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("{}", serde_json::json!({ "error": msg.to_string() }));
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(e.render().to_string().trim()),
    };
    let start = Instant::now();
    let result = commands::run(&cli);
    if std::env::var_os("FDB_LOG").is_some() {
        eprintln!("fdb: finished in {:.3}s", start.elapsed().as_secs_f64());
    }
    let (out, code) = match result {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let mut text = out.render(cli.pretty);
    text.push('\n');
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    code
}
