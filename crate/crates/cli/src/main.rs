use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use richardson_core::verify::Tier;
use richardson_core::Permutation;

mod commands;
mod config;

use config::{Format, OrderArg, RunConfig};

/// Toric degenerations, standard monomials and polytopes of Richardson
/// varieties in the flag variety.
///
/// Exit status: 0 on success or a toric verdict, 1 on a negative verdict or
/// failed check, 2 on errors.
#[derive(Debug, Parser)]
#[command(name = "richardson", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps (defaults to the available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Lift the default guards on sweep size and degree.
    #[arg(long, global = true)]
    force: bool,
    /// Directory for file outputs.
    #[arg(long, global = true, env = "RICHARDSON_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompareTarget {
    Table1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TierArg {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the degeneration of X_w^v is toric.
    Check {
        #[arg(long)]
        v: Permutation,
        #[arg(long)]
        w: Permutation,
        #[arg(long, value_enum, default_value_t = OrderArg::Diagonal)]
        order: OrderArg,
    },
    /// Classify every pair v <= w in S_n.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Diagonal)]
        order: OrderArg,
        /// Diff the monomial-free pairs against a bundled fixture.
        #[arg(long, value_enum)]
        compare: Option<CompareTarget>,
    },
    /// Count semi-standard tableaux, standard monomials and image monomials.
    Ssyt {
        #[arg(long)]
        v: Permutation,
        #[arg(long)]
        w: Permutation,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// List the degree-d tableaux with their standardness.
        #[arg(long)]
        list: bool,
        /// With --list, also print the minimum and maximum defining chains.
        #[arg(long, requires = "list")]
        chains: bool,
    },
    /// Build the matrices A, S, AS and the polytope of their product.
    Polytope {
        #[arg(long)]
        v: Permutation,
        #[arg(long)]
        w: Permutation,
        #[arg(long, value_enum, default_value_t = OrderArg::Diagonal)]
        order: OrderArg,
    },
    /// Run the built-in consistency suites.
    Verify {
        #[arg(long, value_enum, default_value_t = TierArg::Quick)]
        tier: TierArg,
    },
    /// Membership table of the recursive family T_n over all v <= w.
    Tn {
        #[arg(long)]
        n: usize,
    },
    /// Weights of the Plücker variables under the diagonal weight matrix.
    Weights {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> richardson_core::Result<u8> {
    let config = |n: usize, order: OrderArg, d: usize| {
        RunConfig::new(
            n,
            order.into(),
            d,
            cli.workers,
            cli.format,
            cli.force,
            cli.out_dir.clone(),
        )
    };
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Check { v, w, order } => {
            commands::check(&config(v.n(), order, 3)?, &v, &w, &mut out)
        }
        Command::Classify { n, order, compare } => {
            commands::classify(&config(n, order, 3)?, compare.is_some(), &mut out)
        }
        Command::Ssyt {
            v,
            w,
            d,
            list,
            chains,
        } => commands::ssyt(
            &config(v.n(), OrderArg::Diagonal, d)?,
            &v,
            &w,
            list,
            chains,
            &mut out,
        ),
        Command::Polytope { v, w, order } => {
            commands::polytope(&config(v.n(), order, 3)?, &v, &w, &mut out)
        }
        Command::Verify { tier } => {
            let tier = match tier {
                TierArg::Quick => Tier::Quick,
                TierArg::Full => Tier::Full,
            };
            commands::verify(&config(4, OrderArg::Diagonal, 3)?, tier, &mut out)
        }
        Command::Tn { n } => commands::tn(&config(n, OrderArg::Diagonal, 3)?, &mut out),
        Command::Weights { n } => commands::weights(&config(n, OrderArg::Diagonal, 3)?, &mut out),
    }
}
