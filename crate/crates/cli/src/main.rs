mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "normplay",
    version,
    about = "N-player normal-play game calculator"
)]
struct Cli {
    /// Number of players.
    #[arg(long, short = 'n', global = true, default_value_t = 3)]
    players: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Node cap for every store the command creates.
    #[arg(long, global = true)]
    budget: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Outcome of an impartial or partizan expression.
    Outcome {
        expr: String,
        /// Read the expression in the compact appendix notation.
        #[arg(long)]
        compact: bool,
    },
    /// Outcome of a Nim position given as heap sizes.
    Nim {
        heaps: Vec<usize>,
        /// Use the closed form instead of the search.
        #[arg(long, conflicts_with = "cross_check")]
        closed_form: bool,
        /// Compute both and fail on disagreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Elements, multiplication table and outcome map of the Nim quotient.
    NimQuotient,
    /// Compare a stored table with recomputed values.
    Verify {
        #[arg(long)]
        table: String,
    },
    /// Compare two partizan games in one player's preorder.
    Compare {
        #[arg(long)]
        player: String,
        g: String,
        h: String,
    },
    /// Certify or refute that a game absorbs every context.
    Absorbing { expr: String },
    /// Check sum laws over an enumerated pool.
    Laws {
        #[arg(long)]
        law: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_birthday: usize,
    },
    /// Bounded searches for open questions.
    Search {
        #[arg(long, value_enum)]
        question: Question,
        /// Largest heap count for Nim searches.
        #[arg(long, default_value_t = 3)]
        max_heaps: usize,
        /// Largest heap size for Nim searches.
        #[arg(long)]
        max_size: Option<usize>,
        /// Horizon for the periodicity check.
        #[arg(long)]
        prefix: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Question {
    Trebling,
    NimPeriodicity,
    QuotientAbsorbing,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(f.code())
        }
    }
}
