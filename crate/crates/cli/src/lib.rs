//! Command-line front end: parse structural morphisms and span/family
//! records, and print normal forms, decisions, composites and unbiased
//! tensors as text or as records.

pub mod commands;
pub mod error;
pub mod record;
pub mod syntax;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Record,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// Free symmetric monoidal category: objects are terms.
    Term,
    /// Symmetric lists: objects are lists of generator names.
    Slist,
}

#[derive(Debug, Parser)]
#[command(name = "unbias", version, about = "Coherence for symmetric monoidal categories and unbiased tensors over spans")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the symmetric list normal form of a structural morphism.
    Normalize { term: String },
    /// Decide whether two parallel structural morphisms are equal.
    Equal { lhs: String, rhs: String },
    /// Compose two spans. Each argument is a record, a file, or `-` for stdin.
    SpanCompose {
        first: String,
        second: String,
        /// Also print the unitor maps at the composite.
        #[arg(long)]
        cells: bool,
    },
    /// Evaluate the unbiased tensor of a span at a family of objects.
    Unbias {
        span: String,
        family: String,
        #[arg(long, value_enum, default_value_t = Model::Term)]
        model: Model,
        /// Print the unit cells and, with `--then`, the composition cells.
        #[arg(long)]
        cells: bool,
        /// A second span, composed after the first for the composition cells.
        #[arg(long)]
        then: Option<String>,
    },
    /// Run a law-checking suite.
    CheckLaws {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, env = "UNBIAS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// What a command printed and the exit code it asks for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match commands::execute(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
