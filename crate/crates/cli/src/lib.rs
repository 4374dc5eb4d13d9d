//! Command-line front end: reads an algebra file, runs the checks and prints
//! a report.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 when the
//! input cannot be read or the command line is wrong.

pub mod commands;
pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use format::InputError;
use report::{Report, EXIT_INPUT, EXIT_PASS};

#[derive(Debug, Parser)]
#[command(
    name = "weakhopf",
    version,
    about = "Check weak bimonoid and weak Hopf structure on finite-dimensional algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Algebra file (JSON)
    file: PathBuf,
    /// Dimensions of the test spaces X, Y used for the sampled identities
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "1,2",
        value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..)
    )]
    dims: Vec<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weak bimonoid axioms and the opmonoidal conditions
    Check(Common),
    /// The separable Frobenius base monoid
    Base(Common),
    /// Truncated tensor product of two modules (names from the file, or
    /// `regular` / `base`)
    ModuleTensor {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
    },
    /// Solve for the antipode and check the weak Hopf identities
    Antipode {
        #[command(flatten)]
        common: Common,
        /// Fail unless the antipode exists and is invertible
        #[arg(long)]
        require_hopf: bool,
    },
    /// Everything
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        require_hopf: bool,
    },
    /// Write the built-in examples as algebra files into DIR
    Corpus { dir: PathBuf },
    /// Print a variant of FILE that breaks TARGET
    Mutate { file: PathBuf, target: String },
}

fn emit(out: &mut dyn Write, r: &Report, format: OutputFormat) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => out.write_all(r.to_text().as_bytes()),
        OutputFormat::Json => out.write_all(r.to_json().as_bytes()),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, InputError> {
    let usage_io = |e: std::io::Error| InputError::Usage(format!("writing output: {e}"));
    let (common, report) = match cmd {
        Command::Corpus { dir } => {
            for name in commands::write_corpus(&dir)? {
                writeln!(out, "{}", dir.join(format!("{name}.json")).display())
                    .map_err(usage_io)?;
            }
            return Ok(EXIT_PASS);
        }
        Command::Mutate { file, target } => {
            let l = commands::load(&file)?;
            let spec = commands::mutate_cmd(&l, &target)?;
            out.write_all(spec.to_json().as_bytes()).map_err(usage_io)?;
            return Ok(EXIT_PASS);
        }
        Command::Check(c) => {
            let l = commands::load(&c.file)?;
            let r = commands::check(&l, &c.dims);
            (c, r)
        }
        Command::Base(c) => {
            let l = commands::load(&c.file)?;
            let r = commands::base(&l, &c.dims);
            (c, r)
        }
        Command::ModuleTensor { common: c, a, b } => {
            let l = commands::load(&c.file)?;
            let r = commands::module_tensor_cmd(&l, &a, &b, &c.dims)?;
            (c, r)
        }
        Command::Antipode {
            common: c,
            require_hopf,
        } => {
            let l = commands::load(&c.file)?;
            let r = commands::antipode(&l, &c.dims, require_hopf);
            (c, r)
        }
        Command::Report {
            common: c,
            require_hopf,
        } => {
            let l = commands::load(&c.file)?;
            let r = commands::report(&l, &c.dims, require_hopf);
            (c, r)
        }
    };
    emit(out, &report, common.format).map_err(usage_io)?;
    Ok(report.exit_code())
}

/// Runs one command line, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_INPUT;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_PASS;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
