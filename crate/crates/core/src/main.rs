use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use elp::report::{exit_code, Report};
use elp::solvers::Config;
use elp::syntax::{parse_program_with, ParseOptions};
use elp::{Error, Program, SemanticsId};

#[derive(Parser)]
#[command(
    name = "elp",
    version,
    about = "Answer sets, world views and property checks for epistemic logic programs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Semantics {
    Gl,
    G91,
    Se16,
    Narrative,
}

impl From<Semantics> for SemanticsId {
    fn from(s: Semantics) -> Self {
        match s {
            Semantics::Gl => SemanticsId::Gl,
            Semantics::G91 => SemanticsId::G91,
            Semantics::Se16 => SemanticsId::Se16,
            Semantics::Narrative => SemanticsId::Narrative,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Cm,
    Foundedness,
}

#[derive(clap::Args)]
struct Common {
    /// Program file (.elp)
    file: PathBuf,
    /// Override the atom cap of every engine
    #[arg(long, env = "ELP_MAX_ATOMS")]
    max_atoms: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Reject repeated literals in a rule instead of dropping them
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute answer sets or world views under one semantics
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        semantics: Semantics,
    },
    /// Check constraint monotonicity or foundedness
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, value_enum)]
        semantics: Semantics,
        /// Rule index of the constraint to remove (default: last constraint)
        #[arg(long)]
        constraint: Option<usize>,
    },
    /// Side-by-side results and property verdicts for every semantics
    Compare {
        #[command(flatten)]
        common: Common,
    },
}

fn load(common: &Common) -> Result<(String, String, Program), String> {
    let source = std::fs::read_to_string(&common.file)
        .map_err(|e| format!("{}: {e}", common.file.display()))?;
    let (program, warnings) = parse_program_with(
        &source,
        ParseOptions {
            strict: common.strict,
        },
    )
    .map_err(|e| format!("{}:{e}", common.file.display()))?;
    for w in warnings {
        eprintln!(
            "{}:{}:{}: warning: {}",
            common.file.display(),
            w.line,
            w.column,
            w.message
        );
    }
    let name = Path::new(&common.file).file_name().map_or_else(
        || common.file.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    );
    Ok((name, source, program))
}

fn run(cli: Cli) -> Result<(), (i32, String)> {
    let common = match &cli.command {
        Command::Solve { common, .. }
        | Command::Check { common, .. }
        | Command::Compare { common } => common,
    };
    let (name, source, p) = load(common).map_err(|e| (1, e))?;
    let config = Config {
        max_atoms: common.max_atoms,
    };
    let report = match cli.command {
        Command::Solve { semantics, .. } => {
            Report::solve(&name, &source, &p, semantics.into(), &config)
        }
        Command::Check {
            property: Property::Cm,
            semantics,
            constraint,
            ..
        } => Report::check_cm(&name, &source, &p, semantics.into(), constraint, &config),
        Command::Check {
            property: Property::Foundedness,
            semantics,
            ..
        } => Report::check_foundedness(&name, &source, &p, semantics.into(), &config),
        Command::Compare { .. } => Ok(Report::compare(&name, &source, &p, &config)),
    }
    .map_err(|e: Error| (exit_code(&e), format!("{name}: {e}")))?;
    match common.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code as u8)
        }
    }
}
