use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use scmlab_core::error::exit;
use scmlab_core::job::{example_script, parse_job, render_report, run_job, JobConfig, EXAMPLES};
use scmlab_core::{Error, FieldSpec};

#[derive(Parser)]
#[command(name = "scmlab", version, about = "Strongly Cohen-Macaulay and residual intersection checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a job script and emit its JSON report.
    Run {
        job_file: PathBuf,
        /// Coefficient field for every ring: `p` (ZZ/32003), a prime, or `Q`.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        tier: u8,
        /// Cap on the T-degree of computed Rees equations.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one of the bundled job scripts.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLES))]
        name: String,
    },
}

fn field_spec(text: &str) -> Result<FieldSpec, Error> {
    if text == "p" {
        return Ok(FieldSpec::PrimeField(scmlab_core::field::DEFAULT_PRIME));
    }
    FieldSpec::parse(text)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Example { name } => {
            print!("{}", example_script(&name)?);
            Ok(())
        }
        Command::Run { job_file, field, seed, tier, max_degree, out } => {
            let text = std::fs::read_to_string(&job_file)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", job_file.display())))?;
            let script = parse_job(&text)?;
            let field = field.as_deref().map(field_spec).transpose()?;
            let config = JobConfig { field, seed, tier, max_degree };
            let report = render_report(&run_job(&script, &config)?)?;
            match out {
                Some(path) => std::fs::write(&path, report)
                    .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display()))),
                None => {
                    print!("{report}");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("scmlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
