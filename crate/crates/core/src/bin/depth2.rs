use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use depth2::cli::{exit_code, run_command, Command};
use depth2::instance::{catalog_instance, catalog_names, parse_instance};
use depth2::report::Format;
use depth2::Error;

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

/// Verify depth-two extensions, bialgebroids and weak Hopf-Galois data.
#[derive(Parser)]
#[command(name = "depth2", version)]
struct Args {
    /// check-algebra, d2, bialgebroid, hopf-algebroid, weak-hopf, galois,
    /// normality, reconstruct or all
    command: String,
    /// Instance file
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Use a built-in instance instead of a file
    #[arg(long)]
    catalog: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let verbose = std::env::var_os("DEPTH2_VERBOSE").is_some();
    let outcome = args.command.parse::<Command>().and_then(|cmd| {
        let inst = match (&args.file, &args.catalog) {
            (Some(path), None) => parse_instance(&std::fs::read_to_string(path)?)?,
            (None, Some(name)) => catalog_instance(name)?,
            _ => return Err(Error::Parse(format!("give exactly one of FILE or --catalog <{}>", catalog_names().join("|")))),
        };
        run_command(cmd, &inst)
    });
    let code = exit_code(&outcome);
    match &outcome {
        Ok(report) => {
            let format = match args.format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Structured => Format::Structured,
            };
            print!("{}", report.render(format));
            if verbose {
                for f in report.failures() {
                    eprintln!("failed: {f}");
                }
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
