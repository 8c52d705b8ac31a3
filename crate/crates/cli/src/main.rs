use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qmirror_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let wants_json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let text = text.trim_end().strip_prefix("error: ").unwrap_or(text.trim_end());
            return fail(&CliError::Usage(text.to_string()), wants_json);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if cli.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json value"))
            } else {
                write!(stdout, "{}", out.text)
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(_) => ExitCode::from(1),
            }
        }
        Err(e) => fail(&e, cli.json),
    }
}

fn fail(e: &CliError, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("json value"));
    } else {
        eprintln!("error: {e}");
    }
    ExitCode::from(e.exit_code())
}
