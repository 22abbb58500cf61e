use std::process::ExitCode;

use clap::Parser;

use ramseylab::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::SUCCESS });
        }
    };
    match run(cli) {
        Ok(outcome) => match serde_json::to_string_pretty(&outcome.report) {
            Ok(text) => {
                println!("{text}");
                ExitCode::from(outcome.code)
            }
            Err(e) => {
                eprintln!("error: cannot serialize report: {e}");
                ExitCode::from(exit::INVARIANT)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
