use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use pyrene_cli::args::Cli;
use pyrene_cli::ExitStatus;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::InputError as u8
            } else {
                0
            });
        }
    };
    match pyrene_cli::run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(&outcome.body)
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(ExitStatus::InputError as u8);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status as u8)
        }
    }
}
