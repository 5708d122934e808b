use std::io::Write;
use std::process::ExitCode;

use burn_cli::args::Cli;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match burn_cli::execute(cli) {
        Ok(run) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(run.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(run.exit_code as u8)
        }
        Err(e) => {
            eprintln!("burn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
