use std::process::ExitCode;

use penthex_cli::CliError;

fn main() -> ExitCode {
    match penthex_cli::run(std::env::args_os()) {
        Ok(text) | Err(CliError::Help(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("penthex: {}", e.to_string().trim_end());
            ExitCode::from(e.exit_code())
        }
    }
}
