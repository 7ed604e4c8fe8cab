use clap::Parser;
use laumon_cli::commands::{run, Cli};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text =
                serde_json::to_string_pretty(&out.json).expect("JSON values always serialize");
            // A closed pipe on stdout is not an error of the computation.
            let _ = writeln!(std::io::stdout().lock(), "{}", text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e.0);
            ExitCode::from(2)
        }
    }
}
