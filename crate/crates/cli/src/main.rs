use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use imagebin_cli::{run, Cli};
use serde_json::json;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else if report.text.ends_with('\n') {
                print!("{}", report.text);
            } else {
                println!("{}", report.text);
            }
            if report.exit != 0 {
                eprintln!("error: {}", report.text.lines().last().unwrap_or("check failed"));
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            if cli.json {
                let doc = json!({
                    "command": cli.command.name(),
                    "inputs": null,
                    "result": null,
                    "diagnostics": [e.to_string()],
                    "error": { "kind": e.kind(), "exit_code": e.exit_code() },
                });
                println!("{doc}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
