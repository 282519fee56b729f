use std::process::ExitCode;

use clap::Parser;

use parh_cli::args::Cli;
use parh_cli::{run, schema};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.help_schema {
        println!("{}", serde_json::to_string_pretty(&schema::schemas()).expect("schemas serialize"));
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: no command given; see `parh --help`");
        return ExitCode::from(2);
    };
    match run::run(command, cli.seed) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out.json).expect("reports serialize"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code() as u8)
        }
    }
}
