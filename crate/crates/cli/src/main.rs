use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use cmdefect_cli::{run, with_threads, Expectation, Options, EXIT_ERROR};

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Yes,
    No,
}

/// Run a cmdefect session file (`-` reads standard input).
#[derive(Parser)]
#[command(name = "cmdefect", version)]
struct Cli {
    session: PathBuf,
    /// Emit one JSON document per command.
    #[arg(long)]
    json: bool,
    /// Worker threads for prime sweeps and corpus runs.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Expected answer of every `check` without its own `--expect`.
    #[arg(long, value_enum)]
    expect: Option<Expect>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = if cli.session.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(&cli.session)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", cli.session.display());
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let opts = Options {
        json: cli.json,
        expect: cli.expect.map(|e| match e {
            Expect::Yes => Expectation::Yes,
            Expect::No => Expectation::No,
        }),
    };
    let outcome = match with_threads(cli.threads.map(usize::from), || run(&text, &opts)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("cannot start thread pool: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
