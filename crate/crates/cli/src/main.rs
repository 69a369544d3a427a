use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use mollweide_cli::{run, Cli, EXIT_INPUT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let mut code = run(&cli, &mut out, &mut err);
    if out.flush().is_err() {
        code = EXIT_INPUT_ERROR;
    }
    ExitCode::from(code)
}
