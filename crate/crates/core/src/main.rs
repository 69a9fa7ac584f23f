use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = girthforge::cli::main_with_args(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr());
    ExitCode::from(code)
}
