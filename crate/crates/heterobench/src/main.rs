use std::process::ExitCode;

fn main() -> ExitCode {
    heterobench::cli::run(std::env::args_os())
}
