use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rindler_entanglement::cli::run(std::env::args_os()).code())
}
