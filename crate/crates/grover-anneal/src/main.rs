use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(grover_anneal::cli::run(std::env::args()) as u8)
}
