use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = indigenous_cli::run(std::env::args_os());
    let mut out = if outcome.code == indigenous_cli::USAGE_ERROR {
        Box::new(std::io::stderr()) as Box<dyn Write>
    } else {
        Box::new(std::io::stdout())
    };
    let _ = out.write_all(outcome.output.as_bytes());
    ExitCode::from(outcome.code as u8)
}
