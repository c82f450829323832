use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = cohom_cli::run(std::env::args_os());
    if let Some(msg) = &result.diagnostic {
        eprintln!("cohom: {msg}");
    }
    let mut out = std::io::stdout().lock();
    if out.write_all(result.render().as_bytes()).is_err() {
        return ExitCode::from(cohom_cli::EXIT_CHECK_FAILED as u8);
    }
    ExitCode::from(result.exit_code as u8)
}
