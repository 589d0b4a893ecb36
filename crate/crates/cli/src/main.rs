use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let max_level = std::env::var("LOOPALG_MAX_LEVEL").ok();
    let code = loopalg::run(std::env::args_os(), max_level.as_deref(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
