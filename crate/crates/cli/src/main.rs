use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use cli::CliError;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let r = cli::dispatch(std::env::args_os(), &mut out);
    let _ = out.flush();
    match &r {
        // a closed pipe downstream, as in `wb rules | head`
        Err(CliError::Output(e)) if e.kind() == ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
        Err(e) => eprintln!("wb: {e}"),
        Ok(_) => {}
    }
    ExitCode::from(cli::exit_code(&r) as u8)
}
