use liftscope_cli::{run, EXIT_INTERNAL};
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = std::panic::catch_unwind(|| {
        let mut out = std::io::stdout().lock();
        let mut err = std::io::stderr().lock();
        run(std::env::args_os(), &mut out, &mut err)
    })
    .unwrap_or(EXIT_INTERNAL);
    ExitCode::from(status as u8)
}
