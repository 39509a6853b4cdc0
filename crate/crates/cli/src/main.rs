use std::io::Write;
use std::process::ExitCode;

fn main() -> anyhow::Result<ExitCode> {
    ttmin_cli::configure_from_env()?;
    let out = ttmin_cli::run_args(std::env::args_os());
    std::io::stdout().write_all(out.stdout.as_bytes())?;
    std::io::stderr().write_all(out.stderr.as_bytes())?;
    Ok(ExitCode::from(out.code as u8))
}
