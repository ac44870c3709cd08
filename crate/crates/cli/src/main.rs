use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = brauerpar::run(std::env::args_os().skip(1));
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
