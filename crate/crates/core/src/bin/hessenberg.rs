use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hessenberg::cli::{execute, JobSpec};

fn main() -> ExitCode {
    let spec = match JobSpec::try_parse() {
        Ok(spec) => spec,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = execute(&spec);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
