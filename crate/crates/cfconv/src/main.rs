use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = cfconv::run(std::env::args_os(), &mut out);
    out.flush().ok();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let mut stderr = io::stderr().lock();
            writeln!(stderr, "error: {err}").ok();
            if let Some(terms) = err.offending_terms() {
                writeln!(stderr, "brute-force terms ({}):", terms.len()).ok();
                for (n, t) in terms.iter().enumerate() {
                    writeln!(stderr, "  {n}: {t}").ok();
                }
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
