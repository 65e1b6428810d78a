//! Session-file driver for the `cmdefect` engine.

pub mod exec;
pub mod session;

pub use exec::{execute_session, Options, Outcome, EXIT_ERROR, EXIT_OK, EXIT_UNMET};
pub use session::{parse_session, Command, ComputeOp, Expectation, ParseError, Session, Span, Statement};

/// Parses and executes `text`. Parse errors exit with [`EXIT_ERROR`] before
/// any command runs.
pub fn run(text: &str, opts: &Options) -> Outcome {
    match parse_session(text) {
        Ok(s) => execute_session(&s, opts),
        Err(e) => Outcome { stdout: String::new(), stderr: format!("parse error: {e}\n"), exit_code: EXIT_ERROR },
    }
}

/// Runs `f` on a pool of `threads` workers, or on the global pool when
/// `threads` is `None`.
#[cfg(feature = "parallel")]
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string())?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    Ok(f())
}
