//! Library side of the `landscape` CLI: file formats and experiment
//! pipelines, shared with the integration and acceptance tests.

pub mod experiments;
pub mod formats;

/// Input contract violation: bad flags, malformed files, or data that
/// breaks a documented precondition. The binary maps this to exit code 2;
/// everything else is an internal error and exits 1.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: String) -> Usage {
    Usage(msg)
}
