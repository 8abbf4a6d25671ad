//! Command implementations behind the `pentacone` binary: point-set document
//! parsing, machine-readable result documents, and the plot/mesh emitters.

pub mod commands;
pub mod doc;
pub mod mesh;
pub mod plot;
pub mod report;

/// Failure carrying the process exit code: 1 input error, 2 geometric
/// degeneracy, 3 solver budget exhausted.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<pentacone::Error> for Failure {
    fn from(e: pentacone::Error) -> Self {
        Self {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}
