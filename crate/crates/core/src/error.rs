//! Error types shared across the toolkit.
//!
//! Every module has its own error enum; this module holds the coarse
//! classification the CLI maps onto process exit codes.

/// Coarse error class used for CLI exit codes.
///
/// 1 = usage error, 2 = data error, 3 = numeric/divergence error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Data,
    Numeric,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Usage => 1,
            ErrorClass::Data => 2,
            ErrorClass::Numeric => 3,
        }
    }
}

/// Implemented by module error types so the CLI can pick an exit code.
pub trait Classify {
    fn class(&self) -> ErrorClass;
}
