//! Error type shared by all modules.

/// Errors surfaced by shape constructors, enumerators and checkers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside an operation's domain (cell not in a diagram, shape not
    /// connected, repeated evaluation point, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration would exceed its configured cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An internal cross-check failed. This is never silently resolved: it
    /// would falsify a structural assumption (for example well-definedness of
    /// excited peaks) and must reach the caller.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Malformed textual input (shape grammar, config file).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
