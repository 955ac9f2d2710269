use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("ill-typed composite at {line}:{col}: {msg}")]
    IllTyped { line: usize, col: usize, msg: String },
    #[error("boundary mismatch: lhs is {lhs} but rhs is {rhs}")]
    Boundary { lhs: String, rhs: String },
    #[error("record format error: {0}")]
    Record(String),
    #[error("{0}")]
    Core(#[from] unbias_core::error::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}
