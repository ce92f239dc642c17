use thiserror::Error;

use crate::orders::Violation;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid model `{text}`: {message}")]
    InvalidModel { text: String, message: String },

    #[error("alphabet has {vars} variables, enumeration cap is {cap}")]
    CapExceeded { vars: usize, cap: usize },

    #[error("level sequence would reach {length} formulae, length cap is {cap}")]
    LengthCapExceeded { length: usize, cap: usize },

    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },

    #[error("not a connected preorder: {}", summarize(.0))]
    NotPreorder(Vec<Violation>),

    #[error("level order is not normalized: {0}")]
    NotNormalized(String),

    #[error("revision by an inconsistent formula: {0}")]
    InconsistentRevision(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}, column {column}: {message}")]
    Document {
        line: usize,
        column: usize,
        message: String,
    },
}

fn summarize(violations: &[Violation]) -> String {
    const SHOWN: usize = 5;
    let mut parts: Vec<String> = violations
        .iter()
        .take(SHOWN)
        .map(|v| v.to_string())
        .collect();
    if violations.len() > SHOWN {
        parts.push(format!("... {} more", violations.len() - SHOWN));
    }
    parts.join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
