use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: expected a 'p cnf' header before clauses")]
    MissingHeader { line: usize },
    #[error("line {line}: invalid token '{token}'")]
    InvalidToken { line: usize, token: String },
    #[error("literal {literal} out of range (declared {num_vars} variables)")]
    LiteralOutOfRange { literal: i64, num_vars: u64 },
    #[error("line {line}: clause not terminated by 0")]
    MissingTerminator { line: usize },
    #[error("duplicate literal {0} in clause")]
    DuplicateLiteral(i64),
    #[error("line {line}: deletion of the empty clause")]
    EmptyDeletion { line: usize },
    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange { what: &'static str, min: u64, got: u64 },
    #[error("{what} must be at most {max}, got {got}")]
    TooLarge { what: &'static str, max: u64, got: u64 },
}
