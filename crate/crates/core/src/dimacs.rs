//! DIMACS CNF reading and writing.

use std::io::{self, Write};

use crate::error::Error;
use crate::types::{Clause, CnfFormula, Literal};

/// Non-fatal problem found while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    ClauseCountMismatch { declared: u64, actual: u64 },
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::ClauseCountMismatch { declared, actual } => {
                write!(f, "header declares {declared} clauses, found {actual}")
            }
        }
    }
}

pub fn parse_dimacs(text: &[u8]) -> Result<CnfFormula, Error> {
    parse_dimacs_with_warnings(text).map(|(f, _)| f)
}

/// Parses DIMACS CNF. Clauses may span lines; comment lines start with `c`.
pub fn parse_dimacs_with_warnings(text: &[u8]) -> Result<(CnfFormula, Vec<ParseWarning>), Error> {
    let text = String::from_utf8_lossy(text);
    let mut header: Option<(u64, u64)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(malformed(line_no, "duplicate header"));
            }
            header = Some(parse_header(trimmed, line_no)?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(Error::MissingHeader { line: line_no });
        };
        for token in trimmed.split_whitespace() {
            let value: i64 =
                token.parse().map_err(|_| Error::InvalidToken { line: line_no, token: token.to_string() })?;
            if value == 0 {
                clauses.push(Clause::new(std::mem::take(&mut current))?);
                continue;
            }
            let lit = Literal::try_new(value)
                .ok_or_else(|| Error::InvalidToken { line: line_no, token: token.to_string() })?;
            if lit.var() > num_vars {
                return Err(Error::LiteralOutOfRange { literal: value, num_vars });
            }
            current.push(lit);
        }
    }

    if !current.is_empty() {
        return Err(Error::MissingTerminator { line: last_line });
    }
    let (num_vars, declared) = header.ok_or(Error::MissingHeader { line: last_line.max(1) })?;
    let mut warnings = Vec::new();
    if declared != clauses.len() as u64 {
        warnings.push(ParseWarning::ClauseCountMismatch { declared, actual: clauses.len() as u64 });
    }
    Ok((CnfFormula::new(num_vars, clauses)?, warnings))
}

fn parse_header(line: &str, line_no: usize) -> Result<(u64, u64), Error> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    match fields.as_slice() {
        ["p", "cnf", vars, clauses] => {
            let vars = vars.parse().map_err(|_| malformed(line_no, "variable count is not a number"))?;
            let clauses = clauses.parse().map_err(|_| malformed(line_no, "clause count is not a number"))?;
            Ok((vars, clauses))
        }
        _ => Err(malformed(line_no, "expected 'p cnf <vars> <clauses>'")),
    }
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::MalformedHeader { line, reason: reason.to_string() }
}

pub fn write_dimacs<W: Write>(formula: &CnfFormula, mut out: W) -> io::Result<()> {
    writeln!(out, "p cnf {} {}", formula.num_vars(), formula.len())?;
    let mut line = String::new();
    for clause in formula.clauses() {
        line.clear();
        crate::drat::push_clause(&mut line, clause.literals());
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

/// Canonical DIMACS text: header, then one clause per line.
pub fn emit_dimacs(formula: &CnfFormula) -> Vec<u8> {
    let mut buf = Vec::new();
    write_dimacs(formula, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clause;

    #[test]
    fn minimal_input() {
        let f = parse_dimacs(b"p cnf 2 1\n1 -2 0\n").unwrap();
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.clauses(), &[clause![1, -2]]);
    }

    #[test]
    fn out_of_range_literal() {
        let err = parse_dimacs(b"p cnf 1 1\n2 0\n").unwrap_err();
        assert_eq!(err, Error::LiteralOutOfRange { literal: 2, num_vars: 1 });
    }

    #[test]
    fn missing_terminator() {
        assert!(matches!(parse_dimacs(b"p cnf 2 1\n1 2\n"), Err(Error::MissingTerminator { .. })));
    }

    #[test]
    fn malformed_headers() {
        for text in ["p cnf 2\n", "p dnf 2 1\n", "p cnf x 1\n"] {
            assert!(matches!(parse_dimacs(text.as_bytes()), Err(Error::MalformedHeader { .. })), "{text}");
        }
        assert!(matches!(parse_dimacs(b"1 2 0\n"), Err(Error::MissingHeader { .. })));
    }

    #[test]
    fn count_mismatch_is_a_warning() {
        let (f, warnings) = parse_dimacs_with_warnings(b"c hi\np cnf 3 5\n1 2\n -3 0 2 0\n").unwrap();
        assert_eq!(f.clauses(), &[clause![1, 2, -3], clause![2]]);
        assert_eq!(warnings, vec![ParseWarning::ClauseCountMismatch { declared: 5, actual: 2 }]);
    }

    #[test]
    fn duplicate_literal_rejected() {
        assert_eq!(parse_dimacs(b"p cnf 2 1\n1 1 0\n").unwrap_err(), Error::DuplicateLiteral(1));
    }

    #[test]
    fn tautology_accepted() {
        assert!(parse_dimacs(b"p cnf 2 1\n1 -1 0\n").is_ok());
    }

    #[test]
    fn emit_empty_formula() {
        assert_eq!(emit_dimacs(&CnfFormula::default()), b"p cnf 0 0\n");
    }

    #[test]
    fn emit_preserves_order() {
        let f = CnfFormula::new(3, vec![clause![-3, 1], Clause::empty()]).unwrap();
        assert_eq!(String::from_utf8(emit_dimacs(&f)).unwrap(), "p cnf 3 2\n-3 1 0\n0\n");
    }
}
