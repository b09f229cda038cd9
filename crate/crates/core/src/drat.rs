//! Text DRAT reading and writing.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::error::Error;
use crate::types::{Clause, Literal, Proof, ProofLine, ProofSink};

/// Parses a text DRAT proof: one clause per line, `d ` prefix for deletions,
/// each line terminated by `0`. Blank lines and `c` comment lines are skipped.
pub fn parse_drat(text: &[u8]) -> Result<Proof, Error> {
    let text = String::from_utf8_lossy(text);
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace().peekable();
        match tokens.peek() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            _ => {}
        }
        let delete = tokens.next_if_eq(&"d").is_some();
        let mut lits = Vec::new();
        let mut terminated = false;
        for token in tokens {
            if terminated {
                return Err(Error::InvalidToken { line: line_no, token: token.to_string() });
            }
            let value: i64 =
                token.parse().map_err(|_| Error::InvalidToken { line: line_no, token: token.to_string() })?;
            if value == 0 {
                terminated = true;
                continue;
            }
            lits.push(
                Literal::try_new(value)
                    .ok_or_else(|| Error::InvalidToken { line: line_no, token: token.to_string() })?,
            );
        }
        if !terminated {
            return Err(Error::MissingTerminator { line: line_no });
        }
        let clause = Clause::new(lits)?;
        if delete {
            if clause.is_empty() {
                return Err(Error::EmptyDeletion { line: line_no });
            }
            lines.push(ProofLine::delete(clause));
        } else {
            lines.push(ProofLine::add(clause));
        }
    }
    Ok(Proof::new(lines))
}

pub(crate) fn push_clause(buf: &mut String, lits: &[Literal]) {
    for lit in lits {
        write!(buf, "{} ", lit.value()).expect("writing to a String cannot fail");
    }
    buf.push_str("0\n");
}

pub fn emit_drat(proof: &Proof) -> Vec<u8> {
    let mut writer = DratWriter::new(Vec::new());
    for line in &proof.lines {
        if line.is_add() {
            writer.add(line.clause.literals());
        } else {
            writer.delete(line.clause.literals());
        }
    }
    writer.finish().expect("writing to a Vec cannot fail")
}

/// Streams proof lines as DRAT text. The first I/O error is kept and
/// reported by [`DratWriter::finish`]; later lines are dropped.
pub struct DratWriter<W: Write> {
    out: W,
    buf: String,
    error: Option<io::Error>,
}

impl<W: Write> DratWriter<W> {
    pub fn new(out: W) -> DratWriter<W> {
        DratWriter { out, buf: String::with_capacity(64), error: None }
    }

    fn write_line(&mut self, prefix: &str, lits: &[Literal]) {
        if self.error.is_some() {
            return;
        }
        self.buf.clear();
        self.buf.push_str(prefix);
        push_clause(&mut self.buf, lits);
        if let Err(e) = self.out.write_all(self.buf.as_bytes()) {
            self.error = Some(e);
        }
    }

    pub fn finish(mut self) -> io::Result<W> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> ProofSink for DratWriter<W> {
    fn add(&mut self, lits: &[Literal]) {
        self.write_line("", lits);
    }

    fn delete(&mut self, lits: &[Literal]) {
        // the empty clause is never deleted
        if !lits.is_empty() {
            self.write_line("d ", lits);
        }
    }
}
