//! Literals, clauses, formulas and clausal proofs.

use std::fmt;

use crate::error::Error;

/// Variable identifier. Ids start at 1.
pub type Var = u64;

/// A signed, nonzero DIMACS literal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i64);

impl Literal {
    /// Builds a literal from its DIMACS value.
    ///
    /// Panics on zero; use [`Literal::try_new`] for untrusted input.
    #[inline]
    pub fn new(value: i64) -> Literal {
        assert!(value != 0, "literal value must be nonzero");
        Literal(value)
    }

    pub fn try_new(value: i64) -> Option<Literal> {
        (value != 0 && value != i64::MIN).then_some(Literal(value))
    }

    #[inline]
    pub fn positive(var: Var) -> Literal {
        Literal::new(var as i64)
    }

    #[inline]
    pub fn negative(var: Var) -> Literal {
        Literal::new(-(var as i64))
    }

    #[inline]
    pub fn value(self) -> i64 {
        self.0
    }

    #[inline]
    pub fn var(self) -> Var {
        self.0.unsigned_abs()
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn complement(self) -> Literal {
        Literal(-self.0)
    }

    /// Dense index: `2 * (var - 1)` for the positive literal, `+1` for the negative one.
    #[inline]
    pub fn index(self) -> usize {
        ((self.var() - 1) as usize) << 1 | (self.0 < 0) as usize
    }

    #[inline]
    pub fn from_index(index: usize) -> Literal {
        let var = (index >> 1) as i64 + 1;
        Literal(if index & 1 == 1 { -var } else { var })
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;

    #[inline]
    fn not(self) -> Literal {
        self.complement()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A disjunction of literals. Literal order is kept exactly as constructed;
/// the first literal is the RAT pivot.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    /// Builds a clause, rejecting duplicate literals.
    pub fn new(lits: Vec<Literal>) -> Result<Clause, Error> {
        if let Some(dup) = first_duplicate(&lits) {
            return Err(Error::DuplicateLiteral(dup.value()));
        }
        Ok(Clause { lits })
    }

    /// Builds a clause from literals the caller guarantees to be distinct.
    pub(crate) fn from_distinct(lits: Vec<Literal>) -> Clause {
        debug_assert!(first_duplicate(&lits).is_none(), "duplicate literal in {lits:?}");
        Clause { lits }
    }

    pub fn empty() -> Clause {
        Clause { lits: Vec::new() }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn pivot(&self) -> Option<Literal> {
        self.lits.first().copied()
    }

    pub fn is_tautology(&self) -> bool {
        is_tautology(&self.lits)
    }

    pub fn max_var(&self) -> Var {
        self.lits.iter().map(|l| l.var()).max().unwrap_or(0)
    }

    /// Sorted copy of the literals, used for order-insensitive matching.
    pub fn sorted_key(&self) -> Vec<Literal> {
        let mut key = self.lits.clone();
        key.sort_unstable();
        key
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, lit) in self.lits.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{lit}")?;
        }
        f.write_str(")")
    }
}

impl<'a> IntoIterator for &'a Clause {
    type Item = &'a Literal;
    type IntoIter = std::slice::Iter<'a, Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.lits.iter()
    }
}

fn first_duplicate(lits: &[Literal]) -> Option<Literal> {
    if lits.len() <= 8 {
        for (i, a) in lits.iter().enumerate() {
            if lits[..i].contains(a) {
                return Some(*a);
            }
        }
        return None;
    }
    let mut seen = std::collections::HashSet::with_capacity(lits.len());
    lits.iter().copied().find(|l| !seen.insert(*l))
}

pub(crate) fn is_tautology(lits: &[Literal]) -> bool {
    if lits.len() <= 8 {
        return lits.iter().enumerate().any(|(i, a)| lits[i + 1..].contains(&!*a));
    }
    let set: std::collections::HashSet<_> = lits.iter().copied().collect();
    lits.iter().any(|l| set.contains(&!*l))
}

/// Convenience constructor used by generators and tests: `clause![1, -2]`.
#[macro_export]
macro_rules! clause {
    () => { $crate::Clause::empty() };
    ($($lit:expr),+ $(,)?) => {
        $crate::Clause::new(vec![$($crate::Literal::new($lit)),+]).expect("distinct literals")
    };
}

/// A CNF formula: declared variable count plus clauses in order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CnfFormula {
    num_vars: Var,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Builds a formula, checking that every literal lies within `1..=num_vars`.
    pub fn new(num_vars: Var, clauses: Vec<Clause>) -> Result<CnfFormula, Error> {
        for clause in &clauses {
            if let Some(lit) = clause.literals().iter().find(|l| l.var() > num_vars) {
                return Err(Error::LiteralOutOfRange { literal: lit.value(), num_vars });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> Var {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn into_clauses(self) -> Vec<Clause> {
        self.clauses
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum LineKind {
    Add,
    Delete,
}

/// One DRAT proof line.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ProofLine {
    pub kind: LineKind,
    pub clause: Clause,
}

impl ProofLine {
    pub fn add(clause: Clause) -> ProofLine {
        ProofLine { kind: LineKind::Add, clause }
    }

    pub fn delete(clause: Clause) -> ProofLine {
        ProofLine { kind: LineKind::Delete, clause }
    }

    pub fn is_add(&self) -> bool {
        self.kind == LineKind::Add
    }
}

/// An ordered sequence of clause additions and deletions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Proof {
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn new(lines: Vec<ProofLine>) -> Proof {
        Proof { lines }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn added_count(&self) -> usize {
        self.lines.iter().filter(|l| l.is_add()).count()
    }

    pub fn deleted_count(&self) -> usize {
        self.lines.len() - self.added_count()
    }

    /// True if the last addition is the empty clause.
    pub fn is_complete(&self) -> bool {
        self.lines.iter().rev().find(|l| l.is_add()).is_some_and(|l| l.clause.is_empty())
    }
}

/// Receiver for generated proof lines. Lets generators stream to a writer,
/// a counter, or an in-memory [`Proof`] without materializing the proof.
pub trait ProofSink {
    fn add(&mut self, lits: &[Literal]);
    fn delete(&mut self, lits: &[Literal]);
}

impl ProofSink for Proof {
    fn add(&mut self, lits: &[Literal]) {
        self.lines.push(ProofLine::add(Clause::from_distinct(lits.to_vec())));
    }

    fn delete(&mut self, lits: &[Literal]) {
        self.lines.push(ProofLine::delete(Clause::from_distinct(lits.to_vec())));
    }
}

/// Sink that only counts lines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LineCounter {
    pub added: u64,
    pub deleted: u64,
}

impl ProofSink for LineCounter {
    fn add(&mut self, _lits: &[Literal]) {
        self.added += 1;
    }

    fn delete(&mut self, _lits: &[Literal]) {
        self.deleted += 1;
    }
}
