//! Forward DRAT checking.
//!
//! Every added clause must be RUP with respect to the working formula, or RAT
//! on its first literal. Deletions remove one clause with the same literal
//! multiset. Checking stops at the first successfully added empty clause.

use std::fmt;

use crate::propagate::{propagate, Assignment, ClauseDb};
use crate::types::{is_tautology, CnfFormula, LineKind, Literal, Proof, ProofLine};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Reject deletions of clauses that are not in the working formula.
    pub strict_deletions: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    /// Neither RUP nor RAT on the pivot.
    NotRupNotRat { pivot: Literal },
    /// The empty clause is not implied by unit propagation.
    EmptyNotRup,
    /// Strict mode: the deleted clause is not present.
    MissingDeletion,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NotRupNotRat { pivot } => write!(f, "clause is neither RUP nor RAT on pivot {pivot}"),
            RejectReason::EmptyNotRup => f.write_str("empty clause is not RUP"),
            RejectReason::MissingDeletion => f.write_str("deleted clause is not in the working formula"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The empty clause was added at this 1-based proof line.
    Accepted { line: usize },
    /// Checking failed at this 1-based proof line.
    Rejected { line: usize, reason: RejectReason },
    /// Every line checked, but the empty clause was never added.
    Incomplete,
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted { line } => write!(f, "ACCEPTED (empty clause at line {line})"),
            Verdict::Rejected { line, reason } => write!(f, "REJECTED at line {line}: {reason}"),
            Verdict::Incomplete => f.write_str("INCOMPLETE (no empty clause added)"),
        }
    }
}

/// How an addition was justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Justification {
    Rup,
    Rat,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckStats {
    pub rup: u64,
    pub rat: u64,
    pub deletions: u64,
    pub missing_deletions: u64,
}

/// A forward checking session over one working formula.
#[derive(Clone, Debug)]
pub struct Checker {
    db: ClauseDb,
    assignment: Assignment,
    options: CheckOptions,
    stats: CheckStats,
    line: usize,
    verdict: Option<Verdict>,
    resolvent: Vec<Literal>,
}

impl Checker {
    pub fn new(formula: &CnfFormula, options: CheckOptions) -> Checker {
        let db = ClauseDb::from_clauses(formula.clauses());
        let assignment = Assignment::with_vars(db.max_var().max(formula.num_vars()));
        Checker { db, assignment, options, stats: CheckStats::default(), line: 0, verdict: None, resolvent: Vec::new() }
    }

    pub fn database(&self) -> &ClauseDb {
        &self.db
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn stats(&self) -> CheckStats {
        self.stats
    }

    /// Number of proof lines consumed so far.
    pub fn lines_seen(&self) -> usize {
        self.line
    }

    /// Final verdict once the empty clause was accepted or a line was rejected.
    pub fn verdict(&self) -> Option<Verdict> {
        self.verdict
    }

    /// Verdict after the proof has been fully consumed.
    pub fn finish(&self) -> Verdict {
        self.verdict.unwrap_or(Verdict::Incomplete)
    }

    /// True iff assuming the complement of every literal of `lits` leads to a
    /// conflict by unit propagation. The assignment is restored afterwards.
    pub fn check_rup(&mut self, lits: &[Literal]) -> bool {
        debug_assert!(self.assignment.is_empty());
        let mark = self.assignment.len();
        let mut conflict = self.db.contains_empty_clause();
        if !conflict {
            for &lit in lits {
                match self.assignment.value(lit) {
                    // the clause repeats a literal's complement: tautology
                    Some(true) => {
                        conflict = true;
                        break;
                    }
                    Some(false) => {}
                    None => self.assignment.assign(!lit, None),
                }
            }
        }
        if !conflict {
            conflict = propagate(&mut self.db, &mut self.assignment).is_conflict();
        }
        self.assignment.backtrack(mark);
        conflict
    }

    /// RAT on the first literal: every resolvent with a clause containing the
    /// pivot's complement is a tautology or RUP.
    pub fn check_rat(&mut self, lits: &[Literal]) -> bool {
        let Some(&pivot) = lits.first() else {
            return false;
        };
        let partners: Vec<_> = self.db.occurrences(!pivot).to_vec();
        let mut resolvent = std::mem::take(&mut self.resolvent);
        let mut ok = true;
        for id in partners {
            resolvent.clear();
            resolvent.extend_from_slice(&lits[1..]);
            for &lit in self.db.literals(id) {
                if lit != !pivot && !resolvent.contains(&lit) {
                    resolvent.push(lit);
                }
            }
            if is_tautology(&resolvent) {
                continue;
            }
            if !self.check_rup(&resolvent) {
                ok = false;
                break;
            }
        }
        self.resolvent = resolvent;
        ok
    }

    /// Checks an addition without changing the working formula.
    pub fn justify(&mut self, lits: &[Literal]) -> Option<Justification> {
        if self.check_rup(lits) {
            Some(Justification::Rup)
        } else if !lits.is_empty() && self.check_rat(lits) {
            Some(Justification::Rat)
        } else {
            None
        }
    }

    /// Checks and applies one addition. Returns the verdict if the session is
    /// now finished.
    pub fn add(&mut self, lits: &[Literal]) -> Option<Verdict> {
        if self.verdict.is_some() {
            return self.verdict;
        }
        self.line += 1;
        match self.justify(lits) {
            Some(Justification::Rup) => self.stats.rup += 1,
            Some(Justification::Rat) => self.stats.rat += 1,
            None => {
                let reason = match lits.first() {
                    Some(&pivot) => RejectReason::NotRupNotRat { pivot },
                    None => RejectReason::EmptyNotRup,
                };
                self.verdict = Some(Verdict::Rejected { line: self.line, reason });
                return self.verdict;
            }
        }
        if lits.is_empty() {
            self.verdict = Some(Verdict::Accepted { line: self.line });
            return self.verdict;
        }
        self.db.add(lits);
        None
    }

    /// Applies one deletion.
    pub fn delete(&mut self, lits: &[Literal]) -> Option<Verdict> {
        if self.verdict.is_some() {
            return self.verdict;
        }
        self.line += 1;
        self.stats.deletions += 1;
        if !self.db.delete(lits) {
            self.stats.missing_deletions += 1;
            if self.options.strict_deletions {
                self.verdict = Some(Verdict::Rejected { line: self.line, reason: RejectReason::MissingDeletion });
            }
        }
        self.verdict
    }

    pub fn apply(&mut self, line: &ProofLine) -> Option<Verdict> {
        match line.kind {
            LineKind::Add => self.add(line.clause.literals()),
            LineKind::Delete => self.delete(line.clause.literals()),
        }
    }
}

/// Streams generated lines straight into the checker.
impl crate::types::ProofSink for Checker {
    fn add(&mut self, lits: &[Literal]) {
        Checker::add(self, lits);
    }

    fn delete(&mut self, lits: &[Literal]) {
        Checker::delete(self, lits);
    }
}

/// Checks `proof` against `formula` from the first line onward.
pub fn verify(formula: &CnfFormula, proof: &Proof, options: CheckOptions) -> Verdict {
    verify_with_stats(formula, proof, options).0
}

pub fn verify_with_stats(formula: &CnfFormula, proof: &Proof, options: CheckOptions) -> (Verdict, CheckStats) {
    let mut checker = Checker::new(formula, options);
    for line in &proof.lines {
        if checker.apply(line).is_some() {
            break;
        }
    }
    (checker.finish(), checker.stats())
}
