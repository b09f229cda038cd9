//! Clause database with two watched literals, partial assignments, and unit propagation.

use std::collections::HashMap;

use crate::types::{Clause, Literal, Var};

pub type ClauseId = usize;

/// Partial assignment with an ordered trail.
///
/// Equality and hashing look at the trail and its reasons only; the value
/// table is derived from the trail.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    // per variable: 0 unassigned, 1 true, -1 false
    values: Vec<i8>,
    trail: Vec<Literal>,
    reasons: Vec<Option<ClauseId>>,
    propagated: usize,
}

impl PartialEq for Assignment {
    fn eq(&self, other: &Assignment) -> bool {
        self.trail == other.trail && self.reasons == other.reasons
    }
}

impl Eq for Assignment {}

impl std::hash::Hash for Assignment {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trail.hash(state);
        self.reasons.hash(state);
    }
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn with_vars(num_vars: Var) -> Assignment {
        let mut a = Assignment::default();
        a.ensure_var(num_vars);
        a
    }

    pub fn ensure_var(&mut self, var: Var) {
        if self.values.len() < var as usize {
            self.values.resize(var as usize, 0);
        }
    }

    #[inline]
    pub fn value(&self, lit: Literal) -> Option<bool> {
        match self.values.get(lit.var() as usize - 1).copied().unwrap_or(0) {
            0 => None,
            v => Some((v > 0) == lit.is_positive()),
        }
    }

    #[inline]
    pub fn is_true(&self, lit: Literal) -> bool {
        self.value(lit) == Some(true)
    }

    #[inline]
    pub fn is_false(&self, lit: Literal) -> bool {
        self.value(lit) == Some(false)
    }

    /// Makes `lit` true. The literal must be unassigned.
    pub fn assign(&mut self, lit: Literal, reason: Option<ClauseId>) {
        self.ensure_var(lit.var());
        let slot = &mut self.values[lit.var() as usize - 1];
        debug_assert_eq!(*slot, 0, "{lit} already assigned");
        *slot = if lit.is_positive() { 1 } else { -1 };
        self.trail.push(lit);
        self.reasons.push(reason);
    }

    pub fn trail(&self) -> &[Literal] {
        &self.trail
    }

    /// Reason clause for each trail entry; `None` for assumptions.
    pub fn reasons(&self) -> &[Option<ClauseId>] {
        &self.reasons
    }

    pub fn len(&self) -> usize {
        self.trail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trail.is_empty()
    }

    /// Pops the trail back to `len` entries, unassigning everything above it.
    pub fn backtrack(&mut self, len: usize) {
        while self.trail.len() > len {
            let lit = self.trail.pop().expect("trail longer than len");
            self.reasons.pop();
            self.values[lit.var() as usize - 1] = 0;
        }
        self.propagated = self.propagated.min(len);
    }
}

#[derive(Clone, Debug)]
struct StoredClause {
    // watched literals sit in positions 0 and 1
    lits: Box<[Literal]>,
    active: bool,
}

/// Working clause set with watch lists and a literal occurrence index.
#[derive(Clone, Debug, Default)]
pub struct ClauseDb {
    clauses: Vec<StoredClause>,
    watches: Vec<Vec<ClauseId>>,
    occurrences: Vec<Vec<ClauseId>>,
    units: Vec<ClauseId>,
    empty_clauses: usize,
    by_key: HashMap<Box<[Literal]>, Vec<ClauseId>>,
    num_active: usize,
    max_var: Var,
}

impl ClauseDb {
    pub fn new() -> ClauseDb {
        ClauseDb::default()
    }

    pub fn from_clauses<'a>(clauses: impl IntoIterator<Item = &'a Clause>) -> ClauseDb {
        let mut db = ClauseDb::new();
        for c in clauses {
            db.add(c.literals());
        }
        db
    }

    pub fn max_var(&self) -> Var {
        self.max_var
    }

    pub fn len(&self) -> usize {
        self.num_active
    }

    pub fn is_empty(&self) -> bool {
        self.num_active == 0
    }

    pub fn contains_empty_clause(&self) -> bool {
        self.empty_clauses > 0
    }

    fn ensure_var(&mut self, var: Var) {
        if var > self.max_var {
            self.max_var = var;
            let lits = 2 * var as usize;
            self.watches.resize_with(lits, Vec::new);
            self.occurrences.resize_with(lits, Vec::new);
        }
    }

    /// Adds a clause to the working set. Literals must be distinct.
    pub fn add(&mut self, lits: &[Literal]) -> ClauseId {
        let id = self.clauses.len();
        if let Some(max) = lits.iter().map(|l| l.var()).max() {
            self.ensure_var(max);
        }
        for lit in lits {
            self.occurrences[lit.index()].push(id);
        }
        match lits.len() {
            0 => self.empty_clauses += 1,
            1 => self.units.push(id),
            _ => {
                self.watches[lits[0].index()].push(id);
                self.watches[lits[1].index()].push(id);
            }
        }
        let mut key: Box<[Literal]> = lits.into();
        key.sort_unstable();
        self.by_key.entry(key).or_default().push(id);
        self.clauses.push(StoredClause { lits: lits.into(), active: true });
        self.num_active += 1;
        id
    }

    /// Removes one clause equal to `lits` as a multiset. Returns false if none is present.
    pub fn delete(&mut self, lits: &[Literal]) -> bool {
        let mut key = lits.to_vec();
        key.sort_unstable();
        let Some(ids) = self.by_key.get_mut(key.as_slice()) else {
            return false;
        };
        let Some(id) = ids.pop() else {
            return false;
        };
        if ids.is_empty() {
            self.by_key.remove(key.as_slice());
        }
        // watch and occurrence entries are dropped lazily
        self.clauses[id].active = false;
        self.num_active -= 1;
        match lits.len() {
            0 => self.empty_clauses -= 1,
            1 => self.units.retain(|&u| u != id),
            _ => {}
        }
        true
    }

    pub fn is_active(&self, id: ClauseId) -> bool {
        self.clauses[id].active
    }

    /// Literals of a stored clause. The order may differ from the added order.
    pub fn literals(&self, id: ClauseId) -> &[Literal] {
        &self.clauses[id].lits
    }

    /// Active clauses containing `lit`.
    pub fn occurrences(&mut self, lit: Literal) -> &[ClauseId] {
        if lit.var() > self.max_var {
            return &[];
        }
        let clauses = &self.clauses;
        let list = &mut self.occurrences[lit.index()];
        list.retain(|&id| clauses[id].active);
        list
    }

    /// Active clauses in insertion order.
    pub fn active_clauses(&self) -> impl Iterator<Item = (ClauseId, &[Literal])> {
        self.clauses.iter().enumerate().filter(|(_, c)| c.active).map(|(id, c)| (id, &*c.lits))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropagationResult {
    Fixpoint,
    /// A clause is falsified; `None` when the database holds the empty clause.
    Conflict(Option<ClauseId>),
}

impl PropagationResult {
    pub fn is_conflict(self) -> bool {
        matches!(self, PropagationResult::Conflict(_))
    }
}

/// Extends `a` to the unit-propagation fixpoint of `db`, or reports a falsified clause.
///
/// Unit clauses of the database are asserted on every call, so an empty
/// assignment is a valid starting point. Literals already on the trail
/// past the propagation head are processed as well.
pub fn propagate(db: &mut ClauseDb, a: &mut Assignment) -> PropagationResult {
    if db.empty_clauses > 0 {
        return PropagationResult::Conflict(None);
    }
    a.ensure_var(db.max_var);
    for &id in &db.units {
        let lit = db.clauses[id].lits[0];
        match a.value(lit) {
            Some(true) => {}
            Some(false) => return PropagationResult::Conflict(Some(id)),
            None => a.assign(lit, Some(id)),
        }
    }

    while a.propagated < a.trail.len() {
        let falsified = !a.trail[a.propagated];
        a.propagated += 1;
        if falsified.var() > db.max_var {
            continue;
        }
        if let Some(conflict) = visit_watches(db, a, falsified) {
            return PropagationResult::Conflict(Some(conflict));
        }
    }
    PropagationResult::Fixpoint
}

fn visit_watches(db: &mut ClauseDb, a: &mut Assignment, falsified: Literal) -> Option<ClauseId> {
    let mut watchers = std::mem::take(&mut db.watches[falsified.index()]);
    let mut conflict = None;
    let mut kept = 0;
    let mut i = 0;
    while i < watchers.len() {
        let id = watchers[i];
        i += 1;
        let clause = &mut db.clauses[id];
        if !clause.active {
            continue;
        }
        let lits = &mut clause.lits;
        if lits[0] == falsified {
            lits.swap(0, 1);
        }
        debug_assert_eq!(lits[1], falsified);
        let other = lits[0];
        if a.is_true(other) {
            watchers[kept] = id;
            kept += 1;
            continue;
        }
        if let Some(pos) = (2..lits.len()).find(|&j| !a.is_false(lits[j])) {
            lits.swap(1, pos);
            let new_watch = lits[1];
            db.watches[new_watch.index()].push(id);
            continue;
        }
        watchers[kept] = id;
        kept += 1;
        if a.is_false(other) {
            conflict = Some(id);
            break;
        }
        a.assign(other, Some(id));
    }
    // keep the unvisited tail
    while i < watchers.len() {
        watchers[kept] = watchers[i];
        kept += 1;
        i += 1;
    }
    watchers.truncate(kept);
    let slot = &mut db.watches[falsified.index()];
    // a false literal never becomes a new watch
    debug_assert!(slot.is_empty());
    *slot = watchers;
    conflict
}
