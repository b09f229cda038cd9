//! The O(n³) DRAT proof of the pigeonhole formula.
//!
//! Each iteration `k = n-1, ..., 1` removes pigeon `k+1` and hole `k+1`. The
//! new pigeon variables `x'(p, h) <-> x(p, h) ∨ (x(k+1, h) ∧ x(p, k+1))` are
//! introduced by definition clauses, the at-most-one constraint of every hole
//! is re-encoded with the group chain of [`GroupLayout`], and the
//! at-least-one clauses follow by unit propagation. Every added clause is
//! written with its RAT pivot first.

use crate::encoding::{check_n, php_standard, GroupLayout, LayerLayout};
use crate::error::Error;
use crate::types::{Literal, Proof, ProofLine, ProofSink};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenOptions {
    /// After each iteration, delete the clauses the previous layer no longer needs.
    pub emit_deletions: bool,
}

/// Layouts for one reduction step from layer `k + 1` to layer `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationPlan {
    pub k: usize,
    pub prev: LayerLayout,
    pub next: LayerLayout,
    /// Groups over the `k + 1` pigeons of the new layer.
    pub groups: GroupLayout,
}

impl IterationPlan {
    pub fn new(n: usize, k: usize) -> Result<IterationPlan, Error> {
        check_n(n, 2)?;
        if k < 1 || k >= n {
            return Err(Error::OutOfRange { what: "iteration k (1 <= k < n)", min: 1, got: k as u64 });
        }
        let prev = LayerLayout::new(n, k + 1)?;
        Ok(IterationPlan::from_prev(prev, true))
    }

    pub(crate) fn from_prev(prev: LayerLayout, with_aux: bool) -> IterationPlan {
        let next = prev.next(with_aux);
        let groups = GroupLayout::new(next.layer + 1).expect("at least two pigeons");
        IterationPlan { k: next.layer, prev, next, groups }
    }

    /// Plans for `k = n-1` down to `1`.
    pub(crate) fn all(n: usize, with_aux: bool) -> impl Iterator<Item = IterationPlan> {
        let mut prev = LayerLayout::pairwise(n, n).expect("validated n");
        (1..n).rev().map(move |_| {
            let plan = IterationPlan::from_prev(prev, with_aux);
            prev = plan.next;
            plan
        })
    }
}

/// Collects the lines a writer produces.
pub(crate) fn collect(write: impl FnOnce(&mut Proof)) -> Vec<ProofLine> {
    let mut proof = Proof::default();
    write(&mut proof);
    proof.lines
}

/// Turns additions into deletions.
pub(crate) struct AsDeletions<'a, S: ProofSink>(pub &'a mut S);

impl<S: ProofSink> ProofSink for AsDeletions<'_, S> {
    fn add(&mut self, lits: &[Literal]) {
        self.0.delete(lits);
    }

    fn delete(&mut self, _lits: &[Literal]) {}
}

/// Definitions of `x'(p, h)`, pivot first. With `omit_last`, pigeon `k` gets
/// only the two clauses in which `x'(k, h)` occurs positively.
pub(crate) fn write_definitions(plan: &IterationPlan, omit_last: bool, sink: &mut impl ProofSink) {
    let (k, prev, next) = (plan.k, &plan.prev, &plan.next);
    let top = k + 1;
    for p in 0..=k {
        for h in 1..=k {
            let xn = next.x(p, h);
            let x_ph = prev.x(p, h);
            let x_p_top = prev.x(p, top);
            let x_top_h = prev.x(top, h);
            if !(omit_last && p == k) {
                sink.add(&[!xn, x_ph, x_p_top]);
                sink.add(&[!xn, x_ph, x_top_h]);
            }
            sink.add(&[xn, !x_ph]);
            sink.add(&[xn, !x_p_top, !x_top_h]);
        }
    }
}

pub(crate) fn write_y_definitions(plan: &IterationPlan, sink: &mut impl ProofSink) {
    let next = &plan.next;
    for h in 1..=plan.k {
        for g in 0..plan.groups.aux_count() {
            let members = plan.groups.member_literals(g, |p| next.x(p, h), |a| next.y(a, h));
            let y = next.y(g, h);
            let mut positive = Vec::with_capacity(members.len() + 1);
            positive.push(y);
            positive.extend_from_slice(&members);
            sink.add(&positive);
            for &l in &members {
                sink.add(&[!y, !l]);
            }
        }
    }
}

pub(crate) fn write_derived(plan: &IterationPlan, sink: &mut impl ProofSink) {
    let next = &plan.next;
    for h in 1..=plan.k {
        for g in 0..plan.groups.group_count() {
            let members = plan.groups.member_literals(g, |p| next.x(p, h), |a| next.y(a, h));
            // the later member is always a pigeon literal and carries the pivot
            for (i, &earlier) in members.iter().enumerate() {
                for &later in &members[i + 1..] {
                    sink.add(&[!later, !earlier]);
                }
            }
        }
    }
}

pub(crate) fn write_alo(plan: &IterationPlan, sink: &mut impl ProofSink) {
    let next = &plan.next;
    let mut clause = Vec::with_capacity(plan.k);
    for p in 0..=plan.k {
        clause.clear();
        clause.extend((1..=plan.k).map(|h| next.x(p, h)));
        sink.add(&clause);
    }
}

fn write_iteration(plan: &IterationPlan, sink: &mut impl ProofSink) {
    write_definitions(plan, true, sink);
    write_y_definitions(plan, sink);
    write_derived(plan, sink);
    write_alo(plan, sink);
}

pub fn definition_clauses(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_definitions(plan, true, s))
}

pub fn y_definition_clauses(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_y_definitions(plan, s))
}

pub fn derived_group_clauses(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_derived(plan, s))
}

pub fn alo_clauses(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_alo(plan, s))
}

/// Deletes the input formula clauses.
pub(crate) fn delete_input(n: usize, sink: &mut impl ProofSink) {
    let formula = php_standard(n).expect("validated n");
    for clause in formula.clauses() {
        sink.delete(clause.literals());
    }
}

/// Streams the proof for `php_standard(n)` into `sink`.
pub fn write_ours(n: usize, options: GenOptions, sink: &mut impl ProofSink) -> Result<(), Error> {
    check_n(n, 2)?;
    let mut previous: Option<IterationPlan> = None;
    for plan in IterationPlan::all(n, true) {
        write_iteration(&plan, sink);
        if options.emit_deletions {
            match &previous {
                None => delete_input(n, sink),
                Some(prev_plan) => write_iteration(prev_plan, &mut AsDeletions(sink)),
            }
        }
        previous = Some(plan);
    }
    sink.add(&[]);
    Ok(())
}

pub fn generate_ours(n: usize, options: GenOptions) -> Result<Proof, Error> {
    let mut proof = Proof::default();
    write_ours(n, options, &mut proof)?;
    Ok(proof)
}
