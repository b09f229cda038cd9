//! Cook's O(n⁴) proof, used as the comparison baseline.
//!
//! Same reduction as the group-encoded proof, but every layer keeps the
//! pairwise at-most-one encoding: each pair of new variables sharing a hole
//! gets a helper clause and the pairwise clause itself, both RUP.

use crate::encoding::check_n;
use crate::error::Error;
use crate::proof_ours::{collect, delete_input, write_alo, write_definitions, AsDeletions, IterationPlan};
use crate::types::{Proof, ProofLine, ProofSink};

pub use crate::proof_ours::GenOptions;

/// Plan for the baseline proof; layouts carry no auxiliary variables.
pub fn cook_plan(n: usize, k: usize) -> Result<IterationPlan, Error> {
    check_n(n, 2)?;
    if k < 1 || k >= n {
        return Err(Error::OutOfRange { what: "iteration k (1 <= k < n)", min: 1, got: k as u64 });
    }
    let prev = crate::encoding::LayerLayout::pairwise(n, k + 1)?;
    Ok(IterationPlan::from_prev(prev, false))
}

fn write_pairs(plan: &IterationPlan, sink: &mut impl ProofSink) {
    let (k, prev, next) = (plan.k, &plan.prev, &plan.next);
    for h in 1..=k {
        for p in 0..=k {
            for q in p + 1..=k {
                let (xp, xq) = (next.x(p, h), next.x(q, h));
                sink.add(&[!xp, !xq, !prev.x(p, k + 1)]);
                sink.add(&[!xp, !xq]);
            }
        }
    }
}

fn write_iteration(plan: &IterationPlan, sink: &mut impl ProofSink) {
    write_definitions(plan, false, sink);
    write_pairs(plan, sink);
    write_alo(plan, sink);
}

pub fn cook_definitions(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_definitions(plan, false, s))
}

pub fn cook_pair_clauses(plan: &IterationPlan) -> Vec<ProofLine> {
    collect(|s| write_pairs(plan, s))
}

pub fn write_cook(n: usize, options: GenOptions, sink: &mut impl ProofSink) -> Result<(), Error> {
    check_n(n, 2)?;
    let mut previous: Option<IterationPlan> = None;
    for plan in IterationPlan::all(n, false) {
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

pub fn generate_cook(n: usize, options: GenOptions) -> Result<Proof, Error> {
    let mut proof = Proof::default();
    write_cook(n, options, &mut proof)?;
    Ok(proof)
}
