//! Reference implementations used as test oracles. Nothing here shares code
//! with the library's propagation or checking paths.

#![allow(dead_code)]

use std::collections::HashMap;

use pigeon_core::{CnfFormula, LineKind, Literal, Proof};

/// Verdict of the reference checker: `Ok(line)` when the empty clause is
/// accepted, `Err(Some(line))` on rejection, `Err(None)` when incomplete.
pub type NaiveVerdict = Result<usize, Option<usize>>;

/// Full re-scan unit propagation. Returns true on conflict.
pub fn naive_propagate(clauses: &[Vec<i64>], assignment: &mut HashMap<u64, bool>) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut satisfied = false;
            for &lit in clause {
                match assignment.get(&lit.unsigned_abs()) {
                    Some(&v) if v == (lit > 0) => {
                        satisfied = true;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match open {
                0 => return true,
                1 => {
                    let lit = unassigned.unwrap();
                    assignment.insert(lit.unsigned_abs(), lit > 0);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return false;
        }
    }
}

pub fn naive_rup(clauses: &[Vec<i64>], lits: &[i64]) -> bool {
    let mut assignment = HashMap::new();
    for &lit in lits {
        match assignment.get(&lit.unsigned_abs()) {
            Some(&v) if v == (lit > 0) => return true,
            Some(_) => {}
            None => {
                assignment.insert(lit.unsigned_abs(), lit < 0);
            }
        }
    }
    naive_propagate(clauses, &mut assignment)
}

pub fn naive_rat(clauses: &[Vec<i64>], lits: &[i64]) -> bool {
    let pivot = lits[0];
    for d in clauses.iter().filter(|d| d.contains(&-pivot)) {
        let mut resolvent: Vec<i64> = lits[1..].to_vec();
        for &l in d {
            if l != -pivot && !resolvent.contains(&l) {
                resolvent.push(l);
            }
        }
        if resolvent.iter().any(|l| resolvent.contains(&-l)) {
            continue;
        }
        if !naive_rup(clauses, &resolvent) {
            return false;
        }
    }
    true
}

fn values(lits: &[Literal]) -> Vec<i64> {
    lits.iter().map(|l| l.value()).collect()
}

pub fn naive_verify(formula: &CnfFormula, proof: &Proof) -> NaiveVerdict {
    let mut clauses: Vec<Vec<i64>> = formula.clauses().iter().map(|c| values(c.literals())).collect();
    for (i, line) in proof.lines.iter().enumerate() {
        let lits = values(line.clause.literals());
        match line.kind {
            LineKind::Delete => {
                let mut key = lits.clone();
                key.sort();
                if let Some(pos) = clauses.iter().rposition(|c| {
                    let mut k = c.clone();
                    k.sort();
                    k == key
                }) {
                    clauses.remove(pos);
                }
            }
            LineKind::Add => {
                let ok = naive_rup(&clauses, &lits) || (!lits.is_empty() && naive_rat(&clauses, &lits));
                if !ok {
                    return Err(Some(i + 1));
                }
                if lits.is_empty() {
                    return Ok(i + 1);
                }
                clauses.push(lits);
            }
        }
    }
    Err(None)
}

/// Clauses as (positive mask, negative mask) over at most 32 variables.
pub fn masks(formula: &CnfFormula) -> Vec<(u32, u32)> {
    assert!(formula.num_vars() <= 32);
    formula
        .clauses()
        .iter()
        .map(|c| {
            c.literals().iter().fold((0u32, 0u32), |(pos, neg), l| {
                let bit = 1u32 << (l.var() - 1);
                if l.is_positive() {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect()
}

/// All models, by exhaustive enumeration of `2^num_vars` assignments.
/// Bit `v - 1` of each model is the value of variable `v`.
pub fn all_models(formula: &CnfFormula) -> Vec<u32> {
    let clauses = masks(formula);
    let vars = formula.num_vars();
    assert!(vars <= 26, "exhaustive enumeration over {vars} variables is too large");
    (0..(1u32 << vars)).filter(|&a| clauses.iter().all(|&(pos, neg)| (a & pos) | (!a & neg) != 0)).collect()
}

pub fn is_satisfiable(formula: &CnfFormula) -> bool {
    let clauses = masks(formula);
    let vars = formula.num_vars();
    assert!(vars <= 26);
    (0..(1u32 << vars)).any(|a| clauses.iter().all(|&(pos, neg)| (a & pos) | (!a & neg) != 0))
}

/// Distinct restrictions of `models` to the low `bits` variables, sorted.
pub fn project(models: &[u32], bits: u64) -> Vec<u32> {
    let mask = if bits >= 32 { u32::MAX } else { (1u32 << bits) - 1 };
    let mut out: Vec<u32> = models.iter().map(|m| m & mask).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Drops the at-least-one clause of `pigeon` (clause index `pigeon` in both encodings).
pub fn without_alo(formula: &CnfFormula, pigeon: usize) -> CnfFormula {
    let clauses = formula.clauses().iter().enumerate().filter(|(i, _)| *i != pigeon).map(|(_, c)| c.clone()).collect();
    CnfFormula::new(formula.num_vars(), clauses).unwrap()
}
