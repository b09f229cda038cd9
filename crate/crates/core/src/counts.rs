//! Exact clause counts for both proofs, per iteration and in closed form.

use num_rational::Ratio;

use crate::encoding::{check_n, GroupLayout};
use crate::error::Error;

type Q = Ratio<i128>;

/// Added clauses of one iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IterationCount {
    pub k: u64,
    pub definitions: u64,
    /// Group clauses (ours) or pair clauses (baseline).
    pub group_or_pair: u64,
    pub alo: u64,
}

impl IterationCount {
    pub fn total(&self) -> u64 {
        self.definitions + self.group_or_pair + self.alo
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountBreakdown {
    /// Iterations from `k = n-1` down to `1`.
    pub per_iteration: Vec<IterationCount>,
    /// Sum of all iterations plus the empty clause.
    pub total: u64,
}

/// Group clauses per hole at iteration `k`: `⌊7k/2⌋ - 4`, and 1 for `k = 1`.
pub fn f_group(k: u64) -> Result<u64, Error> {
    match k {
        0 => Err(Error::OutOfRange { what: "k", min: 1, got: 0 }),
        1 => Ok(1),
        _ => Ok(7 * k / 2 - 4),
    }
}

/// Group clauses per hole counted from the group structure itself.
pub fn f_group_structural(k: u64) -> u64 {
    let layout = GroupLayout::new(k as usize + 1).expect("k >= 1");
    let last = layout.members(layout.group_count() - 1).len() as u64;
    7 * layout.aux_count() as u64 + last * (last - 1) / 2
}

fn check(n: u64) -> Result<(), Error> {
    check_n(n as usize, 2)
}

pub fn count_ours_breakdown(n: u64) -> Result<CountBreakdown, Error> {
    check(n)?;
    let per_iteration: Vec<_> = (1..n)
        .rev()
        .map(|k| IterationCount { k, definitions: (4 * k + 2) * k, group_or_pair: k * f_group(k).unwrap(), alo: k + 1 })
        .collect();
    let total = per_iteration.iter().map(IterationCount::total).sum::<u64>() + 1;
    Ok(CountBreakdown { per_iteration, total })
}

pub fn count_cook_breakdown(n: u64) -> Result<CountBreakdown, Error> {
    check(n)?;
    let per_iteration: Vec<_> = (1..n)
        .rev()
        .map(|k| IterationCount { k, definitions: 4 * (k + 1) * k, group_or_pair: (k + 1) * k * k, alo: k + 1 })
        .collect();
    let total = per_iteration.iter().map(IterationCount::total).sum::<u64>() + 1;
    Ok(CountBreakdown { per_iteration, total })
}

fn q(num: i128, den: i128) -> Q {
    Q::new(num, den)
}

fn integral(value: Q) -> u64 {
    assert!(value.is_integer(), "closed form is not integral: {value}");
    u64::try_from(value.to_integer()).expect("count is nonnegative")
}

/// Closed form of the group-encoded proof length.
///
/// Even n: `5/2 n³ - 35/8 n² + 11/4 n + 2`; odd n: `5/2 n³ - 35/8 n² + 3n + 15/8`.
pub fn count_ours(n: u64) -> Result<u64, Error> {
    check(n)?;
    let x = Q::from_integer(n as i128);
    let cubic = q(5, 2) * x * x * x - q(35, 8) * x * x;
    let value = if n.is_multiple_of(2) { cubic + q(11, 4) * x + q(2, 1) } else { cubic + q(3, 1) * x + q(15, 8) };
    Ok(integral(value))
}

/// Closed form of the baseline proof length: `1/4 n⁴ + 7/6 n³ + 1/4 n² - 2/3 n`.
pub fn count_cook(n: u64) -> Result<u64, Error> {
    check(n)?;
    let x = Q::from_integer(n as i128);
    let value = q(1, 4) * x * x * x * x + q(7, 6) * x * x * x + q(1, 4) * x * x - q(2, 3) * x;
    Ok(integral(value))
}

/// Per-iteration length of the baseline proof: `k³ + 5k² + 5k + 1`.
pub fn cook_iteration(k: u64) -> u64 {
    k * k * k + 5 * k * k + 5 * k + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_values() {
        assert_eq!(f_group(1).unwrap(), 1);
        assert_eq!(f_group(2).unwrap(), 3);
        assert_eq!(f_group(3).unwrap(), 6);
        assert_eq!(f_group(4).unwrap(), 10);
        assert_eq!(f_group(5).unwrap(), 13);
        assert!(f_group(0).is_err());
    }

    #[test]
    fn f_matches_structure() {
        for k in 1..=500 {
            assert_eq!(f_group(k).unwrap(), f_group_structural(k), "k={k}");
        }
    }

    #[test]
    fn paper_totals_at_100() {
        assert_eq!(count_ours(100).unwrap(), 2_456_527);
        assert_eq!(count_cook(100).unwrap(), 26_169_100);
    }

    #[test]
    fn small_totals() {
        assert_eq!(count_ours(2).unwrap(), 10);
        assert_eq!(count_ours(3).unwrap(), 39);
        assert_eq!(count_cook(2).unwrap(), 13);
        assert!(count_ours(1).is_err());
        assert!(count_cook(0).is_err());
    }

    #[test]
    fn breakdown_3() {
        let b = count_ours_breakdown(3).unwrap();
        assert_eq!(
            b.per_iteration,
            vec![
                IterationCount { k: 2, definitions: 20, group_or_pair: 6, alo: 3 },
                IterationCount { k: 1, definitions: 6, group_or_pair: 1, alo: 2 },
            ]
        );
        assert_eq!(b.per_iteration[1].total(), 9);
        assert_eq!(b.total, 39);
    }

    #[test]
    fn cook_iteration_formula() {
        assert_eq!(cook_iteration(3), 88);
        let b = count_cook_breakdown(4).unwrap();
        assert_eq!(b.per_iteration[0].k, 3);
        assert_eq!(b.per_iteration[0].total(), 88);
        assert_eq!(b.per_iteration[0].definitions, 48);
        assert_eq!(b.per_iteration[0].group_or_pair, 36);
    }

    #[test]
    fn closed_forms_match_sums() {
        for n in 2..=200 {
            assert_eq!(count_ours(n).unwrap(), count_ours_breakdown(n).unwrap().total, "n={n}");
            assert_eq!(count_cook(n).unwrap(), count_cook_breakdown(n).unwrap().total, "n={n}");
            let b = count_cook_breakdown(n).unwrap();
            assert!(b.per_iteration.iter().all(|it| it.total() == cook_iteration(it.k)));
        }
    }
}
