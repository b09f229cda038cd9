//! Pigeonhole CNF encodings and the variable/group layouts shared by the
//! proof generators.
//!
//! Pigeons are numbered `0..=n`, holes `1..=n`. In the input layer,
//! `x(p, h) = p * n + h`.

use crate::error::Error;
use crate::types::{Clause, CnfFormula, Literal, Var};

/// Largest problem size accepted by the generators.
pub const MAX_N: usize = 5000;

pub(crate) fn check_n(n: usize, min: usize) -> Result<(), Error> {
    if n < min {
        return Err(Error::OutOfRange { what: "n", min: min as u64, got: n as u64 });
    }
    if n > MAX_N {
        return Err(Error::TooLarge { what: "n", max: MAX_N as u64, got: n as u64 });
    }
    Ok(())
}

/// A member of an at-most-one group, in terms of positions in the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Member {
    /// The pigeon literal at this position.
    Pigeon(usize),
    /// The negated auxiliary variable of an earlier group.
    NotAux(usize),
}

/// Partition of one hole's pigeon literals into the groups of the recursive
/// at-most-one decomposition.
///
/// Group 0 holds pigeons 0, 1, 2; intermediate group `g` holds the negated
/// auxiliary of group `g - 1` and pigeons `2g + 1`, `2g + 2`; the final group
/// holds the last negated auxiliary and the 2 or 3 remaining pigeons. With at
/// most four pigeons there is a single final group of plain pigeon literals.
/// Every group except the final one owns an auxiliary variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLayout {
    pigeons: usize,
    groups: Vec<Vec<Member>>,
}

impl GroupLayout {
    pub fn new(pigeons: usize) -> Result<GroupLayout, Error> {
        if pigeons < 2 {
            return Err(Error::OutOfRange { what: "pigeon count", min: 2, got: pigeons as u64 });
        }
        let count = group_count(pigeons);
        let mut groups = Vec::with_capacity(count);
        if count == 1 {
            groups.push((0..pigeons).map(Member::Pigeon).collect());
        } else {
            groups.push(vec![Member::Pigeon(0), Member::Pigeon(1), Member::Pigeon(2)]);
            for g in 1..count - 1 {
                groups.push(vec![Member::NotAux(g - 1), Member::Pigeon(2 * g + 1), Member::Pigeon(2 * g + 2)]);
            }
            let mut last = vec![Member::NotAux(count - 2)];
            last.extend((2 * count - 1..pigeons).map(Member::Pigeon));
            groups.push(last);
        }
        Ok(GroupLayout { pigeons, groups })
    }

    pub fn pigeons(&self) -> usize {
        self.pigeons
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Groups that own an auxiliary variable (all but the final group).
    pub fn aux_count(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn members(&self, g: usize) -> &[Member] {
        &self.groups[g]
    }

    pub fn is_final(&self, g: usize) -> bool {
        g + 1 == self.groups.len()
    }

    /// Literals of group `g` for one hole, given the pigeon and auxiliary variables.
    pub fn member_literals(
        &self,
        g: usize,
        pigeon: impl Fn(usize) -> Literal,
        aux: impl Fn(usize) -> Literal,
    ) -> Vec<Literal> {
        self.groups[g]
            .iter()
            .map(|m| match *m {
                Member::Pigeon(p) => pigeon(p),
                Member::NotAux(a) => !aux(a),
            })
            .collect()
    }
}

/// Number of groups for `pigeons` literals: 1 for up to four, else `(pigeons - 1) / 2`.
pub fn group_count(pigeons: usize) -> usize {
    if pigeons <= 4 {
        1
    } else {
        (pigeons - 1) / 2
    }
}

/// Variable numbering of one layer of the recursive reduction.
///
/// Layer `n` is the input formula: `x(p, h) = p * n + h`, no auxiliaries.
/// Layer `k < n` follows all earlier layers: first `(k + 1) * k` pigeon
/// variables laid out as `x(p, h) = x_base + p * k + h`, then (when auxiliaries
/// are used) `aux_count * k` variables `y(g, h) = y_base + g * k + h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LayerLayout {
    pub n: usize,
    pub layer: usize,
    pub x_base: Var,
    pub y_base: Var,
    aux_groups: usize,
}

impl LayerLayout {
    /// Layout used by the group-encoded proof, with auxiliary variables.
    pub fn new(n: usize, layer: usize) -> Result<LayerLayout, Error> {
        LayerLayout::build(n, layer, true)
    }

    /// Layout without auxiliary variables, used by the pairwise baseline proof.
    pub fn pairwise(n: usize, layer: usize) -> Result<LayerLayout, Error> {
        LayerLayout::build(n, layer, false)
    }

    fn build(n: usize, layer: usize, with_aux: bool) -> Result<LayerLayout, Error> {
        check_n(n, 1)?;
        if layer < 1 {
            return Err(Error::OutOfRange { what: "layer", min: 1, got: layer as u64 });
        }
        if layer > n {
            return Err(Error::TooLarge { what: "layer", max: n as u64, got: layer as u64 });
        }
        let mut layout = LayerLayout::input(n);
        while layout.layer > layer {
            layout = layout.next(with_aux);
        }
        Ok(layout)
    }

    fn input(n: usize) -> LayerLayout {
        let end = (n * (n + 1)) as Var;
        LayerLayout { n, layer: n, x_base: 0, y_base: end, aux_groups: 0 }
    }

    /// Layout of layer `self.layer - 1`.
    pub(crate) fn next(&self, with_aux: bool) -> LayerLayout {
        debug_assert!(self.layer > 1);
        let k = self.layer - 1;
        let x_base = self.last();
        let y_base = x_base + ((k + 1) * k) as Var;
        let aux_groups = if with_aux { group_count(k + 1) - 1 } else { 0 };
        LayerLayout { n: self.n, layer: k, x_base, y_base, aux_groups }
    }

    /// Number of auxiliary variables per hole.
    pub fn aux_groups(&self) -> usize {
        self.aux_groups
    }

    #[inline]
    pub fn x_var(&self, p: usize, h: usize) -> Var {
        debug_assert!(p <= self.layer && (1..=self.layer).contains(&h));
        self.x_base + (p * self.layer + h) as Var
    }

    #[inline]
    pub fn y_var(&self, g: usize, h: usize) -> Var {
        debug_assert!(g < self.aux_groups && (1..=self.layer).contains(&h));
        self.y_base + (g * self.layer + h) as Var
    }

    #[inline]
    pub fn x(&self, p: usize, h: usize) -> Literal {
        Literal::positive(self.x_var(p, h))
    }

    #[inline]
    pub fn y(&self, g: usize, h: usize) -> Literal {
        Literal::positive(self.y_var(g, h))
    }

    /// Last id used by this layer.
    pub fn last(&self) -> Var {
        self.y_base + (self.aux_groups * self.layer) as Var
    }

    /// First id used by this layer.
    pub fn start(&self) -> Var {
        self.x_base + 1
    }
}

/// The standard encoding: one at-least-one clause per pigeon, then for each
/// hole all pairwise at-most-one clauses.
pub fn php_standard(n: usize) -> Result<CnfFormula, Error> {
    check_n(n, 1)?;
    let layout = LayerLayout::input(n);
    let mut clauses = alo_clauses(&layout);
    for h in 1..=n {
        for p in 0..=n {
            for q in p + 1..=n {
                clauses.push(Clause::from_distinct(vec![!layout.x(p, h), !layout.x(q, h)]));
            }
        }
    }
    CnfFormula::new(layout.last(), clauses)
}

/// The recursive at-most-one encoding: at-least-one clauses, then per hole the
/// group clauses of [`GroupLayout`] over fresh auxiliary variables
/// `y(g, h) = n * (n + 1) + g * n + h`.
pub fn php_amo(n: usize) -> Result<CnfFormula, Error> {
    check_n(n, 1)?;
    let mut layout = LayerLayout::input(n);
    let groups = GroupLayout::new(n + 1)?;
    layout.aux_groups = groups.aux_count();
    let mut clauses = alo_clauses(&layout);
    for h in 1..=n {
        for g in 0..groups.group_count() {
            let members = groups.member_literals(g, |p| layout.x(p, h), |a| layout.y(a, h));
            if groups.is_final(g) {
                pairwise_amo(&members, &mut clauses);
            } else {
                let y = layout.y(g, h);
                let mut positive = vec![y];
                positive.extend_from_slice(&members);
                clauses.push(Clause::from_distinct(positive));
                for &l in &members {
                    clauses.push(Clause::from_distinct(vec![!y, !l]));
                }
                pairwise_amo(&members, &mut clauses);
            }
        }
    }
    CnfFormula::new(layout.last(), clauses)
}

fn alo_clauses(layout: &LayerLayout) -> Vec<Clause> {
    let k = layout.layer;
    (0..=k).map(|p| Clause::from_distinct((1..=k).map(|h| layout.x(p, h)).collect())).collect()
}

fn pairwise_amo(members: &[Literal], out: &mut Vec<Clause>) {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            out.push(Clause::from_distinct(vec![!a, !b]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clause;

    #[test]
    fn standard_n1() {
        let f = php_standard(1).unwrap();
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.clauses(), &[clause![1], clause![2], clause![-1, -2]]);
    }

    #[test]
    fn standard_n2() {
        let f = php_standard(2).unwrap();
        assert_eq!(f.num_vars(), 6);
        let expected = vec![
            clause![1, 2],
            clause![3, 4],
            clause![5, 6],
            clause![-1, -3],
            clause![-1, -5],
            clause![-3, -5],
            clause![-2, -4],
            clause![-2, -6],
            clause![-4, -6],
        ];
        assert_eq!(f.clauses(), expected.as_slice());
    }

    #[test]
    fn standard_rejects_zero() {
        assert!(php_standard(0).is_err());
        assert!(php_amo(0).is_err());
        assert!(php_standard(MAX_N + 1).is_err());
    }

    #[test]
    fn standard_count_formula() {
        for n in 1..=30 {
            let f = php_standard(n).unwrap();
            assert_eq!(f.len(), (n + 1) + n * n * (n + 1) / 2, "n={n}");
        }
    }

    #[test]
    fn amo_n2_is_the_standard_encoding() {
        let mut a = php_amo(2).unwrap().into_clauses();
        let mut s = php_standard(2).unwrap().into_clauses();
        a.sort_by_key(|c| c.sorted_key());
        s.sort_by_key(|c| c.sorted_key());
        assert_eq!(a, s);
    }

    #[test]
    fn amo_n4_shape() {
        let f = php_amo(4).unwrap();
        assert_eq!(f.len(), 45);
        assert_eq!(f.num_vars(), 24);
        // hole 1: group 0 over x(0..3,1) = 1, 5, 9 with y = 21, then final {¬21, 13, 17}
        let hole1 = &f.clauses()[5..15];
        let expected = vec![
            clause![21, 1, 5, 9],
            clause![-21, -1],
            clause![-21, -5],
            clause![-21, -9],
            clause![-1, -5],
            clause![-1, -9],
            clause![-5, -9],
            clause![21, -13],
            clause![21, -17],
            clause![-13, -17],
        ];
        assert_eq!(hole1, expected.as_slice());
    }

    #[test]
    fn amo_clause_lengths() {
        for n in 2..=12 {
            let f = php_amo(n).unwrap();
            for (i, c) in f.clauses().iter().enumerate() {
                if i <= n {
                    assert_eq!(c.len(), n);
                } else {
                    assert!(c.len() <= 4, "n={n} clause {c:?}");
                }
            }
        }
    }

    #[test]
    fn group_layouts() {
        assert!(GroupLayout::new(1).is_err());
        use Member::*;
        let g = GroupLayout::new(3).unwrap();
        assert_eq!(g.group_count(), 1);
        assert_eq!(g.members(0), &[Pigeon(0), Pigeon(1), Pigeon(2)]);

        let g = GroupLayout::new(5).unwrap();
        assert_eq!(g.group_count(), 2);
        assert_eq!(g.members(0), &[Pigeon(0), Pigeon(1), Pigeon(2)]);
        assert_eq!(g.members(1), &[NotAux(0), Pigeon(3), Pigeon(4)]);

        let g = GroupLayout::new(6).unwrap();
        assert_eq!(g.members(1), &[NotAux(0), Pigeon(3), Pigeon(4), Pigeon(5)]);

        let g = GroupLayout::new(7).unwrap();
        assert_eq!(g.group_count(), 3);
        assert_eq!(g.members(1), &[NotAux(0), Pigeon(3), Pigeon(4)]);
        assert_eq!(g.members(2), &[NotAux(1), Pigeon(5), Pigeon(6)]);
    }

    #[test]
    fn final_group_size_by_parity() {
        for k in 4..60 {
            let g = GroupLayout::new(k + 1).unwrap();
            let last = g.members(g.group_count() - 1);
            let expected = if k % 2 == 0 { 3 } else { 4 };
            assert_eq!(last.len(), expected, "k={k}");
            // every pigeon appears exactly once
            let mut seen: Vec<usize> = (0..g.group_count())
                .flat_map(|i| {
                    g.members(i).iter().filter_map(|m| match m {
                        Member::Pigeon(p) => Some(*p),
                        Member::NotAux(_) => None,
                    })
                })
                .collect();
            seen.sort();
            assert_eq!(seen, (0..=k).collect::<Vec<_>>());
        }
    }

    #[test]
    fn layer_ids() {
        let l2 = LayerLayout::new(2, 2).unwrap();
        assert_eq!((l2.start(), l2.last()), (1, 6));
        let l1 = LayerLayout::new(2, 1).unwrap();
        assert_eq!((l1.x_var(0, 1), l1.x_var(1, 1)), (7, 8));
        assert_eq!(l1.aux_groups(), 0);

        let l3 = LayerLayout::new(4, 3).unwrap();
        assert_eq!((l3.start(), l3.y_base, l3.last()), (21, 32, 32));
        assert!(LayerLayout::new(4, 5).is_err());
        assert!(LayerLayout::new(4, 0).is_err());
    }

    #[test]
    fn layers_are_disjoint() {
        for n in 1..=40 {
            let mut prev_end = 1;
            for k in (1..=n).rev() {
                for layout in [LayerLayout::new(n, k).unwrap(), LayerLayout::pairwise(n, k).unwrap()] {
                    assert_eq!(layout.x_var(0, 1), layout.start());
                    assert_eq!(layout.x_var(k, k), layout.y_base);
                    if layout.aux_groups() > 0 {
                        assert_eq!(layout.y_var(layout.aux_groups() - 1, k), layout.last());
                    }
                }
                let layout = LayerLayout::new(n, k).unwrap();
                assert_eq!(layout.start(), prev_end, "n={n} k={k}");
                prev_end = layout.last() + 1;
                if k <= 3 {
                    assert_eq!(layout.aux_groups(), 0);
                }
            }
        }
    }
}
