//! Plane trees, their `Low`/`High` sets and weights, and the tree sums for
//! `P_k(x)`, `A_k` and the sequence transform.
//!
//! A tree with `k` vertices is encoded by its attachment levels
//! `(l_2, ..., l_k)`: `l_t` is the depth of the `t`-th vertex in preorder.
//! Preorder forces `l_2 = 1` and `1 <= l_{t+1} <= l_t + 1`, and every such
//! sequence is a distinct plane tree, so there are `Catalan(k-1)` of them.
//! Deleting the last preorder vertex drops the last level, which is what the
//! `Low`/`High` recursion is defined on.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::numeric::{binomial, BigInt, Rational};
use crate::pk::{f_poly_odd, r_set};
use crate::polynomial::Polynomial;
use crate::sequence::SequenceSpec;

/// Largest `k` accepted by [`enumerate_trees`] unless overridden.
pub const DEFAULT_MAX_TREE_K: usize = 16;

/// Largest `k` accepted by the tree sums.
pub const MAX_TREE_SUM_K: usize = 14;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PlaneTree {
    levels: Vec<usize>,
}

impl PlaneTree {
    /// Validates an attachment-level sequence `(l_2, ..., l_k)`.
    pub fn new(levels: Vec<usize>) -> Result<Self> {
        if let Some(&first) = levels.first() {
            if first != 1 {
                return Err(Error::InvalidTree(format!("l_2 must be 1, got {first}")));
            }
        }
        for (t, w) in levels.windows(2).enumerate() {
            if w[1] < 1 || w[1] > w[0] + 1 {
                return Err(Error::InvalidTree(format!(
                    "l_{} = {} must lie in 1..={}",
                    t + 3,
                    w[1],
                    w[0] + 1
                )));
            }
        }
        Ok(PlaneTree { levels })
    }

    pub fn single_vertex() -> Self {
        PlaneTree { levels: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.len() + 1
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Depth of the last vertex in preorder; 0 for the single vertex.
    pub fn last_level(&self) -> usize {
        self.levels.last().copied().unwrap_or(0)
    }

    /// Parent of each non-root vertex, vertices numbered `0..k` in preorder.
    /// `parents()[t - 1]` is the parent of vertex `t`.
    pub fn parents(&self) -> Vec<usize> {
        let mut path = vec![0usize];
        let mut parents = Vec::with_capacity(self.levels.len());
        for (t, &level) in self.levels.iter().enumerate() {
            path.truncate(level);
            parents.push(*path.last().expect("root stays on the path"));
            path.push(t + 1);
        }
        parents
    }
}

/// `Catalan(n) = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Lazy stream of the plane trees with `k` vertices, in lexicographic order
/// of level sequences.
#[derive(Debug, Clone)]
pub struct TreeIter {
    next: Option<Vec<usize>>,
}

impl Iterator for TreeIter {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Bump the rightmost position that can grow, then reset the tail to 1.
        let bump = (1..succ.len()).rev().find(|&p| succ[p] <= succ[p - 1]);
        if let Some(p) = bump {
            succ[p] += 1;
            succ[p + 1..].iter_mut().for_each(|l| *l = 1);
            self.next = Some(succ);
        }
        Some(PlaneTree { levels: current })
    }
}

pub fn enumerate_trees(k: usize) -> Result<TreeIter> {
    enumerate_trees_bounded(k, DEFAULT_MAX_TREE_K)
}

pub fn enumerate_trees_bounded(k: usize, max_k: usize) -> Result<TreeIter> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: format!("1..={max_k}") });
    }
    if k > max_k {
        return Err(Error::TreeBound {
            k,
            max_k,
            catalan_index: k - 1,
            count: catalan(k - 1).to_string(),
        });
    }
    Ok(TreeIter { next: Some(vec![1; k - 1]) })
}

/// `Low(T)`, `High(T)` and `wt(T)`; the weight is a `BigInt` under the default
/// sequence and a `Rational` for custom ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeData<W = BigInt> {
    pub low: IndexSet,
    pub high: IndexSet,
    pub weight: W,
}

impl<W: One> TreeData<W> {
    fn base() -> Self {
        TreeData { low: IndexSet::empty(), high: IndexSet::empty(), weight: W::one() }
    }
}

/// Grows `T'` (with `m - 1` vertices) by a vertex at depth `level`.
///
/// `Low(T)` is `Low(T')+2` completed by the smallest elements of
/// `R(m-2) - (Low(T')+2)` up to `m - 1 - level` elements in total, and
/// `High(T)` is `Low(T')+2` plus the `level - 1` greatest elements of
/// `(R(m-2)+2) - (Low(T')+2)`. Sizes line up with the `j`/`k-1-|S|-j` split of
/// the `B_k` expansion: a tree with last depth `level` has
/// `|Low| = m - 1 - level`.
fn grow<W, F>(prev: &TreeData<W>, m: usize, level: usize, product: &F) -> Result<TreeData<W>>
where
    W: Clone + Mul<Output = W>,
    F: Fn(&IndexSet) -> Result<W>,
{
    let shifted = prev.low.shift(1);
    let pool_low = r_set(m - 2).difference(&shifted);
    let pool_high = r_set(m - 2).shift(1).difference(&shifted);
    let take_low = (m - 1)
        .checked_sub(level + prev.low.len())
        .filter(|&j| j <= pool_low.len());
    let take_high = level.checked_sub(1).filter(|&j| j <= pool_high.len());
    let (Some(take_low), Some(take_high)) = (take_low, take_high) else {
        return Err(Error::InvalidTree(format!("cannot attach vertex {m} at level {level}")));
    };
    let low = shifted.union(&pool_low.smallest(take_low));
    let high = shifted.union(&pool_high.greatest(take_high));
    let weight = prev.weight.clone() * product(&high)?;
    Ok(TreeData { low, high, weight })
}

fn replay<W, F>(tree: &PlaneTree, product: F) -> Result<TreeData<W>>
where
    W: Clone + One + Mul<Output = W>,
    F: Fn(&IndexSet) -> Result<W>,
{
    let mut data = TreeData::base();
    for (pos, &level) in tree.levels.iter().enumerate().skip(1) {
        data = grow(&data, pos + 2, level, &product)?;
    }
    Ok(data)
}

fn odd_product(s: &IndexSet) -> Result<BigInt> {
    Ok(s.odd_product())
}

/// `Low`, `High` and integer weight under the default odd sequence.
pub fn tree_data(tree: &PlaneTree) -> Result<TreeData<BigInt>> {
    replay(tree, odd_product)
}

/// `Low`, `High` and weight with `High` products taken in `seq`.
pub fn tree_data_with(tree: &PlaneTree, seq: &SequenceSpec) -> Result<TreeData<Rational>> {
    replay(tree, |s: &IndexSet| s.product(seq))
}

/// Depth-first fold over all trees with `k` vertices, visiting them in the
/// same order as [`enumerate_trees`]. Shared prefixes are grown once.
pub fn fold_tree_data<W, F, A, V>(k: usize, product: F, init: A, mut visit: V) -> Result<A>
where
    W: Clone + One + Mul<Output = W>,
    F: Fn(&IndexSet) -> Result<W>,
    V: FnMut(A, &[usize], &TreeData<W>) -> A,
{
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
    }
    if k <= 2 {
        let levels = vec![1; k - 1];
        return Ok(visit(init, &levels, &TreeData::base()));
    }
    struct Walk<'a, W, F, V> {
        k: usize,
        product: &'a F,
        visit: &'a mut V,
        levels: Vec<usize>,
        _w: std::marker::PhantomData<W>,
    }
    impl<W, F, V> Walk<'_, W, F, V>
    where
        W: Clone + One + Mul<Output = W>,
        F: Fn(&IndexSet) -> Result<W>,
    {
        fn go<A>(&mut self, data: &TreeData<W>, acc: A) -> Result<A>
        where
            V: FnMut(A, &[usize], &TreeData<W>) -> A,
        {
            let m = self.levels.len() + 2;
            if m > self.k {
                return Ok((self.visit)(acc, &self.levels, data));
            }
            let top = self.levels.last().copied().unwrap_or(0) + 1;
            let mut acc = acc;
            for level in 1..=top {
                let child = grow(data, m, level, self.product)?;
                self.levels.push(level);
                acc = self.go(&child, acc)?;
                self.levels.pop();
            }
            Ok(acc)
        }
    }
    let mut walk = Walk { k, product: &product, visit: &mut visit, levels: vec![1], _w: std::marker::PhantomData };
    walk.go(&TreeData::base(), init)
}

fn check_sum_bound(k: usize) -> Result<()> {
    if (2..=MAX_TREE_SUM_K).contains(&k) {
        Ok(())
    } else {
        Err(Error::OutOfRange { what: "k", got: k.to_string(), allowed: format!("2..={MAX_TREE_SUM_K}") })
    }
}

/// `P_k(x) = sum_T wt(T) f_{Low(T);k-1}(x)`.
pub fn pk_via_trees(k: usize) -> Result<Polynomial> {
    check_sum_bound(k)?;
    let by_low = fold_tree_data(k, odd_product, BTreeMap::<IndexSet, BigInt>::new(), |mut acc, _, d| {
        *acc.entry(d.low.clone()).or_insert_with(BigInt::zero) += &d.weight;
        acc
    })?;
    Ok(by_low
        .into_iter()
        .map(|(low, w)| f_poly_odd(&low, k - 1).scale(&Rational::from(w)))
        .sum())
}

/// `A_k = sum_T wt(T) * Pi(Low(T)+2)`.
pub fn ak_via_trees(k: usize) -> Result<BigInt> {
    check_sum_bound(k)?;
    fold_tree_data(k, odd_product, BigInt::zero(), |acc, _, d| acc + &d.weight * d.low.shift(1).odd_product())
}

/// `2^(k-2) * sum wt(T)` over the trees whose last preorder vertex has depth 1;
/// only those trees reach degree `k - 2`.
pub fn leading_coeff_via_trees(k: usize) -> Result<BigInt> {
    check_sum_bound(k)?;
    let total = fold_tree_data(k, odd_product, BigInt::zero(), |acc, levels, d| {
        if levels.last() == Some(&1) {
            acc + &d.weight
        } else {
            acc
        }
    })?;
    Ok(total << (k - 2))
}

/// `sum_T wt_R(T) * Pi_R(Low(T)+2) / prod_{j=1..k} Pi R(j)`, with every set
/// operation done on indices. For the odd sequence this is `2 zeta(2k) / pi^(2k)`.
pub fn generalized_transform(k: usize, seq: &SequenceSpec) -> Result<Rational> {
    if !(1..=MAX_TREE_SUM_K).contains(&k) {
        return Err(Error::OutOfRange { what: "k", got: k.to_string(), allowed: format!("1..={MAX_TREE_SUM_K}") });
    }
    seq.require(k)?;
    let denominator: Rational = (1..=k).map(|j| r_set(j).product(seq)).product::<Result<Rational>>()?;
    let product = |s: &IndexSet| s.product(seq);
    let numerator = fold_tree_data(k, product, Ok(Rational::zero()), |acc: Result<Rational>, _, d| {
        let acc = acc?;
        Ok(acc + &d.weight * d.low.shift(1).product(seq)?)
    })??;
    numerator.checked_div(&denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(levels: &[usize]) -> PlaneTree {
        PlaneTree::new(levels.to_vec()).unwrap()
    }

    #[test]
    fn tree_validation() {
        assert!(PlaneTree::new(vec![2]).is_err());
        assert!(PlaneTree::new(vec![1, 3]).is_err());
        assert!(PlaneTree::new(vec![1, 0]).is_err());
        assert!(PlaneTree::new(vec![1, 2, 3, 1]).is_ok());
        assert_eq!(tree(&[1, 2, 3, 1]).vertex_count(), 5);
    }

    #[test]
    fn parents_from_levels() {
        // root -> a -> b, root -> c
        assert_eq!(tree(&[1, 2, 1]).parents(), vec![0, 1, 0]);
        assert_eq!(tree(&[1, 2, 2, 3]).parents(), vec![0, 1, 1, 3]);
        assert!(PlaneTree::single_vertex().parents().is_empty());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
        let four: Vec<_> = enumerate_trees(4).unwrap().map(|t| t.levels().to_vec()).collect();
        assert_eq!(four, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 2, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn enumeration_bound() {
        let err = enumerate_trees(17).unwrap_err();
        assert!(matches!(err, Error::TreeBound { k: 17, .. }));
        assert!(err.to_string().contains("35357670"), "{err}");
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees_bounded(20, 20).is_ok());
    }

    #[test]
    fn base_trees_have_empty_sets() {
        for t in [PlaneTree::single_vertex(), tree(&[1])] {
            let d = tree_data(&t).unwrap();
            assert!(d.low.is_empty() && d.high.is_empty());
            assert_eq!(d.weight, BigInt::one());
        }
    }

    #[test]
    fn three_vertex_trees() {
        let star = tree_data(&tree(&[1, 1])).unwrap();
        assert_eq!(star.low.to_string(), "{3}");
        assert!(star.high.is_empty());
        assert_eq!(star.weight, BigInt::from(1));
        let path = tree_data(&tree(&[1, 2])).unwrap();
        assert!(path.low.is_empty());
        assert_eq!(path.high.to_string(), "{5}");
        assert_eq!(path.weight, BigInt::from(5));
        assert_eq!(ak_via_trees(3).unwrap(), BigInt::from(10));
    }

    #[test]
    fn leading_trees_have_full_low() {
        for t in enumerate_trees(6).unwrap().filter(|t| t.last_level() == 1) {
            assert_eq!(tree_data(&t).unwrap().low, r_set(4));
        }
    }

    #[test]
    fn fold_matches_per_tree_replay() {
        let folded = fold_tree_data(7, odd_product, Vec::new(), |mut acc, levels, d| {
            acc.push((levels.to_vec(), d.clone()));
            acc
        })
        .unwrap();
        let replayed: Vec<_> = enumerate_trees(7)
            .unwrap()
            .map(|t| (t.levels().to_vec(), tree_data(&t).unwrap()))
            .collect();
        assert_eq!(folded, replayed);
    }

    #[test]
    fn sum_bounds() {
        assert!(pk_via_trees(1).is_err());
        assert!(ak_via_trees(15).is_err());
        assert!(generalized_transform(0, &SequenceSpec::Odd).is_err());
    }

    #[test]
    fn transform_needs_enough_terms() {
        let short = SequenceSpec::from_values(vec![Rational::from(3), Rational::from(5)]).unwrap();
        assert!(generalized_transform(3, &short).is_err());
        assert!(generalized_transform(2, &short).is_ok());
    }
}
