//! Finite-variable elementary and power-sum symmetric functions, the
//! cycle-index formula for `e_k`, and the Newton-Girard identities.
//!
//! The identities are polynomial, so truncating to `N` variables keeps them
//! exact for every `N`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::numeric::{factorial, BigInt, Rational};

/// The truncated variables `z_1, ..., z_N`, `N >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSet {
    values: Vec<Rational>,
}

impl VariableSet {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::OutOfRange { what: "variable count", got: "0".into(), allowed: ">= 1".into() });
        }
        Ok(VariableSet { values })
    }

    /// `z_n = 1/n^2` for `n = 1..=n_vars`.
    pub fn inverse_squares(n_vars: usize) -> Result<Self> {
        VariableSet::new(
            (1..=n_vars as i64)
                .map(|n| Rational::new(1, n * n).expect("n >= 1"))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `e_k` from the coefficients of `prod_i (1 + z_i t)`. `k > N` is an error.
pub fn elementary_symmetric(vars: &VariableSet, k: usize) -> Result<Rational> {
    if k > vars.len() {
        return Err(Error::OutOfRange {
            what: "k",
            got: k.to_string(),
            allowed: format!("0..={} (number of variables)", vars.len()),
        });
    }
    Ok(elementary_symmetric_all(vars).swap_remove(k))
}

/// `e_k`, taking the conventional value 0 when `k` exceeds the variable count.
pub fn elementary_symmetric_or_zero(vars: &VariableSet, k: usize) -> Rational {
    elementary_symmetric_all(vars)
        .get(k)
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// `(e_0, ..., e_N)`.
pub fn elementary_symmetric_all(vars: &VariableSet) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for z in &vars.values {
        e.push(Rational::zero());
        for j in (1..e.len()).rev() {
            let term = &e[j - 1] * z;
            e[j] += term;
        }
    }
    e
}

/// `p_k = sum_i z_i^k`, `k >= 1`.
pub fn power_sum(vars: &VariableSet, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
    }
    Ok(vars.values.iter().map(|z| z.pow(k as u32)).sum())
}

/// A permutation of `{0, ..., k-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &m in &mapping {
            if m >= mapping.len() || std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidPermutation(format!("{mapping:?} is not a bijection")));
            }
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(k: usize) -> Self {
        Permutation { mapping: (0..k).collect() }
    }

    pub fn size(&self) -> usize {
        self.mapping.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::InvalidPermutation("sizes differ".into()));
        }
        Ok(Permutation { mapping: other.mapping.iter().map(|&i| self.mapping[i]).collect() })
    }

    /// Disjoint cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut cycles = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.mapping[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// `prod_C (-1)^(|C|-1)`.
    pub fn sign(&self) -> i32 {
        self.cycles()
            .iter()
            .map(|c| if c.len() % 2 == 0 { -1 } else { 1 })
            .product()
    }

    /// Parity by counting inversions; independent of the cycle decomposition.
    pub fn inversion_sign(&self) -> i32 {
        let inversions = self
            .mapping
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        if inversions % 2 == 0 { 1 } else { -1 }
    }
}

/// Every permutation of `{0, ..., k-1}`.
pub fn all_permutations(k: usize) -> impl Iterator<Item = Permutation> {
    (0..k).permutations(k).map(|mapping| Permutation { mapping })
}

/// Integer partitions of `n` as descending part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations of `k` elements with the given cycle type:
/// `k! / (prod_j m_j! * prod_j j^m_j)`.
pub fn cycle_type_count(cycle_type: &[usize]) -> BigInt {
    let k: usize = cycle_type.iter().sum();
    let denominator: BigInt = cycle_type
        .iter()
        .copied()
        .counts()
        .into_iter()
        .map(|(len, mult)| factorial(mult) * BigInt::from(len).pow(mult as u32))
        .product();
    factorial(k) / denominator
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleIndexMode {
    /// Sum over cycle types weighted by their class sizes.
    #[default]
    CycleType,
    /// Sum over every element of `S_k`.
    FullPermutation,
}

/// Evaluates `(1/k!) sum_{sigma in S_k} sgn(sigma) p_sigma` with an explicit
/// enumeration bound on `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleIndex {
    pub mode: CycleIndexMode,
    pub max_k: usize,
}

impl Default for CycleIndex {
    fn default() -> Self {
        CycleIndex { mode: CycleIndexMode::CycleType, max_k: 8 }
    }
}

impl CycleIndex {
    pub fn evaluate(&self, vars: &VariableSet, k: usize) -> Result<Rational> {
        if k > self.max_k {
            return Err(Error::EnumerationBound { k, max_k: self.max_k });
        }
        if k == 0 {
            return Ok(Rational::one());
        }
        let p: Vec<Rational> = (1..=k).map(|j| power_sum(vars, j)).collect::<Result<_>>()?;
        let p_of = |cycle_type: &[usize]| -> Rational { cycle_type.iter().map(|&len| p[len - 1].clone()).product() };
        let sign_of = |cycle_type: &[usize]| if (k - cycle_type.len()).is_multiple_of(2) { 1i64 } else { -1 };
        let total: Rational = match self.mode {
            CycleIndexMode::CycleType => partitions(k)
                .iter()
                .map(|ct| p_of(ct) * Rational::from(cycle_type_count(ct) * sign_of(ct)))
                .sum(),
            CycleIndexMode::FullPermutation => all_permutations(k)
                .map(|sigma| {
                    let ct = sigma.cycle_type();
                    p_of(&ct) * Rational::from(sigma.sign() as i64)
                })
                .sum(),
        };
        Ok(total * Rational::from(factorial(k)).recip()?)
    }
}

pub fn cycle_index_elementary(vars: &VariableSet, k: usize) -> Result<Rational> {
    CycleIndex::default().evaluate(vars, k)
}

/// Both sides of `(-1)^(k-1) p_k = k e_k - sum_{i=1..k-1} (-1)^(i-1) e_{k-i} p_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonGirardWitness {
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl NewtonGirardWitness {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn newton_girard_check(vars: &VariableSet, k: usize) -> Result<NewtonGirardWitness> {
    if k == 0 || k > vars.len() {
        return Err(Error::OutOfRange { what: "k", got: k.to_string(), allowed: format!("1..={}", vars.len()) });
    }
    let e = elementary_symmetric_all(vars);
    let p: Vec<Rational> = (1..=k).map(|i| power_sum(vars, i)).collect::<Result<_>>()?;
    let alt = |i: usize| if i.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let lhs = alt(k - 1) * &p[k - 1];
    let correction: Rational = (1..k).map(|i| alt(i - 1) * &e[k - i] * &p[i - 1]).sum();
    let rhs = Rational::from(k as i64) * &e[k] - correction;
    Ok(NewtonGirardWitness { k, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn vars(values: &[&str]) -> VariableSet {
        VariableSet::new(values.iter().map(|s| q(s)).collect()).unwrap()
    }

    #[test]
    fn elementary_values() {
        let v = vars(&["1", "2", "3"]);
        assert_eq!(elementary_symmetric(&v, 2).unwrap(), q("11"));
        assert_eq!(elementary_symmetric(&v, 0).unwrap(), q("1"));
        assert!(elementary_symmetric(&v, 4).is_err());
        assert_eq!(elementary_symmetric_or_zero(&v, 4), q("0"));
        let inv = VariableSet::inverse_squares(3).unwrap();
        assert_eq!(elementary_symmetric(&inv, 3).unwrap(), q("1/36"));
        assert!(VariableSet::new(vec![]).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(&vars(&["1", "2", "3"]), 1).unwrap(), q("6"));
        assert_eq!(power_sum(&vars(&["-2/3"]), 5).unwrap(), q("-32/243"));
        assert_eq!(power_sum(&vars(&["1", "1/4"]), 2).unwrap(), q("17/16"));
        assert!(power_sum(&vars(&["1"]), 0).is_err());
    }

    #[test]
    fn permutation_basics() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        let p = Permutation::new(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.sign(), -1);
        assert_eq!(p.inversion_sign(), -1);
        assert_eq!(Permutation::identity(4).sign(), 1);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for k in 1..=8 {
            let total: BigInt = partitions(k).iter().map(|ct| cycle_type_count(ct)).sum();
            assert_eq!(total, factorial(k));
        }
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(cycle_type_count(&[2, 2]), BigInt::from(3));
    }

    #[test]
    fn cycle_index_values() {
        let v = vars(&["1", "2", "3"]);
        assert_eq!(cycle_index_elementary(&v, 1).unwrap(), q("6"));
        assert_eq!(cycle_index_elementary(&v, 2).unwrap(), q("11"));
        let inv = VariableSet::inverse_squares(4).unwrap();
        assert_eq!(cycle_index_elementary(&inv, 4).unwrap(), q("1/576"));
        assert_eq!(elementary_symmetric(&inv, 4).unwrap(), q("1/576"));
        let full = CycleIndex { mode: CycleIndexMode::FullPermutation, max_k: 8 };
        assert_eq!(full.evaluate(&inv, 4).unwrap(), q("1/576"));
    }

    #[test]
    fn cycle_index_bound() {
        let v = VariableSet::inverse_squares(10).unwrap();
        assert!(matches!(cycle_index_elementary(&v, 9), Err(Error::EnumerationBound { k: 9, max_k: 8 })));
        let wide = CycleIndex { max_k: 10, ..CycleIndex::default() };
        assert_eq!(wide.evaluate(&v, 9).unwrap(), elementary_symmetric(&v, 9).unwrap());
    }

    #[test]
    fn cycle_index_beyond_variable_count_is_zero() {
        let v = vars(&["2", "5"]);
        assert_eq!(cycle_index_elementary(&v, 3).unwrap(), q("0"));
    }

    #[test]
    fn newton_girard_cases() {
        let w = newton_girard_check(&vars(&["7/3"]), 1).unwrap();
        assert!(w.passed());
        let w = newton_girard_check(&vars(&["2", "3"]), 2).unwrap();
        assert_eq!((w.lhs.clone(), w.rhs.clone()), (q("-13"), q("-13")));
        assert!(w.passed());
        let inv = VariableSet::inverse_squares(12).unwrap();
        assert!(newton_girard_check(&inv, 5).unwrap().passed());
        assert!(newton_girard_check(&inv, 13).is_err());
        assert!(newton_girard_check(&inv, 0).is_err());
    }
}
