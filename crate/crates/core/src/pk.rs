//! The operator recursion for `P_k(x)` and the integers `A_k = P_k(k)`.
//!
//! `B_k(f)(x) = [f(k) * prod_{i=1..k}(2x - 2k + 2i + 1) - f(x) * prod_{i=1..k}(2i + 1)] / (2x - 2k)`
//! and `P_1 = 1`, `P_{k+1} = B_k(P_k)`. The direct recursion is the reference
//! for everything else in the crate: the set expansion [`bk_expand`], the
//! coefficient recursion [`coeff_recursion`] and the plane-tree sums are all
//! checked against it.

use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::numeric::{double_factorial_odd, factorial, BigInt, Rational};
use crate::polynomial::Polynomial;
use crate::sequence::SequenceSpec;

/// `R(k) = {3, 5, ..., 2k+1}`, i.e. indices `1..=k`.
pub fn r_set(k: usize) -> IndexSet {
    IndexSet::range(1, k)
}

/// `f_{S;k}(x) = prod_{n in S} (2x - 2k + R_n)`; the constant 1 for empty `S`.
pub fn f_poly(s: &IndexSet, k: usize, seq: &SequenceSpec) -> Result<Polynomial> {
    let shift = -Rational::from(2 * k as i64);
    let factors = s
        .iter()
        .map(|n| Ok((&shift + seq.value(n)?, Rational::from(2))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::product_of_linear(factors))
}

/// `f_{S;k}` under the default odd sequence.
pub fn f_poly_odd(s: &IndexSet, k: usize) -> Polynomial {
    f_poly(s, k, &SequenceSpec::Odd).expect("odd sequence is total")
}

/// Applies `B_k` to `f`. The numerator always vanishes at `x = k`; a nonzero
/// remainder surfaces as [`Error::InexactDivision`].
pub fn apply_bk(f: &Polynomial, k: usize) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
    }
    let kq = Rational::from(k as i64);
    let shifted_odds = f_poly_odd(&r_set(k), k);
    let odd_product = Rational::from(double_factorial_odd(k));
    let numerator = &shifted_odds.scale(&f.eval(&kq)) - &f.scale(&odd_product);
    numerator.divide_linear_exact(&kq)
}

/// `P_k` with optional coefficients in the basis `f_{R(i);k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PkPolynomial {
    pub k: usize,
    pub poly: Polynomial,
    pub basis_coeffs: Option<Vec<Rational>>,
}

impl PkPolynomial {
    /// Attaches the coefficient-recursion coefficients, checking that they
    /// expand back to `poly`.
    pub fn with_basis(mut self) -> Result<Self> {
        if self.k < 2 {
            return Ok(self);
        }
        let coeffs = coeff_recursion(self.k)?;
        let expanded = expand_in_r_basis(&coeffs, self.k);
        if expanded != self.poly {
            return Err(Error::Consistency(format!(
                "coefficient recursion expands to {expanded}, expected P_{} = {}",
                self.k, self.poly
            )));
        }
        self.basis_coeffs = Some(coeffs);
        Ok(self)
    }
}

/// Process-local memo of `P_1, P_2, ...`. Extension happens under the lock,
/// so concurrent callers see the same deterministic table.
#[derive(Debug, Default)]
pub struct PkCache {
    table: Mutex<Vec<Polynomial>>,
}

impl PkCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: usize) -> Result<Polynomial> {
        if k == 0 {
            return Err(Error::OutOfRange { what: "k", got: "0".into(), allowed: "k >= 1".into() });
        }
        let mut table = self.table.lock().expect("P_k cache poisoned");
        if table.is_empty() {
            table.push(Polynomial::one());
        }
        while table.len() < k {
            let m = table.len();
            let next = apply_bk(&table[m - 1], m)?;
            table.push(next);
        }
        Ok(table[k - 1].clone())
    }

    pub fn len(&self) -> usize {
        self.table.lock().expect("P_k cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global_cache() -> &'static PkCache {
    static CACHE: OnceLock<PkCache> = OnceLock::new();
    CACHE.get_or_init(PkCache::new)
}

pub fn compute_pk(k: usize) -> Result<PkPolynomial> {
    Ok(PkPolynomial { k, poly: global_cache().get(k)?, basis_coeffs: None })
}

/// `A_k = P_k(k)`, which must be a positive integer.
pub fn compute_ak(k: usize) -> Result<BigInt> {
    let p = compute_pk(k)?.poly;
    let value = p.eval(&Rational::from(k as i64));
    match value.to_integer() {
        Some(a) if a.is_positive() => Ok(a),
        _ => Err(Error::Consistency(format!("A_{k} = P_{k}({k}) = {value} is not a positive integer"))),
    }
}

/// `P_k(x + k - 3/2)`, which has positive coefficients.
pub fn translated_pk(k: usize) -> Result<Polynomial> {
    let p = compute_pk(k)?.poly;
    Ok(p.compose_affine(&Rational::one(), &translation(k)))
}

/// `P_k(x/2 + k - 3/2)`: the translate with the extra `x -> x/2` rescaling.
pub fn translated_pk_half_scale(k: usize) -> Result<Polynomial> {
    let p = compute_pk(k)?.poly;
    Ok(p.compose_affine(&Rational::new(1, 2)?, &translation(k)))
}

fn translation(k: usize) -> Rational {
    Rational::new(2 * k as i64 - 3, 2).expect("nonzero denominator")
}

/// `S_low(j, k)`: `S+2` together with the `j` smallest elements of
/// `R(k-1) - (S+2)`.
///
/// The proof of the expansion works in `R(k) - (S+2)` instead. For
/// `j <= k-1-|S|` both give the same set: the only extra element of `R(k)` is
/// its minimum 3, which can never be picked first since `S+2` never holds 3
/// and every smaller choice already lies in `R(k-1)`.
pub fn s_low(s: &IndexSet, j: usize, k: usize) -> IndexSet {
    let shifted = s.shift(1);
    shifted.union(&r_set(k - 1).difference(&shifted).smallest(j))
}

/// `S_high(j, k)`: `S+2` together with the `j` greatest elements of
/// `(R(k-1)+2) - (S+2)`.
pub fn s_high(s: &IndexSet, j: usize, k: usize) -> IndexSet {
    let shifted = s.shift(1);
    shifted.union(&r_set(k - 1).shift(1).difference(&shifted).greatest(j))
}

/// One term `weight * f_{low;k}` of the expansion of `B_k(f_{S;k-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BkTerm {
    pub weight: BigInt,
    pub low: IndexSet,
}

/// Expands `B_k(f_{S;k-1})` as `sum_j (Pi S_high(k-1-|S|-j, k)) f_{S_low(j,k);k}`
/// for `j = 0..=k-1-|S|`. Requires `k >= 2` and `S` within `R(k-2)`.
pub fn bk_expand(s: &IndexSet, k: usize) -> Result<Vec<BkTerm>> {
    if k < 2 {
        return Err(Error::OutOfRange { what: "k", got: k.to_string(), allowed: "k >= 2".into() });
    }
    if !s.is_subset(&r_set(k - 2)) {
        return Err(Error::InvalidIndexSet(format!("{s} is not a subset of R({}) = {}", k - 2, r_set(k - 2))));
    }
    let top = k - 1 - s.len();
    Ok((0..=top)
        .map(|j| BkTerm { weight: s_high(s, top - j, k).odd_product(), low: s_low(s, j, k) })
        .collect())
}

/// Sums `weight * f_{low;k}` over the terms.
pub fn assemble_terms(terms: &[BkTerm], k: usize) -> Polynomial {
    terms
        .iter()
        .map(|t| f_poly_odd(&t.low, k).scale(&Rational::from(t.weight.clone())))
        .sum()
}

/// The basis polynomial `f_{R(i);k-1}(x) = prod_{j=1..i} (2x - 2k + 2j + 3)`
/// in which the coefficient recursion is expressed.
pub fn r_basis_poly(i: usize, k: usize) -> Polynomial {
    f_poly_odd(&r_set(i), k - 1)
}

pub fn expand_in_r_basis(coeffs: &[Rational], k: usize) -> Polynomial {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| r_basis_poly(i, k).scale(c))
        .sum()
}

/// `(c_{0,k}, ..., c_{k-2,k})` from `c_{0,2} = 1` and
///
/// `c_{i,k+1} = prod_{j=i+1..k-1}(2j+3) * sum_{n=0..i} (2n+1)!! * sum_{m=n..k-2} c_{m,k} 2^{m-n} m!/n!`.
pub fn coeff_recursion(k: usize) -> Result<Vec<Rational>> {
    if k < 2 {
        return Err(Error::OutOfRange { what: "k", got: k.to_string(), allowed: "k >= 2".into() });
    }
    let mut c = vec![Rational::one()];
    for step in 2..k {
        c = next_coeffs(&c, step);
    }
    Ok(c)
}

fn next_coeffs(c: &[Rational], k: usize) -> Vec<Rational> {
    // c holds c_{0,k} .. c_{k-2,k}; the result holds c_{0,k+1} .. c_{k-1,k+1}.
    let inner: Vec<Rational> = (0..k)
        .map(|n| {
            (n..=k - 2)
                .map(|m| {
                    let falling = factorial(m) / factorial(n);
                    &c[m] * Rational::from(falling * (BigInt::one() << (m - n)))
                })
                .sum()
        })
        .collect();
    (0..k)
        .map(|i| {
            let prefix: BigInt = (i + 1..k).map(|j| BigInt::from(2 * j + 3)).product();
            let total: Rational = (0..=i)
                .map(|n| &inner[n] * Rational::from(double_factorial_odd(n)))
                .sum();
            total * Rational::from(prefix)
        })
        .collect()
}

/// Both sides of `prod_{i=1..n}(u + 2i + 3) = sum_{i=0..n} 2^{n-i} n!/i! prod_{j=1..i}(u + 2j + 1)`
/// as polynomials in `u`.
pub fn lemma_2ni_sides(n: usize) -> (Polynomial, Polynomial) {
    let lhs = Polynomial::product_of_linear((1..=n).map(|i| (Rational::from(2 * i as i64 + 3), Rational::one())));
    let rhs = (0..=n)
        .map(|i| {
            let weight = (factorial(n) / factorial(i)) << (n - i);
            Polynomial::product_of_linear((1..=i).map(|j| (Rational::from(2 * j as i64 + 1), Rational::one())))
                .scale(&Rational::from(weight))
        })
        .sum();
    (lhs, rhs)
}

/// Coefficientwise check of the identity in [`lemma_2ni_sides`].
pub fn lemma_2ni_check(n: usize) -> bool {
    let (lhs, rhs) = lemma_2ni_sides(n);
    lhs == rhs
}
