//! Exact Bernoulli numbers and `zeta(2k)` from the operator recursion
//! `P_{k+1} = B_k(P_k)`, its plane-tree expansion and its coefficient
//! recursion, cross-checked against the Newton-Girard identities and a
//! classical Bernoulli recursion.
//!
//! Everything is exact: integers are `BigInt`, scalars are reduced
//! [`Rational`]s, and `zeta(2k)` is a [`PiMultiple`].

pub mod error;
pub mod index_set;
pub mod numeric;
pub mod pk;
pub mod polynomial;
pub mod sequence;
pub mod symmetric;
pub mod tree;
pub mod zeta;

pub use error::{Error, Result};
pub use index_set::IndexSet;
pub use numeric::{double_factorial_odd, factorial, BigInt, Rational};
pub use pk::{
    apply_bk, bk_expand, coeff_recursion, compute_ak, compute_pk, f_poly, lemma_2ni_check, r_set,
    translated_pk, translated_pk_half_scale, BkTerm, PkPolynomial,
};
pub use polynomial::Polynomial;
pub use sequence::SequenceSpec;
pub use symmetric::{
    cycle_index_elementary, elementary_symmetric, newton_girard_check, power_sum, CycleIndex,
    CycleIndexMode, NewtonGirardWitness, Permutation, VariableSet,
};
pub use tree::{
    ak_via_trees, catalan, enumerate_trees, generalized_transform, pk_via_trees, tree_data,
    tree_data_with, PlaneTree, TreeData,
};
pub use zeta::{
    bernoulli_classical_oracle, bernoulli_even, ebar, fn_closed_form, fn_partial_sum,
    zeta_even_rational, PiMultiple,
};
