//! Checks against oracles that share no code path with the library routine
//! under test: subset enumeration for `e_k`, the Catalan convolution for tree
//! counts, and the direct `B_k` recursion for every derived `P_k` route.

use itertools::Itertools;
use num_traits::Zero;
use zetatree::index_set::IndexSet;
use zetatree::numeric::{BigInt, Rational};
use zetatree::pk::{apply_bk, assemble_terms, bk_expand, coeff_recursion, compute_ak, compute_pk, expand_in_r_basis, f_poly_odd, r_set, translated_pk};
use zetatree::sequence::SequenceSpec;
use zetatree::symmetric::{elementary_symmetric, CycleIndex, CycleIndexMode, VariableSet};
use zetatree::tree::{ak_via_trees, enumerate_trees, generalized_transform, leading_coeff_via_trees, pk_via_trees};
use zetatree::zeta::{bernoulli_classical_oracle, bernoulli_even, zeta_even_rational};

fn catalan_by_convolution(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    for m in 1..=n {
        let next: BigInt = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
        c.push(next);
    }
    c
}

fn elementary_by_subsets(vars: &VariableSet, k: usize) -> Rational {
    vars.values()
        .iter()
        .combinations(k)
        .map(|subset| subset.into_iter().cloned().product::<Rational>())
        .sum()
}

#[test]
fn elementary_symmetric_matches_subset_enumeration() {
    let vars = VariableSet::new(["3/2", "-1", "2/7", "5", "-4/3", "1/9"].iter().map(|s| s.parse().unwrap()).collect()).unwrap();
    for k in 0..=vars.len() {
        assert_eq!(elementary_symmetric(&vars, k).unwrap(), elementary_by_subsets(&vars, k), "k = {k}");
    }
}

#[test]
fn cycle_index_modes_agree() {
    let vars = VariableSet::inverse_squares(7).unwrap();
    let by_type = CycleIndex::default();
    let full = CycleIndex { mode: CycleIndexMode::FullPermutation, max_k: 8 };
    for k in 1..=7 {
        let expected = elementary_by_subsets(&vars, k);
        assert_eq!(by_type.evaluate(&vars, k).unwrap(), expected);
        assert_eq!(full.evaluate(&vars, k).unwrap(), expected);
    }
}

#[test]
fn tree_counts_are_catalan() {
    let catalan = catalan_by_convolution(13);
    for k in 1..=14 {
        let count = enumerate_trees(k).unwrap().count();
        assert_eq!(BigInt::from(count), catalan[k - 1], "k = {k}");
    }
    assert_eq!(catalan[9], BigInt::from(4862));
}

#[test]
fn trees_are_distinct_and_ordered() {
    let trees: Vec<_> = enumerate_trees(9).unwrap().collect();
    assert!(trees.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn degree_and_positivity_of_pk() {
    for k in 2..=15 {
        let p = compute_pk(k).unwrap().poly;
        assert_eq!(p.degree(), Some(k - 2), "deg P_{k}");
        let a = compute_ak(k).unwrap();
        assert!(a > BigInt::zero());
        assert!(translated_pk(k).unwrap().coeffs().iter().all(Rational::is_positive), "k = {k}");
    }
}

#[test]
fn leading_coefficient_theorem() {
    for k in 2..=12 {
        let lead = compute_pk(k).unwrap().poly.leading_coeff().cloned().unwrap();
        let expected = compute_ak(k - 1).unwrap() << (k - 2);
        assert_eq!(lead, Rational::from(expected.clone()), "k = {k}");
        assert_eq!(leading_coeff_via_trees(k).unwrap(), expected, "k = {k}");
    }
}

#[test]
fn bk_expansion_matches_operator_on_every_subset() {
    for k in 2..=10 {
        for subset in r_set(k - 2).indices().iter().copied().powerset() {
            let s = IndexSet::new(subset).unwrap();
            let terms = bk_expand(&s, k).unwrap();
            assert_eq!(terms.len(), k - s.len());
            let direct = apply_bk(&f_poly_odd(&s, k - 1), k).unwrap();
            assert_eq!(assemble_terms(&terms, k), direct, "k = {k}, S = {s}");
        }
    }
}

#[test]
fn coefficient_recursion_matches_pk() {
    let mut all_integer = true;
    for k in 2..=12 {
        let c = coeff_recursion(k).unwrap();
        assert_eq!(expand_in_r_basis(&c, k), compute_pk(k).unwrap().poly, "k = {k}");
        all_integer &= c.iter().all(|ci| ci.is_integer() && ci.is_positive());
    }
    // Observation only: no statement about integrality is relied on.
    println!("c_(i,k) positive integers for all k <= 12: {all_integer}");
}

#[test]
fn tree_sums_match_direct_recursion() {
    for k in 2..=10 {
        assert_eq!(pk_via_trees(k).unwrap(), compute_pk(k).unwrap().poly, "k = {k}");
        assert_eq!(ak_via_trees(k).unwrap(), compute_ak(k).unwrap(), "k = {k}");
    }
}

#[test]
fn tree_values_for_a5_and_a7() {
    assert_eq!(ak_via_trees(5).unwrap(), BigInt::from(992250));
    assert_eq!(ak_via_trees(7).unwrap(), BigInt::from(2787683360962500u64));
}

#[test]
fn transform_of_odd_sequence_is_twice_zeta() {
    assert_eq!(generalized_transform(1, &SequenceSpec::Odd).unwrap(), "1/3".parse::<Rational>().unwrap());
    assert_eq!(generalized_transform(3, &SequenceSpec::Odd).unwrap(), "2/945".parse::<Rational>().unwrap());
    for k in 1..=10 {
        let zeta = zeta_even_rational(k).unwrap();
        assert_eq!(generalized_transform(k, &SequenceSpec::Odd).unwrap(), zeta.coeff() * Rational::from(2), "k = {k}");
    }
}

#[test]
fn transform_of_unit_sequence_counts_trees() {
    let unit = SequenceSpec::constant(Rational::one()).unwrap();
    assert_eq!(generalized_transform(2, &unit).unwrap(), Rational::one());
    let catalan = catalan_by_convolution(9);
    for k in 1..=10 {
        assert_eq!(generalized_transform(k, &unit).unwrap(), Rational::from(catalan[k - 1].clone()));
    }
}

#[test]
fn transform_of_explicit_odd_values_matches_default() {
    let listed = SequenceSpec::from_values((1..=8).map(|n| Rational::from(2 * n + 1)).collect()).unwrap();
    for k in 1..=8 {
        assert_eq!(generalized_transform(k, &listed).unwrap(), generalized_transform(k, &SequenceSpec::Odd).unwrap());
    }
}

#[test]
fn bernoulli_agrees_with_classical_recursion() {
    for k in 1..=30 {
        let b = bernoulli_even(k).unwrap();
        assert_eq!(b, bernoulli_classical_oracle(2 * k), "B_{}", 2 * k);
        assert!(zeta_even_rational(k).unwrap().coeff().is_positive());
        assert_eq!(b.is_positive(), k % 2 == 1);
    }
}

#[test]
fn partial_sums_match_closed_form() {
    use zetatree::zeta::{fn_closed_form, fn_partial_sum};
    for n in 2..=8 {
        for k in (n - 1).max(1)..=10 {
            assert_eq!(fn_partial_sum(n, k).unwrap(), fn_closed_form(n, k).unwrap(), "n = {n}, k = {k}");
        }
        let signed = fn_closed_form(n, n).unwrap().scale(&Rational::from(if n % 2 == 1 { 1 } else { -1 }));
        assert_eq!(signed, zeta_even_rational(n).unwrap(), "n = {n}");
    }
}
