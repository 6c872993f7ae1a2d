use proptest::prelude::*;
use zetatree::numeric::Rational;
use zetatree::polynomial::Polynomial;
use zetatree::symmetric::{
    cycle_index_elementary, elementary_symmetric, newton_girard_check, Permutation, VariableSet,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..max_len).prop_map(Polynomial::new)
}

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|m| Permutation::new(m).unwrap())
}

proptest! {
    #[test]
    fn rationals_stay_normalized(a in rational(), b in rational(), c in rational()) {
        for r in [&a + &b, &a * &b, &a - &c, &(&a + &b) * &c] {
            prop_assert!(r.is_normalized());
        }
        if !b.is_zero() {
            prop_assert!(a.checked_div(&b).unwrap().is_normalized());
        }
    }

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn canonical_text_round_trips(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn linear_division_inverts_multiplication(p in polynomial(7), c in rational()) {
        let divisor = Polynomial::linear(-(&c * Rational::from(2)), Rational::from(2));
        let product = &divisor * &p;
        prop_assert_eq!(product.divide_linear_exact(&c).unwrap(), p);
    }

    #[test]
    fn composition_commutes_with_evaluation(p in polynomial(6), a in rational(), b in rational(), x0 in rational()) {
        let lhs = p.compose_affine(&a, &b).eval(&x0);
        let rhs = p.eval(&(&(&a * &x0) + &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees_add(p in polynomial(6), q in polynomial(6)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn sign_is_multiplicative((s, t) in (1usize..8).prop_flat_map(|k| (permutation(k), permutation(k)))) {
        prop_assert_eq!(s.compose(&t).unwrap().sign(), s.sign() * t.sign());
        prop_assert_eq!(s.sign(), s.inversion_sign());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn newton_girard_and_cycle_index(values in prop::collection::vec(rational(), 1..=8)) {
        let vars = VariableSet::new(values).unwrap();
        for k in 1..=vars.len() {
            let w = newton_girard_check(&vars, k).unwrap();
            prop_assert!(w.passed(), "k={} lhs={} rhs={}", k, w.lhs, w.rhs);
            prop_assert_eq!(
                cycle_index_elementary(&vars, k).unwrap(),
                elementary_symmetric(&vars, k).unwrap()
            );
        }
    }
}
