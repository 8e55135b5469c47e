use double_eta::io::{from_json, from_json_str, parse_expr, to_json, to_text};
use double_eta::polyring::{divided_difference, weyl_action};
use double_eta::quotient::normal_form;
use double_eta::{IntPoly, Monomial, TypedPartition, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::BTilde),
        (1..=5u32).prop_map(Var::B),
        (1..=4u32).prop_map(Var::T)
    ]
}

fn poly() -> impl Strategy<Value = IntPoly> {
    let term = (-20i64..=20, prop::collection::vec((var(), 1..=3u32), 0..4));
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        IntPoly::from_terms(
            terms
                .into_iter()
                .map(|(c, vars)| (Monomial::from_pairs(vars), BigInt::from(c))),
        )
    })
}

fn k_and_poly() -> impl Strategy<Value = (u32, IntPoly)> {
    (1..=3u32, poly())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip((k, f) in k_and_poly()) {
        let v = to_json(&f, k);
        prop_assert_eq!(&from_json::<BigInt>(&v, k).unwrap(), &f);
        prop_assert_eq!(from_json_str::<BigInt>(&v.to_string(), k).unwrap(), f);
    }

    #[test]
    fn text_round_trip((k, f) in k_and_poly()) {
        prop_assert_eq!(parse_expr::<BigInt>(&to_text(&f, k), k).unwrap(), f);
    }

    #[test]
    fn reflections_are_ring_maps((k, f) in k_and_poly(), g in poly(), i in 0..=3u32) {
        prop_assert_eq!(
            weyl_action(i, &(&f * &g), k),
            weyl_action(i, &f, k) * weyl_action(i, &g, k)
        );
        prop_assert_eq!(weyl_action(i, &weyl_action(i, &f, k), k), f);
    }

    #[test]
    fn divided_differences_kill_invariants((k, f) in k_and_poly(), i in 0..=3u32) {
        let symmetric = &f + &weyl_action(i, &f, k);
        prop_assert!(divided_difference(i, &symmetric, k).unwrap().is_zero());
    }

    #[test]
    fn normal_form_is_a_linear_projection((k, f) in k_and_poly(), g in poly()) {
        let nf = normal_form(&f, k);
        prop_assert_eq!(&normal_form(&nf, k), &nf);
        prop_assert_eq!(normal_form(&(&f + &g), k), nf + normal_form(&g, k));
    }

    #[test]
    fn partitions_round_trip_through_permutations(k in 1..=3u32, rows in 0..=3usize, cols in 0..=5u32, pick in any::<prop::sample::Index>()) {
        let all = TypedPartition::enumerate(k, rows, cols);
        let lam = pick.get(&all);
        let w = lam.to_perm();
        prop_assert!(w.is_k_grassmannian(k));
        prop_assert_eq!(w.length() as u32, lam.size());
        prop_assert_eq!(&TypedPartition::from_perm(&w, k).unwrap(), lam);
        prop_assert_eq!(&TypedPartition::parse(&lam.to_string(), k).unwrap(), lam);
    }
}
