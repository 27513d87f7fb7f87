use proptest::prelude::*;
use sparse_duals::sparse_ideals::{
    divisor_set, gap_pair_count, ideals_with_small_complement, inclusion_report, is_leader_index,
    leader_set, maximum_sparse_ideals,
};
use sparse_duals::NumericalSemigroup;

fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u64..12, 2..4)
        .prop_filter_map("gcd 1, genus <= 8", |g| {
            NumericalSemigroup::from_generators(&g)
                .ok()
                .filter(|s| s.genus() <= 8)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideals_are_closed_and_characterized(s in small_semigroup()) {
        let c = s.conductor();
        for ideal in ideals_with_small_complement(&s, 3 * c, 5) {
            let k = ideal.complement();
            // I + S ⊆ I
            for &x in k {
                for t in s.elements_up_to(ideal.frobenius()) {
                    if t <= x && s.contains_value(x - t) {
                        prop_assert!(k.contains(&t));
                    }
                }
            }
            let top = *k.last().unwrap();
            let i = s.index_of(top).unwrap();
            let by_leader = is_leader_index(&s, i) && divisor_set(&s, i) == k;
            prop_assert_eq!(ideal.is_maximum_sparse(), by_leader, "{} {:?}", s, k);
        }
    }

    #[test]
    fn leaders_form_an_ideal_above_the_conductor(s in small_semigroup()) {
        let c = s.conductor();
        let bound = 3 * c;
        let l = leader_set(&s, bound);
        prop_assert!(l.iter().all(|&v| v >= c));
        for &v in &l {
            for t in s.elements_up_to(bound - v) {
                prop_assert!(l.contains(&(v + t)));
            }
        }
        // every λ > 2·(largest gap) is a leader
        let tail = 2 * s.gaps().last().copied().unwrap_or(0) + 1;
        for v in tail.max(1)..=bound {
            prop_assert_eq!(gap_pair_count(&s, s.index_of(v).unwrap()), 0);
        }
    }

    #[test]
    fn four_conditions_agree(s in small_semigroup()) {
        let ideals = maximum_sparse_ideals(&s, 3 * s.conductor());
        for a in &ideals {
            for b in &ideals {
                prop_assert!(inclusion_report(a, b).unwrap().all_agree());
            }
        }
    }
}
