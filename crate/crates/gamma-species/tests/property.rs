//! Randomized property tests for the text forms and the cycle-type
//! combinatorics.

use proptest::prelude::*;

use gamma_species::algebra::{
    partitions_of, power_cycle_type, rational, z_of, Partition, Rational,
};
use gamma_species::library;
use gamma_species::perm::GroupElement;

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=9, 0..=8).prop_map(Partition::new)
}

fn arb_permutation(max_degree: usize) -> impl Strategy<Value = GroupElement> {
    (1..=max_degree).prop_flat_map(|k| {
        Just((1..=k as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|images| GroupElement::from_images(images).expect("shuffle is a bijection"))
    })
}

proptest! {
    #[test]
    fn partition_text_round_trips(p in arb_partition()) {
        let text = p.to_string();
        let back: Partition = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn cycle_notation_round_trips(g in arb_permutation(8)) {
        let text = g.to_string();
        let back = GroupElement::parse(&text, g.degree()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn powering_cycle_types_is_multiplicative(p in arb_partition(), a in 1u32..=6, b in 1u32..=6) {
        // (sigma^a)^b = sigma^{ab} at the cycle-type level
        prop_assert_eq!(
            power_cycle_type(&power_cycle_type(&p, a), b),
            power_cycle_type(&p, a * b)
        );
    }

    #[test]
    fn power_types_agree_with_concrete_permutations(g in arb_permutation(7), d in 1u32..=10) {
        prop_assert_eq!(
            g.power(d as u64).cycle_type(),
            power_cycle_type(&g.cycle_type(), d)
        );
    }

    #[test]
    fn sub_multiset_weights_total_two_to_the_parts(p in arb_partition()) {
        // sum over submultisets of prod C(lambda_i, mu_i) = prod 2^{m_i}
        let total: num::BigInt = p.sub_multisets().into_iter().map(|(_, _, w)| w).sum();
        let expected = num::BigInt::from(1u8) << p.len();
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn product_oracle_matches_dense_convolution(n in 0u32..=6, idx in 0usize..=200) {
        // pick a partition of n deterministically from idx
        let parts = partitions_of(n);
        let lam = &parts[idx % parts.len()];
        let product = library::subsets().multiply(&library::cyclic());
        let via_oracle = product.fix_count(lam).unwrap();
        let z = Rational::from_integer(z_of(lam));
        let dense = product.stratum(n).unwrap().coefficient(lam) * z;
        prop_assert_eq!(via_oracle, dense);
    }

    #[test]
    fn series_sum_is_coefficientwise(n in 0u32..=6) {
        let a = library::linear();
        let b = library::cyclic();
        let sum = a.add(&b);
        for lam in partitions_of(n) {
            prop_assert_eq!(
                sum.coefficient(&lam).unwrap(),
                a.coefficient(&lam).unwrap() + b.coefficient(&lam).unwrap()
            );
        }
        // and the zero series really is absorbing for scaling
        let zeroed = a.scale(&rational(0));
        prop_assert!(zeroed.stratum(n).unwrap().is_zero());
    }
}
