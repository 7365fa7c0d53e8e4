use jackpow::theta::{theta_hat, theta_hat_direct};
use jackpow::verify::{Check, DefaultSource};
use jackpow::Partition;
use proptest::prelude::*;

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

fn no_ones(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(2..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involution(l in partition(6, 6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
    }

    #[test]
    fn strip_ones_roundtrip(l in partition(6, 4)) {
        let (core, s) = l.strip_ones();
        prop_assert_eq!(core.multiplicity(1), 0);
        prop_assert_eq!(core.with_ones(s), l);
    }

    #[test]
    fn binomial_route_agrees(l in partition(3, 3), mu in no_ones(2, 3)) {
        prop_assume!(mu.weight() <= l.weight() && l.weight() <= jackpow::jack::max_weight());
        prop_assert_eq!(theta_hat(&l, &mu).unwrap(), theta_hat_direct(&l, &mu).unwrap());
    }

    #[test]
    fn first_order_identities_hold(l in partition(3, 3), mu in no_ones(2, 3)) {
        prop_assume!(mu.weight() < l.weight());
        let src = DefaultSource::new();
        for c in [Check::I2, Check::I3, Check::I4, Check::I5, Check::I6] {
            let rep = c.run(&src, &l, &mu, None).unwrap();
            prop_assert!(rep.passed(), "{} on {}, {}", c.id(), l, mu);
        }
    }

    #[test]
    fn binomial_sum_holds(l in partition(3, 3), mu in partition(2, 2), extra in 0usize..3) {
        prop_assume!(mu.weight() <= l.weight());
        let r = (mu.weight() + extra).min(l.weight());
        let src = DefaultSource::new();
        if l.weight() > jackpow::jack::max_weight() {
            prop_assert!(Check::I1.run(&src, &l, &mu, Some(r)).is_err());
            return Ok(());
        }
        prop_assert!(Check::I1.run(&src, &l, &mu, Some(r)).unwrap().passed());
    }
}
