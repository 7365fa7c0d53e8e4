//! Each checker passes on a small instance and on a rectangle, and rejects a
//! perturbed coefficient.

mod common;

use common::{mutation_caught, part};
use jackpow::verify::{sweep, Check, DefaultSource, Sampling, Summary};
use jackpow::Partition;

fn exercise(check: Check, small: (&str, &str), rect: (usize, usize, &str), r: Option<usize>) {
    let src = DefaultSource::new();
    let (l, m) = (part(small.0), part(small.1));
    let rep = check.run(&src, &l, &m, r).unwrap();
    assert!(rep.passed(), "{} small: {:?}", check.id(), rep.witness);

    let (shape, mu) = (Partition::rectangle(rect.0, rect.1), part(rect.2));
    let rr = r.map(|_| shape.weight() - 1);
    let rep = check.run(&src, &shape, &mu, rr).unwrap();
    assert!(
        rep.passed(),
        "{} on {shape}, mu = {mu}: {:?}",
        check.id(),
        rep.witness
    );

    assert!(
        mutation_caught(&src, check, &l, &m, r).is_some(),
        "{} accepted every perturbation",
        check.id()
    );
}

#[test]
fn i1_binomial_sum() {
    exercise(Check::I1, ("2,2", "2"), (2, 3, "2"), Some(3));
    let src = DefaultSource::new();
    // r = |lambda| and r = |mu| edges
    for r in [2, 4] {
        assert!(Check::I1
            .run(&src, &part("2,2"), &part("2"), Some(r))
            .unwrap()
            .passed());
    }
    assert!(Check::I1
        .run(&src, &part("3,1"), &part("2,1"), Some(3))
        .unwrap()
        .passed());
}

#[test]
fn i2_p1_lower() {
    exercise(Check::I2, ("3,2", "2"), (3, 2, "3"), None);
}

#[test]
fn i3_e0_raise() {
    exercise(Check::I3, ("2,2", "2"), (2, 3, "2,2"), None);
}

#[test]
fn i4_e2() {
    exercise(Check::I4, ("3,2,1", "2"), (2, 3, "3"), None);
}

#[test]
fn i5_e0_n0() {
    exercise(Check::I5, ("3,2", "3"), (3, 2, "2"), None);
}

#[test]
fn i6_d1() {
    exercise(Check::I6, ("3,2,1", "3"), (2, 3, "4"), None);
}

#[test]
fn i7_d2dag() {
    exercise(Check::I7, ("3,3", "3"), (3, 3, "3,2"), None);
}

#[test]
fn prop1() {
    exercise(Check::Prop1, ("3,2", "2"), (2, 3, "2"), Some(4));
}

#[test]
fn bad_parameters_are_errors() {
    let src = DefaultSource::new();
    assert!(Check::I2.run(&src, &part("3"), &part("2,1"), None).is_err());
    assert!(Check::I3.run(&src, &part("2"), &part("3"), None).is_err());
    assert!(Check::I1
        .run(&src, &part("3"), &part("2"), Some(4))
        .is_err());
    assert!(Check::I1.run(&src, &part("3"), &part("2"), None).is_err());
}

#[test]
fn seeded_sampling_is_deterministic() {
    let src = DefaultSource::new();
    let s = Sampling::Sample {
        seed: 42,
        count: 20,
    };
    let a = sweep(&src, &[Check::I3, Check::I6], 6, s, false);
    let b = sweep(&src, &[Check::I6, Check::I3], 6, s, false);
    assert_eq!(a.len(), 40);
    let key = |v: &[jackpow::verify::Report]| {
        let mut k: Vec<String> = v
            .iter()
            .map(|r| serde_json::to_string(r).unwrap())
            .collect();
        k.sort();
        k
    };
    assert_eq!(key(&a), key(&b));
    assert_eq!(Summary::of(&a).fail, 0);
    assert!(sweep(&src, &[], 6, Sampling::Exhaustive, false).is_empty());
}
