#![allow(dead_code)]

use exactalg::RatFunc;
use jackpow::verify::{Channel, Check, DefaultSource, Perturbed, ThetaSource};
use jackpow::Partition;
use parking_lot::Mutex;

pub fn part(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

/// Logs every value a checker asks for.
pub struct Recording<'a> {
    pub inner: &'a DefaultSource,
    pub calls: Mutex<Vec<(Channel, Partition, Partition)>>,
}

impl<'a> Recording<'a> {
    pub fn new(inner: &'a DefaultSource) -> Self {
        Recording {
            inner,
            calls: Mutex::new(Vec::new()),
        }
    }

    fn log(&self, ch: Channel, l: &Partition, r: &Partition) {
        self.calls.lock().push((ch, l.clone(), r.clone()));
    }
}

impl ThetaSource for Recording<'_> {
    fn raw(&self, l: &Partition, r: &Partition) -> RatFunc {
        self.log(Channel::Raw, l, r);
        self.inner.raw(l, r)
    }
    fn hat(&self, l: &Partition, r: &Partition) -> RatFunc {
        self.log(Channel::Hat, l, r);
        self.inner.hat(l, r)
    }
    fn shifted(&self, l: &Partition, r: &Partition) -> RatFunc {
        self.log(Channel::Shifted, l, r);
        self.inner.shifted(l, r)
    }
}

/// Runs the check on the true values (must pass), then bumps each value it
/// consumed in turn; returns the first perturbation the check rejects.
pub fn mutation_caught(
    src: &DefaultSource,
    check: Check,
    lambda: &Partition,
    mu: &Partition,
    r: Option<usize>,
) -> Option<(Channel, Partition, Partition)> {
    let rec = Recording::new(src);
    let clean = check.run(&rec, lambda, mu, r).expect("valid parameters");
    assert!(
        clean.passed(),
        "{} fails unperturbed: {:?}",
        check.id(),
        clean.witness
    );
    let mut calls = rec.calls.into_inner();
    calls.dedup();
    calls.into_iter().find(|(ch, l, rho)| {
        let bad = Perturbed {
            inner: src,
            channel: *ch,
            lambda: l.clone(),
            rho: rho.clone(),
        };
        !check
            .run(&bad, lambda, mu, r)
            .expect("valid parameters")
            .passed()
    })
}
