use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector of a monomial, one entry per declared variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn var(arity: usize, idx: usize) -> Self {
        let mut m = Self::one(arity);
        m.0[idx] = 1;
        m
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| b - a)
                .collect(),
        )
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_prefers_degree_then_first_variable() {
        let a = Monomial::from_slice(&[2, 0]);
        let b = Monomial::from_slice(&[0, 3]);
        let c = Monomial::from_slice(&[0, 2]);
        assert!(b > a);
        assert!(a > c);
        assert!(Monomial::from_slice(&[1, 1]) < a);
    }
}
