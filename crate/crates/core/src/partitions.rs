//! Integer partitions and the hook, content and factorial quantities built
//! from their Young diagrams.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use exactalg::{BigInt, MPoly, RatFunc, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{JackError, Result};
use crate::vars::{alpha, alpha_poly, alpha_vars};

/// Weakly decreasing sequence of positive integers.
///
/// The total order sorts by weight first and then lexicographically
/// *descending*, so `(3) < (2,1) < (1,1,1)`; this is the canonical order
/// used for maps keyed by partitions and for enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(JackError::InvalidPartition(format!(
                "{parts:?} has zero parts"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(JackError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `p` parts equal to `q`.
    pub fn rectangle(p: usize, q: usize) -> Self {
        if q == 0 {
            return Self::empty();
        }
        Partition(vec![q; p])
    }

    /// Union of rectangles `p_i x q_i`; the `q_i` must be weakly decreasing.
    pub fn multirectangle(ps: &[usize], qs: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (&p, &q) in ps.iter().zip(qs) {
            parts.extend(std::iter::repeat_n(q, p));
        }
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, r: usize) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// `z = prod_i i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for r in self.distinct_parts() {
            let m = self.multiplicity(r);
            for k in 1..=m {
                acc *= BigInt::from(r) * BigInt::from(k);
            }
        }
        acc
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Boxes `(i, j)`, both 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// `lambda^{(i)}`: one box added in row `i`, if the result is a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 {
            return None;
        }
        if i > 1 && self.part(i - 1) == self.part(i) {
            return None;
        }
        let mut parts = self.0.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// `lambda_{(i)}`: one box removed from row `i`, if the result is a
    /// partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() {
            return None;
        }
        if self.part(i) == self.part(i + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn box_moves(&self) -> BoxMoves {
        BoxMoves {
            add: (1..=self.len() + 1)
                .filter_map(|i| self.add_box(i).map(|p| (i, p)))
                .collect(),
            remove: (1..=self.len())
                .filter_map(|i| self.remove_box(i).map(|p| (i, p)))
                .collect(),
        }
    }

    /// Removes one part equal to `r`.
    pub fn without_part(&self, r: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == r)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Inserts one part `r` (no-op for `r = 0`).
    pub fn with_part(&self, r: usize) -> Partition {
        if r == 0 {
            return self.clone();
        }
        let pos = self.0.iter().position(|&p| p < r).unwrap_or(self.0.len());
        let mut parts = self.0.clone();
        parts.insert(pos, r);
        Partition(parts)
    }

    pub fn with_ones(&self, s: usize) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, s));
        Partition(parts)
    }

    /// Splits off the parts equal to 1: `(rho without ones, m_1(rho))`.
    pub fn strip_ones(&self) -> (Partition, usize) {
        let s = self.multiplicity(1);
        (Partition(self.0[..self.len() - s].to_vec()), s)
    }

    pub fn modify(&self, kind: PartMove) -> Option<Partition> {
        match kind {
            PartMove::Down(r) => Some(self.without_part(r)?.with_part(r - 1)),
            PartMove::Up(r) => Some(self.without_part(r)?.with_part(r + 1)),
            PartMove::DownPair(r, s) => {
                Some(self.without_part(r)?.without_part(s)?.with_part(r + s - 1))
            }
            PartMove::UpPair(r, s) => Some(self.without_part(r + s + 1)?.with_part(r).with_part(s)),
            PartMove::MergePair(r, s) => {
                Some(self.without_part(r)?.without_part(s)?.with_part(r + s))
            }
            PartMove::SplitPair(r, s) => Some(self.without_part(r + s)?.with_part(r).with_part(s)),
        }
    }

    /// True iff every partial sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(JackError::WeightMismatch(self.clone(), other.clone()));
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text form `3,2,1`; the empty partition is `-`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "-".into();
        }
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The single-part modifications of a partition used by the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartMove {
    /// Replace one part `r` by `r - 1`.
    Down(usize),
    /// Replace one part `r` by `r + 1`.
    Up(usize),
    /// Replace parts `r`, `s` by one part `r + s - 1`.
    DownPair(usize, usize),
    /// Replace one part `r + s + 1` by parts `r`, `s`.
    UpPair(usize, usize),
    /// Replace parts `r`, `s` by one part `r + s`.
    MergePair(usize, usize),
    /// Replace one part `r + s` by parts `r`, `s`.
    SplitPair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMoves {
    pub add: Vec<(usize, Partition)>,
    pub remove: Vec<(usize, Partition)>,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl FromStr for Partition {
    type Err = JackError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "()" {
            return Ok(Partition::empty());
        }
        let parts = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| JackError::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = JackError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// All partitions of `n` in descending lexicographic order, optionally
/// restricted to those contained in `inside`.
pub fn enumerate_partitions(n: usize, inside: Option<&Partition>) -> Vec<Partition> {
    fn rec(
        rest: usize,
        max: usize,
        row: usize,
        inside: Option<&Partition>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let cap = match inside {
            Some(l) => max.min(l.part(row)),
            None => max,
        };
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, row + 1, inside, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, 1, inside, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with no part equal to 1.
pub fn partitions_without_ones(n: usize) -> Vec<Partition> {
    enumerate_partitions(n, None)
        .into_iter()
        .filter(|p| p.multiplicity(1) == 0)
        .collect()
}

/// Lower and upper hook products and their product, polynomials in alpha.
#[derive(Clone, Debug, PartialEq)]
pub struct HookProducts {
    pub h: MPoly,
    pub h_prime: MPoly,
    pub j: MPoly,
}

pub fn hook_products(lambda: &Partition) -> HookProducts {
    let vars = alpha_vars();
    let a = alpha_poly();
    let conj = lambda.conjugate();
    let mut h = MPoly::one(&vars);
    let mut hp = MPoly::one(&vars);
    for (i, j) in lambda.boxes() {
        let leg = conj.part(j) as i64 - i as i64;
        let arm = lambda.part(i) as i64 - j as i64;
        h = &h * &(&MPoly::from_int(&vars, leg + 1) + &a.scale_int(arm));
        hp = &hp * &(&MPoly::from_int(&vars, leg) + &a.scale_int(arm + 1));
    }
    let j = &h * &hp;
    HookProducts { h, h_prime: hp, j }
}

/// `j_lambda` evaluated in an arbitrary scalar field.
pub fn hook_norm_with<F: Scalar>(lambda: &Partition, alpha: &F) -> F {
    let conj = lambda.conjugate();
    let mut acc = alpha.one_like();
    for (i, j) in lambda.boxes() {
        let leg = conj.part(j) as i64 - i as i64;
        let arm = lambda.part(i) as i64 - j as i64;
        let lower = alpha
            .int_like(leg + 1)
            .add_ref(&alpha.mul_ref(&alpha.int_like(arm)));
        let upper = alpha
            .int_like(leg)
            .add_ref(&alpha.mul_ref(&alpha.int_like(arm + 1)));
        acc = acc.mul_ref(&lower).mul_ref(&upper);
    }
    acc
}

/// `alpha`-content of box `(i, j)`: `j - 1 - (i - 1)/alpha`.
pub fn alpha_content<F: Scalar>(i: usize, j: usize, alpha: &F) -> F {
    alpha
        .int_like(j as i64 - 1)
        .sub_ref(&alpha.int_like(i as i64 - 1).div_ref(alpha))
}

/// `d_1(lambda)`, the sum of the alpha-contents of all boxes.
pub fn alpha_content_sum(lambda: &Partition) -> RatFunc {
    alpha_content_sum_with(lambda, &alpha())
}

pub fn alpha_content_sum_with<F: Scalar>(lambda: &Partition, alpha: &F) -> F {
    lambda.boxes().fold(alpha.zero_like(), |acc, (i, j)| {
        acc.add_ref(&alpha_content(i, j, alpha))
    })
}

/// Generalized raising factorial `(u)_lambda = prod (u + j - 1 - (i-1)/alpha)`.
pub fn raising_factorial(u: &RatFunc, lambda: &Partition) -> RatFunc {
    raising_factorial_with(u, &alpha(), lambda)
}

pub fn raising_factorial_with<F: Scalar>(u: &F, alpha: &F, lambda: &Partition) -> F {
    lambda.boxes().fold(u.one_like(), |acc, (i, j)| {
        acc.mul_ref(&u.add_ref(&alpha_content(i, j, alpha)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::{int, ratio};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            Partition::rectangle(3, 2).conjugate(),
            Partition::rectangle(2, 3)
        );
    }

    #[test]
    fn z_factors() {
        assert_eq!(p("2,2").z(), BigInt::from(8));
        assert_eq!(p("3,2").z(), BigInt::from(6));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
        assert_eq!(p("1,1,1").z(), BigInt::from(6));
    }

    #[test]
    fn hooks() {
        let a = alpha_poly();
        let v = alpha_vars();
        let one = MPoly::one(&v);
        let hp = hook_products(&p("1"));
        assert_eq!(
            (hp.h, hp.h_prime, hp.j),
            (one.clone(), a.clone(), a.clone())
        );
        let hp = hook_products(&p("2"));
        assert_eq!(hp.h, &one + &a);
        assert_eq!(hp.h_prime, a.pow(2).scale_int(2));
        assert_eq!(hp.j, &a.pow(2).scale_int(2) * &(&one + &a));
        let hp = hook_products(&Partition::empty());
        assert!(hp.h.is_one() && hp.h_prime.is_one() && hp.j.is_one());
    }

    #[test]
    fn content_sums() {
        let a = alpha();
        let v = alpha_vars();
        assert!(alpha_content_sum(&p("2")).is_one());
        assert_eq!(alpha_content_sum(&p("1,1")), -&(&RatFunc::one(&v) / &a));
        let expected = &RatFunc::from_int(&v, 2) - &(&RatFunc::from_int(&v, 2) / &a);
        assert_eq!(alpha_content_sum(&p("2,2")), expected);
    }

    #[test]
    fn raising_factorials() {
        let vars = exactalg::vars_of(&["u", "alpha"]);
        let u = RatFunc::var(&vars, "u");
        let one = RatFunc::one(&vars);
        assert_eq!(raising_factorial(&u, &p("2")), &u * &(&u + &one));
        let a = RatFunc::var(&vars, "alpha");
        assert_eq!(raising_factorial(&u, &p("1,1")), &u * &(&u - &(&one / &a)));
        assert!(raising_factorial(&u, &Partition::empty()).is_one());
    }

    #[test]
    fn dominance() {
        assert!(p("1,1,1").dominated_by(&p("3")).unwrap());
        assert!(!p("3").dominated_by(&p("1,1,1")).unwrap());
        assert!(p("2,2").dominated_by(&p("3,1")).unwrap());
        assert!(matches!(
            p("2").dominated_by(&p("3")),
            Err(JackError::WeightMismatch(..))
        ));
    }

    #[test]
    fn moves_of_two_two() {
        let m = p("2,2").box_moves();
        assert_eq!(m.add, vec![(1, p("3,2")), (3, p("2,2,1"))]);
        assert_eq!(m.remove, vec![(2, p("2,1"))]);
        let m = Partition::empty().box_moves();
        assert_eq!(m.add, vec![(1, p("1"))]);
        assert!(m.remove.is_empty());
    }

    #[test]
    fn rectangle_moves() {
        for (pp, qq) in [(2, 3), (3, 3), (4, 1), (1, 4)] {
            let m = Partition::rectangle(pp, qq).box_moves();
            let rows: Vec<usize> = m.add.iter().map(|(i, _)| *i).collect();
            assert_eq!(rows, vec![1, pp + 1]);
            let rows: Vec<usize> = m.remove.iter().map(|(i, _)| *i).collect();
            assert_eq!(rows, vec![pp]);
        }
    }

    #[test]
    fn part_modifications() {
        assert_eq!(p("3,2").modify(PartMove::Down(3)), Some(p("2,2")));
        assert_eq!(p("3,2").modify(PartMove::DownPair(3, 2)), Some(p("4")));
        assert_eq!(p("3,2").modify(PartMove::SplitPair(1, 2)), Some(p("2,2,1")));
        assert_eq!(p("3,2").modify(PartMove::Up(2)), Some(p("3,3")));
        assert_eq!(p("4").modify(PartMove::UpPair(1, 2)), Some(p("2,1")));
        assert_eq!(p("3,2").modify(PartMove::MergePair(3, 2)), Some(p("5")));
        assert_eq!(p("3,2").modify(PartMove::Down(4)), None);
        assert_eq!(p("2").modify(PartMove::DownPair(2, 2)), None);
        // weights and lengths
        let mu = p("4,3,3,2");
        let k = mu.weight();
        let d = mu.modify(PartMove::DownPair(3, 3)).unwrap();
        assert_eq!((d.weight(), d.len()), (k - 1, mu.len() - 1));
        let u = mu.modify(PartMove::UpPair(1, 1)).unwrap();
        assert_eq!((u.weight(), u.len()), (k - 1, mu.len() + 1));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(4, None).len(), 5);
        assert_eq!(enumerate_partitions(5, Some(&p("2,2,2"))), vec![p("2,2,1")]);
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        let six = enumerate_partitions(6, None);
        assert_eq!(six.len(), 11);
        assert!(six.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(p("3,2,1").to_text(), "3,2,1");
        assert_eq!(Partition::empty().to_text(), "-");
        assert_eq!(serde_json::to_string(&p("3,2,1")).unwrap(), "[3,2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn numeric_content_matches_symbolic() {
        let l = p("3,1,1");
        let num = alpha_content_sum_with(&l, &ratio(3, 2));
        let sym = alpha_content_sum(&l)
            .eval(&[("alpha", ratio(3, 2))])
            .unwrap();
        assert_eq!(sym.as_constant().unwrap(), num);
        assert_eq!(hook_norm_with(&p("2"), &int(2)), int(24));
    }
}
