//! Symmetric functions in the power-sum and monomial bases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use exactalg::{BigInt, BigRational, MPoly, RatFunc};
use num_traits::{One, Zero};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{JackError, Result};
use crate::partitions::{enumerate_partitions, PartMove, Partition};
use crate::vars::{alpha, alpha_vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "m")]
    Monomial,
}

/// Finite linear combination of `p_lambda` or `m_lambda` with coefficients
/// rational in alpha. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFun {
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(basis: Basis, index: Partition, coef: RatFunc) -> Self {
        let mut f = SymFun::zero(basis);
        f.add_term(index, coef);
        f
    }

    /// `p_lambda` or `m_lambda` with coefficient 1.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        SymFun::term(basis, index, RatFunc::one(&alpha_vars()))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(
        basis: Basis,
        terms: I,
    ) -> Self {
        let mut f = SymFun::zero(basis);
        for (idx, c) in terms {
            f.add_term(idx, c);
        }
        f
    }

    pub fn add_term(&mut self, index: Partition, coef: RatFunc) {
        if coef.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&index) {
            Some(c) => {
                *c = &*c + &coef;
                if c.is_zero() {
                    self.coeffs.remove(&index);
                }
            }
            None => {
                self.coeffs.insert(index, coef);
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, index: &Partition) -> RatFunc {
        self.coeffs
            .get(index)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&alpha_vars()))
    }

    pub fn scale(&self, c: &RatFunc) -> SymFun {
        SymFun::from_terms(
            self.basis,
            self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)),
        )
    }

    /// Sum of two functions; the right operand is converted to the left basis.
    pub fn add(&self, other: &SymFun) -> SymFun {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (k, v) in other.coeffs {
            out.add_term(k, v);
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.add(&other.scale(&RatFunc::from_int(&alpha_vars(), -1)))
    }

    pub fn convert(&self, target: Basis) -> SymFun {
        if target == self.basis {
            return self.clone();
        }
        let mut out = SymFun::zero(target);
        for (idx, c) in &self.coeffs {
            let t = transitions(idx.weight());
            let row = t.index[idx];
            match target {
                Basis::Monomial => {
                    for (col, e) in t.p_to_m[row].iter().enumerate() {
                        if !e.is_zero() {
                            out.add_term(
                                t.parts[col].clone(),
                                c.scale(&BigRational::from(e.clone())),
                            );
                        }
                    }
                }
                Basis::PowerSum => {
                    for (col, e) in t.m_to_p[row].iter().enumerate() {
                        if !e.is_zero() {
                            out.add_term(t.parts[col].clone(), c.scale(e));
                        }
                    }
                }
            }
        }
        out
    }

    /// `<f, g>` with `<p_lambda, p_mu> = delta alpha^{l(lambda)} z_lambda`.
    pub fn scalar_product(&self, other: &SymFun) -> RatFunc {
        let f = self.convert(Basis::PowerSum);
        let g = other.convert(Basis::PowerSum);
        let a = alpha();
        let mut acc = RatFunc::zero(&alpha_vars());
        for (idx, c) in &f.coeffs {
            if let Some(d) = g.coeffs.get(idx) {
                let w = a.pow(idx.len() as u32).scale(&BigRational::from(idx.z()));
                acc = &acc + &(&(c * d) * &w);
            }
        }
        acc
    }

    /// Multiplication by `p_1`.
    pub fn mul_p1(&self) -> Result<SymFun> {
        self.require_power_sums("mul_p1")?;
        Ok(SymFun::from_terms(
            Basis::PowerSum,
            self.coeffs.iter().map(|(k, v)| (k.with_part(1), v.clone())),
        ))
    }

    /// Multiplication by `p_k`.
    pub fn mul_p(&self, k: usize) -> Result<SymFun> {
        self.require_power_sums("mul_p")?;
        Ok(SymFun::from_terms(
            Basis::PowerSum,
            self.coeffs
                .iter()
                .map(|(idx, v)| (idx.with_part(k), v.clone())),
        ))
    }

    /// `E_2 = sum_k k p_{k+1} d/dp_k`.
    pub fn apply_e2(&self) -> Result<SymFun> {
        self.require_power_sums("apply_e2")?;
        let mut out = SymFun::zero(Basis::PowerSum);
        for (idx, c) in &self.coeffs {
            for r in idx.distinct_parts() {
                let w = (r * idx.multiplicity(r)) as i64;
                let target = idx.modify(PartMove::Up(r)).expect("part present");
                out.add_term(target, c.scale_int(w));
            }
        }
        Ok(out)
    }

    fn require_power_sums(&self, op: &str) -> Result<()> {
        if self.basis != Basis::PowerSum {
            return Err(JackError::Unsupported(format!(
                "{op} needs the power-sum basis"
            )));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    index: Partition,
    coef: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct SymFunRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunRepr {
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(k, v)| TermRepr {
                    index: k.clone(),
                    coef: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SymFunRepr::deserialize(d)?;
        Ok(SymFun::from_terms(
            r.basis,
            r.terms.into_iter().map(|t| (t.index, t.coef)),
        ))
    }
}

/// Change-of-basis matrices for one weight. Rows and columns follow
/// `parts`, which is in descending lexicographic order, so both matrices
/// are lower triangular.
#[derive(Debug)]
pub struct Transitions {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_rho = sum_mu p_to_m[rho][mu] m_mu`
    pub p_to_m: Vec<Vec<BigInt>>,
    /// `m_mu = sum_rho m_to_p[mu][rho] p_rho`
    pub m_to_p: Vec<Vec<BigRational>>,
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<Transitions>>> {
    static C: OnceLock<RwLock<HashMap<usize, Arc<Transitions>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Cached transitions for weight `n`, built and validated on first use.
pub fn transitions(n: usize) -> Arc<Transitions> {
    if let Some(t) = cache().read().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_transitions(n));
    cache().write().entry(n).or_insert(t).clone()
}

/// Number of ways to distribute the parts of `rho` into rows so that row
/// `i` sums to `mu_i`; this is the coefficient of `m_mu` in `p_rho`.
fn count_fillings(rho: &[usize], remaining: &mut [usize]) -> u64 {
    let Some((&first, rest)) = rho.split_first() else {
        return remaining.iter().all(|&r| r == 0) as u64;
    };
    let mut total = 0;
    for i in 0..remaining.len() {
        if remaining[i] >= first {
            remaining[i] -= first;
            total += count_fillings(rest, remaining);
            remaining[i] += first;
        }
    }
    total
}

fn build_transitions(n: usize) -> Transitions {
    let parts = enumerate_partitions(n, None);
    let size = parts.len();
    let index: HashMap<Partition, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let p_to_m: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| BigInt::from(count_fillings(rho.parts(), &mut mu.parts().to_vec())))
                .collect()
        })
        .collect();
    validate_by_expansion(&parts, &p_to_m);

    // forward substitution on the lower-triangular matrix
    let mut m_to_p = vec![vec![BigRational::zero(); size]; size];
    for mu in 0..size {
        let diag = BigRational::from(p_to_m[mu][mu].clone());
        // m_mu = (p_mu - sum_{nu < mu} L[mu][nu] m_nu) / L[mu][mu]
        let mut row = vec![BigRational::zero(); size];
        row[mu] = BigRational::one();
        for nu in 0..mu {
            let l = &p_to_m[mu][nu];
            if l.is_zero() {
                continue;
            }
            let l = BigRational::from(l.clone());
            for (r, v) in row.iter_mut().zip(&m_to_p[nu]) {
                if !v.is_zero() {
                    *r -= &l * v;
                }
            }
        }
        for r in row.iter_mut() {
            *r = &*r / &diag;
        }
        m_to_p[mu] = row;
    }
    for (mu, row) in parts.iter().zip(&m_to_p) {
        let aug = BigRational::from(
            mu.distinct_parts()
                .iter()
                .map(|&r| exactalg::factorial(mu.multiplicity(r) as u64))
                .product::<BigInt>(),
        );
        assert!(
            row.iter().all(|c| (c * &aug).is_integer()),
            "augmented monomial {mu} is not an integral combination of power sums"
        );
    }
    Transitions {
        parts,
        index,
        p_to_m,
        m_to_p,
    }
}

/// Expands every `p_rho` in `n` variables and compares the coefficient of
/// each `x^mu` against the combinatorial count.
fn validate_by_expansion(parts: &[Partition], p_to_m: &[Vec<BigInt>]) {
    let n = parts.first().map_or(0, |p| p.weight());
    if n == 0 {
        return;
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let vars = exactalg::vars_of(&refs);
    let power_sum = |k: usize| {
        MPoly::from_terms(
            &vars,
            (0..n).map(|i| {
                let mut e = vec![0u32; n];
                e[i] = k as u32;
                (e, BigRational::one())
            }),
        )
    };
    let sums: Vec<MPoly> = (0..=n).map(power_sum).collect();
    for (row, rho) in parts.iter().enumerate() {
        let mut f = MPoly::one(&vars);
        for &k in rho.parts() {
            f = &f * &sums[k];
        }
        for (col, mu) in parts.iter().enumerate() {
            let mut e: Vec<u32> = mu.parts().iter().map(|&x| x as u32).collect();
            e.resize(n, 0);
            let c = f.coefficient(&e);
            assert_eq!(
                c,
                BigRational::from(p_to_m[row][col].clone()),
                "transition entry p_{rho} -> m_{mu}"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one() -> RatFunc {
        RatFunc::one(&alpha_vars())
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(&alpha_vars(), n)
    }

    #[test]
    fn small_conversions() {
        let p1 = SymFun::basis_element(Basis::PowerSum, p("1"));
        assert_eq!(
            p1.convert(Basis::Monomial),
            SymFun::basis_element(Basis::Monomial, p("1"))
        );
        let p2 = SymFun::basis_element(Basis::PowerSum, p("2"));
        assert_eq!(
            p2.convert(Basis::Monomial),
            SymFun::basis_element(Basis::Monomial, p("2"))
        );
        let p11 = SymFun::basis_element(Basis::PowerSum, p("1,1"));
        let expected = SymFun::from_terms(Basis::Monomial, [(p("2"), one()), (p("1,1"), c(2))]);
        assert_eq!(p11.convert(Basis::Monomial), expected);
    }

    #[test]
    fn one_column_coefficient_is_factorial() {
        for n in 1..=6 {
            let f = SymFun::basis_element(Basis::PowerSum, Partition::rectangle(n, 1))
                .convert(Basis::Monomial);
            let fact = exactalg::factorial(n as u64);
            assert_eq!(
                f.coefficient(&Partition::rectangle(n, 1))
                    .as_constant()
                    .unwrap(),
                BigRational::from(fact)
            );
        }
    }

    #[test]
    fn round_trip_small_weights() {
        for n in 0..=6 {
            for lam in enumerate_partitions(n, None) {
                let m = SymFun::basis_element(Basis::Monomial, lam.clone());
                assert_eq!(m.convert(Basis::PowerSum).convert(Basis::Monomial), m);
            }
        }
    }

    #[test]
    fn scalar_products() {
        let a = alpha();
        let p1 = SymFun::basis_element(Basis::PowerSum, p("1"));
        assert_eq!(p1.scalar_product(&p1), a);
        let p2 = SymFun::basis_element(Basis::PowerSum, p("2"));
        let p11 = SymFun::basis_element(Basis::PowerSum, p("1,1"));
        assert!(p2.scalar_product(&p11).is_zero());
        assert_eq!(p11.scalar_product(&p11), a.pow(2).scale(&int(2)));
    }

    #[test]
    fn p1_multiplication() {
        let f = SymFun::basis_element(Basis::PowerSum, p("2"));
        assert_eq!(
            f.mul_p1().unwrap(),
            SymFun::basis_element(Basis::PowerSum, p("2,1"))
        );
        let g = SymFun::term(Basis::PowerSum, p("1"), c(3));
        assert_eq!(
            g.mul_p1().unwrap(),
            SymFun::term(Basis::PowerSum, p("1,1"), c(3))
        );
        assert!(SymFun::zero(Basis::PowerSum).mul_p1().unwrap().is_zero());
        assert!(SymFun::zero(Basis::Monomial).mul_p1().is_err());
    }

    #[test]
    fn e2_action() {
        let e = |s: &str| {
            SymFun::basis_element(Basis::PowerSum, p(s))
                .apply_e2()
                .unwrap()
        };
        assert_eq!(e("2"), SymFun::term(Basis::PowerSum, p("3"), c(2)));
        assert_eq!(e("2,2"), SymFun::term(Basis::PowerSum, p("3,2"), c(4)));
        assert_eq!(e("1"), SymFun::basis_element(Basis::PowerSum, p("2")));
    }

    #[test]
    fn json_shape() {
        let f = SymFun::term(Basis::PowerSum, p("2,1"), c(3));
        let s = serde_json::to_string(&f).unwrap();
        assert!(
            s.starts_with(r#"{"basis":"p","terms":[{"index":[2,1],"coef":{"num":"#),
            "{s}"
        );
        let back: SymFun = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
