//! Jack polynomials `J_lambda` in the power-sum basis, Pieri coefficients,
//! generalized binomial coefficients and principal specializations.
//!
//! `J_lambda` is obtained by Gram-Schmidt orthogonalization of the monomial
//! basis (ordered by a linear extension of dominance) under the alpha
//! pairing, normalized so that the coefficient of `p_{1^n}` is 1.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use exactalg::{BigRational, MPoly, RatFunc, Scalar};
use parking_lot::RwLock;

use crate::error::{JackError, Result};
use crate::partitions::{hook_norm_with, raising_factorial_with, Partition};
use crate::symfun::{transitions, Basis, SymFun};
use crate::vars::{alpha, alpha_vars};

pub const DEFAULT_MAX_WEIGHT: usize = 8;

/// Largest weight for which full expansions are computed, from
/// `JACK_MAX_WEIGHT` or [`DEFAULT_MAX_WEIGHT`].
pub fn max_weight() -> usize {
    static W: OnceLock<usize> = OnceLock::new();
    *W.get_or_init(|| {
        std::env::var("JACK_MAX_WEIGHT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&w: &usize| w >= 1)
            .unwrap_or(DEFAULT_MAX_WEIGHT)
    })
}

/// Field in which alpha-dependent quantities are evaluated: either exact
/// rational functions of a symbolic alpha, or rationals at a fixed alpha.
pub trait AlphaScalar: Scalar {
    /// Value of a polynomial in alpha at this field's alpha.
    fn from_alpha_poly(p: &MPoly, alpha: &Self) -> Self;
}

impl AlphaScalar for RatFunc {
    fn from_alpha_poly(p: &MPoly, _alpha: &Self) -> Self {
        RatFunc::from_poly(p.clone())
    }
}

impl AlphaScalar for BigRational {
    fn from_alpha_poly(p: &MPoly, alpha: &Self) -> Self {
        p.eval(&[(crate::vars::ALPHA, alpha.clone())])
            .ok()
            .and_then(|v| v.as_constant())
            .unwrap_or_else(|| {
                // polynomials without alpha in their variable set
                p.as_constant().expect("polynomial in alpha only")
            })
    }
}

/// All `theta^lambda_rho` of one weight, rows and columns in the order of
/// [`crate::symfun::Transitions::parts`].
#[derive(Debug)]
pub struct WeightTable {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub theta: Vec<Vec<MPoly>>,
}

impl WeightTable {
    pub fn theta(&self, lambda: &Partition, rho: &Partition) -> &MPoly {
        &self.theta[self.index[lambda]][self.index[rho]]
    }
}

fn weight_cache() -> &'static RwLock<HashMap<usize, Arc<WeightTable>>> {
    static C: OnceLock<RwLock<HashMap<usize, Arc<WeightTable>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Every Jack polynomial of weight `n`, computed once per process.
pub fn weight_table(n: usize) -> Result<Arc<WeightTable>> {
    weight_table_with_limit(n, max_weight())
}

pub fn weight_table_with_limit(n: usize, max: usize) -> Result<Arc<WeightTable>> {
    if n > max {
        return Err(JackError::WeightLimitExceeded { weight: n, max });
    }
    if let Some(t) = weight_cache().read().get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(gram_schmidt(n));
    Ok(weight_cache().write().entry(n).or_insert(t).clone())
}

fn gram_schmidt(n: usize) -> WeightTable {
    let tr = transitions(n);
    let size = tr.parts.len();
    let vars = alpha_vars();
    let a = alpha();
    let pair_weight: Vec<RatFunc> = tr
        .parts
        .iter()
        .map(|rho| a.pow(rho.len() as u32).scale(&BigRational::from(rho.z())))
        .collect();
    let pair = |u: &[RatFunc], v: &[RatFunc]| -> RatFunc {
        let mut acc = RatFunc::zero(&vars);
        for ((x, y), w) in u.iter().zip(v).zip(&pair_weight) {
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(&(x * y) * w);
            }
        }
        acc
    };

    let mut done: Vec<Option<(Vec<RatFunc>, RatFunc)>> = vec![None; size];
    // (1^n) is last; walk upward in the order
    for idx in (0..size).rev() {
        let m_lambda: Vec<RatFunc> = tr.m_to_p[idx]
            .iter()
            .map(|c| RatFunc::constant(&vars, c.clone()))
            .collect();
        let mut v = m_lambda.clone();
        for (j_mu, norm) in done.iter().flatten() {
            let coef = &pair(&m_lambda, j_mu) / norm;
            if coef.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(j_mu) {
                if !y.is_zero() {
                    *x = &*x - &(&coef * y);
                }
            }
        }
        let lead = v[size - 1].clone();
        let v: Vec<RatFunc> = v.iter().map(|x| x / &lead).collect();
        let norm = pair(&v, &v);
        done[idx] = Some((v, norm));
    }

    let theta = done
        .into_iter()
        .zip(&tr.parts)
        .map(|(entry, lambda)| {
            let (v, _) = entry.expect("every row computed");
            v.into_iter()
                .map(|x| {
                    x.into_poly().unwrap_or_else(|r| {
                        panic!("theta coefficient of J_{lambda} is not a polynomial: {r}")
                    })
                })
                .collect()
        })
        .collect();
    WeightTable {
        parts: tr.parts.clone(),
        index: tr.index.clone(),
        theta,
    }
}

/// `J_lambda` in both bases.
#[derive(Clone, Debug, PartialEq)]
pub struct JackExpansion {
    pub lambda: Partition,
    pub in_p: SymFun,
    pub in_m: SymFun,
}

pub fn jack(lambda: &Partition) -> Result<JackExpansion> {
    jack_with_limit(lambda, max_weight())
}

pub fn jack_with_limit(lambda: &Partition, max: usize) -> Result<JackExpansion> {
    let table = weight_table_with_limit(lambda.weight(), max)?;
    let row = &table.theta[table.index[lambda]];
    let in_p = SymFun::from_terms(
        Basis::PowerSum,
        table
            .parts
            .iter()
            .zip(row)
            .map(|(rho, t)| (rho.clone(), RatFunc::from_poly(t.clone()))),
    );
    let in_m = in_p.convert(Basis::Monomial);
    Ok(JackExpansion {
        lambda: lambda.clone(),
        in_p,
        in_m,
    })
}

/// `theta^lambda_rho`, the coefficient of `p_rho` in `J_lambda`.
pub fn theta(lambda: &Partition, rho: &Partition) -> Result<MPoly> {
    if lambda.weight() != rho.weight() {
        return Err(JackError::WeightMismatch(lambda.clone(), rho.clone()));
    }
    Ok(weight_table(lambda.weight())?.theta(lambda, rho).clone())
}

fn part_i64(lambda: &Partition, i: usize) -> i64 {
    lambda.part(i) as i64
}

/// Pieri coefficient: `p_1 J_lambda = sum_i c_i(lambda) J_{lambda^{(i)}}`.
pub fn pieri_c(lambda: &Partition, i: usize) -> Result<RatFunc> {
    pieri_c_with(lambda, i, &alpha())
}

pub fn pieri_c_with<F: Scalar>(lambda: &Partition, i: usize, alpha: &F) -> Result<F> {
    if lambda.add_box(i).is_none() {
        return Err(JackError::InvalidMove {
            lambda: lambda.clone(),
            row: i,
        });
    }
    let l = lambda.len() as i64;
    let ii = i as i64;
    let li = part_i64(lambda, i);
    let mut acc = alpha
        .mul_ref(&alpha.int_like(li))
        .add_ref(&alpha.int_like(l - ii + 2));
    acc = alpha.one_like().div_ref(&acc);
    for j in 1..=lambda.len() + 1 {
        if j == i {
            continue;
        }
        let jj = j as i64;
        let base = alpha.mul_ref(&alpha.int_like(li - part_i64(lambda, j)));
        let num = base.add_ref(&alpha.int_like(jj - ii + 1));
        let den = base.add_ref(&alpha.int_like(jj - ii));
        acc = acc.mul_ref(&num).div_ref(&den);
    }
    Ok(acc)
}

/// Closed form of `binom(lambda, lambda_(i))`.
pub fn binom_one_box(lambda: &Partition, i: usize) -> Result<RatFunc> {
    binom_one_box_with(lambda, i, &alpha())
}

pub fn binom_one_box_with<F: Scalar>(lambda: &Partition, i: usize, alpha: &F) -> Result<F> {
    if lambda.remove_box(i).is_none() {
        return Err(JackError::InvalidMove {
            lambda: lambda.clone(),
            row: i,
        });
    }
    let l = lambda.len() as i64;
    let ii = i as i64;
    let li = part_i64(lambda, i);
    let mut acc = alpha
        .int_like(li)
        .add_ref(&alpha.int_like(l - ii).div_ref(alpha));
    for j in 1..=lambda.len() {
        if j == i {
            continue;
        }
        let jj = j as i64;
        let base = alpha.mul_ref(&alpha.int_like(li - part_i64(lambda, j)));
        let num = base.add_ref(&alpha.int_like(jj - ii - 1));
        let den = base.add_ref(&alpha.int_like(jj - ii));
        acc = acc.mul_ref(&num).div_ref(&den);
    }
    Ok(acc)
}

/// Memoized generalized binomial coefficients at one alpha (symbolic or
/// numeric), filled by the downward recurrence
/// `(|lambda| - |mu|) binom(lambda, mu) = sum_i binom(lambda, lambda_(i)) binom(lambda_(i), mu)`.
///
/// Safe to share between threads; concurrent misses may compute the same
/// entry twice, and both writers store identical values.
type Removals<F> = Arc<Vec<(Partition, F)>>;

pub struct BinomTable<F> {
    alpha: F,
    one_box: RwLock<HashMap<Partition, Removals<F>>>,
    memo: RwLock<HashMap<(Partition, Partition), F>>,
}

impl<F: AlphaScalar> BinomTable<F> {
    pub fn new(alpha: F) -> Self {
        BinomTable {
            alpha,
            one_box: RwLock::new(HashMap::new()),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.read().is_empty()
    }

    /// `(lambda_(i), binom(lambda, lambda_(i)))` for every removable box.
    pub fn removals(&self, lambda: &Partition) -> Removals<F> {
        if let Some(v) = self.one_box.read().get(lambda) {
            return v.clone();
        }
        let v: Vec<(Partition, F)> = lambda
            .box_moves()
            .remove
            .into_iter()
            .map(|(i, nu)| {
                let b = binom_one_box_with(lambda, i, &self.alpha).expect("valid removal");
                (nu, b)
            })
            .collect();
        let v = Arc::new(v);
        self.one_box
            .write()
            .entry(lambda.clone())
            .or_insert(v)
            .clone()
    }

    pub fn binom(&self, lambda: &Partition, mu: &Partition) -> Result<F> {
        if !lambda.contains(mu) {
            return Err(JackError::NotContained {
                lambda: lambda.clone(),
                mu: mu.clone(),
            });
        }
        Ok(self.value(lambda, mu))
    }

    /// `binom(lambda, mu)`, zero when `mu` is not contained in `lambda`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> F {
        if !lambda.contains(mu) {
            return self.alpha.zero_like();
        }
        if lambda == mu {
            return self.alpha.one_like();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.read().get(&key) {
            return v.clone();
        }
        let mut acc = self.alpha.zero_like();
        for (nu, b) in self.removals(lambda).iter() {
            if nu.contains(mu) {
                acc = acc.add_ref(&b.mul_ref(&self.value(nu, mu)));
            }
        }
        let diff = (lambda.weight() - mu.weight()) as i64;
        let v = acc.div_ref(&self.alpha.int_like(diff));
        self.memo.write().insert(key, v.clone());
        v
    }
}

/// Process-wide symbolic binomial table.
pub fn symbolic_binoms() -> &'static BinomTable<RatFunc> {
    static T: OnceLock<BinomTable<RatFunc>> = OnceLock::new();
    T.get_or_init(|| BinomTable::new(alpha()))
}

pub fn binom(lambda: &Partition, mu: &Partition) -> Result<RatFunc> {
    symbolic_binoms().binom(lambda, mu)
}

/// `binom(p x q, rho) = (-1)^{|rho|} alpha^{2|rho|} (-q)_rho (p/alpha)_rho / j_rho`
/// for symbolic or concrete `p`, `q`.
pub fn rect_binom(p: &RatFunc, q: &RatFunc, rho: &Partition) -> RatFunc {
    rect_binom_with(p, q, &alpha(), rho)
}

pub fn rect_binom_with<F: Scalar>(p: &F, q: &F, alpha: &F, rho: &Partition) -> F {
    let k = rho.weight();
    let minus_q = q.neg_ref();
    let p_over_a = p.div_ref(alpha);
    let mut v = raising_factorial_with(&minus_q, alpha, rho)
        .mul_ref(&raising_factorial_with(&p_over_a, alpha, rho));
    for _ in 0..2 * k {
        v = v.mul_ref(alpha);
    }
    if k % 2 == 1 {
        v = v.neg_ref();
    }
    v.div_ref(&hook_norm_with(rho, alpha))
}

/// `J_lambda(1^N) = alpha^{|lambda|} (N/alpha)_lambda`.
pub fn jack_principal(lambda: &Partition, n: &RatFunc) -> RatFunc {
    let a = alpha();
    let mut v = raising_factorial_with(&(n / &a), &a, lambda);
    for _ in 0..lambda.weight() {
        v = &v * &a;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, hook_products};
    use crate::vars::alpha_poly;
    use exactalg::{int, vars_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_jacks() {
        let a = alpha_poly();
        let one = MPoly::one(&alpha_vars());
        assert_eq!(theta(&p("1"), &p("1")).unwrap(), one);
        assert_eq!(theta(&p("2"), &p("2")).unwrap(), a);
        assert_eq!(theta(&p("2"), &p("1,1")).unwrap(), one);
        assert_eq!(theta(&p("1,1"), &p("2")).unwrap(), -&one);
        assert_eq!(theta(&p("1,1"), &p("1,1")).unwrap(), one);
        assert!(matches!(
            theta(&p("2"), &p("1")),
            Err(JackError::WeightMismatch(..))
        ));
    }

    #[test]
    fn normalization_and_second_coefficient() {
        for n in 2..=6 {
            for lambda in enumerate_partitions(n, None) {
                let ones = Partition::rectangle(n, 1);
                assert!(theta(&lambda, &ones).unwrap().is_one(), "{lambda}");
                let rho = Partition::rectangle(n - 2, 1).with_part(2);
                let lhs = RatFunc::from_poly(theta(&lambda, &rho).unwrap());
                let rhs = &alpha() * &crate::partitions::alpha_content_sum(&lambda);
                assert_eq!(lhs, rhs, "{lambda}");
            }
        }
    }

    #[test]
    fn gram_small() {
        for n in 1..=5 {
            let parts = enumerate_partitions(n, None);
            for l in &parts {
                let jl = jack(l).unwrap();
                for m in &parts {
                    let v = jl.in_p.scalar_product(&jack(m).unwrap().in_p);
                    if l == m {
                        assert_eq!(v, RatFunc::from_poly(hook_products(l).j));
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn weight_limit() {
        assert!(matches!(
            jack_with_limit(&p("3"), 2),
            Err(JackError::WeightLimitExceeded { weight: 3, max: 2 })
        ));
    }

    #[test]
    fn pieri_examples() {
        assert!(pieri_c(&Partition::empty(), 1).unwrap().is_one());
        assert!(matches!(
            pieri_c(&p("2,2"), 2),
            Err(JackError::InvalidMove { .. })
        ));
        for (pp, qq) in [(2i64, 3i64), (3, 2), (1, 4)] {
            let lam = Partition::rectangle(pp as usize, qq as usize);
            let v = alpha_vars();
            let a = alpha();
            let denom = &RatFunc::from_int(&v, pp) + &a.scale_int(qq);
            assert_eq!(
                pieri_c(&lam, 1).unwrap(),
                &RatFunc::from_int(&v, pp) / &denom
            );
            assert_eq!(
                pieri_c(&lam, pp as usize + 1).unwrap(),
                &a.scale_int(qq) / &denom
            );
        }
    }

    #[test]
    fn one_box_binomials() {
        assert!(binom_one_box(&p("1"), 1).unwrap().is_one());
        for (pp, qq) in [(2usize, 3usize), (3, 3), (4, 1)] {
            let lam = Partition::rectangle(pp, qq);
            assert_eq!(
                binom_one_box(&lam, pp).unwrap().as_constant().unwrap(),
                int((pp * qq) as i64)
            );
        }
        assert!(binom_one_box(&p("2,2"), 1).is_err());
    }

    #[test]
    fn binomial_basics() {
        let t = symbolic_binoms();
        for lam in enumerate_partitions(5, None) {
            assert!(t.binom(&lam, &lam).unwrap().is_one());
            assert!(t.binom(&lam, &Partition::empty()).unwrap().is_one());
            assert_eq!(
                t.binom(&lam, &p("1")).unwrap().as_constant().unwrap(),
                int(5)
            );
        }
        assert!(matches!(
            binom(&p("2"), &p("1,1")),
            Err(JackError::NotContained { .. })
        ));
    }

    #[test]
    fn rect_binomial_examples() {
        let vs = vars_of(&["p", "q"]);
        let (pv, qv) = (RatFunc::var(&vs, "p"), RatFunc::var(&vs, "q"));
        assert_eq!(rect_binom(&pv, &qv, &p("1")), &pv * &qv);
        assert!(rect_binom(&pv, &qv, &Partition::empty()).is_one());
        let v = alpha_vars();
        let two = RatFunc::from_int(&v, 2);
        for rho in [p("1"), p("2"), p("1,1"), p("2,1"), p("2,2")] {
            assert_eq!(
                rect_binom(&two, &two, &rho),
                binom(&p("2,2"), &rho).unwrap(),
                "{rho}"
            );
        }
        assert_eq!(
            binom(&p("2,2"), &p("1")).unwrap().as_constant().unwrap(),
            int(4)
        );
    }

    #[test]
    fn principal_specialization() {
        let vs = vars_of(&["N", "alpha"]);
        let nn = RatFunc::var(&vs, "N");
        let a = RatFunc::var(&vs, "alpha");
        assert_eq!(jack_principal(&p("1"), &nn), nn);
        assert_eq!(jack_principal(&p("2"), &nn), &nn * &(&nn + &a));
        let ratio = &jack_principal(&p("3,1"), &nn) / &jack_principal(&p("2,1"), &nn);
        assert_eq!(ratio, &nn + &a.scale_int(2));
    }

    #[test]
    fn numeric_binomials_match_symbolic() {
        let t = BinomTable::new(exactalg::ratio(3, 2));
        for rho in enumerate_partitions(3, Some(&p("3,2,1"))) {
            let num = t.binom(&p("3,2,1"), &rho).unwrap();
            let sym = binom(&p("3,2,1"), &rho)
                .unwrap()
                .eval(&[("alpha", exactalg::ratio(3, 2))])
                .unwrap()
                .as_constant()
                .unwrap();
            assert_eq!(num, sym);
        }
    }
}
