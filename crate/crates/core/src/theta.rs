//! Normalized coefficients `vartheta^lambda_mu = z_mu theta^lambda_{mu,1^{n-k}}`
//! and their polynomial dependence on (multi)rectangular shapes.
//!
//! For `m_1(mu) = 0` the value at `lambda` is
//! `z_mu sum_{|rho| = k} binom(lambda, rho) theta^rho_mu`, so only Jack
//! expansions of weight `k = |mu|` are needed however large `lambda` is.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use exactalg::{BigInt, BigRational, CoefficientAudit, MPoly, RatFunc};
use num_traits::{One, Zero};
use parking_lot::RwLock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{JackError, Result};
use crate::interp::Grid;
use crate::jack::{max_weight, rect_binom_with, weight_table, AlphaScalar, BinomTable};
use crate::partitions::{enumerate_partitions, hook_norm_with, raising_factorial_with, Partition};
use crate::vars::{multirect_names, pqa_vars, ALPHA, BETA, P, Q};

fn check_mu(mu: &Partition) -> Result<()> {
    if mu.multiplicity(1) > 0 {
        return Err(JackError::MuHasOnes(mu.clone()));
    }
    if mu.weight() > max_weight() {
        return Err(JackError::WeightLimitExceeded {
            weight: mu.weight(),
            max: max_weight(),
        });
    }
    Ok(())
}

/// Precomputed `z_mu theta^rho_mu` for all `|rho| = |mu|`, evaluated in the
/// field of a binomial table; evaluation at any `lambda` is then a single
/// weighted sum of binomial coefficients.
pub struct ThetaHatEval<F> {
    table: Arc<BinomTable<F>>,
    k: usize,
    terms: Vec<(Partition, F)>,
}

impl<F: AlphaScalar> ThetaHatEval<F> {
    pub fn new(table: Arc<BinomTable<F>>, mu: &Partition) -> Result<Self> {
        check_mu(mu)?;
        let k = mu.weight();
        let wt = weight_table(k)?;
        let z = BigRational::from(mu.z());
        let a = table.alpha().clone();
        let terms = wt
            .parts
            .iter()
            .filter_map(|rho| {
                let t = wt.theta(rho, mu);
                (!t.is_zero()).then(|| (rho.clone(), F::from_alpha_poly(&t.scale(&z), &a)))
            })
            .collect();
        Ok(ThetaHatEval { table, k, terms })
    }

    /// `vartheta^lambda_mu`; zero when `|lambda| < |mu|`.
    pub fn eval(&self, lambda: &Partition) -> F {
        let mut acc = self.table.alpha().zero_like();
        if lambda.weight() < self.k {
            return acc;
        }
        for (rho, c) in &self.terms {
            if lambda.contains(rho) {
                acc = acc.add_ref(&self.table.value(lambda, rho).mul_ref(c));
            }
        }
        acc
    }
}

fn symbolic_table() -> Arc<BinomTable<RatFunc>> {
    static T: OnceLock<Arc<BinomTable<RatFunc>>> = OnceLock::new();
    T.get_or_init(|| Arc::new(BinomTable::new(crate::vars::alpha())))
        .clone()
}

fn symbolic_evaluator(mu: &Partition) -> Result<Arc<ThetaHatEval<RatFunc>>> {
    static C: OnceLock<RwLock<HashMap<Partition, Arc<ThetaHatEval<RatFunc>>>>> = OnceLock::new();
    let cache = C.get_or_init(Default::default);
    if let Some(e) = cache.read().get(mu) {
        return Ok(e.clone());
    }
    let e = Arc::new(ThetaHatEval::new(symbolic_table(), mu)?);
    Ok(cache.write().entry(mu.clone()).or_insert(e).clone())
}

fn into_alpha_poly(v: RatFunc) -> Result<MPoly> {
    v.into_poly()
        .map_err(|r| JackError::NotPolynomial(r.to_string()))
}

/// `vartheta^lambda_mu` through the binomial route.
pub fn theta_hat(lambda: &Partition, mu: &Partition) -> Result<MPoly> {
    check_mu(mu)?;
    if mu.weight() > lambda.weight() {
        return Err(JackError::MuTooHeavy {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    into_alpha_poly(symbolic_evaluator(mu)?.eval(lambda))
}

/// `z_mu theta^lambda_{mu,1^{n-k}}` read directly off the expansion of
/// `J_lambda`; requires `|lambda|` within the configured maximum weight.
pub fn theta_hat_direct(lambda: &Partition, mu: &Partition) -> Result<MPoly> {
    let n = lambda.weight();
    if mu.weight() > n {
        return Err(JackError::MuTooHeavy {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    let rho = mu.with_ones(n - mu.weight());
    Ok(weight_table(n)?
        .theta(lambda, &rho)
        .scale(&BigRational::from(mu.z())))
}

/// `(n - w + s)! / (n - w)!`: the weight attached to an index of weight `w`
/// carrying `s` parts equal to 1, for `lambda` of weight `n`.
pub fn one_part_factor(n: usize, w: usize, s: usize) -> BigInt {
    if w > n {
        return BigInt::zero();
    }
    (1..=s).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - w + t))
}

/// Same factor with symbolic `n`: `prod_{t=1}^{s} (n - w + t)`.
pub fn one_part_factor_poly(n: &MPoly, w: usize, s: usize) -> MPoly {
    let vars = n.vars().clone();
    (1..=s).fold(MPoly::one(&vars), |acc, t| {
        &acc * &(n + &MPoly::from_int(&vars, t as i64 - w as i64))
    })
}

/// `vartheta^lambda` at an index that may contain parts 1:
/// with `s = m_1(rho)` and `bar rho` its other parts, the value is
/// `(n - |rho| + s)!/(n - |rho|)! * vartheta^lambda_{bar rho}`.
pub fn theta_hat_general(lambda: &Partition, rho: &Partition) -> Result<MPoly> {
    let n = lambda.weight();
    if rho.weight() > n {
        return Err(JackError::RhoTooHeavy {
            lambda: lambda.clone(),
            rho: rho.clone(),
        });
    }
    let (bar, s) = rho.strip_ones();
    let base = theta_hat(lambda, &bar)?;
    Ok(base.scale(&BigRational::from(one_part_factor(n, rho.weight(), s))))
}

/// How [`rect_theta_symbolic`] obtains the polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RectMode {
    Interpolate,
    ClosedForm,
}

/// `vartheta^{p x q}_mu` as a polynomial in `(p_1..p_m, q_1..q_m, beta)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectPoly {
    pub m: usize,
    pub mu: Partition,
    pub poly: MPoly,
}

/// Verdict block of a coefficient audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub nonneg: bool,
    pub integer: bool,
    pub unit: bool,
}

impl From<&CoefficientAudit> for AuditSummary {
    fn from(a: &CoefficientAudit) -> Self {
        AuditSummary {
            nonneg: a.all_nonnegative,
            integer: a.all_integer,
            unit: a.has_unit_coefficient,
        }
    }
}

impl RectPoly {
    /// `(-1)^k` times the polynomial with every `q_i` replaced by `-q_i`.
    pub fn positive_form(&self) -> MPoly {
        let (_, qs) = multirect_names(self.m);
        let qrefs: Vec<&str> = qs.iter().map(|s| s.as_str()).collect();
        negate_vars(&self.poly, &qrefs, self.mu.weight())
    }

    pub fn audit(&self) -> CoefficientAudit {
        self.positive_form().coefficient_audit()
    }
}

/// `(-1)^k f(.., -q, ..)` for the listed variables.
pub fn negate_vars(f: &MPoly, names: &[&str], k: usize) -> MPoly {
    let bindings: Vec<(&str, MPoly)> = names
        .iter()
        .filter(|n| f.var_index(n).is_some())
        .map(|&n| (n, -&MPoly::var(f.vars(), n)))
        .collect();
    let g = if bindings.is_empty() {
        f.clone()
    } else {
        f.substitute(&bindings).expect("variables present")
    };
    let g = g.with_vars(f.vars()).expect("same variables");
    if k % 2 == 1 {
        -&g
    } else {
        g
    }
}

/// Replaces alpha by `beta + 1`.
pub fn alpha_to_beta(f: &MPoly) -> MPoly {
    if f.var_index(ALPHA).is_none() {
        return f.clone();
    }
    let vars = exactalg::vars_of(&[BETA]);
    let image = &MPoly::var(&vars, BETA) + &MPoly::one(&vars);
    f.substitute(&[(ALPHA, image)]).expect("alpha present")
}

/// Replaces beta by `alpha - 1`.
pub fn beta_to_alpha(f: &MPoly) -> MPoly {
    if f.var_index(BETA).is_none() {
        return f.clone();
    }
    let vars = exactalg::vars_of(&[ALPHA]);
    let image = &MPoly::var(&vars, ALPHA) - &MPoly::one(&vars);
    f.substitute(&[(BETA, image)]).expect("beta present")
}

fn rect_output_vars(m: usize) -> exactalg::Vars {
    let (ps, qs) = multirect_names(m);
    let mut names: Vec<&str> = ps.iter().map(|s| s.as_str()).collect();
    names.extend(qs.iter().map(|s| s.as_str()));
    names.push(BETA);
    exactalg::vars_of(&names)
}

pub fn rect_theta_symbolic(m: usize, mu: &Partition, mode: RectMode) -> Result<RectPoly> {
    check_mu(mu)?;
    if m == 0 {
        return Err(JackError::Unsupported(
            "at least one rectangle is required".into(),
        ));
    }
    let in_alpha = match mode {
        RectMode::ClosedForm => {
            if m != 1 {
                return Err(JackError::Unsupported(
                    "the closed form covers a single rectangle only".into(),
                ));
            }
            closed_form_m1(mu)?
        }
        RectMode::Interpolate => interpolate_multirect(m, mu)?,
    };
    let poly = alpha_to_beta(&in_alpha)
        .with_vars(&rect_output_vars(m))
        .map_err(JackError::from)?;
    Ok(RectPoly {
        m,
        mu: mu.clone(),
        poly,
    })
}

/// Interpolated [`RectPoly`] for several indices, sharing evaluations
/// between indices of equal weight.
pub fn rect_theta_family(m: usize, mus: &[Partition]) -> Result<Vec<Result<RectPoly>>> {
    let vars = rect_output_vars(m);
    Ok(interpolate_family(m, mus)?
        .into_iter()
        .zip(mus)
        .map(|(r, mu)| {
            let poly = alpha_to_beta(&r?).with_vars(&vars)?;
            Ok(RectPoly {
                m,
                mu: mu.clone(),
                poly,
            })
        })
        .collect())
}

/// `vartheta^{p x q}_mu = z_mu sum_{|rho|=k} binom(p x q, rho) theta^rho_mu`
/// with the closed-form rectangular binomials; a polynomial in `(p, q, alpha)`.
pub fn closed_form_m1(mu: &Partition) -> Result<MPoly> {
    check_mu(mu)?;
    let vars = pqa_vars();
    let (p, q, a) = (
        RatFunc::var(&vars, P),
        RatFunc::var(&vars, Q),
        RatFunc::var(&vars, ALPHA),
    );
    let k = mu.weight();
    let wt = weight_table(k)?;
    let z = BigRational::from(mu.z());
    let mut acc = RatFunc::zero(&vars);
    for rho in &wt.parts {
        let t = wt.theta(rho, mu);
        if t.is_zero() {
            continue;
        }
        let t = RatFunc::from_poly(t.with_vars(&vars)?);
        acc = &acc + &(&rect_binom_with(&p, &q, &a, rho) * &t);
    }
    let acc = acc.scale(&z);
    acc.into_poly()
        .map(|f| f.with_vars(&vars).expect("p, q, alpha"))
        .map_err(|r| JackError::NotPolynomial(r.to_string()))
}

/// `alpha^{2k-1} z_mu sum_{|rho|=k} (p)_rho (q)_rho theta^rho_mu / j_rho`,
/// a polynomial in `(p, q, alpha)`; 1 for the empty partition.
pub fn theorem2_sum(mu: &Partition) -> Result<MPoly> {
    check_mu(mu)?;
    let vars = pqa_vars();
    if mu.is_empty() {
        return Ok(MPoly::one(&vars));
    }
    let (p, q, a) = (
        RatFunc::var(&vars, P),
        RatFunc::var(&vars, Q),
        RatFunc::var(&vars, ALPHA),
    );
    let k = mu.weight();
    let wt = weight_table(k)?;
    let mut acc = RatFunc::zero(&vars);
    for rho in &wt.parts {
        let t = wt.theta(rho, mu);
        if t.is_zero() {
            continue;
        }
        let t = RatFunc::from_poly(t.with_vars(&vars)?);
        let term =
            &(&raising_factorial_with(&p, &a, rho) * &raising_factorial_with(&q, &a, rho)) * &t;
        acc = &acc + &(&term / &hook_norm_with(rho, &a));
    }
    let acc = &acc.scale(&BigRational::from(mu.z())) * &a.pow(2 * k as u32 - 1);
    acc.into_poly()
        .map(|f| f.with_vars(&vars).expect("p, q, alpha"))
        .map_err(|r| JackError::NotPolynomial(r.to_string()))
}

/// Interpolation nodes for `m` rectangles at per-variable degree `d` and
/// alpha-degree `da`: `p_i in 1..=d+1`, `q_i` in disjoint descending bands
/// of width `d+1`, alpha in `1..=da+1`. Axis order `p_1..p_m, q_1..q_m, alpha`.
fn grid_nodes(m: usize, d: usize, da: usize) -> Vec<Vec<BigRational>> {
    let w = d + 1;
    let mut nodes = Vec::with_capacity(2 * m + 1);
    for _ in 0..m {
        nodes.push(
            (1..=w)
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        );
    }
    for i in 1..=m {
        let lo = (m - i) * w + 1;
        nodes.push(
            (lo..lo + w)
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        );
    }
    nodes.push(
        (1..=da + 1)
            .map(|v| BigRational::from_integer(v.into()))
            .collect(),
    );
    nodes
}

fn to_usize(x: &BigRational) -> usize {
    x.to_integer().try_into().expect("small positive integer")
}

fn shape_at(m: usize, point: &[BigRational]) -> Partition {
    let ps: Vec<usize> = point[..m].iter().map(to_usize).collect();
    let qs: Vec<usize> = point[m..2 * m].iter().map(to_usize).collect();
    Partition::multirectangle(&ps, &qs)
}

/// Values of `vartheta_mu` for each `mu` on every `(p, q)` point, for one
/// numeric alpha; all `mu` share one binomial table.
fn eval_at_alpha(
    mus: &[&Partition],
    alpha: &BigRational,
    shapes: &[Partition],
) -> Result<Vec<Vec<BigRational>>> {
    let table = Arc::new(BinomTable::new(alpha.clone()));
    let evs: Vec<ThetaHatEval<BigRational>> = mus
        .iter()
        .map(|mu| ThetaHatEval::new(table.clone(), mu))
        .collect::<Result<_>>()?;
    // heavy shapes first so the work spreads evenly
    let mut order: Vec<usize> = (0..shapes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(shapes[i].weight()));
    let mut vals: Vec<(usize, Vec<BigRational>)> = order
        .par_iter()
        .map(|&i| (i, evs.iter().map(|ev| ev.eval(&shapes[i])).collect()))
        .collect();
    vals.sort_by_key(|(i, _)| *i);
    let mut out = vec![Vec::with_capacity(shapes.len()); mus.len()];
    for (_, row) in vals {
        for (col, v) in out.iter_mut().zip(row) {
            col.push(v);
        }
    }
    Ok(out)
}

fn multirect_alpha_vars(m: usize) -> exactalg::Vars {
    let (ps, qs) = multirect_names(m);
    let mut names: Vec<&str> = ps.iter().map(|s| s.as_str()).collect();
    names.extend(qs.iter().map(|s| s.as_str()));
    names.push(ALPHA);
    exactalg::vars_of(&names)
}

/// One interpolation pass for several `mu` of equal weight, sharing the
/// `(p, q)` grid and the binomial tables; `extra` raises every degree bound.
fn interpolate_once(m: usize, mus: &[Partition], extra: usize) -> Result<Vec<Result<MPoly>>> {
    let k = mus[0].weight();
    let d = k + extra;
    let das: Vec<usize> = mus.iter().map(|mu| k - mu.len() + extra).collect();
    let max_da = das.iter().copied().max().unwrap_or(0);
    let nodes = grid_nodes(m, d, max_da);
    let pq_nodes = &nodes[..2 * m];
    let alphas = &nodes[2 * m];
    let shapes: Vec<Partition> = Grid::points(pq_nodes)
        .iter()
        .map(|pt| shape_at(m, pt))
        .collect();
    // columns[j][a] holds the values of mus[j] at alpha node a
    let mut columns: Vec<Vec<Vec<BigRational>>> = vec![Vec::new(); mus.len()];
    for (a, alpha) in alphas.iter().enumerate() {
        let active: Vec<usize> = (0..mus.len()).filter(|&j| a <= das[j]).collect();
        let refs: Vec<&Partition> = active.iter().map(|&j| &mus[j]).collect();
        for (j, col) in active
            .into_iter()
            .zip(eval_at_alpha(&refs, alpha, &shapes)?)
        {
            columns[j].push(col);
        }
    }
    let vars = multirect_alpha_vars(m);
    Ok(mus
        .iter()
        .zip(columns)
        .zip(&das)
        .map(|((mu, per_alpha), &da)| {
            // storage order has alpha fastest
            let mut values = Vec::with_capacity(shapes.len() * (da + 1));
            for i in 0..shapes.len() {
                for col in &per_alpha {
                    values.push(col[i].clone());
                }
            }
            let mut own = nodes[..2 * m].to_vec();
            own.push(alphas[..=da].to_vec());
            let poly = Grid { nodes: own, values }.reconstruct(&vars);
            validate_off_grid(m, mu, d, &poly).map(|_| poly)
        })
        .collect())
}

/// Compares the reconstruction with direct evaluations at five seeded
/// points with non-integer or out-of-range coordinates, plus one point with
/// two equal column lengths.
fn validate_off_grid(m: usize, mu: &Partition, d: usize, poly: &MPoly) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a61_636b ^ (m as u64) << 8 ^ mu.weight() as u64);
    let fractions = [(1, 2), (3, 2), (5, 3), (7, 2), (2, 5), (9, 4)];
    let (ps, qs) = multirect_names(m);
    let mut points: Vec<(Vec<usize>, Vec<usize>, BigRational)> = Vec::new();
    for t in 0..5 {
        let pv: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=d + 2)).collect();
        // strictly decreasing column lengths
        let mut qv: Vec<usize> = Vec::with_capacity(m);
        let mut top = m + 3;
        for i in 0..m {
            let lowest = m - i;
            let v = rng.gen_range(lowest..=top);
            qv.push(v);
            top = v - 1;
        }
        let alpha = if t == 4 {
            BigRational::from_integer((d + 3).into())
        } else {
            let (n, dd) = fractions[rng.gen_range(0..fractions.len())];
            exactalg::ratio(n, dd)
        };
        points.push((pv, qv, alpha));
    }
    if m >= 2 {
        let mut qv = vec![0; m];
        qv[0] = 2;
        for q in qv.iter_mut().skip(1) {
            *q = 1;
        }
        qv[1] = 2;
        points.push((vec![1; m], qv, exactalg::ratio(5, 2)));
    }
    for (pv, qv, alpha) in points {
        let shape = Partition::multirectangle(&pv, &qv);
        let table = Arc::new(BinomTable::new(alpha.clone()));
        let direct = ThetaHatEval::new(table, mu)?.eval(&shape);
        let mut binding: Vec<(&str, BigRational)> = Vec::new();
        for (name, v) in ps.iter().zip(&pv).chain(qs.iter().zip(&qv)) {
            binding.push((name.as_str(), BigRational::from_integer((*v).into())));
        }
        binding.push((ALPHA, alpha.clone()));
        let fitted = poly.eval(&binding)?.as_constant().unwrap_or_default();
        if fitted != direct {
            return Err(JackError::DegreeBoundViolated {
                point: format!("p={pv:?} q={qv:?} alpha={alpha}"),
            });
        }
    }
    Ok(())
}

/// Reconstructs `vartheta^{p x q}_mu` in `(p_1..p_m, q_1..q_m, alpha)` from
/// numeric evaluations; the degree bounds are raised by one once if the
/// off-grid check fails.
pub fn interpolate_multirect(m: usize, mu: &Partition) -> Result<MPoly> {
    interpolate_family(m, std::slice::from_ref(mu))?
        .pop()
        .expect("one result")
}

/// [`interpolate_multirect`] for several indices at once; indices of equal
/// weight share their evaluations.
pub fn interpolate_family(m: usize, mus: &[Partition]) -> Result<Vec<Result<MPoly>>> {
    for mu in mus {
        check_mu(mu)?;
    }
    if m == 0 {
        return Err(JackError::Unsupported(
            "at least one rectangle is required".into(),
        ));
    }
    let mut out: Vec<Option<Result<MPoly>>> = vec![None; mus.len()];
    let mut weights: Vec<usize> = mus.iter().map(|mu| mu.weight()).collect();
    weights.sort_unstable();
    weights.dedup();
    for w in weights {
        let idx: Vec<usize> = (0..mus.len()).filter(|&i| mus[i].weight() == w).collect();
        let group: Vec<Partition> = idx.iter().map(|&i| mus[i].clone()).collect();
        for (i, r) in idx.into_iter().zip(interpolate_once(m, &group, 0)?) {
            let r = match r {
                Err(JackError::DegreeBoundViolated { .. }) => {
                    interpolate_once(m, std::slice::from_ref(&mus[i]), 1)?
                        .pop()
                        .expect("one result")
                }
                other => other,
            };
            out[i] = Some(r);
        }
    }
    Ok(out.into_iter().map(|r| r.expect("filled")).collect())
}

/// Partitions of weight `2..=max` without parts 1, in canonical order.
pub fn conjecture_indices(max: usize) -> Vec<Partition> {
    (2..=max)
        .flat_map(|n| enumerate_partitions(n, None))
        .filter(|p| p.multiplicity(1) == 0)
        .collect()
}
