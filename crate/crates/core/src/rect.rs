//! The recurrence for `vartheta^{p x q}_mu` in the weight of `mu`, with the
//! shape kept symbolic (`n = pq`) and `alpha`, `beta` independent.

use std::collections::HashMap;
use std::sync::OnceLock;

use exactalg::{BigRational, MPoly};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{JackError, Result};
use crate::partitions::{PartMove, Partition};
use crate::theta::{alpha_to_beta, beta_to_alpha, negate_vars, one_part_factor_poly};
use crate::vars::{rect_vars, ALPHA, BETA, P, Q};

fn var(name: &str) -> MPoly {
    MPoly::var(&rect_vars(), name)
}

fn pq() -> MPoly {
    &var(P) * &var(Q)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectTheta {
    pub mu: Partition,
    /// Polynomial in `(p, q, alpha, beta)`.
    pub value: MPoly,
    pub beta_linked: bool,
}

impl RectTheta {
    /// The value with `beta = alpha - 1` imposed, in `(p, q, alpha)`.
    pub fn linked_value(&self) -> MPoly {
        beta_to_alpha(&self.value)
    }

    /// The value compared under the flag: linked values live in `(p, q, alpha)`.
    pub fn effective_value(&self) -> MPoly {
        if self.beta_linked {
            self.linked_value()
        } else {
            self.value.clone()
        }
    }
}

fn memo() -> &'static RwLock<HashMap<Partition, MPoly>> {
    static M: OnceLock<RwLock<HashMap<Partition, MPoly>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `vartheta_mu` for `mu` without parts 1, from the recurrence.
fn theta_rec(mu: &Partition) -> MPoly {
    if let Some(v) = memo().read().get(mu) {
        return v.clone();
    }
    let v = if mu.is_empty() {
        MPoly::one(&rect_vars())
    } else {
        let k = mu.weight();
        let bracket = bracket(mu, &|rho: &Partition| rect_hat(rho));
        (-&bracket).scale(&BigRational::new(1.into(), (k as i64).into()))
    };
    memo().write().entry(mu.clone()).or_insert(v).clone()
}

/// Value at an index that may contain parts 1, with the one-part factor
/// taken at `n = pq`.
pub fn rect_hat(rho: &Partition) -> MPoly {
    let (bar, s) = rho.strip_ones();
    let base = theta_rec(&bar);
    if s == 0 {
        base
    } else {
        &one_part_factor_poly(&pq(), rho.weight(), s) * &base
    }
}

/// `sum r m_r(mu) hat(mu_{down r})`.
pub(crate) fn down_sum(mu: &Partition, hat: &dyn Fn(&Partition) -> MPoly) -> MPoly {
    let mut acc = MPoly::zero(&rect_vars());
    for r in mu.distinct_parts() {
        let rho = mu.modify(PartMove::Down(r)).expect("part present");
        acc = &acc + &hat(&rho).scale_int((r * mu.multiplicity(r)) as i64);
    }
    acc
}

/// The bracket whose negative equals `k vartheta_mu`.
fn bracket(mu: &Partition, hat: &dyn Fn(&Partition) -> MPoly) -> MPoly {
    let vars = rect_vars();
    let parts = mu.distinct_parts();
    let mut a = MPoly::zero(&vars);
    for &r in &parts {
        for &s in &parts {
            let ms = mu.multiplicity(s) - usize::from(r == s);
            let c = r * s * mu.multiplicity(r) * ms;
            if c > 0 {
                let rho = mu.modify(PartMove::DownPair(r, s)).expect("parts present");
                a = &a + &hat(&rho).scale_int(c as i64);
            }
        }
    }
    let mut b = MPoly::zero(&vars);
    let mut d = MPoly::zero(&vars);
    for &r in &parts {
        let rm = (r * mu.multiplicity(r)) as i64;
        let down = hat(&mu.modify(PartMove::Down(r)).expect("part present"));
        b = &b + &down.scale_int((r as i64 - 1) * rm);
        for i in 1..r.saturating_sub(1) {
            let rho = mu
                .modify(PartMove::UpPair(i, r - i - 1))
                .expect("part present");
            d = &d + &hat(&rho).scale_int(rm);
        }
    }
    let c = down_sum(mu, hat);
    let shift = &var(P) - &(&var(ALPHA) * &var(Q));
    &(&(&a + &(&var(BETA) * &b)) + &(&shift * &c)) + &(&var(ALPHA) * &d)
}

pub fn rect_recurrence(mu: &Partition, beta_linked: bool) -> Result<RectTheta> {
    if mu.multiplicity(1) > 0 {
        return Err(JackError::MuHasOnes(mu.clone()));
    }
    Ok(RectTheta {
        mu: mu.clone(),
        value: theta_rec(mu),
        beta_linked,
    })
}

/// Shapes adjacent to the rectangle `p x q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    /// `(q+1, q, .., q)`
    AddRowTop,
    /// `(q, .., q, 1)`
    AddRowBottom,
    /// `(q, .., q, q-1)`
    RemoveBox,
}

/// `vartheta_mu` at a shape one box away from `p x q`, in `(p, q, alpha, beta)`.
pub fn rect_boundary(mu: &Partition, which: Which, beta_linked: bool) -> Result<MPoly> {
    let base = rect_recurrence(mu, beta_linked)?.value;
    let c = down_sum(mu, &rect_hat);
    let v = match which {
        Which::AddRowTop => &base + &(&var(ALPHA) * &c).divide_exact(&var(P))?,
        Which::AddRowBottom => &base - &c.divide_exact(&var(Q))?,
        Which::RemoveBox => {
            let k = MPoly::from_int(&rect_vars(), mu.weight() as i64);
            let scaled = &(&pq() - &k) * &base;
            scaled.divide_exact(&pq())?
        }
    };
    let v = v.with_vars(&rect_vars())?;
    Ok(if beta_linked { beta_to_alpha(&v) } else { v })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Divisibility {
    pub mu: Partition,
    pub p: usize,
    pub q: usize,
    /// `vartheta^{p x q}_mu(alpha, beta)`.
    pub value: MPoly,
    pub divisible: bool,
    pub quotient: Option<MPoly>,
}

/// Divides the independent-`beta` value at concrete `(p, q)` by
/// `alpha - beta - 1`.
pub fn extension_divisibility(mu: &Partition, p: usize, q: usize) -> Result<Divisibility> {
    let v = rect_recurrence(mu, false)?.value;
    let value = v.eval(&[
        (P, BigRational::from_integer(p.into())),
        (Q, BigRational::from_integer(q.into())),
    ])?;
    let vars = exactalg::vars_of(&[ALPHA, BETA]);
    let value = value.with_vars(&vars)?;
    let factor = &(&MPoly::var(&vars, ALPHA) - &MPoly::var(&vars, BETA)) - &MPoly::one(&vars);
    let quotient = value.divide_exact(&factor).ok();
    Ok(Divisibility {
        mu: mu.clone(),
        p,
        q,
        value,
        divisible: quotient.is_some(),
        quotient,
    })
}

/// `(-1)^k vartheta_mu` with `q -> -q` and `alpha -> beta + 1`, in `(p, q, beta)`.
pub fn positive_form(mu: &Partition) -> Result<MPoly> {
    let v = rect_recurrence(mu, true)?.linked_value();
    let f = negate_vars(&alpha_to_beta(&v), &[Q], mu.weight());
    Ok(f.with_vars(&exactalg::vars_of(&[P, Q, BETA]))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::theta_hat;
    use exactalg::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn shift(j: i64) -> MPoly {
        &(&var(P) - &(&var(ALPHA) * &var(Q))) + &var(BETA).scale_int(j)
    }

    fn th(s: &str) -> MPoly {
        rect_recurrence(&p(s), false).unwrap().value
    }

    #[test]
    fn first_rows() {
        let n = pq();
        let t2 = th("2");
        assert_eq!(-&t2, &n * &shift(1));
        let one = MPoly::one(&rect_vars());
        let rhs3 = &(&t2 * &shift(2)) + &(&var(ALPHA) * &(&n * &(&n - &one)));
        assert_eq!(-&th("3"), rhs3);
        let two = MPoly::from_int(&rect_vars(), 2);
        assert_eq!(
            -&th("2,2"),
            &th("3").scale_int(2) + &(&(&shift(1) * &(&n - &two)) * &t2)
        );
    }

    #[test]
    fn concrete_rectangles_match_binomial_route() {
        for (pp, qq) in [(2usize, 3usize), (3, 3)] {
            for mu in ["2", "3", "2,2", "4"] {
                let mu = p(mu);
                let v = rect_recurrence(&mu, true).unwrap().linked_value();
                let v = v.eval(&[(P, int(pp as i64)), (Q, int(qq as i64))]).unwrap();
                let direct = theta_hat(&Partition::rectangle(pp, qq), &mu).unwrap();
                assert_eq!(v, direct, "{pp}x{qq} {mu}");
            }
        }
    }

    #[test]
    fn boundary_shapes() {
        let mu = p("2");
        let t2 = th("2");
        let two = MPoly::from_int(&rect_vars(), 2);
        let expected = (&(&pq() - &two) * &t2).divide_exact(&pq()).unwrap();
        assert_eq!(
            rect_boundary(&mu, Which::RemoveBox, false).unwrap(),
            expected
        );
        assert!(rect_boundary(&Partition::empty(), Which::AddRowTop, false)
            .unwrap()
            .is_one());
        // (q, .., q, 1) at p = 2, q = 3
        let v = beta_to_alpha(&rect_boundary(&mu, Which::AddRowBottom, false).unwrap())
            .eval(&[(P, int(2)), (Q, int(3))])
            .unwrap();
        assert_eq!(v, theta_hat(&p("3,3,1"), &mu).unwrap());
    }

    #[test]
    fn extension_values() {
        let d = extension_divisibility(&p("2"), 1, 1).unwrap();
        assert!(d.divisible);
        assert!(d.quotient.unwrap().is_one());
    }
}
