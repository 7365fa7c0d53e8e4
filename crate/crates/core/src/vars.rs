//! Shared variable sets. Reusing one `Arc` per set keeps arithmetic on the
//! fast path where no alignment is needed.

use std::sync::OnceLock;

use exactalg::{vars_of, MPoly, RatFunc, Vars};

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";
pub const P: &str = "p";
pub const Q: &str = "q";
pub const N: &str = "N";

/// `(alpha)`
pub fn alpha_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars_of(&[ALPHA])).clone()
}

/// `(p, q, alpha, beta)`
pub fn rect_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars_of(&[P, Q, ALPHA, BETA])).clone()
}

/// `(p, q, alpha)`
pub fn pqa_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars_of(&[P, Q, ALPHA])).clone()
}

pub fn alpha() -> RatFunc {
    RatFunc::var(&alpha_vars(), ALPHA)
}

pub fn alpha_poly() -> MPoly {
    MPoly::var(&alpha_vars(), ALPHA)
}

/// Names `p1..pm` followed by `q1..qm`.
pub fn multirect_names(m: usize) -> (Vec<String>, Vec<String>) {
    if m == 1 {
        return (vec![P.to_string()], vec![Q.to_string()]);
    }
    (
        (1..=m).map(|i| format!("p{i}")).collect(),
        (1..=m).map(|i| format!("q{i}")).collect(),
    )
}
