//! Multivariate gcd over the rationals by recursive content/primitive-part
//! decomposition and primitive pseudo-remainder sequences.

use crate::mpoly::MPoly;

impl MPoly {
    /// Greatest common divisor, normalized to integer content 1 with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        let (a, b) = self.align(other);
        gcd_rec(&a, &b)
    }
}

fn gcd_rec(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.vars());
    }
    let ua = a.used_var_indices();
    let ub = b.used_var_indices();
    let v = *ua.iter().chain(ub.iter()).min().unwrap();
    let in_a = ua.contains(&v);
    let in_b = ub.contains(&v);
    if !in_a {
        return gcd_rec(a, &content_in(b, v));
    }
    if !in_b {
        return gcd_rec(&content_in(a, v), b);
    }
    if a == b {
        return a.normalized();
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.divide_exact(&ca).expect("content divides");
    let pb = b.divide_exact(&cb).expect("content divides");
    let gc = gcd_rec(&ca, &cb);
    let gp = primitive_prs(pa, pb, v);
    (&gc * &gp).normalized()
}

/// Gcd of the coefficients of `a` viewed as a polynomial in variable `v`.
fn content_in(a: &MPoly, v: usize) -> MPoly {
    let mut g = MPoly::zero(a.vars());
    for c in a.coeffs_in(v).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return MPoly::one(a.vars());
        }
    }
    g
}

fn primitive_in(a: &MPoly, v: usize) -> MPoly {
    let c = content_in(a, v);
    a.divide_exact(&c).expect("content divides").normalized()
}

fn pseudo_remainder(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_at(v);
    let lb = b.coeffs_in(v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_at(v) >= db {
        let dr = r.degree_at(v);
        let lr = r.coeffs_in(v).pop().unwrap();
        r = &(&lb * &r) - &(&lr * &b.shift_in(v, dr - db));
    }
    r
}

fn primitive_prs(a: MPoly, b: MPoly, v: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_at(v) >= b.degree_at(v) {
        (a, b)
    } else {
        (b, a)
    };
    b = b.normalized();
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b.normalized();
        }
        if r.degree_at(v) == 0 {
            return MPoly::one(a.vars());
        }
        a = b;
        b = primitive_in(&r, v);
    }
}
