//! Published closed expressions used as regression targets: the first
//! relations generated by the rectangular recurrence, the positive forms for
//! one and two rectangles, the rising-factorial sum for `mu = (3,2)`, and the values
//! of the two-parameter extension below the rectangle weight.

use exactalg::{vars_of, MPoly, Vars};

use crate::partitions::Partition;
use crate::vars::{rect_vars, ALPHA, BETA, P, Q};

/// Small builder over a fixed variable set.
struct B(Vars);

impl B {
    fn v(&self, name: &str) -> MPoly {
        MPoly::var(&self.0, name)
    }
    fn c(&self, c: i64) -> MPoly {
        MPoly::from_int(&self.0, c)
    }
}

fn sum(xs: &[MPoly]) -> MPoly {
    xs.iter().skip(1).fold(xs[0].clone(), |a, b| &a + b)
}

fn prod(xs: &[&MPoly]) -> MPoly {
    xs.iter().skip(1).fold(xs[0].clone(), |a, b| &a * *b)
}

fn part(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

/// One relation `lhs_coef * vartheta_mu = sum coef * vartheta_rho + free`
/// in `(p, q, alpha, beta)`.
pub struct TableRow {
    pub mu: Partition,
    pub lhs_coef: i64,
    pub terms: Vec<(MPoly, Partition)>,
    pub free: MPoly,
}

/// The recurrence relations for `|mu| <= 6`, written with `n = pq` and
/// `s_j = p - alpha q + j beta`.
pub fn recurrence_table() -> Vec<TableRow> {
    let b = B(rect_vars());
    let (p, q, a, be) = (b.v(P), b.v(Q), b.v(ALPHA), b.v(BETA));
    let n = &p * &q;
    let s = |j: i64| &(&p - &(&a * &q)) + &be.scale_int(j);
    let nm = |j: i64| &n - &b.c(j);
    let zero = b.c(0);
    let row = |mu: &str, lhs: i64, terms: Vec<(MPoly, &str)>, free: MPoly| TableRow {
        mu: part(mu),
        lhs_coef: lhs,
        terms: terms.into_iter().map(|(c, r)| (c, part(r))).collect(),
        free,
    };
    vec![
        row("2", -1, vec![], &n * &s(1)),
        row("3", -1, vec![(s(2), "2")], prod(&[&a, &n, &nm(1)])),
        row(
            "4",
            -1,
            vec![(s(3), "3"), (prod(&[&a, &nm(2)]).scale_int(2), "2")],
            zero.clone(),
        ),
        row(
            "2,2",
            -1,
            vec![(b.c(2), "3"), (&s(1) * &nm(2), "2")],
            zero.clone(),
        ),
        row(
            "5",
            -1,
            vec![
                (s(4), "4"),
                (prod(&[&a, &nm(3)]).scale_int(2), "3"),
                (a.clone(), "2,2"),
            ],
            zero.clone(),
        ),
        row(
            "3,2",
            -5,
            vec![
                (b.c(12), "4"),
                (prod(&[&s(1), &nm(3)]).scale_int(2), "3"),
                (s(2).scale_int(3), "2,2"),
                (prod(&[&a, &nm(2), &nm(3)]).scale_int(3), "2"),
            ],
            zero.clone(),
        ),
        row(
            "6",
            -1,
            vec![
                (s(5), "5"),
                (prod(&[&a, &nm(4)]).scale_int(2), "4"),
                (a.scale_int(2), "3,2"),
            ],
            zero.clone(),
        ),
        row(
            "4,2",
            -6,
            vec![
                (b.c(16), "5"),
                (prod(&[&s(1), &nm(4)]).scale_int(2), "4"),
                (s(3).scale_int(4), "3,2"),
                (prod(&[&a, &nm(4)]).scale_int(8), "2,2"),
            ],
            zero.clone(),
        ),
        row(
            "3,3",
            -1,
            vec![
                (b.c(3), "5"),
                (s(2), "3,2"),
                (prod(&[&a, &nm(3), &nm(4)]), "3"),
            ],
            zero.clone(),
        ),
        row(
            "2,2,2",
            -1,
            vec![(b.c(4), "3,2"), (&s(1) * &nm(4), "2,2")],
            zero,
        ),
    ]
}

/// `(-1)^k vartheta^{p x q}_mu` with `q -> -q`, in `(p, q, alpha, beta)`,
/// for `mu = (2), (3), (4), (2,2)`.
pub fn single_rectangle_forms() -> Vec<(Partition, MPoly)> {
    let b = B(rect_vars());
    let (p, q, a, be) = (b.v(P), b.v(Q), b.v(ALPHA), b.v(BETA));
    let n = &p * &q;
    let t = |j: i64| &(&(&a * &q) + &p) + &be.scale_int(j);
    let np = |j: i64| &n + &b.c(j);
    let f2 = &n * &t(1);
    let f3 = &(&n * &(&t(1) * &t(2))) + &prod(&[&a, &n, &np(1)]);
    let inner = &(&t(1) * &t(2)) + &(&a * &np(1));
    let f4 = &prod(&[&n, &inner, &t(3)]) + &prod(&[&a, &n, &np(2), &t(1)]).scale_int(2);
    let f22 = sum(&[
        prod(&[&n, &t(1), &t(2)]).scale_int(2),
        prod(&[&a, &n, &np(1)]).scale_int(2),
        prod(&[&n, &np(2), &t(1), &t(1)]),
    ]);
    vec![
        (part("2"), f2),
        (part("3"), f3),
        (part("4"), f4),
        (part("2,2"), f22),
    ]
}

/// Builds a polynomial from `(coefficient, [(variable, exponent)])` terms.
fn from_monomials(vars: &Vars, terms: &[(i64, &[(&str, u32)])]) -> MPoly {
    let mut acc = MPoly::zero(vars);
    for (c, mono) in terms {
        let mut t = MPoly::from_int(vars, *c);
        for (name, e) in mono.iter() {
            t = &t * &MPoly::var(vars, name).pow(*e);
        }
        acc = &acc + &t;
    }
    acc
}

pub fn two_rectangle_vars() -> Vars {
    vars_of(&["p1", "p2", "q1", "q2", BETA])
}

/// `(-1)^k vartheta_mu` with `q_i -> -q_i` for two rectangles, in
/// `(p1, p2, q1, q2, beta)`, for `mu = (2)` and `(3)`.
pub fn two_rectangle_forms() -> Vec<(Partition, MPoly)> {
    let v = two_rectangle_vars();
    let m2: &[(i64, &[(&str, u32)])] = &[
        (1, &[("p1", 1), ("q1", 2)]),
        (1, &[("p2", 1), ("q2", 2)]),
        (2, &[("p1", 1), ("p2", 1), ("q2", 1)]),
        (1, &[("p1", 2), ("q1", 1)]),
        (1, &[("p2", 2), ("q2", 1)]),
        (1, &[(BETA, 1), ("p1", 1), ("q1", 1)]),
        (1, &[(BETA, 1), ("p2", 1), ("q2", 1)]),
        (1, &[(BETA, 1), ("p1", 1), ("q1", 2)]),
        (1, &[(BETA, 1), ("p2", 1), ("q2", 2)]),
    ];
    let m3: &[(i64, &[(&str, u32)])] = &[
        (1, &[("p1", 1), ("q1", 1)]),
        (1, &[("p2", 1), ("q2", 1)]),
        (1, &[("p1", 1), ("q1", 3)]),
        (1, &[("p2", 1), ("q2", 3)]),
        (1, &[("p1", 3), ("q1", 1)]),
        (1, &[("p2", 3), ("q2", 1)]),
        (3, &[("p1", 2), ("p2", 1), ("q2", 1)]),
        (3, &[("p1", 1), ("p2", 2), ("q2", 1)]),
        (3, &[("p1", 1), ("p2", 1), ("q2", 2)]),
        (3, &[("p1", 1), ("p2", 1), ("q1", 1), ("q2", 1)]),
        (3, &[("p1", 2), ("q1", 2)]),
        (3, &[("p2", 2), ("q2", 2)]),
        (1, &[(BETA, 1), ("p1", 1), ("q1", 1)]),
        (1, &[(BETA, 1), ("p2", 1), ("q2", 1)]),
        (3, &[(BETA, 1), ("p1", 1), ("q1", 2)]),
        (3, &[(BETA, 1), ("p2", 1), ("q2", 2)]),
        (3, &[(BETA, 1), ("p1", 2), ("q1", 1)]),
        (3, &[(BETA, 1), ("p2", 2), ("q2", 1)]),
        (6, &[(BETA, 1), ("p1", 1), ("p2", 1), ("q2", 1)]),
        (3, &[(BETA, 1), ("p1", 2), ("q1", 2)]),
        (3, &[(BETA, 1), ("p2", 2), ("q2", 2)]),
        (3, &[(BETA, 1), ("p1", 1), ("p2", 1), ("q2", 2)]),
        (2, &[(BETA, 1), ("p1", 1), ("q1", 3)]),
        (2, &[(BETA, 1), ("p2", 1), ("q2", 3)]),
        (3, &[(BETA, 1), ("p1", 1), ("p2", 1), ("q1", 1), ("q2", 1)]),
        (2, &[(BETA, 2), ("p1", 1), ("q1", 1)]),
        (2, &[(BETA, 2), ("p2", 1), ("q2", 1)]),
        (3, &[(BETA, 2), ("p1", 1), ("q1", 2)]),
        (3, &[(BETA, 2), ("p2", 1), ("q2", 2)]),
        (1, &[(BETA, 2), ("p1", 1), ("q1", 3)]),
        (1, &[(BETA, 2), ("p2", 1), ("q2", 3)]),
    ];
    vec![
        (part("2"), from_monomials(&v, m2)),
        (part("3"), from_monomials(&v, m3)),
    ]
}

/// `6 alpha^9 sum_{|rho|=5} (p)_rho (q)_rho theta^rho_{32} / j_rho` in the
/// mixed `(p, q, alpha, beta)` form.
pub fn theorem2_32() -> MPoly {
    let v = rect_vars();
    let t: &[(i64, &[(&str, u32)])] = &[
        (1, &[(P, 4), (Q, 1), (ALPHA, 4)]),
        (4, &[(P, 3), (Q, 2), (ALPHA, 4)]),
        (4, &[(P, 2), (Q, 3), (ALPHA, 4)]),
        (1, &[(P, 1), (Q, 4), (ALPHA, 4)]),
        (4, &[(P, 3), (Q, 1), (ALPHA, 3), (BETA, 1)]),
        (9, &[(P, 2), (Q, 2), (ALPHA, 3), (BETA, 1)]),
        (4, &[(P, 1), (Q, 3), (ALPHA, 3), (BETA, 1)]),
        (5, &[(P, 2), (Q, 1), (ALPHA, 2), (BETA, 2)]),
        (5, &[(P, 1), (Q, 2), (ALPHA, 2), (BETA, 2)]),
        (2, &[(P, 1), (Q, 1), (ALPHA, 1), (BETA, 3)]),
        (6, &[(P, 3), (ALPHA, 3)]),
        (31, &[(P, 2), (Q, 1), (ALPHA, 3)]),
        (31, &[(P, 1), (Q, 2), (ALPHA, 3)]),
        (6, &[(Q, 3), (ALPHA, 3)]),
        (30, &[(P, 2), (ALPHA, 2), (BETA, 1)]),
        (79, &[(P, 1), (Q, 1), (ALPHA, 2), (BETA, 1)]),
        (30, &[(Q, 2), (ALPHA, 2), (BETA, 1)]),
        (48, &[(P, 1), (ALPHA, 1), (BETA, 2)]),
        (48, &[(Q, 1), (ALPHA, 1), (BETA, 2)]),
        (24, &[(BETA, 3)]),
        (18, &[(P, 1), (ALPHA, 2)]),
        (18, &[(Q, 1), (ALPHA, 2)]),
        (24, &[(ALPHA, 1), (BETA, 1)]),
    ];
    let pq = &MPoly::var(&v, P) * &MPoly::var(&v, Q);
    &pq * &from_monomials(&v, t)
}

/// `(mu, p, q, value)` of the two-parameter extension with `|mu| > pq`,
/// values in `(alpha, beta)`.
pub fn extension_values() -> Vec<(Partition, usize, usize, MPoly)> {
    let b = B(vars_of(&[ALPHA, BETA]));
    let (a, be) = (b.v(ALPHA), b.v(BETA));
    let f = |x: i64, y: i64| &(&a - &be.scale_int(x)) - &b.c(y);
    vec![
        (part("2"), 1, 1, f(1, 1)),
        (part("3"), 1, 1, &f(1, 1) * &f(2, 1)),
        (
            part("3,2"),
            3,
            1,
            prod(&[&f(1, 1), &f(2, 3), &f(3, 9)]).scale_int(-9),
        ),
    ]
}

/// The `mu = (2)` relation among `vartheta^{p x q}` values written out as a
/// claimed identity in four independent variables: `(lhs, rhs)`.
pub fn four_variable_identity() -> (MPoly, MPoly) {
    let b = B(rect_vars());
    let (p, q, a, be) = (b.v(P), b.v(Q), b.v(ALPHA), b.v(BETA));
    let n = &p * &q;
    let u = |j: i64| &(&(&a * &q) - &p) - &be.scale_int(j);
    let lhs = (&n * &u(1)).pow(2);
    let rhs = sum(&[
        prod(&[&be, &n, &u(1)]).scale_int(2),
        prod(&[&n, &u(1), &u(2)]).scale_int(2),
        prod(&[&n, &(&n - &b.c(2)), &u(1), &u(1)]),
    ]);
    (lhs, rhs)
}
