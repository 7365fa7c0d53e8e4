use exactalg::RatFunc;
use jackpow::jack::{jack, pieri_c, theta, weight_table};
use jackpow::partitions::{alpha_content_sum, hook_products};
use jackpow::vars::alpha;
use jackpow::{enumerate_partitions, Basis, Partition, SymFun};
use rayon::prelude::*;

#[test]
fn gram_matrix_is_diagonal_with_hook_norms() {
    for n in 1..=8 {
        let parts = enumerate_partitions(n, None);
        let jacks: Vec<SymFun> = parts.iter().map(|l| jack(l).unwrap().in_p).collect();
        parts.par_iter().enumerate().for_each(|(i, l)| {
            for (j, m) in parts.iter().enumerate() {
                let v = jacks[i].scalar_product(&jacks[j]);
                if i == j {
                    assert_eq!(v, RatFunc::from_poly(hook_products(l).j), "<J_{l}, J_{l}>");
                } else {
                    assert!(v.is_zero(), "<J_{l}, J_{m}> = {v}");
                }
            }
        });
    }
}

#[test]
fn monomial_expansion_is_triangular_and_normalized() {
    for n in 1..=8 {
        for lambda in enumerate_partitions(n, None) {
            let j = jack(&lambda).unwrap();
            let ones = Partition::rectangle(n, 1);
            let fact = exactalg::factorial(n as u64);
            assert_eq!(
                j.in_m.coefficient(&ones).as_constant().unwrap(),
                exactalg::BigRational::from(fact)
            );
            for (mu, _) in j.in_m.terms() {
                assert!(mu.dominated_by(&lambda).unwrap(), "m_{mu} in J_{lambda}");
            }
            assert_eq!(j.in_m.convert(Basis::PowerSum), j.in_p);
        }
    }
}

#[test]
fn theta_coefficients_are_integral_after_z_scaling() {
    for n in 1..=8 {
        let table = weight_table(n).unwrap();
        for (lambda, row) in table.parts.iter().zip(&table.theta) {
            for (rho, t) in table.parts.iter().zip(row) {
                let scaled = t.scale(&exactalg::BigRational::from(rho.z()));
                assert!(
                    scaled.coefficient_audit().all_integer,
                    "z theta^{lambda}_{rho}"
                );
            }
        }
    }
}

#[test]
fn second_coefficient_is_content_sum() {
    for n in 2..=8 {
        for lambda in enumerate_partitions(n, None) {
            let rho = Partition::rectangle(n - 2, 1).with_part(2);
            let lhs = RatFunc::from_poly(theta(&lambda, &rho).unwrap().scale_int(2));
            let rhs = (&alpha() * &alpha_content_sum(&lambda)).scale_int(2);
            assert_eq!(lhs, rhs, "{lambda}");
        }
    }
}

#[test]
fn pieri_rule_reconstructs_p1_times_jack() {
    for n in 0..=7 {
        enumerate_partitions(n, None).par_iter().for_each(|lambda| {
            let lhs = jack(lambda).unwrap().in_p.mul_p1().unwrap();
            let mut rhs = SymFun::zero(Basis::PowerSum);
            for (i, up) in lambda.box_moves().add {
                let c = pieri_c(lambda, i).unwrap();
                rhs = rhs.add(&jack(&up).unwrap().in_p.scale(&c));
            }
            assert_eq!(lhs, rhs, "p_1 J_{lambda}");
        });
    }
}
