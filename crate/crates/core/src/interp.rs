//! Exact polynomial reconstruction from values on a tensor-product grid.

use exactalg::{BigRational, MPoly, Vars};
use num_traits::Zero;

/// Monomial coefficients `c_0..c_d` of the unique polynomial of degree at
/// most `d = xs.len() - 1` through `(xs[i], ys[i])`.
pub fn interpolate_1d(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // divided differences in place
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner on the Newton form
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Values of a polynomial on the grid `nodes[0] x nodes[1] x ...`, stored
/// row-major with the last axis varying fastest.
pub struct Grid {
    pub nodes: Vec<Vec<BigRational>>,
    pub values: Vec<BigRational>,
}

impl Grid {
    pub fn shape(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.len()).collect()
    }

    /// All grid points in storage order.
    pub fn points(nodes: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let mut out: Vec<Vec<BigRational>> = vec![Vec::new()];
        for axis in nodes {
            let mut next = Vec::with_capacity(out.len() * axis.len());
            for prefix in &out {
                for x in axis {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// Reconstructs the polynomial over `vars` (one variable per axis, in
    /// axis order) with per-variable degree below the axis length.
    pub fn reconstruct(&self, vars: &Vars) -> MPoly {
        let shape = self.shape();
        assert_eq!(vars.len(), shape.len());
        assert_eq!(self.values.len(), shape.iter().product::<usize>());
        let mut data = self.values.clone();
        for (axis, xs) in self.nodes.iter().enumerate() {
            let len = shape[axis];
            let stride: usize = shape[axis + 1..].iter().product();
            let outer: usize = shape[..axis].iter().product();
            for o in 0..outer {
                for s in 0..stride {
                    let base = o * len * stride + s;
                    let ys: Vec<BigRational> =
                        (0..len).map(|i| data[base + i * stride].clone()).collect();
                    for (i, c) in interpolate_1d(xs, &ys).into_iter().enumerate() {
                        data[base + i * stride] = c;
                    }
                }
            }
        }
        let mut terms = Vec::new();
        for (flat, c) in data.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0u32; shape.len()];
            let mut rest = flat;
            for axis in (0..shape.len()).rev() {
                exps[axis] = (rest % shape[axis]) as u32;
                rest /= shape[axis];
            }
            terms.push((exps, c));
        }
        MPoly::from_terms(vars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::{int, ratio, vars_of};

    #[test]
    fn line_through_points() {
        let xs = vec![int(1), int(2), int(4)];
        // 3x^2 - x + 1/2
        let f = |x: &BigRational| int(3) * x * x - x + ratio(1, 2);
        let ys: Vec<_> = xs.iter().map(f).collect();
        assert_eq!(interpolate_1d(&xs, &ys), vec![ratio(1, 2), int(-1), int(3)]);
    }

    #[test]
    fn tensor_reconstruction() {
        let vs = vars_of(&["x", "y", "z"]);
        let (x, y, z) = (
            MPoly::var(&vs, "x"),
            MPoly::var(&vs, "y"),
            MPoly::var(&vs, "z"),
        );
        let f = &(&(&x.pow(2) * &y) - &(&y * &z).scale(&ratio(2, 3))) + &MPoly::from_int(&vs, 7);
        let nodes = vec![
            vec![int(0), int(1), int(2)],
            vec![int(5), int(6)],
            vec![int(-1), ratio(1, 2)],
        ];
        let values = Grid::points(&nodes)
            .into_iter()
            .map(|pt| {
                f.eval(&[
                    ("x", pt[0].clone()),
                    ("y", pt[1].clone()),
                    ("z", pt[2].clone()),
                ])
                .unwrap()
                .as_constant()
                .unwrap()
            })
            .collect();
        assert_eq!(Grid { nodes, values }.reconstruct(&vs), f);
    }
}
