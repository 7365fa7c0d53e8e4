use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgError;
use crate::monomial::Monomial;
use crate::rational::{format_rational, int};

pub type Vars = Arc<Vec<String>>;

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered, named variable set.
///
/// Zero coefficients are never stored, so two polynomials over the same
/// variables are equal exactly when their term maps are equal. Polynomials
/// over different variable sets are compared after aligning both to the
/// union of their variables.
#[derive(Clone, Debug)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn vars_of(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

fn union_vars(a: &Vars, b: &Vars) -> Vars {
    if Arc::ptr_eq(a, b) || a == b {
        return a.clone();
    }
    let mut out: Vec<String> = a.as_ref().clone();
    for v in b.iter() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    Arc::new(out)
}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &Vars, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, int(c))
    }

    /// The polynomial consisting of the single variable `name`.
    ///
    /// Panics if `name` is not declared in `vars`.
    pub fn var(vars: &Vars, name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable {name} not declared"));
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::var(vars.len(), idx), BigRational::one());
        p
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut p = Self::zero(vars);
        for (exp, c) in terms {
            assert_eq!(exp.len(), vars.len(), "exponent arity mismatch");
            p.add_term(Monomial::from_slice(&exp), c);
        }
        p
    }

    pub(crate) fn from_map(vars: &Vars, terms: BTreeMap<Monomial, BigRational>) -> Self {
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.degree_at(i),
            None => 0,
        }
    }

    pub(crate) fn degree_at(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn used_var_indices(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&Monomial::from_slice(exps))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Re-expresses the polynomial over `target`, which must declare every
    /// variable this polynomial actually uses.
    pub fn with_vars(&self, target: &Vars) -> Result<MPoly, AlgError> {
        if Arc::ptr_eq(&self.vars, target) || self.vars == *target {
            return Ok(MPoly {
                vars: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|t| t == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.0[i] > 0) {
                        return Err(AlgError::UnknownVariable(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(target.len());
            for (i, slot) in map.iter().enumerate() {
                if let Some(j) = slot {
                    e.0[*j] = m.0[i];
                }
            }
            out.terms.insert(e, c.clone());
        }
        Ok(out)
    }

    /// Aligns both operands to the union of their variable sets.
    pub fn align(&self, other: &MPoly) -> (MPoly, MPoly) {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return (self.clone(), other.with_vars(&self.vars).unwrap());
        }
        let u = union_vars(&self.vars, &other.vars);
        (self.with_vars(&u).unwrap(), other.with_vars(&u).unwrap())
    }

    /// Drops declared variables that do not occur.
    pub fn trimmed(&self) -> MPoly {
        let used = self.used_var_indices();
        let names: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        self.with_vars(&Arc::new(names)).unwrap()
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&int(c))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// Bound variables that do not occur in any image are dropped from the
    /// result's variable set; new variables from the images are appended.
    pub fn substitute(&self, bindings: &[(&str, MPoly)]) -> Result<MPoly, AlgError> {
        for (name, _) in bindings {
            if self.var_index(name).is_none() {
                return Err(AlgError::UnknownVariable(name.to_string()));
            }
        }
        let mut names: Vec<String> = Vec::new();
        for v in self.vars.iter() {
            let bound = bindings.iter().any(|(n, _)| n == v);
            let in_image = bindings.iter().any(|(_, img)| {
                img.var_index(v)
                    .is_some_and(|i| img.terms.keys().any(|m| m.0[i] > 0))
            });
            if !bound || in_image {
                names.push(v.clone());
            }
        }
        for (_, img) in bindings {
            for i in img.used_var_indices() {
                let v = &img.vars[i];
                if !names.contains(v) {
                    names.push(v.clone());
                }
            }
        }
        let target: Vars = Arc::new(names);
        let images: Vec<Option<MPoly>> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, img)| img.with_vars(&target).unwrap())
            })
            .collect();
        let plain: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();

        // powers of each image, computed lazily
        let mut powers: Vec<Vec<MPoly>> = vec![Vec::new(); self.vars.len()];
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut base = Monomial::one(target.len());
            let mut factor = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    Some(img) => {
                        let cache = &mut powers[i];
                        if cache.is_empty() {
                            cache.push(MPoly::one(&target));
                        }
                        while cache.len() <= e as usize {
                            let next = cache.last().unwrap() * img;
                            cache.push(next);
                        }
                        factor = &factor * &cache[e as usize];
                    }
                    None => base.0[plain[i].unwrap()] += e,
                }
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&base), fc);
            }
        }
        Ok(out)
    }

    /// Substitutes rational values for some variables.
    pub fn eval(&self, values: &[(&str, BigRational)]) -> Result<MPoly, AlgError> {
        let vars = self.vars.clone();
        let b: Vec<(&str, MPoly)> = values
            .iter()
            .map(|(n, v)| (*n, MPoly::constant(&vars, v.clone())))
            .collect();
        self.substitute(&b)
    }

    /// Exact multivariate division. Succeeds iff `divisor` divides `self`.
    pub fn divide_exact(&self, divisor: &MPoly) -> Result<MPoly, AlgError> {
        if divisor.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let (a, b) = self.align(divisor);
        if let Some(c) = b.as_constant() {
            return Ok(a.scale(&c.recip()));
        }
        let (lm, lc) = {
            let (m, c) = b.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = a.clone();
        let mut quot = MPoly::zero(&a.vars);
        let mut residue = MPoly::zero(&a.vars);
        while let Some((m, c)) = rem
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c / &lc;
                for (bm, bc) in &b.terms {
                    rem.add_term(bm.mul(&qm), -(bc * &qc));
                }
                quot.add_term(qm, qc);
            } else {
                rem.terms.remove(&m);
                residue.add_term(m, c);
            }
        }
        if residue.is_zero() {
            Ok(quot)
        } else {
            Err(AlgError::NotDivisible { remainder: residue })
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn rational_content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num, den)
    }

    /// Integer-primitive form with positive leading coefficient.
    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.rational_content();
        if self.leading_coefficient().is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Coefficients as a univariate polynomial in variable `idx`; entry `d`
    /// holds the coefficient of `x^d`.
    pub(crate) fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let deg = self.degree_at(idx) as usize;
        let mut out = vec![MPoly::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let d = m.0[idx] as usize;
            let mut r = m.clone();
            r.0[idx] = 0;
            out[d].terms.insert(r, c.clone());
        }
        out
    }

    pub(crate) fn shift_in(&self, idx: usize, by: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut r = m.clone();
                    r.0[idx] += by;
                    (r, c.clone())
                })
                .collect(),
        }
    }

    pub fn coefficient_audit(&self) -> CoefficientAudit {
        let mut audit = CoefficientAudit {
            all_integer: true,
            all_nonnegative: true,
            has_unit_coefficient: false,
            non_integer: Vec::new(),
            negative: Vec::new(),
            unit: Vec::new(),
        };
        for (m, c) in self.terms() {
            let term = MPoly::from_map(&self.vars, BTreeMap::from([(m.clone(), c.clone())]));
            if !c.is_integer() {
                audit.all_integer = false;
                audit.non_integer.push(term.clone());
            }
            if c.is_negative() {
                audit.all_nonnegative = false;
                audit.negative.push(term.clone());
            }
            if c.is_one() {
                audit.has_unit_coefficient = true;
                audit.unit.push(term);
            }
        }
        audit
    }

    pub fn render_term(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
        parts.join("*")
    }
}

/// Outcome of inspecting every stored coefficient of a polynomial.
#[derive(Clone, Debug)]
pub struct CoefficientAudit {
    pub all_integer: bool,
    pub all_nonnegative: bool,
    pub has_unit_coefficient: bool,
    /// Terms whose coefficient is not an integer.
    pub non_integer: Vec<MPoly>,
    /// Terms whose coefficient is negative.
    pub negative: Vec<MPoly>,
    /// Terms with coefficient exactly 1.
    pub unit: Vec<MPoly>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.align(other);
        a.terms == b.terms
    }
}

impl Eq for MPoly {}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = self.render_term(m);
            if body.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), body)?;
            }
        }
        Ok(())
    }
}

fn add_impl(a: &MPoly, b: &MPoly, sign: bool) -> MPoly {
    let (mut x, y) = if Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars {
        (a.clone(), std::borrow::Cow::Borrowed(b))
    } else {
        let (x, y) = a.align(b);
        (x, std::borrow::Cow::Owned(y))
    };
    for (m, c) in y.terms.iter() {
        x.add_term(m.clone(), if sign { c.clone() } else { -c.clone() });
    }
    x
}

fn mul_impl(a: &MPoly, b: &MPoly) -> MPoly {
    let (x, y) = if Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars {
        (std::borrow::Cow::Borrowed(a), std::borrow::Cow::Borrowed(b))
    } else {
        let (x, y) = a.align(b);
        (std::borrow::Cow::Owned(x), std::borrow::Cow::Owned(y))
    };
    let mut out = MPoly::zero(&x.vars);
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            out.add_term(m1.mul(m2), c1 * c2);
        }
    }
    out
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        add_impl(self, rhs, true)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        add_impl(self, rhs, false)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        mul_impl(self, rhs)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        add_impl(&self, &rhs, true)
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        add_impl(&self, &rhs, false)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        mul_impl(&self, &rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn v() -> Vars {
        vars_of(&["alpha", "beta", "p", "q"])
    }

    #[test]
    fn difference_of_squares() {
        let vs = v();
        let a = MPoly::var(&vs, "alpha");
        let one = MPoly::one(&vs);
        let lhs = &(&a + &one) * &(&a - &one);
        assert_eq!(lhs, &a.pow(2) - &one);
    }

    #[test]
    fn additive_identity() {
        let vs = v();
        let pq = &MPoly::var(&vs, "p") * &MPoly::var(&vs, "q");
        assert_eq!(&pq + &MPoly::zero(&vs), pq);
    }

    #[test]
    fn distributes_over_product() {
        let vs = v();
        let (p, q) = (MPoly::var(&vs, "p"), MPoly::var(&vs, "q"));
        let (a, b) = (MPoly::var(&vs, "alpha"), MPoly::var(&vs, "beta"));
        let lhs = &(&(&p - &(&a * &q)) + &b) * &(&p * &q);
        let rhs = &(&(&p.pow(2) * &q) - &(&(&a * &p) * &q.pow(2))) + &(&(&b * &p) * &q);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_propagates_sign() {
        let vs = v();
        let (p, q) = (MPoly::var(&vs, "p"), MPoly::var(&vs, "q"));
        let (a, b) = (MPoly::var(&vs, "alpha"), MPoly::var(&vs, "beta"));
        let f = &(&p * &q) * &(&(&p - &(&a * &q)) + &b);
        let g = f.substitute(&[("q", -&q)]).unwrap();
        let expected = -&(&(&p * &q) * &(&(&p + &(&a * &q)) + &b));
        assert_eq!(g, expected);
        // q keeps its declared position
        assert_eq!(g.vars().as_ref(), vs.as_ref());
    }

    #[test]
    fn substitution_drops_bound_variable() {
        let vs = vars_of(&["alpha", "beta"]);
        let b = MPoly::var(&vs, "beta");
        let img = &MPoly::var(&vs, "alpha") - &MPoly::one(&vs);
        let s = b.substitute(&[("beta", img.clone())]).unwrap();
        assert_eq!(s, img);
        assert_eq!(s.vars().as_ref(), &vec!["alpha".to_string()]);
    }

    #[test]
    fn exact_division() {
        let vs = v();
        let (a, b) = (MPoly::var(&vs, "alpha"), MPoly::var(&vs, "beta"));
        let one = MPoly::one(&vs);
        let f = &(&a.pow(2) - &b.pow(2)) - &(&b.scale_int(2) + &one);
        let d = &(&a - &b) - &one;
        assert_eq!(f.divide_exact(&d).unwrap(), &(&a + &b) + &one);

        let (p, q) = (MPoly::var(&vs, "p"), MPoly::var(&vs, "q"));
        match (&p + &q).divide_exact(&p) {
            Err(AlgError::NotDivisible { remainder }) => assert_eq!(remainder, q),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn audit_flags() {
        let vs = v();
        let (a, p, q) = (
            MPoly::var(&vs, "alpha"),
            MPoly::var(&vs, "p"),
            MPoly::var(&vs, "q"),
        );
        let f = &(&p * &q) + &(&a * &q.pow(2)).scale_int(2);
        let au = f.coefficient_audit();
        assert!(au.all_integer && au.all_nonnegative && au.has_unit_coefficient);
        assert_eq!(au.unit, vec![&p * &q]);

        let g = &(&p * &q) - &q;
        let au = g.coefficient_audit();
        assert!(!au.all_nonnegative);
        assert_eq!(au.negative, vec![-&q]);

        let h = (&p * &q).scale(&ratio(1, 2));
        let au = h.coefficient_audit();
        assert!(!au.all_integer);
        assert_eq!(au.non_integer.len(), 1);
    }

    #[test]
    fn display_is_readable() {
        let vs = vars_of(&["alpha"]);
        let a = MPoly::var(&vs, "alpha");
        let f = &(&a.pow(2).scale_int(2) - &a) + &MPoly::constant(&vs, ratio(-1, 3));
        assert_eq!(f.to_string(), "2*alpha^2 - alpha - 1/3");
    }
}
