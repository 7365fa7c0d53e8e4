use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgError;
use crate::mpoly::{MPoly, Vars};
use crate::rational::int;

/// Reduced quotient of two polynomials.
///
/// The denominator is kept with integer content 1 and positive leading
/// coefficient; the numerator carries the remaining rational content.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let vars = p.vars().clone();
        RatFunc {
            num: p,
            den: MPoly::one(&vars),
        }
    }

    pub fn zero(vars: &Vars) -> Self {
        Self::from_poly(MPoly::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        Self::from_poly(MPoly::one(vars))
    }

    pub fn constant(vars: &Vars, c: BigRational) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, int(c))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::from_poly(MPoly::var(vars, name))
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        let (mut num, mut den) = num.align(&den);
        if num.is_zero() {
            let vars = num.vars().clone();
            return RatFunc {
                num,
                den: MPoly::one(&vars),
            };
        }
        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_constant() {
                num = num.divide_exact(&g).expect("gcd divides numerator");
                den = den.divide_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = den.rational_content();
        if den.leading_coefficient().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<MPoly, RatFunc> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(self)
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn with_vars(&self, target: &Vars) -> Result<RatFunc, AlgError> {
        Ok(RatFunc {
            num: self.num.with_vars(target)?,
            den: self.den.with_vars(target)?,
        })
    }

    pub fn recip(&self) -> Result<RatFunc, AlgError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.vars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.scale(&int(c))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn substitute(&self, bindings: &[(&str, MPoly)]) -> Result<RatFunc, AlgError> {
        let num_bind: Vec<(&str, MPoly)> = bindings
            .iter()
            .filter(|(n, _)| self.num.var_index(n).is_some())
            .cloned()
            .collect();
        let num = self.num.substitute(&num_bind)?;
        let den = self.den.substitute(&num_bind)?;
        if den.is_zero() {
            return Err(AlgError::DenominatorVanishes);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn eval(&self, values: &[(&str, BigRational)]) -> Result<RatFunc, AlgError> {
        let vars = self.vars().clone();
        let b: Vec<(&str, MPoly)> = values
            .iter()
            .map(|(n, v)| (*n, MPoly::constant(&vars, v.clone())))
            .collect();
        self.substitute(&b)
    }

    /// Exact division; fails only when `other` is zero.
    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, AlgError> {
        if other.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &other.den, &self.den * &other.num))
    }
}

fn add_impl(a: &RatFunc, b: &RatFunc, sign: bool) -> RatFunc {
    let nb = if sign { b.num.clone() } else { -&b.num };
    if a.den == b.den {
        return RatFunc::reduce(&a.num + &nb, a.den.clone());
    }
    if a.den.is_one() {
        return RatFunc::reduce(&(&a.num * &b.den) + &nb, b.den.clone());
    }
    if b.den.is_one() {
        return RatFunc::reduce(&a.num + &(&nb * &a.den), a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let (ra, rb) = if g.is_constant() {
        (a.den.clone(), b.den.clone())
    } else {
        (
            a.den.divide_exact(&g).unwrap(),
            b.den.divide_exact(&g).unwrap(),
        )
    };
    RatFunc::reduce(&(&a.num * &rb) + &(&nb * &ra), &a.den * &rb)
}

fn mul_impl(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from_poly(&a.num * &b.num);
    }
    RatFunc::reduce(&a.num * &b.num, &a.den * &b.den)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        mul_impl(self, rhs)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        add_impl(&self, &rhs, true)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        add_impl(&self, &rhs, false)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        mul_impl(&self, &rhs)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::vars_of;

    #[test]
    fn normalizes_denominator() {
        let vs = vars_of(&["alpha"]);
        let a = MPoly::var(&vs, "alpha");
        let r = RatFunc::new(a.scale_int(4), &a.scale_int(-6) + &MPoly::from_int(&vs, 2)).unwrap();
        // 4a / (2 - 6a) = -2a / (3a - 1)
        assert_eq!(r.den(), &(&a.scale_int(3) - &MPoly::one(&vs)));
        assert_eq!(r.num(), &a.scale_int(-2));
    }

    #[test]
    fn pole_is_reported() {
        let vs = vars_of(&["alpha"]);
        let a = MPoly::var(&vs, "alpha");
        let r = RatFunc::new(MPoly::one(&vs), &a - &MPoly::one(&vs)).unwrap();
        assert!(matches!(
            r.eval(&[("alpha", int(1))]),
            Err(AlgError::DenominatorVanishes)
        ));
    }

    #[test]
    fn sums_cancel_to_polynomials() {
        let vs = vars_of(&["alpha"]);
        let a = RatFunc::var(&vs, "alpha");
        let one = RatFunc::one(&vs);
        // a/(a+1) + 1/(a+1) = 1
        let s = &(&a / &(&a + &one)) + &(&one / &(&a + &one));
        assert!(s.is_one());
        // 2 - 2/a has denominator a
        let d = &RatFunc::from_int(&vs, 2) - &(&RatFunc::from_int(&vs, 2) / &a);
        assert_eq!(d.den(), &MPoly::var(&vs, "alpha"));
    }
}
