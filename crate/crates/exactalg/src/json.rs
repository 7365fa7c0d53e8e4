//! Canonical JSON encoding.
//!
//! `{"vars":[..],"terms":[{"exp":[..],"coef":"num/den"}..]}` with terms in
//! descending graded-lex order; rational functions as `{"num":..,"den":..}`.

use std::sync::Arc;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::mpoly::MPoly;
use crate::ratfunc::RatFunc;
use crate::rational::{format_rational, parse_rational};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(m, c)| TermRepr {
                exp: m.exponents().to_vec(),
                coef: format_rational(c),
            })
            .collect();
        let mut st = serializer.serialize_struct("MPoly", 2)?;
        st.serialize_field("vars", self.vars().as_ref())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let vars = Arc::new(repr.vars);
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.exp.len() != vars.len() {
                return Err(D::Error::custom("exponent arity does not match vars"));
            }
            let c = parse_rational(&t.coef).map_err(D::Error::custom)?;
            terms.push((t.exp, c));
        }
        Ok(MPoly::from_terms(&vars, terms))
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", self.num())?;
        st.serialize_field("den", self.den())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: MPoly,
            den: MPoly,
        }
        let r = Repr::deserialize(deserializer)?;
        RatFunc::new(r.num, r.den).map_err(D::Error::custom)
    }
}

pub fn render_poly(p: &MPoly) -> String {
    serde_json::to_string(p).expect("polynomial serializes")
}

pub fn parse_poly(s: &str) -> Result<MPoly, serde_json::Error> {
    serde_json::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::vars_of;

    #[test]
    fn canonical_alpha() {
        let vs = vars_of(&["alpha"]);
        let a = MPoly::var(&vs, "alpha");
        assert_eq!(
            render_poly(&a),
            r#"{"vars":["alpha"],"terms":[{"exp":[1],"coef":"1"}]}"#
        );
    }

    #[test]
    fn terms_descend_in_grlex() {
        let vs = vars_of(&["p", "q"]);
        let (p, q) = (MPoly::var(&vs, "p"), MPoly::var(&vs, "q"));
        let f = &(&q.pow(2) + &p) + &(&p * &q).scale(&crate::rational::ratio(-1, 2));
        assert_eq!(
            render_poly(&f),
            r#"{"vars":["p","q"],"terms":[{"exp":[1,1],"coef":"-1/2"},{"exp":[0,2],"coef":"1"},{"exp":[1,0],"coef":"1"}]}"#
        );
        assert_eq!(parse_poly(&render_poly(&f)).unwrap(), f);
    }
}
