//! Affine expressions `c0 + sum c_i x_i` over `Q(t)`.

use std::collections::BTreeMap;

use crate::ratfunc::RationalFunction;
use crate::ring::Ring;

use super::sympoly::{SymPoly, VarId};

/// Canonical affine form: zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearExpr {
    pub constant: RationalFunction,
    pub coeffs: BTreeMap<VarId, RationalFunction>,
}

impl LinearExpr {
    pub fn zero() -> Self {
        Self {
            constant: RationalFunction::zero(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn var(v: VarId) -> Self {
        let mut e = Self::zero();
        e.coeffs.insert(v, RationalFunction::one());
        e
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    /// The affine part of a polynomial of degree at most one.
    pub fn from_poly(p: &SymPoly) -> Option<Self> {
        let mut e = Self::zero();
        for (m, c) in p.terms() {
            match m {
                [] => e.constant = c.clone(),
                [v] => {
                    e.coeffs.insert(*v, c.clone());
                }
                _ => return None,
            }
        }
        Some(e)
    }

    pub fn to_poly(&self) -> SymPoly {
        self.coeffs.iter().fold(SymPoly::constant(self.constant.clone()), |acc, (v, c)| {
            acc.add(&SymPoly::var(*v).mul(&SymPoly::constant(c.clone())))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn coeff(&self, v: VarId) -> RationalFunction {
        self.coeffs.get(&v).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant = out.constant.add(&other.constant);
        for (v, c) in &other.coeffs {
            let e = out.coeffs.entry(*v).or_insert_with(RationalFunction::zero);
            *e = e.add(c);
            if e.is_zero() {
                out.coeffs.remove(v);
            }
        }
        out
    }

    pub fn scale(&self, s: &RationalFunction) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            constant: self.constant.mul(s),
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, c.mul(s))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RationalFunction::one().neg()))
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: VarId, value: &LinearExpr) -> Self {
        match self.coeffs.get(&v) {
            None => self.clone(),
            Some(c) => {
                let mut rest = self.clone();
                rest.coeffs.remove(&v);
                rest.add(&value.scale(c))
            }
        }
    }

    pub fn eval(&self, values: &BTreeMap<VarId, RationalFunction>) -> Option<RationalFunction> {
        let mut acc = self.constant.clone();
        for (v, c) in &self.coeffs {
            acc = acc.add(&c.mul(values.get(v)?));
        }
        Some(acc)
    }

    /// `a`, `c*t^1`, `-x*(t^1 + 1) + 2`; variables in reading order.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (v, c) in &self.coeffs {
            let name = names.get(*v).cloned().unwrap_or_else(|| format!("x{v}"));
            let minus_one = RationalFunction::one().neg();
            let part = if c.is_one() {
                name
            } else if *c == minus_one {
                format!("-{name}")
            } else if is_monomial(c) {
                if is_negative_monomial(c) {
                    format!("-{name}*{}", c.neg())
                } else {
                    format!("{name}*{c}")
                }
            } else {
                format!("{name}*({c})")
            };
            parts.push(part);
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

fn is_monomial(c: &RationalFunction) -> bool {
    c.denom().is_one() && c.numer().num_terms() == 1
}

fn is_negative_monomial(c: &RationalFunction) -> bool {
    use num_traits::Signed;
    c.numer().lowest_coeff().is_some_and(|x| x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn render_forms() {
        let t = RationalFunction::t();
        assert_eq!(LinearExpr::var(2).scale(&t).render(&names()), "c*t^1");
        assert_eq!(LinearExpr::var(0).render(&names()), "a");
        let e = LinearExpr::var(0)
            .sub(&LinearExpr::var(3).scale(&t))
            .add(&LinearExpr::constant(RationalFunction::from_i64(2)));
        assert_eq!(e.render(&names()), "a - d*t^1 + 2");
        let y: RationalFunction = "1/(t+1)".parse().unwrap();
        assert_eq!(LinearExpr::var(1).scale(&y).render(&names()), "b*((1)/(t^1 + 1))");
        assert_eq!(LinearExpr::zero().render(&names()), "0");
    }

    #[test]
    fn canonical_after_cancellation() {
        let a = LinearExpr::var(0);
        assert!(a.sub(&a).is_zero());
        assert!(a.sub(&a).coeffs.is_empty());
        let p = a.add(&LinearExpr::var(1)).to_poly();
        assert_eq!(LinearExpr::from_poly(&p).unwrap(), a.add(&LinearExpr::var(1)));
    }

    #[test]
    fn substitution() {
        // b - t*c with c := a + 1
        let t = RationalFunction::t();
        let e = LinearExpr::var(1).sub(&LinearExpr::var(2).scale(&t));
        let v = LinearExpr::var(0).add(&LinearExpr::constant(RationalFunction::one()));
        let s = e.substitute(2, &v);
        assert_eq!(s.coeff(0), t.neg());
        assert_eq!(s.constant, t.neg());
        assert!(!s.coeffs.contains_key(&2));
    }
}
