//! Polynomials in named unknowns with coefficients in `Q(t)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::ratfunc::RationalFunction;
use crate::ring::{Field, Ring};

pub type VarId = usize;

/// Sparse polynomial: monomial (sorted multiset of unknowns) -> coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    terms: BTreeMap<Vec<VarId>, RationalFunction>,
}

fn merge(a: &[VarId], b: &[VarId]) -> Vec<VarId> {
    let mut m: Vec<VarId> = a.iter().chain(b).copied().collect();
    m.sort_unstable();
    m
}

impl SymPoly {
    pub fn var(id: VarId) -> Self {
        Self::term(vec![id], RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::term(Vec::new(), c)
    }

    fn term(mono: Vec<VarId>, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[VarId], &RationalFunction)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().filter(|&&x| x == v).count())
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.terms.keys().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn constant_term(&self) -> RationalFunction {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Coefficient of `v^1` in a polynomial of degree at most one in `v`,
    /// as a polynomial in the other unknowns.
    pub fn coefficient_of(&self, v: VarId) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|&x| x == v) {
                let mut rest = m.clone();
                rest.remove(pos);
                out = out.add(&Self::term(rest, c.clone()));
            }
        }
        out
    }

    /// Exact division by a single unknown.
    pub fn div_by_var(&self, v: VarId) -> Option<SymPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let pos = m.iter().position(|&x| x == v)?;
            let mut rest = m.clone();
            rest.remove(pos);
            terms.insert(rest, c.clone());
        }
        Some(Self { terms })
    }

    /// Replaces unknowns by polynomials.
    pub fn substitute(&self, map: &BTreeMap<VarId, SymPoly>) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = SymPoly::constant(c.clone());
            for v in m {
                let f = map.get(v).cloned().unwrap_or_else(|| SymPoly::var(*v));
                acc = acc.mul(&f);
            }
            out = out.add(&acc);
        }
        out
    }

    /// `den^k * self(v = num/den)` with `k` the degree of `self` in `v`,
    /// which stays polynomial.
    pub fn substitute_fraction(&self, v: VarId, num: &SymPoly, den: &SymPoly) -> SymPoly {
        let k = self.degree_in(v);
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = SymPoly::constant(c.clone());
            let mut used = 0;
            for x in m {
                if *x == v {
                    acc = acc.mul(num);
                    used += 1;
                } else {
                    acc = acc.mul(&SymPoly::var(*x));
                }
            }
            for _ in used..k {
                acc = acc.mul(den);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Value at the given assignment; unknowns left unassigned are an error.
    pub fn eval(&self, values: &BTreeMap<VarId, RationalFunction>) -> Option<RationalFunction> {
        let mut acc = RationalFunction::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in m {
                term = term.mul(values.get(v)?);
            }
            acc = acc.add(&term);
        }
        Some(acc)
    }

    /// Renders with the supplied unknown names.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = group_powers(m)
                .into_iter()
                .map(|(v, e)| {
                    let name = names.get(v).cloned().unwrap_or_else(|| format!("x{v}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            let part = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == RationalFunction::one().neg() {
                format!("-{mono}")
            } else {
                format!("({c})*{mono}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

fn group_powers(m: &[VarId]) -> Vec<(VarId, usize)> {
    let mut out: Vec<(VarId, usize)> = Vec::new();
    for &v in m {
        match out.last_mut() {
            Some((w, e)) if *w == v => *e += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

impl From<RationalFunction> for SymPoly {
    fn from(c: RationalFunction) -> Self {
        SymPoly::constant(c)
    }
}

impl Ring for SymPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(RationalFunction::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(RationalFunction::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(RationalFunction::zero);
            *e = e.add(c);
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Self { terms }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out = out.add(&Self::term(merge(m1, m2), c1.mul(c2)));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
    /// Only division by a nonzero constant is supported.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.degree() != 0 || divisor.is_zero() {
            return None;
        }
        let inv = divisor.constant_term().inv()?;
        Some(Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(&inv))).collect(),
        })
    }
    fn domain_name() -> &'static str {
        "symbolic"
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({self})")
    }
}
