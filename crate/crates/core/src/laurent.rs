//! Laurent polynomials over the integers, `Z[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Ring, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("cannot specialize t to zero")]
    ZeroSpecialization,
    #[error("denominator vanishes at t = {0}")]
    PoleAt(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// An element of `Z[t, t^-1]` stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        Self::from_terms([(exp, BigInt::from(c))])
    }

    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// True iff `self = ±t^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Returns `Some(k)` if `self = t^k`.
    pub fn as_t_power(&self) -> Option<i64> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.is_one() => Some(*e),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Image under the specialization `t -> t0`.
    pub fn eval(&self, t0: &Q) -> Result<Q, LaurentError> {
        if Zero::is_zero(t0) {
            return Err(LaurentError::ZeroSpecialization);
        }
        let inv = t0.recip();
        let mut acc = <Q as Zero>::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { t0 } else { &inv };
            let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Splits `self = t^k * p(t)` with `p` an ordinary polynomial whose
    /// constant term is nonzero. Returns `(k, ascending coefficients)`.
    pub(crate) fn to_poly(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_poly(shift: i64, coeffs: &[BigInt]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Exact quotient in `Z[t, t^-1]`, or `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, f) = self.to_poly();
        let (b, g) = divisor.to_poly();
        let q = poly::div_exact(&f, &g)?;
        Some(Self::from_poly(a - b, &q))
    }

    /// Lowest-degree coefficient.
    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }
}

/// Dense integer polynomial helpers (ascending coefficient order).
pub(crate) mod poly {
    use super::*;

    pub fn trim(v: &mut Vec<BigInt>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn div_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r: Vec<BigInt> = f.to_vec();
        trim(&mut r);
        let mut g = g.to_vec();
        trim(&mut g);
        let lead = g.last()?.clone();
        if r.len() < g.len() {
            return if r.is_empty() { Some(Vec::new()) } else { None };
        }
        let mut q = vec![BigInt::zero(); r.len() - g.len() + 1];
        while r.len() >= g.len() && !r.is_empty() {
            let (quo, rem) = r.last().unwrap().div_rem(&lead);
            if !rem.is_zero() {
                return None;
            }
            let shift = r.len() - g.len();
            for (i, gc) in g.iter().enumerate() {
                r[shift + i] -= &quo * gc;
            }
            q[shift] = quo;
            trim(&mut r);
        }
        if r.is_empty() {
            Some(q)
        } else {
            None
        }
    }

    pub fn content(f: &[BigInt]) -> BigInt {
        f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive(f: &[BigInt]) -> Vec<BigInt> {
        let c = content(f);
        if c.is_zero() {
            return f.to_vec();
        }
        f.iter().map(|x| x / &c).collect()
    }

    /// Pseudo-remainder of `f` by `g`.
    fn prem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
        let mut r = f.to_vec();
        trim(&mut r);
        let lead = g.last().unwrap().clone();
        while r.len() >= g.len() && !r.is_empty() {
            let top = r.last().unwrap().clone();
            let shift = r.len() - g.len();
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (i, gc) in g.iter().enumerate() {
                r[shift + i] -= &top * gc;
            }
            trim(&mut r);
        }
        r
    }

    /// Greatest common divisor in `Z[t]` via the primitive remainder sequence,
    /// with positive leading coefficient.
    pub fn gcd(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        trim(&mut a);
        trim(&mut b);
        if a.is_empty() {
            return normalize_sign(b);
        }
        if b.is_empty() {
            return normalize_sign(a);
        }
        let cont = content(&a).gcd(&content(&b));
        let mut a = primitive(&a);
        let mut b = primitive(&b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = prem(&a, &b);
            if r.is_empty() {
                let out: Vec<BigInt> = b.iter().map(|x| x * &cont).collect();
                return normalize_sign(out);
            }
            a = b;
            b = primitive(&r);
        }
    }

    fn normalize_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
        if v.last().is_some_and(|c| c.is_negative()) {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
        v
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(v)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, divisor)
    }
    fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::from_terms([(-e, c.clone())]))
    }
    fn domain_name() -> &'static str {
        "laurent"
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_default() -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *terms.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

fn render_term(f: &mut fmt::Formatter<'_>, e: i64, c: &BigInt) -> fmt::Result {
    if e == 0 {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "t^{e}")
    } else {
        write!(f, "{c}*t^{e}")
    }
}

/// Renders as `c_k*t^k + ...` with exponents descending, e.g. `t^2 - 2*t^1 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() && *e != 0 && (-c).is_one() {
                    write!(f, "-t^{e}")?;
                } else {
                    render_term(f, *e, c)?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
                render_term(f, *e, &-c)?;
            } else {
                write!(f, " + ")?;
                render_term(f, *e, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Accepts the rendered form as well as loose literals such as `1+t`,
/// `t^-1`, `2*t^3-1`, `-2t`.
impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| LaurentError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let chars: Vec<char> = compact.chars().collect();
        // split into signed terms at '+'/'-' that do not follow '^'
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for (i, &ch) in chars.iter().enumerate() {
            let is_sep = (ch == '+' || ch == '-') && (i == 0 || chars[i - 1] != '^');
            if is_sep {
                if !cur.is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                } else if i != 0 {
                    return Err(err("dangling sign"));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        pieces.push((negative, cur));

        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, body) in pieces {
            let (coeff_part, exp) = match body.find('t') {
                None => (body.as_str(), 0i64),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<i64>().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("unexpected text after t"));
                    };
                    let head = &body[..pos];
                    (head.strip_suffix('*').unwrap_or(head), exp)
                }
            };
            let coeff = if coeff_part.is_empty() {
                if exp == 0 && !body.contains('t') {
                    return Err(err("empty term"));
                }
                BigInt::one()
            } else {
                coeff_part
                    .parse::<BigInt>()
                    .map_err(|_| err("bad coefficient"))?
            };
            terms.push((exp, if neg { -coeff } else { coeff }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
