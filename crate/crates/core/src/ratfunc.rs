//! The fraction field `Q(t)` of `Z[t, t^-1]`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::laurent::{poly, LaurentError, LaurentPoly};
use crate::ring::{Field, Ring, Q};

/// A quotient `num / den` kept in canonical form: `gcd(num, den)` is a unit,
/// `den` has lowest exponent 0 and a positive lowest coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from(LaurentPoly::zero());
        }
        let (a, n) = num.to_poly();
        let (b, d) = den.to_poly();
        let g = poly::gcd(&n, &d);
        let n = poly::div_exact(&n, &g).expect("gcd divides numerator");
        let d = poly::div_exact(&d, &g).expect("gcd divides denominator");
        let mut num = LaurentPoly::from_poly(a - b, &n);
        let mut den = LaurentPoly::from_poly(0, &d);
        if den.lowest_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    /// Re-normalizes; a no-op on values built through the public API.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn t() -> Self {
        Self::from(LaurentPoly::t())
    }

    /// The value as a Laurent polynomial if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn eval(&self, t0: &Q) -> Result<Q, LaurentError> {
        let d = self.den.eval(t0)?;
        if Zero::is_zero(&d) {
            return Err(LaurentError::PoleAt(t0.to_string()));
        }
        Ok(self.num.eval(t0)? / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.as_integer().is_some() && self.den.as_integer().is_some()
    }

    /// Rational constant value, if `self` does not depend on `t`.
    pub fn as_rational(&self) -> Option<Q> {
        Some(Q::new(self.num.as_integer()?, self.den.as_integer()?))
    }

    pub fn from_rational(v: &Q) -> Self {
        Self::normalized(
            LaurentPoly::from_terms([(0, v.numer().clone())]),
            LaurentPoly::from_terms([(0, v.denom().clone())]),
        )
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::from(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from(LaurentPoly::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::from(LaurentPoly::constant(v))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        Some(Self::normalized(
            &self.num * &divisor.den,
            &self.den * &divisor.num,
        ))
    }
    fn domain_name() -> &'static str {
        "rational-function"
    }
}

impl Field for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_integer().is_some_and(|d| d == 1.into()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(s)
}

/// Parses `p`, `(p)/(q)` or `p/q` where `p` and `q` are Laurent literals.
impl FromStr for RationalFunction {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        match split {
            None => Ok(Self::from(strip_parens(s).parse::<LaurentPoly>()?)),
            Some(i) => {
                let num: LaurentPoly = strip_parens(&s[..i]).parse()?;
                let den: LaurentPoly = strip_parens(&s[i + 1..]).parse()?;
                Self::new(num, den).ok_or_else(|| LaurentError::Parse {
                    input: s.to_string(),
                    reason: "zero denominator".into(),
                })
            }
        }
    }
}

/// Least common multiple of the integer denominators, used when clearing
/// rational scalars into Laurent coefficients.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> num_bigint::BigInt {
    values
        .into_iter()
        .fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn cancels_common_factors() {
        let x = rf("(t^2 - 1)/(t - 1)");
        assert_eq!(x, rf("t + 1"));
        assert_eq!(x.denom(), &LaurentPoly::one());
    }

    #[test]
    fn denominator_normalization() {
        let x = RationalFunction::new(LaurentPoly::one(), "-2*t^3 - t^2".parse().unwrap()).unwrap();
        assert_eq!(x.denom().min_exp(), Some(0));
        assert!(x.denom().lowest_coeff().unwrap().is_positive());
        assert_eq!(x.to_string(), "(-t^-2)/(2*t^1 + 1)");
    }

    #[test]
    fn field_operations() {
        let x = rf("1/(t+1)");
        let y = rf("t/(t+1)");
        assert_eq!(x.add(&y), RationalFunction::one());
        assert_eq!(x.inv().unwrap(), rf("t + 1"));
        assert!(RationalFunction::zero().inv().is_none());
        assert_eq!(rf("2/4"), rf("1/2"));
    }

    #[test]
    fn evaluation_and_poles() {
        let x = rf("1/(t-1)");
        assert_eq!(x.eval(&crate::ring::q(3, 1)).unwrap(), crate::ring::q(1, 2));
        assert!(matches!(x.eval(&crate::ring::q(1, 1)), Err(LaurentError::PoleAt(_))));
    }

    #[test]
    fn display_round_trip() {
        for s in ["t^2 - 1", "(1)/(t^1 + 1)", "(-3*t^-1)/(2)", "0"] {
            let x = rf(s);
            assert_eq!(rf(&x.to_string()), x);
        }
    }
}
