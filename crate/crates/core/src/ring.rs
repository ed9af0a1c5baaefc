//! Entry domains shared by matrices, representations and solvers.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative integral domain with exact arithmetic.
///
/// Methods take references so generic elimination code never needs to
/// move entries out of a matrix.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// The quotient `self / divisor` when it exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    /// Multiplicative inverse when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self> {
        Self::one().div_exact(self)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Short tag naming the domain in JSON output.
    fn domain_name() -> &'static str;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Self::one().div_exact(self)
        }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Roots of `sum coeffs[k] x^k` that lie in the field itself.
    ///
    /// Only used for best-effort eigenvector searches, so fields without a
    /// practical root finder return nothing.
    fn roots_in_field(_coeffs: &[Self]) -> Vec<Self> {
        Vec::new()
    }
}

/// Exact rationals, the domain of specialized representations.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
    fn domain_name() -> &'static str {
        "rational"
    }
}

impl Field for BigRational {
    fn roots_in_field(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }
}

/// Integer magnitude above which divisor enumeration is abandoned.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// Rational roots by the rational root theorem, deduplicated and sorted.
fn rational_roots(coeffs: &[Q]) -> Vec<Q> {
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(|x| Zero::is_zero(x)) {
        c.pop();
    }
    if c.len() < 2 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip the factor x^k
    let shift = c.iter().take_while(|x| Zero::is_zero(*x)).count();
    if shift > 0 {
        roots.push(<Q as Zero>::zero());
        c.drain(..shift);
    }
    if c.len() < 2 {
        return roots;
    }
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
    let (Some(p_div), Some(q_div)) = (
        small_divisors(&ints[0].abs()),
        small_divisors(&ints[ints.len() - 1].abs()),
    ) else {
        return roots;
    };
    for p in &p_div {
        for qd in &q_div {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), qd.clone());
                let val = ints
                    .iter()
                    .rev()
                    .fold(<Q as Zero>::zero(), |acc, k| acc * &cand + BigRational::from_integer(k.clone()));
                if Zero::is_zero(&val) && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n: u64 = n.try_into().ok()?;
    if n == 0 || n > ROOT_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}
