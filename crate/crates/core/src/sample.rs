//! Seeded random inputs for property checks and sweeps.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::ring::{Ring, Q};

/// Environment variable holding the default seed.
pub const SEED_VAR: &str = "BRAIDREP_SEED";

/// `BRAIDREP_SEED` if set and numeric, else 0.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn rational(rng: &mut impl Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=5)))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Q {
    loop {
        let v = rational(rng);
        if !Ring::is_zero(&v) {
            return v;
        }
    }
}

/// Up to `max_terms` terms with exponents in `-3..=3` and coefficients in
/// `-5..=5`.
pub fn laurent(rng: &mut impl Rng, max_terms: usize) -> LaurentPoly {
    let k = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        (0..k).map(|_| (rng.gen_range(-3..=3), BigInt::from(rng.gen_range(-5..=5)))),
    )
}

/// `(a, c)` with `a^2 - t0 c^2 != 0`, so the singular block is invertible.
pub fn ac_pair(rng: &mut impl Rng, t0: &Q) -> (Q, Q) {
    loop {
        let (a, c) = (rational(rng), rational(rng));
        if !Ring::is_zero(&(&a * &a - t0 * &c * &c)) {
            return (a, c);
        }
    }
}

/// `(a, c)` on the line `a + c = 1` with `a^2 - c^2 != 0`.
pub fn ac_pair_on_line(rng: &mut impl Rng) -> (Q, Q) {
    loop {
        let a = rational(rng);
        let c = Q::from_i64(1) - &a;
        if !Ring::is_zero(&(&a * &a - &c * &c)) {
            return (a, c);
        }
    }
}

/// `V diag(e1, e2) V^-1` with random signs and a random invertible `V`.
pub fn involution(rng: &mut impl Rng) -> Matrix<Q> {
    let v = loop {
        let m = Matrix::from_fn(2, 2, |_, _| rational(rng));
        if !Ring::is_zero(&m.det().expect("square")) {
            break m;
        }
    };
    let sign = |b: bool| if b { Q::from_i64(1) } else { Q::from_i64(-1) };
    let d = Matrix::from_rows(vec![
        vec![sign(rng.gen()), Q::from_i64(0)],
        vec![Q::from_i64(0), sign(rng.gen())],
    ]);
    v.mul(&d)
        .and_then(|x| x.mul(&v.inverse()?))
        .expect("invertible 2x2")
}
