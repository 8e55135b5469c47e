use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{Monomial, Polynomial, Var};

/// A random monomial of exactly `degree` in `b̃_k, b_1..b_max_b, t_1..t_max_t`.
/// `b_weight` biases the choice toward `b` variables.
pub(crate) fn random_monomial(
    rng: &mut ChaCha8Rng,
    degree: u32,
    k: u32,
    max_b: u32,
    max_t: u32,
    b_weight: f64,
) -> Monomial {
    let mut left = degree;
    let mut m = Monomial::one();
    while left > 0 {
        let var = if rng.gen_bool(b_weight) {
            let top = max_b.min(left);
            let p = rng.gen_range(1..=top);
            if p == k && rng.gen_bool(0.5) {
                Var::BTilde
            } else {
                Var::B(p)
            }
        } else {
            Var::T(rng.gen_range(1..=max_t))
        };
        left -= var.degree(k);
        m = m.mul(&Monomial::var(var));
    }
    m
}

/// A random homogeneous polynomial of the given degree with small
/// nonzero integer coefficients.
pub(crate) fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    degree: u32,
    k: u32,
    terms: usize,
    b_weight: f64,
) -> Polynomial<BigInt> {
    let mut f = Polynomial::zero();
    for _ in 0..terms {
        let m = random_monomial(rng, degree, k, 6, 5, b_weight);
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        f.add_term(m, BigInt::from(c));
    }
    if f.is_zero() {
        f = Polynomial::monomial(random_monomial(rng, degree, k, 6, 5, b_weight));
    }
    f
}
