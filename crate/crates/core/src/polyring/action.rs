//! The action of the type D Weyl group on `Z[b, t]` by ring automorphisms,
//! and the divided differences `∂_i`.

use std::collections::HashMap;

use super::families::c_r;
use super::poly::{Accumulator, Monomial, Polynomial, Var};
use crate::error::{EtaError, Result};
use crate::scalar::Scalar;

fn swap_t(m: &Monomial, i: u32) -> Monomial {
    Monomial::from_pairs(m.iter().map(|(v, e)| match v {
        Var::T(j) if j == i => (Var::T(i + 1), e),
        Var::T(j) if j == i + 1 => (Var::T(i), e),
        _ => (v, e),
    }))
}

/// Image of a generator under `s_0`.
pub fn s0_generator<C: Scalar>(v: Var, k: u32) -> Polynomial<C> {
    let t12 = Polynomial::<C>::t(1) + Polynomial::t(2);
    match v {
        Var::T(1) => -Polynomial::t(2),
        Var::T(2) => -Polynomial::t(1),
        Var::T(_) => Polynomial::var(v),
        Var::BTilde => Polynomial::btilde() - t12 * c_r::<C>(k as i64 - 1, 2, k),
        Var::B(p) => {
            let mult = if p < k { 2 } else { 1 };
            Polynomial::b(p) - (t12 * c_r::<C>(p as i64 - 1, 2, k)).scale_i64(mult)
        }
    }
}

/// `s_i(f)`. For `i >= 1`, `s_i` swaps `t_i` and `t_{i+1}`. `s_0` sends
/// `(t_1, t_2) -> (-t_2, -t_1)` and moves `b_p`, `b̃_k` by multiples of
/// `(t_1 + t_2) c^2_{p-1}`.
pub fn weyl_action<C: Scalar>(i: u32, f: &Polynomial<C>, k: u32) -> Polynomial<C> {
    if i >= 1 {
        return f.map_monomials(|m| (swap_t(m, i), false));
    }
    let mut images: HashMap<Monomial, Polynomial<C>> = HashMap::new();
    images.insert(Monomial::one(), Polynomial::one());
    let mut out = Polynomial::zero();
    for (bm, tpart) in f.split_b() {
        let timg = tpart.map_monomials(|m| {
            let e1 = m.exponent(Var::T(1));
            let e2 = m.exponent(Var::T(2));
            (swap_t(m, 1), (e1 + e2) % 2 == 1)
        });
        let bimg = b_image(&bm, k, &mut images);
        out += bimg * timg;
    }
    out
}

fn b_image<C: Scalar>(m: &Monomial, k: u32, memo: &mut HashMap<Monomial, Polynomial<C>>) -> Polynomial<C> {
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let (v, _) = m.iter().last().expect("non-unit monomial");
    let rest = m.div_var(v, 1).expect("variable present");
    let img = b_image(&rest, k, memo) * s0_generator::<C>(v, k);
    memo.insert(m.clone(), img.clone());
    img
}

/// Exact quotient of `num` by the linear form `t_a + sigma t_b`.
pub fn divide_by_linear<C: Scalar>(num: &Polynomial<C>, a: u32, b: u32, sigma: i64) -> Option<Polynomial<C>> {
    if num.is_zero() {
        return Some(Polynomial::zero());
    }
    let parts = num.split_var(Var::T(a));
    let top = parts.len() - 1;
    let tb = Monomial::var(Var::T(b));
    let neg_sigma = C::from_i64(-sigma);
    // num = Σ_e t_a^e N_e, quotient = Σ_e t_a^e Q_e, N_e = Q_{e-1} + σ t_b Q_e
    let mut q: Vec<Polynomial<C>> = vec![Polynomial::zero(); top];
    let mut carry = Polynomial::<C>::zero();
    for e in (0..=top).rev() {
        let mut cur = parts[e].clone();
        cur.add_scaled_shifted(&carry, &neg_sigma, &tb);
        if e == 0 {
            if !cur.is_zero() {
                return None;
            }
        } else {
            q[e - 1] = cur.clone();
            carry = cur;
        }
    }
    let mut out = Polynomial::zero();
    for (e, qe) in q.into_iter().enumerate() {
        out.add_scaled_shifted(&qe, &C::one(), &Monomial::var_pow(Var::T(a), e as u32));
    }
    Some(out)
}

/// `∂_0 f = (f - s_0 f) / (t_1 + t_2)` and
/// `∂_i f = (f - s_i f) / (t_{i+1} - t_i)` for `i >= 1`.
pub fn divided_difference<C: Scalar>(i: u32, f: &Polynomial<C>, k: u32) -> Result<Polynomial<C>> {
    if i >= 1 {
        return Ok(swap_difference(i, f));
    }
    let num = f - &weyl_action(i, f, k);
    let (a, b, sigma) = if i == 0 { (1, 2, 1) } else { (i + 1, i, -1) };
    divide_by_linear(&num, a, b, sigma)
        .ok_or_else(|| EtaError::Internal(format!("f - s_{i}(f) is not divisible by the root of s_{i}")))
}

/// `(f - s_i f) / (t_{i+1} - t_i)` term by term: with `x = t_i`, `y = t_{i+1}`
/// and `d = |a - b|`, the quotient of `x^a y^b - x^b y^a` by `y - x` is
/// `∓ (xy)^{min(a,b)} Σ_{j<d} x^{d-1-j} y^j`.
fn swap_difference<C: Scalar>(i: u32, f: &Polynomial<C>) -> Polynomial<C> {
    let (x, y) = (Var::T(i), Var::T(i + 1));
    let mut acc = Accumulator::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        let (a, b) = (m.exponent(x), m.exponent(y));
        if a == b {
            continue;
        }
        let (rest, _) = m.remove(x);
        let (rest, _) = rest.remove(y);
        let low = a.min(b);
        let d = a.max(b) - low;
        let coeff = if a > b { -c.clone() } else { c.clone() };
        for j in 0..d {
            let shift = Monomial::from_pairs([(x, low + d - 1 - j), (y, low + j)]);
            acc.add(rest.mul(&shift), coeff.clone());
        }
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::families::c;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn simple_examples() {
        assert_eq!(weyl_action(2, &P::t(2), 1), P::t(3));
        for k in 1..4 {
            let c1 = c::<BigInt>(1, k);
            let expect = &c1 - &(P::t(1) + P::t(2)).scale_i64(2);
            assert_eq!(weyl_action(0, &c1, k), expect);
            let bt = P::btilde();
            let expect = &bt - &((P::t(1) + P::t(2)) * c_r::<BigInt>(k as i64 - 1, 2, k));
            assert_eq!(weyl_action(0, &bt, k), expect);
        }
    }

    #[test]
    fn divided_difference_examples() {
        for k in 1..4u32 {
            for p in 0..7i64 {
                let lhs = divided_difference(0, &c::<BigInt>(p, k), k).unwrap();
                assert_eq!(lhs, c_r::<BigInt>(p - 1, 2, k).scale_i64(2), "k={k} p={p}");
            }
            let expect = c_r::<BigInt>(k as i64 - 1, 2, k);
            assert_eq!(divided_difference(0, &P::b(k), k).unwrap(), expect);
            assert_eq!(divided_difference(0, &P::btilde(), k).unwrap(), expect);
        }
        for i in 0..5 {
            assert!(divided_difference(i, &P::one(), 2).unwrap().is_zero());
        }
        assert_eq!(divided_difference(1, &P::t(1), 1).unwrap(), P::from_i64(-1));
        assert_eq!(divided_difference(0, &P::t(1), 1).unwrap(), P::one());
    }

    #[test]
    fn linear_division_detects_remainder() {
        let num = P::t(1) * P::t(1) + P::one();
        assert!(divide_by_linear(&num, 1, 2, 1).is_none());
        let num = P::t(1) * P::t(1) - P::t(2) * P::t(2);
        assert_eq!(divide_by_linear(&num, 1, 2, 1).unwrap(), P::t(1) - P::t(2));
        assert!(divide_by_linear(&P::b(3), 1, 2, 1).is_none());
    }
}
