//! The named polynomial families built from `b`, `c` and `t`.
//!
//! Conventions: `c_0 = b_0 = 1`, `c_p = b_p = 0` for `p < 0`, and
//! `c_p = b_p, b_k + b̃_k, 2 b_p` according as `p < k`, `p = k`, `p > k`.
//! `h^r_j(-t)` with `r < 0` means `e^{-r}_j(-t)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::poly::{Monomial, Polynomial, Var};
use crate::error::{EtaError, Result};
use crate::scalar::Scalar;

/// Which degree-`k` variable plays the role of `f_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FVariant {
    /// `f_k = b_k`.
    Bk,
    /// `f_k = b̃_k`.
    BTildeK,
    /// `f_k = a_k = c_k / 2`; needs a scalar ring containing `1/2`.
    Ak,
}

impl FVariant {
    /// The correction used in row `i` (1-based) of a hatted product:
    /// odd rows take `b̃_k`, even rows `b_k`.
    pub fn for_row(i: usize) -> FVariant {
        if i % 2 == 1 {
            FVariant::BTildeK
        } else {
            FVariant::Bk
        }
    }
}

type MonoList = Arc<Vec<Monomial>>;
type SymCache = RwLock<HashMap<(bool, u32, u32), MonoList>>;

fn sym_cache() -> &'static SymCache {
    static CACHE: OnceLock<SymCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Monomials of `e_j(t_1..t_r)` (`elementary`) or `h_j(t_1..t_r)`; every
/// coefficient of both is one.
fn sym_monomials(elementary: bool, r: u32, j: u32) -> MonoList {
    if let Some(m) = sym_cache().read().unwrap().get(&(elementary, r, j)) {
        return m.clone();
    }
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(elementary: bool, r: u32, left: u32, start: u32, stack: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_pairs(stack.iter().map(|&i| (Var::T(i), 1))));
            return;
        }
        for i in start..=r {
            stack.push(i);
            let next = if elementary { i + 1 } else { i };
            rec(elementary, r, left - 1, next, stack, out);
            stack.pop();
        }
    }
    rec(elementary, r, j, 1, &mut stack, &mut out);
    let list = Arc::new(out);
    sym_cache()
        .write()
        .unwrap()
        .insert((elementary, r, j), list.clone());
    list
}

fn sym_poly<C: Scalar>(elementary: bool, j: i64, r: i64, negate: bool) -> Polynomial<C> {
    if j < 0 {
        return Polynomial::zero();
    }
    if r == 0 {
        return if j == 0 {
            Polynomial::one()
        } else {
            Polynomial::zero()
        };
    }
    if r < 0 {
        return sym_poly(!elementary, j, -r, negate);
    }
    if elementary && j > r {
        return Polynomial::zero();
    }
    let sign = if negate && j % 2 == 1 { -C::one() } else { C::one() };
    Polynomial::from_terms(
        sym_monomials(elementary, r as u32, j as u32)
            .iter()
            .map(|m| (m.clone(), sign.clone())),
    )
}

/// `e^r_j(t)`, or `e^r_j(-t)` when `negate`. For `r < 0` this is
/// `h^{-r}_j`, mirroring the convention for `h`.
pub fn e_sym<C: Scalar>(j: i64, r: i64, negate: bool) -> Polynomial<C> {
    sym_poly(true, j, r, negate)
}

/// `h^r_j(t)`, or `h^r_j(-t)` when `negate`; `h^r_j := e^{-r}_j` for `r < 0`.
pub fn h_sym<C: Scalar>(j: i64, r: i64, negate: bool) -> Polynomial<C> {
    sym_poly(false, j, r, negate)
}

/// `c_p` written in the `b` variables.
pub fn c<C: Scalar>(p: i64, k: u32) -> Polynomial<C> {
    let k = k as i64;
    match p {
        _ if p < 0 => Polynomial::zero(),
        0 => Polynomial::one(),
        _ if p < k => Polynomial::b(p as u32),
        _ if p == k => Polynomial::b(p as u32) + Polynomial::btilde(),
        _ => Polynomial::b(p as u32).scale_i64(2),
    }
}

/// `Σ_{j=lo}^p c_{p-j} h^r_j(-t)`.
fn c_tail<C: Scalar>(p: i64, r: i64, k: u32, lo: i64) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for j in lo.max(0)..=p {
        let h = h_sym::<C>(j, r, true);
        if h.is_zero() {
            continue;
        }
        out += c::<C>(p - j, k) * h;
    }
    out
}

/// `c^r_p = Σ_{j=0}^p c_{p-j} h^r_j(-t)`.
pub fn c_r<C: Scalar>(p: i64, r: i64, k: u32) -> Polynomial<C> {
    c_tail(p, r, k, 0)
}

/// `2 a^s_p = c_p + 2 Σ_{j=1}^p c_{p-j} h^s_j(-t)`; integral.
pub fn two_a_s<C: Scalar>(p: i64, s: i64, k: u32) -> Polynomial<C> {
    if p < 0 {
        return Polynomial::zero();
    }
    c::<C>(p, k) + c_tail::<C>(p, s, k, 1).scale_i64(2)
}

/// `a^s_p = c_p / 2 + Σ_{j=1}^p c_{p-j} h^s_j(-t)`.
pub fn a_s<C: Scalar>(p: i64, s: i64, k: u32) -> Result<Polynomial<C>> {
    two_a_s::<C>(p, s, k).try_halve().ok_or(EtaError::NonIntegral)
}

/// `b^s_k = b_k + Σ_{j=1}^k c_{k-j} h^s_j(-t)`.
pub fn b_s<C: Scalar>(s: i64, k: u32) -> Polynomial<C> {
    Polynomial::b(k) + c_tail::<C>(k as i64, s, k, 1)
}

/// `b̃^s_k = b̃_k + Σ_{j=1}^k c_{k-j} h^s_j(-t)`.
pub fn btilde_s<C: Scalar>(s: i64, k: u32) -> Polynomial<C> {
    Polynomial::btilde() + c_tail::<C>(k as i64, s, k, 1)
}

/// `2 f_k`.
pub fn two_f<C: Scalar>(v: FVariant, k: u32) -> Polynomial<C> {
    match v {
        FVariant::Bk => Polynomial::b(k).scale_i64(2),
        FVariant::BTildeK => Polynomial::btilde().scale_i64(2),
        FVariant::Ak => c::<C>(k as i64, k),
    }
}

/// `f_k`.
pub fn f<C: Scalar>(v: FVariant, k: u32) -> Result<Polynomial<C>> {
    match v {
        FVariant::Bk => Ok(Polynomial::b(k)),
        FVariant::BTildeK => Ok(Polynomial::btilde()),
        FVariant::Ak => c::<C>(k as i64, k).try_halve().ok_or(EtaError::NonIntegral),
    }
}

/// `f^s_k = f_k + Σ_{j=1}^k c_{k-j} h^s_j(-t)`.
pub fn f_s<C: Scalar>(s: i64, k: u32, v: FVariant) -> Result<Polynomial<C>> {
    Ok(f::<C>(v, k)? + c_tail::<C>(k as i64, s, k, 1))
}

/// `f̃_k = c_k - f_k`.
pub fn ftilde<C: Scalar>(k: u32, v: FVariant) -> Result<Polynomial<C>> {
    Ok(c::<C>(k as i64, k) - f::<C>(v, k)?)
}

/// `f̃^s_k = c_k - 2 f_k + f^s_k`.
pub fn ftilde_s<C: Scalar>(s: i64, k: u32, v: FVariant) -> Result<Polynomial<C>> {
    Ok(c::<C>(k as i64, k) - two_f::<C>(v, k) + f_s::<C>(s, k, v)?)
}

/// `ĉ^r_p = c^r_p + (2 f_k - c_k) e^{p-k}_{p-k}(-t)` when `r = k - p < 0`,
/// and `c^r_p` otherwise.
pub fn c_hat<C: Scalar>(p: i64, r: i64, k: u32, v: FVariant) -> Polynomial<C> {
    let base = c_r::<C>(p, r, k);
    let s = p - k as i64;
    if r == -s && s > 0 {
        let corr = two_f::<C>(v, k) - c::<C>(k as i64, k);
        base + corr * e_sym::<C>(s, s, true)
    } else {
        base
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = Polynomial<BigInt>;

    fn t(i: u32) -> P {
        P::t(i)
    }

    #[test]
    fn c_follows_the_b_conversion() {
        assert_eq!(c::<BigInt>(0, 3), P::one());
        assert_eq!(c::<BigInt>(-2, 3), P::zero());
        assert_eq!(c::<BigInt>(2, 3), P::b(2));
        assert_eq!(c::<BigInt>(3, 3), P::b(3) + P::btilde());
        assert_eq!(c::<BigInt>(5, 3), P::b(5).scale_i64(2));
    }

    #[test]
    fn symmetric_polynomial_examples() {
        assert_eq!(e_sym::<BigInt>(1, 1, true), -t(1));
        assert_eq!(h_sym::<BigInt>(2, 1, true), t(1) * t(1));
        assert_eq!(h_sym::<BigInt>(0, 5, false), P::one());
        assert_eq!(e_sym::<BigInt>(3, 2, false), P::zero());
        assert_eq!(h_sym::<BigInt>(2, -1, true), P::zero());
        assert_eq!(h_sym::<BigInt>(1, -2, true), -(t(1) + t(2)));
        assert_eq!(e_sym::<BigInt>(-1, 4, false), P::zero());
        // h_2(t1,t2) has three monomials
        assert_eq!(h_sym::<BigInt>(2, 2, false).num_terms(), 3);
    }

    #[test]
    fn c_r_examples() {
        let k = 2;
        assert_eq!(c_r::<BigInt>(1, 1, k), c::<BigInt>(1, k) - t(1));
        assert_eq!(c_r::<BigInt>(1, -1, k), c::<BigInt>(1, k) - t(1));
        for p in -1..6 {
            assert_eq!(c_r::<BigInt>(p, 0, k), c::<BigInt>(p, k));
        }
        assert_eq!(c_r::<BigInt>(0, 4, k), P::one());
        assert_eq!(c_r::<BigInt>(-1, 4, k), P::zero());
    }

    #[test]
    fn a_b_f_families() {
        for k in 1..4u32 {
            let half_c = c::<BigRational>(3, k).try_halve().unwrap();
            assert_eq!(a_s::<BigRational>(3, 0, k).unwrap(), half_c);
            assert_eq!(b_s::<BigInt>(0, k), P::b(k));
            assert_eq!(btilde_s::<BigInt>(0, k), P::btilde());
        }
        assert_eq!(btilde_s::<BigInt>(1, 1), P::btilde() - t(1));
        // c_1 is b_1 for k = 2, so a^0_1 is not integral
        assert_eq!(a_s::<BigInt>(1, 0, 2), Err(EtaError::NonIntegral));
        assert_eq!(f_s::<BigInt>(1, 1, FVariant::Bk).unwrap(), P::b(1) - t(1));
        let ft = ftilde_s::<BigInt>(0, 2, FVariant::BTildeK).unwrap();
        assert_eq!(ft, P::b(2));
    }

    #[test]
    fn c_hat_examples() {
        let k = 1;
        // r = k - p < 0, odd index
        let lhs = c_hat::<BigInt>(2, -1, k, FVariant::BTildeK);
        let rhs = c_r::<BigInt>(2, -1, k) + (P::btilde().scale_i64(2) - c::<BigInt>(1, k)) * (-t(1));
        assert_eq!(lhs, rhs);
        // even index: 2 b_1 - c_1 = b_1 - b̃_1 since c_1 = b_1 + b̃_1 at k = 1
        let lhs = c_hat::<BigInt>(2, -1, 1, FVariant::Bk);
        assert_eq!(lhs, c_r::<BigInt>(2, -1, 1) - t(1) * (P::b(1) - P::btilde()));
        assert_eq!(lhs, P::b(2).scale_i64(2) - (t(1) * P::b(1)).scale_i64(2));
        // no correction off the diagonal r = k - p
        assert_eq!(c_hat::<BigInt>(3, -1, 1, FVariant::Bk), c_r::<BigInt>(3, -1, 1));
        assert_eq!(c_hat::<BigInt>(1, 0, 1, FVariant::Bk), c_r::<BigInt>(1, 0, 1));
        // the a_k variant never corrects
        assert_eq!(c_hat::<BigInt>(4, -2, 2, FVariant::Ak), c_r::<BigInt>(4, -2, 2));
    }

    #[test]
    fn row_parity() {
        assert_eq!(FVariant::for_row(1), FVariant::BTildeK);
        assert_eq!(FVariant::for_row(2), FVariant::Bk);
        assert_eq!(FVariant::for_row(5), FVariant::BTildeK);
    }
}
