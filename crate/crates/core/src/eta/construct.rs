//! `H_λ(c|t)`, `Ĥ_λ(c|t)`, single eta polynomials, the top class and the
//! divided-difference reconstruction.

use super::raising::{expand_raising_parts, RaisingMonomial};
use super::star::{star_sum, HatRule, StarContext};
use crate::error::{EtaError, Result};
use crate::polyring::{c_hat, c_r, divided_difference, FVariant, Polynomial};
use crate::scalar::Scalar;
use crate::weyl::{reduced_word_to_top, top_partition, KStrictPartition, TypedPartition};

/// The monomials of `R^λ` with `Rλ ≥ 0`.
pub fn expand_raising(shape: &KStrictPartition) -> Vec<RaisingMonomial> {
    expand_raising_parts(shape.parts(), &shape.raising_pairs())
}

fn halve_times<C: Scalar>(mut f: Polynomial<C>, times: usize) -> Result<Polynomial<C>> {
    for _ in 0..times {
        f = f.try_halve().ok_or(EtaError::NonIntegral)?;
    }
    Ok(f)
}

/// `2^{-ℓ_k(λ)} R^λ ⋆ ĉ^β_λ` for an arbitrary context.
pub fn eta_with_context<C: Scalar>(shape: &KStrictPartition, ctx: &StarContext) -> Result<Polynomial<C>> {
    let terms = expand_raising(shape);
    let sum = star_sum::<C>(&terms, shape.parts(), ctx);
    let doubled = ctx.middle != super::star::MiddleRow::Absent;
    let out = halve_times(sum, shape.ell_k() + usize::from(doubled))?;
    if !out.is_integral() {
        return Err(EtaError::NonIntegral);
    }
    Ok(out)
}

/// The double eta polynomial `H_λ(c|t)`.
pub fn double_eta<C: Scalar>(lam: &TypedPartition) -> Result<Polynomial<C>> {
    eta_with_context(lam.shape(), &StarContext::for_partition(lam))
}

/// `Ĥ_λ(c|t)` for an untyped k-strict partition.
pub fn double_eta_hat<C: Scalar>(shape: &KStrictPartition) -> Result<Polynomial<C>> {
    eta_with_context(shape, &StarContext::for_hat(shape))
}

/// `Ĥ_λ(c|t)` with the hat correction taken from a single variant in every
/// row.
pub fn double_eta_hat_with<C: Scalar>(shape: &KStrictPartition, hat: HatRule) -> Result<Polynomial<C>> {
    eta_with_context(shape, &StarContext::for_hat(shape).with_hat(hat))
}

/// The single eta polynomial `H_λ(c) = H_λ(c|0)`.
pub fn single_eta<C: Scalar>(lam: &TypedPartition) -> Result<Polynomial<C>> {
    Ok(double_eta::<C>(lam)?.at_t_zero())
}

/// `H_{λ_0}(c|t)` for `λ_0 = (n+k-1, …, 2k)`, evaluated on its own:
/// `2^{k-n} Σ (-1)^{|n|} 2^{#{n_ij > 0}} ∏_i c̄^{β_i}_{ν_i}` with
/// `β = (1-n, …, -k)`, over all exponent tables with `ν ≥ 0`. Rows used by
/// the operator take `c^β_ν`; the remaining rows take `ĉ^β_ν`.
pub fn top_class<C: Scalar>(k: u32, n: u32) -> Result<Polynomial<C>> {
    let top = top_partition(k, n);
    let rows = top.len();
    if rows == 0 {
        return Ok(Polynomial::one());
    }
    let parts: Vec<i64> = top.parts().iter().map(|&p| p as i64).collect();
    let beta: Vec<i64> = (1..=rows as i64).map(|i| i - n as i64).collect();
    let pairs: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|i| (i + 1..=rows).map(move |j| (i, j)))
        .collect();
    let suffix: Vec<i64> = (0..=rows).map(|j| parts[j.min(rows)..].iter().sum()).collect();
    let mut exps = vec![0i64; pairs.len()];
    let mut total = Polynomial::<C>::zero();
    loop {
        let mut nu = parts.clone();
        for (&(i, j), &e) in pairs.iter().zip(&exps) {
            nu[i - 1] += e;
            nu[j - 1] -= e;
        }
        if nu.iter().all(|&x| x >= 0) {
            let used = pairs.iter().zip(&exps).filter(|(_, &e)| e > 0);
            let mut support = vec![false; rows + 1];
            for (&(i, j), _) in used {
                support[i] = true;
                support[j] = true;
            }
            let nonzero = exps.iter().filter(|&&e| e > 0).count() as u32;
            let sign: i64 = if exps.iter().sum::<i64>() % 2 == 0 { 1 } else { -1 };
            let mut term = Polynomial::<C>::from_i64(sign * (1i64 << nonzero));
            for row in 1..=rows {
                let (p, r) = (nu[row - 1], beta[row - 1]);
                let factor = if support[row] {
                    c_r::<C>(p, r, k)
                } else {
                    c_hat::<C>(p, r, k, FVariant::for_row(row))
                };
                term = term * factor;
            }
            total += term;
        }
        // odometer over 0 ≤ n_ij ≤ λ_j + … + λ_rows
        let mut idx = 0;
        loop {
            if idx == pairs.len() {
                let out = halve_times(total, (n - k) as usize)?;
                return if out.is_integral() {
                    Ok(out)
                } else {
                    Err(EtaError::NonIntegral)
                };
            }
            let bound = suffix[pairs[idx].1 - 1];
            if exps[idx] < bound {
                exps[idx] += 1;
                break;
            }
            exps[idx] = 0;
            idx += 1;
        }
    }
}

/// `∂_{a_1} ∘ ⋯ ∘ ∂_{a_r} (H_{λ_0}(c|t))` for the word with
/// `w_λ w_{λ_0} = s_{a_1} ⋯ s_{a_r}`. Agrees with `H_λ(c|t)` modulo `J^(k)`.
pub fn eta_via_divided_differences<C: Scalar>(lam: &TypedPartition, n: u32) -> Result<Polynomial<C>> {
    let k = lam.k();
    let word = reduced_word_to_top(lam, n)?;
    let mut f = top_class::<C>(k, n)?;
    for &a in word.iter().rev() {
        f = divided_difference(a, &f, k)?;
    }
    Ok(f)
}
