//! Covers `w_λ = s_i w_μ` between k-Grassmannian elements, and the maximal
//! element of a rank-`n` rectangle.

use std::fmt;

use super::partition::{KStrictPartition, PartitionType, TypedPartition};
use super::signed::SignedPermutation;
use crate::error::{EtaError, Result};

/// The shape of `w_λ` around the values moved by `s_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CoverCase {
    /// `(⋯ i+1 ⋯ i ⋯)`
    A,
    /// `(⋯ i ⋯ -(i+1) ⋯)`
    B,
    /// `(-i ⋯ -(i+1) ⋯)`
    C,
    /// `(⋯ -(i+1) ⋯ i ⋯)` with `w_1 ≠ -(i+1)`
    D1,
    /// `(-(i+1) ⋯ i ⋯)`
    D2,
    /// `(±1 ⋯ -2 ⋯)`
    E,
    /// `(±2 ⋯ -1 ⋯)`
    F,
    /// `(⋯ -2, -1 ⋯)` with `|w_1| > 2`
    G,
}

impl fmt::Display for CoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoverCase::A => "a",
            CoverCase::B => "b",
            CoverCase::C => "c",
            CoverCase::D1 => "d1",
            CoverCase::D2 => "d2",
            CoverCase::E => "e",
            CoverCase::F => "f",
            CoverCase::G => "g",
        };
        f.write_str(s)
    }
}

/// One cover `w_λ = s_i w_μ` with `ℓ(w_λ) = ℓ(w_μ) + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverDatum {
    pub mu: TypedPartition,
    pub i: u32,
    pub case: CoverCase,
    /// The row with `μ_p = λ_p - 1`.
    pub p: usize,
    /// For case d1, the tail row holding the value `i`.
    pub q: Option<usize>,
}

fn classify(w: &SignedPermutation, i: u32, k: u32) -> Option<(CoverCase, Option<usize>)> {
    let ii = i as i32;
    let pos = |x: i32| w.position(x);
    let before = |x: i32, y: i32| matches!((pos(x), pos(y)), (Some(a), Some(b)) if a < b);
    let w1 = w.get(1);
    if i == 0 {
        if w1.abs() == 1 && pos(-2).is_some() {
            return Some((CoverCase::E, None));
        }
        if w1.abs() == 2 && pos(-1).is_some() {
            return Some((CoverCase::F, None));
        }
        if w1.abs() > 2 {
            if let (Some(a), Some(b)) = (pos(-2), pos(-1)) {
                if b == a + 1 {
                    return Some((CoverCase::G, None));
                }
            }
        }
        return None;
    }
    if before(ii + 1, ii) {
        return Some((CoverCase::A, None));
    }
    if before(ii, -(ii + 1)) {
        return Some((CoverCase::B, None));
    }
    if w1 == -ii && pos(-(ii + 1)).is_some() {
        return Some((CoverCase::C, None));
    }
    if before(-(ii + 1), ii) {
        if w1 == -(ii + 1) {
            return Some((CoverCase::D2, None));
        }
        let q = pos(ii)? - k as usize;
        return Some((CoverCase::D1, Some(q)));
    }
    None
}

/// All covers of `λ`: pairs `(i, μ)` with `w_λ = s_i w_μ` and
/// `ℓ(w_μ) = ℓ(w_λ) - 1`, each classified.
pub fn covers(lam: &TypedPartition) -> Result<Vec<CoverDatum>> {
    let k = lam.k();
    let w = lam.to_perm();
    let len = w.length();
    let mut out = Vec::new();
    if len == 0 {
        return Ok(out);
    }
    for i in 0..=w.len() as u32 {
        let v = w.left_mul(i);
        if v.length() + 1 != len {
            continue;
        }
        let mu = TypedPartition::from_perm(&v, k)?;
        let (case, q) = classify(&w, i, k)
            .ok_or_else(|| EtaError::Internal(format!("descent s_{i} of {w} matches no cover case")))?;
        let p = (1..=lam.len())
            .find(|&j| mu.part(j) + 1 == lam.part(j))
            .ok_or_else(|| EtaError::Internal(format!("{mu} is not {lam} minus a box")))?;
        out.push(CoverDatum { mu, i, case, p, q });
    }
    Ok(out)
}

/// Checks the row-level properties that accompany each cover case: how `β`
/// and `C(λ)` change from `μ` to `λ`.
pub fn check_cover_properties(lam: &TypedPartition, d: &CoverDatum) -> std::result::Result<(), String> {
    let k = lam.k() as usize;
    let w = lam.to_perm();
    let rows = w.len().max(d.mu.to_perm().len()).max(k) - k + 2;
    let beta = lam.beta(rows);
    let beta_mu = d.mu.beta(rows);
    let c_lam = lam.c_set(rows);
    let c_mu = d.mu.c_set(rows);
    let i = d.i as i64;
    let p = d.p;
    let tail = |r: usize| w.get(k + r);
    let b = |r: usize| beta[r - 1];
    let b_mu = |r: usize| beta_mu[r - 1];
    let others_equal =
        |skip: &[usize]| (1..=rows).all(|r| skip.contains(&r) || beta[r - 1] == beta_mu[r - 1]);
    let fail = |what: &str| Err(format!("{lam} -> {} (i={}, case {}): {what}", d.mu, d.i, d.case));

    if lam.ty().index() + d.mu.ty().index() == 3 {
        return fail("types 1 and 2 are mixed");
    }
    if lam.size() != d.mu.size() + 1 || d.mu.part(p) + 1 != lam.part(p) {
        return fail("mu is not lambda minus one box in row p");
    }
    let same_c = c_lam == c_mu;
    match d.case {
        CoverCase::A | CoverCase::D2 => {
            if d.case == CoverCase::D2 && lam.ty() != PartitionType::Two {
                return fail("type must be 2");
            }
            if !(same_c && b(p) == i && b_mu(p) == i + 1 && others_equal(&[p])) {
                return fail("expected beta_p = i, beta'_p = i+1, equal C");
            }
        }
        CoverCase::B | CoverCase::C => {
            if d.case == CoverCase::C
                && (w.get(1) != -(i as i32) || (i >= 2 && lam.ty() != PartitionType::Two))
            {
                return fail("expected w_1 = -i, with type 2 when i >= 2");
            }
            if !(same_c && b(p) == -i && b_mu(p) == 1 - i && others_equal(&[p])) {
                return fail("expected beta_p = -i, beta'_p = 1-i, equal C");
            }
        }
        CoverCase::D1 => {
            let q = d.q.ok_or("case d1 without q")?;
            let mut grown = c_mu.clone();
            grown.insert((p, q));
            let ok = !c_mu.contains(&(p, q))
                && c_lam == grown
                && tail(p) == -(i as i32 + 1)
                && tail(q) == i as i32
                && b(p) == -i
                && b(q) == i
                && b_mu(p) == b(p) + 1
                && b_mu(q) == b(q) + 1
                && others_equal(&[p, q]);
            if !ok {
                return fail("expected C = C' + (p,q) and beta shifts at p and q");
            }
        }
        CoverCase::E => {
            if !(same_c && tail(p) == -2 && b(p) == -1 && b_mu(p) == 1 && others_equal(&[p])) {
                return fail("expected w_{k+p} = -2, beta_p = -1 and beta'_p = 1");
            }
        }
        CoverCase::F => {
            if !(same_c && b_mu(p) == 2 && b(p) == 0 && tail(p) == -1 && others_equal(&[p])) {
                return fail("expected w_{k+p} = -1, beta_p = 0 and beta'_p = 2");
            }
        }
        CoverCase::G => {
            let kk = lam.k();
            let mut grown = c_mu.clone();
            grown.insert((p, p + 1));
            let ok = c_lam == grown
                && !c_mu.contains(&(p, p + 1))
                && tail(p) == -2
                && tail(p + 1) == -1
                && lam.part(p) == kk + 1
                && lam.part(p + 1) == kk
                && d.mu.part(p) == kk
                && d.mu.part(p + 1) == kk
                && b(p) == -1
                && b(p + 1) == 0
                && b_mu(p) == 1
                && b_mu(p + 1) == 2
                && others_equal(&[p, p + 1]);
            if !ok {
                return fail("expected C = C' + (p,p+1) and the stated rows");
            }
        }
    }
    Ok(())
}

/// `λ_0 = (n+k-1, n+k-2, …, 2k)`, the maximal element for rank `n`.
pub fn top_partition(k: u32, n: u32) -> TypedPartition {
    let parts: Vec<u32> = if n > k {
        (2 * k..n + k).rev().collect()
    } else {
        Vec::new()
    };
    TypedPartition::new(
        KStrictPartition::new(k, parts).expect("distinct parts above k"),
        PartitionType::Zero,
    )
    .expect("no part equals k")
}

/// A reduced word `a_1 … a_r` with `w_λ w_{λ_0} = s_{a_1} ⋯ s_{a_r}` and
/// `r = |λ_0| - |λ|`.
pub fn reduced_word_to_top(lam: &TypedPartition, n: u32) -> Result<Vec<u32>> {
    let k = lam.k();
    let rows = n.saturating_sub(k) as usize;
    let cols = n + k - 1;
    if !lam.shape().fits(rows, cols) {
        return Err(EtaError::OutsideRectangle(lam.to_string(), rows, cols));
    }
    let top = top_partition(k, n);
    let u = lam.to_perm().compose(&top.to_perm());
    let word = u.reduced_word();
    if word.len() as u32 != top.size() - lam.size() {
        return Err(EtaError::Internal(format!(
            "w_λ w_λ0 for {lam} has length {} instead of {}",
            word.len(),
            top.size() - lam.size()
        )));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(s: &str, k: u32) -> TypedPartition {
        TypedPartition::parse(s, k).unwrap()
    }

    #[test]
    fn ideal_witness_covers_exist() {
        let c = covers(&tp("2,1:t2", 1)).unwrap();
        assert!(c
            .iter()
            .any(|d| d.i == 1 && d.mu == tp("1,1:t2", 1) && d.case == CoverCase::D1));
        let c = covers(&tp("2,1:t1", 1)).unwrap();
        assert!(c
            .iter()
            .any(|d| d.i == 0 && d.mu == tp("1,1:t1", 1) && d.case == CoverCase::G));
        assert!(covers(&TypedPartition::empty(1)).unwrap().is_empty());
    }

    #[test]
    fn cover_properties_hold() {
        for k in 1..=3 {
            for lam in TypedPartition::enumerate(k, 4, 7) {
                for d in covers(&lam).unwrap() {
                    check_cover_properties(&lam, &d).unwrap();
                    assert_eq!(lam.to_perm(), d.mu.to_perm().left_mul(d.i));
                }
            }
        }
    }

    #[test]
    fn top_and_words() {
        assert_eq!(top_partition(1, 3), tp("3,2", 1));
        assert_eq!(top_partition(2, 2), TypedPartition::empty(2));
        let top = top_partition(1, 3);
        assert!(reduced_word_to_top(&top, 3).unwrap().is_empty());
        let lam = tp("3,1:t1", 1);
        let word = reduced_word_to_top(&lam, 3).unwrap();
        assert_eq!(word.len(), 1);
        assert_eq!(
            SignedPermutation::from_word(&word),
            lam.to_perm().compose(&top.to_perm())
        );
        assert!(reduced_word_to_top(&tp("4", 1), 3).is_err());
    }
}
