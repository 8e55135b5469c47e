//! Type A Schubert polynomials and the splitting of `H_λ(c|t)` into single
//! eta polynomials times Schubert polynomials in `-t`.

use std::fmt;
use std::str::FromStr;

use crate::error::{EtaError, Result};
use crate::eta::single_eta;
use crate::polyring::{divide_by_linear, weyl_action, Monomial, Polynomial, Var};
use crate::scalar::Scalar;
use crate::weyl::{SignedPermutation, TypedPartition};

/// A permutation of `{1, 2, ...}` fixing all but finitely many values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(SignedPermutation);

impl Permutation {
    pub fn identity() -> Self {
        Permutation(SignedPermutation::identity())
    }

    /// From a one-line window of positive integers.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        if window.iter().any(|&x| x <= 0) {
            return Err(EtaError::InvalidPermutation(format!(
                "{window:?}: entries of a permutation must be positive"
            )));
        }
        SignedPermutation::from_window(window).map(Permutation)
    }

    /// The underlying element of `W̃_∞`, if it has no sign changes.
    pub fn from_signed(w: SignedPermutation) -> Option<Self> {
        w.is_unsigned().then_some(Permutation(w))
    }

    /// The longest element of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation(SignedPermutation::from_window((1..=n as i32).rev().collect()).expect("valid window"))
    }

    pub fn as_signed(&self) -> &SignedPermutation {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0.get(i)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        self.0.length()
    }

    pub fn inverse(&self) -> Self {
        Permutation(self.0.inverse())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(self.0.compose(&other.0))
    }

    /// `self · s_i`, which swaps the entries in positions `i` and `i+1`.
    pub fn right_mul(&self, i: u32) -> Self {
        let i = i as usize;
        let mut w = self.0.window(i + 1);
        w.swap(i - 1, i);
        Permutation(SignedPermutation::from_window(w).expect("swap keeps a permutation"))
    }

    /// A reduced word `a_1 ... a_r` with `self = s_{a_1} ⋯ s_{a_r}`.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.len()).find(|&i| w.get(i) > w.get(i + 1)) {
            word.push(i as u32);
            w = w.right_mul(i as u32);
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = EtaError;

    fn from_str(s: &str) -> Result<Self> {
        let w: SignedPermutation = s.parse()?;
        Permutation::from_signed(w)
            .ok_or_else(|| EtaError::InvalidPermutation(format!("{s}: entries must be positive")))
    }
}

/// `∂^A_i f = (f - s_i f) / (t_i - t_{i+1})` on polynomials in `t`.
pub fn type_a_difference<C: Scalar>(i: u32, f: &Polynomial<C>) -> Result<Polynomial<C>> {
    let num = f - &weyl_action(i, f, 1);
    divide_by_linear(&num, i, i + 1, -1)
        .ok_or_else(|| EtaError::Internal(format!("f - s_{i}(f) is not divisible by t_{i} - t_{}", i + 1)))
}

/// The Schubert polynomial `S_u(t)`, obtained from `t_1^{n-1} t_2^{n-2} ⋯`
/// by divided differences along a reduced word of `w_0 u`.
pub fn schubert_poly<C: Scalar>(u: &Permutation) -> Result<Polynomial<C>> {
    let n = u.len();
    if n <= 1 {
        return Ok(Polynomial::one());
    }
    let staircase = Monomial::from_pairs((1..n as u32).map(|i| (Var::T(i), n as u32 - i)));
    let down = Permutation::longest(n).compose(u);
    let mut f = Polynomial::monomial(staircase);
    for i in down.reduced_word() {
        f = type_a_difference(i, &f)?;
    }
    Ok(f)
}

/// All `(u, μ)` with `u w_μ = w_λ`, `u ∈ S_∞` and `ℓ(w_λ) = ℓ(u) + ℓ(w_μ)`.
pub fn reduced_right_factors(lam: &TypedPartition) -> Vec<(Permutation, TypedPartition)> {
    let w = lam.to_perm();
    let total = w.length();
    let mut out = Vec::new();
    for size in 0..=lam.size() {
        for mu in TypedPartition::of_size(lam.k(), size) {
            let wmu = mu.to_perm();
            if wmu.len() > w.len() {
                continue;
            }
            let Some(u) = Permutation::from_signed(w.compose(&wmu.inverse())) else {
                continue;
            };
            if u.length() + wmu.length() == total {
                out.push((u, mu));
            }
        }
    }
    out.sort();
    out
}

/// `Σ H_μ(c) S_{u^{-1}}(-t)` over the reduced factorizations `u w_μ = w_λ`.
pub fn splitting_rhs<C: Scalar>(lam: &TypedPartition) -> Result<Polynomial<C>> {
    let mut out = Polynomial::zero();
    for (u, mu) in reduced_right_factors(lam) {
        out += single_eta::<C>(&mu)? * schubert_poly::<C>(&u.inverse())?.negate_t();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(
            schubert_poly::<BigInt>(&Permutation::identity()).unwrap(),
            P::one()
        );
        assert_eq!(schubert_poly::<BigInt>(&perm("2,1")).unwrap(), P::t(1));
        assert_eq!(
            schubert_poly::<BigInt>(&perm("1,3,2")).unwrap(),
            P::t(1) + P::t(2)
        );
        assert_eq!(
            schubert_poly::<BigInt>(&perm("3,1,2")).unwrap(),
            P::t(1) * P::t(1)
        );
        assert_eq!(
            schubert_poly::<BigInt>(&perm("2,3,1")).unwrap(),
            P::t(1) * P::t(2)
        );
    }

    #[test]
    fn stable_under_fixed_points() {
        for s in ["2,1", "1,3,2", "3,1,2", "2,3,1"] {
            let mut w: Vec<i32> = s.split(',').map(|x| x.parse().unwrap()).collect();
            let small = Permutation::from_window(w.clone()).unwrap();
            w.push(w.len() as i32 + 1);
            w.push(w.len() as i32 + 1);
            let big = Permutation::from_window(w).unwrap();
            assert_eq!(
                schubert_poly::<BigInt>(&small).unwrap(),
                schubert_poly::<BigInt>(&big).unwrap()
            );
        }
    }

    #[test]
    fn factorizations_of_small_partitions() {
        let empty = TypedPartition::parse("-", 1).unwrap();
        assert_eq!(
            reduced_right_factors(&empty),
            vec![(Permutation::identity(), empty.clone())]
        );
        let one = TypedPartition::parse("1:t1", 1).unwrap();
        let f = reduced_right_factors(&one);
        assert_eq!(f.len(), 2);
        assert!(f.contains(&(Permutation::identity(), one.clone())));
        assert!(f.contains(&(perm("2,1"), empty.clone())));
        let one2 = TypedPartition::parse("1:t2", 1).unwrap();
        assert_eq!(
            reduced_right_factors(&one2),
            vec![(Permutation::identity(), one2.clone())]
        );
    }

    #[test]
    fn splitting_small_cases() {
        let one = TypedPartition::parse("1:t1", 1).unwrap();
        assert_eq!(splitting_rhs::<BigInt>(&one).unwrap(), P::b(1) - P::t(1));
        let one2 = TypedPartition::parse("1:t2", 1).unwrap();
        assert_eq!(splitting_rhs::<BigInt>(&one2).unwrap(), P::btilde());
        let empty = TypedPartition::parse("-", 2).unwrap();
        assert_eq!(splitting_rhs::<BigInt>(&empty).unwrap(), P::one());
    }
}
