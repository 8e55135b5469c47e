//! Bases of `B^(k)[t]` over `Z[t]` and triangular expansion in them.

use std::collections::{BTreeMap, HashMap};

use super::rewrite::RewriteSystem;
use crate::error::{EtaError, Result};
use crate::eta::double_eta;
use crate::polyring::{c, Monomial, Polynomial, Var};
use crate::scalar::Scalar;
use crate::weyl::{KStrictPartition, PartitionType, TypedPartition};

/// Coefficients in `Z[t]` of an element of `B^(k)[t]` in some basis
/// indexed by typed k-strict partitions.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisExpansion<C: Scalar> {
    coeffs: BTreeMap<TypedPartition, Polynomial<C>>,
}

impl<C: Scalar> BasisExpansion<C> {
    pub fn new() -> Self {
        BasisExpansion {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn get(&self, lam: &TypedPartition) -> Option<&Polynomial<C>> {
        self.coeffs.get(lam)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TypedPartition, &Polynomial<C>)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `coeff` to the entry for `lam`, dropping it if it cancels.
    pub fn add(&mut self, lam: TypedPartition, coeff: Polynomial<C>) {
        let entry = self.coeffs.entry(lam.clone()).or_insert_with(Polynomial::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&lam);
        }
    }

    /// `Σ a_λ · basis(λ)`.
    pub fn recombine(
        &self,
        basis: impl Fn(&TypedPartition) -> Result<Polynomial<C>>,
    ) -> Result<Polynomial<C>> {
        let mut out = Polynomial::zero();
        for (lam, a) in &self.coeffs {
            out += a * &basis(lam)?;
        }
        Ok(out)
    }
}

impl<C: Scalar> Default for BasisExpansion<C> {
    fn default() -> Self {
        Self::new()
    }
}

/// `b_λ = 2^{-ℓ_k(λ)} c_λ`, where row `m = ℓ_k(λ) + 1` of `c_λ` carries
/// `b_k` (type 1) or `b̃_k` (type 2). The factors `c_p = 2 b_p` for `p > k`
/// absorb the power of two.
pub fn b_lambda<C: Scalar>(lam: &TypedPartition) -> Polynomial<C> {
    let k = lam.k();
    let m = lam.ell_k() + 1;
    let mut out = Polynomial::one();
    for (idx, &p) in lam.parts().iter().enumerate() {
        let factor = if p > k {
            Polynomial::b(p)
        } else if idx + 1 == m && lam.ty() == PartitionType::One {
            Polynomial::b(k)
        } else if idx + 1 == m && lam.ty() == PartitionType::Two {
            Polynomial::btilde()
        } else {
            c::<C>(p as i64, k)
        };
        out = out * factor;
    }
    out
}

/// The reduced monomial `∏_{λ_i ≠ k} b_{λ_i} · (b_k or b̃_k)^{#{i : λ_i = k}}`
/// that leads `b_λ`.
pub fn leading_monomial(lam: &TypedPartition) -> Monomial {
    let k = lam.k();
    let mult = lam.parts().iter().filter(|&&p| p == k).count() as u32;
    let mut pairs: Vec<(Var, u32)> = Vec::new();
    for &p in lam.parts() {
        if p != k {
            pairs.push((Var::B(p), 1));
        }
    }
    match lam.ty() {
        PartitionType::Zero => {}
        PartitionType::One => pairs.push((Var::B(k), mult)),
        PartitionType::Two => pairs.push((Var::BTilde, mult)),
    }
    Monomial::from_pairs(pairs)
}

/// Inverse of [`leading_monomial`] on reduced pure-`b` monomials.
pub fn monomial_partition(m: &Monomial, k: u32) -> Option<TypedPartition> {
    let mut parts = Vec::new();
    let mut ty = 0;
    for (v, e) in m.iter() {
        match v {
            Var::T(_) => return None,
            Var::BTilde => {
                if ty == 1 {
                    return None;
                }
                ty = 2;
                parts.extend(std::iter::repeat_n(k, e as usize));
            }
            Var::B(p) => {
                if p == k {
                    if ty == 2 {
                        return None;
                    }
                    ty = 1;
                }
                if p > k && e > 1 {
                    return None;
                }
                parts.extend(std::iter::repeat_n(p, e as usize));
            }
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    TypedPartition::from_parts(k, parts, ty).ok()
}

/// Every reduced pure-`b` monomial of weighted degree `d`, built directly
/// from the exponent rules (free `b_1..b_{k-1}`, a power of exactly one of
/// `b_k`, `b̃_k`, squarefree `b_p` for `p > k`).
pub fn reduced_monomials(k: u32, d: u32) -> Vec<Monomial> {
    fn rec(k: u32, p: u32, left: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        if p > left {
            return;
        }
        rec(k, p + 1, left, cur, out);
        let max_e = if p > k { 1 } else { left / p };
        let vars: &[Var] = if p == k {
            &[Var::B(p), Var::BTilde]
        } else {
            &[Var::B(p)]
        };
        for &v in vars {
            for e in 1..=max_e {
                cur.push((v, e));
                rec(k, p + 1, left - e * p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, 1, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Which `b`-degree the unitriangular solve eliminates first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveOrder {
    /// Each basis element is `b`-homogeneous.
    Homogeneous,
    /// Basis elements have lower-degree `b` tails (the `H_λ(c|t)` basis).
    HighestDegreeFirst,
}

/// Expand `f` in a basis `{B_λ}` of `B^(k)[t]` whose element `B_λ` has
/// normal form `leading_monomial(λ)` plus terms that are larger in
/// dominance or of lower `b`-degree.
pub fn expand_triangular<C: Scalar>(
    f: &Polynomial<C>,
    k: u32,
    order: SolveOrder,
    basis: &dyn Fn(&TypedPartition) -> Result<Polynomial<C>>,
) -> Result<BasisExpansion<C>> {
    let sys = RewriteSystem::shared(k);
    let mut residual = sys.normal_form(f);
    let mut out = BasisExpansion::new();
    let mut cache: HashMap<TypedPartition, Polynomial<C>> = HashMap::new();
    while !residual.is_zero() {
        let split = residual.split_b();
        let mut best: Option<(i64, TypedPartition)> = None;
        for mono in split.keys() {
            let lam = monomial_partition(mono, k)
                .ok_or_else(|| EtaError::Internal(format!("{mono} is not a reduced basis monomial")))?;
            let deg = lam.size() as i64;
            let key = match order {
                SolveOrder::Homogeneous => deg,
                SolveOrder::HighestDegreeFirst => -deg,
            };
            let better = match &best {
                None => true,
                Some((bk, bl)) => (key, lam.parts()) < (*bk, bl.parts()),
            };
            if better {
                best = Some((key, lam));
            }
        }
        let (_, lam) = best.expect("nonzero residual has a term");
        let lead = leading_monomial(&lam);
        let a = split[&lead].clone();
        if !cache.contains_key(&lam) {
            cache.insert(lam.clone(), sys.normal_form(&basis(&lam)?));
        }
        let element = &cache[&lam];
        residual -= &(&a * element);
        if residual.split_b().contains_key(&lead) {
            return Err(EtaError::Internal(format!(
                "basis element for {lam} is not unitriangular"
            )));
        }
        out.add(lam, a);
    }
    Ok(out)
}

/// Coefficients of `f` in the `b_λ` basis.
pub fn expand_in_b_basis<C: Scalar>(f: &Polynomial<C>, k: u32) -> Result<BasisExpansion<C>> {
    expand_triangular(f, k, SolveOrder::Homogeneous, &|lam| Ok(b_lambda(lam)))
}

/// Coefficients of `f` in the `H_λ(c|t)` basis.
pub fn expand_in_eta_basis<C: Scalar>(f: &Polynomial<C>, k: u32) -> Result<BasisExpansion<C>> {
    expand_triangular(f, k, SolveOrder::HighestDegreeFirst, &|lam| double_eta(lam))
}

/// Typed k-strict partitions of `d`, counted independently of monomials.
pub fn typed_partition_count(k: u32, d: u32) -> usize {
    KStrictPartition::of_size(k, d)
        .iter()
        .map(|s| s.typings().len())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn tp(s: &str, k: u32) -> TypedPartition {
        TypedPartition::parse(s, k).unwrap()
    }

    #[test]
    fn b_lambda_examples() {
        assert_eq!(b_lambda::<BigInt>(&tp("1:t2", 1)), P::btilde());
        assert_eq!(b_lambda::<BigInt>(&TypedPartition::empty(1)), P::one());
        assert_eq!(b_lambda::<BigInt>(&tp("3", 1)), P::b(3));
        assert_eq!(
            b_lambda::<BigInt>(&tp("3,1,1:t1", 1)),
            P::b(3) * P::b(1) * (P::b(1) + P::btilde())
        );
    }

    #[test]
    fn monomials_match_partitions() {
        for k in 1..=3 {
            for d in 0..=8 {
                let monos = reduced_monomials(k, d);
                assert_eq!(monos.len(), typed_partition_count(k, d), "k={k} d={d}");
                for m in &monos {
                    let lam = monomial_partition(m, k).unwrap();
                    assert_eq!(&leading_monomial(&lam), m);
                }
            }
        }
    }

    #[test]
    fn expansion_round_trips() {
        let k = 1;
        let lam = tp("2,1,1:t2", 1);
        let e = expand_in_b_basis(&b_lambda::<BigInt>(&lam), k).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&lam), Some(&P::one()));
        let f = P::b(2).pow(2) * P::t(1) + P::btilde() * P::b(1) - P::t(2).pow(3);
        let e = expand_in_b_basis(&f, k).unwrap();
        let back = e.recombine(|l| Ok(b_lambda(l))).unwrap();
        assert!(RewriteSystem::shared(k).eq_mod_ideal(&back, &f));
    }
}
