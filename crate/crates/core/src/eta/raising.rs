//! Expansion of `R^λ = ∏_{i<j} (1 - R_ij) ∏_{(i,j) ∈ C} (1 + R_ij)^{-1}`.

use std::collections::BTreeSet;

use crate::weyl::RowPair;

/// A raising operator `∏ R_ij^{n_ij}` with its coefficient in `R^λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RaisingMonomial {
    /// Nonzero exponents `n_ij`, sorted by `(i, j)`.
    pub exponents: Vec<(RowPair, u32)>,
    pub coeff: i64,
}

impl RaisingMonomial {
    pub fn identity() -> Self {
        RaisingMonomial {
            exponents: Vec::new(),
            coeff: 1,
        }
    }

    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        self.exponents
            .iter()
            .find(|(p, _)| *p == (i, j))
            .map_or(0, |&(_, n)| n)
    }

    /// `ν = Rλ`: `ν_a = λ_a + Σ_j n_aj - Σ_h n_ha`.
    pub fn apply(&self, parts: &[i64]) -> Vec<i64> {
        let mut nu = parts.to_vec();
        for &((i, j), n) in &self.exponents {
            nu[i - 1] += n as i64;
            nu[j - 1] -= n as i64;
        }
        nu
    }

    /// `supp_m(R)`: both endpoints of every pair with `n_ij > 0` and `j < m`.
    pub fn support(&self, m: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &((i, j), _) in &self.exponents {
            if j < m {
                out.insert(i);
                out.insert(j);
            }
        }
        out
    }

    /// Whether some factor `R_ij` has `i = row` or `j = row`.
    pub fn touches(&self, row: usize) -> bool {
        self.exponents.iter().any(|&((i, j), _)| i == row || j == row)
    }
}

/// Coefficient of `R_ij^n` in the factor for a single pair.
fn pair_coeff(in_c: bool, n: u32) -> i64 {
    match (in_c, n) {
        (_, 0) => 1,
        (true, n) => {
            if n % 2 == 0 {
                2
            } else {
                -2
            }
        }
        (false, 1) => -1,
        (false, _) => 0,
    }
}

/// All monomials of `R^λ` for a sequence of `parts.len()` rows whose image
/// `Rλ` is componentwise nonnegative. `c_pairs` lists the pairs with the
/// inverse factor `(1 + R_ij)^{-1}`.
pub fn expand_raising_parts(parts: &[u32], c_pairs: &BTreeSet<RowPair>) -> Vec<RaisingMonomial> {
    let len = parts.len();
    let mut out = Vec::new();
    if len < 2 {
        out.push(RaisingMonomial::identity());
        return out;
    }
    // Columns are filled from the last row upward; when column j is
    // chosen, its outflow Σ_{l>j} n_jl is already known.
    let mut outflow = vec![0i64; len + 1];
    let mut chosen: Vec<(RowPair, u32)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn column(
        j: usize,
        parts: &[u32],
        c_pairs: &BTreeSet<RowPair>,
        outflow: &mut Vec<i64>,
        chosen: &mut Vec<(RowPair, u32)>,
        coeff: i64,
        out: &mut Vec<RaisingMonomial>,
    ) {
        if j == 1 {
            let mut exps: Vec<_> = chosen.iter().copied().filter(|&(_, n)| n > 0).collect();
            exps.sort();
            out.push(RaisingMonomial {
                exponents: exps,
                coeff,
            });
            return;
        }
        let budget = parts[j - 1] as i64 + outflow[j];
        rows(j, 1, budget, parts, c_pairs, outflow, chosen, coeff, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn rows(
        j: usize,
        i: usize,
        budget: i64,
        parts: &[u32],
        c_pairs: &BTreeSet<RowPair>,
        outflow: &mut Vec<i64>,
        chosen: &mut Vec<(RowPair, u32)>,
        coeff: i64,
        out: &mut Vec<RaisingMonomial>,
    ) {
        if i == j {
            column(j - 1, parts, c_pairs, outflow, chosen, coeff, out);
            return;
        }
        let in_c = c_pairs.contains(&(i, j));
        let max_n = if in_c { budget } else { budget.min(1) };
        for n in 0..=max_n.max(0) as u32 {
            let c = pair_coeff(in_c, n);
            if c == 0 {
                continue;
            }
            outflow[i] += n as i64;
            chosen.push(((i, j), n));
            rows(
                j,
                i + 1,
                budget - n as i64,
                parts,
                c_pairs,
                outflow,
                chosen,
                coeff * c,
                out,
            );
            chosen.pop();
            outflow[i] -= n as i64;
        }
    }

    column(len, parts, c_pairs, &mut outflow, &mut chosen, 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nus(parts: &[u32], c: &[RowPair]) -> Vec<(Vec<i64>, i64)> {
        let c: BTreeSet<_> = c.iter().copied().collect();
        let lam: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        let mut v: Vec<_> = expand_raising_parts(parts, &c)
            .into_iter()
            .map(|r| (r.apply(&lam), r.coeff))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_expansions() {
        assert_eq!(nus(&[1], &[]), vec![(vec![1], 1)]);
        assert_eq!(nus(&[1, 1], &[]), vec![(vec![1, 1], 1), (vec![2, 0], -1)]);
        assert_eq!(nus(&[2, 1], &[(1, 2)]), vec![(vec![2, 1], 1), (vec![3, 0], -2)]);
    }

    #[test]
    fn images_are_nonnegative() {
        let parts = [5, 3, 2, 2];
        let c: BTreeSet<RowPair> = [(1, 2), (1, 3), (1, 4)].into_iter().collect();
        let lam: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        let list = expand_raising_parts(&parts, &c);
        assert!(list.iter().all(|r| r.apply(&lam).iter().all(|&x| x >= 0)));
        // no duplicate operators
        let mut seen: Vec<_> = list.iter().map(|r| r.exponents.clone()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), list.len());
    }
}
