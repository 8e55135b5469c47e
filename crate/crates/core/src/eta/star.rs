//! The `⋆` substitution turning a raising operator into a product of
//! `c`-type factors.

use std::collections::{BTreeMap, HashMap};

use super::raising::RaisingMonomial;
use crate::error::{EtaError, Result};
use crate::polyring::{a_s, b_s, btilde_s, c_hat, c_r, two_a_s, FVariant, Polynomial};
use crate::scalar::Scalar;
use crate::weyl::{KStrictPartition, PartitionType, TypedPartition};

/// Which degree-`k` variable the hat correction of `ĉ` uses in a row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HatRule {
    /// `b̃_k` in odd rows, `b_k` in even rows.
    Parity,
    /// The same variant in every row.
    Fixed(FVariant),
}

impl HatRule {
    fn variant(self, row: usize) -> FVariant {
        match self {
            HatRule::Parity => FVariant::for_row(row),
            HatRule::Fixed(v) => v,
        }
    }
}

/// Treatment of row `m = ℓ_k(λ) + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MiddleRow {
    /// Every row follows the `c̄` rule (type 0, or the hatted polynomial).
    Absent,
    /// Type 1: `b^{β_m}_k` unless `R` touches row `m`.
    B,
    /// Type 2: `b̃^{β_m}_k` unless `R` touches row `m`.
    BTilde,
}

/// Data fixed by `λ` for every term of the `⋆` sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarContext {
    pub k: u32,
    pub beta: Vec<i64>,
    pub m: usize,
    pub middle: MiddleRow,
    pub hat: HatRule,
}

impl StarContext {
    /// The context of `H_λ(c|t)`.
    pub fn for_partition(lam: &TypedPartition) -> Self {
        let middle = match lam.ty() {
            PartitionType::Zero => MiddleRow::Absent,
            PartitionType::One => MiddleRow::B,
            PartitionType::Two => MiddleRow::BTilde,
        };
        StarContext {
            k: lam.k(),
            beta: lam.beta(lam.len()),
            m: lam.ell_k() + 1,
            middle,
            hat: HatRule::Parity,
        }
    }

    /// The context of `Ĥ_λ(c|t)`: `β̄(λ)` and the `c̄` rule in every row.
    pub fn for_hat(shape: &KStrictPartition) -> Self {
        StarContext {
            k: shape.k(),
            beta: shape.beta_bar(shape.len()),
            m: shape.ell_k() + 1,
            middle: MiddleRow::Absent,
            hat: HatRule::Parity,
        }
    }

    pub fn with_hat(mut self, hat: HatRule) -> Self {
        self.hat = hat;
        self
    }
}

/// One factor of `R ⋆ ĉ^β_λ`, before evaluation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Factor {
    /// `c^β_ν`.
    Plain { nu: i64, beta: i64 },
    /// `ĉ^β_ν` with the given correction variant.
    Hat { nu: i64, beta: i64, variant: FVariant },
    /// `2 a^β_ν`.
    TwoA { nu: i64, beta: i64 },
    /// `b^β_k`.
    B { beta: i64 },
    /// `b̃^β_k`.
    BTilde { beta: i64 },
}

impl Factor {
    /// The factor as a polynomial; `TwoA` evaluates to `2 a^β_ν`.
    pub fn eval<C: Scalar>(self, k: u32) -> Polynomial<C> {
        match self {
            Factor::Plain { nu, beta } => c_r(nu, beta, k),
            Factor::Hat { nu, beta, variant } => c_hat(nu, beta, k, variant),
            Factor::TwoA { nu, beta } => two_a_s(nu, beta, k),
            Factor::B { beta } => b_s(beta, k),
            Factor::BTilde { beta } => btilde_s(beta, k),
        }
    }
}

/// The factors of `R ⋆ ĉ^β_λ` for `ν = Rλ`, row by row.
pub fn factors(r: &RaisingMonomial, nu: &[i64], ctx: &StarContext) -> Vec<Factor> {
    let support = r.support(ctx.m);
    let touched = ctx.middle != MiddleRow::Absent && r.touches(ctx.m);
    (1..=nu.len())
        .map(|row| {
            let (n, beta) = (nu[row - 1], ctx.beta[row - 1]);
            let bar = || {
                if support.contains(&row) {
                    Factor::Plain { nu: n, beta }
                } else {
                    Factor::Hat {
                        nu: n,
                        beta,
                        variant: ctx.hat.variant(row),
                    }
                }
            };
            match ctx.middle {
                MiddleRow::Absent => bar(),
                _ if row < ctx.m => bar(),
                _ if row > ctx.m => Factor::Plain { nu: n, beta },
                _ if touched => Factor::TwoA { nu: n, beta },
                MiddleRow::B => Factor::B { beta },
                MiddleRow::BTilde => Factor::BTilde { beta },
            }
        })
        .collect()
}

/// `R ⋆ ĉ^β_λ` evaluated directly.
pub fn star_apply<C: Scalar>(r: &RaisingMonomial, parts: &[u32], ctx: &StarContext) -> Result<Polynomial<C>> {
    let lam: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
    let nu = r.apply(&lam);
    if nu.iter().any(|&x| x < 0) {
        return Err(EtaError::InvalidPartition(format!(
            "raising operator produces a negative entry: {nu:?}"
        )));
    }
    let mut out = Polynomial::one();
    for f in factors(r, &nu, ctx) {
        let poly = match f {
            Factor::TwoA { nu, beta } => a_s(nu, beta, ctx.k)?,
            other => other.eval(ctx.k),
        };
        out = out * poly;
    }
    Ok(out)
}

/// `Σ coeff · ∏ factor` over rows, evaluated by sharing common row
/// prefixes. Terms whose middle row is a plain `b`-factor are doubled so
/// that the whole sum equals twice the `⋆` sum whenever `ctx` has a middle
/// row.
pub fn star_sum<C: Scalar>(terms: &[RaisingMonomial], parts: &[u32], ctx: &StarContext) -> Polynomial<C> {
    let lam: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
    let doubled = ctx.middle != MiddleRow::Absent;
    let mut grouped: BTreeMap<Vec<Factor>, i64> = BTreeMap::new();
    for r in terms {
        let nu = r.apply(&lam);
        let fs = factors(r, &nu, ctx);
        let scale = if doubled && !fs.iter().any(|f| matches!(f, Factor::TwoA { .. })) {
            2
        } else {
            1
        };
        *grouped.entry(fs).or_insert(0) += r.coeff * scale;
    }
    let entries: Vec<(Vec<Factor>, i64)> = grouped.into_iter().filter(|(_, c)| *c != 0).collect();
    let mut memo: HashMap<Factor, Polynomial<C>> = HashMap::new();
    trie_eval(&entries, 0, ctx.k, &mut memo)
}

fn trie_eval<C: Scalar>(
    entries: &[(Vec<Factor>, i64)],
    depth: usize,
    k: u32,
    memo: &mut HashMap<Factor, Polynomial<C>>,
) -> Polynomial<C> {
    if entries.is_empty() {
        return Polynomial::zero();
    }
    if depth == entries[0].0.len() {
        let total: i64 = entries.iter().map(|(_, c)| c).sum();
        return Polynomial::from_i64(total);
    }
    let mut out = Polynomial::zero();
    let mut start = 0;
    while start < entries.len() {
        let key = entries[start].0[depth];
        let end = start
            + entries[start..]
                .iter()
                .take_while(|(f, _)| f[depth] == key)
                .count();
        let inner = trie_eval(&entries[start..end], depth + 1, k, memo);
        if !inner.is_zero() {
            let factor = memo.entry(key).or_insert_with(|| key.eval(k));
            out += &*factor * &inner;
        }
        start = end;
    }
    out
}
