//! Structural checks on the eta polynomials: the hat sum, homogeneity,
//! triangularity against the `b_λ` basis, reconstruction from the top
//! class, and the splitting formula.

use num_bigint::BigInt;

use super::covers::{rectangle, EtaCache};
use super::tally::Tally;
use super::{Check, Report};
use crate::error::Result;
use crate::eta::{eta_via_divided_differences, single_eta, top_class};
use crate::polyring::Polynomial;
use crate::quotient::{
    b_lambda, expand_in_b_basis, expand_in_eta_basis, reduced_monomials, typed_partition_count, RewriteSystem,
};
use crate::schubert::{schubert_poly, splitting_rhs, type_a_difference, Permutation};
use crate::weyl::{top_partition, KStrictPartition, TypedPartition};

type Z = Polynomial<BigInt>;

fn shapes(k: u32, max_weight: u32) -> Vec<KStrictPartition> {
    (0..=max_weight)
        .flat_map(|d| KStrictPartition::of_size(k, d))
        .collect()
}

fn typed(k: u32, max_weight: u32) -> Vec<TypedPartition> {
    (0..=max_weight)
        .flat_map(|d| TypedPartition::of_size(k, d))
        .collect()
}

/// `Ĥ_λ` is the sum of `H_λ` over the typings of `λ`, and every `H_λ`,
/// `Ĥ_λ` is homogeneous of degree `|λ|`.
pub fn hat_sums(ks: &[u32], max_weight: u32, cache: &mut EtaCache) -> Report {
    let mut report = Report::new();
    for &k in ks {
        let mut split = Tally::new(
            "hat-sum",
            format!("k={k} |λ|<={max_weight} Hhat = H + H' when a part is k"),
        );
        let mut plain = Tally::new("hat-sum", format!("k={k} |λ|<={max_weight} Hhat = H otherwise"));
        let mut graded = Tally::new(
            "hat-sum",
            format!("k={k} |λ|<={max_weight} H and Hhat homogeneous of degree |λ|"),
        );
        let mut single = Tally::new(
            "hat-sum",
            format!("k={k} |λ|<={max_weight} single eta is H at t = 0"),
        );
        for shape in shapes(k, max_weight) {
            let tally = if shape.has_part_k() {
                &mut split
            } else {
                &mut plain
            };
            let mut deg_ok = true;
            let sides = (|| -> Result<(Z, Z)> {
                let mut sum = Z::zero();
                for lam in shape.typings() {
                    let h = cache.double(&lam)?.clone();
                    deg_ok &= h.is_homogeneous_of(lam.size(), k);
                    let s = single_eta::<BigInt>(&lam)?;
                    single.truth(s == h.at_t_zero() && s.max_t_index() == 0, || format!("{lam}"));
                    sum += h;
                }
                let hat = cache.hat(&shape)?.clone();
                deg_ok &= hat.is_homogeneous_of(shape.size(), k);
                Ok((hat, sum))
            })();
            tally.equal(|| format!("{shape}"), sides);
            graded.truth(deg_ok, || format!("{shape}"));
        }
        for t in [split, plain, graded, single] {
            report.push(t.finish());
        }
    }
    report
}

/// `H_λ(c|t) = b_λ + Σ a_μ b_μ` with `μ` strictly dominating `λ` or of
/// smaller weight, and `{H_λ}` expands as a unit vector in its own basis.
pub fn basis_triangularity(ks: &[u32], max_weight: u32, cache: &mut EtaCache) -> Report {
    let mut report = Report::new();
    for &k in ks {
        let mut tri = Tally::new(
            "basis",
            format!("k={k} |λ|<={max_weight} H in the b basis is unitriangular"),
        );
        let mut unit = Tally::new(
            "basis",
            format!("k={k} |λ|<={max_weight} H in the H basis is a unit vector"),
        );
        for lam in typed(k, max_weight) {
            let outcome = (|| -> Result<std::result::Result<(), String>> {
                let h = cache.double(&lam)?.clone();
                let exp = expand_in_b_basis(&h, k)?;
                if exp.get(&lam).map(|c| c == &Z::one()) != Some(true) {
                    return Ok(Err(format!("coefficient of b[{lam}] is not 1")));
                }
                for (mu, _) in exp.iter() {
                    let smaller = mu.size() < lam.size();
                    let above = mu.size() == lam.size()
                        && mu.shape() != lam.shape()
                        && mu.shape().dominates(lam.shape());
                    if mu != &lam && !smaller && !above {
                        return Ok(Err(format!("b[{mu}] appears")));
                    }
                }
                let back = exp.recombine(|mu| Ok(b_lambda(mu)))?;
                if !RewriteSystem::shared(k).eq_mod_ideal(&back, &h) {
                    return Ok(Err("recombination differs".to_string()));
                }
                Ok(Ok(()))
            })();
            match outcome {
                Ok(Ok(())) => tri.pass(),
                Ok(Err(why)) => tri.fail(|| format!("{lam}: {why}")),
                Err(e) => tri.fail(|| format!("{lam}: {e}")),
            }
            let unit_ok = (|| -> Result<bool> {
                let exp = expand_in_eta_basis(cache.double(&lam)?, k)?;
                Ok(exp.len() == 1 && exp.get(&lam).map(|c| c == &Z::one()) == Some(true))
            })();
            match unit_ok {
                Ok(ok) => unit.truth(ok, || format!("{lam}")),
                Err(e) => unit.fail(|| format!("{lam}: {e}")),
            }
        }
        report.push(tri.finish());
        report.push(unit.finish());
    }
    report
}

/// Reduced monomials of degree `d` are as many as typed k-strict
/// partitions of `d`.
pub fn basis_dimensions(ks: &[u32], max_degree: u32) -> Report {
    let mut report = Report::new();
    for &k in ks {
        let mut tally = Tally::new(
            "basis",
            format!("k={k} d<={max_degree} reduced monomials match typed partitions"),
        );
        for d in 0..=max_degree {
            let (m, p) = (reduced_monomials(k, d).len(), typed_partition_count(k, d));
            tally.truth(m == p, || format!("d={d}: {m} monomials, {p} partitions"));
        }
        report.push(tally.finish());
    }
    report
}

/// Divided differences applied to the top class recover every `H_λ` in
/// the rank-`n` rectangle modulo the ideal.
pub fn reconstruction(k: u32, n: u32, cache: &mut EtaCache) -> Report {
    let mut report = Report::new();
    let sys = RewriteSystem::shared(k);
    let top = top_partition(k, n);
    let name = format!("k={k} n={n} top class equals H[{top}]");
    report.push(match (top_class::<BigInt>(k, n), cache.double(&top)) {
        (Ok(a), Ok(b)) if &a == b => Check::pass("reconstruction", name),
        (Ok(_), Ok(_)) => Check::fail("reconstruction", name, "differs in Z[b,t]"),
        (Err(e), _) | (_, Err(e)) => Check::fail("reconstruction", name, e.to_string()),
    });
    let mut tally = Tally::new(
        "reconstruction",
        format!("k={k} n={n} divided differences of the top class give H"),
    );
    let mut exact = 0;
    for lam in rectangle(k, n) {
        let sides = (|| -> Result<(Z, Z)> {
            Ok((eta_via_divided_differences(&lam, n)?, cache.double(&lam)?.clone()))
        })();
        match sides {
            Ok((a, b)) => {
                exact += usize::from(a == b);
                tally.truth(sys.eq_mod_ideal(&a, &b), || format!("{lam}"));
            }
            Err(e) => tally.fail(|| format!("{lam}: {e}")),
        }
    }
    let total = rectangle(k, n).len();
    report.push(tally.finish().with_note(format!("{exact} of {total} exact")));
    report
}

/// The splitting formula modulo the ideal, and a witness that it fails
/// in `Z[b, t]`.
pub fn splitting(ks: &[u32], max_weight: u32, cache: &mut EtaCache) -> Report {
    let mut report = Report::new();
    let mut witnesses = Vec::new();
    for &k in ks {
        let sys = RewriteSystem::shared(k);
        let mut tally = Tally::new(
            "splitting",
            format!("k={k} |λ|<={max_weight} H = sum of H_μ(c) S(-t) mod J"),
        );
        for lam in typed(k, max_weight) {
            match (splitting_rhs::<BigInt>(&lam), cache.double(&lam)) {
                (Ok(rhs), Ok(lhs)) => {
                    if &rhs != lhs {
                        witnesses.push(format!("k={k} {lam}"));
                    }
                    tally.truth(sys.eq_mod_ideal(lhs, &rhs), || format!("{lam}"));
                }
                (Err(e), _) | (_, Err(e)) => tally.fail(|| format!("{lam}: {e}")),
            }
        }
        report.push(tally.finish());
    }
    let name = format!("k in {ks:?} |λ|<={max_weight} splitting needs the ideal somewhere");
    report.push(if witnesses.is_empty() {
        Check::fail("splitting", name, "exact in Z[b,t] for every λ")
    } else {
        Check::pass("splitting", name).with_note(format!(
            "{} instances, first {}",
            witnesses.len(),
            witnesses[0]
        ))
    });
    report.push(schubert_laws(5));
    report
}

/// `∂_i S_u = S_{u s_i}` on descents, `S_u` homogeneous of degree `ℓ(u)`,
/// over all of `S_n`.
pub fn schubert_laws(n: usize) -> Check {
    let mut tally = Tally::new("splitting", format!("S_{n} Schubert descent and degree laws"));
    for u in permutations(n) {
        let outcome = (|| -> Result<bool> {
            let s = schubert_poly::<BigInt>(&u)?;
            let mut ok = s.is_homogeneous_of(u.length() as u32, 1);
            for i in 1..n as u32 {
                let v = u.right_mul(i);
                let d = type_a_difference(i, &s)?;
                ok &= if v.length() < u.length() {
                    d == schubert_poly(&v)?
                } else {
                    d.is_zero()
                };
            }
            Ok(ok)
        })();
        match outcome {
            Ok(ok) => tally.truth(ok, || format!("{u}")),
            Err(e) => tally.fail(|| format!("{u}: {e}")),
        }
    }
    tally.finish()
}

fn permutations(n: usize) -> Vec<Permutation> {
    fn rec(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::from_window(cur.clone()).expect("a permutation"));
            return;
        }
        for idx in 0..rest.len() {
            let x = rest.remove(idx);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(idx, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n as i32).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges() {
        let mut cache = EtaCache::new();
        for report in [
            hat_sums(&[1, 2], 4, &mut cache),
            basis_triangularity(&[1, 2], 4, &mut cache),
            basis_dimensions(&[1, 2, 3], 6),
            reconstruction(1, 3, &mut cache),
            splitting(&[1, 2], 3, &mut cache),
        ] {
            assert!(report.all_passed(), "{report}");
        }
    }
}
