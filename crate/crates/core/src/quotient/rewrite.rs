//! Normal forms modulo the relation ideal `J^(k)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::polyring::{c, Monomial, Polynomial, Var};
use crate::scalar::Scalar;

/// A reducible pattern inside a monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Redex {
    /// `b_p^2` with `p > k`.
    Square(u32),
    /// `b_k b̃_k`.
    Mixed,
}

/// The rewriting system of `J^(k)`:
/// `b_p^2 → -Σ_{i=1}^p (-1)^i b_{p+i} c_{p-i}` for `p > k` and
/// `b_k b̃_k → -Σ_{i=1}^k (-1)^i b_{k+i} b_{k-i}`.
///
/// Normal forms of pure `b`-monomials are memoized; the memo never changes
/// observable results.
pub struct RewriteSystem {
    k: u32,
    memo: RwLock<HashMap<Monomial, Arc<Polynomial<BigInt>>>>,
}

impl RewriteSystem {
    pub fn new(k: u32) -> Self {
        RewriteSystem {
            k,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// A process-wide instance for `k`.
    pub fn shared(k: u32) -> Arc<RewriteSystem> {
        static SYSTEMS: OnceLock<RwLock<HashMap<u32, Arc<RewriteSystem>>>> = OnceLock::new();
        let systems = SYSTEMS.get_or_init(Default::default);
        if let Some(s) = systems.read().unwrap().get(&k) {
            return s.clone();
        }
        systems
            .write()
            .unwrap()
            .entry(k)
            .or_insert_with(|| Arc::new(RewriteSystem::new(k)))
            .clone()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// All redexes of a monomial, largest subscript first.
    pub fn redexes(&self, m: &Monomial) -> Vec<Redex> {
        let mut out: Vec<Redex> = m
            .iter()
            .filter_map(|(v, e)| match v {
                Var::B(p) if p > self.k && e >= 2 => Some(Redex::Square(p)),
                _ => None,
            })
            .collect();
        out.reverse();
        if m.exponent(Var::B(self.k)) > 0 && m.exponent(Var::BTilde) > 0 {
            out.push(Redex::Mixed);
        }
        out
    }

    pub fn is_reduced(&self, m: &Monomial) -> bool {
        self.redexes(m).is_empty()
    }

    /// The right-hand side of the rule for `redex`.
    pub fn rule_rhs<C: Scalar>(&self, redex: Redex) -> Polynomial<C> {
        let k = self.k;
        let mut out = Polynomial::zero();
        match redex {
            Redex::Square(p) => {
                for i in 1..=p {
                    let term = Polynomial::<C>::b(p + i) * c::<C>((p - i) as i64, k);
                    out += if i % 2 == 1 { term } else { -term };
                }
            }
            Redex::Mixed => {
                for i in 1..=k {
                    let low = if i == k {
                        Polynomial::one()
                    } else {
                        Polynomial::b(k - i)
                    };
                    let term = Polynomial::<C>::b(k + i) * low;
                    out += if i % 2 == 1 { term } else { -term };
                }
            }
        }
        out
    }

    /// Rewrite one occurrence of `redex` in `m`.
    pub fn apply<C: Scalar>(&self, m: &Monomial, redex: Redex) -> Polynomial<C> {
        let rest = match redex {
            Redex::Square(p) => m.div_var(Var::B(p), 2),
            Redex::Mixed => m
                .div_var(Var::B(self.k), 1)
                .and_then(|r| r.div_var(Var::BTilde, 1)),
        }
        .expect("redex occurs in the monomial");
        self.rule_rhs::<C>(redex).mul_monomial(&rest)
    }

    fn reduce_b_monomial(&self, m: &Monomial) -> Arc<Polynomial<BigInt>> {
        if let Some(hit) = self.memo.read().unwrap().get(m) {
            return hit.clone();
        }
        let result = match self.redexes(m).first() {
            None => Polynomial::monomial(m.clone()),
            Some(&redex) => {
                let mut out = Polynomial::zero();
                for (mono, coeff) in self.apply::<BigInt>(m, redex).into_terms() {
                    out.add_scaled(&self.reduce_b_monomial(&mono), &coeff);
                }
                out
            }
        };
        let result = Arc::new(result);
        self.memo.write().unwrap().insert(m.clone(), result.clone());
        result
    }

    /// The normal form: no `b_p^2` with `p > k` and no `b_k b̃_k` remain.
    pub fn normal_form<C: Scalar>(&self, f: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (bpart, tpart) in f.split_b() {
            if self.is_reduced(&bpart) {
                out += tpart.mul_monomial(&bpart);
                continue;
            }
            let nf = self.reduce_b_monomial(&bpart);
            for (mono, coeff) in nf.terms() {
                out.add_scaled_shifted(&tpart, &C::from_bigint(coeff), mono);
            }
        }
        out
    }

    /// Exhaustive rewriting where `choose(n)` picks which of the `n`
    /// currently available (term, redex) pairs to rewrite next. Not
    /// memoized; used to test that the normal form is order independent.
    pub fn normal_form_with<C: Scalar>(
        &self,
        f: &Polynomial<C>,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Polynomial<C> {
        let mut cur = f.clone();
        loop {
            let sites: Vec<(Monomial, Redex)> = cur
                .terms()
                .flat_map(|(m, _)| self.redexes(m).into_iter().map(move |r| (m.clone(), r)))
                .collect();
            if sites.is_empty() {
                return cur;
            }
            let (m, redex) = sites[choose(sites.len()) % sites.len()].clone();
            let coeff = cur.coeff(&m);
            cur.add_term(m.clone(), -coeff.clone());
            cur.add_scaled(&self.apply::<C>(&m, redex), &coeff);
        }
    }

    pub fn eq_mod_ideal<C: Scalar>(&self, f: &Polynomial<C>, g: &Polynomial<C>) -> bool {
        self.normal_form(&(f - g)).is_zero()
    }

    /// The generators of `J^(k)` of degree at most `max_degree`, as
    /// polynomials `lhs - rhs`.
    pub fn generators<C: Scalar>(&self, max_degree: u32) -> Vec<Polynomial<C>> {
        let k = self.k;
        let mut out = Vec::new();
        if 2 * k <= max_degree {
            out.push(Polynomial::b(k) * Polynomial::btilde() - self.rule_rhs::<C>(Redex::Mixed));
        }
        for p in k + 1..=max_degree / 2 {
            out.push(Polynomial::b(p).pow(2) - self.rule_rhs::<C>(Redex::Square(p)));
        }
        out
    }
}

/// Normal form modulo `J^(k)`.
pub fn normal_form<C: Scalar>(f: &Polynomial<C>, k: u32) -> Polynomial<C> {
    RewriteSystem::shared(k).normal_form(f)
}

/// Whether `f ≡ g` modulo `J^(k)`.
pub fn eq_mod_ideal<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>, k: u32) -> bool {
    RewriteSystem::shared(k).eq_mod_ideal(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<BigInt>;

    #[test]
    fn examples() {
        let bt = P::btilde();
        assert_eq!(normal_form(&(P::b(1) * &bt), 1), P::b(2));
        assert_eq!(normal_form(&P::b(3), 1), P::b(3));
        assert_eq!(
            normal_form(&P::b(2).pow(2), 1),
            P::b(3) * P::b(1) + P::b(3) * &bt - P::b(4)
        );
        assert!(eq_mod_ideal(&(P::b(1) * &bt), &P::b(2), 1));
        assert!(!eq_mod_ideal(&(P::b(1) * &bt), &(P::b(1) * &bt + P::t(1)), 1));
    }

    #[test]
    fn normal_forms_are_reduced_and_fixed() {
        let sys = RewriteSystem::new(2);
        let f = P::b(3).pow(3) * P::b(2) * P::btilde().pow(2) + P::b(4).pow(2) * P::t(1).pow(7);
        let nf = sys.normal_form(&f);
        assert!(nf.terms().all(|(m, _)| sys.is_reduced(m)));
        assert_eq!(sys.normal_form(&nf), nf);
        assert!(nf.is_homogeneous_of(f.homogeneous_degree(2).unwrap(), 2));
    }

    #[test]
    fn generators_vanish() {
        for k in 1..=3 {
            let sys = RewriteSystem::new(k);
            for g in sys.generators::<BigInt>(10) {
                assert!(sys.normal_form(&g).is_zero());
            }
        }
    }
}
