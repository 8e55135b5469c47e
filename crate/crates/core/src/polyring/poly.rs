//! Sparse polynomials in `Z[b, t]` (and over any [`Scalar`]).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use crate::scalar::Scalar;

/// A generator of `Z[b, t]`.
///
/// The derived order is the canonical variable order
/// `b̃_k < b_1 < b_2 < ... < t_1 < t_2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    /// `b̃_k`; its subscript is the ambient `k`.
    BTilde,
    /// `b_p`, `p >= 1`.
    B(u32),
    /// `t_i`, `i >= 1`.
    T(u32),
}

impl Var {
    /// Degree of the variable when `b̃` stands for `b̃_k`.
    pub fn degree(self, k: u32) -> u32 {
        match self {
            Var::BTilde => k,
            Var::B(p) => p,
            Var::T(_) => 1,
        }
    }

    pub fn is_t(self) -> bool {
        matches!(self, Var::T(_))
    }
}

const T_BASE: u32 = 0x8000;

fn encode(v: Var, e: u32) -> u32 {
    let code = match v {
        Var::BTilde => 0,
        Var::B(p) => {
            debug_assert!((1..T_BASE).contains(&p));
            p
        }
        Var::T(i) => {
            debug_assert!((1..T_BASE).contains(&i));
            T_BASE + i
        }
    };
    debug_assert!(e > 0 && e <= 0xffff);
    (code << 16) | e
}

fn decode(x: u32) -> (Var, u32) {
    let code = x >> 16;
    let v = match code {
        0 => Var::BTilde,
        c if c < T_BASE => Var::B(c),
        c => Var::T(c - T_BASE),
    };
    (v, x & 0xffff)
}

fn code_of(v: Var) -> u32 {
    encode(v, 1) >> 16
}

/// A monomial: sorted list of `(variable, exponent)` with positive
/// exponents, each pair packed into one word (variable code in the high
/// half) so that the derived order is the order on the pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push(encode(v, e));
        }
        Monomial(m)
    }

    /// Build from arbitrary `(variable, exponent)` pairs; repeated variables
    /// are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(Var, u32); 8]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 8]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out.into_iter().map(|(v, e)| encode(v, e)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|&x| decode(x))
    }

    fn find(&self, v: Var) -> std::result::Result<usize, usize> {
        let code = code_of(v);
        self.0.binary_search_by_key(&code, |&x| x >> 16)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.find(v).map(|i| self.0[i] & 0xffff).unwrap_or(0)
    }

    pub fn degree(&self, k: u32) -> u32 {
        self.iter().map(|(v, e)| v.degree(k) * e).sum()
    }

    /// Degree counting only the `b` variables.
    pub fn b_degree(&self, k: u32) -> u32 {
        self.iter()
            .filter(|p| !p.0.is_t())
            .map(|(v, e)| v.degree(k) * e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        // Shared variables merge, so reserving `a.len() + b.len()` would often
        // spill to the heap for a product that fits inline.
        let mut out: SmallVec<[u32; 8]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match (a[i] >> 16).cmp(&(b[j] >> 16)) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i] + (b[j] & 0xffff));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn first_t(&self) -> usize {
        self.0
            .iter()
            .position(|&x| x >> 16 > T_BASE)
            .unwrap_or(self.0.len())
    }

    /// Split into the `b`-part and the `t`-part.
    pub fn split_bt(&self) -> (Monomial, Monomial) {
        let idx = self.first_t();
        (
            Monomial(self.0[..idx].iter().copied().collect()),
            Monomial(self.0[idx..].iter().copied().collect()),
        )
    }

    pub fn has_t(&self) -> bool {
        self.0.last().is_some_and(|&x| x >> 16 > T_BASE)
    }

    pub fn has_b(&self) -> bool {
        self.0.first().is_some_and(|&x| x >> 16 < T_BASE)
    }

    pub fn max_t_index(&self) -> u32 {
        match self.0.last() {
            Some(&x) if x >> 16 > T_BASE => (x >> 16) - T_BASE,
            _ => 0,
        }
    }

    /// Same monomial with the exponent of `v` set to zero, and that exponent.
    pub fn remove(&self, v: Var) -> (Monomial, u32) {
        match self.find(v) {
            Ok(i) => {
                let mut m = self.0.clone();
                let x = m.remove(i);
                (Monomial(m), x & 0xffff)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    /// The monomial divided by `v^e`, if divisible.
    pub fn div_var(&self, v: Var, e: u32) -> Option<Monomial> {
        let i = self.find(v).ok()?;
        let have = self.0[i] & 0xffff;
        if have < e {
            return None;
        }
        let mut m = self.0.clone();
        if have == e {
            m.remove(i);
        } else {
            m[i] -= e;
        }
        Some(Monomial(m))
    }

    /// Canonical term order: graded by degree (with `deg b̃ = k`), then
    /// lexicographic on the exponent vector over `(b̃, b_1, b_2, ..., t_1, ...)`.
    pub fn cmp_graded(&self, other: &Monomial, k: u32) -> Ordering {
        self.degree(k)
            .cmp(&other.degree(k))
            .then_with(|| lex_dense(&self.0, &other.0))
    }
}

fn lex_dense(a: &[u32], b: &[u32]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) => match (x >> 16).cmp(&(y >> 16)) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match (x & 0xffff).cmp(&(y & 0xffff)) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    o => return o,
                },
            },
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            match v {
                Var::BTilde => write!(f, "bt")?,
                Var::B(p) => write!(f, "b{p}")?,
                Var::T(i) => write!(f, "t{i}")?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Hash-based term accumulator for building large polynomials; the terms
/// are sorted once at the end.
pub(crate) struct Accumulator<C> {
    terms: rustc_hash::FxHashMap<Monomial, C>,
}

impl<C> Default for Accumulator<C> {
    fn default() -> Self {
        Accumulator {
            terms: Default::default(),
        }
    }
}

impl<C: Scalar> Accumulator<C> {
    pub(crate) fn with_capacity(n: usize) -> Self {
        let mut terms = rustc_hash::FxHashMap::default();
        terms.reserve(n);
        Accumulator { terms }
    }

    pub(crate) fn add(&mut self, m: Monomial, c: C) {
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign_ref(&c),
        }
    }

    pub(crate) fn finish(self) -> Polynomial<C> {
        let mut v: Vec<(Monomial, C)> = self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            terms: v.into_iter().collect(),
        }
    }
}

/// A polynomial with coefficients in `C`. No zero coefficients are stored.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn b(p: u32) -> Self {
        assert!(p >= 1, "b_p needs p >= 1");
        Self::var(Var::B(p))
    }

    /// `b̃_k` for the ambient `k`.
    pub fn btilde() -> Self {
        Self::var(Var::BTilde)
    }

    pub fn t(i: u32) -> Self {
        assert!(i >= 1, "t_i needs i >= 1");
        Self::var(Var::T(i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc = Accumulator::default();
        for (m, c) in terms {
            acc.add(m, c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in the canonical graded order, highest first.
    pub fn sorted_terms(&self, k: u32) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_graded(a.0, k));
        v
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled_shifted(&mut self, other: &Polynomial<C>, c: &C, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            let mm = if m.is_one() { om.clone() } else { om.mul(m) };
            self.add_term(mm, oc.mul_ref(c));
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial<C>, c: &C) {
        self.add_scaled_shifted(other, c, &Monomial::one())
    }

    pub fn scale(&self, c: &C) -> Polynomial<C> {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul_ref(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Polynomial<C> {
        self.scale(&C::from_i64(c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.iter().map(|(om, c)| (om.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul_poly(&self, other: &Polynomial<C>) -> Polynomial<C> {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() <= 1 {
            let mut out = Self::zero();
            for (m, c) in &small.terms {
                out.add_scaled_shifted(large, c, m);
            }
            return out;
        }
        let mut acc = Accumulator::with_capacity(large.terms.len() * 2);
        for (m, c) in &small.terms {
            for (om, oc) in &large.terms {
                acc.add(om.mul(m), oc.mul_ref(c));
            }
        }
        acc.finish()
    }

    pub fn pow(&self, e: u32) -> Polynomial<C> {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_poly(self);
        }
        acc
    }

    /// Divide every coefficient by two; `None` if some coefficient is not
    /// divisible in `C`.
    pub fn try_halve(&self) -> Option<Polynomial<C>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.try_half()?);
        }
        Some(Polynomial { terms })
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Scalar::is_integral)
    }

    /// Set every `t_i` to zero.
    pub fn at_t_zero(&self) -> Polynomial<C> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_t())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute `t_i -> -t_i` for every `i`.
    pub fn negate_t(&self) -> Polynomial<C> {
        self.map_monomials(|m| {
            let odd = m.iter().filter(|p| p.0.is_t()).map(|p| p.1).sum::<u32>() % 2 == 1;
            (m.clone(), odd)
        })
    }

    /// Apply a monomial substitution `m -> ±m'` termwise. The boolean
    /// requests a sign flip.
    pub fn map_monomials<F: Fn(&Monomial) -> (Monomial, bool)>(&self, f: F) -> Polynomial<C> {
        let mut acc = Accumulator::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (nm, neg) = f(m);
            acc.add(nm, if neg { -c.clone() } else { c.clone() });
        }
        acc.finish()
    }

    pub fn map_coeffs<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> Polynomial<D> {
        let mut out = Polynomial::<D>::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Degree if the polynomial is homogeneous (`None` for zero or mixed).
    pub fn homogeneous_degree(&self, k: u32) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree(k));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: u32, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree(k) == d)
    }

    pub fn max_degree(&self, k: u32) -> Option<u32> {
        self.terms.keys().map(|m| m.degree(k)).max()
    }

    pub fn max_t_index(&self) -> u32 {
        self.terms.keys().map(Monomial::max_t_index).max().unwrap_or(0)
    }

    /// Whether every term is free of `b`-variables.
    pub fn is_t_only(&self) -> bool {
        self.terms.keys().all(|m| !m.has_b())
    }

    /// Group the terms by their `b`-part: `self = Σ_B B · f_B(t)`.
    pub fn split_b(&self) -> BTreeMap<Monomial, Polynomial<C>> {
        let mut out: BTreeMap<Monomial, Polynomial<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (bm, tm) = m.split_bt();
            out.entry(bm).or_default().terms.insert(tm, c.clone());
        }
        out
    }

    /// Group the terms by the exponent of `v`: `self = Σ_e v^e f_e`.
    pub fn split_var(&self, v: Var) -> Vec<Polynomial<C>> {
        let mut out: Vec<Polynomial<C>> = Vec::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.remove(v);
            let e = e as usize;
            if out.len() <= e {
                out.resize_with(e + 1, Polynomial::zero);
            }
            out[e].terms.insert(rest, c.clone());
        }
        out
    }

    /// Evaluate after substituting numbers for the variables.
    pub fn eval<F: Fn(Var) -> C>(&self, value: F) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for (v, e) in m.iter() {
                let val = value(v);
                for _ in 0..e {
                    x = x.mul_ref(&val);
                }
            }
            acc.add_assign_ref(&x);
        }
        acc
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Plain text `2*b2*b1 - bt*t1^2`; terms in storage order.
impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_value();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                let f: fn(&Polynomial<C>, &Polynomial<C>) -> Polynomial<C> = $body;
                f(self, rhs)
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Scalar> $tr<Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out.add_scaled(b, &C::one());
    out
});
binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out.add_scaled(b, &-C::one());
    out
});
binop!(Mul, mul, |a, b| a.mul_poly(b));

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -(self.clone())
    }
}

impl<C: Scalar> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        self.add_scaled(rhs, &C::one());
    }
}

impl<C: Scalar> AddAssign<Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: Polynomial<C>) {
        if self.terms.len() < rhs.terms.len() {
            let mut rhs = rhs;
            std::mem::swap(self, &mut rhs);
            self.add_scaled(&rhs, &C::one());
        } else {
            self.add_scaled(&rhs, &C::one());
        }
    }
}

impl<C: Scalar> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        self.add_scaled(rhs, &-C::one());
    }
}

impl<C: Scalar> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn arithmetic_basics() {
        let x = P::b(1);
        let y = P::t(2);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(
            sq.coeff(&Monomial::from_pairs([(Var::B(1), 1), (Var::T(2), 1)])),
            BigInt::from(2)
        );
        assert!((&sq - &sq).is_zero());
        assert_eq!((&x - &x).num_terms(), 0);
    }

    #[test]
    fn graded_order_and_degrees() {
        let bt = Monomial::var(Var::BTilde);
        let b2 = Monomial::var(Var::B(2));
        // deg b̃_2 = 2 = deg b_2; b̃ comes first in lex
        assert_eq!(bt.cmp_graded(&b2, 2), Ordering::Greater);
        assert_eq!(bt.cmp_graded(&b2, 3), Ordering::Greater);
        assert_eq!(bt.cmp_graded(&b2, 1), Ordering::Less);
        let t = Monomial::var_pow(Var::T(1), 2);
        assert_eq!(t.degree(5), 2);
        let m = Monomial::from_pairs([(Var::T(1), 1), (Var::B(3), 2), (Var::T(1), 1)]);
        assert_eq!(m.exponent(Var::T(1)), 2);
        assert_eq!(m.degree(1), 8);
        let (b, tt) = m.split_bt();
        assert_eq!(b, Monomial::var_pow(Var::B(3), 2));
        assert_eq!(tt, Monomial::var_pow(Var::T(1), 2));
    }

    #[test]
    fn split_and_negate() {
        let p = &(&P::b(1) * &P::t(1)) + &(&P::t(1) * &P::t(2));
        let parts = p.split_b();
        assert_eq!(parts.len(), 2);
        let n = p.negate_t();
        assert_eq!(
            n.coeff(&Monomial::from_pairs([(Var::B(1), 1), (Var::T(1), 1)])),
            BigInt::from(-1)
        );
        assert_eq!(
            n.coeff(&Monomial::from_pairs([(Var::T(1), 1), (Var::T(2), 1)])),
            BigInt::from(1)
        );
        assert_eq!(p.at_t_zero(), P::zero());
    }
}
