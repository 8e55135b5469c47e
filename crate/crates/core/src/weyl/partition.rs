//! k-strict partitions, their typed refinements, and the bijection with
//! k-Grassmannian elements.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::signed::SignedPermutation;
use crate::error::{EtaError, Result};

/// Partition type: `0` when no part equals `k`, otherwise `1` or `2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PartitionType {
    Zero,
    One,
    Two,
}

impl PartitionType {
    pub fn from_index(t: u8) -> Option<Self> {
        match t {
            0 => Some(PartitionType::Zero),
            1 => Some(PartitionType::One),
            2 => Some(PartitionType::Two),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            PartitionType::Zero => 0,
            PartitionType::One => 1,
            PartitionType::Two => 2,
        }
    }
}

/// A partition in which no part larger than `k` is repeated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KStrictPartition {
    k: u32,
    parts: Vec<u32>,
}

/// Index pair `(i, j)` with `1 <= i < j`.
/// Parse a comma-separated list of parts; `-`, `0` and the empty string
/// denote the empty partition.
fn parse_parts(body: &str) -> Result<Vec<u32>> {
    let body = body.trim();
    let mut parts = Vec::new();
    if !(body.is_empty() || body == "-" || body == "0") {
        let mut pos = 0;
        for tok in body.split(',') {
            let v: u32 = tok.trim().parse().map_err(|_| EtaError::Parse {
                pos,
                msg: format!("expected a nonnegative integer part, found {:?}", tok.trim()),
            })?;
            parts.push(v);
            pos += tok.len() + 1;
        }
    }
    Ok(parts)
}

pub type RowPair = (usize, usize);

impl KStrictPartition {
    /// Parse `"3,2,1"` (or `-` for the empty partition).
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        Self::new(k, parse_parts(s)?)
    }

    pub fn new(k: u32, mut parts: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(EtaError::InvalidPartition("k must be positive".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(EtaError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(EtaError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] == w[1] && w[0] > k) {
            return Err(EtaError::InvalidPartition(format!(
                "{parts:?} repeats a part larger than k={k}"
            )));
        }
        Ok(KStrictPartition { k, parts })
    }

    pub fn empty(k: u32) -> Self {
        KStrictPartition { k, parts: Vec::new() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_j` (1-based), zero beyond the length.
    pub fn part(&self, j: usize) -> u32 {
        self.parts.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ_k`: the number of parts strictly larger than `k`.
    pub fn ell_k(&self) -> usize {
        self.parts.iter().filter(|&&p| p > self.k).count()
    }

    pub fn has_part_k(&self) -> bool {
        self.parts.contains(&self.k)
    }

    /// Pairs `i < j <= max_row` with `λ_i + λ_j >= 2k + j - i`.
    pub fn c_pairs(&self, max_row: usize) -> BTreeSet<RowPair> {
        let k = self.k as i64;
        let mut out = BTreeSet::new();
        for i in 1..=max_row {
            for j in i + 1..=max_row {
                let lhs = self.part(i) as i64 + self.part(j) as i64;
                if lhs >= 2 * k + (j - i) as i64 {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// The pairs of `C(λ)` lying within the rows of `λ`.
    pub fn raising_pairs(&self) -> BTreeSet<RowPair> {
        self.c_pairs(self.len())
    }

    /// `β̄_j = k - λ_j + #{i<j : (i,j) ∉ C(λ)} + [λ_j <= k]`, for `j <= len`.
    pub fn beta_bar(&self, len: usize) -> Vec<i64> {
        let c = self.c_pairs(len);
        (1..=len)
            .map(|j| {
                let lam = self.part(j) as i64;
                let outside = (1..j).filter(|&i| !c.contains(&(i, j))).count() as i64;
                self.k as i64 - lam + outside + i64::from(lam <= self.k as i64)
            })
            .collect()
    }

    /// Both typings when a part equals `k`, otherwise the single type-0 one.
    pub fn typings(&self) -> Vec<TypedPartition> {
        if self.has_part_k() {
            vec![
                TypedPartition {
                    shape: self.clone(),
                    ty: PartitionType::One,
                },
                TypedPartition {
                    shape: self.clone(),
                    ty: PartitionType::Two,
                },
            ]
        } else {
            vec![TypedPartition {
                shape: self.clone(),
                ty: PartitionType::Zero,
            }]
        }
    }

    /// The typing `λ̄` whose window has no zero in `β`, so `β̄(λ) = β(λ̄)`.
    pub fn lift(&self) -> TypedPartition {
        let ty = if !self.has_part_k() {
            PartitionType::Zero
        } else if self.ell_k().is_multiple_of(2) {
            PartitionType::One
        } else {
            PartitionType::Two
        };
        TypedPartition {
            shape: self.clone(),
            ty,
        }
    }

    /// Whether `self ⪰ other` in dominance order (partial sums).
    pub fn dominates(&self, other: &KStrictPartition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for j in 1..=n {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Fits in a box of `rows` rows and `cols` columns.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// Every k-strict partition with at most `rows` parts, each at most `cols`.
    pub fn enumerate(k: u32, rows: usize, cols: u32) -> Vec<KStrictPartition> {
        fn rec(k: u32, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<KStrictPartition>) {
            out.push(KStrictPartition {
                k,
                parts: cur.clone(),
            });
            if cur.len() == rows {
                return;
            }
            for p in (1..=max).rev() {
                if cur.last() == Some(&p) && p > k {
                    continue;
                }
                cur.push(p);
                rec(k, rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every k-strict partition of `n`.
    pub fn of_size(k: u32, n: u32) -> Vec<KStrictPartition> {
        let mut v: Vec<_> = Self::enumerate(k, n as usize, n)
            .into_iter()
            .filter(|p| p.size() == n)
            .collect();
        v.sort();
        v
    }
}

impl Ord for KStrictPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.size(), &self.parts).cmp(&(other.k, other.size(), &other.parts))
    }
}

impl PartialOrd for KStrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for KStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})_k={}", self.k)
    }
}

/// A k-strict partition together with its type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TypedPartition {
    shape: KStrictPartition,
    ty: PartitionType,
}

impl TypedPartition {
    pub fn new(shape: KStrictPartition, ty: PartitionType) -> Result<Self> {
        let needs = shape.has_part_k();
        if needs == (ty == PartitionType::Zero) {
            return Err(EtaError::InvalidPartition(format!(
                "{shape} with type {}: the type is positive exactly when some part equals k={}",
                ty.index(),
                shape.k
            )));
        }
        Ok(TypedPartition { shape, ty })
    }

    pub fn from_parts(k: u32, parts: Vec<u32>, ty: u8) -> Result<Self> {
        let ty = PartitionType::from_index(ty)
            .ok_or_else(|| EtaError::InvalidPartition(format!("unknown type {ty}")))?;
        Self::new(KStrictPartition::new(k, parts)?, ty)
    }

    pub fn empty(k: u32) -> Self {
        TypedPartition {
            shape: KStrictPartition::empty(k),
            ty: PartitionType::Zero,
        }
    }

    /// Parse `"7,4,3,3,1:t2"`; the empty partition is `"-"` or `"0:t0"`.
    /// A missing type suffix means type 0.
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        let s = s.trim();
        let (body, ty) = match s.rfind(':') {
            Some(idx) => {
                let suffix = &s[idx + 1..];
                let t = suffix
                    .strip_prefix('t')
                    .and_then(|d| d.parse::<u8>().ok())
                    .filter(|&d| d <= 2)
                    .ok_or_else(|| EtaError::Parse {
                        pos: idx + 1,
                        msg: format!("expected a type suffix t0, t1 or t2, found {suffix:?}"),
                    })?;
                (&s[..idx], t)
            }
            None => (s, 0),
        };
        let parts = parse_parts(body)?;
        Self::from_parts(k, parts, ty)
    }

    pub fn shape(&self) -> &KStrictPartition {
        &self.shape
    }

    pub fn ty(&self) -> PartitionType {
        self.ty
    }

    pub fn k(&self) -> u32 {
        self.shape.k
    }

    pub fn parts(&self) -> &[u32] {
        &self.shape.parts
    }

    pub fn part(&self, j: usize) -> u32 {
        self.shape.part(j)
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    pub fn ell_k(&self) -> usize {
        self.shape.ell_k()
    }

    /// The k-Grassmannian element `w_λ`.
    pub fn to_perm(&self) -> SignedPermutation {
        let k = self.k();
        let mut neg: Vec<u32> = self
            .parts()
            .iter()
            .filter(|&&p| p > k)
            .map(|&p| p - k + 1)
            .collect();
        let mut small: Vec<u32> = self.parts().iter().copied().filter(|&p| p <= k).collect();
        let ellk = self.ell_k();
        let one_negative = match self.ty {
            PartitionType::Zero => false,
            PartitionType::One => ellk % 2 == 1,
            PartitionType::Two => ellk.is_multiple_of(2),
        };
        if one_negative {
            small.remove(0);
            neg.push(1);
        }
        let max_neg = neg.iter().copied().max().unwrap_or(0);
        let (mut head, mut tail_pos) = (Vec::new(), Vec::new());
        let (mut v, mut room, mut idx) = (1u32, k, 0usize);
        while room > 0 || idx < small.len() || v <= max_neg {
            if !neg.contains(&v) {
                let need = small.get(idx).copied().unwrap_or(0);
                if need == room {
                    tail_pos.push(v as i32);
                    idx += 1;
                } else {
                    head.push(v as i32);
                    room -= 1;
                }
            }
            v += 1;
        }
        if neg.len() % 2 == 1 {
            head[0] = -head[0];
        }
        neg.sort_unstable_by(|a, b| b.cmp(a));
        let mut window = head;
        window.extend(neg.iter().map(|&a| -(a as i32)));
        window.extend(tail_pos);
        SignedPermutation::from_window(window).expect("construction yields a signed permutation")
    }

    /// The typed partition of a k-Grassmannian element.
    pub fn from_perm(w: &SignedPermutation, k: u32) -> Result<Self> {
        if !w.is_k_grassmannian(k) {
            return Err(EtaError::NotGrassmannian(w.to_string(), k));
        }
        let ku = k as usize;
        let n = w.len().max(ku);
        let mut parts = Vec::new();
        for j in 1..=n - ku {
            let x = w.get(ku + j);
            let lam = if x < 0 {
                k - 1 + x.unsigned_abs()
            } else {
                (1..=ku).filter(|&p| w.get(p).abs() > x).count() as u32
            };
            parts.push(lam);
        }
        let w1 = w.get(1);
        let ty = if w1.abs() == 1 {
            0
        } else if w1 > 0 {
            1
        } else {
            2
        };
        Self::from_parts(k, parts, ty)
    }

    /// `C(λ) = {(i,j) : i < j <= max_row, w_{k+i} + w_{k+j} < 0}`.
    pub fn c_set(&self, max_row: usize) -> BTreeSet<RowPair> {
        let w = self.to_perm();
        let k = self.k() as usize;
        let mut out = BTreeSet::new();
        for i in 1..=max_row {
            for j in i + 1..=max_row {
                if w.get(k + i) + w.get(k + j) < 0 {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// `β_j = w_{k+j} + 1` if that entry is negative, else `w_{k+j}`.
    pub fn beta(&self, len: usize) -> Vec<i64> {
        let w = self.to_perm();
        let k = self.k() as usize;
        (1..=len)
            .map(|j| {
                let x = w.get(k + j) as i64;
                if x < 0 {
                    x + 1
                } else {
                    x
                }
            })
            .collect()
    }

    /// Every typed k-strict partition with at most `rows` parts, each at
    /// most `cols`, ordered by size, then parts, then type.
    pub fn enumerate(k: u32, rows: usize, cols: u32) -> Vec<TypedPartition> {
        let mut out: Vec<_> = KStrictPartition::enumerate(k, rows, cols)
            .iter()
            .flat_map(KStrictPartition::typings)
            .collect();
        out.sort();
        out
    }

    /// Every typed k-strict partition of `n`.
    pub fn of_size(k: u32, n: u32) -> Vec<TypedPartition> {
        let mut out: Vec<_> = KStrictPartition::of_size(k, n)
            .iter()
            .flat_map(KStrictPartition::typings)
            .collect();
        out.sort();
        out
    }
}

impl Ord for TypedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.shape, self.ty).cmp(&(&other.shape, other.ty))
    }
}

impl PartialOrd for TypedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TypedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:t{}", self.shape, self.ty.index())
    }
}

impl fmt::Debug for TypedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})_k={}", self.k())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(s: &str, k: u32) -> TypedPartition {
        TypedPartition::parse(s, k).unwrap()
    }

    fn perm(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(KStrictPartition::new(1, vec![2, 2]).is_err());
        assert!(KStrictPartition::new(2, vec![2, 2, 1]).is_ok());
        assert!(KStrictPartition::new(2, vec![1, 2]).is_err());
        assert!(TypedPartition::parse("2,1:t0", 1).is_err());
        assert!(TypedPartition::parse("2:t1", 1).is_err());
        assert!(TypedPartition::parse("2:t3", 1).is_err());
        assert!(matches!(
            TypedPartition::parse("2,x:t0", 1),
            Err(EtaError::Parse { pos: 2, .. })
        ));
        assert_eq!(tp("-", 2), TypedPartition::empty(2));
        assert_eq!(tp("0:t0", 2), TypedPartition::empty(2));
        assert_eq!(tp("7,4,3,3,1:t2", 3).to_string(), "7,4,3,3,1:t2");
    }

    #[test]
    fn bijection_examples() {
        let lam = tp("7,4,3,3,1:t2", 3);
        assert_eq!(lam.to_perm(), perm("-4,6,8,-5,-2,-1,3,7"));
        assert_eq!(TypedPartition::from_perm(&lam.to_perm(), 3).unwrap(), lam);
        assert_eq!(tp("1:t2", 1).to_perm(), perm("-2,-1,3"));
        assert_eq!(tp("1:t1", 1).to_perm(), perm("2,1,3"));
        assert_eq!(tp("2", 1).to_perm(), perm("-1,-2,3"));
        assert!(TypedPartition::empty(2).to_perm().is_identity());
        assert_eq!(
            TypedPartition::from_perm(&SignedPermutation::identity(), 2).unwrap(),
            TypedPartition::empty(2)
        );
        assert!(TypedPartition::from_perm(&perm("1,3,2"), 1).is_err());
    }

    #[test]
    fn c_set_and_beta() {
        let lam = tp("7,4,3,3,1:t2", 3);
        let c: Vec<_> = lam.c_set(lam.len()).into_iter().collect();
        assert_eq!(c, vec![(1, 2), (1, 3), (1, 4), (2, 3)]);
        assert_eq!(lam.beta(5), vec![-4, -1, 0, 3, 7]);
        assert_eq!(
            tp("2,1:t1", 1).c_set(2).into_iter().collect::<Vec<_>>(),
            vec![(1, 2)]
        );
        assert_eq!(tp("1:t1", 1).beta(2), vec![1, 3]);
        assert_eq!(TypedPartition::empty(1).beta(3), vec![2, 3, 4]);
        assert!(TypedPartition::empty(1).c_set(3).is_empty());
    }

    #[test]
    fn beta_bar_examples() {
        let shape = |k, p: Vec<u32>| KStrictPartition::new(k, p).unwrap();
        assert_eq!(shape(1, vec![2]).beta_bar(2), vec![-1, 3]);
        assert_eq!(shape(1, vec![3, 2]).beta_bar(2), vec![-2, -1]);
        assert_eq!(shape(2, vec![]).beta_bar(2), vec![3, 4]);
        for s in KStrictPartition::enumerate(2, 4, 6) {
            let len = s.len() + 2;
            assert_eq!(s.beta_bar(len), s.lift().beta(len), "{s:?}");
            assert!(s.lift().beta(s.len()).iter().all(|&b| b != 0), "{s:?}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(TypedPartition::enumerate(1, 2, 3).len(), 12);
        assert_eq!(TypedPartition::enumerate(3, 0, 5), vec![TypedPartition::empty(3)]);
        let row: Vec<String> = TypedPartition::enumerate(2, 1, 4)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(row, ["0:t0", "1:t0", "2:t1", "2:t2", "3:t0", "4:t0"]);
    }

    #[test]
    fn dominance() {
        let shape = |p: Vec<u32>| KStrictPartition::new(1, p).unwrap();
        assert!(shape(vec![3]).dominates(&shape(vec![2, 1])));
        assert!(!shape(vec![2, 1]).dominates(&shape(vec![3])));
        assert!(shape(vec![2, 1]).dominates(&shape(vec![2, 1])));
    }
}
