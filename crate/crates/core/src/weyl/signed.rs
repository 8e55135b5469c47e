//! Signed permutations with an even number of sign changes.

use std::fmt;
use std::str::FromStr;

use crate::error::{EtaError, Result};

/// An element of the type D Weyl group `W̃_∞`, in one-line notation.
///
/// The window is stored without trailing fixed points, so two windows that
/// differ by fixed points compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

/// Image of the value `x` under the simple reflection `s_i` (acting on values).
pub fn reflect_value(i: u32, x: i32) -> i32 {
    let (sign, a) = (x.signum(), x.unsigned_abs());
    if i == 0 {
        match a {
            1 => -2 * sign,
            2 => -sign,
            _ => x,
        }
    } else if a == i {
        sign * (i as i32 + 1)
    } else if a == i + 1 {
        sign * i as i32
    } else {
        x
    }
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation { window: Vec::new() }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a] {
                return Err(EtaError::InvalidPermutation(format!(
                    "{window:?}: absolute values must permute 1..{n}"
                )));
            }
            seen[a] = true;
        }
        if window.iter().filter(|&&x| x < 0).count() % 2 == 1 {
            return Err(EtaError::InvalidPermutation(format!(
                "{window:?}: odd number of sign changes"
            )));
        }
        Ok(Self::normalized(window))
    }

    fn normalized(mut window: Vec<i32>) -> Self {
        while window.last().is_some_and(|&x| x == window.len() as i32) {
            window.pop();
        }
        SignedPermutation { window }
    }

    /// The simple reflection `s_i` (`s_0` exchanges `1 ↦ -2`, `2 ↦ -1`).
    pub fn simple(i: u32) -> Self {
        let n = (i + 1).max(2) as i32;
        Self::normalized((1..=n).map(|x| reflect_value(i, x)).collect())
    }

    /// Minimal window length.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// `w_i` for `i >= 1`, extended by fixed points.
    pub fn get(&self, i: usize) -> i32 {
        self.window.get(i - 1).copied().unwrap_or(i as i32)
    }

    /// The window padded with fixed points to length at least `n`.
    pub fn window(&self, n: usize) -> Vec<i32> {
        (1..=n.max(self.len())).map(|i| self.get(i)).collect()
    }

    /// `w(x)` for any nonzero `x`, with `w(-x) = -w(x)`.
    pub fn apply(&self, x: i32) -> i32 {
        x.signum() * self.get(x.unsigned_abs() as usize)
    }

    /// 1-based position holding the value `x` (signed).
    pub fn position(&self, x: i32) -> Option<usize> {
        let a = x.unsigned_abs() as usize;
        if a > self.len() {
            return (x > 0).then_some(a);
        }
        self.window.iter().position(|&y| y == x).map(|p| p + 1)
    }

    /// `#{i<j : w_i > w_j} + Σ_{w_i<0} (|w_i| - 1)`.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = w
            .iter()
            .filter(|&&x| x < 0)
            .map(|&x| x.unsigned_abs() as usize - 1)
            .sum();
        inv + neg
    }

    /// `s_i w` (acts on values).
    pub fn left_mul(&self, i: u32) -> Self {
        let n = self.len().max(i as usize + 1).max(2);
        Self::normalized(self.window(n).into_iter().map(|x| reflect_value(i, x)).collect())
    }

    /// `w s_i` (acts on positions).
    pub fn right_mul(&self, i: u32) -> Self {
        let n = self.len().max(i as usize + 1).max(2);
        let s = Self::simple(i);
        Self::normalized((1..=n as i32).map(|x| self.apply(s.apply(x))).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::normalized((1..=n as i32).map(|x| self.apply(other.apply(x))).collect())
    }

    pub fn inverse(&self) -> Self {
        let n = self.len();
        let mut inv = vec![0i32; n];
        for (i, &x) in self.window.iter().enumerate() {
            inv[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        Self::normalized(inv)
    }

    /// The product `s_{a_1} s_{a_2} ⋯ s_{a_r}`.
    pub fn from_word(word: &[u32]) -> Self {
        word.iter()
            .rev()
            .fold(Self::identity(), |acc, &i| acc.left_mul(i))
    }

    /// A reduced word `a_1 ... a_r` with `w = s_{a_1} ⋯ s_{a_r}`; each step
    /// strips the smallest left descent.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let mut len = w.length();
        while len > 0 {
            let bound = w.len() as u32;
            let (i, next) = (0..=bound)
                .map(|i| (i, w.left_mul(i)))
                .find(|(_, v)| v.length() < len)
                .expect("a nontrivial element has a left descent");
            word.push(i);
            w = next;
            len -= 1;
        }
        word
    }

    /// `|w_1| < w_2 < ⋯ < w_k` and `w_{k+1} < w_{k+2} < ⋯`.
    pub fn is_k_grassmannian(&self, k: u32) -> bool {
        let k = k as usize;
        let n = self.len().max(k) + 1;
        let w = self.window(n);
        let head_ok = (1..k).all(|i| {
            let prev = if i == 1 { w[0].abs() } else { w[i - 1] };
            prev < w[i]
        });
        let tail_ok = (k + 1..n).all(|i| w[i - 1] < w[i]);
        head_ok && tail_ok
    }

    /// No negative entries, i.e. an element of `S_∞`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&x| x > 0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.window(1);
        let s: Vec<String> = w.iter().map(i32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignedPermutation {
    type Err = EtaError;

    fn from_str(s: &str) -> Result<Self> {
        let mut window = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let v: i32 = tok.trim().parse().map_err(|_| EtaError::Parse {
                pos,
                msg: format!("expected a nonzero integer, found {:?}", tok.trim()),
            })?;
            window.push(v);
            pos += tok.len() + 1;
        }
        Self::from_window(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity().length(), 0);
        assert_eq!(w("-1,-2,3").length(), 2);
        assert_eq!(w("-4,6,8,-5,-2,-1,3,7").length(), 18);
        for i in 0..6 {
            assert_eq!(SignedPermutation::simple(i).length(), 1, "s_{i}");
        }
    }

    #[test]
    fn validation_and_normalization() {
        assert!(SignedPermutation::from_window(vec![-1, 2]).is_err());
        assert!(SignedPermutation::from_window(vec![1, 1]).is_err());
        assert!(SignedPermutation::from_window(vec![0]).is_err());
        assert_eq!(w("2,1,3,4"), w("2,1"));
        assert_eq!(w("1,2,3"), SignedPermutation::identity());
        assert_eq!(SignedPermutation::simple(0), w("-2,-1"));
        assert_eq!(SignedPermutation::simple(2), w("1,3,2"));
    }

    #[test]
    fn group_operations() {
        let x = w("-4,6,8,-5,-2,-1,3,7");
        assert!(x.compose(&x.inverse()).is_identity());
        assert_eq!(SignedPermutation::from_word(&x.reduced_word()), x);
        assert_eq!(x.reduced_word().len(), x.length());
        // s_1 (-3,-1,2) = (-3,-2,1)
        assert_eq!(w("-3,-1,2").left_mul(1), w("-3,-2,1"));
        assert_eq!(w("3,1,2").left_mul(0), w("3,-2,-1"));
        assert_eq!(x.right_mul(3), x.compose(&SignedPermutation::simple(3)));
        assert_eq!(x.left_mul(0), SignedPermutation::simple(0).compose(&x));
    }

    #[test]
    fn grassmannian_test() {
        assert!(w("-4,6,8,-5,-2,-1,3,7").is_k_grassmannian(3));
        assert!(SignedPermutation::identity().is_k_grassmannian(4));
        assert!(w("2,1,3").is_k_grassmannian(1));
        assert!(!w("2,1,3").is_k_grassmannian(2));
        assert!(!w("1,3,2").is_k_grassmannian(1));
        assert!(w("1,3,2").is_k_grassmannian(2));
    }
}
