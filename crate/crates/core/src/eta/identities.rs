//! Alternating sums with powers of two that vanish away from zero.

/// `#(α)`: the number of nonzero entries.
pub fn nonzero_count(seq: &[u32]) -> u32 {
    seq.iter().filter(|&&x| x != 0).count() as u32
}

/// `Σ_{i=0}^s (-1)^i 2^{#(s-i, i)}`.
pub fn elementary_sum(s: u32) -> i64 {
    (0..=s)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * (1i64 << nonzero_count(&[s - i, i]))
        })
        .sum()
}

/// `Σ_{0 ≤ α ≤ ρ} (-1)^{|α|} 2^{#(ρ-α, α)}` over compositions `α`.
pub fn composition_sum(rho: &[u32]) -> i64 {
    let mut alpha = vec![0u32; rho.len()];
    let mut total = 0i64;
    loop {
        let diff: Vec<u32> = rho.iter().zip(&alpha).map(|(r, a)| r - a).collect();
        let size: u32 = alpha.iter().sum();
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        total += sign * (1i64 << (nonzero_count(&diff) + nonzero_count(&alpha)));
        let mut idx = 0;
        loop {
            if idx == rho.len() {
                return total;
            }
            if alpha[idx] < rho[idx] {
                alpha[idx] += 1;
                break;
            }
            alpha[idx] = 0;
            idx += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_vanish_off_zero() {
        assert_eq!(elementary_sum(0), 1);
        for s in 1..=8 {
            assert_eq!(elementary_sum(s), 0);
        }
        assert_eq!(composition_sum(&[]), 1);
        assert_eq!(composition_sum(&[0, 0]), 1);
        assert_eq!(composition_sum(&[2, 0, 1]), 0);
    }
}
