//! Integer-only decisions for quantities involving √2 and √n.
//!
//! Every comparison against an irrational bound is rearranged so that both
//! sides are squared integers; no floating point is involved.

/// ⌊√x⌋.
pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    // Newton iteration from an over-estimate.
    let mut r = 1u128 << (128 - x.leading_zeros()).div_ceil(2);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// ⌈√x⌉.
pub fn ceil_sqrt(x: u128) -> u128 {
    let r = isqrt(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Least `k` with `2k² ≥ n²`, i.e. ⌈n/√2⌉.
pub fn ceil_n_over_sqrt2(n: u64) -> u64 {
    let n2 = (n as u128) * (n as u128);
    // 2k² ≥ n²  ⟺  k ≥ √(n²/2)  ⟺  k ≥ ⌈√⌈n²/2⌉⌉
    ceil_sqrt(n2.div_ceil(2)) as u64
}

/// ⌊(1 − √2/2)·n⌋, the part size |B₁| = |B₂| of the second construction.
pub fn one_minus_half_sqrt2_floor(n: u64) -> u64 {
    n - ceil_n_over_sqrt2(n)
}

/// Decides `delta1 > (3 − 2√2)/4 · n² − n` exactly.
///
/// Rearranged: `2√2·n² > 3n² − 4n − 4·delta1`. A non-positive right side
/// settles it; otherwise both sides are squared.
pub fn threshold_exceeded(delta1: u64, n: u64) -> bool {
    let n = n as i128;
    let rhs = 3 * n * n - 4 * n - 4 * delta1 as i128;
    if rhs <= 0 {
        return true;
    }
    8 * n * n * n * n > rhs * rhs
}

/// Decides `2√2·d·n ≥ r` for integers `d`, `r` and `n ≥ 0`.
fn two_sqrt2_dn_ge(d: i128, n: i128, r: i128) -> bool {
    let lhs_sq = 8 * d * d * n * n;
    if d >= 0 {
        r <= 0 || lhs_sq >= r * r
    } else {
        r <= 0 && lhs_sq <= r * r
    }
}

/// Decides `k ≥ (1 − √2/2)·n + √n`.
fn at_least_eq1(k: i128, n: i128) -> bool {
    // With d = k − n:  k ≥ n − n/√2 + √n  ⟺  d + n/√2 ≥ √n.
    let d = k - n;
    // The left side must be non-negative: n/√2 ≥ −d.
    if d < 0 && n * n < 2 * d * d {
        return false;
    }
    // Square: d² + √2·d·n + n²/2 ≥ n  ⟺  2√2·d·n ≥ 2n − 2d² − n².
    two_sqrt2_dn_ge(d, n, 2 * n - 2 * d * d - n * n)
}

/// ⌈(1 − √2/2)·n + √n⌉.
pub fn eq1_ceiling(n: u64) -> u64 {
    let n = n as i128;
    // The value lies in [(1 − 1/√2)·n, n + √n]; start below it and step up.
    let mut k = n - ceil_n_over_sqrt2(n as u64) as i128;
    while !at_least_eq1(k, n) {
        k += 1;
    }
    k as u64
}

/// `k < √n` decided as `k² < n`.
pub fn below_sqrt(k: u64, n: u64) -> bool {
    (k as u128) * (k as u128) < n as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots() {
        for x in 0u128..10_000 {
            let r = isqrt(x);
            assert!(r * r <= x && (r + 1) * (r + 1) > x, "{x}");
            let c = ceil_sqrt(x);
            assert!(c * c >= x && (c == 0 || (c - 1) * (c - 1) < x), "{x}");
        }
        let big = u64::MAX as u128;
        assert_eq!(isqrt(big * big), big);
        assert_eq!(isqrt(big * big - 1), big - 1);
    }

    #[test]
    fn construction_part_sizes() {
        assert_eq!(ceil_n_over_sqrt2(24), 17);
        assert_eq!(one_minus_half_sqrt2_floor(24), 7);
        assert_eq!(one_minus_half_sqrt2_floor(7), 2);
        assert_eq!(ceil_n_over_sqrt2(0), 0);
    }

    #[test]
    fn threshold_examples() {
        assert!(threshold_exceeded(20, 24));
        assert!(threshold_exceeded(0, 10));
        assert!(!threshold_exceeded(0, 100));
    }

    #[test]
    fn eq1_examples() {
        assert_eq!(eq1_ceiling(4), 4);
        assert_eq!(eq1_ceiling(1), 2);
        assert_eq!(eq1_ceiling(100), 40);
    }

    #[test]
    fn sqrt_comparison() {
        assert!(below_sqrt(4, 24));
        assert!(!below_sqrt(5, 24));
        assert!(!below_sqrt(5, 25));
    }
}
