//! Small integer helpers shared by the lattice and fan code.

use num_bigint::BigUint;
use num_integer::Integer;

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divides out the content of an integer vector. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| gcd_i64(g, x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// `a × b` for 3-vectors.
pub fn cross3(a: &[i64], b: &[i64]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n.saturating_sub(k));
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn norm1(v: &[i64]) -> u64 {
    v.iter().map(|x| x.unsigned_abs()).sum()
}

/// Splits `v` into its positive and negative parts, `v = plus - minus`.
pub fn split_signs(v: &[i64]) -> (Vec<u32>, Vec<u32>) {
    let plus = v.iter().map(|&x| x.max(0) as u32).collect();
    let minus = v.iter().map(|&x| (-x).max(0) as u32).collect();
    (plus, minus)
}

/// Sign-aware angular order of 2-D integer vectors, starting at the positive
/// x-axis and running counter-clockwise.
pub fn angle_cmp(a: (i128, i128), b: (i128, i128)) -> std::cmp::Ordering {
    fn half(v: (i128, i128)) -> u8 {
        if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
            0
        } else {
            1
        }
    }
    half(a)
        .cmp(&half(b))
        .then_with(|| (a.1 * b.0).cmp(&(a.0 * b.1)))
}

pub fn cross2(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

pub fn dot2(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.0 + a.1 * b.1
}
