//! Units of `Z₍₂₎[γ]/(γ^{g/2} ∓ 1)`.

use num_bigint::BigInt;

use super::matrix::IntMatrix;

/// Matrix of multiplication by `Σ aⱼγʲ` on `Z[γ]/(γ^{n} − (−1)^k)`, `n = a.len()`.
pub fn multiplication_matrix(a: &[i64], k: u32) -> IntMatrix {
    let n = a.len();
    let wrap = if k % 2 == 0 { 1 } else { -1 };
    let mut m = IntMatrix::zeros(n, n);
    for c in 0..n {
        for (j, &aj) in a.iter().enumerate() {
            let (row, sign) = if j + c < n { (j + c, 1) } else { (j + c - n, wrap) };
            let cur = m.get(row, c).clone();
            m.set(row, c, cur + BigInt::from(sign * aj));
        }
    }
    m
}

/// Whether `a` is a 2-local unit in `Z₍₂₎[G]/(γ^{g/2} − (−1)^k)` for
/// `G = C_g`, decided by the parity of the determinant of multiplication by `a`.
pub fn unit_test_group_ring(a: &[i64], k: u32, g: u64) -> bool {
    assert!(g.is_power_of_two() && g >= 2, "group order must be a power of two");
    assert_eq!(a.len() as u64, g / 2, "coefficient vector must have length g/2");
    multiplication_matrix(a, k).det().bit(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_cases() {
        assert!(unit_test_group_ring(&[1, 0, 0, 0], 1, 8));
        assert!(!unit_test_group_ring(&[1, 1, 0, 0], 1, 8));
        assert!(unit_test_group_ring(&[1, 1, 1, 0], 2, 8));
    }

    #[test]
    fn parity_criterion_exhaustive_small() {
        for g in [2u64, 4, 8] {
            let n = (g / 2) as usize;
            for k in 0..2 {
                for mask in 0..(1u32 << (2 * n)) {
                    let a: Vec<i64> = (0..n).map(|i| ((mask >> (2 * i)) & 3) as i64 - 1).collect();
                    let odd = a.iter().sum::<i64>().rem_euclid(2) == 1;
                    assert_eq!(unit_test_group_ring(&a, k, g), odd, "{a:?} k={k}");
                }
            }
        }
    }
}
