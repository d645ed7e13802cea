//! Independent oracles used by the integration tests and the acceptance
//! harness. Nothing here calls into the algorithms under test.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use slicework_core::AbGroup;

/// A complex with one copy of `Z` in each degree `lo..=lo+maps.len()`;
/// `maps[i]` is the boundary from degree `lo+i+1` to `lo+i`.
pub fn rank_one_homology(lo: i64, maps: &[i64]) -> BTreeMap<i64, AbGroup> {
    let hi = lo + maps.len() as i64;
    let down = |d: i64| if d > lo { maps[(d - lo - 1) as usize] } else { 0 };
    let up = |d: i64| if d < hi { maps[(d - lo) as usize] } else { 0 };
    (lo..=hi)
        .map(|d| {
            let g = if down(d) != 0 {
                AbGroup::zero()
            } else {
                match up(d).abs() {
                    0 => AbGroup::free(1),
                    n => AbGroup::cyclic(n as u64),
                }
            };
            (d, g)
        })
        .collect()
}

/// Same shape, cochain direction: `maps[i]` goes from degree `lo+i` to `lo+i+1`.
pub fn rank_one_cohomology(lo: i64, maps: &[i64]) -> BTreeMap<i64, AbGroup> {
    let hi = lo + maps.len() as i64;
    let up = |d: i64| if d < hi { maps[(d - lo) as usize] } else { 0 };
    let down = |d: i64| if d > lo { maps[(d - lo - 1) as usize] } else { 0 };
    (lo..=hi)
        .map(|d| {
            let g = if up(d) != 0 {
                AbGroup::zero()
            } else {
                match down(d).abs() {
                    0 => AbGroup::free(1),
                    n => AbGroup::cyclic(n as u64),
                }
            };
            (d, g)
        })
        .collect()
}

/// Cochain coefficients of a complex of single orbits, from the coefficients
/// of its invariant chains: a map `Z[G/H] → Z[G/K]` hitting the invariant
/// generator `c` times hits the dual generator `c·|G/K|/|G/H|` times.
pub fn cochains_from_invariant_chains(maps: &[i64], orbit: &[i64]) -> Vec<i64> {
    maps.iter()
        .enumerate()
        .map(|(i, &c)| {
            let (target, source) = (orbit[i], orbit[i + 1]);
            assert_eq!((c * target) % source, 0);
            c * target / source
        })
        .collect()
}

/// Reference invariant chains of `S^{ρ₈}`, degrees 1..=8.
pub const RHO8_CHAINS: [i64; 7] = [2, 0, 2, 0, 2, 0, 2];
pub const RHO8_REFERENCE_COCHAINS: [i64; 7] = [1, 0, 2, 0, 2, 0, 2];
pub const RHO8_ORBITS: [i64; 8] = [1, 2, 4, 4, 8, 8, 8, 8];

/// Reference invariant chains of `S^{2ρ₈}`, degrees 2..=16.
pub const RHO8X2_CHAINS: [i64; 14] = [2, 0, 4, 0, 4, 0, 8, 0, 8, 0, 8, 0, 8, 0];
pub const RHO8X2_REFERENCE_COCHAINS: [i64; 14] = [1, 0, 4, 0, 4, 0, 8, 0, 8, 0, 8, 0, 8, 0];
pub const RHO8X2_ORBITS: [i64; 15] = [1, 2, 2, 4, 4, 4, 4, 8, 8, 8, 8, 8, 8, 8, 8];

pub fn padded(lo_hi: (i64, i64), m: BTreeMap<i64, AbGroup>) -> BTreeMap<i64, AbGroup> {
    (lo_hi.0..=lo_hi.1).map(|d| (d, m.get(&d).cloned().unwrap_or_default())).collect()
}

/// Number of monomials of degree `d` in generators of degree `i ≥ 1`, each
/// degree carrying `mult(i)` generators, by repeated polynomial products.
pub fn monomial_count(d: usize, mult: impl Fn(usize) -> usize) -> u128 {
    let mut series = vec![0u128; d + 1];
    series[0] = 1;
    for i in 1..=d {
        for _ in 0..mult(i) {
            for n in i..=d {
                series[n] += series[n - i];
            }
        }
    }
    series[d]
}

/// Ranks of `Z/2[f_i : i ≠ 2^k − 1]` by total degree.
pub fn mo_ranks(bound: usize) -> Vec<u64> {
    let mersenne = |i: usize| (i + 1).is_power_of_two();
    (0..=bound).map(|n| monomial_count(n, |i| usize::from(!mersenne(i))) as u64).collect()
}

/// `dim_F₂ H^s(C₈; R_m/2)`, by enumerating all sixteen vectors of
/// `F₂[ζ]/(ζ⁴+1)` with the generator acting by `ζ^m`.
pub fn mod2_group_cohomology(s: u32, m: i64) -> usize {
    let mul_zeta = |x: u8| ((x << 1) & 0xf) | (x >> 3);
    let r = m.rem_euclid(8) as usize;
    let act = |x: u8| (0..r).fold(x, |y, _| mul_zeta(y));
    let gm1 = |x: u8| act(x) ^ x;
    let norm = |x: u8| {
        let mut acc = 0u8;
        let mut y = x;
        for _ in 0..8 {
            acc ^= y;
            y = act(y);
        }
        acc
    };
    let kernel = |f: &dyn Fn(u8) -> u8| (0u8..16).filter(|&x| f(x) == 0).count();
    let image = |f: &dyn Fn(u8) -> u8| {
        let mut seen = [false; 16];
        for x in 0u8..16 {
            seen[f(x) as usize] = true;
        }
        seen.iter().filter(|&&b| b).count()
    };
    let log2 = |n: usize| n.trailing_zeros() as usize;
    match s {
        0 => log2(kernel(&gm1)),
        s if s % 2 == 1 => log2(kernel(&norm)) - log2(image(&gm1)),
        _ => log2(kernel(&gm1)) - log2(image(&norm)),
    }
}

/// Matrix of multiplication by `ζ^r − 1` on `Z[ζ]/(ζ⁴ + 1)` in the basis `1, ζ, ζ², ζ³`.
fn zeta_minus_one(r: i64) -> [[i64; 4]; 4] {
    let mut m = [[0i64; 4]; 4];
    for k in 0..4usize {
        let e = (r + k as i64).rem_euclid(8) as usize;
        let (row, sign) = if e < 4 { (e, 1) } else { (e - 4, -1) };
        m[row][k] += sign;
        m[k][k] -= 1;
    }
    m
}

fn det4(m: [[i64; 4]; 4]) -> i64 {
    let det3 = |a: [[i64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    (0..4)
        .map(|c| {
            let mut minor = [[0i64; 3]; 3];
            for i in 1..4 {
                for (jj, j) in (0..4).filter(|&j| j != c).enumerate() {
                    minor[i - 1][jj] = m[i][j];
                }
            }
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det3(minor)
        })
        .sum()
}

/// `H^s(C₈; R_m)` from the periodic resolution: for `m ≢ 0 (8)` the generator
/// acts by `ζ^m ≠ 1`, the norm vanishes and `H^odd = A/(ζ^m − 1)`, killed by 2.
pub fn integral_group_cohomology(s: u32, m: i64) -> AbGroup {
    if m.rem_euclid(8) == 0 {
        return match s {
            0 => AbGroup::free(4),
            s if s % 2 == 1 => AbGroup::zero(),
            _ => AbGroup::new(0, vec![big(8); 4]),
        };
    }
    if s % 2 == 0 {
        return AbGroup::zero();
    }
    let order = det4(zeta_minus_one(m)).unsigned_abs();
    assert!(order.is_power_of_two());
    AbGroup::new(0, vec![big(2); order.trailing_zeros() as usize])
}

/// `4·||v₂^{c}/(2·v₁^{e})||` with `||v₁|| = 3/4` and `||v₂|| = 1/2`.
pub fn beta_quarters(j: u32, k: u32) -> i64 {
    let c = ((1i64 << (j - 1 - 2 * k)) * (1 + (1i64 << (2 * k + 1)))) / 3;
    2 * c - 4 - 3 * (1i64 << (j - 1 - 2 * k))
}

pub fn alpha_quarters(j: u32) -> i64 {
    3 * ((1i64 << j) - 1) - 4
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
