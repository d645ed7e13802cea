use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Mono, Var};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Entry {
    pub monomial: String,
    #[serde(skip)]
    pub mono: Mono,
    /// `Z₍₂₎` for pure powers of `u`, `Z/2` otherwise.
    pub torsion_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "basis", rename_all = "snake_case")]
pub enum RegionBasis {
    Inside(Vec<E2Entry>),
    OutsideRegion,
}

impl RegionBasis {
    pub fn entries(&self) -> Option<&[E2Entry]> {
        match self {
            RegionBasis::Inside(v) => Some(v),
            RegionBasis::OutsideRegion => None,
        }
    }
}

/// Monomials `Π f_i^{e_i}` with `Σ i·e_i = w`, parts restricted by `allowed`.
pub(crate) fn f_monomials(w: u64, allowed: &dyn Fn(u32) -> bool) -> Vec<Mono> {
    fn go(w: u64, max: u32, allowed: &dyn Fn(u32) -> bool, cur: &mut Vec<(Var, i32)>, out: &mut Vec<Mono>) {
        if w == 0 {
            out.push(Mono::from_pairs(cur.iter().copied()));
            return;
        }
        for i in (1..=max.min(w as u32)).rev() {
            if !allowed(i) {
                continue;
            }
            let mut e = 1u64;
            while e * i as u64 <= w {
                cur.push((Var::F(i), e as i32));
                go(w - e * i as u64, i - 1, allowed, cur, out);
                cur.pop();
                e += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(w, w as u32, allowed, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Basis of `E₂^{s, s+d}` of the slice spectral sequence for `S^{kρ} ∧ MU^{((G))}`
/// in the range `s ≥ (g−1)(d−k)`, where it is a quotient of `Z₍₂₎[a, u, f_i]`.
pub fn e2_region_basis(g: u64, k: i64, s: i64, d: i64) -> Result<RegionBasis> {
    if g < 2 || !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    if k < 0 {
        return Err(Error::OutOfRange(format!("suspension k = {k}")));
    }
    let g1 = g as i64 - 1;
    if s < g1 * (d - k) {
        return Ok(RegionBasis::OutsideRegion);
    }
    let mut out = Vec::new();
    if s >= 0 && d >= 0 {
        for w in 0..=d {
            if (d - w) % 2 != 0 || g1 * w > s {
                continue;
            }
            let q = ((d - w) / 2) as i32;
            let p = (s - g1 * w) as i32;
            for f in f_monomials(w as u64, &|_| true) {
                let mut pairs: Vec<(Var, i32)> = f.pairs().to_vec();
                if p > 0 {
                    pairs.push((Var::A, p));
                }
                if q > 0 {
                    pairs.push((Var::U, q));
                }
                let mono = Mono::from_pairs(pairs);
                debug_assert_eq!(mono.bidegree(g as i64), (s, d));
                out.push(E2Entry { monomial: mono.to_string(), torsion_free: p == 0 && w == 0, mono });
            }
        }
    }
    Ok(RegionBasis::Inside(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(b: RegionBasis) -> Vec<String> {
        b.entries().unwrap().iter().map(|e| e.monomial.clone()).collect()
    }

    #[test]
    fn reference_positions() {
        assert_eq!(names(e2_region_basis(8, 0, 7, 1).unwrap()), vec!["f1"]);
        assert_eq!(names(e2_region_basis(2, 0, 1, 0).unwrap()), vec!["a"]);
        let u = e2_region_basis(8, 2, 0, 2).unwrap();
        assert_eq!(names(u.clone()), vec!["u"]);
        assert!(u.entries().unwrap()[0].torsion_free);
    }

    #[test]
    fn outside_is_marked() {
        assert_eq!(e2_region_basis(8, 0, 6, 1).unwrap(), RegionBasis::OutsideRegion);
        assert!(e2_region_basis(3, 0, 0, 0).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|w| f_monomials(w, &|_| true).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
