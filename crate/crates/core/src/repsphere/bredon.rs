use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::complex::{build_complex, PermChainComplex};
use super::rep::RepDescriptor;
use crate::error::{Error, Result};
use crate::exactalg::complex::{ChainComplex, ReducedComplex};
use crate::exactalg::AbGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    Z,
    Z2,
}

/// Degree-indexed table of abelian groups.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedGroups(pub BTreeMap<i64, AbGroup>);

impl GradedGroups {
    pub fn get(&self, d: i64) -> AbGroup {
        self.0.get(&d).cloned().unwrap_or_default()
    }

    /// Degrees with nonzero groups.
    pub fn support(&self) -> Vec<i64> {
        self.0.iter().filter(|(_, g)| !g.is_zero()).map(|(&d, _)| d).collect()
    }
}

impl fmt::Display for GradedGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, g) in &self.0 {
            writeln!(f, "{d:>4}  {g}")?;
        }
        Ok(())
    }
}

impl Serialize for GradedGroups {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (d, g) in &self.0 {
            m.serialize_entry(&d.to_string(), g)?;
        }
        m.end()
    }
}

/// Invariant and coinvariant complexes of `S^V` for one subgroup, reduced.
#[derive(Clone, Debug)]
pub struct LevelComplexes {
    pub invariants: ReducedComplex,
    pub coinvariants: ReducedComplex,
    pub raw_invariants: ChainComplex,
    pub raw_coinvariants: ChainComplex,
}

fn check_level(v: &RepDescriptor, h: u64) -> Result<()> {
    let g = v.order();
    if h == 0 || !h.is_power_of_two() || g % h != 0 {
        return Err(Error::InvalidSubgroup { sub: h, group: g });
    }
    Ok(())
}

pub fn level_complexes(c: &PermChainComplex, h: u64) -> Result<LevelComplexes> {
    check_level(c.rep(), h)?;
    let (inv, coinv) = c.orbit_complexes(h);
    Ok(LevelComplexes { invariants: inv.reduce(), coinvariants: coinv.reduce(), raw_invariants: inv, raw_coinvariants: coinv })
}

fn mod2(dims: BTreeMap<i64, usize>) -> GradedGroups {
    GradedGroups(dims.into_iter().map(|(d, n)| (d, AbGroup::new(0, vec![BigInt::from(2); n]))).collect())
}

/// `H^H_*(S^V; coeff)` for the subgroup of order `h`, from the complex of
/// `H`-invariant chains.
pub fn bredon_homology(v: &RepDescriptor, h: u64, coeff: Coeff) -> Result<GradedGroups> {
    check_level(v, h)?;
    let c = build_complex(v);
    let inv = c.orbit_complexes(h).0.reduce();
    Ok(match coeff {
        Coeff::Z => GradedGroups(inv.homology()),
        Coeff::Z2 => mod2(inv.homology_mod2()),
    })
}

/// `H_H^*(S^V; coeff)` from the complex of orbit-constant cochains.
pub fn bredon_cohomology(v: &RepDescriptor, h: u64, coeff: Coeff) -> Result<GradedGroups> {
    check_level(v, h)?;
    let c = build_complex(v);
    let co = c.orbit_complexes(h).1.reduce();
    Ok(match coeff {
        Coeff::Z => GradedGroups(co.cohomology()),
        Coeff::Z2 => mod2(co.homology_mod2()),
    })
}

/// Homology with the group action forgotten.
pub fn underlying_homology(v: &RepDescriptor) -> GradedGroups {
    GradedGroups(build_complex(v).underlying().homology())
}

#[derive(Clone, Debug, Serialize)]
pub struct GapEntry {
    pub m: u32,
    pub degree: i64,
    pub group: AbGroup,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub n: u32,
    pub entries: Vec<GapEntry>,
}

impl GapReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// `H^i_G(S^{mρ_G}; Z) = 0` for `i ∈ {1,2,3}` and `1 ≤ m ≤ m_max`.
pub fn gap_check(n: u32, m_max: u32) -> Result<GapReport> {
    if n == 0 {
        return Err(Error::OutOfRange("the group must be nontrivial".into()));
    }
    let mut entries = Vec::new();
    for m in 1..=m_max {
        let v = RepDescriptor::regular(n).scaled(m);
        let coh = bredon_cohomology(&v, v.order(), Coeff::Z)?;
        for i in 1..=3 {
            let group = coh.get(i);
            entries.push(GapEntry { m, degree: i, pass: group.is_zero(), group });
        }
    }
    Ok(GapReport { n, entries })
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiHzReport {
    pub n: u32,
    /// Number of copies of `σ` used for the stable range
    pub sigma_copies: u32,
    pub groups: Vec<(i64, AbGroup)>,
    /// degrees `≤ k_max` agree between `N` and `N + 1` copies
    pub stable: bool,
}

impl PhiHzReport {
    pub fn matches_polynomial_ring(&self) -> bool {
        self.groups.iter().all(|(k, g)| if k % 2 == 0 { *g == AbGroup::cyclic(2) } else { g.is_zero() })
    }
}

/// `π_k Φ^G HZ` for `0 ≤ k ≤ k_max`, read off the `G`-invariant chains of
/// `S^{Nσ}` below the top cell.
pub fn phi_hz(n: u32, k_max: u32) -> Result<PhiHzReport> {
    if n == 0 {
        return Err(Error::OutOfRange("the group must be nontrivial".into()));
    }
    let big = k_max + 2;
    let at = |copies: u32| -> Result<GradedGroups> {
        let v = RepDescriptor::sigma(n, copies);
        bredon_homology(&v, v.order(), Coeff::Z)
    };
    let a = at(big)?;
    let b = at(big + 1)?;
    let groups: Vec<(i64, AbGroup)> = (0..=k_max as i64).map(|k| (k, a.get(k))).collect();
    let stable = (0..=k_max as i64).all(|k| a.get(k) == b.get(k));
    Ok(PhiHzReport { n, sigma_copies: big, groups, stable })
}
