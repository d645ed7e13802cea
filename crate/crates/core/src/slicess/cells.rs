use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `G₊ ∧_H S^{mρ_H}`, optionally desuspended once; `h = |H|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SliceCell {
    pub h: u64,
    pub m: i64,
    pub desuspended: bool,
}

impl SliceCell {
    pub fn new(h: u64, m: i64) -> Self {
        Self { h, m, desuspended: false }
    }

    pub fn desuspended(h: u64, m: i64) -> Self {
        Self { h, m, desuspended: true }
    }

    pub fn dim(&self) -> i64 {
        self.m * self.h as i64 - self.desuspended as i64
    }

    pub fn is_regular(&self) -> bool {
        !self.desuspended
    }

    pub fn is_isotropic(&self) -> bool {
        self.h >= 2
    }
}

impl fmt::Display for SliceCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.m {
            1 => String::new(),
            m => m.to_string(),
        };
        if self.desuspended {
            f.write_str("Σ^-1 ")?;
        }
        write!(f, "G+∧_C{} S^{{{}ρ_{}}}", self.h, m, self.h)
    }
}

fn check_order(g: u64, h: u64) -> Result<()> {
    if !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    if h == 0 || !h.is_power_of_two() || g % h != 0 {
        return Err(Error::InvalidSubgroup { sub: h, group: g });
    }
    Ok(())
}

/// Restriction of the `G`-cell to the subgroup of order `h`, as
/// `(H-cell, multiplicity)` pairs.
pub fn restrict_cell(g: u64, cell: SliceCell, h: u64) -> Result<Vec<(SliceCell, u64)>> {
    check_order(g, h)?;
    check_order(g, cell.h)?;
    let k = cell.h;
    let meet = h.min(k);
    let copies = g / h.max(k);
    let m = cell.m * (k / meet) as i64;
    let c = SliceCell { h: meet, m, desuspended: cell.desuspended };
    Ok(vec![(c, copies)])
}

/// Induction from `H` to `G` keeps the inducing subgroup.
pub fn induce_cell(g: u64, h: u64, cell: SliceCell) -> Result<SliceCell> {
    check_order(g, h)?;
    check_order(h, cell.h)?;
    Ok(cell)
}

/// Closed interval of `k` where `π_k` of an `n`-slice can be nonzero.
pub fn vanishing_range(n: i64, g: u64) -> Result<(i64, i64)> {
    if !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    let g = g as i64;
    Ok(if n >= 0 { (n.div_euclid(g), n) } else { (n, (n + 1).div_euclid(g) - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(SliceCell::new(4, 2).dim(), 8);
        assert_eq!(SliceCell::desuspended(8, 1).dim(), 7);
    }

    #[test]
    fn restriction_of_regular_sphere() {
        let r = restrict_cell(8, SliceCell::new(8, 1), 4).unwrap();
        assert_eq!(r, vec![(SliceCell::new(4, 2), 1)]);
        // an induced cell restricts to several copies
        let r = restrict_cell(8, SliceCell::new(2, 3), 4).unwrap();
        assert_eq!(r, vec![(SliceCell::new(2, 3), 2)]);
        assert!(restrict_cell(8, SliceCell::new(2, 1), 3).is_err());
    }

    #[test]
    fn restriction_preserves_underlying_cells() {
        // the underlying space is always g/k spheres of dimension mk
        for k in [1u64, 2, 4, 8] {
            for h in [1u64, 2, 4, 8] {
                let cell = SliceCell::new(k, 3);
                for (c, copies) in restrict_cell(8, cell, h).unwrap() {
                    assert_eq!(c.dim(), cell.dim());
                    assert_eq!(copies * (h / c.h), 8 / k);
                }
            }
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(vanishing_range(4, 8).unwrap(), (0, 4));
        assert_eq!(vanishing_range(-3, 8).unwrap(), (-3, -2));
        assert_eq!(vanishing_range(0, 4).unwrap(), (0, 0));
        assert_eq!(vanishing_range(17, 8).unwrap(), (2, 17));
    }
}
