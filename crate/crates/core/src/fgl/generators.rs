use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::f2::BitMatrix;
use crate::exactalg::{BitVec, Mono, Ring, SparsePoly, TruncSeries, Var, F2};
use crate::slicess::mo_poincare_series;

type F2Poly = SparsePoly<F2>;
type ZPoly = SparsePoly<BigInt>;

fn is_mersenne(k: u32) -> bool {
    (k + 1).is_power_of_two()
}

#[derive(Clone, Debug)]
pub struct MoGenerators {
    /// `h[j]` for `1 ≤ j ≤ n`; index 0 unused.
    pub h: Vec<F2Poly>,
}

impl MoGenerators {
    pub fn get(&self, j: usize) -> &F2Poly {
        &self.h[j]
    }

    pub fn len(&self) -> usize {
        self.h.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Σ h_j a^{j+1} = (a + Σ α_{2^j−1} a^{2^j})^{−1} ∘ (a + Σ α_n a^{n+1})` over `F₂[α]`.
pub fn mo_generators(n: usize) -> Result<MoGenerators> {
    let prec = n + 1;
    let mut ell = TruncSeries::<F2Poly>::x(prec);
    let mut g = TruncSeries::<F2Poly>::x(prec);
    for k in 1..=n as u32 {
        let a = F2Poly::var(Var::Alpha(k));
        if is_mersenne(k) {
            g.set_coeff(k as usize + 1, a.clone());
        }
        ell.set_coeff(k as usize + 1, a);
    }
    let h = g.revert()?.compose(&ell)?;
    let mut out = vec![F2Poly::zero()];
    for j in 1..=n {
        let hj = h.coeff(j + 1).clone();
        if !hj.is_zero() && hj.homogeneous_degree() != Some(j as i64) {
            return Err(Error::OutOfRange(format!("h_{j} is not homogeneous of degree {j}")));
        }
        if is_mersenne(j as u32) && !hj.is_zero() {
            return Err(Error::OutOfRange(format!("h_{j} should vanish")));
        }
        out.push(hj);
    }
    Ok(MoGenerators { h: out })
}

/// Per degree `d ≤ n`: F₂-rank of all products of the `h_j` (`j ≠ 2^k − 1`) of
/// degree `d`, against the number of such products. Equality for every `d`
/// means the `h_j` are algebraically independent in that range.
pub fn mo_independence_ranks(gens: &MoGenerators, n: usize) -> Vec<(usize, usize, u64)> {
    let expected = mo_poincare_series(n);
    let mut out = Vec::new();
    // products by degree, built up one allowed generator at a time
    let mut by_degree: Vec<Vec<F2Poly>> = vec![Vec::new(); n + 1];
    by_degree[0].push(F2Poly::one());
    for j in (1..=n).filter(|&j| !is_mersenne(j as u32)) {
        for d in j..=n {
            let extra: Vec<F2Poly> = by_degree[d - j].iter().map(|p| p.times(gens.get(j))).collect();
            by_degree[d].extend(extra);
        }
    }
    for (d, polys) in by_degree.iter().enumerate() {
        let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
        for p in polys {
            for (m, _) in p.terms() {
                let next = index.len();
                index.entry(m.clone()).or_insert(next);
            }
        }
        let rows: Vec<BitVec> = polys
            .iter()
            .map(|p| {
                let mut v = BitVec::zeros(index.len());
                for (m, _) in p.terms() {
                    v.set(index[m], true);
                }
                v
            })
            .collect();
        let rank = BitMatrix::from_rows(index.len(), rows).rank();
        out.push((d, rank, expected[d]));
    }
    out
}

#[derive(Clone, Debug)]
pub struct RbarGenerators {
    /// `r[k]` for `1 ≤ k ≤ n`; index 0 unused.
    pub r: Vec<ZPoly>,
}

impl RbarGenerators {
    pub fn get(&self, k: usize) -> &ZPoly {
        &self.r[k]
    }

    /// `m̄_k − γm̄_k` for `k = 2^ℓ − 1`, otherwise `m̄_k`.
    pub fn expected_indecomposable(k: u32) -> ZPoly {
        let m = ZPoly::var(Var::M { k, j: 0 });
        if is_mersenne(k) {
            m.minus(&ZPoly::var(Var::M { k, j: 1 }))
        } else {
            m
        }
    }

    /// Reduce mod 2 and identify `m̄_k`, `γm̄_k` with `α_k`.
    pub fn to_mo(&self, k: usize) -> F2Poly {
        let p = self.r[k].map_coeffs(|c| F2(c.is_odd()));
        p.substitute(|v| match v {
            Var::M { k, .. } => F2Poly::var(Var::Alpha(k)),
            other => F2Poly::var(other),
        })
    }
}

/// Coefficients of `(x + Σ γm̄_{2^ℓ−1} x^{2^ℓ})^{−1} ∘ (x + Σ m̄_i x^{i+1})`.
pub fn rbar_generators(n: usize) -> Result<RbarGenerators> {
    let prec = n + 1;
    let mut log = TruncSeries::<ZPoly>::x(prec);
    let mut typ = TruncSeries::<ZPoly>::x(prec);
    for k in 1..=n as u32 {
        log.set_coeff(k as usize + 1, ZPoly::var(Var::M { k, j: 0 }));
        if is_mersenne(k) {
            typ.set_coeff(k as usize + 1, ZPoly::var(Var::M { k, j: 1 }));
        }
    }
    let r = typ.revert()?.compose(&log)?;
    let mut out = vec![ZPoly::zero()];
    for k in 1..=n {
        let rk = r.coeff(k + 1).clone();
        if rk.indecomposable_part() != RbarGenerators::expected_indecomposable(k as u32) {
            return Err(Error::OutOfRange(format!("r̄_{k} has the wrong image in the indecomposables")));
        }
        out.push(rk);
    }
    Ok(RbarGenerators { r: out })
}
