use serde::Serialize;

use super::amodule::pi_inv_pow;
use crate::error::Result;
use crate::exactalg::{CyclotomicFrac, CyclotomicInt, GradedElem, GradedFrac, Ring};

#[derive(Clone, Debug, Serialize)]
pub struct HazewinkelImage {
    pub n: u32,
    pub value: GradedElem,
    pub pi_valuation: u32,
    /// `λ(v_n)/π^{4−n}` when it is a 2-adic unit.
    pub unit_part: Option<GradedElem>,
}

/// Images of Hazewinkel's `v_n` under `ℓ_n ↦ w^{2^n−1}/πⁿ`, from
/// `2ℓ_n = Σ_{0≤i<n} ℓ_i v_{n−i}^{2^i}`.
pub fn hazewinkel_images(n_max: u32) -> Result<Vec<HazewinkelImage>> {
    let two = CyclotomicFrac::from_i64(2);
    let pi = CyclotomicFrac::from(CyclotomicInt::pi());
    let mut v: Vec<CyclotomicFrac> = vec![CyclotomicFrac::zero()];
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut x = two.times(&pi_inv_pow(n));
        for i in 1..n {
            x = x.minus(&pi_inv_pow(i).times(&Ring::pow(&v[(n - i) as usize], 1 << i)));
        }
        let weight = (1i64 << n) - 1;
        let value = GradedFrac::new(x.clone(), weight).to_integral(n as usize)?;
        let val = value.pi_valuation().unwrap_or(u32::MAX);
        let unit_part = (n <= 4)
            .then(|| x.times(&Ring::pow(&pi, (4 - n) as u64).inverse().expect("nonzero")))
            .and_then(|u| u.to_int())
            .filter(CyclotomicInt::is_two_adic_unit)
            .map(|u| GradedElem::new(u, weight));
        out.push(HazewinkelImage { n, value, pi_valuation: val, unit_part });
        v.push(x);
    }
    Ok(out)
}
