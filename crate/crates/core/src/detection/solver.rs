use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicFrac, CyclotomicInt, GradedElem, GradedFrac, Ring, TruncSeries};
use crate::fgl::FormalAModule;

#[derive(Clone, Debug, Serialize)]
pub struct SValue {
    pub h: u64,
    pub i: usize,
    pub value: GradedElem,
    pub pi_valuation: Option<u32>,
}

fn check_h(h: u64) -> Result<()> {
    if matches!(h, 2 | 4 | 8) {
        Ok(())
    } else {
        Err(Error::InvalidSubgroup { sub: h, group: 8 })
    }
}

/// `f_H = x + Σ s_{H,i} x^{i+1}` solving
/// `log(x) = (x + Σ ζ^{8/h} w^{2^j−1} x^{2^j}/π^j) ∘ f_H(x)`.
pub fn s_solver(h: u64, n: usize) -> Result<Vec<SValue>> {
    check_h(h)?;
    let prec = n + 1;
    let module = FormalAModule::new(prec)?;
    let root = CyclotomicFrac::from(CyclotomicInt::zeta_pow(8 / h as i64));
    let pi_inv = CyclotomicFrac::pi_inverse();
    let mut g = TruncSeries::x(prec);
    let mut j = 1u32;
    while (1usize << j) <= prec {
        g.set_coeff(1 << j, root.times(&Ring::pow(&pi_inv, j as u64)));
        j += 1;
    }
    let f = g.revert()?.compose(module.log())?;
    if g.compose(&f)? != *module.log() {
        return Err(Error::OutOfRange("series identity fails after solving".into()));
    }
    (1..=n)
        .map(|i| {
            let value = GradedFrac::new(f.coeff(i + 1).clone(), i as i64).to_integral(i + 1)?;
            Ok(SValue { h, i, pi_valuation: value.pi_valuation(), value })
        })
        .collect()
}

/// `s_{H,1} = (1 − ζ^{8/h}) w / π`.
pub fn s_closed_form_degree1(h: u64) -> Result<GradedElem> {
    check_h(h)?;
    let num = &CyclotomicInt::from_int(1) - &CyclotomicInt::zeta_pow(8 / h as i64);
    GradedFrac::new(CyclotomicFrac::from(num).times(&CyclotomicFrac::pi_inverse()), 1).to_integral(1)
}
