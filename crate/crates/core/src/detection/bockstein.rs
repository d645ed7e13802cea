use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::cohomology::{periodic_maps, RModule};
use crate::error::{Error, Result};
use crate::exactalg::{AbGroup, CyclotomicInt, GradedElem, Ring, Subquotient};
use crate::fgl::t_recursion;

#[derive(Clone, Debug, Serialize)]
pub struct BocksteinImage {
    pub j: u32,
    /// Weight `m = 2^j`; the target is `H²(C₈; R_{2m})`.
    pub m: i64,
    pub source_value: GradedElem,
    pub target_group: AbGroup,
    pub witness: GradedElem,
    #[serde(serialize_with = "order_str")]
    pub order: Option<BigInt>,
    pub nonzero: bool,
    pub cobar_agrees: bool,
}

fn order_str<S: serde::Serializer>(o: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match o {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_str("inf"),
    }
}

fn coords(x: &CyclotomicInt) -> Vec<BigInt> {
    x.coeffs().to_vec()
}

/// Image of `λ[t₁^{2^j}]` under the mod-2 Bockstein into `H²(C₈; R_{2^{j+1}})`,
/// computed on the periodic complex as `Tr(x)/2` for the lift `x = t₁(ζ₈)^{2^j}`.
pub fn bockstein_image(j: u32) -> Result<BocksteinImage> {
    if j < 1 {
        return Err(Error::OutOfRange("j ≥ 1".into()));
    }
    let t1 = t_recursion(1, 1)?.pop().expect("t₁ present");
    let n = 1u64 << j;
    let x = Ring::pow(&t1.value, n);
    let m = n as i64;
    let r = RModule::new(m);
    let tr = r.trace.mul_vec(&coords(&x));
    if tr.iter().any(|c| c.is_odd()) {
        return Err(Error::NotTraceDivisible);
    }
    let half: Vec<BigInt> = tr.iter().map(|c| c / 2).collect();
    let (out, inc) = periodic_maps(&r, 2);
    let sq = Subquotient::new(&out, &inc);
    if !sq.in_kernel(&half) {
        return Err(Error::NotTraceDivisible);
    }
    let order = sq.class_order(&half);
    let cobar = cobar_class(&t1.value, n);
    let diff: Vec<BigInt> = coords(&cobar).iter().zip(&half).map(|(a, b)| a - b).collect();
    let sum: Vec<BigInt> = coords(&cobar).iter().zip(&half).map(|(a, b)| a + b).collect();
    let cobar_agrees = sq.in_kernel(&coords(&cobar)) && (sq.is_zero_class(&diff) || sq.is_zero_class(&sum));
    let witness = GradedElem::new(CyclotomicInt::from_coeffs(half.try_into().expect("four coordinates")), m);
    Ok(BocksteinImage {
        j,
        m,
        source_value: GradedElem::new(x, m),
        target_group: sq.group(),
        witness,
        nonzero: order != Some(BigInt::from(1)),
        order,
        cobar_agrees,
    })
}

/// `Σ_k f(γᵏ, γ)` for the 2-cocycle `f = −δ(c^N)/2`, where `c` is the crossed
/// homomorphism of weight one with `c(γ) = c1`.
pub fn cobar_class(c1: &CyclotomicInt, n: u64) -> CyclotomicInt {
    let mut c = CyclotomicInt::from_int(0);
    let mut total = CyclotomicInt::from_int(0);
    for k in 0..8 {
        let moved = &CyclotomicInt::zeta_pow(k) * c1;
        let whole = Ring::pow(&(&c + &moved), n);
        let parts = &Ring::pow(&c, n) + &Ring::pow(&moved, n);
        let f = (&whole - &parts).div_exact(&BigInt::from(2)).expect("binomial coefficients are even");
        total = &total + &f;
        c = &c + &moved;
    }
    total
}
