use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact value of `||·||` on a monomial in `2, π, t_n, v_n`, with the monomial kept for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationTerm {
    pub value: BigRational,
    pub expr: String,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ValuationTerm {
    pub fn two() -> Self {
        Self { value: q(1, 1), expr: "2".into() }
    }

    pub fn pi() -> Self {
        Self { value: q(1, 4), expr: "π".into() }
    }

    pub fn t(n: u32) -> Self {
        Self { value: q(0, 1), expr: format!("t{n}") }
    }

    pub fn v(n: u32) -> Self {
        Self { value: q((4 - n as i64).max(0), 4), expr: format!("v{n}") }
    }

    pub fn pow(&self, e: i64) -> Self {
        Self { value: &self.value * BigInt::from(e), expr: format!("{}^{e}", self.expr) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { value: &self.value + &o.value, expr: format!("{}·{}", self.expr, o.expr) }
    }

    pub fn div(&self, o: &Self) -> Self {
        Self { value: &self.value - &o.value, expr: format!("{}/({})", self.expr, o.expr) }
    }
}

impl fmt::Display for ValuationTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "||{}|| = {}", self.expr, self.value)
    }
}

/// `c(j,k) = 2^{j−1−2k}(1 + 2^{2k+1})/3`.
pub fn c_jk(j: u32, k: u32) -> Result<u64> {
    if 2 * k >= j {
        return Err(Error::OutOfRange(format!("need 2k < j, got j = {j}, k = {k}")));
    }
    let num = (1u64 << (j - 1 - 2 * k)) * (1 + (1u64 << (2 * k + 1)));
    Ok(num / 3)
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaBound {
    pub j: u32,
    pub k: u32,
    pub c: u64,
    pub value: String,
    pub pass: bool,
}

/// `||v₂^{c(j,k)} / (2·v₁^{2^{j−1−2k}})||`.
pub fn beta_valuation(j: u32, k: u32) -> Result<ValuationTerm> {
    let c = c_jk(j, k)?;
    let num = ValuationTerm::v(2).pow(c as i64);
    let den = ValuationTerm::two().mul(&ValuationTerm::v(1).pow(1i64 << (j - 1 - 2 * k)));
    Ok(num.div(&den))
}

/// `||v₁^{2^j−1}/2||`.
pub fn alpha_valuation(j: u32) -> ValuationTerm {
    ValuationTerm::v(1).pow((1i64 << j) - 1).div(&ValuationTerm::two())
}
