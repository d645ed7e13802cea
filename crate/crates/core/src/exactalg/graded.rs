use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::cyclotomic::{CyclotomicFrac, CyclotomicInt};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Homogeneous element `a·w^m` of `A[w^{±1}]`, internal degree `2m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedElem {
    pub value: CyclotomicInt,
    pub w_exp: i64,
}

/// Homogeneous element of `Frac(A)[w^{±1}]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedFrac {
    pub value: CyclotomicFrac,
    pub w_exp: i64,
}

impl GradedElem {
    pub fn new(value: CyclotomicInt, w_exp: i64) -> Self {
        Self { value, w_exp }
    }

    pub fn from_pi_poly(c: [i64; 4], w_exp: i64) -> Self {
        Self::new(CyclotomicInt::from_pi_basis(c.map(BigInt::from)), w_exp)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.value * &o.value, self.w_exp + o.w_exp)
    }

    pub fn pi_valuation(&self) -> Option<u32> {
        self.value.pi_valuation()
    }

    pub fn is_unit(&self) -> bool {
        self.value.is_two_adic_unit()
    }
}

impl GradedFrac {
    pub fn new(value: CyclotomicFrac, w_exp: i64) -> Self {
        Self { value, w_exp }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.value.times(&o.value), self.w_exp + o.w_exp)
    }

    /// Integral element, or an error naming `degree` for diagnostics.
    pub fn to_integral(&self, degree: usize) -> Result<GradedElem> {
        self.value
            .to_int()
            .map(|v| GradedElem::new(v, self.w_exp))
            .ok_or_else(|| Error::NonIntegral { degree, value: self.value.to_string() })
    }
}

impl From<GradedElem> for GradedFrac {
    fn from(e: GradedElem) -> Self {
        Self::new(e.value.into(), e.w_exp)
    }
}

fn fmt_weight(w: i64) -> String {
    match w {
        0 => String::new(),
        1 => "w".into(),
        _ => format!("w^{w}"),
    }
}

impl fmt::Display for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.value.fmt_pi();
        let w = fmt_weight(self.w_exp);
        if w.is_empty() || self.value.is_zero() {
            f.write_str(&body)
        } else if self.value.to_pi_basis()[1..].iter().all(|c| *c == BigInt::from(0)) {
            match body.as_str() {
                "1" => f.write_str(&w),
                "−1" => write!(f, "−{w}"),
                _ => write!(f, "{body}{w}"),
            }
        } else {
            write!(f, "({body}){w}")
        }
    }
}

impl Serialize for GradedElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pi: Vec<String> = self.value.to_pi_basis().iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("GradedElem", 2)?;
        st.serialize_field("pi_poly", &pi)?;
        st.serialize_field("w_exp", &self.w_exp)?;
        st.end()
    }
}
