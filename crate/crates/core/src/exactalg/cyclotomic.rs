use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};


/// Element of `Z[ζ]`, `ζ` a primitive 8th root of unity, stored on the
/// power basis `1, ζ, ζ², ζ³` with `ζ⁴ = −1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CyclotomicInt {
    c: [BigInt; 4],
}

fn v2(n: &BigInt) -> u32 {
    n.trailing_zeros().map(|t| t as u32).unwrap_or(0)
}

impl CyclotomicInt {
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>, c3: impl Into<BigInt>) -> Self {
        Self { c: [c0.into(), c1.into(), c2.into(), c3.into()] }
    }

    pub fn from_coeffs(c: [BigInt; 4]) -> Self {
        Self { c }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0, 0, 0)
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn zeta() -> Self {
        Self::new(0, 1, 0, 0)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c: [BigInt; 4] = Default::default();
        c[k % 4] = if k < 4 { BigInt::one() } else { -BigInt::one() };
        Self { c }
    }

    /// The uniformizer `π = ζ − 1`.
    pub fn pi() -> Self {
        Self::new(-1, 1, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { c: self.c.clone().map(|x| x * k) }
    }

    /// Exact division by an integer, `None` if some coordinate is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut c: [BigInt; 4] = Default::default();
        for (dst, src) in c.iter_mut().zip(self.c.iter()) {
            let (q, r) = src.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            *dst = q;
        }
        Some(Self { c })
    }

    /// Gcd of the four coordinates.
    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^j`, `j` odd.
    pub fn conjugate(&self, j: i64) -> Self {
        assert!(j.rem_euclid(2) == 1, "conjugation exponent must be odd");
        let mut out = Self::default();
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                out = out + Self::zeta_pow(j * i as i64).scale(a);
            }
        }
        out
    }

    /// Field norm to `Q`, computed as `|A² − iB²|²` for `x = A + Bζ`,
    /// `A, B ∈ Z[i]`.
    pub fn norm(&self) -> BigInt {
        let [c0, c1, c2, c3] = &self.c;
        // A = c0 + c2 i, B = c1 + c3 i
        let a2 = (c0 * c0 - c2 * c2, BigInt::from(2) * c0 * c2);
        let b2 = (c1 * c1 - c3 * c3, BigInt::from(2) * c1 * c3);
        // A² − iB² = (a2.0 + b2.1) + (a2.1 − b2.0) i
        let re = &a2.0 + &b2.1;
        let im = &a2.1 - &b2.0;
        &re * &re + &im * &im
    }

    /// `π`-adic valuation `v₂(N(x))`; `None` for zero.
    pub fn pi_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(v2(&self.norm()))
        }
    }

    /// Unit of `Z[ζ₈]` (norm one).
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Unit after completing at `π`: odd norm.
    pub fn is_two_adic_unit(&self) -> bool {
        self.pi_valuation() == Some(0)
    }

    /// Product of the non-identity conjugates, so that `x · adj(x) = N(x)`.
    pub fn adjugate(&self) -> Self {
        &(&self.conjugate(3) * &self.conjugate(5)) * &self.conjugate(7)
    }

    /// Coordinates `d₀..d₃` with `x = Σ dᵢ πⁱ`.
    pub fn to_pi_basis(&self) -> [BigInt; 4] {
        let [c0, c1, c2, c3] = &self.c;
        [
            c0 + c1 + c2 + c3,
            c1 + BigInt::from(2) * c2 + BigInt::from(3) * c3,
            c2 + BigInt::from(3) * c3,
            c3.clone(),
        ]
    }

    pub fn from_pi_basis(d: [BigInt; 4]) -> Self {
        let [d0, d1, d2, d3] = d;
        Self::new(
            &d0 - &d1 + &d2 - &d3,
            &d1 - BigInt::from(2) * &d2 + BigInt::from(3) * &d3,
            &d2 - BigInt::from(3) * &d3,
            d3,
        )
    }

    pub fn fmt_pi(&self) -> String {
        fmt_poly(&self.to_pi_basis(), "π")
    }
}

pub(crate) fn fmt_poly(c: &[BigInt; 4], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for i in (0..4).rev() {
        let a = &c[i];
        if a.is_zero() {
            continue;
        }
        let mag = a.abs();
        let body = match i {
            0 => mag.to_string(),
            _ => {
                let pw = match i {
                    1 => var.to_string(),
                    2 => format!("{var}²"),
                    _ => format!("{var}³"),
                };
                if mag.is_one() {
                    pw
                } else {
                    format!("{mag}{pw}")
                }
            }
        };
        let sign = if a.is_negative() { "−" } else { "+" };
        if parts.is_empty() {
            parts.push(if a.is_negative() { format!("−{body}") } else { body });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_poly(&self.c, "ζ"))
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, o: &CyclotomicInt) -> CyclotomicInt {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(o.c.iter()) {
            *a += b;
        }
        CyclotomicInt { c }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, o: &CyclotomicInt) -> CyclotomicInt {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(o.c.iter()) {
            *a -= b;
        }
        CyclotomicInt { c }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, o: &CyclotomicInt) -> CyclotomicInt {
        let mut c: [BigInt; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                if i + j < 4 {
                    c[i + j] += p;
                } else {
                    c[i + j - 4] -= p;
                }
            }
        }
        CyclotomicInt { c }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { c: self.c.clone().map(|x| -x) }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(CyclotomicInt, Add add, Sub sub, Mul mul);

impl Neg for CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.len() != 4 {
            return Err(D::Error::custom("expected 4 coordinates"));
        }
        let mut c: [BigInt; 4] = Default::default();
        for (dst, s) in c.iter_mut().zip(v.iter()) {
            *dst = s.parse().map_err(D::Error::custom)?;
        }
        Ok(Self { c })
    }
}

/// `num / den` with `num ∈ Z[ζ]` and `den > 0`, kept reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicFrac {
    num: CyclotomicInt,
    den: BigInt,
}

impl CyclotomicFrac {
    pub fn new(num: CyclotomicInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self { num, den: BigInt::one() };
        }
        let g = num.content().gcd(&den);
        let g = if den.is_negative() { -g } else { g };
        if g.is_one() {
            Self { num, den }
        } else {
            let num = num.div_exact(&g).expect("gcd divides content");
            Self { num, den: den / g }
        }
    }

    pub fn numer(&self) -> &CyclotomicInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// `1/π = −(π³ + 4π² + 6π + 4)/2`.
    pub fn pi_inverse() -> Self {
        Self::new(CyclotomicInt::pi().adjugate(), BigInt::from(2))
    }

    pub fn to_int(&self) -> Option<CyclotomicInt> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// `v_π(num) − 4·v₂(den)`; `None` for zero.
    pub fn pi_valuation(&self) -> Option<i64> {
        self.num.pi_valuation().map(|v| v as i64 - 4 * v2(&self.den) as i64)
    }
}

impl From<CyclotomicInt> for CyclotomicFrac {
    fn from(num: CyclotomicInt) -> Self {
        Self { num, den: BigInt::one() }
    }
}

impl fmt::Display for CyclotomicFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

mod ring_impls {
    use super::*;
    use crate::exactalg::ring::Ring;

impl Ring for CyclotomicInt {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn is_zero(&self) -> bool {
        CyclotomicInt::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_unit() {
            Some(self.adjugate())
        } else {
            None
        }
    }
}

impl Ring for CyclotomicFrac {
    fn zero() -> Self {
        CyclotomicInt::default().into()
    }
    fn one() -> Self {
        CyclotomicInt::from_int(1).into()
    }
    fn from_i64(n: i64) -> Self {
        CyclotomicInt::from_int(n).into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(&self.num.scale(&o.den) + &o.num.scale(&self.den), &self.den * &o.den)
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn negate(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let adj = self.num.adjugate();
        let n = self.num.norm();
        Some(Self::new(adj.scale(&self.den), n))
    }
}

}
