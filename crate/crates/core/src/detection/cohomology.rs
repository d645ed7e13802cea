use num_bigint::BigInt;
use serde::Serialize;

use crate::exactalg::f2::BitMatrix;
use crate::exactalg::{AbGroup, BitVec, CyclotomicInt, IntMatrix, Subquotient};

/// `R_{2m} = A·w^m` as a `Z[C₈]`-module: `γ` acts by `ζ^m` on the basis `1, ζ, ζ², ζ³`.
#[derive(Clone, Debug)]
pub struct RModule {
    pub m: i64,
    pub gamma: IntMatrix,
    pub trace: IntMatrix,
}

impl RModule {
    pub fn new(m: i64) -> Self {
        let gamma = mult_matrix(&CyclotomicInt::zeta_pow(m));
        let mut trace = IntMatrix::zeros(4, 4);
        let mut p = IntMatrix::identity(4);
        for _ in 0..8 {
            trace = add(&trace, &p);
            p = p.mul(&gamma);
        }
        Self { m, gamma, trace }
    }

    pub fn gamma_minus_one(&self) -> IntMatrix {
        add(&self.gamma, &scalar(-1))
    }

    /// Value of `γ` on a vector of `A`.
    pub fn act(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.gamma.mul_vec(x)
    }
}

pub(crate) fn mult_matrix(a: &CyclotomicInt) -> IntMatrix {
    let mut out = IntMatrix::zeros(4, 4);
    for j in 0..4 {
        let col = a * &CyclotomicInt::zeta_pow(j as i64);
        for (i, c) in col.coeffs().iter().enumerate() {
            out.set(i, j, c.clone());
        }
    }
    out
}

fn scalar(k: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(4, 4);
    for i in 0..4 {
        m.set(i, i, BigInt::from(k));
    }
    m
}

fn add(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j) + b.get(i, j));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CohClass {
    pub s: u32,
    pub m: i64,
    pub group: AbGroup,
    /// Representatives in `A` (ζ-basis coordinates) with their orders.
    #[serde(skip)]
    pub generators: Vec<(Vec<BigInt>, Option<BigInt>)>,
}

/// Maps `(in, out)` of the periodic complex around `Cˢ`:
/// `0 → A --γ−1--> A --Tr--> A --γ−1--> …`.
pub(crate) fn periodic_maps(r: &RModule, s: u32) -> (IntMatrix, IntMatrix) {
    let d_minus = r.gamma_minus_one();
    match s {
        0 => (d_minus, IntMatrix::zeros(4, 0)),
        s if s % 2 == 1 => (r.trace.clone(), d_minus),
        _ => (d_minus, r.trace.clone()),
    }
}

/// `H^s(C₈; R_{2m})` from the 2-periodic complex.
pub fn cohomology_r(s: u32, m: i64) -> CohClass {
    let r = RModule::new(m);
    let (out, inc) = periodic_maps(&r, s);
    let sq = Subquotient::new(&out, &inc);
    CohClass { s, m, group: sq.group(), generators: sq.generators() }
}

fn to_bits(m: &IntMatrix) -> BitMatrix {
    let rows = (0..m.rows())
        .map(|i| {
            let mut v = BitVec::zeros(m.cols());
            for j in 0..m.cols() {
                v.set(j, num_integer::Integer::is_odd(m.get(i, j)));
            }
            v
        })
        .collect();
    BitMatrix::from_rows(m.cols(), rows)
}

/// `dim_{F₂} H^s(C₈; R_{2m}/2)`.
pub fn cohomology_r_mod2(s: u32, m: i64) -> usize {
    let r = RModule::new(m);
    let (out, inc) = periodic_maps(&r, s);
    let ker = 4 - to_bits(&out).rank();
    let im = if inc.cols() == 0 { 0 } else { to_bits(&inc).rank() };
    ker - im
}
