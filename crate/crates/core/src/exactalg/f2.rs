//! The field with two elements and dense bit matrices over it.

use std::fmt;

use super::ring::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct F2(pub bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

impl Ring for F2 {
    fn zero() -> Self {
        F2::ZERO
    }
    fn one() -> Self {
        F2::ONE
    }
    fn from_i64(n: i64) -> Self {
        F2(n.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn plus(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn minus(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn times(&self, o: &Self) -> Self {
        F2(self.0 & o.0)
    }
    fn negate(&self) -> Self {
        *self
    }
    fn inverse(&self) -> Option<Self> {
        self.0.then_some(F2::ONE)
    }
}

/// Vector over F₂ packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(o.words.iter()) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, o: &BitVec) -> bool {
        self.words.iter().zip(o.words.iter()).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

/// Dense matrix over F₂ stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVec::zeros(cols); rows] }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { cols, rows }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(x) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn mul(&self, o: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, o.nrows(), "dimension mismatch");
        let mut out = BitMatrix::zeros(self.nrows(), o.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for k in r.ones() {
                out.rows[i].xor_assign(&o.rows[k]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.nrows()).find(|&i| self.rows[i].get(c)) else { continue };
            self.rows.swap(r, p);
            let pivot_row = self.rows[r].clone();
            for i in 0..self.nrows() {
                if i != r && self.rows[i].get(c) {
                    self.rows[i].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.nrows() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(self.cols, free);
            for (r, &p) in pivots.iter().enumerate() {
                if m.rows[r].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Solve `Σ cᵢ·basisᵢ = target`; `None` if `target` is outside the span.
pub fn solve_in_span(basis: &[BitVec], target: &BitVec) -> Option<BitVec> {
    let n = target.len();
    let k = basis.len();
    // augmented system: columns are basis vectors, last column the target
    let mut m = BitMatrix::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in b.ones() {
            m.set(i, j, true);
        }
    }
    for i in target.ones() {
        m.set(i, k, true);
    }
    let pivots = m.rref();
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = BitVec::zeros(k);
    for (r, &p) in pivots.iter().enumerate() {
        if m.get(r, k) {
            x.set(p, true);
        }
    }
    Some(x)
}

/// Extend a basis of `sub` to a basis of `sup` (which must contain `sub`);
/// returns only the added vectors.
pub fn complement(sub: &[BitVec], sup: &[BitVec]) -> Vec<BitVec> {
    let mut span: Vec<BitVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let reduce = |v: &BitVec, span: &[BitVec], pivots: &[usize]| {
        let mut w = v.clone();
        for (b, &p) in span.iter().zip(pivots.iter()) {
            if w.get(p) {
                w.xor_assign(b);
            }
        }
        w
    };
    let mut added = Vec::new();
    for (i, v) in sub.iter().chain(sup.iter()).enumerate() {
        let w = reduce(v, &span, &pivots);
        if let Some(p) = w.first_one() {
            for b in span.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&w);
                }
            }
            span.push(w);
            pivots.push(p);
            if i >= sub.len() {
                added.push(v.clone());
            }
        }
    }
    added
}
