//! Bounded chain complexes of free abelian groups with sparse integer
//! boundaries. Unit pivots are cancelled first; the remainder goes through
//! dense Smith normal form.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;

use super::abgroup::AbGroup;
use super::f2::{BitMatrix, BitVec};
use super::matrix::{invariant_factors, IntMatrix};

/// Column-major sparse integer matrix; columns sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    assert!((r as usize) < rows, "row index out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        Self { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for &(r, v) in c {
                m.set(r as usize, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(r, v) in c {
                cols[r as usize].push((j as u32, v));
            }
        }
        SparseMatrix { rows: self.ncols(), cols }
    }

    /// `self · o`.
    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), o.rows, "dimension mismatch");
        let cols = o
            .cols
            .iter()
            .map(|c| {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for &(k, v) in c {
                    for &(r, w) in &self.cols[k as usize] {
                        *acc.entry(r).or_insert(0) += v * w;
                    }
                }
                acc.into_iter().filter(|e| e.1 != 0).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_f2(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for &(r, v) in c {
                if v.rem_euclid(2) == 1 {
                    m.set(r as usize, j, true);
                }
            }
        }
        m
    }
}

/// `C_lo ← … ← C_hi`, with `boundary(d): C_d → C_{d−1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    dims: Vec<usize>,
    bounds: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `dims[t]` is the rank in degree `lo + t`; all boundaries start at zero.
    pub fn new(lo: i64, dims: Vec<usize>) -> Self {
        let bounds = (0..dims.len())
            .map(|t| SparseMatrix::zeros(if t == 0 { 0 } else { dims[t - 1] }, dims[t]))
            .collect();
        Self { lo, dims, bounds }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, d: i64) -> usize {
        self.index(d).map_or(0, |t| self.dims[t])
    }

    fn index(&self, d: i64) -> Option<usize> {
        (d >= self.lo && d <= self.hi()).then(|| (d - self.lo) as usize)
    }

    pub fn set_boundary(&mut self, d: i64, m: SparseMatrix) {
        let t = self.index(d).expect("degree out of range");
        assert_eq!(m.ncols(), self.dims[t], "boundary source dimension");
        assert_eq!(m.nrows(), self.dim(d - 1), "boundary target dimension");
        self.bounds[t] = m;
    }

    pub fn boundary(&self, d: i64) -> SparseMatrix {
        match self.index(d) {
            Some(t) => self.bounds[t].clone(),
            None => SparseMatrix::zeros(self.dim(d - 1), self.dim(d)),
        }
    }

    /// `∂∘∂ = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        self.degrees().all(|d| d == self.lo || self.boundary(d - 1).mul(&self.boundary(d)).is_zero())
    }

    pub fn total_rank(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Cancel unit pivots, preserving homology and cohomology.
    pub fn reduce(&self) -> ReducedComplex {
        Reduction::new(self).run()
    }

    pub fn homology(&self) -> BTreeMap<i64, AbGroup> {
        self.reduce().homology()
    }

    pub fn cohomology(&self) -> BTreeMap<i64, AbGroup> {
        self.reduce().cohomology()
    }

    /// Mod-2 homology dimensions by direct F₂ elimination on the unreduced complex.
    pub fn homology_mod2_direct(&self) -> BTreeMap<i64, usize> {
        let ranks: BTreeMap<i64, usize> =
            self.degrees().chain(std::iter::once(self.hi() + 1)).map(|d| (d, self.boundary(d).to_f2().rank())).collect();
        self.degrees().map(|d| (d, self.dim(d) - ranks[&d] - ranks[&(d + 1)])).collect()
    }
}

/// Result of unit-pivot cancellation: dense boundaries of the leftover cells.
#[derive(Clone, Debug)]
pub struct ReducedComplex {
    lo: i64,
    dims: Vec<usize>,
    bounds: Vec<IntMatrix>,
    pub cancelled: usize,
}

impl ReducedComplex {
    fn factors(&self) -> Vec<Vec<BigInt>> {
        self.bounds.iter().map(invariant_factors).collect()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn boundary(&self, d: i64) -> Option<&IntMatrix> {
        let t = d - self.lo;
        (t >= 0 && (t as usize) < self.bounds.len()).then(|| &self.bounds[t as usize])
    }

    fn groups(&self, cohomological: bool) -> BTreeMap<i64, AbGroup> {
        let f = self.factors();
        let n = self.dims.len();
        let rank = |t: usize| if t < n { f[t].len() } else { 0 };
        let mut out = BTreeMap::new();
        for t in 0..n {
            let free = self.dims[t] - rank(t) - rank(t + 1);
            let tors: Vec<BigInt> = if cohomological {
                f[t].clone()
            } else if t + 1 < n {
                f[t + 1].clone()
            } else {
                vec![]
            };
            out.insert(self.lo + t as i64, AbGroup::new(free, tors));
        }
        out
    }

    pub fn homology(&self) -> BTreeMap<i64, AbGroup> {
        self.groups(false)
    }

    pub fn cohomology(&self) -> BTreeMap<i64, AbGroup> {
        self.groups(true)
    }

    /// Mod-2 homology dimensions of the reduced complex (equal for cohomology).
    pub fn homology_mod2(&self) -> BTreeMap<i64, usize> {
        let n = self.dims.len();
        let ranks: Vec<usize> = self.bounds.iter().map(|m| dense_to_f2(m).rank()).collect();
        let rank = |t: usize| if t < n { ranks[t] } else { 0 };
        (0..n).map(|t| (self.lo + t as i64, self.dims[t] - rank(t) - rank(t + 1))).collect()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }
}

fn dense_to_f2(m: &IntMatrix) -> BitMatrix {
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut v = BitVec::zeros(m.cols());
        for j in 0..m.cols() {
            if m.get(i, j).bit(0) {
                v.set(j, true);
            }
        }
        rows.push(v);
    }
    BitMatrix::from_rows(m.cols(), rows)
}

struct LiveMatrix {
    cols: Vec<Option<Vec<(u32, i64)>>>,
    rows: Vec<HashSet<u32>>,
    row_alive: Vec<bool>,
}

impl LiveMatrix {
    fn new(m: &SparseMatrix) -> Self {
        let mut rows = vec![HashSet::new(); m.nrows()];
        for (j, c) in m.cols.iter().enumerate() {
            for &(r, _) in c {
                rows[r as usize].insert(j as u32);
            }
        }
        Self { cols: m.cols.iter().cloned().map(Some).collect(), rows, row_alive: vec![true; m.nrows()] }
    }

    fn entry(&self, c: u32, r: u32) -> i64 {
        let col = self.cols[c as usize].as_ref().expect("live column");
        col.binary_search_by_key(&r, |e| e.0).map(|i| col[i].1).unwrap_or(0)
    }

    fn remove_row(&mut self, r: u32) {
        for c in std::mem::take(&mut self.rows[r as usize]) {
            if let Some(col) = self.cols[c as usize].as_mut() {
                col.retain(|e| e.0 != r);
            }
        }
        self.row_alive[r as usize] = false;
    }

    fn remove_col(&mut self, c: u32) {
        if let Some(col) = self.cols[c as usize].take() {
            for (r, _) in col {
                self.rows[r as usize].remove(&c);
            }
        }
    }
}

/// `c − λ·a` on sorted sparse columns, `None` on overflow.
fn axpy(c: &[(u32, i64)], lambda: i64, a: &[(u32, i64)]) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(c.len() + a.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < a.len() {
        let take_c = j == a.len() || (i < c.len() && c[i].0 < a[j].0);
        let take_a = i == c.len() || (j < a.len() && a[j].0 < c[i].0);
        if take_c {
            out.push(c[i]);
            i += 1;
        } else if take_a {
            out.push((a[j].0, lambda.checked_mul(a[j].1)?.checked_neg()?));
            j += 1;
        } else {
            let v = c[i].1.checked_sub(lambda.checked_mul(a[j].1)?)?;
            if v != 0 {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

struct Reduction {
    lo: i64,
    mats: Vec<LiveMatrix>,
    dims: Vec<usize>,
    cancelled: usize,
}

impl Reduction {
    fn new(c: &ChainComplex) -> Self {
        Self { lo: c.lo, mats: c.bounds.iter().map(LiveMatrix::new).collect(), dims: c.dims.clone(), cancelled: 0 }
    }

    /// Cancel column `a` of boundary `t` against row `b`.
    fn eliminate(&mut self, t: usize, a: u32, b: u32) -> bool {
        let m = &self.mats[t];
        let col_a = m.cols[a as usize].clone().expect("live pivot column");
        let eps = m.entry(a, b);
        debug_assert!(eps == 1 || eps == -1);
        let others: Vec<u32> = m.rows[b as usize].iter().copied().filter(|&c| c != a).collect();
        let mut updates = Vec::with_capacity(others.len());
        for &c in &others {
            let lambda = m.entry(c, b) * eps;
            let old = m.cols[c as usize].as_ref().expect("live column");
            match axpy(old, lambda, &col_a) {
                Some(new) => updates.push((c, new)),
                None => return false,
            }
        }
        let m = &mut self.mats[t];
        for (c, new) in updates {
            let old = m.cols[c as usize].take().expect("live column");
            for &(r, _) in &old {
                m.rows[r as usize].remove(&c);
            }
            for &(r, _) in &new {
                m.rows[r as usize].insert(c);
            }
            m.cols[c as usize] = Some(new);
        }
        m.remove_col(a);
        m.remove_row(b);
        if t + 1 < self.mats.len() {
            self.mats[t + 1].remove_row(a);
        }
        if t > 0 {
            self.mats[t - 1].remove_col(b);
        }
        self.cancelled += 1;
        true
    }

    fn run(mut self) -> ReducedComplex {
        for t in 0..self.mats.len() {
            let mut blocked: HashSet<u32> = HashSet::new();
            loop {
                let mut progress = false;
                for a in 0..self.mats[t].cols.len() as u32 {
                    if blocked.contains(&a) {
                        continue;
                    }
                    let Some(col) = self.mats[t].cols[a as usize].as_ref() else { continue };
                    let best = col
                        .iter()
                        .filter(|e| e.1 == 1 || e.1 == -1)
                        .min_by_key(|e| self.mats[t].rows[e.0 as usize].len())
                        .map(|e| e.0);
                    if let Some(b) = best {
                        if self.eliminate(t, a, b) {
                            progress = true;
                        } else {
                            blocked.insert(a);
                        }
                    }
                }
                if !progress {
                    break;
                }
            }
        }
        self.collect()
    }

    fn collect(self) -> ReducedComplex {
        let n = self.mats.len();
        // a cell of degree t survives if its column in boundary t and its row in boundary t+1 survive
        let alive: Vec<Vec<usize>> = (0..n)
            .map(|t| {
                (0..self.dims[t])
                    .filter(|&i| {
                        self.mats[t].cols[i].is_some() && (t + 1 >= n || self.mats[t + 1].row_alive[i])
                    })
                    .collect()
            })
            .collect();
        let mut bounds = Vec::with_capacity(n);
        for t in 0..n {
            let rows: &[usize] = if t == 0 { &[] } else { &alive[t - 1] };
            let mut pos = vec![usize::MAX; if t == 0 { 0 } else { self.dims[t - 1] }];
            for (k, &r) in rows.iter().enumerate() {
                pos[r] = k;
            }
            let mut m = IntMatrix::zeros(rows.len(), alive[t].len());
            for (j, &c) in alive[t].iter().enumerate() {
                for &(r, v) in self.mats[t].cols[c].as_ref().expect("live column") {
                    let p = pos[r as usize];
                    debug_assert!(p != usize::MAX, "entry in a cancelled row");
                    m.set(p, j, BigInt::from(v));
                }
            }
            bounds.push(m);
        }
        let dims = alive.iter().map(Vec::len).collect();
        ReducedComplex { lo: self.lo, dims, bounds, cancelled: self.cancelled }
    }
}

/// Homology of a single dense complex given as consecutive boundary
/// matrices, useful for small hand-written complexes.
pub fn homology_of_dense(lo: i64, dims: &[usize], bounds: &[IntMatrix]) -> BTreeMap<i64, AbGroup> {
    let rc = ReducedComplex { lo, dims: dims.to_vec(), bounds: bounds.to_vec(), cancelled: 0 };
    rc.homology()
}

/// `|coker|` of a square nonsingular matrix via invariant factors.
pub fn cokernel_order(m: &IntMatrix) -> Option<BigInt> {
    let f = invariant_factors(m);
    (f.len() == m.rows() && m.rows() == m.cols()).then(|| f.iter().fold(BigInt::one(), |a, b| a * b))
}
