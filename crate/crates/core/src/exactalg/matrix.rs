use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abgroup::AbGroup;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match dimensions");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        Self::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Submatrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(rows.len(), cols.len(), data)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// row_i += c·row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = &self.data[j * self.cols + k] * c;
            if !v.is_zero() {
                self.data[i * self.cols + k] += v;
            }
        }
    }

    /// col_i += c·col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + j] * c;
            if !v.is_zero() {
                self.data[r * self.cols + i] += v;
            }
        }
    }

    fn neg_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = &mut self.data[i * self.cols + k];
            *v = -std::mem::take(v);
        }
    }

    fn neg_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = &mut self.data[r * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith normal form `U·A·V = diag(d₁, …, d_r, 0, …)` with `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub factors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn kernel_rank(&self) -> usize {
        self.cols - self.rank()
    }

    /// `Z^rows / im A`.
    pub fn cokernel(&self) -> AbGroup {
        AbGroup::new(self.rows - self.rank(), self.factors.iter().cloned())
    }

    pub fn diagonal(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, f) in self.factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

struct Tracker {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

struct Reducer {
    a: IntMatrix,
    t: Option<Tracker>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.t {
            t.u.swap_rows(i, j);
            t.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.t {
            t.v.swap_cols(i, j);
            t.v_inv.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_row(i, j, c);
        if let Some(t) = &mut self.t {
            t.u.add_row(i, j, c);
            t.u_inv.add_col(j, i, &-c);
        }
    }

    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_col(i, j, c);
        if let Some(t) = &mut self.t {
            t.v.add_col(i, j, c);
            t.v_inv.add_row(j, i, &-c);
        }
    }

    fn neg_row(&mut self, i: usize) {
        self.a.neg_row(i);
        if let Some(t) = &mut self.t {
            t.u.neg_row(i);
            t.u_inv.neg_col(i);
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().map_or(true, |b| ax < b.2) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        let b = best.unwrap();
                        return Some((b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn run(&mut self) -> Vec<BigInt> {
        let (m, n) = (self.a.rows, self.a.cols);
        let mut factors = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                    self.add_row(i, t, &-q);
                    if !self.a.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                    self.add_col(j, t, &-q);
                    if !self.a.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    let (pi, pj) = self.pivot_in_cross(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                let p = self.a.get(t, t).clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.a.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.neg_row(t);
            }
            factors.push(self.a.get(t, t).clone());
            t += 1;
        }
        factors
    }

    /// Smallest nonzero entry in row `t` or column `t`.
    fn pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t, self.a.get(t, t).abs());
        for i in t + 1..self.a.rows {
            let x = self.a.get(i, t);
            if !x.is_zero() && x.abs() < best.2 {
                best = (i, t, x.abs());
            }
        }
        for j in t + 1..self.a.cols {
            let x = self.a.get(t, j);
            if !x.is_zero() && x.abs() < best.2 {
                best = (t, j, x.abs());
            }
        }
        (best.0, best.1)
    }
}

/// Smith normal form with unimodular transforms and their inverses.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut r = Reducer {
        a: a.clone(),
        t: Some(Tracker {
            u: IntMatrix::identity(m),
            u_inv: IntMatrix::identity(m),
            v: IntMatrix::identity(n),
            v_inv: IntMatrix::identity(n),
        }),
    };
    let factors = r.run();
    let t = r.t.expect("tracker present");
    SnfResult { factors, rows: m, cols: n, u: t.u, v: t.v, u_inv: t.u_inv, v_inv: t.v_inv }
}

/// Nonzero invariant factors only, without transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    Reducer { a: a.clone(), t: None }.run()
}

/// `ker P / im Q` for integer matrices with `P·Q = 0`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Kernel basis as columns.
    kernel: IntMatrix,
    kernel_offset: usize,
    p_v_inv: IntMatrix,
    image_snf: SnfResult,
}

impl Subquotient {
    pub fn new(p: &IntMatrix, q: &IntMatrix) -> Self {
        assert_eq!(p.cols, q.rows, "maps are not composable");
        assert!(p.mul(q).is_zero(), "composite of the two maps is nonzero");
        let sp = snf(p);
        let r = sp.rank();
        let n = p.cols;
        let kcols: Vec<usize> = (r..n).collect();
        let all_rows: Vec<usize> = (0..n).collect();
        let kernel = sp.v.select(&all_rows, &kcols);
        let coords = sp.v_inv.mul(q);
        let lower = coords.select(&kcols, &(0..q.cols).collect::<Vec<_>>());
        let image_snf = snf(&lower);
        Self { kernel, kernel_offset: r, p_v_inv: sp.v_inv, image_snf }
    }

    pub fn group(&self) -> AbGroup {
        self.image_snf.cokernel()
    }

    pub fn kernel_basis(&self) -> &IntMatrix {
        &self.kernel
    }

    fn reduced_coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let full = self.p_v_inv.mul_vec(x);
        if full[..self.kernel_offset].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(self.image_snf.u.mul_vec(&full[self.kernel_offset..]))
    }

    /// Order of the class of `x`; `Some(1)` for the zero class, `None` for
    /// infinite order. Panics if `x` is not in the kernel.
    pub fn class_order(&self, x: &[BigInt]) -> Option<BigInt> {
        let z = self.reduced_coords(x).expect("element is not in the kernel");
        let r = self.image_snf.rank();
        if z[r..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut order = BigInt::one();
        for (zi, d) in z.iter().zip(self.image_snf.factors.iter()) {
            let o = d / d.gcd(zi);
            order = order.lcm(&o);
        }
        Some(order)
    }

    pub fn in_kernel(&self, x: &[BigInt]) -> bool {
        self.reduced_coords(x).is_some()
    }

    pub fn is_zero_class(&self, x: &[BigInt]) -> bool {
        self.class_order(x).is_some_and(|o| o.is_one())
    }

    /// Representatives of the cyclic summands, paired with their orders
    /// (`None` for free summands).
    pub fn generators(&self) -> Vec<(Vec<BigInt>, Option<BigInt>)> {
        let gens = self.kernel.mul(&self.image_snf.u_inv);
        let r = self.image_snf.rank();
        let mut out = Vec::new();
        for j in 0..gens.cols() {
            let order = if j < r { Some(self.image_snf.factors[j].clone()) } else { None };
            if order.as_ref().is_some_and(One::is_one) {
                continue;
            }
            out.push((gens.column(j), order));
        }
        out
    }
}
