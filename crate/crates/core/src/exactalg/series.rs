#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

use super::ring::Ring;

/// Power series truncated above degree `prec`; `coeffs[n]` is the
/// coefficient of `xⁿ` for `0 ≤ n ≤ prec`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R: Ring> {
    prec: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(prec: usize) -> Self {
        Self { prec, coeffs: vec![R::zero(); prec + 1] }
    }

    /// The series `x`.
    pub fn x(prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if prec >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    /// Coefficients from degree 0 upward; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(prec: usize, coeffs: Vec<R>) -> Self {
        let mut s = Self::zero(prec);
        for (n, c) in coeffs.into_iter().enumerate().take(prec + 1) {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn monomial(prec: usize, c: R, n: usize) -> Self {
        let mut s = Self::zero(prec);
        if n <= prec {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, prec: usize) -> Self {
        let prec = prec.min(self.prec);
        Self { prec, coeffs: self.coeffs[..=prec].to_vec() }
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let coeffs = (0..=prec).map(|n| self.coeffs[n].plus(&o.coeffs[n])).collect();
        Self { prec, coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let coeffs = (0..=prec).map(|n| self.coeffs[n].minus(&o.coeffs[n])).collect();
        Self { prec, coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { prec: self.prec, coeffs: self.coeffs.iter().map(Ring::negate).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { prec: self.prec, coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let mut coeffs = vec![R::zero(); prec + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(prec + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Self { prec, coeffs }
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let prec = self.prec.min(inner.prec);
        let inner = inner.truncate(prec);
        let mut out = Self::monomial(prec, self.coeffs[0].clone(), 0);
        let last = (1..=prec).rev().find(|&k| !self.coeffs[k].is_zero());
        let Some(last) = last else { return Ok(out) };
        let mut pow = inner.clone();
        for k in 1..=last {
            if k > 1 {
                pow = pow.mul_from(&inner, k);
            }
            let c = &self.coeffs[k];
            if !c.is_zero() {
                for n in k..=prec {
                    let t = &pow.coeffs[n];
                    if !t.is_zero() {
                        out.coeffs[n] = out.coeffs[n].plus(&c.times(t));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product where both factors are known to vanish below degrees summing to `low`.
    fn mul_from(&self, o: &Self, low: usize) -> Self {
        let prec = self.prec.min(o.prec);
        let mut coeffs = vec![R::zero(); prec + 1];
        let a0 = self.order().unwrap_or(prec + 1);
        let b0 = o.order().unwrap_or(prec + 1);
        for n in low.max(a0 + b0)..=prec {
            let mut acc = R::zero();
            for i in a0..=n - b0 {
                let a = &self.coeffs[i];
                let b = &o.coeffs[n - i];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
            coeffs[n] = acc;
        }
        Self { prec, coeffs }
    }

    /// Compositional inverse `g` with `self ∘ g = x`, by the power-table
    /// recursion `P[k][n] = Σᵢ gᵢ P[k−1][n−i]`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let n_max = self.prec;
        if n_max == 0 {
            return Ok(Self::zero(0));
        }
        let inv = self.coeffs[1].inverse().ok_or(Error::NonUnitLinear)?;
        let mut g = Self::zero(n_max);
        // p[k][n] = coefficient of xⁿ in g^k
        let mut p: Vec<Vec<R>> = vec![vec![R::zero(); n_max + 1]; n_max + 1];
        for n in 1..=n_max {
            for k in 2..=n {
                let mut acc = R::zero();
                for i in 1..=n + 1 - k {
                    let a = &g.coeffs[i];
                    let b = &p[k - 1][n - i];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                p[k][n] = acc;
            }
            let mut rhs = if n == 1 { R::one() } else { R::zero() };
            for k in 2..=n {
                let f = &self.coeffs[k];
                if !f.is_zero() && !p[k][n].is_zero() {
                    rhs = rhs.minus(&f.times(&p[k][n]));
                }
            }
            let gn = rhs.times(&inv);
            p[1][n] = gn.clone();
            g.coeffs[n] = gn;
        }
        Ok(g)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { prec: self.prec, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

/// Two-variable series truncated above total degree `prec`;
/// `coeffs[i][j]` is the coefficient of `xⁱyʲ` with `i + j ≤ prec`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiSeries<R: Ring> {
    prec: usize,
    coeffs: Vec<Vec<R>>,
}

impl<R: Ring> BiSeries<R> {
    pub fn zero(prec: usize) -> Self {
        Self { prec, coeffs: (0..=prec).map(|i| vec![R::zero(); prec + 1 - i]).collect() }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, i: usize, j: usize) -> &R {
        &self.coeffs[i][j]
    }

    /// `f(x) + f(y)`.
    pub fn sum_of(f: &TruncSeries<R>) -> Self {
        let mut s = Self::zero(f.prec());
        for n in 1..=f.prec() {
            s.coeffs[n][0] = f.coeff(n).clone();
            s.coeffs[0][n] = s.coeffs[0][n].plus(f.coeff(n));
        }
        s.coeffs[0][0] = f.coeff(0).plus(f.coeff(0));
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = Self::zero(self.prec.min(o.prec));
        for i in 0..=s.prec {
            for j in 0..=s.prec - i {
                s.coeffs[i][j] = self.coeffs[i][j].plus(&o.coeffs[i][j]);
            }
        }
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let mut s = Self::zero(prec);
        for i1 in 0..=prec {
            for j1 in 0..=prec - i1 {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=prec - i1 - j1 {
                    for j2 in 0..=prec - i1 - j1 - i2 {
                        let b = &o.coeffs[i2][j2];
                        if !b.is_zero() {
                            let t = &mut s.coeffs[i1 + i2][j1 + j2];
                            *t = t.plus(&a.times(b));
                        }
                    }
                }
            }
        }
        s
    }

    /// `outer(self)` for a one-variable `outer`; `self` must have zero constant term.
    pub fn compose_into(outer: &TruncSeries<R>, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0][0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let prec = outer.prec().min(inner.prec);
        let mut out = Self::zero(prec);
        out.coeffs[0][0] = outer.coeff(0).clone();
        let mut pow = inner.clone();
        for k in 1..=prec {
            if k > 1 {
                pow = pow.mul(inner);
            }
            let c = outer.coeff(k);
            if c.is_zero() {
                continue;
            }
            for i in 0..=prec {
                for j in 0..=prec - i {
                    let t = &pow.coeffs[i][j];
                    if !t.is_zero() {
                        out.coeffs[i][j] = out.coeffs[i][j].plus(&c.times(t));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `F(a(t), b(t))` for one-variable series without constant terms.
    pub fn eval(&self, a: &TruncSeries<R>, b: &TruncSeries<R>) -> Result<TruncSeries<R>> {
        if !a.coeff(0).is_zero() || !b.coeff(0).is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let prec = self.prec.min(a.prec()).min(b.prec());
        let mut apow = vec![TruncSeries::monomial(prec, R::one(), 0)];
        let mut bpow = vec![TruncSeries::monomial(prec, R::one(), 0)];
        for k in 1..=prec {
            apow.push(apow[k - 1].mul(&a.truncate(prec)));
            bpow.push(bpow[k - 1].mul(&b.truncate(prec)));
        }
        let mut out = TruncSeries::zero(prec);
        for i in 0..=prec {
            for j in 0..=prec - i {
                let c = &self.coeffs[i][j];
                if !c.is_zero() {
                    out = out.add(&apow[i].mul(&bpow[j]).scale(c));
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.prec).all(|i| (0..=self.prec - i).all(|j| self.coeffs[i][j] == self.coeffs[j][i]))
    }
}
