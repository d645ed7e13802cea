use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{BiSeries, CyclotomicFrac, CyclotomicInt, GradedElem, GradedFrac, Ring, TruncSeries};

/// Group law `exp(log x + log y)` for a logarithm with invertible linear term.
pub fn fgl_from_log<R: Ring>(log: &TruncSeries<R>, prec: usize) -> Result<BiSeries<R>> {
    let log = log.truncate(prec);
    if log.coeff(1).inverse().is_none() {
        return Err(Error::NonUnitLinear);
    }
    let exp = log.revert()?;
    BiSeries::compose_into(&exp, &BiSeries::sum_of(&log))
}

pub(crate) fn pi_inv_pow(k: u32) -> CyclotomicFrac {
    Ring::pow(&CyclotomicFrac::pi_inverse(), k as u64)
}

fn zeta(j: i64) -> CyclotomicFrac {
    CyclotomicInt::zeta_pow(j).into()
}

/// The formal `A`-module over `A[w^{±1}]` with `log x = x + Σ w^{2^k−1} x^{2^k}/π^k`.
///
/// Every series here is homogeneous, so the coefficient of `xⁿ` carries an
/// implicit `w^{n−1}` and is stored as an element of `Frac(A)`.
#[derive(Clone, Debug)]
pub struct FormalAModule {
    prec: usize,
    log: TruncSeries<CyclotomicFrac>,
    exp: TruncSeries<CyclotomicFrac>,
}

impl FormalAModule {
    pub fn new(prec: usize) -> Result<Self> {
        let mut log = TruncSeries::x(prec);
        let mut k = 1;
        while (1usize << k) <= prec {
            log.set_coeff(1 << k, pi_inv_pow(k));
            k += 1;
        }
        let exp = log.revert()?;
        Ok(Self { prec, log, exp })
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn log(&self) -> &TruncSeries<CyclotomicFrac> {
        &self.log
    }

    pub fn exp(&self) -> &TruncSeries<CyclotomicFrac> {
        &self.exp
    }

    /// `[a](x) = exp(a·log x)`.
    pub fn scalar_series(&self, a: &CyclotomicFrac) -> Result<TruncSeries<CyclotomicFrac>> {
        self.exp.compose(&self.log.scale(a))
    }

    pub fn zeta_series(&self, j: i64) -> Result<TruncSeries<CyclotomicFrac>> {
        self.scalar_series(&zeta(j))
    }

    pub fn group_law(&self) -> Result<BiSeries<CyclotomicFrac>> {
        fgl_from_log(&self.log, self.prec)
    }

    /// `a +_F b` on one-variable series, through the logarithm.
    pub fn formal_add(&self, a: &TruncSeries<CyclotomicFrac>, b: &TruncSeries<CyclotomicFrac>) -> Result<TruncSeries<CyclotomicFrac>> {
        let la = self.log.compose(a)?;
        let lb = self.log.compose(b)?;
        self.exp.compose(&la.add(&lb))
    }

    /// `t_n(ζʲ)` for all `n` with `2ⁿ ≤ prec`, by peeling leading terms off
    /// `[ζ](x) −_F Σ^F t_i(ζx)^{2^i}`. Entries carry weight `w^{2^n−1}`.
    pub fn t_series_route(&self, j: i64) -> Result<Vec<GradedElem>> {
        let z = zeta(j);
        let mut rest = self.log.scale(&z);
        let mut out = Vec::new();
        let mut n = 0u32;
        while (1usize << n) <= self.prec {
            let d = 1usize << n;
            let residual = self.exp.compose(&rest)?;
            if let Some(o) = residual.order() {
                if o < d {
                    return Err(Error::OutOfRange(format!("residual starts in degree {o} before 2^{n}")));
                }
            }
            let zd = Ring::pow(&z, d as u64);
            let tn = residual.coeff(d).times(&zd.inverse().expect("root of unity"));
            let t = GradedFrac::new(tn.clone(), d as i64 - 1).to_integral(d)?;
            // subtract log(t_n (ζx)^{2^n}) = Σ_k ℓ_k (t_n ζ^{2^n})^{2^k} x^{2^{n+k}}
            if !tn.is_zero() {
                let lead = tn.times(&zd);
                let mut k = 0u32;
                while (d << k) <= self.prec {
                    let c = Ring::pow(&lead, 1 << k).times(&pi_inv_pow(k));
                    let idx = d << k;
                    let cur = rest.coeff(idx).clone();
                    rest.set_coeff(idx, cur.minus(&c));
                    k += 1;
                }
            }
            out.push(t);
            n += 1;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TEntry {
    /// Exponent `j` of the root `ζʲ`.
    pub root: u32,
    pub n: u32,
    pub value: GradedElem,
}

#[derive(Clone, Debug, Serialize)]
pub struct TTable {
    pub n_max: u32,
    pub entries: Vec<TEntry>,
}

impl TTable {
    pub fn get(&self, root: u32, n: u32) -> Option<&GradedElem> {
        self.entries.iter().find(|e| e.root == root % 8 && e.n == n).map(|e| &e.value)
    }
}

/// `t_n(ζ) = ζ^{1−2ⁿ}/πⁿ − Σ_{1≤i≤n} π^{−i} t_{n−i}(ζ)^{2^i}` for one root.
pub fn t_recursion(j: i64, n_max: u32) -> Result<Vec<GradedElem>> {
    let mut t: Vec<CyclotomicFrac> = vec![CyclotomicFrac::one()];
    let mut out = vec![GradedElem::new(CyclotomicInt::from_int(1), 0)];
    for n in 1..=n_max {
        let mut v = zeta(j * (1 - (1i64 << n))).times(&pi_inv_pow(n));
        for i in 1..=n {
            let term = Ring::pow(&t[(n - i) as usize], 1 << i).times(&pi_inv_pow(i));
            v = v.minus(&term);
        }
        out.push(GradedFrac::new(v.clone(), (1i64 << n) - 1).to_integral(1 << n)?);
        t.push(v);
    }
    Ok(out)
}

/// Table of `t_n(ζʲ)` for all eight roots and `n ≤ n_max`. The recursion is
/// authoritative; every entry reachable at `precision` is re-derived from the series.
pub fn t_functions(n_max: u32, precision: usize) -> Result<TTable> {
    let module = FormalAModule::new(precision)?;
    let mut entries = Vec::new();
    for root in 0..8u32 {
        let rec = t_recursion(root as i64, n_max)?;
        let ser = module.t_series_route(root as i64)?;
        for (n, (a, b)) in rec.iter().zip(ser.iter()).enumerate() {
            if a != b {
                return Err(Error::OutOfRange(format!("t_{n}(ζ^{root}): recursion {a} vs series {b}")));
            }
        }
        entries.extend(rec.into_iter().enumerate().map(|(n, value)| TEntry { root, n: n as u32, value }));
    }
    Ok(TTable { n_max, entries })
}
