use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::region::f_monomials;
use crate::error::{Error, Result};
use crate::exactalg::f2::{complement, BitMatrix, BitVec};
use crate::exactalg::{Mono, Var};

/// Dimensions and differential ranks of one page, indexed by stem.
#[derive(Clone, Debug, Serialize)]
pub struct PageStats {
    pub k: u32,
    pub r: u64,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvertedRun {
    pub g: u64,
    pub bound: usize,
    pub pages: Vec<PageStats>,
    /// `E∞` basis per stem, as `a`-free monomials at their natural filtration.
    pub e_infinity: Vec<Vec<String>>,
    pub closed_form_ranks: Vec<u64>,
}

impl InvertedRun {
    pub fn e_infinity_ranks(&self) -> Vec<usize> {
        self.e_infinity.iter().map(Vec::len).collect()
    }

    /// `(s, t − s, monomials)` rows of the `E∞` chart.
    pub fn chart_rows(&self) -> Vec<(i64, usize, Vec<String>)> {
        let mut rows = Vec::new();
        for (stem, basis) in self.e_infinity.iter().enumerate() {
            let mut by_s: BTreeMap<i64, Vec<String>> = BTreeMap::new();
            for m in basis {
                by_s.entry(natural_s(self.g, m)).or_default().push(m.clone());
            }
            rows.extend(by_s.into_iter().map(|(s, v)| (s, stem, v)));
        }
        rows
    }
}

fn natural_s(g: u64, name: &str) -> i64 {
    // names are products of f_i, so the weight is recovered from the stem
    let w: i64 = name
        .split('·')
        .filter(|p| *p != "1")
        .map(|p| {
            let (i, e) = p.trim_start_matches('f').split_once('^').unwrap_or((p.trim_start_matches('f'), "1"));
            i.parse::<i64>().unwrap() * e.parse::<i64>().unwrap()
        })
        .sum();
    (g as i64 - 1) * w
}

fn is_mersenne(i: u32) -> bool {
    (i + 1).is_power_of_two()
}

/// `dim_{F₂}` of `MO_n = F₂[f_i : i ≠ 2ʲ − 1]` for `n ≤ bound`.
pub fn mo_poincare_series(bound: usize) -> Vec<u64> {
    let mut c = vec![0u64; bound + 1];
    c[0] = 1;
    for i in (1..=bound).filter(|&i| !is_mersenne(i as u32)) {
        for n in i..=bound {
            c[n] += c[n - i];
        }
    }
    c
}

struct Stem {
    monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
    /// Boundaries, kept in reduced echelon form (a monomial span in practice).
    b: Vec<BitVec>,
    b_pivots: Vec<usize>,
    z: Vec<BitVec>,
}

impl Stem {
    fn new(n: usize) -> Self {
        let mut monos = Vec::new();
        for q in 0..=n / 2 {
            for f in f_monomials((n - 2 * q) as u64, &|_| true) {
                monos.push(if q == 0 { f } else { f.mul(&Mono::from_pairs([(Var::U, q as i32)])) });
            }
        }
        monos.sort();
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let z = (0..monos.len()).map(|i| BitVec::unit(monos.len(), i)).collect();
        Stem { monos, index, b: Vec::new(), b_pivots: Vec::new(), z }
    }

    fn len(&self) -> usize {
        self.monos.len()
    }

    fn reduce(&self, v: &BitVec) -> BitVec {
        let mut w = v.clone();
        for (row, &p) in self.b.iter().zip(&self.b_pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w
    }

    fn in_b(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    fn add_boundaries(&mut self, extra: &[BitVec]) {
        let rows: Vec<BitVec> = self.b.iter().chain(extra).cloned().collect();
        let mut m = BitMatrix::from_rows(self.len(), rows);
        let pivots = m.rref();
        self.b = (0..pivots.len()).map(|i| m.row(i).clone()).collect();
        self.b_pivots = pivots;
    }

    /// Page representatives: cycles modulo boundaries, reduced against `B`.
    fn reps(&self) -> Vec<BitVec> {
        complement(&self.b, &self.z).iter().map(|v| self.reduce(v)).collect()
    }

    fn page_dim(&self) -> usize {
        self.z.len() - self.b.len()
    }
}

/// `d_r` on an `E₂` vector of stem `n`, landing in stem `n − 1`.
fn apply_d(g: u64, k: u32, src: &Stem, dst: &Stem, v: &BitVec) -> Result<BitVec> {
    let h = 1i32 << (k - 1);
    let fk = Var::F((1u32 << k) - 1);
    let r = 1 + ((1i64 << k) - 1) * g as i64;
    let mut out = BitVec::zeros(dst.len());
    for i in v.ones() {
        let m = &src.monos[i];
        let q = m.exponent(Var::U);
        if q % h != 0 {
            return Err(Error::ChartMismatch(format!("{m} survives to page {k} but is not a power of u^{h}")));
        }
        if (q / h) % 2 == 0 {
            continue;
        }
        let target = m.div(&Mono::from_pairs([(Var::U, h)])).expect("u-power present").mul(&Mono::var(fk));
        let (s0, t0) = m.bidegree(g as i64);
        let (s1, t1) = target.mul(&Mono::from_pairs([(Var::A, 2 * h)])).bidegree(g as i64);
        if (s1, t1) != (s0 + r, t0 - 1) {
            return Err(Error::ChartMismatch(format!("d_{r} on {m} has the wrong bidegree")));
        }
        out.flip(dst.index[&target]);
    }
    Ok(out)
}

/// Run the `a`-inverted slice spectral sequence of `MU^{((G))}` through stem `bound`.
///
/// Stems are normalised to a fixed `a`-exponent, so each stem is a finite
/// F₂-space on monomials `u^q Π f_i^{e_i}`. Page `k` applies
/// `d_r(u^{2^{k−1}}) = a^{2^k} f_{2^k−1}`, `r = 1 + (2^k − 1)g`, extended as a derivation.
pub fn inverted_ss_run(g: u64, bound: usize) -> Result<InvertedRun> {
    if g < 2 || !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    let page_count = (1..).take_while(|&k| (1usize << k) <= bound + 1).count();
    // each page leaves the topmost trusted stem without its incoming differential
    let top = bound + page_count;
    let mut stems: Vec<Stem> = (0..=top).map(Stem::new).collect();
    let mut pages = Vec::new();
    for k in 1..=page_count as u32 {
        let trusted = top + 1 - k as usize;
        let r = 1 + ((1u64 << k) - 1) * g;
        let dims: Vec<usize> = stems.iter().map(Stem::page_dim).collect();
        let reps: Vec<Vec<BitVec>> = stems.iter().map(Stem::reps).collect();
        let mut ranks = vec![0usize; top + 1];
        let mut new_b: Vec<Vec<BitVec>> = vec![Vec::new(); top + 1];
        let mut new_z: Vec<Vec<BitVec>> = vec![Vec::new(); top + 1];
        for n in 0..=top {
            if n > trusted {
                new_z[n] = stems[n].z.clone();
                continue;
            }
            if n == 0 {
                new_z[0] = stems[0].b.iter().chain(&reps[0]).cloned().collect();
                continue;
            }
            let (lo, hi) = stems.split_at(n);
            let (src, dst) = (&hi[0], &lo[n - 1]);
            let images: Vec<BitVec> = reps[n].iter().map(|v| apply_d(g, k, src, dst, v)).collect::<Result<_>>()?;
            if n >= 2 {
                for im in &images {
                    let dd = apply_d(g, k, dst, &lo[n - 2], im)?;
                    if !lo[n - 2].in_b(&dd) {
                        return Err(Error::ChartMismatch(format!("d∘d ≠ 0 on page {k}, stem {n}")));
                    }
                }
            }
            // columns: images of reps, then the old boundaries of the target
            let cols: Vec<BitVec> = images.iter().chain(&dst.b).cloned().collect();
            let kernel = BitMatrix::from_columns(dst.len(), &cols).kernel();
            let mut cycles: Vec<BitVec> = src.b.clone();
            for c in kernel {
                let mut v = BitVec::zeros(src.len());
                for i in c.ones().filter(|&i| i < reps[n].len()) {
                    v.xor_assign(&reps[n][i]);
                }
                if !v.is_zero() {
                    cycles.push(v);
                }
            }
            new_z[n] = cycles;
            let fresh = complement(&dst.b, &images);
            ranks[n] = fresh.len();
            new_b[n - 1] = fresh;
        }
        for (n, st) in stems.iter_mut().enumerate() {
            st.add_boundaries(&new_b[n]);
            st.z = std::mem::take(&mut new_z[n]);
        }
        for n in 0..trusted {
            let expected = dims[n] - ranks[n] - ranks[n + 1];
            if stems[n].page_dim() != expected {
                return Err(Error::ChartMismatch(format!("Euler count fails on page {k}, stem {n}")));
            }
        }
        pages.push(PageStats { k, r, dims: dims[..=bound].to_vec(), ranks: ranks[..=bound].to_vec() });
    }
    let closed = mo_poincare_series(bound);
    let mut e_infinity = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let st = &stems[n];
        let expected = f_monomials(n as u64, &|i| !is_mersenne(i));
        if st.page_dim() != expected.len() || expected.len() as u64 != closed[n] {
            return Err(Error::ChartMismatch(format!("E∞ rank {} in stem {n}, expected {}", st.page_dim(), closed[n])));
        }
        let mut span: Vec<BitVec> = st.b.clone();
        for m in &expected {
            span.push(BitVec::unit(st.len(), st.index[m]));
        }
        let z_rank = BitMatrix::from_rows(st.len(), st.z.clone()).rank();
        let joint: Vec<BitVec> = span.iter().chain(&st.z).cloned().collect();
        if BitMatrix::from_rows(st.len(), span.clone()).rank() != z_rank
            || BitMatrix::from_rows(st.len(), joint).rank() != z_rank
        {
            return Err(Error::ChartMismatch(format!("E∞ in stem {n} is not spanned by MO monomials")));
        }
        e_infinity.push(expected.iter().map(ToString::to_string).collect());
    }
    Ok(InvertedRun { g, bound, pages, e_infinity, closed_form_ranks: closed })
}
