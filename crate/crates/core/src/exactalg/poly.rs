use std::collections::BTreeMap;
use std::fmt;

use super::ring::Ring;

/// Polynomial generators. Degrees: `M{k,_}`, `R{i,_}`, `Alpha(n)` and `F(i)`
/// have degree equal to their index, `U` degree 2, `A` degree 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// `γʲ m̄_k`
    M { k: u32, j: u32 },
    /// `γʲ r_i`
    R { i: u32, j: u32 },
    Alpha(u32),
    F(u32),
    U,
    A,
}

impl Var {
    pub fn degree(self) -> i64 {
        match self {
            Var::M { k, .. } => k as i64,
            Var::R { i, .. } => i as i64,
            Var::Alpha(n) | Var::F(n) => n as i64,
            Var::U => 2,
            Var::A => 0,
        }
    }

    /// Chart position `(s, t − s)` for the group of order `g`.
    pub fn bidegree(self, g: i64) -> (i64, i64) {
        match self {
            Var::A => (1, 0),
            Var::U => (0, 2),
            Var::F(i) => (i as i64 * (g - 1), i as i64),
            v => (0, v.degree()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::M { k, j: 0 } => write!(f, "m{k}"),
            Var::M { k, j: 1 } => write!(f, "γm{k}"),
            Var::M { k, j } => write!(f, "γ^{j}m{k}"),
            Var::R { i, j: 0 } => write!(f, "r{i}"),
            Var::R { i, j: 1 } => write!(f, "γr{i}"),
            Var::R { i, j } => write!(f, "γ^{j}r{i}"),
            Var::Alpha(n) => write!(f, "α{n}"),
            Var::F(i) => write!(f, "f{i}"),
            Var::U => f.write_str("u"),
            Var::A => f.write_str("a"),
        }
    }
}

/// Monomial as sorted `(variable, exponent)` pairs with nonzero exponents.
/// Only `A` is meant to carry negative exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(Vec<(Var, i32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut m = Mono::one();
        for (v, e) in pairs {
            m = m.mul(&Mono(vec![(v, e)]));
        }
        m
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let (a, b) = (&self.0, &o.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    /// Divide by `o`, if all resulting non-`A` exponents stay nonnegative.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let inv = Mono(o.0.iter().map(|&(v, e)| (v, -e)).collect());
        let q = self.mul(&inv);
        q.0.iter().all(|&(v, e)| e > 0 || v == Var::A).then_some(q)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(v, e)| v.degree() * e as i64).sum()
    }

    pub fn bidegree(&self, g: i64) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(s, t), &(v, e)| {
            let (vs, vt) = v.bidegree(g);
            (s + vs * e as i64, t + vt * e as i64)
        })
    }

    /// Exactly one generator to the first power.
    pub fn as_generator(&self) -> Option<Var> {
        match self.0.as_slice() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// Polynomial with coefficients in `C`, no zero coefficients stored.
#[derive(Clone, PartialEq, Debug)]
pub struct SparsePoly<C: Ring> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Ring> Default for SparsePoly<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Ring> SparsePoly<C> {
    pub fn constant(c: C) -> Self {
        Self::term(c, Mono::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Mono::var(v))
    }

    pub fn term(c: C, m: Mono) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Common degree of all terms, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Mono::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Terms that are a single generator to the first power: the image in
    /// the indecomposables.
    pub fn indecomposable_part(&self) -> SparsePoly<C> {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            if m.as_generator().is_some() {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        let mut out = SparsePoly::<D>::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Replace every generator `v` by `sub(v)`.
    pub fn substitute(&self, sub: impl Fn(Var) -> SparsePoly<C>) -> SparsePoly<C> {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                assert!(e >= 0, "cannot substitute into a negative power");
                t = t.times(&Ring::pow(&sub(v), e as u64));
            }
            out = out.plus(&t);
        }
        out
    }
}

impl<C: Ring> Ring for SparsePoly<C> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = Self::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.times(c2));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.is_one() => c.inverse().map(Self::constant),
            _ => None,
        }
    }
}

impl<C: Ring + fmt::Display> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else if c.is_one() {
                    m.to_string()
                } else if *c == C::one().negate() {
                    format!("-{m}")
                } else {
                    format!("{c}·{m}")
                }
            })
            .collect();
        for (i, p) in parts.iter().enumerate() {
            match (i, p.strip_prefix('-')) {
                (0, _) => f.write_str(p)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {p}")?,
            }
        }
        Ok(())
    }
}
