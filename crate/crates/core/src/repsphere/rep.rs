use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real representation of `G = C_{2^n}`: `triv` copies of the trivial line,
/// `sign` copies of `σ`, and `rot[k−1]` copies of the rotation `λ(k)` for
/// `1 ≤ k < 2^{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepDescriptor {
    pub n: u32,
    pub triv: u32,
    pub sign: u32,
    pub rot: Vec<u32>,
}

/// `"C8"` or `"8"` to the exponent `3`.
pub fn parse_group(s: &str) -> Result<u32> {
    let t = s.trim();
    let t = t.strip_prefix('C').or_else(|| t.strip_prefix('c')).unwrap_or(t);
    let g: u64 = t.parse().map_err(|_| Error::Parse(format!("bad group `{s}`")))?;
    if g < 2 || !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    Ok(g.trailing_zeros())
}

impl RepDescriptor {
    pub fn zero(n: u32) -> Self {
        let g = 1u64 << n;
        Self { n, triv: 0, sign: 0, rot: vec![0; (g / 2).saturating_sub(1) as usize] }
    }

    pub fn order(&self) -> u64 {
        1 << self.n
    }

    /// Regular representation `1 + σ + Σ λ(k)`.
    pub fn regular(n: u32) -> Self {
        let mut v = Self::zero(n);
        v.triv = 1;
        v.sign = 1;
        for r in v.rot.iter_mut() {
            *r = 1;
        }
        v
    }

    pub fn sigma(n: u32, mult: u32) -> Self {
        let mut v = Self::zero(n);
        v.sign = mult;
        v
    }

    pub fn lambda(n: u32, k: u32, mult: u32) -> Self {
        let mut v = Self::zero(n);
        v.add_lambda(k as u64, mult);
        v
    }

    pub fn scaled(&self, m: u32) -> Self {
        Self {
            n: self.n,
            triv: self.triv * m,
            sign: self.sign * m,
            rot: self.rot.iter().map(|r| r * m).collect(),
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "representations of different groups");
        Self {
            n: self.n,
            triv: self.triv + o.triv,
            sign: self.sign + o.sign,
            rot: self.rot.iter().zip(o.rot.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    /// Adds `λ(k)`, normalising `k` modulo `g` and folding `k > g/2` to `g − k`.
    fn add_lambda(&mut self, k: u64, mult: u32) {
        let g = self.order();
        let k = k % g;
        let k = if k > g / 2 { g - k } else { k };
        if k == 0 {
            self.triv += 2 * mult;
        } else if k == g / 2 {
            self.sign += 2 * mult;
        } else {
            self.rot[k as usize - 1] += mult;
        }
    }

    pub fn dim(&self) -> u32 {
        self.triv + self.sign + 2 * self.rot.iter().sum::<u32>()
    }

    /// Order of the kernel of `λ(k)`.
    pub fn rotation_kernel(&self, k: u32) -> u64 {
        1 << k.trailing_zeros().min(self.n)
    }

    /// `d_i = dim V^{H_i}`, `H_i` the subgroup of index `2^i`, for `i = 0..=n`.
    pub fn fixed_dims(&self) -> Vec<u32> {
        (0..=self.n)
            .map(|i| {
                let h = 1u64 << (self.n - i);
                let mut d = self.triv;
                if i >= 1 {
                    d += self.sign;
                }
                for (idx, &r) in self.rot.iter().enumerate() {
                    if self.rotation_kernel(idx as u32 + 1) >= h {
                        d += 2 * r;
                    }
                }
                d
            })
            .collect()
    }

    /// Parses sums like `2*rho(8) + sigma + lambda(3) + 1` for the group of order `2^n`.
    pub fn parse(s: &str, n: u32) -> Result<Self> {
        let g = 1u64 << n;
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(Self::zero(n));
        }
        let mut v = Self::zero(n);
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty summand in `{s}`")));
            }
            let (mult, atom) = match term.split_once('*') {
                Some((m, a)) => (m.parse::<u32>().map_err(|_| Error::Parse(format!("bad multiplier `{m}`")))?, a),
                None => {
                    let digits = term.chars().take_while(char::is_ascii_digit).count();
                    if digits > 0 && digits < term.len() {
                        (term[..digits].parse::<u32>().unwrap(), &term[digits..])
                    } else {
                        (1, term)
                    }
                }
            };
            if let Ok(k) = atom.parse::<u32>() {
                v.triv += mult * k;
                continue;
            }
            let (name, arg) = match atom.split_once('(') {
                Some((nm, rest)) => {
                    let inner = rest
                        .strip_suffix(')')
                        .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in `{atom}`")))?;
                    let a = inner.parse::<u64>().map_err(|_| Error::Parse(format!("bad argument `{inner}`")))?;
                    (nm, Some(a))
                }
                None => (atom, None),
            };
            match (name, arg) {
                ("triv" | "1", None) => v.triv += mult,
                ("sigma" | "σ", None) => v.sign += mult,
                ("lambda" | "λ", Some(k)) => v.add_lambda(k, mult),
                ("rho" | "ρ", q) => {
                    let q = q.unwrap_or(g);
                    if q == 0 || !q.is_power_of_two() || g % q != 0 {
                        return Err(Error::InvalidSubgroup { sub: q, group: g });
                    }
                    // regular representation of the quotient of order q
                    v.triv += mult;
                    if q >= 2 {
                        v.sign += mult;
                    }
                    for kq in 1..q / 2 {
                        v.add_lambda(kq * (g / q), mult);
                    }
                }
                _ => return Err(Error::Parse(format!("unknown summand `{term}`"))),
            }
        }
        Ok(v)
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let with = |m: u32, s: String| if m == 1 { s } else { format!("{m}*{s}") };
        if self.triv > 0 {
            parts.push(self.triv.to_string());
        }
        if self.sign > 0 {
            parts.push(with(self.sign, "sigma".into()));
        }
        for (i, &r) in self.rot.iter().enumerate() {
            if r > 0 {
                parts.push(with(r, format!("lambda({})", i + 1)));
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
