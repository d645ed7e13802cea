use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::cells::SliceCell;
use crate::error::{Error, Result};
use crate::exactalg::{Mono, Var};

/// One orbit of `±`monomials under `γ`, with the induced slice cell.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialOrbit {
    pub members: Vec<String>,
    /// Subgroup of elements sending a member to `±` itself.
    pub stabilizer_up_to_sign: u64,
    /// Subgroup of elements fixing a member exactly.
    pub honest_stabilizer: u64,
    pub cell: SliceCell,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRefinement {
    pub g: u64,
    pub degree: u64,
    pub rank: u64,
    pub orbits: Vec<MonomialOrbit>,
    /// Distinct cells with multiplicities, by inducing subgroup.
    pub cells: Vec<(SliceCell, u64)>,
}

/// Number of monomials of degree `2d` in `g/2` generators of each degree
/// `2, 4, 6, …`: the coefficient of `t^d` in `Π (1 − tⁱ)^{−g/2}`.
pub fn rank_pi_u(g: u64, d: u64) -> u128 {
    let d = d as usize;
    let mut c = vec![0u128; d + 1];
    c[0] = 1;
    for i in 1..=d {
        for _ in 0..g / 2 {
            for n in i..=d {
                c[n] += c[n - i];
            }
        }
    }
    c[d]
}

/// `γ` on `γʲ r_i`: shift `j`, with sign `(−1)^i` on wrapping.
fn act(g: u64, m: &Mono) -> (Mono, bool) {
    let half = (g / 2) as u32;
    let mut negative = false;
    let mut pairs = Vec::with_capacity(m.pairs().len());
    for &(v, e) in m.pairs() {
        let Var::R { i, j } = v else { unreachable!("only r-generators appear") };
        if j + 1 < half {
            pairs.push((Var::R { i, j: j + 1 }, e));
        } else {
            pairs.push((Var::R { i, j: 0 }, e));
            if i % 2 == 1 && e % 2 == 1 {
                negative = !negative;
            }
        }
    }
    (Mono::from_pairs(pairs), negative)
}

fn enumerate(gens: &[(u32, u32)], start: usize, left: u64, cur: &mut Vec<(Var, i32)>, out: &mut Vec<Mono>) {
    if left == 0 {
        out.push(Mono::from_pairs(cur.iter().copied()));
        return;
    }
    for idx in start..gens.len() {
        let (i, j) = gens[idx];
        let w = i as u64;
        if w > left {
            break;
        }
        let mut e = 1;
        while w * e <= left {
            cur.push((Var::R { i, j }, e as i32));
            enumerate(gens, idx + 1, left - w * e, cur, out);
            cur.pop();
            e += 1;
        }
    }
}

/// Monomials of degree `2d` in the generators `γʲ r_i`, `0 ≤ j < g/2`,
/// grouped into orbits of `γ` up to sign.
pub fn refine_orbits(g: u64, d: u64) -> Result<OrbitRefinement> {
    if g < 2 || !g.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(g));
    }
    let gens: Vec<(u32, u32)> = (1..=d as u32).flat_map(|i| (0..(g / 2) as u32).map(move |j| (i, j))).collect();
    let mut monos = Vec::new();
    enumerate(&gens, 0, d, &mut Vec::new(), &mut monos);
    monos.sort();
    let mut seen: HashSet<Mono> = HashSet::new();
    let mut orbits = Vec::new();
    for m in &monos {
        if seen.contains(m) {
            continue;
        }
        let mut members = vec![m.clone()];
        let mut sign = false;
        let mut honest_period = None;
        let (mut cur, mut neg) = act(g, m);
        let mut steps = 1u64;
        while cur != *m {
            members.push(cur.clone());
            sign ^= neg;
            let (next, n2) = act(g, &cur);
            cur = next;
            neg = n2;
            steps += 1;
        }
        sign ^= neg;
        let size = steps;
        if !sign {
            honest_period = Some(size);
        }
        // returning with a sign means the exact period is twice the orbit size
        let honest = g / honest_period.unwrap_or(2 * size);
        for x in &members {
            seen.insert(x.clone());
        }
        let h = g / size;
        let dim = 2 * d;
        if dim % h != 0 {
            return Err(Error::OutOfRange(format!("orbit of {m} does not give a slice cell")));
        }
        orbits.push(MonomialOrbit {
            members: members.iter().map(ToString::to_string).collect(),
            stabilizer_up_to_sign: h,
            honest_stabilizer: honest,
            cell: SliceCell::new(h, (dim / h) as i64),
        });
    }
    let mut cells: BTreeMap<SliceCell, u64> = BTreeMap::new();
    for o in &orbits {
        *cells.entry(o.cell).or_insert(0) += 1;
    }
    Ok(OrbitRefinement { g, degree: 2 * d, rank: monos.len() as u64, orbits, cells: cells.into_iter().collect() })
}
