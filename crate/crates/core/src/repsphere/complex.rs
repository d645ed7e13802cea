use std::collections::HashMap;

use super::rep::RepDescriptor;
use crate::exactalg::complex::{ChainComplex, SparseMatrix};

/// How the sphere is cut into tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildMode {
    /// One factor per isotypic summand `S^{mW}` (fewest cells).
    Isotypic,
    /// One factor per irreducible summand.
    PerIrreducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Trivial { m: u32 },
    Sign { m: u32 },
    Rotation { k: u32, m: u32 },
}

/// Reduced cellular chains of one tensor factor: a permutation basis with
/// degrees, the action of the generator `γ`, and integer boundaries.
#[derive(Clone, Debug)]
struct Block {
    kind: BlockKind,
    deg: Vec<u32>,
    gamma: Vec<u32>,
    bd: Vec<Vec<(u32, i64)>>,
}

impl Block {
    fn trivial(m: u32) -> Self {
        Block { kind: BlockKind::Trivial { m }, deg: vec![m], gamma: vec![0], bd: vec![vec![]] }
    }

    /// `Z ← Z[C_q] ← … ← Z[C_q]` in degrees `0..=top`, with `γ` acting on
    /// `Z[C_q]` by the shift `step`; boundaries augmentation, `T − 1`, norm, …
    fn periodic(kind: BlockKind, q: u32, step: u32, top: u32) -> Self {
        let mut deg = vec![0];
        let mut gamma = vec![0];
        let mut bd = vec![vec![]];
        let id = |i: u32, j: u32| 1 + (i - 1) * q + (j % q);
        for i in 1..=top {
            for j in 0..q {
                deg.push(i);
                gamma.push(id(i, j + step));
                let b = if i == 1 {
                    vec![(0, 1)]
                } else if i % 2 == 0 {
                    if q == 1 {
                        vec![]
                    } else {
                        vec![(id(i - 1, j + 1), 1), (id(i - 1, j), -1)]
                    }
                } else {
                    (0..q).map(|l| (id(i - 1, l), 1)).collect()
                };
                bd.push(b);
            }
        }
        Block { kind, deg, gamma, bd }
    }

    fn sign(m: u32) -> Self {
        Self::periodic(BlockKind::Sign { m }, 2, 1, m)
    }

    fn rotation(n: u32, k: u32, m: u32) -> Self {
        let v = k.trailing_zeros();
        let q = (1u32 << n) >> v;
        Self::periodic(BlockKind::Rotation { k, m }, q, k >> v, 2 * m)
    }

    fn len(&self) -> u32 {
        self.deg.len() as u32
    }
}

/// Cellular chains of `S^V` as the tensor product of the factor blocks,
/// with the diagonal action of `C_{2^n}` and Koszul signs.
#[derive(Clone, Debug)]
pub struct PermChainComplex {
    rep: RepDescriptor,
    blocks: Vec<Block>,
    strides: Vec<u64>,
    /// cell codes by degree
    cells: Vec<Vec<u64>>,
}

pub fn build_complex(v: &RepDescriptor) -> PermChainComplex {
    build_complex_with(v, BuildMode::Isotypic, false)
}

/// `reversed` reverses the order of the tensor factors.
pub fn build_complex_with(v: &RepDescriptor, mode: BuildMode, reversed: bool) -> PermChainComplex {
    let mut blocks = Vec::new();
    let per = mode == BuildMode::PerIrreducible;
    if v.triv > 0 {
        if per {
            blocks.extend((0..v.triv).map(|_| Block::trivial(1)));
        } else {
            blocks.push(Block::trivial(v.triv));
        }
    }
    if v.sign > 0 {
        if per {
            blocks.extend((0..v.sign).map(|_| Block::sign(1)));
        } else {
            blocks.push(Block::sign(v.sign));
        }
    }
    for (i, &r) in v.rot.iter().enumerate() {
        let k = i as u32 + 1;
        if r == 0 {
            continue;
        }
        if per {
            blocks.extend((0..r).map(|_| Block::rotation(v.n, k, 1)));
        } else {
            blocks.push(Block::rotation(v.n, k, r));
        }
    }
    if reversed {
        blocks.reverse();
    }
    let mut strides = Vec::with_capacity(blocks.len());
    let mut s = 1u64;
    for b in &blocks {
        strides.push(s);
        s *= b.len() as u64;
    }
    let dim = v.dim() as usize;
    let mut cells = vec![Vec::new(); dim + 1];
    enumerate(&blocks, &strides, 0, 0, 0, &mut cells);
    for c in cells.iter_mut() {
        c.sort_unstable();
    }
    PermChainComplex { rep: v.clone(), blocks, strides, cells }
}

fn enumerate(blocks: &[Block], strides: &[u64], i: usize, code: u64, deg: u32, out: &mut Vec<Vec<u64>>) {
    if i == blocks.len() {
        out[deg as usize].push(code);
        return;
    }
    for (b, &d) in blocks[i].deg.iter().enumerate() {
        enumerate(blocks, strides, i + 1, code + b as u64 * strides[i], deg + d, out);
    }
}

impl PermChainComplex {
    pub fn rep(&self) -> &RepDescriptor {
        &self.rep
    }

    pub fn group_order(&self) -> u64 {
        1 << self.rep.n
    }

    pub fn block_kinds(&self) -> Vec<BlockKind> {
        self.blocks.iter().map(|b| b.kind.clone()).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, d: usize) -> &[u64] {
        &self.cells[d]
    }

    pub fn num_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    fn digits(&self, code: u64) -> Vec<u32> {
        self.blocks
            .iter()
            .zip(self.strides.iter())
            .map(|(b, &s)| ((code / s) % b.len() as u64) as u32)
            .collect()
    }

    /// `γ^t · cell`.
    pub fn act(&self, code: u64, t: u64) -> u64 {
        let t = t % self.group_order();
        let mut out = 0;
        for ((b, &s), mut x) in self.blocks.iter().zip(self.strides.iter()).zip(self.digits(code)) {
            for _ in 0..t {
                x = b.gamma[x as usize];
            }
            out += x as u64 * s;
        }
        out
    }

    /// Boundary of a cell as `(cell, coefficient)` pairs.
    pub fn boundary_of(&self, code: u64) -> Vec<(u64, i64)> {
        let mut out = Vec::new();
        let mut prefix = 0u32;
        for ((b, &s), x) in self.blocks.iter().zip(self.strides.iter()).zip(self.digits(code)) {
            let sign = if prefix % 2 == 0 { 1 } else { -1 };
            for &(y, c) in &b.bd[x as usize] {
                let nc = code - x as u64 * s + y as u64 * s;
                out.push((nc, sign * c));
            }
            prefix += b.deg[x as usize];
        }
        out
    }

    /// `∂(γx) = γ∂x` for every cell.
    pub fn is_equivariant(&self) -> bool {
        let norm = |mut v: Vec<(u64, i64)>| {
            v.sort_unstable();
            v
        };
        self.cells.iter().flatten().all(|&c| {
            let lhs = norm(self.boundary_of(self.act(c, 1)));
            let rhs = norm(self.boundary_of(c).into_iter().map(|(y, k)| (self.act(y, 1), k)).collect());
            lhs == rhs
        })
    }

    /// The underlying complex with all cells as basis.
    pub fn underlying(&self) -> ChainComplex {
        self.orbit_complexes(1).0
    }

    /// Complexes for the subgroup of order `h`: the invariant chains on
    /// orbit sums, and the coinvariant chains whose integral dual is the
    /// complex of orbit-constant cochains.
    pub(crate) fn orbit_complexes(&self, h: u64) -> (ChainComplex, ChainComplex) {
        let g = self.group_order();
        assert!(h >= 1 && g % h == 0 && h.is_power_of_two(), "invalid subgroup order");
        let step = g / h;
        let orbit = |c: u64| -> (u64, u64) {
            let mut rep = c;
            let mut size = 1;
            let mut y = self.act(c, step);
            while y != c {
                rep = rep.min(y);
                size += 1;
                y = self.act(y, step);
            }
            (rep, size)
        };
        let top = self.top_degree();
        let mut reps: Vec<Vec<(u64, u64)>> = Vec::with_capacity(top + 1);
        let mut index: Vec<HashMap<u64, usize>> = Vec::with_capacity(top + 1);
        let mut rep_of: HashMap<u64, (u64, u64)> = HashMap::new();
        for d in 0..=top {
            let mut r = Vec::new();
            let mut idx = HashMap::new();
            for &c in &self.cells[d] {
                let (rep, size) = orbit(c);
                rep_of.insert(c, (rep, size));
                if rep == c {
                    idx.insert(c, r.len());
                    r.push((c, size));
                }
            }
            reps.push(r);
            index.push(idx);
        }
        let dims: Vec<usize> = reps.iter().map(Vec::len).collect();
        let mut inv = ChainComplex::new(0, dims.clone());
        let mut coinv = ChainComplex::new(0, dims);
        for d in 1..=top {
            let mut inv_cols = Vec::with_capacity(reps[d].len());
            let mut co_cols = Vec::with_capacity(reps[d].len());
            for &(x, size_x) in &reps[d] {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (z, c) in self.boundary_of(x) {
                    let (rz, _) = rep_of[&z];
                    *acc.entry(index[d - 1][&rz]).or_insert(0) += c;
                }
                let mut co: Vec<(u32, i64)> = Vec::with_capacity(acc.len());
                let mut iv: Vec<(u32, i64)> = Vec::with_capacity(acc.len());
                for (row, a) in acc {
                    if a == 0 {
                        continue;
                    }
                    co.push((row as u32, a));
                    let size_y = reps[d - 1][row].1;
                    let num = a * size_x as i64;
                    assert!(num % size_y as i64 == 0, "orbit-sum boundary is not integral");
                    iv.push((row as u32, num / size_y as i64));
                }
                co_cols.push(co);
                inv_cols.push(iv);
            }
            inv.set_boundary(d as i64, SparseMatrix::from_columns(reps[d - 1].len(), inv_cols));
            coinv.set_boundary(d as i64, SparseMatrix::from_columns(reps[d - 1].len(), co_cols));
        }
        (inv, coinv)
    }
}
