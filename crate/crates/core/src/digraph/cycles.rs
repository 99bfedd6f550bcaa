//! Which of the four closed-path situations a digraph is in.
//!
//! For a closed path `c` in `G^±`, `I(c) = Σ θ(a) = η·w(c)` where `w(c)` counts
//! one-way arcs traversed forwards minus those traversed backwards. Both `w`
//! and the length parity are additive over concatenation and vanish (mod 2
//! for parity) on null-homotopic walks, so they factor through the cycle
//! space. With `η = pπ/q`, the residue `p·w(c) - q·ℓ(c) mod 2q` is therefore
//! a homomorphism from the cycle space, and checking it on a fundamental
//! cycle basis decides the condition for every closed path.

use alloc::vec;
use alloc::vec::Vec;

use super::{bits, Digraph};
use crate::scalar::Angle;
use crate::{Error, Result};

/// One fundamental cycle: its weight `w` (so `I(c) = w·η`) and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub weight: i64,
    pub length: usize,
}

impl FundamentalCycle {
    pub fn is_odd(&self) -> bool {
        self.length % 2 == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleCase {
    /// Bipartite, `I(c) ∈ 2πZ` for every closed path.
    I,
    /// Non-bipartite, `I(c) ∈ 2πZ` for every closed path.
    II,
    /// Non-bipartite, `I(c) ∈ 2πZ` on even and `2π(Z + ½)` on odd closed paths.
    III,
    IV,
}

impl CycleCase {
    /// Multiplicities of `1` and `-1` as eigenvalues of `H̃_η`.
    pub fn multiplicities(self) -> (usize, usize) {
        match self {
            CycleCase::I => (1, 1),
            CycleCase::II => (1, 0),
            CycleCase::III => (0, 1),
            CycleCase::IV => (0, 0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CycleCase::I => "i",
            CycleCase::II => "ii",
            CycleCase::III => "iii",
            CycleCase::IV => "iv",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClassification {
    pub case: CycleCase,
    pub bipartite: bool,
    pub basis: Vec<FundamentalCycle>,
}

impl CycleClassification {
    /// `(m₁, m₋₁)`.
    pub fn multiplicities(&self) -> (usize, usize) {
        self.case.multiplicities()
    }
}

/// Classifies a weakly connected digraph with at least one arc.
pub fn classify_cycles(g: &Digraph, eta: Angle) -> Result<CycleClassification> {
    let comps = g.components();
    if comps.len() > 1 {
        return Err(Error::Disconnected { components: comps.len() });
    }
    if g.has_no_arcs() {
        return Err(Error::NoArcs);
    }
    let n = g.n();
    let und = g.underlying();
    // BFS tree: potential φ(v) = w of the tree path from the root, depth for parity.
    let mut potential = vec![0i64; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_parent = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for u in bits(und.out_mask(v)) {
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                potential[u] = potential[v] + step(g, v, u);
                tree_parent[u] = v;
                queue.push(u);
            }
        }
    }
    let mut basis = Vec::new();
    for u in 0..n {
        for v in bits(und.out_mask(u)) {
            if u < v && tree_parent[v] != u && tree_parent[u] != v {
                basis.push(FundamentalCycle {
                    weight: potential[u] + step(g, u, v) - potential[v],
                    length: cycle_length(&tree_parent, &depth, u, v),
                });
            }
        }
    }
    let bipartite = basis.iter().all(|c| !c.is_odd());
    let (p, q) = (eta.p() as i64, eta.q() as i64);
    let integral = basis.iter().all(|c| (p * c.weight).rem_euclid(2 * q) == 0);
    let half = basis.iter().all(|c| (p * c.weight - q * c.length as i64).rem_euclid(2 * q) == 0);
    let case = match (bipartite, integral, half) {
        (true, true, _) => CycleCase::I,
        (false, true, _) => CycleCase::II,
        (false, false, true) => CycleCase::III,
        _ => CycleCase::IV,
    };
    Ok(CycleClassification { case, bipartite, basis })
}

/// `θ(u→v)/η`.
fn step(g: &Digraph, u: usize, v: usize) -> i64 {
    g.has_arc(u, v) as i64 - g.has_arc(v, u) as i64
}

fn cycle_length(parent: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> usize {
    let mut len = 1;
    while depth[u] > depth[v] {
        u = parent[u];
        len += 1;
    }
    while depth[v] > depth[u] {
        v = parent[v];
        len += 1;
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        len += 2;
    }
    len
}
