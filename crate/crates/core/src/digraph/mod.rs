//! Digraphs without loops or multiple arcs, and the structure derived from
//! them: the underlying graph `G^±`, digons, degrees, connectivity.

mod arcs;
mod code;
mod cycles;
mod family;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use arcs::{ArcIndex, EtaFunction};
pub use code::{pair_count, pair_order};
pub use cycles::{classify_cycles, CycleCase, CycleClassification, FundamentalCycle};
pub use family::{digon_cut_switch, make_y};

/// Largest supported vertex count (rows are stored as 64-bit masks).
pub const MAX_VERTICES: usize = 64;

/// An ordered pair `(from, to)`, `from ≠ to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
}

impl Arc {
    pub const fn new(from: usize, to: usize) -> Arc {
        Arc { from, to }
    }

    pub fn inverse(self) -> Arc {
        Arc { from: self.to, to: self.from }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// A simple loopless digraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Digraph {
        assert!(n <= MAX_VERTICES, "at most {} vertices supported", MAX_VERTICES);
        Digraph { n, out: vec![0; n] }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Digraph> {
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange { n, min: 0, max: MAX_VERTICES });
        }
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            g.try_add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Every unordered pair joined by a digon.
    pub fn complete(n: usize) -> Digraph {
        let mut g = Digraph::empty(n);
        for u in 0..n {
            g.out[u] = mask(n) & !(1u64 << u);
        }
        g
    }

    /// The undirected cycle `C_n` as an all-digon digraph.
    pub fn cycle(n: usize) -> Digraph {
        let mut g = Digraph::empty(n);
        for u in 0..n {
            g.add_digon(u, (u + 1) % n);
        }
        g
    }

    /// The directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn directed_cycle(n: usize) -> Digraph {
        let mut g = Digraph::empty(n);
        for u in 0..n {
            g.add_arc(u, (u + 1) % n);
        }
        g
    }

    pub fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    /// Panics on loops or out-of-range vertices.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.try_add_arc(u, v).expect("invalid arc");
    }

    pub fn add_digon(&mut self, u: usize, v: usize) {
        self.add_arc(u, v);
        self.add_arc(v, u);
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    /// `{u, v}` is a digon.
    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Out-neighbours of `u` as a bit mask.
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    /// In-neighbours of `v` as a bit mask.
    pub fn in_mask(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| self.has_arc(u, v)).fold(0, |m, u| m | 1 << u)
    }

    /// Neighbours of `v` in `G^±`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.out[v] | self.in_mask(v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| Arc::new(u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn has_no_arcs(&self) -> bool {
        self.out.iter().all(|&m| m == 0)
    }

    /// `G^± = (V, A ∪ A⁻¹)`.
    pub fn underlying(&self) -> Digraph {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                g.out[v] |= 1 << u;
            }
        }
        g
    }

    /// `G⁻¹ = (V, A⁻¹)`.
    pub fn transpose(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for a in self.arcs() {
            g.out[a.to] |= 1 << a.from;
        }
        g
    }

    /// Digons `{u, v}` as pairs with `u < v`.
    pub fn digons(&self) -> Vec<(usize, usize)> {
        let mut d = Vec::new();
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                if u < v && self.has_arc(v, u) {
                    d.push((u, v));
                }
            }
        }
        d
    }

    pub fn digon_count(&self) -> usize {
        (0..self.n).map(|u| bits(self.out[u]).filter(|&v| u < v && self.has_arc(v, u)).count()).sum()
    }

    /// Every arc lies in a digon (`A = A⁻¹`); such digraphs are graphs.
    pub fn is_graph(&self) -> bool {
        self.arcs().all(|a| self.has_arc(a.to, a.from))
    }

    /// `deg_G(v) = deg_{G^±}(v)`.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_mask(v).count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        let und = self.underlying();
        (0..self.n).map(|v| und.out[v].count_ones() as usize).collect()
    }

    /// Number of edges of `G^±`.
    pub fn edge_count(&self) -> usize {
        self.underlying().arc_count() / 2
    }

    /// Vertices of degree ≥ 1, in increasing order.
    pub fn non_isolated(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d > 0).map(|(v, _)| v).collect()
    }

    /// Weak components, each a sorted vertex list; components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let und = self.underlying();
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= und.out[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            comps.push(bits(comp).collect());
        }
        comps
    }

    /// `G^±` connected. The empty vertex set counts as connected.
    pub fn weakly_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `Some(k)` when every vertex has degree `k` in `G^±`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&k) if d.iter().all(|&x| x == k) => Some(k),
            None => Some(0),
            _ => None,
        }
    }

    /// 2-colourability of `G^±`.
    pub fn bipartite_underlying(&self) -> bool {
        let und = self.underlying();
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in bits(und.out[v]) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        stack.push(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The digraph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut g = Digraph::empty(self.n);
        for a in self.arcs() {
            g.out[perm[a.from]] |= 1 << perm[a.to];
        }
        g
    }

    /// 0/1 adjacency matrix `A(G)`, row-major.
    pub fn adjacency(&self) -> Vec<i64> {
        let mut a = vec![0i64; self.n * self.n];
        for arc in self.arcs() {
            a[arc.from * self.n + arc.to] = 1;
        }
        a
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}", self.n)?;
        for a in self.arcs() {
            write!(f, "; {}", a)?;
        }
        f.write_str(")")
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The four-vertex example: digon {0,1}, arcs 2→1, 1→3, 3→2.
    pub fn example_digraph() -> Digraph {
        Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 1), (1, 3), (3, 2)]).unwrap()
    }

    #[test]
    fn underlying_and_digons() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(g.underlying(), Digraph::complete(2));
        assert_eq!(Digraph::complete(2).underlying(), Digraph::complete(2));
        let ex = example_digraph();
        assert_eq!(ex.underlying().arc_count(), 8);
        assert_eq!(ex.digons(), vec![(0, 1)]);
        assert_eq!(Digraph::complete(5).digon_count(), 10);
    }

    #[test]
    fn transpose_cases() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(g.transpose(), Digraph::from_arcs(2, [(1, 0)]).unwrap());
        assert_eq!(Digraph::cycle(5).transpose(), Digraph::cycle(5));
        let ex = example_digraph();
        assert_eq!(ex.transpose().transpose(), ex);
        assert_eq!(ex.transpose().underlying(), ex.underlying());
    }

    #[test]
    fn predicates() {
        let ex = example_digraph();
        assert!(ex.weakly_connected());
        assert_eq!(ex.degrees(), vec![1, 3, 2, 2]);
        assert_eq!(ex.regular_degree(), None);
        assert_eq!(Digraph::complete(4).regular_degree(), Some(3));
        let two = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!two.weakly_connected());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(Digraph::cycle(4).bipartite_underlying());
        assert!(!Digraph::cycle(3).bipartite_underlying());
        assert!(!ex.bipartite_underlying());
    }

    #[test]
    fn rejects_bad_arcs() {
        assert_eq!(Digraph::from_arcs(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Digraph::from_arcs(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
    }
}
