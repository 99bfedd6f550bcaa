//! Isomorph-free generation of small digraphs and cospectral classing.
//!
//! A digraph is canonical when its compact code is the least among all
//! relabelings. Codes list pairs column by column, so the code of a digraph
//! extends the code of its restriction to the first `n - 1` vertices, and the
//! restriction of a canonical digraph is canonical. Every class on `n`
//! vertices is therefore reached exactly once by appending a last vertex to
//! each canonical digraph on `n - 1` vertices and keeping canonical results.

mod canon;
mod classing;
mod reference;

use alloc::vec;
use alloc::vec::Vec;

pub use canon::{canonical, canonical_form, is_canonical, CanonicalCode, MAX_CANONICAL_ORDER};
pub use classing::{
    classify, classify_digraphs, ClassKey, ClassMap, ClassStats, CospectralTable, Functor,
};
pub use reference::{reference_row, TableKind, DIGRAPH_COUNTS};

use crate::digraph::{pair_count, Digraph};
use crate::{Error, Result};

/// Smallest and largest orders accepted by [`enumerate_digraphs`].
pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 6;

/// Canonical one-vertex-larger digraphs whose first `n` vertices induce
/// `parent`, in increasing code order. `keep` filters candidates before the
/// canonicity test.
pub fn children(parent: &Digraph, mut keep: impl FnMut(&Digraph) -> bool) -> Vec<Digraph> {
    let m = parent.n();
    let mut out = Vec::new();
    let mut child = Digraph::empty(m + 1);
    for (u, v) in parent.arcs().map(|a| (a.from, a.to)) {
        child.add_arc(u, v);
    }
    for column in 0..1u64 << (2 * m) {
        let mut g = child.clone();
        for i in 0..m {
            let d = (column >> (2 * (m - 1 - i))) & 3;
            if d & 1 == 1 {
                g.add_arc(i, m);
            }
            if d & 2 == 2 {
                g.add_arc(m, i);
            }
        }
        if keep(&g) && is_canonical(&g) {
            out.push(g);
        }
    }
    out
}

/// One digraph per isomorphism class on `n` vertices, in increasing code order,
/// restricted to classes whose every prefix passes `keep`.
///
/// `keep` must be hereditary: if a canonical digraph passes, so must its
/// restriction to the first `m` vertices for every `m`. It receives the
/// partial digraph and the target order.
pub fn enumerate_filtered(n: usize, keep: impl Fn(&Digraph, usize) -> bool) -> Result<Vec<Digraph>> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_CANONICAL_ORDER });
    }
    let mut level = vec![Digraph::empty(1)];
    for _ in 1..n {
        level = level.iter().flat_map(|p| children(p, |g| keep(g, n))).collect();
    }
    Ok(level)
}

/// All digraphs on `n` vertices up to isomorphism, `2 ≤ n ≤ 6`.
pub fn enumerate_digraphs(n: usize) -> Result<Vec<Digraph>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: MIN_ORDER, max: MAX_ORDER });
    }
    enumerate_filtered(n, |_, _| true)
}

/// Digraphs on `n` vertices whose underlying graph is `k`-regular.
pub fn enumerate_regular(n: usize, k: usize) -> Result<Vec<Digraph>> {
    enumerate_filtered(n, move |g, target| {
        let slack = target - g.n();
        g.degrees().iter().all(|&d| d <= k && d + slack >= k)
    })
}

/// Undirected graphs (every arc in a digon) on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Digraph>> {
    enumerate_filtered(n, |g, _| g.is_graph())
}

/// The same classes found by scanning every code and keeping canonical ones.
/// Exponential in `n(n-1)/2`; a reference for small orders.
pub fn enumerate_exhaustive(n: usize) -> Result<Vec<Digraph>> {
    if n == 0 || n > 5 {
        return Err(Error::OrderOutOfRange { n, min: 1, max: 5 });
    }
    let pairs = pair_count(n);
    let mut digits = vec![0u8; pairs];
    let mut out = Vec::new();
    for code in 0..1u64 << (2 * pairs) {
        for (k, d) in digits.iter_mut().enumerate() {
            *d = ((code >> (2 * (pairs - 1 - k))) & 3) as u8;
        }
        let g = Digraph::from_code_digits(n, &digits)?;
        if is_canonical(&g) {
            out.push(g);
        }
    }
    Ok(out)
}
