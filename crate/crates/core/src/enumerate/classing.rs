//! Grouping digraphs by the characteristic polynomial of a matrix functor.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::charpoly::{charpoly_exact, cyclotomic_integer_charpoly, integer_charpoly, CharPoly};
use crate::digraph::{ArcIndex, Digraph};
use crate::operators::h_eta;
use crate::scalar::Angle;
use crate::supports::square_supports;
use crate::Result;

/// A matrix attached to each digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functor {
    /// The 0/1 arc matrix `A(G)`.
    Adjacency,
    /// The η-Hermitian adjacency matrix `H_η`.
    Hermitian(Angle),
    /// The positive support `U_θ^{(2,+)}`; the arcless digraph is excluded.
    SquarePositive(Angle),
}

impl Functor {
    pub fn label(self) -> String {
        match self {
            Functor::Adjacency => "A".into(),
            Functor::Hermitian(a) => alloc::format!("H_{}", a),
            Functor::SquarePositive(a) => alloc::format!("U2+_{}", a),
        }
    }

    /// The cospectrality key of `g`, or `None` if `g` is excluded.
    pub fn key(self, g: &Digraph) -> Result<Option<ClassKey>> {
        let n = g.n();
        let poly = match self {
            Functor::Adjacency => integer_charpoly(n, &g.adjacency()).map(CharPoly::Integer),
            Functor::Hermitian(angle) => match hermitian_coefficients(g, angle) {
                Some((k, c)) => cyclotomic_integer_charpoly(n, k, &c).map(CharPoly::Integer),
                None => None,
            },
            Functor::SquarePositive(angle) => {
                if g.has_no_arcs() {
                    return Ok(None);
                }
                let s = square_supports(g, &ArcIndex::new(g), angle)?;
                Some(CharPoly::Integer(s.positive.charpoly()))
            }
        };
        let poly = match poly {
            Some(p) => p,
            None => match self {
                Functor::Hermitian(angle) => charpoly_exact(&h_eta(g, angle))?,
                _ => charpoly_exact(&crate::matrix::OpMatrix::from_integers(
                    crate::matrix::IndexSpace::vertex(n),
                    crate::matrix::IndexSpace::vertex(n),
                    &crate::scalar::Field::rationals(),
                    &g.adjacency(),
                ))?,
            },
        };
        Ok(Some(ClassKey(poly.key())))
    }
}

/// `H_η` over `Z[ζ_k]` when `e^{iη}` is a `k`-th root of unity with `k ≤ 6`.
fn hermitian_coefficients(g: &Digraph, angle: Angle) -> Option<(u32, Vec<i64>)> {
    let k = 2 * angle.q();
    if !matches!(k, 2 | 4 | 6) {
        return None;
    }
    let (n, ku) = (g.n(), k as usize);
    let p = angle.p() as usize;
    let mut c = alloc::vec![0i64; n * n * ku];
    for u in 0..n {
        for v in 0..n {
            let e = match (g.has_arc(u, v), g.has_arc(v, u)) {
                (true, true) => 0,
                (true, false) => p,
                (false, true) => (ku - p) % ku,
                (false, false) => continue,
            };
            c[(u * n + v) * ku + e] = 1;
        }
    }
    Some((k, c))
}

/// Canonical text of a characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey(pub String);

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Size of a cospectral class and how many of its members are graphs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassStats {
    pub size: u64,
    pub graphs: u64,
}

/// Cospectral classes keyed by characteristic polynomial.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassMap {
    classes: BTreeMap<ClassKey, ClassStats>,
}

impl ClassMap {
    pub fn new() -> ClassMap {
        ClassMap::default()
    }

    pub fn insert(&mut self, key: ClassKey, is_graph: bool) {
        self.add(key, ClassStats { size: 1, graphs: is_graph as u64 });
    }

    pub fn add(&mut self, key: ClassKey, stats: ClassStats) {
        let e = self.classes.entry(key).or_default();
        e.size += stats.size;
        e.graphs += stats.graphs;
    }

    pub fn merge(&mut self, other: ClassMap) {
        for (k, s) in other.classes {
            self.add(k, s);
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ClassKey, &ClassStats)> {
        self.classes.iter()
    }

    pub fn members(&self) -> u64 {
        self.classes.values().map(|s| s.size).sum()
    }
}

/// One column of a cospectrality table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospectralTable {
    pub order: usize,
    pub functor: String,
    /// All digraphs of this order, including any excluded from classing.
    pub digraphs: u64,
    pub distinct: u64,
    pub max_class: u64,
    /// Classes of size one.
    pub determined: u64,
    pub no_graphs: u64,
    pub only_graphs: u64,
    pub mixed: u64,
}

impl CospectralTable {
    pub fn from_classes(order: usize, functor: String, digraphs: u64, classes: &ClassMap) -> CospectralTable {
        let mut t = CospectralTable {
            order,
            functor,
            digraphs,
            distinct: classes.len() as u64,
            max_class: 0,
            determined: 0,
            no_graphs: 0,
            only_graphs: 0,
            mixed: 0,
        };
        for (_, s) in classes.iter() {
            t.max_class = t.max_class.max(s.size);
            t.determined += (s.size == 1) as u64;
            match s.graphs {
                0 => t.no_graphs += 1,
                g if g == s.size => t.only_graphs += 1,
                _ => t.mixed += 1,
            }
        }
        t
    }

    /// `(digraphs, distinct, max class, determined, a, b, c)`.
    pub fn row(&self) -> [u64; 7] {
        [self.digraphs, self.distinct, self.max_class, self.determined, self.no_graphs, self.only_graphs, self.mixed]
    }
}

/// Classes of the given digraphs under `functor`.
pub fn classify_digraphs<'a>(digraphs: impl IntoIterator<Item = &'a Digraph>, functor: Functor) -> Result<ClassMap> {
    let mut map = ClassMap::new();
    for g in digraphs {
        if let Some(k) = functor.key(g)? {
            map.insert(k, g.is_graph());
        }
    }
    Ok(map)
}

/// The table column for `order` under `functor`, computed serially.
pub fn classify(order: usize, functor: Functor) -> Result<CospectralTable> {
    let all = super::enumerate_digraphs(order)?;
    let classes = classify_digraphs(&all, functor)?;
    Ok(CospectralTable::from_classes(order, functor.label(), all.len() as u64, &classes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_columns() {
        let t = classify(2, Functor::Adjacency).unwrap();
        assert_eq!(t.row(), [3, 2, 2, 1, 0, 1, 1]);
        let t = classify(2, Functor::SquarePositive(Angle::RIGHT)).unwrap();
        assert_eq!(t.row(), [3, 2, 1, 2, 1, 1, 0]);
    }

    #[test]
    fn hermitian_routes_agree() {
        let all = super::super::enumerate_digraphs(4).unwrap();
        for angle in [Angle::new(1, 3).unwrap(), Angle::RIGHT, Angle::new(2, 3).unwrap(), Angle::PI] {
            for g in &all {
                let fast = Functor::Hermitian(angle).key(g).unwrap().unwrap();
                let slow = charpoly_exact(&h_eta(g, angle)).unwrap().key();
                assert_eq!(fast.0, slow);
            }
        }
    }

    #[test]
    fn other_angles_use_exact_route() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let k = Functor::Hermitian(Angle::new(1, 5).unwrap()).key(&g).unwrap().unwrap();
        assert_eq!(k.0, charpoly_exact(&h_eta(&g, Angle::new(1, 5).unwrap())).unwrap().key());
    }

    #[test]
    fn composition_sums_to_distinct() {
        let t = classify(4, Functor::Hermitian(Angle::RIGHT)).unwrap();
        assert_eq!(t.no_graphs + t.only_graphs + t.mixed, t.distinct);
    }

    #[test]
    fn merge_is_additive() {
        let all = super::super::enumerate_digraphs(3).unwrap();
        let (a, b) = all.split_at(7);
        let mut m = classify_digraphs(a, Functor::Adjacency).unwrap();
        m.merge(classify_digraphs(b, Functor::Adjacency).unwrap());
        assert_eq!(m, classify_digraphs(&all, Functor::Adjacency).unwrap());
        assert_eq!(m.members(), 16);
    }
}
