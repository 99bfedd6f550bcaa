use alloc::vec;
use alloc::vec::Vec;

use super::{Arc, Digraph};
use crate::scalar::{Angle, CycScalar, Field};
use crate::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// A fixed ordering of the symmetric arc set `A(G^±)`.
///
/// Arcs come in inverse pairs at positions `2k` and `2k + 1`, so the inverse
/// of index `i` is `i ^ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcIndex {
    n: usize,
    arcs: Vec<Arc>,
    pos: Vec<u32>,
}

impl ArcIndex {
    /// Edges of `G^±` sorted by `(min, max)`, each listed as `min→max` then `max→min`.
    pub fn new(g: &Digraph) -> ArcIndex {
        let und = g.underlying();
        let reps: Vec<Arc> = und.arcs().filter(|a| a.from < a.to).collect();
        Self::build(g.n(), &reps)
    }

    /// Uses `reps[k]` at position `2k` and its inverse at `2k + 1`.
    /// `reps` must name every edge of `G^±` exactly once, in either direction.
    pub fn with_order(g: &Digraph, reps: &[Arc]) -> Result<ArcIndex> {
        let und = g.underlying();
        for &a in reps {
            if !und.has_arc(a.from, a.to) {
                return Err(Error::UnknownArc(a));
            }
        }
        let idx = Self::build(g.n(), reps);
        if idx.pos.iter().filter(|&&p| p != ABSENT).count() != reps.len() * 2
            || reps.len() != und.arc_count() / 2
        {
            return Err(Error::Precondition("arc order must list every edge exactly once".into()));
        }
        Ok(idx)
    }

    fn build(n: usize, reps: &[Arc]) -> ArcIndex {
        let mut arcs = Vec::with_capacity(reps.len() * 2);
        let mut pos = vec![ABSENT; n * n];
        for &a in reps {
            for b in [a, a.inverse()] {
                pos[b.from * n + b.to] = arcs.len() as u32;
                arcs.push(b);
            }
        }
        ArcIndex { n, arcs, pos }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, i: usize) -> Arc {
        self.arcs[i]
    }

    pub fn index(&self, a: Arc) -> Option<usize> {
        if a.from >= self.n || a.to >= self.n {
            return None;
        }
        match self.pos[a.from * self.n + a.to] {
            ABSENT => None,
            p => Some(p as usize),
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        i ^ 1
    }

    /// `o(a)`.
    pub fn origin(&self, i: usize) -> usize {
        self.arcs[i].from
    }

    /// `t(a)`.
    pub fn terminus(&self, i: usize) -> usize {
        self.arcs[i].to
    }
}

/// `θ(a) = η` on `A \ A⁻¹`, `-η` on `A⁻¹ \ A`, `0` on digons, stored as the
/// sign per arc of an [`ArcIndex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaFunction {
    angle: Angle,
    signs: Vec<i8>,
}

impl EtaFunction {
    pub fn new(g: &Digraph, index: &ArcIndex, angle: Angle) -> Result<EtaFunction> {
        let signs = index
            .arcs()
            .iter()
            .map(|&a| match (g.has_arc(a.from, a.to), g.has_arc(a.to, a.from)) {
                (true, true) => Ok(0),
                (true, false) => Ok(1),
                (false, true) => Ok(-1),
                (false, false) => Err(Error::UnknownArc(a)),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(EtaFunction { angle, signs })
    }

    pub fn angle(&self) -> Angle {
        self.angle
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// `θ(a) / η ∈ {-1, 0, 1}`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `-θ`, which is the η-function of the transposed digraph.
    pub fn negated(&self) -> EtaFunction {
        EtaFunction { angle: self.angle, signs: self.signs.iter().map(|s| -s).collect() }
    }

    /// `e^{iθ(a)}` in `field`, which must contain `e^{iη}`.
    pub fn phase(&self, i: usize, field: &Field) -> CycScalar {
        let m = field.order() as i64;
        assert_eq!(m % self.angle.field_order() as i64, 0, "field too small for the angle");
        let step = m / self.angle.field_order() as i64 * self.angle.p() as i64;
        field.zeta_pow(step * self.signs[i] as i64)
    }

    /// `cos θ(a) = cos η` unless `a` lies on a digon.
    pub fn is_digon_arc(&self, i: usize) -> bool {
        self.signs[i] == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::tests::example_digraph;

    #[test]
    fn default_order_pairs_inverses() {
        let g = example_digraph();
        let idx = ArcIndex::new(&g);
        assert_eq!(idx.len(), 8);
        for i in 0..idx.len() {
            assert_eq!(idx.arc(idx.inverse(i)), idx.arc(i).inverse());
            assert_eq!(idx.index(idx.arc(i)), Some(i));
        }
        assert_eq!(idx.arc(0), Arc::new(0, 1));
        assert_eq!(idx.index(Arc::new(0, 2)), None);
    }

    #[test]
    fn explicit_order() {
        let g = example_digraph();
        let reps = [Arc::new(1, 0), Arc::new(2, 1), Arc::new(1, 3), Arc::new(3, 2)];
        let idx = ArcIndex::with_order(&g, &reps).unwrap();
        assert_eq!(idx.arc(1), Arc::new(0, 1));
        assert_eq!(idx.arc(6), Arc::new(3, 2));
        assert!(ArcIndex::with_order(&g, &reps[..3]).is_err());
        assert!(ArcIndex::with_order(&g, &[reps[0], reps[0], reps[1], reps[2]]).is_err());
        assert_eq!(
            ArcIndex::with_order(&g, &[Arc::new(0, 2)]),
            Err(Error::UnknownArc(Arc::new(0, 2)))
        );
    }

    #[test]
    fn eta_signs() {
        let g = example_digraph();
        let reps = [Arc::new(1, 0), Arc::new(2, 1), Arc::new(1, 3), Arc::new(3, 2)];
        let idx = ArcIndex::with_order(&g, &reps).unwrap();
        let eta = EtaFunction::new(&g, &idx, Angle::RIGHT).unwrap();
        assert_eq!(eta.signs(), &[0, 0, 1, -1, 1, -1, 1, -1]);
        let back = EtaFunction::new(&g.transpose(), &idx, Angle::RIGHT).unwrap();
        assert_eq!(back, eta.negated());
        let f = Angle::RIGHT.field();
        assert_eq!(eta.phase(2, &f), f.zeta_pow(1));
        assert_eq!(eta.phase(3, &f), f.zeta_pow(3));
        assert!(eta.phase(0, &f).is_one());
    }
}
