use super::{Arc, Digraph};
use crate::{Error, Result};

/// `Y_{a,n-a}`: digon-complete blocks on the upper vertices `0..a` and the
/// lower vertices `a..n`, plus every arc from upper to lower.
pub fn make_y(a: usize, n: usize) -> Result<Digraph> {
    if a > n {
        return Err(Error::Precondition(alloc::format!("Y family needs a <= n, got a = {}, n = {}", a, n)));
    }
    if n > super::MAX_VERTICES {
        return Err(Error::OrderOutOfRange { n, min: 0, max: super::MAX_VERTICES });
    }
    let mut g = Digraph::empty(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && ((x < a) == (y < a) || x < a) {
                g.add_arc(x, y);
            }
        }
    }
    Ok(g)
}

/// Replaces every digon `{x, y}` with `x ∉ S`, `y ∈ S` by the single arc `(x, y)`.
///
/// Every arc crossing the cut must lie in a digon; otherwise the first
/// offending arc is reported.
pub fn digon_cut_switch(g: &Digraph, s: &[usize]) -> Result<Digraph> {
    let mut in_s = 0u64;
    for &v in s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        in_s |= 1 << v;
    }
    let inside = |v: usize| in_s >> v & 1 == 1;
    let mut out = g.clone();
    for a in g.arcs() {
        if inside(a.from) == inside(a.to) {
            continue;
        }
        if !g.has_arc(a.to, a.from) {
            return Err(Error::NonDigonCut(Arc::new(a.from, a.to)));
        }
        if inside(a.from) {
            out.remove_arc(a.from, a.to);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_examples() {
        assert_eq!(make_y(0, 3).unwrap(), Digraph::complete(3));
        assert_eq!(make_y(3, 3).unwrap(), Digraph::complete(3));
        assert_eq!(make_y(2, 3).unwrap(), Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (1, 2)]).unwrap());
        assert_eq!(make_y(1, 2).unwrap(), Digraph::from_arcs(2, [(0, 1)]).unwrap());
        assert!(make_y(4, 3).is_err());
    }

    #[test]
    fn y_digon_count() {
        for n in 1..8 {
            for a in 0..=n {
                let g = make_y(a, n).unwrap();
                let brute = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| g.is_digon(x, y)).count();
                assert_eq!(g.digon_count(), brute);
                assert_eq!(g.digon_count(), a * a.saturating_sub(1) / 2 + (n - a) * (n - a).saturating_sub(1) / 2);
                assert_eq!(g.arc_count(), a * a.saturating_sub(1) + (n - a) * (n - a).saturating_sub(1) + a * (n - a));
            }
        }
    }

    #[test]
    fn switching_builds_y() {
        let k3 = Digraph::complete(3);
        assert_eq!(digon_cut_switch(&k3, &[2]).unwrap(), make_y(2, 3).unwrap());
        assert_eq!(digon_cut_switch(&k3, &[]).unwrap(), k3);
        for n in 2..7 {
            for a in 0..n {
                let lower: alloc::vec::Vec<usize> = (a..n).collect();
                assert_eq!(digon_cut_switch(&Digraph::complete(n), &lower).unwrap(), make_y(a, n).unwrap());
            }
        }
    }

    #[test]
    fn switching_rejects_one_way_cut() {
        let y = make_y(2, 3).unwrap();
        assert_eq!(digon_cut_switch(&y, &[2]), Err(Error::NonDigonCut(Arc::new(0, 2))));
    }
}
