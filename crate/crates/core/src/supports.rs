//! Positive and negative supports of `D_θ U_θⁿ`, the structural identities
//! for the square, and digon counting by trace.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::charpoly::integer_charpoly;
use crate::digraph::{Arc, ArcIndex, Digraph};
use crate::matrix::OpMatrix;
use crate::operators::Walk;
use crate::scalar::{sign_affine_cos, Angle, Regime, Sign};
use crate::{Error, Result};

/// `+` or `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn opposite(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }

    fn matches(self, s: Sign) -> bool {
        matches!((self, s), (Polarity::Positive, Sign::Positive) | (Polarity::Negative, Sign::Negative))
    }

    pub fn symbol(self) -> char {
        match self {
            Polarity::Positive => '+',
            Polarity::Negative => '-',
        }
    }
}

/// A square 0/1 matrix on the arc space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Support {
    dim: usize,
    bits: Vec<u8>,
}

impl Support {
    pub fn zeros(dim: usize) -> Support {
        Support { dim, bits: vec![0; dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> bool) -> Support {
        let mut s = Support::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                s.bits[i * dim + j] = f(i, j) as u8;
            }
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.dim + j] == 1
    }

    pub fn trace(&self) -> usize {
        (0..self.dim).filter(|&i| self.get(i, i)).count()
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Support) -> Support {
        Support::from_fn(self.dim, |i, j| self.get(i, j) && other.get(i, j))
    }

    /// `1 - x` entrywise.
    pub fn complement(&self) -> Support {
        Support::from_fn(self.dim, |i, j| !self.get(i, j))
    }

    /// Entrywise sum of disjoint supports; `None` if they overlap.
    pub fn disjoint_sum(&self, other: &Support) -> Option<Support> {
        if !self.hadamard(other).is_zero() {
            return None;
        }
        Some(Support::from_fn(self.dim, |i, j| self.get(i, j) || other.get(i, j)))
    }

    /// `P S Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Support {
        let mut s = Support::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                s.bits[perm[i] * self.dim + perm[j]] = self.bits[i * self.dim + j];
            }
        }
        s
    }

    pub fn to_integers(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| b as i64).collect()
    }

    /// Exact integer characteristic polynomial, constant term first.
    pub fn charpoly(&self) -> Vec<BigInt> {
        integer_charpoly(self.dim, &self.to_integers()).expect("0/1 matrices stay within the prime budget")
    }

    /// A 0/1 grid preceded by a header naming the arcs in order.
    pub fn render(&self, index: &ArcIndex) -> String {
        let mut out = String::from("#");
        for a in index.arcs() {
            let _ = write!(out, " {}", a);
        }
        out.push('\n');
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    out.push(' ');
                }
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

/// Entries of `m` whose real part has the given sign.
pub fn support(m: &OpMatrix, polarity: Polarity) -> Support {
    let signs = m.real_part_signs();
    let dim = m.rows().dim;
    assert!(m.is_square());
    Support::from_fn(dim, |i, j| polarity.matches(signs[i * dim + j]))
}

/// `U_θ^{(n,±)}` by definition: signs of `Re(D_θ U_θⁿ)`, computed exactly.
pub fn power_support(w: &Walk, n: u32, polarity: Polarity) -> Result<Support> {
    if n == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let m = w.d_theta().mul(&w.u_theta().pow(n)?)?;
    Ok(support(&m, polarity))
}

/// Both supports of `D_θ U_θ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareSupports {
    pub positive: Support,
    pub negative: Support,
}

impl SquareSupports {
    pub fn get(&self, polarity: Polarity) -> &Support {
        match polarity {
            Polarity::Positive => &self.positive,
            Polarity::Negative => &self.negative,
        }
    }
}

/// `U_θ^{(2,±)}` without forming cyclotomic products.
///
/// `Re(D_θ U_θ²) = U diag(cos θ) U` with `U` the Grover matrix of `G^±`.
/// Scaling `U` by `L = lcm(deg)` makes it integral, so
/// `L²·Re(D_θ U_θ²) = P + cos η · Q` with integer `P` (digon arcs in the middle)
/// and `Q` (one-way arcs in the middle), whose signs are decided exactly.
pub fn square_supports(g: &Digraph, index: &ArcIndex, angle: Angle) -> Result<SquareSupports> {
    if g.has_no_arcs() {
        return Err(Error::NoArcs);
    }
    match square_parts(g, index) {
        Some((p, q)) => {
            let m = index.len();
            let mut pos = Support::zeros(m);
            let mut neg = Support::zeros(m);
            for k in 0..m * m {
                match sign_affine_cos(p[k], q[k], angle) {
                    Sign::Positive => pos.bits[k] = 1,
                    Sign::Negative => neg.bits[k] = 1,
                    Sign::Zero => {}
                }
            }
            Ok(SquareSupports { positive: pos, negative: neg })
        }
        None => {
            let w = Walk::with_index(g, index.clone(), angle)?;
            let m = w.d_theta().mul(&w.u_theta().pow(2)?)?;
            Ok(SquareSupports { positive: support(&m, Polarity::Positive), negative: support(&m, Polarity::Negative) })
        }
    }
}

/// `(P, Q)` with `L² Re(D_θU_θ²) = P + cos η Q`, or `None` on overflow.
fn square_parts(g: &Digraph, index: &ArcIndex) -> Option<(Vec<i64>, Vec<i64>)> {
    let deg = g.degrees();
    let l = deg.iter().filter(|&&d| d > 0).try_fold(1i64, |acc, &d| {
        let l = acc.lcm(&(d as i64));
        (l < 1 << 20).then_some(l)
    })?;
    let m = index.len();
    // LU as sparse rows: (column, value).
    let rows: Vec<Vec<(usize, i64)>> = (0..m)
        .map(|a| {
            let mut row = Vec::new();
            for b in 0..m {
                let mut v = if index.terminus(b) == index.origin(a) { 2 * l / deg[index.terminus(b)] as i64 } else { 0 };
                if b == index.inverse(a) {
                    v -= l;
                }
                if v != 0 {
                    row.push((b, v));
                }
            }
            row
        })
        .collect();
    let digon: Vec<bool> = (0..m).map(|z| g.is_digon(index.origin(z), index.terminus(z))).collect();
    let mut p = vec![0i64; m * m];
    let mut q = vec![0i64; m * m];
    for a in 0..m {
        for &(z, x) in &rows[a] {
            let target = if digon[z] { &mut p } else { &mut q };
            for &(b, y) in &rows[z] {
                let cell = &mut target[a * m + b];
                *cell = cell.checked_add(x.checked_mul(y)?)?;
            }
        }
    }
    let fits = |v: &[i64]| v.iter().all(|x| x.unsigned_abs() < 1 << 61);
    (fits(&p) && fits(&q)).then_some((p, q))
}

/// The Grover transfer matrix `U(G^±)` squared, exactly (rational entries).
pub fn grover_square(w: &Walk) -> OpMatrix {
    let u = w.grover();
    u.mul(&u).expect("arc spaces agree")
}

/// Both supports of `U(G^±)²`, squaring the integer matrix `L·U` with
/// `L = lcm(deg)`; falls back to [`grover_square`] on overflow.
///
/// `L·U` is built from the arc incidences, not from [`Walk::grover`].
pub fn grover_square_supports(w: &Walk) -> SquareSupports {
    let idx = w.index();
    let m = idx.len();
    let deg = w.degrees();
    let l = deg.iter().filter(|&&d| d > 0).try_fold(1i64, |acc, &d| {
        let l = acc.lcm(&(d as i64));
        (l < 1 << 30).then_some(l)
    });
    let scaled = l.map(|l| {
        let mut lu = vec![0i64; m * m];
        for a in 0..m {
            for b in 0..m {
                if idx.terminus(b) == idx.origin(a) {
                    lu[a * m + b] = 2 * l / deg[idx.terminus(b)] as i64;
                }
            }
            lu[a * m + idx.inverse(a)] -= l;
        }
        lu
    });
    let squared = scaled.and_then(|lu| {
        let mut sq = vec![0i64; m * m];
        for i in 0..m {
            for k in 0..m {
                let x = lu[i * m + k];
                if x == 0 {
                    continue;
                }
                for j in 0..m {
                    let cell = &mut sq[i * m + j];
                    *cell = cell.checked_add(x.checked_mul(lu[k * m + j])?)?;
                }
            }
        }
        Some(sq)
    });
    match squared {
        Some(sq) => SquareSupports {
            positive: Support::from_fn(m, |i, j| sq[i * m + j] > 0),
            negative: Support::from_fn(m, |i, j| sq[i * m + j] < 0),
        },
        None => {
            let u2 = grover_square(w);
            SquareSupports { positive: support(&u2, Polarity::Positive), negative: support(&u2, Polarity::Negative) }
        }
    }
}

/// Outcome of checking the three-regime formula for `U_θ^{(2,ε)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFormulaReport {
    pub regime: Regime,
    pub polarity: Polarity,
    /// `Some(k)` when `G^±` is `k`-regular.
    pub regular_degree: Option<usize>,
    /// Whether the proof's hypothesis (`k`-regular, `k ≥ 3`) holds; when it
    /// does not, the check is an empirical probe.
    pub hypothesis: bool,
    pub violations: Vec<(Arc, Arc)>,
}

impl SquareFormulaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `U_θ^{(2,ε)}` entrywise against
/// `(U²)^ε` for `η < π/2`, `(U²)^ε ∘ R` at `π/2`, and
/// `(U²)^ε ∘ R + (U²)^{-ε} ∘ (J - R)` for `η > π/2`.
pub fn verify_square_formula(w: &Walk, polarity: Polarity) -> Result<SquareFormulaReport> {
    let lhs = square_supports(w.graph(), w.index(), w.angle())?;
    let lhs = lhs.get(polarity);
    let u2 = grover_square_supports(w);
    let same = u2.get(polarity).clone();
    let other = u2.get(polarity.opposite()).clone();
    let idx = w.index();
    let r = Support::from_fn(idx.len(), |a, b| w.graph().is_digon(idx.terminus(b), idx.origin(a)));
    let regime = w.angle().regime();
    let rhs = match regime {
        Regime::BelowRight => same,
        Regime::Right => same.hadamard(&r),
        Regime::AboveRight => same
            .hadamard(&r)
            .disjoint_sum(&other.hadamard(&r.complement()))
            .expect("supports of opposite signs are disjoint"),
    };
    let m = lhs.dim();
    let violations = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| lhs.get(a, b) != rhs.get(a, b))
        .map(|(a, b)| (w.index().arc(a), w.index().arc(b)))
        .collect();
    let k = w.graph().regular_degree();
    Ok(SquareFormulaReport { regime, polarity, regular_degree: k, hypothesis: k.is_some_and(|k| k >= 3), violations })
}

/// `Tr(U_θ^{(2,+)}) / 2`: the number of edges of `G^±` for `η < π/2` and the
/// number of digons for `η ≥ π/2` (proved for `k`-regular `G^±`, `k ≥ 3`).
pub fn digon_count_via_trace(g: &Digraph, angle: Angle) -> Result<usize> {
    let s = square_supports(g, &ArcIndex::new(g), angle)?;
    Ok(s.positive.trace() / 2)
}

/// Outcome of checking `(U²)⁻ = S U⁺ + U⁺ S` for an undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeSquareReport {
    pub degree: usize,
    pub violations: Vec<(Arc, Arc)>,
}

impl NegativeSquareReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `(U²)⁻ = S U⁺ + U⁺ S` exactly; requires an all-digon `k`-regular
/// digraph with `k ≥ 3`.
pub fn verify_square_negative_identity(g: &Digraph) -> Result<NegativeSquareReport> {
    if !g.is_graph() {
        return Err(Error::Precondition("identity is stated for undirected graphs".into()));
    }
    let k = match g.regular_degree() {
        Some(k) if k >= 3 => k,
        Some(k) => return Err(Error::Precondition(alloc::format!("graph is {}-regular; k >= 3 is required", k))),
        None => return Err(Error::Precondition("graph is not regular".into())),
    };
    let w = Walk::new(g, Angle::ZERO)?;
    let u = w.grover();
    let s = w.shift();
    let u_plus = OpMatrix::from_integers(w.arc_space(), w.arc_space(), w.field(), &support(&u, Polarity::Positive).to_integers());
    let rhs = s.mul(&u_plus)?.add(&u_plus.mul(&s)?)?;
    let lhs = grover_square_supports(&w).negative;
    let rhs = rhs.to_integers().expect("integer matrix");
    let m = lhs.dim();
    let violations = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| lhs.get(a, b) as i64 != rhs[a * m + b])
        .map(|(a, b)| (w.index().arc(a), w.index().arc(b)))
        .collect();
    Ok(NegativeSquareReport { degree: k, violations })
}

/// The four arc-pair situations in which `D_θU_θ²` has a nonzero entry on a
/// regular digraph of degree at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    /// `a = b`.
    Equal,
    /// Common origin, `a ≠ b`.
    SameOrigin,
    /// Common terminus, `a ≠ b`.
    SameTerminus,
    /// `t(b) ~ o(a)` in `G^±`, none of the above.
    Adjacent,
}

/// Classifies the pair `(a, b)`; `None` when none of the situations applies.
pub fn pair_class(g: &Digraph, a: Arc, b: Arc) -> Option<PairClass> {
    if a == b {
        Some(PairClass::Equal)
    } else if a.from == b.from {
        Some(PairClass::SameOrigin)
    } else if a.to == b.to {
        Some(PairClass::SameTerminus)
    } else if g.has_arc(b.to, a.from) || g.has_arc(a.from, b.to) {
        Some(PairClass::Adjacent)
    } else {
        None
    }
}

/// `e^{-iθ(m(a,b))} (U²)_{ab}` with `m(a,b) = (t(b), o(a))`, and zero when
/// `m(a,b)` is not an arc of `G^±`.
pub fn single_term_square(w: &Walk) -> OpMatrix {
    let u2 = grover_square(w);
    let idx = w.index();
    let f = w.field().clone();
    OpMatrix::from_fn(w.arc_space(), w.arc_space(), &f, |a, b| {
        match idx.index(Arc::new(idx.terminus(b), idx.origin(a))) {
            Some(z) => &w.eta().phase(z, &f).conj() * u2.get(a, b),
            None => f.zero(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::make_y;

    fn angles() -> [Angle; 4] {
        [Angle::new(1, 3).unwrap(), Angle::RIGHT, Angle::new(2, 3).unwrap(), Angle::new(3, 4).unwrap()]
    }

    #[test]
    fn fast_square_matches_definition() {
        let graphs = [
            crate::digraph::tests::example_digraph(),
            make_y(2, 4).unwrap(),
            Digraph::directed_cycle(4),
            Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (3, 0), (0, 3), (3, 1)]).unwrap(),
        ];
        for g in &graphs {
            for angle in angles().into_iter().chain([Angle::ZERO, Angle::PI, Angle::new(1, 5).unwrap()]) {
                let w = Walk::new(g, angle).unwrap();
                let fast = square_supports(g, w.index(), angle).unwrap();
                assert_eq!(fast.positive, power_support(&w, 2, Polarity::Positive).unwrap(), "{:?} {}", g, angle);
                assert_eq!(fast.negative, power_support(&w, 2, Polarity::Negative).unwrap());
            }
        }
    }

    #[test]
    fn first_power_is_grover_support() {
        let g = crate::digraph::tests::example_digraph();
        for angle in angles() {
            let w = Walk::new(&g, angle).unwrap();
            for p in [Polarity::Positive, Polarity::Negative] {
                assert_eq!(power_support(&w, 1, p).unwrap(), support(&w.grover(), p));
            }
        }
    }

    #[test]
    fn grover_positive_support_on_k4() {
        let w = Walk::new(&Digraph::complete(4), Angle::ZERO).unwrap();
        let u = w.grover();
        let s = w.shift();
        let k = w.field().integer(3);
        let want = s.mul(&w.k_star_k()).unwrap().scale(&k).sub(&s).unwrap();
        let want = Support::from_fn(12, |i, j| want.get(i, j).is_one());
        assert_eq!(support(&u, Polarity::Positive), want);
        assert_eq!(support(&u, Polarity::Negative), support(&s, Polarity::Positive));
    }

    #[test]
    fn digon_free_right_angle_square_is_zero() {
        let g = Digraph::directed_cycle(3);
        let s = square_supports(&g, &ArcIndex::new(&g), Angle::RIGHT).unwrap();
        assert!(s.positive.is_zero());
        let t = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(square_supports(&t, &ArcIndex::new(&t), Angle::RIGHT).unwrap().positive.is_zero());
    }

    #[test]
    fn trace_counts() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0), (0, 2), (3, 1), (2, 1)]).unwrap();
        assert_eq!(digon_count_via_trace(&g, Angle::RIGHT).unwrap(), 2);
        assert_eq!(digon_count_via_trace(&g, Angle::new(2, 3).unwrap()).unwrap(), 2);
        assert_eq!(digon_count_via_trace(&g, Angle::new(1, 3).unwrap()).unwrap(), 6);
        for n in 4..7 {
            assert_eq!(digon_count_via_trace(&Digraph::complete(n), Angle::PI).unwrap(), n * (n - 1) / 2);
        }
        assert_eq!(digon_count_via_trace(&Digraph::complete(4), Angle::new(1, 4).unwrap()).unwrap(), 6);
    }

    #[test]
    fn square_formula_on_k4() {
        for angle in angles() {
            let w = Walk::new(&make_y(4, 4).unwrap(), angle).unwrap();
            for p in [Polarity::Positive, Polarity::Negative] {
                let r = verify_square_formula(&w, p).unwrap();
                assert!(r.hypothesis);
                assert!(r.holds(), "{} {:?}", angle, r.violations);
            }
        }
        let w = Walk::new(&Digraph::complete(4), Angle::new(1, 3).unwrap()).unwrap();
        assert_eq!(verify_square_formula(&w, Polarity::Positive).unwrap().regime, Regime::BelowRight);
    }

    #[test]
    fn negative_square_identity() {
        assert!(verify_square_negative_identity(&Digraph::complete(4)).unwrap().holds());
        assert!(verify_square_negative_identity(&Digraph::complete(5)).unwrap().holds());
        assert!(matches!(verify_square_negative_identity(&Digraph::cycle(3)), Err(Error::Precondition(_))));
        assert!(verify_square_negative_identity(&make_y(1, 4).unwrap()).is_err());
    }

    #[test]
    fn integer_grover_square_matches_exact() {
        for g in [Digraph::complete(4), make_y(1, 4).unwrap(), Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap()] {
            let w = Walk::new(&g, Angle::RIGHT).unwrap();
            let u2 = grover_square(&w);
            let s = grover_square_supports(&w);
            assert_eq!(s.positive, support(&u2, Polarity::Positive));
            assert_eq!(s.negative, support(&u2, Polarity::Negative));
        }
    }

    #[test]
    fn single_term_on_regular() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0), (0, 2), (3, 1), (2, 1)]).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        for angle in angles() {
            let w = Walk::new(&g, angle).unwrap();
            let direct = w.d_theta().mul(&w.u_theta().pow(2).unwrap()).unwrap();
            assert_eq!(single_term_square(&w), direct);
        }
    }

    #[test]
    fn support_render() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let w = Walk::new(&g, Angle::ZERO).unwrap();
        let s = support(&w.grover(), Polarity::Positive);
        assert_eq!(s.render(w.index()), "# 0->1 1->0\n0 1\n1 0\n");
    }
}
