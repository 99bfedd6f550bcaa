//! The operators of the walk, built exactly over `Q(ζ_{2q})`.
//!
//! `K` has entries `1/√deg t(a)`, which leave the field, so it is kept as
//! `D^{-1/2} K̂` with `K̂` the 0/1 incidence of arc heads. Every product the walk
//! needs (`K*K`, `K S_θ K*`, `KK*`) is then expressed through `K̂` and rational
//! degree factors.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::digraph::{ArcIndex, Digraph, EtaFunction};
use crate::matrix::{IndexSpace, OpMatrix};
use crate::scalar::{Angle, CycScalar, Field};
use crate::{Error, Result};

/// A digraph with its arc order, η-function and coefficient field.
#[derive(Debug, Clone)]
pub struct Walk {
    graph: Digraph,
    index: ArcIndex,
    eta: EtaFunction,
    field: Field,
    degrees: Vec<usize>,
    active: Vec<usize>,
}

impl Walk {
    /// Uses the default arc order. Digraphs without arcs are rejected.
    pub fn new(g: &Digraph, angle: Angle) -> Result<Walk> {
        Walk::with_index(g, ArcIndex::new(g), angle)
    }

    pub fn with_index(g: &Digraph, index: ArcIndex, angle: Angle) -> Result<Walk> {
        if g.has_no_arcs() {
            return Err(Error::NoArcs);
        }
        let eta = EtaFunction::new(g, &index, angle)?;
        let degrees = g.degrees();
        let active = g.non_isolated();
        Ok(Walk { graph: g.clone(), index, eta, field: angle.field(), degrees, active })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn index(&self) -> &ArcIndex {
        &self.index
    }

    pub fn eta(&self) -> &EtaFunction {
        &self.eta
    }

    pub fn angle(&self) -> Angle {
        self.eta.angle()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `deg(v)` for every vertex, isolated ones included.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Vertices of positive degree; the row index of `K` and `H̃_η`.
    pub fn active_vertices(&self) -> &[usize] {
        &self.active
    }

    pub fn arc_space(&self) -> IndexSpace {
        IndexSpace::arc(self.index.len())
    }

    pub fn vertex_space(&self) -> IndexSpace {
        IndexSpace::vertex(self.graph.n())
    }

    pub fn active_space(&self) -> IndexSpace {
        IndexSpace::vertex(self.active.len())
    }

    fn deg_head(&self, a: usize) -> usize {
        self.degrees[self.index.terminus(a)]
    }

    pub fn boundary(&self) -> Boundary {
        let arcs = self.arc_space();
        let rows = self.active_space();
        let k_hat = OpMatrix::from_fn(rows, arcs, &self.field, |i, a| {
            self.field.integer((self.active[i] == self.index.terminus(a)) as i64)
        });
        let degrees = self.active.iter().map(|&v| self.degrees[v]).collect();
        Boundary { k_hat, degrees }
    }

    /// `K*K`, with entries `δ_{t(a),t(b)} / deg t(a)`.
    pub fn k_star_k(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| {
            if self.index.terminus(a) == self.index.terminus(b) {
                self.field.rational(1, self.deg_head(a) as i64)
            } else {
                self.field.zero()
            }
        })
    }

    /// The Grover coin `C = 2K*K - I`.
    pub fn coin(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| {
            let two = if self.index.terminus(a) == self.index.terminus(b) {
                self.field.rational(2, self.deg_head(a) as i64)
            } else {
                self.field.zero()
            };
            if a == b {
                two - self.field.one()
            } else {
                two
            }
        })
    }

    /// The plain shift `S_{ab} = δ_{a,b⁻¹}`.
    pub fn shift(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| self.field.integer((a == self.index.inverse(b)) as i64))
    }

    /// `(S_θ)_{ab} = e^{θ(b)i} δ_{a,b⁻¹}`.
    pub fn shift_theta(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| {
            if a == self.index.inverse(b) {
                self.eta.phase(b, &self.field)
            } else {
                self.field.zero()
            }
        })
    }

    /// `(D_θ)_{ab} = e^{θ(a)i} δ_{ab}`.
    pub fn d_theta(&self) -> OpMatrix {
        let phases: Vec<CycScalar> = (0..self.index.len()).map(|a| self.eta.phase(a, &self.field)).collect();
        OpMatrix::diagonal(self.arc_space(), &self.field, &phases)
    }

    /// `D_θ⁻¹ = D_θ*`.
    pub fn d_theta_inv(&self) -> OpMatrix {
        self.d_theta().adjoint()
    }

    /// The transfer matrix `U_θ = S_θ C`.
    pub fn u_theta(&self) -> OpMatrix {
        self.shift_theta().mul(&self.coin()).expect("arc spaces agree")
    }

    /// The Grover transfer matrix of `G^±`:
    /// `U_{ab} = 2/deg t(b) · δ_{t(b),o(a)} - δ_{a⁻¹,b}`.
    pub fn grover(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| {
            let two = if self.index.terminus(b) == self.index.origin(a) {
                self.field.rational(2, self.deg_head(b) as i64)
            } else {
                self.field.zero()
            };
            if b == self.index.inverse(a) {
                two - self.field.one()
            } else {
                two
            }
        })
    }

    /// The η-Hermitian adjacency matrix on all vertices.
    pub fn h_eta(&self) -> OpMatrix {
        h_eta(&self.graph, self.angle())
    }

    /// `H_η` restricted to the active vertices; equals `K̂ S_θ K̂ᵀ`.
    pub fn h_eta_active(&self) -> OpMatrix {
        let full = self.h_eta();
        OpMatrix::from_fn(self.active_space(), self.active_space(), &self.field, |i, j| {
            full.get(self.active[i], self.active[j]).clone()
        })
    }

    /// `H̃_η = D^{-1/2} H_η D^{-1/2}` on the active vertices.
    pub fn h_tilde(&self) -> NormalizedHermitian {
        NormalizedHermitian {
            h: self.h_eta_active(),
            degrees: self.active.iter().map(|&v| self.degrees[v]).collect(),
        }
    }

    /// `(F_t)_{x,a} = δ_{x,t(a)}` over all vertices.
    pub fn f_t(&self) -> OpMatrix {
        OpMatrix::from_fn(self.vertex_space(), self.arc_space(), &self.field, |x, a| {
            self.field.integer((self.index.terminus(a) == x) as i64)
        })
    }

    /// `(F_o)_{x,a} = δ_{x,o(a)}` over all vertices.
    pub fn f_o(&self) -> OpMatrix {
        OpMatrix::from_fn(self.vertex_space(), self.arc_space(), &self.field, |x, a| {
            self.field.integer((self.index.origin(a) == x) as i64)
        })
    }

    /// `R_{ab} = 1` iff `m(a,b) = (t(b), o(a))` is an arc lying in a digon.
    pub fn digon_locator(&self) -> OpMatrix {
        let s = self.arc_space();
        OpMatrix::from_fn(s, s, &self.field, |a, b| {
            self.field.integer(self.graph.is_digon(self.index.terminus(b), self.index.origin(a)) as i64)
        })
    }

    pub fn identity(&self) -> OpMatrix {
        OpMatrix::identity(self.arc_space(), &self.field)
    }

    pub fn ones(&self) -> OpMatrix {
        OpMatrix::ones(self.arc_space(), &self.field)
    }

    /// The diagonal degree matrix on all vertices.
    pub fn degree_matrix(&self) -> OpMatrix {
        let d: Vec<CycScalar> = self.degrees.iter().map(|&k| self.field.integer(k as i64)).collect();
        OpMatrix::diagonal(self.vertex_space(), &self.field, &d)
    }

    /// Floating `U_θ` for an arbitrary real η, with the same arc order.
    pub fn u_theta_float(&self, eta: f64) -> Vec<Complex64> {
        u_theta_float(&self.graph, &self.index, eta)
    }
}

/// `(H_η)_{xy}`: 1 on digons, `e^{iη}` on `x→y` alone, `e^{-iη}` on `y→x` alone.
pub fn h_eta(g: &Digraph, angle: Angle) -> OpMatrix {
    let field = angle.field();
    let root = field.root(angle);
    let root_conj = root.conj();
    let s = IndexSpace::vertex(g.n());
    OpMatrix::from_fn(s, s, &field, |x, y| match (g.has_arc(x, y), g.has_arc(y, x)) {
        (true, true) => field.one(),
        (true, false) => root.clone(),
        (false, true) => root_conj.clone(),
        (false, false) => field.zero(),
    })
}

/// Floating `H_η` for an arbitrary real η.
pub fn h_eta_float(g: &Digraph, eta: f64) -> Vec<Complex64> {
    let n = g.n();
    let w = Complex64::from_polar(1.0, eta);
    let mut m = alloc::vec![Complex64::new(0.0, 0.0); n * n];
    for x in 0..n {
        for y in 0..n {
            m[x * n + y] = match (g.has_arc(x, y), g.has_arc(y, x)) {
                (true, true) => Complex64::new(1.0, 0.0),
                (true, false) => w,
                (false, true) => w.conj(),
                (false, false) => Complex64::new(0.0, 0.0),
            };
        }
    }
    m
}

/// Floating `H̃_η` on the vertices of positive degree.
pub fn h_tilde_float(g: &Digraph, eta: f64) -> Vec<Complex64> {
    let full = h_eta_float(g, eta);
    let deg = g.degrees();
    let act = g.non_isolated();
    let (n, k) = (g.n(), act.len());
    let mut m = alloc::vec![Complex64::new(0.0, 0.0); k * k];
    for (i, &x) in act.iter().enumerate() {
        for (j, &y) in act.iter().enumerate() {
            m[i * k + j] = full[x * n + y] / libm::sqrt((deg[x] * deg[y]) as f64);
        }
    }
    m
}

/// Floating `U_θ = S_θ C` for an arbitrary real η.
pub fn u_theta_float(g: &Digraph, index: &ArcIndex, eta: f64) -> Vec<Complex64> {
    let deg = g.degrees();
    let m = index.len();
    let mut u = alloc::vec![Complex64::new(0.0, 0.0); m * m];
    for a in 0..m {
        // Row a of S_θ picks b = a⁻¹ with phase e^{iθ(a⁻¹)}.
        let b = index.inverse(a);
        let sign = g.has_arc(index.origin(b), index.terminus(b)) as i32 - g.has_arc(index.terminus(b), index.origin(b)) as i32;
        let phase = Complex64::from_polar(1.0, eta * sign as f64);
        let k = deg[index.terminus(b)] as f64;
        for c in 0..m {
            let mut coin = if index.terminus(c) == index.terminus(b) { 2.0 / k } else { 0.0 };
            if c == b {
                coin -= 1.0;
            }
            u[a * m + c] = phase * coin;
        }
    }
    u
}

/// `K = D^{-1/2} K̂` with rows on the active vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    k_hat: OpMatrix,
    degrees: Vec<usize>,
}

impl Boundary {
    /// The 0/1 matrix `K̂_{v,a} = δ_{v,t(a)}`.
    pub fn k_hat(&self) -> &OpMatrix {
        &self.k_hat
    }

    /// Row degrees: `K_{v,a} = K̂_{v,a} / √deg(v)`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `Some(d)` when `K_{v,a} = 1/√d`, `None` when zero.
    pub fn entry(&self, v: usize, a: usize) -> Option<usize> {
        if self.k_hat.get(v, a).is_zero() {
            None
        } else {
            Some(self.degrees[v])
        }
    }

    /// `KK* = I`, checked as `K̂K̂ᵀ = D`.
    pub fn is_coisometry(&self) -> bool {
        let p = self.k_hat.mul(&self.k_hat.transpose()).expect("arc spaces agree");
        (0..self.degrees.len()).all(|i| {
            (0..self.degrees.len()).all(|j| {
                let want = if i == j { self.degrees[i] as i64 } else { 0 };
                *p.get(i, j) == p.field().integer(want)
            })
        })
    }

    /// `K*K = K̂ᵀ D⁻¹ K̂`.
    pub fn k_star_k(&self) -> OpMatrix {
        let f = self.k_hat.field().clone();
        let dinv: Vec<CycScalar> = self.degrees.iter().map(|&d| f.rational(1, d as i64)).collect();
        let d = OpMatrix::diagonal(self.k_hat.rows(), &f, &dinv);
        let t = self.k_hat.transpose();
        t.mul(&d).and_then(|x| x.mul(&self.k_hat)).expect("spaces agree")
    }

    /// `K X K*` for an arc operator `X`, as the pair `(K̂ X K̂ᵀ, degrees)`.
    pub fn conjugate(&self, x: &OpMatrix) -> Result<NormalizedHermitian> {
        let h = self.k_hat.mul(x)?.mul(&self.k_hat.transpose())?;
        Ok(NormalizedHermitian { h, degrees: self.degrees.clone() })
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        let cols = self.k_hat.cols().dim;
        let mut out = self.k_hat.to_complex();
        for (i, &d) in self.degrees.iter().enumerate() {
            let s = 1.0 / libm::sqrt(d as f64);
            for z in &mut out[i * cols..(i + 1) * cols] {
                *z *= s;
            }
        }
        out
    }

    /// Entries as `0`, `1` or `1/sqrt(d)`.
    pub fn render(&self) -> alloc::string::String {
        let mut out = alloc::string::String::new();
        for v in 0..self.degrees.len() {
            for a in 0..self.k_hat.cols().dim {
                if a > 0 {
                    out.push_str(" | ");
                }
                match self.entry(v, a) {
                    None => out.push('0'),
                    Some(1) => out.push('1'),
                    Some(d) => out.push_str(&alloc::format!("1/sqrt({})", d)),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `D^{-1/2} H D^{-1/2}` stored as `(H, D)` so that it stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedHermitian {
    pub h: OpMatrix,
    pub degrees: Vec<usize>,
}

impl NormalizedHermitian {
    /// `D⁻¹ H`, which is similar to `D^{-1/2} H D^{-1/2}`.
    pub fn similar_form(&self) -> OpMatrix {
        let f = self.h.field().clone();
        OpMatrix::from_fn(self.h.rows(), self.h.cols(), &f, |i, j| {
            self.h.get(i, j) * &f.rational(1, self.degrees[i] as i64)
        })
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        let n = self.degrees.len();
        let mut m = self.h.to_complex();
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] /= libm::sqrt((self.degrees[i] * self.degrees[j]) as f64);
            }
        }
        m
    }
}
