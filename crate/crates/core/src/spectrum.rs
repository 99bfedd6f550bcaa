//! Spectra: Hermitian eigenvalues of `H_η`/`H̃_η` and `Spec(U_θ)` assembled
//! through `φ(z) = (z + z⁻¹)/2` from `Spec(H̃_η)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::digraph::{classify_cycles, Digraph};
use crate::eigen::{cluster, general_eigenvalues, hermitian_eigenvalues, phi_inverse};
use crate::matrix::OpMatrix;
use crate::operators::{h_tilde_float, u_theta_float, NormalizedHermitian, Walk};
use crate::scalar::Angle;
use crate::{ArcIndex, Error, Result};

/// Gap used to merge floating eigenvalues into one multiplicity class.
pub const CLUSTER_GAP: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Eigensolver,
    MappingTheorem,
    ClosedForm,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::Eigensolver => "eigensolver",
            Source::MappingTheorem => "mapping-theorem",
            Source::ClosedForm => "closed-form",
        }
    }
}

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Origin {
    /// Exactly `1` or `-1`.
    Exact(i8),
    /// One of `φ⁻¹(μ)` for the given `μ ∈ Spec(H̃_η)`.
    Preimage(f64),
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: Complex64,
    pub mult: usize,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSummary {
    pub eigs: Vec<Eigenvalue>,
    pub source: Source,
}

impl SpectrumSummary {
    /// Clusters raw floating eigenvalues.
    pub fn from_values(values: &[Complex64], source: Source) -> SpectrumSummary {
        let eigs = cluster(values, CLUSTER_GAP)
            .into_iter()
            .map(|(value, mult)| Eigenvalue { value, mult, origin: Origin::Float })
            .collect();
        SpectrumSummary { eigs, source }
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.eigs.iter().map(|e| e.mult).sum()
    }

    /// Every eigenvalue repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.eigs.iter().flat_map(|e| core::iter::repeat(e.value).take(e.mult)).collect()
    }

    /// Multiplicity of the exact eigenvalue `±1`.
    pub fn exact_multiplicity(&self, sign: i8) -> usize {
        self.eigs.iter().filter(|e| e.origin == Origin::Exact(sign)).map(|e| e.mult).sum()
    }
}

/// Eigenvalues of an exactly self-adjoint matrix, ascending.
pub fn eig_hermitian(m: &OpMatrix) -> Result<Vec<f64>> {
    if !m.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    hermitian_eigenvalues(m.rows().dim, &m.to_complex())
}

/// Eigenvalues of `D^{-1/2} H D^{-1/2}`, ascending.
pub fn eig_normalized(h: &NormalizedHermitian) -> Result<Vec<f64>> {
    if !h.h.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    hermitian_eigenvalues(h.degrees.len(), &h.to_complex())
}

/// `Spec(U_θ) = φ⁻¹(Spec(H̃_η)) ∪ {1}^{M₁} ∪ {-1}^{M₋₁}` with
/// `M_ε = max(0, |E| - |V| + m_ε)` and `m_{±1}` from the closed-path case.
///
/// `φ⁻¹(±1)` contributes the single value `±1`; other `μ` give both
/// `μ ± i√(1-μ²)`. The `m₁` largest and `m₋₁` smallest eigenvalues of `H̃_η`
/// are taken to be exactly `1` and `-1`.
pub fn spectrum_u_via_mapping(g: &Digraph, angle: Angle) -> Result<SpectrumSummary> {
    let class = classify_cycles(g, angle)?;
    let (m1, m_1) = class.multiplicities();
    let mut mu = hermitian_eigenvalues(g.n(), &h_tilde_float(g, angle.to_f64()))?;
    let n = mu.len();
    if m1 + m_1 > n {
        return Err(Error::Precondition("more ±1 eigenvalues than vertices".into()));
    }
    mu.drain(n - m1..);
    mu.drain(..m_1);
    let edges = g.edge_count() as i64;
    let big = |m: usize| (edges - g.n() as i64 + m as i64).max(0) as usize;
    let mut eigs = Vec::new();
    if m1 + big(m1) > 0 {
        eigs.push(Eigenvalue { value: Complex64::new(1.0, 0.0), mult: m1 + big(m1), origin: Origin::Exact(1) });
    }
    if m_1 + big(m_1) > 0 {
        eigs.push(Eigenvalue { value: Complex64::new(-1.0, 0.0), mult: m_1 + big(m_1), origin: Origin::Exact(-1) });
    }
    let classes = cluster(&mu.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>(), CLUSTER_GAP);
    for (value, mult) in classes {
        let (up, down) = phi_inverse(value.re)?;
        for z in [up, down] {
            eigs.push(Eigenvalue { value: z, mult, origin: Origin::Preimage(value.re) });
        }
    }
    Ok(SpectrumSummary { eigs, source: Source::MappingTheorem })
}

/// `Spec(U_θ)` by a general complex eigensolve of the floating matrix, for
/// any real η.
pub fn spectrum_u_direct(g: &Digraph, eta: f64) -> Result<SpectrumSummary> {
    if g.has_no_arcs() {
        return Err(Error::NoArcs);
    }
    let index = ArcIndex::new(g);
    let u = u_theta_float(g, &index, eta);
    let values = general_eigenvalues(index.len(), &u)?;
    Ok(SpectrumSummary::from_values(&values, Source::Eigensolver))
}

/// `Spec(U_θ(Y_{a,n-a}))` in closed form: `1` with multiplicity
/// `n(n-1)/2 - n + 2`, `-1` with `n(n-1)/2 - n`, and `φ⁻¹(-1/(n-1))` with
/// multiplicity `n - 1` each.
pub fn y_family_spectrum(n: usize) -> Result<SpectrumSummary> {
    if n < 3 {
        return Err(Error::OrderOutOfRange { n, min: 3, max: usize::MAX });
    }
    let e = n * (n - 1) / 2;
    let mu = -1.0 / (n as f64 - 1.0);
    let (up, down) = phi_inverse(mu)?;
    let eigs = alloc::vec![
        Eigenvalue { value: Complex64::new(1.0, 0.0), mult: e - n + 2, origin: Origin::Exact(1) },
        Eigenvalue { value: Complex64::new(-1.0, 0.0), mult: e - n, origin: Origin::Exact(-1) },
        Eigenvalue { value: up, mult: n - 1, origin: Origin::Preimage(mu) },
        Eigenvalue { value: down, mult: n - 1, origin: Origin::Preimage(mu) },
    ];
    Ok(SpectrumSummary { eigs, source: Source::ClosedForm })
}

/// Exact `Spec(H̃_η)` check helper: floating eigenvalues of `H̃_η` for a walk.
pub fn h_tilde_eigenvalues(w: &Walk) -> Result<Vec<f64>> {
    eig_normalized(&w.h_tilde())
}
