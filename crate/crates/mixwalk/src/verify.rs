//! Invariant sweeps over enumerated digraphs. Each sweep counts the cases
//! it checked and lists every violation it found.

use mixwalk_core::charpoly::charpoly_exact;
use mixwalk_core::digraph::{classify_cycles, digon_cut_switch, make_y};
use mixwalk_core::eigen::{hermitian_eigenvalues, multiset_distance};
use mixwalk_core::enumerate::{canonical, enumerate_digraphs, enumerate_filtered, enumerate_regular, Functor};
use mixwalk_core::operators::{h_eta, h_tilde_float};
use mixwalk_core::scalar::Regime;
use mixwalk_core::spectrum::{spectrum_u_direct, spectrum_u_via_mapping, y_family_spectrum};
use mixwalk_core::supports::{
    digon_count_via_trace, power_support, square_supports, verify_square_formula, verify_square_negative_identity,
    Polarity,
};
use mixwalk_core::{Angle, ArcIndex, Digraph, Walk};

use crate::error::Result;

/// Outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    fn new(name: &'static str) -> Report {
        Report { name, checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.checked > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

pub fn angle(p: i64, q: i64) -> Angle {
    Angle::new(p, q).expect("valid angle")
}

/// `0, π/3, π/2, 2π/3, π`.
pub fn standard_angles() -> [Angle; 5] {
    [Angle::ZERO, angle(1, 3), Angle::RIGHT, angle(2, 3), Angle::PI]
}

fn nonempty_digraphs(orders: std::ops::RangeInclusive<usize>) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate_digraphs(n)?.into_iter().filter(|g| !g.has_no_arcs()));
    }
    Ok(out)
}

/// `KK* = I`, `C = C*`, `C² = I`, `S² = I`, `S_θ` self-adjoint and unitary,
/// `U_θ` unitary, `K S_θ K* = H̃_η`, `D_θ S_θ = S`, `D_θ U_θ = U`.
pub fn operator_identities(max_order: usize, angles: &[Angle]) -> Result<Report> {
    let mut r = Report::new("operator identities");
    for g in nonempty_digraphs(2..=max_order)? {
        for &a in angles {
            let w = Walk::new(&g, a)?;
            let tag = || format!("{:?} eta={}", g, a);
            let c = w.coin();
            let s = w.shift();
            let st = w.shift_theta();
            let u = w.u_theta();
            r.check(w.boundary().is_coisometry(), || format!("KK* != I for {}", tag()));
            r.check(c.is_self_adjoint() && c.mul(&c)?.is_identity(), || format!("C not a reflection for {}", tag()));
            r.check(s.mul(&s)?.is_identity(), || format!("S^2 != I for {}", tag()));
            r.check(st.is_self_adjoint() && st.is_unitary(), || format!("S_theta for {}", tag()));
            r.check(u.is_unitary(), || format!("U_theta not unitary for {}", tag()));
            r.check(w.boundary().conjugate(&st)? == w.h_tilde(), || format!("K S_theta K* != H~ for {}", tag()));
            r.check(w.d_theta().mul(&st)? == s, || format!("D S_theta != S for {}", tag()));
            r.check(w.d_theta().mul(&u)? == w.grover(), || format!("D U_theta != U for {}", tag()));
        }
    }
    Ok(r)
}

/// `Spec(U_θ)` from the mapping theorem against a direct complex eigensolve.
pub fn mapping_vs_direct(max_order: usize, angles: &[Angle], tol: f64) -> Result<Report> {
    let mut r = Report::new("spectral mapping");
    for g in nonempty_digraphs(2..=max_order)?.into_iter().filter(Digraph::weakly_connected) {
        for &a in angles {
            let mapped = spectrum_u_via_mapping(&g, a)?;
            let direct = spectrum_u_direct(&g, a.to_f64())?;
            let d = multiset_distance(&mapped.expanded(), &direct.expanded());
            r.check(d.is_some_and(|d| d <= tol), || format!("{:?} eta={}: distance {:?}", g, a, d));
        }
    }
    Ok(r)
}

/// `Spec(U_θ(Y_{a,n-a}))` against the closed form, through both routes.
pub fn y_family(orders: std::ops::RangeInclusive<usize>, angles: &[Angle], tol: f64) -> Result<Report> {
    let mut r = Report::new("Y-family spectrum");
    for n in orders {
        let closed = y_family_spectrum(n)?;
        let want = closed.expanded();
        for a in 0..n {
            let y = make_y(a, n)?;
            for &eta in angles {
                let mapped = spectrum_u_via_mapping(&y, eta)?;
                let tag = || format!("Y_{{{},{}}} eta={}", a, n - a, eta);
                r.check(
                    mapped.exact_multiplicity(1) == closed.exact_multiplicity(1)
                        && mapped.exact_multiplicity(-1) == closed.exact_multiplicity(-1),
                    || {
                        format!(
                            "{}: exact multiplicities ({}, {}) vs ({}, {})",
                            tag(),
                            mapped.exact_multiplicity(1),
                            mapped.exact_multiplicity(-1),
                            closed.exact_multiplicity(1),
                            closed.exact_multiplicity(-1)
                        )
                    },
                );
                let dm = multiset_distance(&mapped.expanded(), &want);
                r.check(dm.is_some_and(|d| d <= tol), || format!("{}: mapping route off by {:?}", tag(), dm));
                let direct = spectrum_u_direct(&y, eta.to_f64())?;
                let dd = multiset_distance(&direct.expanded(), &want);
                r.check(dd.is_some_and(|d| d <= tol), || format!("{}: direct route off by {:?}", tag(), dd));
            }
        }
    }
    Ok(r)
}

/// The three-regime formula for `U_θ^{(2,±)}` and the trace count on every
/// digraph of order `4..=max_order` whose underlying graph is `k`-regular, `k ≥ 3`.
pub fn square_formula(max_order: usize) -> Result<(Report, Report)> {
    let mut formula = Report::new("square support formula");
    let mut trace = Report::new("trace digon count");
    for n in 4..=max_order {
        for k in 3..n {
            for g in enumerate_regular(n, k)? {
                for eta in [angle(1, 3), Angle::RIGHT, angle(2, 3)] {
                    let w = Walk::new(&g, eta)?;
                    for p in [Polarity::Positive, Polarity::Negative] {
                        let rep = verify_square_formula(&w, p)?;
                        formula.check(rep.hypothesis && rep.holds(), || {
                            format!("{:?} eta={} {:?}: {:?}", g, eta, p, rep.violations)
                        });
                    }
                    let got = digon_count_via_trace(&g, eta)?;
                    let want = match eta.regime() {
                        Regime::BelowRight => g.edge_count(),
                        _ => g.digon_count(),
                    };
                    trace.check(got == want, || format!("{:?} eta={}: trace/2 = {}, expected {}", g, eta, got, want));
                }
            }
        }
    }
    Ok((formula, trace))
}

/// `(U²)⁻ = S U⁺ + U⁺ S` on undirected `k`-regular graphs, `k ≥ 3`.
pub fn negative_square_identity(max_order: usize) -> Result<Report> {
    let mut r = Report::new("negative square identity");
    for n in 4..=max_order {
        for k in 3..n {
            let graphs = enumerate_filtered(n, move |g, target| {
                let slack = target - g.n();
                g.is_graph() && g.degrees().iter().all(|&d| d <= k && d + slack >= k)
            })?;
            for g in graphs {
                let rep = verify_square_negative_identity(&g)?;
                r.check(rep.holds(), || format!("{:?}: {:?}", g, rep.violations));
            }
        }
    }
    Ok(r)
}

/// `U_θ^{(2,ε)}(G)` and `U_θ^{(2,ε)}(G⁻¹)` have equal characteristic
/// polynomials; `G` by definition, `G⁻¹` by the integer route.
pub fn transpose_invariance(max_order: usize, angles: &[Angle]) -> Result<Report> {
    let mut r = Report::new("transpose invariance");
    for g in nonempty_digraphs(2..=max_order)? {
        let t = g.transpose();
        for &a in angles {
            let w = Walk::new(&g, a)?;
            let fast = square_supports(&t, &ArcIndex::new(&t), a)?;
            for p in [Polarity::Positive, Polarity::Negative] {
                let direct = power_support(&w, 2, p)?;
                r.check(direct.charpoly() == fast.get(p).charpoly(), || format!("{:?} eta={} {:?}", g, a, p));
            }
        }
    }
    Ok(r)
}

/// For `n = 6`, `η = 2π/3`: `U^{(2,+)}` separates `Y_{a,6-a}`, `a = 3..=6`,
/// matches `a` with `6 - a`, while all `H_η` polynomials coincide.
pub fn y_square_separation() -> Result<Report> {
    let mut r = Report::new("Y-family square separation");
    let eta = angle(2, 3);
    let n = 6;
    let key = |a: usize, f: Functor| -> Result<String> { Ok(f.key(&make_y(a, n)?)?.expect("has arcs").0) };
    let u: Vec<String> = (0..=n).map(|a| key(a, Functor::SquarePositive(eta))).collect::<Result<_>>()?;
    let h: Vec<String> = (0..=n).map(|a| key(a, Functor::Hermitian(eta))).collect::<Result<_>>()?;
    for a in 3..=n {
        for b in a + 1..=n {
            r.check(u[a] != u[b], || format!("U2+ of Y_{{{},{}}} and Y_{{{},{}}} coincide", a, n - a, b, n - b));
        }
        r.check(u[a] == u[n - a], || format!("U2+ of Y_{{{},{}}} differs from its transpose", a, n - a));
    }
    for a in 1..=n {
        r.check(h[a] == h[0], || format!("H_eta of Y_{{{},{}}} differs from K_6", a, n - a));
    }
    Ok(r)
}

/// Digraph-level invariants: transposition, η-function antisymmetry, case
/// multiplicities against floating eigenvalues of `H̃_η`, canonical codes.
pub fn digraph_invariants(max_order: usize) -> Result<Report> {
    let mut r = Report::new("digraph invariants");
    for n in 2..=max_order {
        for g in enumerate_digraphs(n)? {
            let t = g.transpose();
            r.check(t.underlying() == g.underlying() && t.transpose() == g, || format!("transpose of {:?}", g));
            r.check(canonical(&g.relabel(&reverse(n))) == canonical(&g), || format!("canonical code of {:?}", g));
            if g.has_no_arcs() {
                continue;
            }
            let idx = ArcIndex::new(&g);
            for eta in [angle(1, 3), Angle::RIGHT, angle(2, 3)] {
                let th = mixwalk_core::EtaFunction::new(&g, &idx, eta)?;
                let tt = mixwalk_core::EtaFunction::new(&t, &idx, eta)?;
                r.check(tt == th.negated(), || format!("eta of transpose of {:?}", g));
                if g.weakly_connected() {
                    let (m1, m_1) = classify_cycles(&g, eta)?.multiplicities();
                    let ev = hermitian_eigenvalues(n, &h_tilde_float(&g, eta.to_f64()))?;
                    let c1 = ev.iter().filter(|&&x| (x - 1.0).abs() < 1e-8).count();
                    let c_1 = ev.iter().filter(|&&x| (x + 1.0).abs() < 1e-8).count();
                    r.check((m1, m_1) == (c1, c_1), || format!("{:?} eta={}: case ({}, {}) vs float ({}, {})", g, eta, m1, m_1, c1, c_1));
                }
            }
        }
    }
    Ok(r)
}

fn reverse(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// `Spec(H̃_η) ⊂ [-1, 1]`, switching preserves `H_η` polynomials, and exact
/// polynomials agree with the floating eigenvalues.
pub fn spectral_invariants(max_order: usize, angles: &[Angle]) -> Result<Report> {
    let mut r = Report::new("spectral invariants");
    for g in nonempty_digraphs(2..=max_order)? {
        let n = g.n();
        for &a in angles {
            let act = g.non_isolated().len();
            let ev = hermitian_eigenvalues(act, &h_tilde_float(&g, a.to_f64()))?;
            r.check(ev.iter().all(|x| x.abs() <= 1.0 + 1e-9), || format!("{:?} eta={}: |mu| > 1", g, a));
            let cp = charpoly_exact(&h_eta(&g, a))?;
            let roots = hermitian_eigenvalues(n, &mixwalk_core::operators::h_eta_float(&g, a.to_f64()))?;
            let re = from_roots(&roots);
            let ok = cp.to_complex().iter().zip(&re).all(|(c, w)| (c.re - w).abs() <= 1e-6 * (1.0 + w.abs()) && c.im.abs() <= 1e-9);
            r.check(ok, || format!("{:?} eta={}: charpoly vs eigenvalues", g, a));
            for mask in 1..(1u32 << n) - 1 {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if let Ok(h) = digon_cut_switch(&g, &s) {
                    r.check(charpoly_exact(&h_eta(&h, a))?.key() == cp.key(), || format!("{:?} switched at {:?} eta={}", g, s, a));
                }
            }
        }
    }
    Ok(r)
}

fn from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &x in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &v) in c.iter().enumerate() {
            next[i + 1] += v;
            next[i] -= x * v;
        }
        c = next;
    }
    c
}

/// Supports: disjointness of `±` parts for powers 1 to 3 and the first power
/// equal to the Grover support.
pub fn support_invariants(max_order: usize, angles: &[Angle]) -> Result<Report> {
    let mut r = Report::new("support invariants");
    for g in nonempty_digraphs(2..=max_order)? {
        for &a in angles {
            let w = Walk::new(&g, a)?;
            for n in 1..=3 {
                let p = power_support(&w, n, Polarity::Positive)?;
                let m = power_support(&w, n, Polarity::Negative)?;
                r.check(p.hadamard(&m).is_zero(), || format!("{:?} eta={} n={}: supports overlap", g, a, n));
                if n == 1 {
                    let u = w.grover();
                    r.check(
                        p == mixwalk_core::supports::support(&u, Polarity::Positive)
                            && m == mixwalk_core::supports::support(&u, Polarity::Negative),
                        || format!("{:?} eta={}: first power", g, a),
                    );
                }
            }
        }
    }
    Ok(r)
}

/// Every sweep at desk scale.
pub fn all() -> Result<Vec<Report>> {
    let angles = standard_angles();
    let (formula, trace) = square_formula(6)?;
    Ok(vec![
        operator_identities(4, &angles)?,
        mapping_vs_direct(4, &[angle(1, 3), Angle::RIGHT, angle(2, 3)], 1e-8)?,
        y_family(3..=8, &[angle(1, 3), Angle::RIGHT, angle(2, 3)], 1e-8)?,
        formula,
        trace,
        negative_square_identity(7)?,
        transpose_invariance(4, &[Angle::RIGHT, angle(2, 3)])?,
        y_square_separation()?,
        digraph_invariants(4)?,
        spectral_invariants(4, &angles)?,
        support_invariants(3, &angles)?,
    ])
}
