//! Floating eigensolvers: cyclic Jacobi for Hermitian matrices and a shifted
//! QR iteration for general complex ones, plus multiset helpers.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and eigenvectors (column `k` pairs with value `k`,
/// stored row-major in an `n × n` array) of a Hermitian matrix.
pub fn hermitian_eigen(n: usize, m: &[Complex64]) -> Result<(Vec<f64>, Vec<Complex64>)> {
    assert_eq!(m.len(), n * n);
    let mut a = m.to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let total: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i * n + j].norm_sqr()).sum();
        if off <= 1e-30 * total.max(f64::MIN_POSITIVE) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(n, &mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].re.total_cmp(&a[y * n + y].re));
    let values = order.iter().map(|&k| a[k * n + k].re).collect();
    let mut vectors = vec![Complex64::new(0.0, 0.0); n * n];
    for (new, &old) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + new] = v[i * n + old];
        }
    }
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(n: usize, m: &[Complex64]) -> Result<Vec<f64>> {
    hermitian_eigen(n, m).map(|(values, _)| values)
}

/// One Jacobi rotation zeroing `a[p][q]`: `J = [[c, s], [-s e^{-iφ}, c e^{-iφ}]]`
/// on the `(p, q)` plane, `A ← J*AJ`, `V ← VJ`.
fn rotate(n: usize, a: &mut [Complex64], v: &mut [Complex64], p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = (apq / r).conj();
    let (alpha, beta) = (a[p * n + p].re, a[q * n + q].re);
    let theta = 0.5 * libm::atan2(2.0 * r, beta - alpha);
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let j = [[Complex64::new(c, 0.0), Complex64::new(s, 0.0)], [-phase * s, phase * c]];
    for row in 0..n {
        let (x, y) = (a[row * n + p], a[row * n + q]);
        a[row * n + p] = x * j[0][0] + y * j[1][0];
        a[row * n + q] = x * j[0][1] + y * j[1][1];
        let (x, y) = (v[row * n + p], v[row * n + q]);
        v[row * n + p] = x * j[0][0] + y * j[1][0];
        v[row * n + q] = x * j[0][1] + y * j[1][1];
    }
    for col in 0..n {
        let (x, y) = (a[p * n + col], a[q * n + col]);
        a[p * n + col] = j[0][0].conj() * x + j[1][0].conj() * y;
        a[q * n + col] = j[0][1].conj() * x + j[1][1].conj() * y;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}

/// Eigenvalues of a general complex matrix via Hessenberg reduction and
/// Wilkinson-shifted QR steps.
pub fn general_eigenvalues(n: usize, m: &[Complex64]) -> Result<Vec<Complex64>> {
    assert_eq!(m.len(), n * n);
    let mut h = m.to_vec();
    hessenberg(n, &mut h);
    let scale = h.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let mut out = Vec::with_capacity(n);
    let mut hi = n;
    let mut iters = 0usize;
    while hi > 0 {
        let end = hi - 1;
        let mut lo = end;
        while lo > 0 {
            let sub = h[lo * n + lo - 1].norm();
            let diag = h[(lo - 1) * n + lo - 1].norm() + h[lo * n + lo].norm();
            if sub <= f64::EPSILON * diag.max(scale * 1e-3) {
                h[lo * n + lo - 1] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == end {
            out.push(h[end * n + end]);
            hi -= 1;
            iters = 0;
            continue;
        }
        iters += 1;
        if iters > 60 * n.max(1) {
            return Err(Error::NoConvergence);
        }
        let mu = if iters % 11 == 0 {
            h[end * n + end] + Complex64::new(h[end * n + end - 1].norm(), 0.0)
        } else {
            wilkinson(h[(end - 1) * n + end - 1], h[(end - 1) * n + end], h[end * n + end - 1], h[end * n + end])
        };
        qr_step(n, &mut h, lo, end, mu);
    }
    Ok(out)
}

fn wilkinson(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a + d) * 0.5;
    let disc = ((a - d) * 0.5 * ((a - d) * 0.5) + b * c).sqrt();
    let (x, y) = (half + disc, half - disc);
    if (x - d).norm() <= (y - d).norm() {
        x
    } else {
        y
    }
}

fn qr_step(n: usize, h: &mut [Complex64], lo: usize, hi: usize, mu: Complex64) {
    for k in lo..=hi {
        h[k * n + k] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (x, y) = (h[k * n + k], h[(k + 1) * n + k]);
        let r = libm::hypot(x.norm(), y.norm());
        let g = if r == 0.0 {
            [[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]]
        } else {
            [[x.conj() / r, y.conj() / r], [-y / r, x / r]]
        };
        for col in k..=hi {
            let (u, w) = (h[k * n + col], h[(k + 1) * n + col]);
            h[k * n + col] = g[0][0] * u + g[0][1] * w;
            h[(k + 1) * n + col] = g[1][0] * u + g[1][1] * w;
        }
        rots.push(g);
    }
    for (k, g) in (lo..hi).zip(&rots) {
        for row in lo..=(k + 2).min(hi) {
            let (u, w) = (h[row * n + k], h[row * n + k + 1]);
            h[row * n + k] = u * g[0][0].conj() + w * g[0][1].conj();
            h[row * n + k + 1] = u * g[1][0].conj() + w * g[1][1].conj();
        }
    }
    for k in lo..=hi {
        h[k * n + k] += mu;
    }
}

/// Householder reduction to upper Hessenberg form (similarity, in place).
fn hessenberg(n: usize, a: &mut [Complex64]) {
    for k in 0..n.saturating_sub(2) {
        let norm = libm::sqrt((k + 1..n).map(|i| a[i * n + k].norm_sqr()).sum::<f64>());
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let mut u: Vec<Complex64> = (k + 1..n).map(|i| a[i * n + k]).collect();
        u[0] += phase * norm;
        let un = libm::sqrt(u.iter().map(|z| z.norm_sqr()).sum::<f64>());
        for z in &mut u {
            *z /= un;
        }
        // A ← (I - 2uu*) A (I - 2uu*)
        for col in 0..n {
            let dot: Complex64 = u.iter().enumerate().map(|(t, z)| z.conj() * a[(k + 1 + t) * n + col]).sum();
            for (t, z) in u.iter().enumerate() {
                a[(k + 1 + t) * n + col] -= *z * dot * 2.0;
            }
        }
        for row in 0..n {
            let dot: Complex64 = u.iter().enumerate().map(|(t, z)| a[row * n + k + 1 + t] * z).sum();
            for (t, z) in u.iter().enumerate() {
                a[row * n + k + 1 + t] -= dot * z.conj() * 2.0;
            }
        }
        for i in k + 2..n {
            a[i * n + k] = Complex64::new(0.0, 0.0);
        }
    }
}

/// The two preimages `μ ± i√(1-μ²)` of `μ` under `φ(z) = (z + z⁻¹)/2`.
pub fn phi_inverse(mu: f64) -> Result<(Complex64, Complex64)> {
    if !(mu.abs() <= 1.0 + 1e-12) {
        return Err(Error::OutsideUnitInterval(mu));
    }
    let mu = mu.clamp(-1.0, 1.0);
    let im = libm::sqrt((1.0 - mu * mu).max(0.0));
    Ok((Complex64::new(mu, im), Complex64::new(mu, -im)))
}

/// Sorts complex numbers by real part, then imaginary part.
pub fn sort_complex(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Largest distance in a greedy nearest-neighbour pairing of two equal-size
/// multisets, or `None` when the sizes differ. Each element of `a` takes the
/// nearest unused element of `b`.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (k, d) = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, y)| (k, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))?;
        used[k] = true;
        worst = worst.max(d);
    }
    Some(worst)
}

/// Single-linkage clusters: values joined by a chain of steps shorter than
/// `gap` share a cluster. Returns `(representative, size)` pairs.
pub fn cluster(values: &[Complex64], gap: f64) -> Vec<(Complex64, usize)> {
    let mut rest: Vec<Complex64> = values.to_vec();
    let mut out = Vec::new();
    while let Some(seed) = rest.pop() {
        let mut members = vec![seed];
        let mut grew = true;
        while grew {
            grew = false;
            let mut k = 0;
            while k < rest.len() {
                if members.iter().any(|m| (m - rest[k]).norm() <= gap) {
                    members.push(rest.swap_remove(k));
                    grew = true;
                } else {
                    k += 1;
                }
            }
        }
        let mean = members.iter().sum::<Complex64>() / members.len() as f64;
        out.push((mean, members.len()));
    }
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    out
}
