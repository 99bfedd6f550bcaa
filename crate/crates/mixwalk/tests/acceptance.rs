//! Acceptance battery: one PASS/FAIL line per criterion.

use std::time::Instant;

use mixwalk::tables::{compare_with_reference, compute, published_specs};
use mixwalk::verify::{self, angle, standard_angles, Report};
use mixwalk_core::scalar::{CycScalar, Field};
use mixwalk_core::{Angle, Arc, ArcIndex, Digraph, OpMatrix, Walk};

const K: [[&str; 8]; 4] = [
    ["1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1/√3", "1/√3", "0", "0", "1/√3", "0", "0"],
    ["0", "0", "0", "1/√2", "0", "0", "1/√2", "0"],
    ["0", "0", "0", "0", "1/√2", "0", "0", "1/√2"],
];

const C: [[&str; 8]; 8] = [
    ["1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "-1/3", "2/3", "0", "0", "2/3", "0", "0"],
    ["0", "2/3", "-1/3", "0", "0", "2/3", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1"],
    ["0", "2/3", "2/3", "0", "0", "-1/3", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "0"],
];

const S_THETA: [(usize, usize, &str); 8] =
    [(0, 1, "1"), (1, 0, "1"), (2, 3, "-i"), (3, 2, "i"), (4, 5, "-i"), (5, 4, "i"), (6, 7, "-i"), (7, 6, "i")];

const U_THETA: [[&str; 8]; 8] = [
    ["0", "-1/3", "2/3", "0", "0", "2/3", "0", "0"],
    ["1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "-i", "0"],
    ["0", "2/3i", "-1/3i", "0", "0", "2/3i", "0", "0"],
    ["0", "-2/3i", "-2/3i", "0", "0", "1/3i", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "i"],
    ["0", "0", "0", "0", "-i", "0", "0", "0"],
    ["0", "0", "0", "i", "0", "0", "0", "0"],
];

/// `"-2/3i"` and friends as an element of `Q(i)`.
fn entry(f: &Field, s: &str) -> CycScalar {
    let (coef, imag) = match s.strip_suffix('i') {
        Some(c) => (c, true),
        None => (s, false),
    };
    let r = match coef {
        "" => f.one(),
        "-" => f.integer(-1),
        c => match c.split_once('/') {
            Some((p, q)) => f.rational(p.parse().unwrap(), q.parse().unwrap()),
            None => f.integer(c.parse().unwrap()),
        },
    };
    if imag {
        &r * &f.zeta_pow(1)
    } else {
        r
    }
}

fn mismatches(name: &str, got: &OpMatrix, want: impl Fn(usize, usize) -> CycScalar, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let w = want(i, j);
            if got.get(i, j) != &w {
                out.push(format!("{}[{},{}] = {}, expected {}", name, i, j, got.get(i, j), w));
            }
        }
    }
    out
}

fn worked_example() -> Report {
    // Vertices v1..v4 are 0..3; arcs in the order a, a⁻¹, b, b⁻¹, c, c⁻¹, d, d⁻¹.
    let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 1), (1, 3), (3, 2)]).unwrap();
    let reps = [Arc { from: 1, to: 0 }, Arc { from: 2, to: 1 }, Arc { from: 1, to: 3 }, Arc { from: 3, to: 2 }];
    let idx = ArcIndex::with_order(&g, &reps).unwrap();
    let w = Walk::with_index(&g, idx, Angle::RIGHT).unwrap();
    let f = w.field().clone();
    let mut v = Vec::new();
    let k = w.boundary();
    for (r, row) in K.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let want = match *s {
                "0" => None,
                "1" => Some(1),
                s => Some(s.trim_start_matches("1/√").parse().unwrap()),
            };
            if k.entry(r, c) != want {
                v.push(format!("K[{},{}]: 1/sqrt of {:?}, expected {}", r, c, k.entry(r, c), s));
            }
        }
    }
    v.extend(mismatches("C", &w.coin(), |i, j| entry(&f, C[i][j]), 8));
    v.extend(mismatches(
        "S_theta",
        &w.shift_theta(),
        |i, j| S_THETA.iter().find(|e| (e.0, e.1) == (i, j)).map_or(f.zero(), |e| entry(&f, e.2)),
        8,
    ));
    v.extend(mismatches("U_theta", &w.u_theta(), |i, j| entry(&f, U_THETA[i][j]), 8));
    Report { name: "worked example", checked: 4 * 8 + 3 * 64, violations: v }
}

fn combine(name: &'static str, parts: Vec<Report>) -> Report {
    let mut r = Report { name, checked: 0, violations: Vec::new() };
    for p in parts {
        r.checked += p.checked;
        r.violations.extend(p.violations.into_iter().map(|v| format!("{}: {}", p.name, v)));
    }
    r
}

fn tables_match() -> Report {
    let specs = published_specs();
    let jobs = std::thread::available_parallelism().map_or(1, usize::from);
    let mut r = Report { name: "published tables", checked: 0, violations: Vec::new() };
    for order in 2..=5 {
        let cols = compute(order, &specs, jobs, None).unwrap();
        for (s, c) in specs.iter().zip(&cols) {
            r.checked += 7;
            r.violations.extend(compare_with_reference(s, c).unwrap());
        }
    }
    r
}

fn main() {
    let third = angle(1, 3);
    let two_thirds = angle(2, 3);
    let criteria: Vec<(usize, &str, Box<dyn Fn() -> Report>)> = vec![
        (1, "worked example reproduced exactly", Box::new(worked_example)),
        (2, "exact operator identities, orders 2-4", Box::new(|| verify::operator_identities(4, &standard_angles()).unwrap())),
        (
            3,
            "spectral mapping vs eigensolver within 1e-8",
            Box::new(move || verify::mapping_vs_direct(4, &[third, Angle::RIGHT, two_thirds], 1e-8).unwrap()),
        ),
        (
            4,
            "Y-family closed-form spectrum, n = 3..8",
            Box::new(move || verify::y_family(3..=8, &[third, Angle::RIGHT, two_thirds], 1e-8).unwrap()),
        ),
        (
            5,
            "square supports on regular digraphs",
            Box::new(|| {
                let (formula, trace) = verify::square_formula(6).unwrap();
                combine("supports", vec![formula, trace, verify::negative_square_identity(7).unwrap()])
            }),
        ),
        (
            6,
            "transpose invariance of U^(2,e) charpolys",
            Box::new(move || verify::transpose_invariance(4, &[Angle::RIGHT, two_thirds]).unwrap()),
        ),
        (7, "published tables, orders 2-5", Box::new(tables_match)),
        (8, "Y_{a,6-a} separated by U^(2,+) at 2pi/3", Box::new(|| verify::y_square_separation().unwrap())),
        (
            9,
            "invariant battery",
            Box::new(|| {
                let angles = standard_angles();
                combine(
                    "battery",
                    vec![
                        verify::digraph_invariants(4).unwrap(),
                        verify::spectral_invariants(4, &angles).unwrap(),
                        verify::support_invariants(3, &angles).unwrap(),
                        verify::mapping_vs_direct(4, &[Angle::ZERO], 1e-8).unwrap(),
                    ],
                )
            }),
        ),
    ];
    let mut failed = 0;
    for (id, what, run) in criteria {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f64();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!("criterion {}: {} - {} ({} checks, {:.1}s)", id, status, what, r.checked, secs);
        for v in r.violations.iter().take(10) {
            println!("    {}", v);
        }
        if !r.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
