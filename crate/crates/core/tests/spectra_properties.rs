mod common;

use common::{angle, connected_digraph, digraph};
use mixwalk_core::charpoly::{charpoly_exact, CharPoly};
use mixwalk_core::digraph::{digon_cut_switch, make_y};
use mixwalk_core::eigen::{hermitian_eigenvalues, multiset_distance};
use mixwalk_core::operators::{h_eta, h_eta_float, h_tilde_float};
use mixwalk_core::spectrum::{spectrum_u_direct, spectrum_u_via_mapping, Source};
use mixwalk_core::{Angle, Digraph, Error};
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

/// Coefficients of `Π(x - r)`, constant term first.
fn from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            next[i + 1] += x;
            next[i] -= r * x;
        }
        c = next;
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn mapping_route_matches_direct_eigenvalues(g in connected_digraph(2, 5), angle in angle()) {
        let mapped = spectrum_u_via_mapping(&g, angle).unwrap();
        prop_assert_eq!(mapped.source, Source::MappingTheorem);
        prop_assert_eq!(mapped.total(), 2 * g.edge_count());
        let direct = spectrum_u_direct(&g, angle.to_f64()).unwrap();
        for z in direct.expanded() {
            prop_assert!((z.norm() - 1.0).abs() < 1e-9);
        }
        let d = multiset_distance(&mapped.expanded(), &direct.expanded()).unwrap();
        prop_assert!(d < 1e-8, "distance {}", d);
    }

    #[test]
    fn discriminant_spectrum_in_unit_interval(g in digraph(2, 7), angle in angle()) {
        prop_assume!(!g.has_no_arcs());
        let ev = hermitian_eigenvalues(g.non_isolated().len(), &h_tilde_float(&g, angle.to_f64())).unwrap();
        prop_assert!(ev.iter().all(|x| x.abs() <= 1.0 + 1e-9));
    }

    #[test]
    fn digon_cut_switching_keeps_h_spectrum(g in digraph(2, 6), mask in any::<u8>(), angle in angle()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        // Make the cut all-digon by completing crossing arcs.
        let mut g = g;
        for a in g.clone().arcs() {
            if s.contains(&a.from) != s.contains(&a.to) {
                g.add_arc(a.to, a.from);
            }
        }
        let h = digon_cut_switch(&g, &s).unwrap();
        prop_assert_eq!(charpoly_exact(&h_eta(&g, angle)).unwrap(), charpoly_exact(&h_eta(&h, angle)).unwrap());
    }

    #[test]
    fn exact_charpoly_matches_eigenvalues(g in digraph(2, 12), angle in angle()) {
        let cp = charpoly_exact(&h_eta(&g, angle)).unwrap();
        prop_assert!(cp.is_real());
        prop_assert_eq!(cp.degree(), g.n());
        let ev = hermitian_eigenvalues(g.n(), &h_eta_float(&g, angle.to_f64())).unwrap();
        let want = from_roots(&ev);
        for (c, w) in cp.to_complex().iter().zip(&want) {
            prop_assert!((c - Complex64::new(*w, 0.0)).norm() < 1e-6 * (1.0 + w.abs()), "{} vs {}", c, w);
        }
    }
}

#[test]
fn disconnected_input_is_rejected_by_the_mapping_route() {
    let g = Digraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(spectrum_u_via_mapping(&g, Angle::RIGHT), Err(Error::Disconnected { .. })));
}

#[test]
fn complete_graph_hermitian_charpoly() {
    let cp = charpoly_exact(&h_eta(&Digraph::complete(3), Angle::RIGHT)).unwrap();
    let z = |v: &[i64]| CharPoly::Integer(v.iter().map(|&x| BigInt::from(x)).collect());
    assert_eq!(cp, z(&[-2, -3, 0, 1]));
    assert_eq!(charpoly_exact(&h_eta(&make_y(2, 3).unwrap(), Angle::RIGHT)).unwrap(), cp);
    let path = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
    let a = |g: &Digraph| {
        charpoly_exact(&mixwalk_core::OpMatrix::from_integers(
            mixwalk_core::IndexSpace::vertex(3),
            mixwalk_core::IndexSpace::vertex(3),
            &mixwalk_core::scalar::Field::rationals(),
            &g.adjacency(),
        ))
        .unwrap()
    };
    assert_eq!(a(&path), z(&[0, -2, 0, 1]));
    assert_ne!(a(&path).key(), a(&Digraph::complete(3)).key());
}
