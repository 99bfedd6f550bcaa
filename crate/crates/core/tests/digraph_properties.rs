mod common;

use common::{angle, connected_digraph, digraph};
use mixwalk_core::digraph::{classify_cycles, digon_cut_switch, make_y};
use mixwalk_core::eigen::hermitian_eigenvalues;
use mixwalk_core::enumerate::canonical;
use mixwalk_core::operators::h_tilde_float;
use mixwalk_core::{ArcIndex, Digraph, EtaFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn transpose_keeps_underlying(g in digraph(1, 8)) {
        prop_assert_eq!(g.transpose().underlying(), g.underlying());
        prop_assert_eq!(g.transpose().transpose(), g.clone());
        prop_assert!(g.underlying().is_graph());
        prop_assert_eq!(g.transpose().digon_count(), g.digon_count());
    }

    #[test]
    fn transpose_negates_eta(g in digraph(2, 7), angle in angle()) {
        prop_assume!(!g.has_no_arcs());
        let idx = ArcIndex::new(&g);
        let t = EtaFunction::new(&g, &idx, angle).unwrap();
        let s = EtaFunction::new(&g.transpose(), &idx, angle).unwrap();
        prop_assert_eq!(s, t.negated());
        for i in 0..idx.len() {
            prop_assert_eq!(t.sign(i) + t.sign(idx.inverse(i)), 0);
            prop_assert_eq!(t.sign(i) == 0, g.is_digon(idx.origin(i), idx.terminus(i)));
        }
    }

    #[test]
    fn code_round_trip(g in digraph(1, 9)) {
        prop_assert_eq!(Digraph::from_code(&g.code()).unwrap(), g.clone());
        prop_assert_eq!(Digraph::from_code(&format!("{}:{}", g.n(), g.code())).unwrap(), g);
    }

    #[test]
    fn switching_preserves_underlying_and_arcs_outside_the_cut(g in digraph(2, 7), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let crossing_one_way = g.arcs().any(|a| s.contains(&a.from) != s.contains(&a.to) && !g.is_digon(a.from, a.to));
        match digon_cut_switch(&g, &s) {
            Ok(h) => {
                prop_assert!(!crossing_one_way);
                prop_assert_eq!(h.underlying(), g.underlying());
                for a in g.arcs() {
                    if s.contains(&a.from) == s.contains(&a.to) {
                        prop_assert!(h.has_arc(a.from, a.to));
                    }
                }
            }
            Err(_) => prop_assert!(crossing_one_way),
        }
    }

    #[test]
    fn cycle_multiplicities_match_float_eigenvalues(g in connected_digraph(2, 6), angle in angle()) {
        let (m1, m_1) = classify_cycles(&g, angle).unwrap().multiplicities();
        let ev = hermitian_eigenvalues(g.non_isolated().len(), &h_tilde_float(&g, angle.to_f64())).unwrap();
        prop_assert_eq!(ev.iter().filter(|&&x| (x - 1.0).abs() < 1e-8).count(), m1);
        prop_assert_eq!(ev.iter().filter(|&&x| (x + 1.0).abs() < 1e-8).count(), m_1);
    }
}

#[test]
fn switching_chain_builds_the_y_family() {
    for n in 2..=7 {
        assert_eq!(make_y(n, n).unwrap(), Digraph::complete(n));
        assert_eq!(make_y(0, n).unwrap(), Digraph::complete(n));
        for a in 0..=n {
            let lower: Vec<usize> = (a..n).collect();
            assert_eq!(digon_cut_switch(&Digraph::complete(n), &lower).unwrap(), make_y(a, n).unwrap());
        }
        // Y_{a,n-a} transposed is Y_{n-a,a} up to relabeling.
        for a in 0..=n {
            let y = make_y(a, n).unwrap();
            assert_eq!(canonical(&y.transpose()), canonical(&make_y(n - a, n).unwrap()));
        }
    }
}

#[test]
fn y_digon_counts() {
    for n in 2usize..=8 {
        for a in 0..=n {
            let d = a * a.saturating_sub(1) / 2 + (n - a) * (n - a).saturating_sub(1) / 2;
            assert_eq!(make_y(a, n).unwrap().digon_count(), d);
        }
    }
}
