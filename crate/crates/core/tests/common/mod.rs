#![allow(dead_code)]

use mixwalk_core::{Angle, Digraph};
use proptest::prelude::*;

/// Random digraphs on `lo..=hi` vertices from uniformly random pair digits.
pub fn digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(0u8..4, n * (n - 1) / 2).prop_map(move |d| Digraph::from_code_digits(n, &d).unwrap())
    })
}

pub fn connected_digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    digraph(lo, hi).prop_filter("weakly connected", |g| g.weakly_connected() && !g.has_no_arcs())
}

pub fn angle() -> impl Strategy<Value = Angle> {
    (1i64..=12).prop_flat_map(|q| (0..=q).prop_map(move |p| Angle::new(p, q).unwrap()))
}

pub fn table_angles() -> [Angle; 5] {
    [Angle::ZERO, Angle::new(1, 3).unwrap(), Angle::RIGHT, Angle::new(2, 3).unwrap(), Angle::PI]
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
