//! Canonical codes by branch and bound over vertex orders.

use alloc::string::String;
use core::fmt;

use crate::digraph::Digraph;

/// Largest order whose codes fit the packed representation.
pub const MAX_CANONICAL_ORDER: usize = 10;

/// The least compact code over all relabelings, packed two bits per digit with
/// the first digit highest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    packed: u128,
}

impl CanonicalCode {
    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn packed(self) -> u128 {
        self.packed
    }

    pub fn digits(self) -> impl Iterator<Item = u8> {
        let pairs = crate::digraph::pair_count(self.n as usize);
        (0..pairs).map(move |k| ((self.packed >> (2 * (pairs - 1 - k))) & 3) as u8)
    }

    pub fn to_digraph(self) -> Digraph {
        let digits: alloc::vec::Vec<u8> = self.digits().collect();
        Digraph::from_code_digits(self.n as usize, &digits).expect("valid code")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.digits().map(|d| char::from(b'0' + d)).collect();
        f.write_str(&s)
    }
}

struct Search {
    n: usize,
    dig: [[u8; MAX_CANONICAL_ORDER]; MAX_CANONICAL_ORDER],
    perm: [usize; MAX_CANONICAL_ORDER],
    best: [u128; MAX_CANONICAL_ORDER],
    best_perm: [usize; MAX_CANONICAL_ORDER],
}

const UNSET: u128 = u128::MAX;

impl Search {
    fn new(g: &Digraph) -> Search {
        let n = g.n();
        assert!(n <= MAX_CANONICAL_ORDER, "canonical form supports at most {} vertices", MAX_CANONICAL_ORDER);
        let mut dig = [[0u8; MAX_CANONICAL_ORDER]; MAX_CANONICAL_ORDER];
        for (u, row) in dig.iter_mut().enumerate().take(n) {
            for (v, d) in row.iter_mut().enumerate().take(n) {
                if u != v {
                    *d = g.has_arc(u, v) as u8 | (g.has_arc(v, u) as u8) << 1;
                }
            }
        }
        Search { n, dig, perm: [0; MAX_CANONICAL_ORDER], best: [UNSET; MAX_CANONICAL_ORDER], best_perm: [0; MAX_CANONICAL_ORDER] }
    }

    /// Column `j` of the relabeled code given `perm[..=j]`.
    fn column(&self, j: usize) -> u128 {
        let v = self.perm[j];
        (0..j).fold(0, |acc, i| acc << 2 | self.dig[self.perm[i]][v] as u128)
    }

    fn minimize(&mut self, j: usize, used: u16) {
        if j == self.n {
            self.best_perm = self.perm;
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            self.perm[j] = v;
            let col = self.column(j);
            if col > self.best[j] {
                continue;
            }
            if col < self.best[j] {
                self.best[j] = col;
                self.best[j + 1..self.n].fill(UNSET);
            }
            self.minimize(j + 1, used | 1 << v);
        }
    }

    /// Whether some relabeling beats the columns in `best`.
    fn beaten(&mut self, j: usize, used: u16) -> bool {
        if j == self.n {
            return false;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            self.perm[j] = v;
            let col = self.column(j);
            if col < self.best[j] {
                return true;
            }
            if col == self.best[j] && self.beaten(j + 1, used | 1 << v) {
                return true;
            }
        }
        false
    }

    fn pack(&self) -> u128 {
        (1..self.n).fold(0, |acc, j| acc << (2 * j) | self.best[j])
    }
}

/// The canonical code of `g`.
pub fn canonical(g: &Digraph) -> CanonicalCode {
    let mut s = Search::new(g);
    if s.n > 0 {
        s.best[0] = 0;
        s.minimize(0, 0);
    }
    CanonicalCode { n: s.n as u8, packed: s.pack() }
}

/// The relabeling of `g` whose code is canonical.
pub fn canonical_form(g: &Digraph) -> Digraph {
    let mut s = Search::new(g);
    if s.n == 0 {
        return g.clone();
    }
    s.best[0] = 0;
    s.minimize(0, 0);
    // best_perm[i] is the old vertex placed at position i.
    let mut relabel = [0usize; MAX_CANONICAL_ORDER];
    for (new, &old) in s.best_perm[..s.n].iter().enumerate() {
        relabel[old] = new;
    }
    g.relabel(&relabel[..s.n])
}

/// Whether `g`'s own code is its canonical code.
pub fn is_canonical(g: &Digraph) -> bool {
    let mut s = Search::new(g);
    for j in 0..s.n {
        s.perm[j] = j;
        s.best[j] = s.column(j);
    }
    !s.beaten(0, 0)
}
