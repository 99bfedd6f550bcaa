//! Compact base-4 codes.
//!
//! Pairs `i < j` are listed column by column: `(0,1), (0,2), (1,2), (0,3), …`.
//! Each digit is `0` (no arc), `1` (`i→j` only), `2` (`j→i` only) or `3` (digon).
//! The code of a digraph on `n` vertices extends the code of its restriction
//! to the first `n - 1` vertices.

use alloc::string::String;
use alloc::vec::Vec;

use super::Digraph;
use crate::{Error, Result};

/// `n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The pairs `(i, j)`, `i < j`, in code order.
pub fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

impl Digraph {
    /// Digit for the pair `i < j`.
    pub fn pair_digit(&self, i: usize, j: usize) -> u8 {
        self.has_arc(i, j) as u8 | (self.has_arc(j, i) as u8) << 1
    }

    pub fn code_digits(&self) -> Vec<u8> {
        pair_order(self.n).map(|(i, j)| self.pair_digit(i, j)).collect()
    }

    /// The compact code as a string of digits `0..=3`.
    pub fn code(&self) -> String {
        self.code_digits().iter().map(|&d| char::from(b'0' + d)).collect()
    }

    pub fn from_code_digits(n: usize, digits: &[u8]) -> Result<Digraph> {
        if digits.len() != pair_count(n) {
            return Err(Error::BadCode(alloc::format!(
                "{} digits given, {} expected for {} vertices",
                digits.len(),
                pair_count(n),
                n
            )));
        }
        let mut g = Digraph::empty(n);
        for ((i, j), &d) in pair_order(n).zip(digits) {
            if d > 3 {
                return Err(Error::BadCode(alloc::format!("digit {} out of range", d)));
            }
            if d & 1 == 1 {
                g.add_arc(i, j);
            }
            if d & 2 == 2 {
                g.add_arc(j, i);
            }
        }
        Ok(g)
    }

    /// Parses `digits` or `n:digits`. Without a prefix the vertex count is
    /// recovered from the length; the empty code is the single vertex.
    pub fn from_code(s: &str) -> Result<Digraph> {
        let s = s.trim();
        let (n, body) = match s.split_once(':') {
            Some((n, body)) => {
                let n: usize =
                    n.trim().parse().map_err(|_| Error::BadCode(alloc::format!("bad vertex count {:?}", n)))?;
                if n > super::MAX_VERTICES {
                    return Err(Error::OrderOutOfRange { n, min: 0, max: super::MAX_VERTICES });
                }
                (n, body.trim())
            }
            None => {
                let len = s.len();
                let n = (1..=super::MAX_VERTICES)
                    .find(|&n| pair_count(n) == len)
                    .ok_or_else(|| Error::BadCode(alloc::format!("length {} is not n(n-1)/2", len)))?;
                (n, s)
            }
        };
        let digits = body
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::BadCode(alloc::format!("unexpected character {:?}", c))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Digraph::from_code_digits(n, &digits)
    }
}
