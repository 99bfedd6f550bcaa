//! Published values of the cospectrality tables for orders 2 to 6.

use super::classing::Functor;
use crate::scalar::Angle;

/// Digraphs on 2 to 6 vertices up to isomorphism.
pub const DIGRAPH_COUNTS: [u64; 5] = [3, 16, 218, 9608, 1540944];

/// The six published tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    Adjacency,
    HermitianThird,
    Hermitian,
    HermitianTwoThirds,
    SquareRight,
    SquareObtuse,
}

impl TableKind {
    pub const ALL: [TableKind; 6] = [
        TableKind::Adjacency,
        TableKind::HermitianThird,
        TableKind::Hermitian,
        TableKind::HermitianTwoThirds,
        TableKind::SquareRight,
        TableKind::SquareObtuse,
    ];

    pub fn functor(self) -> Functor {
        let third = Angle::new(1, 3).expect("valid");
        let two_thirds = Angle::new(2, 3).expect("valid");
        match self {
            TableKind::Adjacency => Functor::Adjacency,
            TableKind::HermitianThird => Functor::Hermitian(third),
            TableKind::Hermitian => Functor::Hermitian(Angle::RIGHT),
            TableKind::HermitianTwoThirds => Functor::Hermitian(two_thirds),
            TableKind::SquareRight => Functor::SquarePositive(Angle::RIGHT),
            TableKind::SquareObtuse => Functor::SquarePositive(two_thirds),
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableKind::Adjacency => "adjacency matrix A",
            TableKind::HermitianThird => "H_eta, eta = pi/3",
            TableKind::Hermitian => "Hermitian adjacency matrix H",
            TableKind::HermitianTwoThirds => "H_eta, eta = 2pi/3",
            TableKind::SquareRight => "U^(2,+), eta = pi/2",
            TableKind::SquareObtuse => "U^(2,+), eta = 2pi/3",
        }
    }

    /// Published rows `(distinct, max class, determined, a, b, c)` for orders 2..=6.
    fn rows(self) -> [[u64; 5]; 6] {
        match self {
            TableKind::Adjacency => [
                [2, 7, 46, 718, 35237],
                [2, 6, 42, 592, 15842],
                [1, 5, 23, 166, 2314],
                [0, 3, 35, 685, 35086],
                [1, 2, 5, 15, 69],
                [1, 2, 6, 18, 82],
            ],
            TableKind::HermitianThird => [
                [2, 7, 41, 765, 81175],
                [2, 6, 18, 84, 888],
                [1, 3, 9, 82, 1559],
                [0, 3, 30, 732, 81024],
                [1, 1, 1, 1, 1],
                [1, 3, 10, 32, 150],
            ],
            TableKind::Hermitian => [
                [2, 6, 27, 275, 10920],
                [2, 6, 21, 158, 1338],
                [1, 2, 3, 5, 16],
                [0, 2, 16, 242, 10769],
                [1, 1, 1, 1, 1],
                [1, 3, 10, 32, 150],
            ],
            TableKind::HermitianTwoThirds => [
                [2, 5, 20, 150, 3698],
                [2, 6, 27, 243, 2430],
                [1, 1, 1, 1, 1],
                [0, 1, 9, 117, 3547],
                [1, 1, 1, 1, 1],
                [1, 3, 10, 32, 150],
            ],
            TableKind::SquareRight => [
                [2, 6, 34, 371, 11748],
                [1, 6, 53, 700, 37013],
                [2, 4, 13, 50, 284],
                [1, 3, 25, 339, 11598],
                [1, 3, 9, 32, 150],
                [0, 0, 0, 0, 0],
            ],
            TableKind::SquareObtuse => [
                [2, 6, 45, 601, 20306],
                [1, 6, 22, 204, 5120],
                [2, 4, 13, 47, 280],
                [1, 3, 36, 569, 20156],
                [1, 3, 9, 27, 135],
                [0, 0, 0, 5, 15],
            ],
        }
    }
}

/// The published column `(digraphs, distinct, max class, determined, a, b, c)`.
pub fn reference_row(kind: TableKind, order: usize) -> Option<[u64; 7]> {
    if !(2..=6).contains(&order) {
        return None;
    }
    let k = order - 2;
    let r = kind.rows();
    Some([DIGRAPH_COUNTS[k], r[0][k], r[1][k], r[2][k], r[3][k], r[4][k], r[5][k]])
}
