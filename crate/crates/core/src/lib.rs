//! Exact linear algebra for the Grover-type quantum walk defined by a digraph.
//!
//! The walk lives on the symmetric arcs of the underlying graph: a Grover coin
//! `C = 2K*K - I` followed by a shift `S_θ` whose entries carry a phase
//! `e^{±iη}` on every one-way arc. This crate builds those operators over the
//! cyclotomic field `Q(ζ_{2q})` for `η = pπ/q`, so every identity between them
//! can be checked with exact equality, and provides:
//!
//! * [`scalar`]: exact cyclotomic scalars with an exact real-part sign test,
//! * [`digraph`]: digraphs, symmetric arc indexing, the η-function, the
//!   `Y_{a,n-a}` family, digon-cut switching and closed-path classification,
//! * [`operators`]: `K`, `C`, `S_θ`, `D_θ`, `U_θ`, `H_η`, `H̃_η`, `F_t`, `F_o`, `R`,
//! * [`charpoly`] and [`spectrum`]: exact characteristic polynomials, a
//!   Hermitian eigensolver and the spectral map `φ(z) = (z + z⁻¹)/2`,
//! * [`supports`]: positive/negative supports of transfer-matrix powers,
//! * [`enumerate`]: isomorph-free digraph generation and cospectral classing.
//!
//! Everything here is `no_std` (with `alloc`); IO, parallel drivers and the
//! command line live in the `mixwalk` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charpoly;
pub mod digraph;
pub mod eigen;
pub mod enumerate;
mod error;
pub mod matrix;
pub mod operators;
pub mod scalar;
pub mod spectrum;
pub mod supports;

pub use charpoly::{charpoly_exact, CharPoly};
pub use digraph::{Arc, ArcIndex, Digraph, EtaFunction};
pub use error::Error;
pub use matrix::{IndexSpace, OpMatrix, SpaceKind};
pub use operators::Walk;
pub use scalar::{Angle, CycScalar, Sign};

pub type Result<T, E = Error> = core::result::Result<T, E>;
