use alloc::string::String;
use crate::digraph::Arc;
use crate::matrix::IndexSpace;



#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid angle {p}/{q}·π: {reason}")]
    InvalidAngle { p: i64, q: i64, reason: &'static str },
    #[error("digraph has no arcs; arc-indexed operators are undefined")]
    NoArcs,
    #[error("digraph is not weakly connected ({components} components); compute per component")]
    Disconnected { components: usize },
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("index spaces do not match: {left} vs {right}")]
    SpaceMismatch { left: IndexSpace, right: IndexSpace },
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: IndexSpace, cols: IndexSpace },
    #[error("matrix is not self-adjoint")]
    NotSelfAdjoint,
    #[error("cut contains the non-digon arc {0}")]
    NonDigonCut(Arc),
    #[error("arc {0} is not an arc of the underlying graph")]
    UnknownArc(Arc),
    #[error("value {0} lies outside [-1, 1]")]
    OutsideUnitInterval(f64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed compact code: {0}")]
    BadCode(String),
    #[error("eigensolver did not converge")]
    NoConvergence,
}
