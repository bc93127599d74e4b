use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A single broken invariant of a Feynman diagram description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An anchor names a leg or vertex that does not exist.
    AnchorOutOfRange(String),
    /// An edge joins an anchor to itself.
    SelfEdge(String),
    /// An anchor appears in more than one edge.
    DuplicateAnchor(String),
    /// A leg without exactly one incident edge.
    LegArity { leg: usize, edges: usize },
    /// An internal vertex without exactly three filled slots.
    SlotArity { vertex: usize, filled: usize },
    /// `legs + vertices` is odd, so no degree exists.
    DegreeParity { legs: usize, vertices: usize },
    /// A connected component of the graph never reaches the Wilson loop.
    LeglessComponent { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AnchorOutOfRange(a) => write!(f, "anchor out of range: {a}"),
            Violation::SelfEdge(a) => write!(f, "anchor {a} is joined to itself"),
            Violation::DuplicateAnchor(a) => write!(f, "anchor {a} used by more than one edge"),
            Violation::LegArity { leg, edges } => {
                write!(f, "leg arity: leg {leg} has {edges} incident edges")
            }
            Violation::SlotArity { vertex, filled } => {
                write!(f, "slot arity: vertex {vertex} has {filled} of 3 slots connected")
            }
            Violation::DegreeParity { legs, vertices } => {
                write!(f, "degree parity: {legs} legs + {vertices} vertices is odd")
            }
            Violation::LeglessComponent { vertex } => {
                write!(f, "legless component containing vertex {vertex}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    OddGroundSet(usize),
    PointOutOfRange { point: usize, points: usize },
    EndpointPairedWithItself(usize),
    DuplicateEndpoint(usize),
    NotInvolution(usize),
    DegreeMismatch { left: usize, right: usize },
    InvalidFeynman(Vec<Violation>),
    Unresolvable,
    ArityMismatch { expected: usize, found: usize },
    NotPermutation,
    PartTooSmall { part: usize, min: usize },
    WeightMismatch { partition: usize, degree: usize },
    ZeroCableOrder,
    PolynomialityViolated { node: u64 },
    UnknownDiagram(String),
    InvalidBasis(String),
    Syntax(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddGroundSet(n) => write!(f, "odd number of endpoints ({n})"),
            Error::PointOutOfRange { point, points } => {
                write!(f, "endpoint {point} out of range for {points} points")
            }
            Error::EndpointPairedWithItself(p) => write!(f, "endpoint paired with itself ({p})"),
            Error::DuplicateEndpoint(p) => write!(f, "duplicate endpoint {p}"),
            Error::NotInvolution(p) => write!(f, "pairing is not an involution at {p}"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::InvalidFeynman(v) => {
                write!(f, "invalid Feynman diagram:")?;
                for item in v {
                    write!(f, " {item};")?;
                }
                Ok(())
            }
            Error::Unresolvable => write!(f, "unresolvable: internal vertex with no path to the Wilson loop"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::NotPermutation => write!(f, "not a permutation"),
            Error::PartTooSmall { part, min } => write!(f, "partition part {part} is below {min}"),
            Error::WeightMismatch { partition, degree } => {
                write!(f, "partition weight {partition} does not match degree {degree}")
            }
            Error::ZeroCableOrder => write!(f, "cabling order must be positive"),
            Error::PolynomialityViolated { node } => {
                write!(f, "polynomiality violated at check node n = {node}")
            }
            Error::UnknownDiagram(d) => write!(f, "diagram {d} is not in the basis index"),
            Error::InvalidBasis(msg) => write!(f, "invalid basis: {msg}"),
            Error::Syntax(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}
