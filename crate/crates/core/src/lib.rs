//! Edgepath systems for Montesinos knots in exact arithmetic.
//!
//! A Montesinos knot `M(R_1, ..., R_N)` is given by its tangle fractions.
//! Candidate surfaces in its exterior are described by edgepath systems in
//! the Farey diagram; this crate enumerates those systems, solves for their
//! endpoints exactly, and derives twist, boundary slope, number of sheets,
//! boundary components and Euler characteristic for each.
//!
//! ```
//! use montesinos_core::{analyze_knot, Fraction, MontesinosKnot};
//!
//! let knot: MontesinosKnot = "-1/2,2/5,1/11".parse().unwrap();
//! let analysis = analyze_knot(&knot).unwrap();
//! assert_eq!(analysis.reference_twist, Fraction::integer(-18));
//! assert!(analysis.reports.iter().any(|r| r.slope == Fraction::ratio(200, 11)));
//! ```
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

use alloc::string::String;
use alloc::vec::Vec;

pub mod diagram;
pub mod edgepath;
pub mod family;
pub mod fraction;
pub mod linalg;
pub mod oracle;
pub mod surface;
pub mod system;

pub use diagram::{DiagramEdge, DiagramPoint, EdgeKind, PartialPoint, Vertex};
pub use edgepath::{Edgepath, PathType, Sign, SignedEdge, Skeleton};
pub use fraction::Fraction;
pub use surface::{analyze, analyze_knot, analyze_knot_capped, Essentiality, KnotAnalysis, SurfaceReport};
pub use system::{EdgepathSystem, EndpointSolution, Endpoints, Enumeration, MontesinosKnot};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,
    #[error("{0}")]
    Parse(String),
    #[error("tangle {0} is an integer; every tangle needs denominator at least 2")]
    IntegerTangle(Fraction),
    #[error("{0} has no Farey parents")]
    NoParents(Fraction),
    #[error("not an edge of the diagram: {0}")]
    NotAnEdge(String),
    #[error("edges share no vertex")]
    DisjointEdges,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("need at least 3 tangles, got {0}")]
    TooFewTangles(usize),
    #[error("{0} tangles have even denominator; a knot allows at most one")]
    NotAKnot(usize),
    #[error("bad skeleton choice: {0}")]
    BadChoice(String),
    #[error("{required} skeleton combinations exceed the cap of {cap}")]
    CapExceeded { cap: u64, required: u128 },
    #[error("no Seifert reference")]
    NoSeifertReference,
    #[error("ambiguous reference: parity-passing systems have twists {0:?}")]
    AmbiguousReference(Vec<Fraction>),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("the Euler characteristic formula applies to type I systems only")]
    NotTypeOne,
    #[error("family index {0} must be an odd integer >= 11")]
    FamilyIndex(i64),
}
