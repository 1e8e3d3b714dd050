//! Exact domination polynomials of graphs.
//!
//! The crate offers three independent ways of computing `D(G, x)`:
//!
//! * [`enumerate`]: exhaustive subset enumeration, the ground truth;
//! * [`decomposition`]: the general vertex and edge recurrences and the
//!   product over connected components;
//! * [`families`]: closed recurrence systems for triangular cactus chains
//!   and para/ortho square cactus chains, which run in a linear number of
//!   polynomial operations.
//!
//! [`verify`] cross-checks every chain identity against the oracle.

pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod poly;
pub mod verify;

pub use decomposition::{DecompositionConfig, Decomposer, Method, Subterms};
pub use enumerate::{DomTable, Oracle, DEFAULT_CAP, HARD_CAP};
pub use error::{Error, Result};
pub use families::{ChainKind, Family, FamilySpec, GadgetShapes, RecurrenceVariants};
pub use graph::{Graph, VertexId, VertexSet};
pub use poly::DomPoly;
pub use verify::{verify_families, Erratum, Evidence, Form, ReportEntry, VerificationReport, VerifyOptions};
