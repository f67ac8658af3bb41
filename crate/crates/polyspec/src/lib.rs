//! Exact constructions and spectra of the 600-cell family.
//!
//! The library builds the icosian quaternion groups and the graphs they
//! act on (the 600-cell, its rectification on 720 edge midpoints, the
//! 1440-vertex dart polytope, and the dodecahedron family over A₅),
//! identifies the dart graphs with Cayley graphs, proves the exact
//! lift/average operator identities, and computes adjacency spectra two
//! independent ways: a dense symmetric eigensolve and a block
//! diagonalization over the isotypic components of the regular
//! representation.

// index-based loops and explicit `% n == 0` mirror the linear-algebra
// notation in this crate; the iterator rewrites clippy suggests hurt
// readability here
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]
// ElemKey/VertexLabel intentionally inline their quaternion variants:
// keys are long-lived and boxed variants would only add indirection
#![allow(clippy::large_enum_variant)]

pub mod exactnum;
pub mod fixtures;
pub mod groups;
pub mod obstruction;
pub mod polytopes;
pub mod report;
pub mod spectra;
pub mod verify;
