//! Group-algebra operators on the polytope graphs, the exact lift/average
//! identities, and the two independent spectrum computations (direct dense
//! eigensolve, and block diagonalization over the isotypic components of
//! the regular representation).

mod blocks;
mod eigen;
mod operator;

pub use blocks::{spectrum_via_blocks, symmetric_surrogate, BlockSpectrum, IrrepBlock, Surrogate};
pub use eigen::{
    compare_spectra, symmetric_eigen, EigenResult, SpectrumComparison, SpectrumMultiset,
    SymMatrix,
};
pub use operator::{
    adjacency_matrix, lift_average, right_translation, translation_sum, verify_factorization,
    IMat, LiftAverage,
};

use thiserror::Error;

use crate::polytopes::Graph;

/// Default tolerance for coalescing eigenvalues into multiplicity classes.
pub const DEFAULT_COALESCE_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("dimension mismatch: {lhs:?} × {rhs:?}")]
    DimensionMismatch {
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("dart ({0},{1}) has no underlying edge in the midpoint graph")]
    DartWithoutEdge(u32, u32),
    #[error("factorization fails at ({row},{col}): product {got}, adjacency {want}")]
    FactorizationMismatch {
        row: usize,
        col: usize,
        got: i64,
        want: i64,
    },
    #[error("matrix is not symmetric (max asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("Jacobi did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("isotypic component of row {row} has rank {got}, expected {expected}")]
    IsotypicRank {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("special generator is not an involution")]
    SpecialNotInvolution,
    #[error("projector defect: {0}")]
    ProjectorDefect(String),
}

/// Adjacency spectrum of a graph by the dense Jacobi eigensolver.
pub fn spectrum_direct(g: &Graph, tol: f64) -> Result<SpectrumMultiset, SpectraError> {
    let adj = adjacency_matrix(g);
    let m = SymMatrix::new(adj.rows, adj.to_f64());
    let eig = symmetric_eigen(&m, 1e-12, false)?;
    Ok(SpectrumMultiset::from_sorted(eig.values, tol))
}

/// Σλ = 0 and Σλ² = 2·|E| hold for every adjacency spectrum; returns the
/// two relative residuals.
pub fn trace_residuals(s: &SpectrumMultiset, edge_count: usize) -> (f64, f64) {
    let (s1, s2) = s.power_sums();
    let scale = (2 * edge_count) as f64;
    (s1.abs() / scale.max(1.0), (s2 - scale).abs() / scale.max(1.0))
}
