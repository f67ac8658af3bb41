//! Exact arithmetic in the quadratic field Q(√5) and quaternions over it.
//!
//! Every coordinate and group element in this crate lives in Q(√5) or in the
//! quaternion algebra over it, so equality, ordering and hashing are decided
//! exactly. Floating point appears only when values are handed to the numeric
//! spectrum layer, never in any comparison.

mod qroot5;
mod quaternion;

pub use qroot5::{QRoot5, Rational};
pub use quaternion::QuaternionQ5;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot invert a quaternion of zero norm")]
    ZeroNormInverse,
}
