//! Exact linear algebra in the rank-2 Whittaker module of the Virasoro
//! algebra: normal ordering, rank-5/2 Whittaker descendants, irregular
//! conformal block coefficients, and half-integer-rank realizations.

pub mod act;
pub mod blocks;
pub mod pbw;
pub mod realization;
pub mod whittaker;

pub use act::ActCtx;
pub use blocks::{block_coeffs, BlockCoeffs};
pub use pbw::{PBWKey, PBWVector, Partition};
pub use realization::{check_half_integer_realization, DiffOp};
pub use whittaker::{Parallelism, WhittakerEngine, WhittakerError};
