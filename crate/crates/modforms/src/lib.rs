//! Eisenstein series, the discriminant cusp form, and exact arithmetic in
//! the quasi-modular ring Q[E2, E4, E6].

pub mod basis;
pub mod eisenstein;
pub mod qm;

pub use basis::{vj_basis, ModularBasis};
pub use eisenstein::{delta_q, eisenstein, qvar};
pub use qm::QuasiModularPoly;
