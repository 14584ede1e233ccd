//! Exact symmetric-polynomial algebra and the factorizing operators
//! `H_j`, `Q_z`, `A_k`, `S_n`, `S_n⁻¹` and `Q_0′` for the monomial,
//! elementary-product and Schur bases.

pub mod diagonal;
pub mod error;
pub mod exact;
pub mod ops;
pub mod partitions;
pub mod qops_elementary;
pub mod qops_monomial;
pub mod qops_schur;
pub mod quad_check;
pub mod sym_bases;
pub mod verify;

pub use error::{Error, Result};
