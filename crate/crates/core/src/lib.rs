//! Quantum matrices, quantum grassmannians and their straightening.
//!
//! Elements of `O_q(M_{m,n})` are kept in PBW normal form with
//! coefficients in `Z[q, q^-1]`; the quantum grassmannian `O_q(G(m,n))` is
//! the subalgebra generated by the maximal quantum minors.

pub mod coeff;
pub mod dhom;
pub mod error;
pub mod expr;
pub mod grassmann;
pub mod minors;
pub mod posets;
pub mod qmatrix;
pub mod straighten;
pub mod suites;

pub use error::{Error, Result};
