//! h4kit — exact-arithmetic constructions around the Coxeter group W(H4).
//!
//! The crate builds the finite quaternion groups (binary tetrahedral,
//! octahedral, icosahedral), the reflection groups W(H4), W(H3), W(A4), W(A3)
//! and Aut(A4) from quaternion pairs, generates Wythoff orbit polytopes of
//! dominant weight vectors, branches them under the subgroups W(H3), W(A4)
//! and W(A3), and constructs the dual polytopes of the fourteen uniform
//! W(H4) polytopes — everything over the exact field Q(τ, √2).
//!
//! Start with the runnable programs in `examples/`; each one exercises one
//! capability end to end.  The same functionality is exposed through the thin
//! `h4kit` binary (`orbit`, `cells`, `branch`, `dual`, `export`,
//! `verify-paper`, …).

pub mod branching;
pub mod coxeter;
pub mod dual;
pub mod geometry;
pub mod golden;
pub mod linalg;
pub mod orbit;
pub mod qgroups;
pub mod quat;
pub mod shared;
pub mod verify;

pub use coxeter::{CoxeterSystem, FiniteGroup, GroupElement, SystemName};
pub use golden::{GoldenScalar, Sign};
pub use quat::Quaternion;
