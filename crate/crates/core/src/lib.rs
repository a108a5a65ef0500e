//! Geometric measure of entanglement (GM) for pure multiqubit states.
//!
//! The crate computes `G(ψ)`, the largest overlap between a pure state and
//! the set of fully product states, and the derived measure `E_G = 1 - G²`,
//! through several independent routes:
//!
//! - [`dicke`]: symmetric states with non-negative Dicke amplitudes, reduced
//!   to a single-angle maximization.
//! - [`sym3q`]: symmetric three-qubit states in canonical form, by
//!   enumerating the stationary points of the Bloch-sphere Lagrangian.
//! - [`rank2`]: the two-qubit rank-two canonical family, both numerically
//!   and through the closed form valid when `x₁ = x₂ = 0`.
//! - [`wmax`]: restrictions of the closed form, the global-minimum scan and
//!   the W-state uniqueness certificate.
//! - [`oracle`]: brute-force reference solvers used to cross-check all of
//!   the above.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
// `Float` supplies the float methods in no_std builds; once num-traits is
// built with `std` (tests, std dependents) the inherent methods win and the
// import goes unused.
#![allow(unused_imports)]

extern crate alloc;

mod error;
pub mod linalg;
pub mod math;
pub mod optimize;
pub mod rng;
pub mod states;

pub mod dicke;
pub mod oracle;
pub mod rank2;
pub mod sym3q;
pub mod wmax;

pub use error::{GmError, Result};
pub use linalg::Matrix4;
pub use math::C64;
pub use oracle::OracleConfig;
pub use states::{
    BlochVector, CandidateRecord, CaseTag, GmResult, Method, OracleStats, PureState, RankTwoCanonical,
    ResultFlags, SymThreeQubitCanonical, SymmetricDickeState,
};
