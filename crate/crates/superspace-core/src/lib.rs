//! Exact symbolic engine for `d = 3+1`, `N = 1` superspace.
//!
//! The crate implements a commutative ring of formal smooth functions with
//! Gaussian-rational coefficients, the anticommuting function ring generated
//! over it by the Grassmann coordinates `theta`, `thetabar`, `eta`, `etabar`,
//! `vartheta`, `varthetabar`, the supersymmetry derivations acting on that
//! ring, Berezin integration and purge-evaluation, and the model pipelines
//! built from them (Wess-Zumino, abelian gauge theory, nonlinear sigma
//! models).
//!
//! Everything is exact: coefficients live in `Q(i)` and all identity checks
//! are equalities of normal forms, never numerical comparisons.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! CLI crate carries file formats and the command-line front end.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod calculus;
pub mod error;
pub mod gauge;
pub mod grassmann;
pub mod rational;
pub mod scalar;
pub mod sigma;
pub mod spinor;
pub mod superops;
pub mod verify;
pub mod wess_zumino;

pub use error::CoreError;
pub use rational::GaussRat;
pub use scalar::{FieldSymbol, ScalarPoly};
pub use grassmann::{Gen, Level, SuperExpr};
