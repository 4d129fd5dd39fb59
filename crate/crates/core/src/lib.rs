//! Exact-arithmetic toolkit for real orbit spaces of finite matrix groups.
//!
//! Given a finite group of invertible rational matrices acting on R^n, this
//! crate constructs semi-algebraic descriptions of the real orbit space
//! (Gram-matrix descriptions, gradient-Gram matrix descriptions, and minimal
//! few-inequality descriptions for cyclic, abelian and 2-rank-one groups) and
//! verifies them against a brute-force orbit-reality oracle. All computation
//! is over arbitrary-precision rationals; there are no tolerances.

pub mod builtin;
pub mod descriptions;
pub mod error;
pub mod exact;
pub mod group;
pub mod hermite;
pub mod io;
pub mod oracle;
pub mod par;
pub mod reynolds;

pub use error::{Error, Result};
