//! Exact verification of the binomial structure behind Chebyshev polynomials,
//! trigonometric power reduction, Catalan triangles, Riordan-array inversions,
//! super Catalan numbers and (z)pread polynomials.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! Trigonometric identities are checked as Laurent-polynomial identities in
//! `z = e^{iθ}` or as polynomial identities in a formal variable standing for
//! `cos θ` or `sin² θ`, never numerically.

pub mod basechange;
pub mod chebyshev;
pub mod combinatorics;
pub mod error;
pub mod riordan;
pub mod spread;
pub mod suite;
pub mod exact;
pub mod factor;
pub mod fourier;

pub use error::{CheckFailed, CheckReport, CheckResult, Error, Result};
