//! Exact topological invariants of Higgs bundle moduli spaces.
//!
//! * [`polyring`]: integer polynomials, truncated series, binomials, Möbius.
//! * [`dims`]: dimension formulas and spectral-cover numerics on a curve.
//! * [`ranktwo`]: Poincaré polynomials in rank 1 and 2 by U(1)-localization.
//! * [`chains`]: fixed-point combinatorics of twisted Higgs bundles on P¹.
//! * [`cli`]: the `higgs-betti` command-line front end.

pub mod chains;
pub mod cli;
pub mod dims;
pub mod error;
pub mod fixtures;
pub mod polyring;
pub mod ranktwo;
pub mod reproduce;

pub use error::{Error, Result};
pub use polyring::IntPolynomial;
