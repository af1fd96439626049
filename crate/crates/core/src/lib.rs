//! Relativistic Dirac-Coulomb wavefunctions, filled-shell force densities and
//! the vacuum-polarization charge density of a point charge obtained by direct
//! summation over the Dirac sea.
//!
//! Units throughout: ħ = c = m_e = 1, lengths in reduced Compton wavelengths,
//! Gaussian charge with e = √α.
//!
//! * [`specfun`]: complex log-gamma, Kummer/Whittaker, Bessel K, Struve L,
//!   Bickley Ki₁, generalized Laguerre and half-integer Bessel J.
//! * [`dirac`]: bound, continuum and free radial solutions and the
//!   series/Taylor integrator of the radial equation.
//! * [`forces`]: filled-shell stress, confinement and electrostatic force
//!   densities.
//! * [`uehling`]: the analytic O(α) induced density and an integral oracle.
//! * [`seasum`]: the Dirac-sea summation pipeline.
//! * [`figures`], [`report`], [`selftest`], [`cli`]: figure data, CSV and
//!   manifest output, the acceptance checks and the command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod cli;
pub mod dd;
pub mod dirac;
pub mod error;
pub mod figures;
pub mod forces;
pub mod report;
pub mod seasum;
pub mod selftest;
pub mod specfun;
pub mod uehling;

pub use error::{Error, Result};

/// Fine-structure constant used as the default coupling.
pub const ALPHA: f64 = 1.0 / 137.035999;
