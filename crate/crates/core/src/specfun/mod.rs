//! Special-function kernels for the closed-form Dirac–Coulomb solutions and
//! the analytic Uehling density.
//!
//! Every routine is a pure function of its arguments. Non-finite results never
//! escape: domain violations, precision loss and overflow come back as
//! [`crate::Error`].

mod bessel;
mod gamma;
mod hyper;
mod laguerre;
mod struve;

pub use bessel::{bessel_j_halfint, bessel_k, bessel_k_scaled, bickley_ki1, BesselKOrder};
pub use gamma::{ln_gamma, ln_gamma_complex};
pub use hyper::{kummer_1f1, whittaker_m, Kummer, KUMMER_TAYLOR_RADIUS};
pub use laguerre::laguerre_gen;
pub use struve::{struve_l, StruveOrder};

/// Complex numbers used by the hypergeometric kernels.
pub type Complex = num_complex::Complex64;
