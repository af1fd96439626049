//! Direct summation of the Dirac sea.
//!
//! For each momentum p the ±E, ±κ mode densities are summed over |κ| until
//! the blocks fall below `kappa_rel_tol`. The linear growth (8α/π) r p is
//! subtracted, the remainder integrated over p on a grid that is uniform
//! in its upper part, the oscillating integral function damped by pair
//! averaging and extrapolated to p → ∞, and the real-space counter-term
//! (2α/π) r removed. [`run_vp`] does all of this per radius in parallel;
//! rows come back in input order and do not depend on the worker count.

mod damping;
mod grid;
mod integrand;
mod interp;
mod tail;

pub use damping::{damp_by_steps, damp_oscillations, Damped};
pub use grid::{build_p_grid, PGrid};
pub use integrand::{combined_integrand, kappa_block, mode_density, KappaSumInfo};
pub use interp::{integrate_samples, Interpolant};
pub use tail::{tail_limit, tail_limit_like, TailFit, TailWindow};
mod pipeline;

pub use pipeline::{
    build_integrand_table, force_density_sums, force_sum_row, integrate_reduced, momentum_counterterm_slope,
    reduce_table, run_row, run_vp, subtract_counterterms, ForceSumRow, IntegrandTable, RowDiagnostics, VPConfig,
    VPResultRow, R_RANGE, SIGMA,
};
