//! Single-photon wave packets at a partially reflecting plate with two
//! detectors.
//!
//! The overlap `eps` of two candidate photon packets is computed exactly,
//! before the plate as `<alpha|beta>` and after it as
//! `<alpha_1|beta_1> + <alpha_2|beta_2>`, and is shown to be independent of
//! time because free propagation is a translation. The plane-wave model in
//! [`models`] reproduces the contrasting calculation in which each arm term
//! picks up `exp[i (w_alpha - w_beta) t]` evaluated at its detector's arrival
//! time, so that the D1 counting rate appears to depend on where D2 sits.
//!
//! - [`packets`]: Gaussian and grid packets, inner products, propagation
//! - [`optics`]: beam splitter, two-arm states, exact overlaps
//! - [`models`]: exact vs. plane-wave predictions and the D2 sweep
//! - [`cli`]: scenario files, CSV export, the `simulate` binary

pub mod cli;
pub mod error;
pub mod models;
pub mod optics;
pub mod packets;

pub use error::{Error, Result};
pub use num_complex::Complex64;
