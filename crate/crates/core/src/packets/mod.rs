//! Single-photon wave packets along one beam path.
//!
//! Two representations share the [`Packet`] interface: the closed-form
//! [`GaussianPacket`] and the sampled [`GridPacket`]. Free propagation is a
//! rigid translation at speed `c` in both, so every inner product is
//! preserved in time.

mod gaussian;
mod grid;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use gaussian::{GaussianPacket, MIN_K0_SIGMA};
pub use grid::{GridPacket, SpatialGrid};

/// Tail mass allowed within the translation distance of the right grid edge
/// before [`Packet::propagate`] reports wraparound.
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;

/// A state vector for one photon on one beam path.
pub trait Packet: Clone {
    /// `<self|other>`, antilinear in `self`.
    fn inner_product(&self, other: &Self) -> Result<Complex64>;

    fn norm_sqr(&self) -> f64;

    /// Free evolution for a duration `t` at speed `c`: `psi(x) -> psi(x - c t)`.
    fn propagate(&self, t: f64, c: f64) -> Result<Self>;

    /// Carrier wavenumber used when the packet is replaced by a plane wave.
    fn carrier_wavenumber(&self) -> f64;

    fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }
}

pub(crate) fn check_propagation(t: f64, c: f64) -> Result<()> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::invalid("t", format!("must be non-negative, got {t}")));
    }
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::invalid("c", format!("must be positive, got {c}")));
    }
    Ok(())
}

/// `<a|b>`. Thin free-function form of [`Packet::inner_product`].
pub fn inner_product<P: Packet>(a: &P, b: &P) -> Result<Complex64> {
    a.inner_product(b)
}
