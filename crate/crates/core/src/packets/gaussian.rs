use std::f64::consts::PI;

use num_complex::Complex64;

use super::{check_propagation, Packet};
use crate::error::{Error, Result};

/// Smallest admissible `k0 * sigma`. Below this the packet carries enough
/// negative-wavenumber weight to spoil one-directional propagation.
pub const MIN_K0_SIGMA: f64 = 4.0;

/// Normalized Gaussian packet
///
/// ```text
/// psi(x) = (pi sigma^2)^(-1/4) exp(-(x - x0)^2 / (2 sigma^2)) exp(i k0 (x - x0) + i phase)
/// ```
///
/// The carrier phase is referenced to the center, so a free translation only
/// moves `x0`. `sigma` is the width of the amplitude envelope; the probability
/// density `|psi|^2` has standard deviation `sigma / sqrt(2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    x0: f64,
    sigma: f64,
    k0: f64,
    phase: f64,
}

impl GaussianPacket {
    pub fn new(x0: f64, sigma: f64, k0: f64, phase: f64) -> Result<Self> {
        if !x0.is_finite() {
            return Err(Error::invalid("x0", "must be finite"));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::invalid("sigma", format!("must be positive, got {sigma}")));
        }
        if !(k0.is_finite() && k0 > 0.0) {
            return Err(Error::invalid("k0", format!("must be positive, got {k0}")));
        }
        if k0 * sigma < MIN_K0_SIGMA {
            return Err(Error::invalid(
                "k0",
                format!("k0 * sigma = {} is below {MIN_K0_SIGMA}", k0 * sigma),
            ));
        }
        if !phase.is_finite() {
            return Err(Error::invalid("phase", "must be finite"));
        }
        Ok(Self { x0, sigma, k0, phase })
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Amplitude at position `x`.
    pub fn amplitude_at(&self, x: f64) -> Complex64 {
        let u = x - self.x0;
        let envelope = (PI * self.sigma * self.sigma).powf(-0.25)
            * (-u * u / (2.0 * self.sigma * self.sigma)).exp();
        Complex64::from_polar(envelope, self.k0 * u + self.phase)
    }

    /// Same packet moved rigidly by `shift`.
    pub fn translated(&self, shift: f64) -> Self {
        Self { x0: self.x0 + shift, ..*self }
    }

    /// Closed-form `<self|other>`.
    ///
    /// Evaluated in log space so that far-separated packets underflow
    /// cleanly to zero instead of producing `0 * inf`.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        let (sa2, sb2) = (self.sigma * self.sigma, other.sigma * other.sigma);
        // coefficient of -x^2 in the exponent of the integrand
        let a = 0.5 / sa2 + 0.5 / sb2;
        let dk = other.k0 - self.k0;
        let dx = self.x0 - other.x0;
        let log_mag = 0.5 * (2.0 * self.sigma * other.sigma / (sa2 + sb2)).ln()
            - dx * dx / (2.0 * (sa2 + sb2))
            - dk * dk / (4.0 * a);
        // depends on the centers only through their separation, so a common
        // translation leaves it unchanged
        let arg = dx * (self.k0 * sa2 + other.k0 * sb2) / (sa2 + sb2) + other.phase - self.phase;
        Complex64::from_polar(log_mag.exp(), arg)
    }
}

impl Packet for GaussianPacket {
    fn inner_product(&self, other: &Self) -> Result<Complex64> {
        Ok(self.overlap(other))
    }

    fn norm_sqr(&self) -> f64 {
        1.0
    }

    fn propagate(&self, t: f64, c: f64) -> Result<Self> {
        check_propagation(t, c)?;
        Ok(self.translated(c * t))
    }

    fn carrier_wavenumber(&self) -> f64 {
        self.k0
    }
}
