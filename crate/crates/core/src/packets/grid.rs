use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{check_propagation, GaussianPacket, Packet, DEFAULT_TAIL_TOL};
use crate::error::{Error, Result};

/// Uniform 1D sampling window `x_j = x_min + j * dx`, `j = 0..n`.
///
/// The window is treated as periodic with extent `n * dx` by the spectral
/// propagator, so its right edge sits at `x_min + n * dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid {
    x_min: f64,
    dx: f64,
    n: usize,
}

impl SpatialGrid {
    pub fn new(x_min: f64, dx: f64, n: usize) -> Result<Self> {
        if !x_min.is_finite() {
            return Err(Error::invalid("x_min", "must be finite"));
        }
        if !(dx.is_finite() && dx > 0.0) {
            return Err(Error::invalid("dx", format!("must be positive, got {dx}")));
        }
        if n < 2 {
            return Err(Error::invalid("n", format!("need at least 2 samples, got {n}")));
        }
        if !(n as f64 * dx).is_finite() {
            return Err(Error::invalid("n", "grid extent overflows"));
        }
        Ok(Self { x_min, dx, n })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn extent(&self) -> f64 {
        self.n as f64 * self.dx
    }

    /// Right edge of the periodic window.
    pub fn x_end(&self) -> f64 {
        self.x_min + self.extent()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx
    }

    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|j| self.x(j))
    }

    /// Signed angular wavenumbers in FFT order.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let dk = TAU / self.extent();
        let half = self.n / 2;
        (0..self.n)
            .map(|j| if j < half { j as f64 * dk } else { (j as f64 - self.n as f64) * dk })
            .collect()
    }
}

/// Complex amplitudes sampled on a [`SpatialGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridPacket {
    grid: SpatialGrid,
    amplitudes: Vec<Complex64>,
}

impl GridPacket {
    pub fn new(grid: SpatialGrid, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != grid.len() {
            return Err(Error::invalid(
                "amplitudes",
                format!("expected {} samples, got {}", grid.len(), amplitudes.len()),
            ));
        }
        if amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::invalid("amplitudes", "non-finite sample"));
        }
        Ok(Self { grid, amplitudes })
    }

    pub fn from_fn(grid: SpatialGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new(grid, grid.positions().map(f).collect())
    }

    /// Samples an analytic packet. The result is not renormalized.
    pub fn sample(g: &GaussianPacket, grid: SpatialGrid) -> Self {
        Self {
            grid,
            amplitudes: grid.positions().map(|x| g.amplitude_at(x)).collect(),
        }
    }

    pub fn zeros(grid: SpatialGrid) -> Self {
        Self { grid, amplitudes: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    pub fn grid(&self) -> &SpatialGrid {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn normalize(&self) -> Result<Self> {
        let norm_sqr = self.norm_sqr();
        if !(norm_sqr.is_finite() && norm_sqr > 0.0) {
            return Err(Error::DegeneratePacket);
        }
        Ok(self.scale(Complex64::new(norm_sqr.sqrt().recip(), 0.0)))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            grid: self.grid,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// Probability mass carried by samples at or beyond `x_cut`.
    pub fn mass_beyond(&self, x_cut: f64) -> f64 {
        self.grid
            .positions()
            .zip(&self.amplitudes)
            .filter(|(x, _)| *x >= x_cut)
            .map(|(_, a)| a.norm_sqr())
            .sum::<f64>()
            * self.grid.dx
    }

    /// Whether translating by `c * t` keeps the packet inside the window:
    /// the mass within `c * t` of the right edge must be below `tail_tol`.
    pub fn fits_after(&self, t: f64, c: f64, tail_tol: f64) -> bool {
        debug_assert!(tail_tol > 0.0 && tail_tol < 1.0);
        let shift = c * t;
        if shift <= 0.0 {
            return true;
        }
        self.mass_beyond(self.grid.x_end() - shift) < tail_tol
    }

    /// Translation by `c * t` with an explicit wraparound tolerance.
    pub fn propagate_with_tol(&self, t: f64, c: f64, tail_tol: f64) -> Result<Self> {
        check_propagation(t, c)?;
        if t == 0.0 {
            return Ok(self.clone());
        }
        let shift = c * t;
        if !self.fits_after(t, c, tail_tol) {
            return Err(Error::Wraparound {
                shift,
                mass: self.mass_beyond(self.grid.x_end() - shift),
                tail_tol,
            });
        }

        let n = self.grid.len();
        let mut planner = FftPlanner::new();
        let mut buf = self.amplitudes.clone();
        planner.plan_fft_forward(n).process(&mut buf);
        // psi(x - s) <-> psi_hat(k) exp(-i k s)
        for (a, k) in buf.iter_mut().zip(self.grid.wavenumbers()) {
            *a *= Complex64::from_polar(1.0 / n as f64, -k * shift);
        }
        planner.plan_fft_inverse(n).process(&mut buf);
        Ok(Self { grid: self.grid, amplitudes: buf })
    }

    /// Power-weighted mean wavenumber of the discrete spectrum.
    pub fn spectral_centroid(&self) -> f64 {
        let mut buf = self.amplitudes.clone();
        FftPlanner::new().plan_fft_forward(buf.len()).process(&mut buf);
        let (num, den) = buf
            .iter()
            .zip(self.grid.wavenumbers())
            .fold((0.0, 0.0), |(num, den), (a, k)| {
                let p = a.norm_sqr();
                (num + k * p, den + p)
            });
        if den > 0.0 {
            num / den
        } else {
            0.0
        }
    }
}

impl Packet for GridPacket {
    fn inner_product(&self, other: &Self) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::IncompatibleGrids);
        }
        let sum: Complex64 = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(sum * self.grid.dx)
    }

    fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.grid.dx
    }

    fn propagate(&self, t: f64, c: f64) -> Result<Self> {
        self.propagate_with_tol(t, c, DEFAULT_TAIL_TOL)
    }

    fn carrier_wavenumber(&self) -> f64 {
        self.spectral_centroid()
    }
}
