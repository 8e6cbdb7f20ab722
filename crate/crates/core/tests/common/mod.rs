//! Test-only helpers: an adaptive quadrature oracle for packet overlaps and
//! seeded random scenario generators. Nothing here calls into the closed-form
//! overlap or the spectral propagator.

#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

use num_complex::Complex64;
use packet_overlap::optics::BeamSplitter;
use packet_overlap::packets::{GaussianPacket, SpatialGrid};
use rand::Rng;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Returns (integral, |Kronrod - Gauss|, integral of |f|).
fn gk15(f: &impl Fn(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut magnitude = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let (lo, hi) = (f(center - dx), f(center + dx));
        kronrod += (lo + hi) * WGK[j];
        magnitude += (lo.norm() + hi.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (lo + hi) * WG[j / 2];
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).norm(), magnitude * half.abs())
}

/// Adaptive 7/15-point Gauss-Kronrod integration of a complex integrand.
pub fn integrate(f: impl Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    fn recurse(f: &impl Fn(f64) -> Complex64, a: f64, b: f64, tol: f64, depth: u32) -> Complex64 {
        let (value, err, magnitude) = gk15(f, a, b);
        // |K - G| overstates the Kronrod error by orders of magnitude, so
        // also stop at the rounding floor of the piece
        if err <= tol || err <= 1e-14 * magnitude || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }
    recurse(&f, a, b, tol, 30)
}

/// Gaussian amplitude written out independently of the library.
pub fn gaussian_amplitude(x0: f64, sigma: f64, k0: f64, phase: f64, x: f64) -> Complex64 {
    let u = x - x0;
    let env = (-u * u / (2.0 * sigma * sigma)).exp() / (PI * sigma * sigma).powf(0.25);
    Complex64::new(0.0, k0 * u + phase).exp() * env
}

/// `<a|b>` by adaptive quadrature over both packets' supports.
pub fn quadrature_overlap(a: &GaussianPacket, b: &GaussianPacket) -> Complex64 {
    let reach = 14.0 * a.sigma().max(b.sigma());
    let lo = a.x0().min(b.x0()) - reach;
    let hi = a.x0().max(b.x0()) + reach;
    let integrand = |x: f64| {
        gaussian_amplitude(a.x0(), a.sigma(), a.k0(), a.phase(), x).conj()
            * gaussian_amplitude(b.x0(), b.sigma(), b.k0(), b.phase(), x)
    };
    // split into pieces no wider than a carrier wavelength's worth of nodes
    let pieces = (((hi - lo) * a.k0().max(b.k0()) / 8.0).ceil() as usize).max(8);
    let h = (hi - lo) / pieces as f64;
    (0..pieces)
        .map(|i| integrate(integrand, lo + i as f64 * h, lo + (i + 1) as f64 * h, 1e-12 / pieces as f64))
        .sum()
}

/// Sigma in [0.5, 2], center in [-5, 5], k0 in [8/sigma, 16/sigma].
pub fn random_gaussian(rng: &mut impl Rng) -> GaussianPacket {
    let sigma = rng.random_range(0.5..=2.0);
    let x0 = rng.random_range(-5.0..=5.0);
    let k0 = rng.random_range(8.0 / sigma..=16.0 / sigma);
    let phase = rng.random_range(-PI..PI);
    GaussianPacket::new(x0, sigma, k0, phase).unwrap()
}

/// A packet close enough to `base` that the overlap is well above rounding.
pub fn random_neighbor(rng: &mut impl Rng, base: &GaussianPacket) -> GaussianPacket {
    let sigma = (base.sigma() * rng.random_range(0.8..=1.25)).clamp(0.5, 2.0);
    let x0 = base.x0() + rng.random_range(-1.0..=1.0) * base.sigma();
    let k0 = (base.k0() + rng.random_range(-1.0..=1.0) / base.sigma()).clamp(8.0 / sigma, 16.0 / sigma);
    let phase = rng.random_range(-PI..PI);
    GaussianPacket::new(x0, sigma, k0, phase).unwrap()
}

/// Uniformly random lossless splitter.
pub fn random_splitter(rng: &mut impl Rng) -> BeamSplitter {
    let theta = rng.random_range(0.0..=PI / 2.0);
    let r = Complex64::from_polar(theta.cos(), rng.random_range(-PI..PI));
    let t = Complex64::from_polar(theta.sin(), rng.random_range(-PI..PI));
    BeamSplitter::new(r, t).unwrap()
}

/// n = 4096, dx = 1/16 over [-20, 236): sigma >= 8 dx for every packet from
/// [`random_gaussian`] and room to travel about 220 to the right.
pub fn reference_grid() -> SpatialGrid {
    SpatialGrid::new(-20.0, 1.0 / 16.0, 4096).unwrap()
}
