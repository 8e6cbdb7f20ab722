//! Exact versus plane-wave predictions for the overlap and the D1 counting rate.
//!
//! The exact overlap is a property of the initial packets alone. The
//! plane-wave model instead attaches `exp[i (w_alpha - w_beta) t]` to each
//! arm term and evaluates it at that arm's detector arrival time, which makes
//! the result depend on where D2 sits. [`sweep_d2`] puts both side by side.
//!
//! The counting rate is a modeling choice: the photon is prepared in
//! `(|alpha> + e^{i phi} |beta>) / N` and the D1 rate is the squared norm of
//! its arm-1 component,
//!
//! ```text
//! rate_1 = (|alpha_1|^2 + |beta_1|^2 + 2 Re(e^{i phi} <alpha_1|beta_1>)) / (2 + 2 Re(e^{i phi} eps))
//! ```
//!
//! which depends on `eps` through the normalizer.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::optics::{arm_overlaps, overlap_pre, split, BeamSplitter, Detector, ExperimentGeometry, TwoArmState};
use crate::packets::Packet;

/// Smallest normalizer^2 accepted by the counting-rate functional.
pub const MIN_NORMALIZER_SQR: f64 = 1e-9;

/// Number of D2 positions in [`default_l2_values`].
pub const DEFAULT_SWEEP_POINTS: usize = 200;

/// Packets replaced by plane waves of frequencies `omega_alpha`, `omega_beta`,
/// keeping the per-arm overlaps `a1`, `a2` taken at the plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveModel {
    pub omega_alpha: f64,
    pub omega_beta: f64,
    pub a1: Complex64,
    pub a2: Complex64,
}

impl PlaneWaveModel {
    pub fn delta_omega(&self) -> f64 {
        self.omega_alpha - self.omega_beta
    }

    /// Period of the spurious oscillation in D2 arrival time, if any.
    pub fn period(&self) -> Option<f64> {
        let dw = self.delta_omega();
        (dw != 0.0).then(|| TAU / dw.abs())
    }

    /// `a1 exp(i dw t1) + a2 exp(i dw t2)`: the overlap with each arm term
    /// evaluated at its own detector's arrival time.
    pub fn wss_epsilon(&self, t1: f64, t2: f64) -> Complex64 {
        self.arm1_term(t1) + self.arm2_term(t2)
    }

    pub fn arm1_term(&self, t1: f64) -> Complex64 {
        self.a1 * Complex64::cis(self.delta_omega() * t1)
    }

    pub fn arm2_term(&self, t2: f64) -> Complex64 {
        self.a2 * Complex64::cis(self.delta_omega() * t2)
    }
}

/// Builds the plane-wave model from the split states at the plate, with
/// `omega = c k` for each carrier.
pub fn derive_plane_wave_model<P: Packet>(
    sa: &TwoArmState<P>,
    sb: &TwoArmState<P>,
    k_alpha: f64,
    k_beta: f64,
    c: f64,
) -> Result<PlaneWaveModel> {
    let [a1, a2] = arm_overlaps(sa, sb)?;
    Ok(PlaneWaveModel { omega_alpha: c * k_alpha, omega_beta: c * k_beta, a1, a2 })
}

/// The overlap of the initial packets. It takes no time or geometry input.
pub fn exact_epsilon<P: Packet>(alpha: &P, beta: &P) -> Result<Complex64> {
    overlap_pre(alpha, beta)
}

/// Relative phase of the superposition `(|alpha> + e^{i phi}|beta>) / N`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Preparation {
    pub phi: f64,
}

impl Preparation {
    pub fn new(phi: f64) -> Self {
        Self { phi }
    }

    /// `N^2 = 2 + 2 Re(e^{i phi} eps)`.
    pub fn normalizer_sqr(&self, eps: Complex64) -> f64 {
        2.0 + 2.0 * (Complex64::cis(self.phi) * eps).re
    }
}

/// Probability that the prepared photon is found on one arm, given the arm
/// norms `n_a = |alpha_i|^2`, `n_b = |beta_i|^2` and cross term `x = <alpha_i|beta_i>`.
pub fn counting_rate(eps: Complex64, n_a: f64, n_b: f64, x: Complex64, prep: Preparation) -> Result<f64> {
    let norm_sqr = prep.normalizer_sqr(eps);
    if !norm_sqr.is_finite() || norm_sqr <= MIN_NORMALIZER_SQR {
        return Err(Error::DegeneratePreparation(norm_sqr));
    }
    let arm = n_a + n_b + 2.0 * (Complex64::cis(prep.phi) * x).re;
    Ok(arm / norm_sqr)
}

pub fn counting_rate_d1(eps: Complex64, n_a1: f64, n_b1: f64, x1: Complex64, prep: Preparation) -> Result<f64> {
    counting_rate(eps, n_a1, n_b1, x1, prep)
}

pub fn counting_rate_d2(eps: Complex64, n_a2: f64, n_b2: f64, x2: Complex64, prep: Preparation) -> Result<f64> {
    counting_rate(eps, n_a2, n_b2, x2, prep)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub l2: f64,
    pub t2: f64,
    pub eps_exact: Complex64,
    pub eps_wss: Complex64,
    pub rate_exact: f64,
    pub rate_wss: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub model: PlaneWaveModel,
    pub t1: f64,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// `max - min` of `rate_exact` over the rows.
    pub fn rate_exact_spread(&self) -> f64 {
        spread(self.rows.iter().map(|r| r.rate_exact))
    }

    pub fn rate_wss_spread(&self) -> f64 {
        spread(self.rows.iter().map(|r| r.rate_wss))
    }

    /// Largest `|eps_wss(i) - eps_wss(j)|` over all row pairs.
    pub fn eps_wss_spread(&self) -> f64 {
        max_pairwise(self.rows.iter().map(|r| r.eps_wss))
    }

    pub fn eps_exact_spread(&self) -> f64 {
        max_pairwise(self.rows.iter().map(|r| r.eps_exact))
    }
}

fn spread(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi >= lo {
        hi - lo
    } else {
        0.0
    }
}

fn max_pairwise(values: impl Iterator<Item = Complex64>) -> f64 {
    let values: Vec<_> = values.collect();
    let mut best = 0.0f64;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            best = best.max((a - b).norm());
        }
    }
    best
}

/// `n` D2 positions from `l2_start`, evenly spaced over two spatial periods
/// `2 pi c / |dw|` with the far endpoint excluded. With the default 200 points
/// every position has a partner exactly half a period away.
pub fn default_l2_values(model: &PlaneWaveModel, c: f64, l2_start: f64, n: usize) -> Result<Vec<f64>> {
    let period = model
        .period()
        .ok_or_else(|| Error::invalid("delta_omega", "equal carrier frequencies have no period"))?;
    let span = 2.0 * c * period;
    Ok((0..n).map(|i| l2_start + span * i as f64 / n as f64).collect())
}

/// Moves D2 through `l2_values` and records both predictions at each stop.
///
/// `eps_exact` and `rate_exact` use the plate-time overlaps. `eps_wss` is the
/// plane-wave overlap at `(t1, t2)`, and `rate_wss` substitutes it for `eps`
/// together with the phased arm-1 term `a1 exp(i dw t1)` for the cross term.
pub fn sweep_d2<P: Packet>(
    alpha: &P,
    beta: &P,
    bs: &BeamSplitter,
    geom_base: &ExperimentGeometry,
    l2_values: &[f64],
    prep: Preparation,
    (k_alpha, k_beta): (f64, f64),
) -> Result<SweepResult> {
    if l2_values.is_empty() {
        return Err(Error::invalid("l2_values", "empty sweep"));
    }

    let (sa, sb) = (split(alpha, bs), split(beta, bs));
    let c = geom_base.c();
    let model = derive_plane_wave_model(&sa, &sb, k_alpha, k_beta, c)?;
    let eps_exact = exact_epsilon(alpha, beta)?;
    let (n_a1, n_b1) = (sa.arm1.norm_sqr(), sb.arm1.norm_sqr());
    let rate_exact = counting_rate_d1(eps_exact, n_a1, n_b1, model.a1, prep)?;

    let t1 = geom_base.arrival_time(Detector::D1);
    let x1_wss = model.arm1_term(t1);

    let rows = l2_values
        .iter()
        .map(|&l2| {
            let t2 = geom_base.with_l2(l2)?.arrival_time(Detector::D2);
            let eps_wss = model.wss_epsilon(t1, t2);
            Ok(SweepRow {
                l2,
                t2,
                eps_exact,
                eps_wss,
                rate_exact,
                rate_wss: counting_rate_d1(eps_wss, n_a1, n_b1, x1_wss, prep)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepResult { model, t1, rows })
}
