use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use thiserror::Error;

use super::config::{ConfigError, Representation, ScenarioConfig};
use crate::error::Error;
use crate::models::{sweep_d2, Preparation, SweepResult};
use crate::optics::{overlap_post, split, TwoArmState};
use crate::packets::{GridPacket, Packet};

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error("cannot write {path}: {source}")]
    Unwritable { path: String, source: std::io::Error },

    #[error("{0}")]
    DegeneratePreparation(Error),

    #[error("max deviation {max_deviation:.6e} exceeds tolerance {tolerance:.6e}")]
    ToleranceExceeded { max_deviation: f64, tolerance: f64 },

    #[error("wraparound at t = {t}: {source}")]
    Wraparound { t: f64, source: Error },

    #[error("invalid input: {0}")]
    Invalid(Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(e) => e.exit_code(),
            RunError::Unwritable { .. } => 5,
            RunError::DegeneratePreparation(_) => 6,
            RunError::ToleranceExceeded { .. } => 7,
            RunError::Wraparound { .. } => 8,
            RunError::Invalid(_) => 4,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegeneratePreparation(_) => RunError::DegeneratePreparation(e),
            other => RunError::Invalid(other),
        }
    }
}

/// Full round-trip precision for f64.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub const SWEEP_HEADER: &str = "l2,t2,eps_exact_re,eps_exact_im,eps_wss_re,eps_wss_im,rate_exact,rate_wss";
pub const INVARIANCE_HEADER: &str = "t,eps_re,eps_im,abs_dev_from_t0";

pub fn write_sweep_csv(w: &mut impl Write, sweep: &SweepResult) -> std::io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for r in &sweep.rows {
        let fields = [
            r.l2,
            r.t2,
            r.eps_exact.re,
            r.eps_exact.im,
            r.eps_wss.re,
            r.eps_wss.im,
            r.rate_exact,
            r.rate_wss,
        ];
        let line: Vec<String> = fields.into_iter().map(fmt_f64).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceRow {
    pub t: f64,
    pub eps: Complex64,
    pub abs_dev_from_t0: f64,
}

pub fn write_invariance_csv(w: &mut impl Write, rows: &[InvarianceRow]) -> std::io::Result<()> {
    writeln!(w, "{INVARIANCE_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{}",
            fmt_f64(r.t),
            fmt_f64(r.eps.re),
            fmt_f64(r.eps.im),
            fmt_f64(r.abs_dev_from_t0)
        )?;
    }
    Ok(())
}

fn write_file(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>) -> Result<(), RunError> {
    let unwritable = |source| RunError::Unwritable { path: path.display().to_string(), source };
    let mut w = BufWriter::new(File::create(path).map_err(unwritable)?);
    body(&mut w).map_err(unwritable)?;
    w.flush().map_err(unwritable)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub eps_exact: Complex64,
    pub rate_exact_spread: f64,
    pub rate_wss_spread: f64,
    /// Spatial period `2 pi c / |dw|` of the plane-wave curve in `l2`.
    pub wss_period: Option<f64>,
    pub rows: usize,
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "exact eps            = ({:.5e}, {:.5e})", self.eps_exact.re, self.eps_exact.im)?;
        writeln!(f, "max |d rate_exact|   = {:.5e}", self.rate_exact_spread)?;
        writeln!(f, "max |d rate_wss|     = {:.5e}", self.rate_wss_spread)?;
        match self.wss_period {
            Some(p) => writeln!(f, "wss period in l2     = {p:.5e}")?,
            None => writeln!(f, "wss period in l2     = inf")?,
        }
        write!(f, "rows                 = {}", self.rows)
    }
}

/// Computes the D2 sweep for a validated scenario without touching the disk.
pub fn compute_sweep(cfg: &ScenarioConfig) -> Result<SweepResult, RunError> {
    let (alpha, beta) = (cfg.alpha()?, cfg.beta()?);
    let bs = cfg.splitter()?;
    let geom = cfg.geometry()?;
    let l2 = cfg.l2_values()?;
    let prep = Preparation::new(cfg.preparation_phi);

    let sweep = match cfg.representation {
        Representation::Gaussian => sweep_d2(&alpha, &beta, &bs, &geom, &l2, prep, (alpha.k0(), beta.k0()))?,
        Representation::Grid => {
            let grid = cfg.spatial_grid()?;
            let a = GridPacket::sample(&alpha, grid).normalize()?;
            let b = GridPacket::sample(&beta, grid).normalize()?;
            let carriers = (a.carrier_wavenumber(), b.carrier_wavenumber());
            sweep_d2(&a, &b, &bs, &geom, &l2, prep, carriers)?
        }
    };
    Ok(sweep)
}

pub fn run_sweep(cfg: &ScenarioConfig, out: &Path) -> Result<SweepSummary, RunError> {
    let sweep = compute_sweep(cfg)?;
    write_file(out, |w| write_sweep_csv(w, &sweep))?;
    Ok(SweepSummary {
        eps_exact: sweep.rows[0].eps_exact,
        rate_exact_spread: sweep.rate_exact_spread(),
        rate_wss_spread: sweep.rate_wss_spread(),
        wss_period: sweep.model.period().map(|p| p * cfg.geometry.c),
        rows: sweep.rows.len(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceSummary {
    pub eps_t0: Complex64,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub rows: Vec<InvarianceRow>,
}

impl fmt::Display for InvarianceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "eps at t0            = ({:.5e}, {:.5e})", self.eps_t0.re, self.eps_t0.im)?;
        writeln!(f, "max |eps(t) - eps(0)| = {:.5e}", self.max_deviation)?;
        write!(f, "tolerance            = {:.5e}", self.tolerance)
    }
}

fn invariance_rows<P: Packet>(
    sa: &TwoArmState<P>,
    sb: &TwoArmState<P>,
    times: &[f64],
    c: f64,
) -> Result<(Complex64, Vec<InvarianceRow>), RunError> {
    let eps_t0 = overlap_post(sa, sb)?;
    let rows = times
        .iter()
        .map(|&t| {
            let at = |s: &TwoArmState<P>| {
                s.at_time(t, c).map_err(|source| match source {
                    Error::Wraparound { .. } => RunError::Wraparound { t, source },
                    other => RunError::from(other),
                })
            };
            let eps = overlap_post(&at(sa)?, &at(sb)?)?;
            Ok(InvarianceRow { t, eps, abs_dev_from_t0: (eps - eps_t0).norm() })
        })
        .collect::<Result<Vec<_>, RunError>>()?;
    Ok((eps_t0, rows))
}

/// Propagates the split states to each of `times` and checks that the
/// post-plate overlap stays at its plate value.
pub fn compute_invariance(cfg: &ScenarioConfig, times: &[f64]) -> Result<InvarianceSummary, RunError> {
    let (alpha, beta) = (cfg.alpha()?, cfg.beta()?);
    let bs = cfg.splitter()?;
    let c = cfg.geometry.c;

    let (eps_t0, rows) = match cfg.representation {
        Representation::Gaussian => invariance_rows(&split(&alpha, &bs), &split(&beta, &bs), times, c)?,
        Representation::Grid => {
            let grid = cfg.spatial_grid()?;
            let a = GridPacket::sample(&alpha, grid).normalize()?;
            let b = GridPacket::sample(&beta, grid).normalize()?;
            invariance_rows(&split(&a, &bs), &split(&b, &bs), times, c)?
        }
    };
    let max_deviation = rows.iter().map(|r| r.abs_dev_from_t0).fold(0.0, f64::max);
    Ok(InvarianceSummary { eps_t0, max_deviation, tolerance: cfg.tolerance(), rows })
}

/// Writes the per-time CSV, then fails with [`RunError::ToleranceExceeded`]
/// if any deviation is above the configured tolerance.
pub fn run_invariance_report(cfg: &ScenarioConfig, times: &[f64], out: &Path) -> Result<InvarianceSummary, RunError> {
    let summary = compute_invariance(cfg, times)?;
    write_file(out, |w| write_invariance_csv(w, &summary.rows))?;
    if summary.max_deviation > summary.tolerance {
        return Err(RunError::ToleranceExceeded {
            max_deviation: summary.max_deviation,
            tolerance: summary.tolerance,
        });
    }
    Ok(summary)
}
