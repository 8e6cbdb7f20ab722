//! Scenario files.
//!
//! A scenario is a TOML document:
//!
//! ```toml
//! representation = "grid"          # or "gaussian"
//! preparation_phi = 0.0            # optional
//!
//! [packet_alpha]
//! x0 = 0.0
//! sigma = 1.0
//! k0 = 10.0
//! phase = 0.0                      # optional
//!
//! [packet_beta]
//! x0 = 0.0
//! sigma = 1.0
//! k0 = 11.0
//!
//! [splitter]                       # optional, symmetric 50/50 by default
//! r_re = 0.7071067811865476
//! r_im = 0.0
//! t_re = 0.0
//! t_im = 0.7071067811865476
//!
//! [geometry]
//! l1 = 1.0
//! l2_min = 1.0
//! l2_max = 13.0
//! n_points = 200                   # optional
//! c = 1.0                          # optional
//!
//! [grid]                           # required for representation = "grid"
//! x_min = -40.0
//! dx = 0.0625
//! n = 4096
//!
//! [tolerances]                     # optional
//! analytic_tol = 1e-12
//! grid_tol = 1e-8
//! ```

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use thiserror::Error;

use crate::error::Error;
use crate::optics::{BeamSplitter, ExperimentGeometry};
use crate::packets::{GaussianPacket, GridPacket, Packet, SpatialGrid};

/// How far the sampled norm of a packet may fall short of one before the grid
/// is considered too small to hold it.
pub const GRID_NORM_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Missing { path: String, source: std::io::Error },

    #[error("schema error at `{key}`: {message}")]
    Schema { key: String, message: String },

    #[error("invalid scenario at `{key}`: {message}")]
    Invariant { key: String, message: String },
}

impl ConfigError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ConfigError::Missing { .. } => 2,
            ConfigError::Schema { .. } => 3,
            ConfigError::Invariant { .. } => 4,
        }
    }

    fn invariant(key: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError::Invariant { key: key.into(), message: message.into() }
    }

    fn from_domain(prefix: &str, err: Error) -> Self {
        match err {
            Error::InvalidParameter { name, reason } => Self::invariant(format!("{prefix}.{name}"), reason),
            other => Self::invariant(prefix, other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Gaussian,
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketConfig {
    pub x0: f64,
    pub sigma: f64,
    pub k0: f64,
    #[serde(default)]
    pub phase: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitterConfig {
    pub r_re: f64,
    pub r_im: f64,
    pub t_re: f64,
    pub t_im: f64,
}

impl Default for SplitterConfig {
    fn default() -> Self {
        Self { r_re: FRAC_1_SQRT_2, r_im: 0.0, t_re: 0.0, t_im: FRAC_1_SQRT_2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    pub l1: f64,
    pub l2_min: f64,
    pub l2_max: f64,
    #[serde(default = "default_n_points")]
    pub n_points: usize,
    #[serde(default = "default_c")]
    pub c: f64,
}

fn default_n_points() -> usize {
    crate::models::DEFAULT_SWEEP_POINTS
}

fn default_c() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub x_min: f64,
    pub dx: f64,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub analytic_tol: f64,
    pub grid_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { analytic_tol: 1e-12, grid_tol: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub representation: Representation,
    pub packet_alpha: PacketConfig,
    pub packet_beta: PacketConfig,
    #[serde(default)]
    pub splitter: SplitterConfig,
    pub geometry: GeometryConfig,
    #[serde(default)]
    pub preparation_phi: f64,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

pub fn load_config(path: impl AsRef<Path>) -> Result<ScenarioConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| ConfigError::Missing { path: path.display().to_string(), source })?;
    parse_config(&text)
}

/// Parses and validates a scenario document.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let de = toml::Deserializer::parse(text)
        .map_err(|e| ConfigError::Schema { key: String::new(), message: e.to_string() })?;
    let cfg: ScenarioConfig = serde_path_to_error::deserialize(de).map_err(|e| ConfigError::Schema {
        key: e.path().to_string(),
        message: e.inner().message().to_string(),
    })?;
    cfg.validate()?;
    Ok(cfg)
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.alpha()?;
        self.beta()?;
        self.splitter()?;
        self.geometry()?;
        self.l2_values()?;

        if !self.preparation_phi.is_finite() {
            return Err(ConfigError::invariant("preparation_phi", "must be finite"));
        }
        let tol = &self.tolerances;
        for (key, v) in [("tolerances.analytic_tol", tol.analytic_tol), ("tolerances.grid_tol", tol.grid_tol)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(ConfigError::invariant(key, format!("must be positive, got {v}")));
            }
        }

        if self.representation == Representation::Grid {
            let grid = self.spatial_grid()?;
            for (key, g) in [("packet_alpha", self.alpha()?), ("packet_beta", self.beta()?)] {
                let sampled = GridPacket::sample(&g, grid).norm_sqr();
                if (sampled - 1.0).abs() > GRID_NORM_TOL {
                    return Err(ConfigError::invariant(
                        key,
                        format!("packet is not resolved by the grid (sampled norm^2 = {sampled:.6e})"),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn alpha(&self) -> Result<GaussianPacket, ConfigError> {
        build_packet("packet_alpha", &self.packet_alpha)
    }

    pub fn beta(&self) -> Result<GaussianPacket, ConfigError> {
        build_packet("packet_beta", &self.packet_beta)
    }

    pub fn splitter(&self) -> Result<BeamSplitter, ConfigError> {
        let s = &self.splitter;
        BeamSplitter::new(Complex64::new(s.r_re, s.r_im), Complex64::new(s.t_re, s.t_im))
            .map_err(|e| ConfigError::from_domain("splitter", e))
    }

    /// Geometry with D2 at the start of the sweep.
    pub fn geometry(&self) -> Result<ExperimentGeometry, ConfigError> {
        let g = &self.geometry;
        ExperimentGeometry::new(g.l1, g.l2_min, g.c).map_err(|e| match e {
            Error::InvalidParameter { name: "l2", reason } => ConfigError::invariant("geometry.l2_min", reason),
            other => ConfigError::from_domain("geometry", other),
        })
    }

    /// `n_points` D2 positions from `l2_min` to `l2_max` inclusive.
    pub fn l2_values(&self) -> Result<Vec<f64>, ConfigError> {
        let g = &self.geometry;
        if !(g.l2_max.is_finite() && g.l2_max >= g.l2_min) {
            return Err(ConfigError::invariant(
                "geometry.l2_max",
                format!("l2_max = {} is below l2_min = {}", g.l2_max, g.l2_min),
            ));
        }
        match g.n_points {
            0 => Err(ConfigError::invariant("geometry.n_points", "need at least one point")),
            1 => Ok(vec![g.l2_min]),
            n => {
                let step = (g.l2_max - g.l2_min) / (n - 1) as f64;
                Ok((0..n).map(|i| if i == n - 1 { g.l2_max } else { g.l2_min + step * i as f64 }).collect())
            }
        }
    }

    pub fn spatial_grid(&self) -> Result<SpatialGrid, ConfigError> {
        let g = self.grid.ok_or_else(|| ConfigError::Schema {
            key: "grid".into(),
            message: "missing table, required when representation = \"grid\"".into(),
        })?;
        SpatialGrid::new(g.x_min, g.dx, g.n).map_err(|e| ConfigError::from_domain("grid", e))
    }

    /// Tolerance that applies to the configured representation.
    pub fn tolerance(&self) -> f64 {
        match self.representation {
            Representation::Gaussian => self.tolerances.analytic_tol,
            Representation::Grid => self.tolerances.grid_tol,
        }
    }
}

fn build_packet(key: &str, p: &PacketConfig) -> Result<GaussianPacket, ConfigError> {
    GaussianPacket::new(p.x0, p.sigma, p.k0, p.phase).map_err(|e| ConfigError::from_domain(key, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
        representation = "gaussian"
        [packet_alpha]
        x0 = 0.0
        sigma = 1.0
        k0 = 10.0
        [packet_beta]
        x0 = 0.0
        sigma = 1.0
        k0 = 11.0
        [geometry]
        l1 = 1.0
        l2_min = 1.0
        l2_max = 2.0
    "#;

    #[test]
    fn minimal_config_is_defaulted() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.geometry.c, 1.0);
        assert_eq!(cfg.geometry.n_points, 200);
        assert_eq!(cfg.preparation_phi, 0.0);
        assert_eq!(cfg.splitter().unwrap(), BeamSplitter::symmetric());
        assert_eq!(cfg.packet_alpha.phase, 0.0);
        assert_eq!(cfg.tolerances, Tolerances::default());
        assert_eq!(cfg.l2_values().unwrap().len(), 200);
    }

    #[test]
    fn integer_literals_are_accepted() {
        let text = MINIMAL.replace("l1 = 1.0", "l1 = 1");
        assert_eq!(parse_config(&text).unwrap().geometry.l1, 1.0);
    }

    #[test]
    fn schema_errors_carry_key_path() {
        let text = MINIMAL.replace("sigma = 1.0\n        k0 = 11.0", "sigma = \"wide\"\n        k0 = 11.0");
        match parse_config(&text) {
            Err(ConfigError::Schema { key, .. }) => assert_eq!(key, "packet_beta.sigma"),
            other => panic!("unexpected {other:?}"),
        }

        let text = MINIMAL.replace("l1 = 1.0", "l1 = 1.0\n        l3 = 2.0");
        let err = parse_config(&text).unwrap_err();
        assert_eq!(err.exit_code(), 3);

        let text = MINIMAL.replace("\"gaussian\"", "\"spline\"");
        assert_eq!(parse_config(&text).unwrap_err().exit_code(), 3);

        let text = MINIMAL.replace("\"gaussian\"", "\"grid\"");
        match parse_config(&text) {
            Err(ConfigError::Schema { key, .. }) => assert_eq!(key, "grid"),
            other => panic!("unexpected {other:?}"),
        }

        assert_eq!(parse_config("representation = [").unwrap_err().exit_code(), 3);
    }

    #[test]
    fn lossy_splitter_is_rejected() {
        let r = 0.9f64.sqrt();
        let text = format!("{MINIMAL}\n[splitter]\nr_re = {r}\nr_im = 0.0\nt_re = 0.0\nt_im = 0.0\n");
        match parse_config(&text) {
            Err(err @ ConfigError::Invariant { .. }) => {
                assert_eq!(err.exit_code(), 4);
                assert!(err.to_string().contains("splitter"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reversed_l2_range_is_rejected() {
        let text = MINIMAL.replace("l2_max = 2.0", "l2_max = 0.5");
        assert_eq!(parse_config(&text).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn packet_invariants_name_the_field() {
        let text = MINIMAL.replacen("k0 = 10.0", "k0 = 2.0", 1);
        match parse_config(&text) {
            Err(ConfigError::Invariant { key, .. }) => assert_eq!(key, "packet_alpha.k0"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unresolved_packet_on_grid() {
        let text = MINIMAL.replace("\"gaussian\"", "\"grid\"") + "\n[grid]\nx_min = 5.0\ndx = 0.05\nn = 64\n";
        assert_eq!(parse_config(&text).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn single_point_sweep() {
        let text = MINIMAL.replace("l2_max = 2.0", "l2_max = 2.0\n        n_points = 1");
        assert_eq!(parse_config(&text).unwrap().l2_values().unwrap(), vec![1.0]);
    }
}
