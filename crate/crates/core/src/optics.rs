//! The partially reflecting plate and the exact overlap of the packets.
//!
//! Each output arm has its own axis starting at the plate, and the split is
//! instantaneous at `t = 0`. An arm packet is the incoming packet carried
//! along that axis with the plate amplitude (`r` toward D1, `t` toward D2)
//! attached, so the two-arm state is a fixed unitary image of the input.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::packets::Packet;

/// Largest accepted deviation of `|r|^2 + |t|^2` from one.
pub const UNITARITY_TOL: f64 = 1e-9;

/// Lossless plate: reflection amplitude `r` toward D1, transmission `t` toward D2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    r: Complex64,
    t: Complex64,
}

impl BeamSplitter {
    pub fn new(r: Complex64, t: Complex64) -> Result<Self> {
        let total = r.norm_sqr() + t.norm_sqr();
        if !total.is_finite() || (total - 1.0).abs() > UNITARITY_TOL {
            return Err(Error::NonUnitaryPlate(total));
        }
        Ok(Self { r, t })
    }

    /// `r = 1/sqrt(2)`, `t = i/sqrt(2)`.
    pub fn symmetric() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self { r: Complex64::new(h, 0.0), t: Complex64::new(0.0, h) }
    }

    pub fn r(&self) -> Complex64 {
        self.r
    }

    pub fn t(&self) -> Complex64 {
        self.t
    }

    pub fn reflectivity(&self) -> f64 {
        self.r.norm_sqr()
    }

    pub fn transmissivity(&self) -> f64 {
        self.t.norm_sqr()
    }
}

impl Default for BeamSplitter {
    fn default() -> Self {
        Self::symmetric()
    }
}

/// `amplitude * packet` on one output arm.
#[derive(Debug, Clone, PartialEq)]
pub struct Arm<P> {
    pub amplitude: Complex64,
    pub packet: P,
}

impl<P: Packet> Arm<P> {
    pub fn new(amplitude: Complex64, packet: P) -> Self {
        Self { amplitude, packet }
    }

    /// An empty arm that still remembers its packet's grid.
    pub fn zero(packet: P) -> Self {
        Self { amplitude: Complex64::new(0.0, 0.0), packet }
    }

    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        let shapes = self.packet.inner_product(&other.packet)?;
        Ok(self.amplitude.conj() * other.amplitude * shapes)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitude.norm_sqr() * self.packet.norm_sqr()
    }

    pub fn propagate(&self, t: f64, c: f64) -> Result<Self> {
        Ok(Self { amplitude: self.amplitude, packet: self.packet.propagate(t, c)? })
    }
}

/// Photon state after the plate: one packet heading for D1, one for D2.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoArmState<P> {
    pub arm1: Arm<P>,
    pub arm2: Arm<P>,
}

impl<P: Packet> TwoArmState<P> {
    pub fn norm_sqr(&self) -> f64 {
        self.arm1.norm_sqr() + self.arm2.norm_sqr()
    }

    /// Both arms advanced by `t`.
    pub fn at_time(&self, t: f64, c: f64) -> Result<Self> {
        Ok(Self { arm1: self.arm1.propagate(t, c)?, arm2: self.arm2.propagate(t, c)? })
    }

    pub fn with_arm2_zeroed(&self) -> Self {
        Self { arm1: self.arm1.clone(), arm2: Arm::zero(self.arm2.packet.clone()) }
    }
}

/// `p -> (r p, t p)`.
pub fn split<P: Packet>(p: &P, bs: &BeamSplitter) -> TwoArmState<P> {
    TwoArmState { arm1: Arm::new(bs.r, p.clone()), arm2: Arm::new(bs.t, p.clone()) }
}

/// `epsilon = <alpha|beta>` with both packets still heading for the plate.
pub fn overlap_pre<P: Packet>(alpha: &P, beta: &P) -> Result<Complex64> {
    alpha.inner_product(beta)
}

/// The two per-arm terms `[<alpha_1|beta_1>, <alpha_2|beta_2>]`.
pub fn arm_overlaps<P: Packet>(sa: &TwoArmState<P>, sb: &TwoArmState<P>) -> Result<[Complex64; 2]> {
    Ok([sa.arm1.inner_product(&sb.arm1)?, sa.arm2.inner_product(&sb.arm2)?])
}

/// `epsilon = <alpha_1|beta_1> + <alpha_2|beta_2>`.
pub fn overlap_post<P: Packet>(sa: &TwoArmState<P>, sb: &TwoArmState<P>) -> Result<Complex64> {
    let [x1, x2] = arm_overlaps(sa, sb)?;
    Ok(x1 + x2)
}

/// [`overlap_post`] after all four arm packets have propagated for `t`.
pub fn overlap_at_time<P: Packet>(
    sa: &TwoArmState<P>,
    sb: &TwoArmState<P>,
    t: f64,
    c: f64,
) -> Result<Complex64> {
    overlap_post(&sa.at_time(t, c)?, &sb.at_time(t, c)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Detector {
    D1,
    D2,
}

/// Plate-to-detector distances and the propagation speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentGeometry {
    l1: f64,
    l2: f64,
    c: f64,
}

impl ExperimentGeometry {
    pub fn new(l1: f64, l2: f64, c: f64) -> Result<Self> {
        for (name, v) in [("l1", l1), ("l2", l2), ("c", c)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::invalid(name, format!("must be positive, got {v}")));
            }
        }
        Ok(Self { l1, l2, c })
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Same setup with D2 moved to `l2`.
    pub fn with_l2(&self, l2: f64) -> Result<Self> {
        Self::new(self.l1, l2, self.c)
    }

    pub fn arrival_time(&self, detector: Detector) -> f64 {
        match detector {
            Detector::D1 => self.l1 / self.c,
            Detector::D2 => self.l2 / self.c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packets::{GaussianPacket, GridPacket, SpatialGrid};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pair() -> (GaussianPacket, GaussianPacket) {
        (
            GaussianPacket::new(-1.0, 1.0, 10.0, 0.0).unwrap(),
            GaussianPacket::new(0.0, 1.2, 10.5, 0.7).unwrap(),
        )
    }

    #[test]
    fn splitter_unitarity() {
        assert!(BeamSplitter::new(c(1.0, 0.0), c(0.0, 0.0)).is_ok());
        assert!(matches!(
            BeamSplitter::new(c(0.9f64.sqrt(), 0.0), c(0.0, 0.0)),
            Err(Error::NonUnitaryPlate(_))
        ));
        let bs = BeamSplitter::symmetric();
        assert!((bs.reflectivity() + bs.transmissivity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn perfect_mirror() {
        let (a, _) = pair();
        let s = split(&a, &BeamSplitter::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap());
        assert_eq!(s.arm1.amplitude, c(1.0, 0.0));
        assert_eq!(s.arm1.packet, a);
        assert_eq!(s.arm2.norm_sqr(), 0.0);
    }

    #[test]
    fn symmetric_split_halves_norm() {
        let (a, _) = pair();
        let bs = BeamSplitter::new(c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)).unwrap();
        let s = split(&a, &bs);
        assert!((s.arm1.norm_sqr() - 0.5).abs() < 1e-12);
        assert!((s.arm2.norm_sqr() - 0.5).abs() < 1e-12);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn post_equals_pre() {
        let (a, b) = pair();
        let bs = BeamSplitter::new(c(0.6, 0.0), c(0.0, -0.8)).unwrap();
        let pre = overlap_pre(&a, &b).unwrap();
        let post = overlap_post(&split(&a, &bs), &split(&b, &bs)).unwrap();
        assert!((pre - post).norm() < 1e-12);
    }

    #[test]
    fn self_overlap_post_is_one() {
        let (a, _) = pair();
        let s = split(&a, &BeamSplitter::symmetric());
        assert!((overlap_post(&s, &s).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zeroed_arm_leaves_single_term() {
        let (a, b) = pair();
        let bs = BeamSplitter::symmetric();
        let sa = split(&a, &bs);
        let sb = split(&b, &bs).with_arm2_zeroed();
        let [x1, x2] = arm_overlaps(&sa, &sb).unwrap();
        assert_eq!(x2, c(0.0, 0.0));
        assert_eq!(overlap_post(&sa, &sb).unwrap(), x1);
    }

    #[test]
    fn overlap_at_time_analytic() {
        let (a, b) = pair();
        let bs = BeamSplitter::symmetric();
        let (sa, sb) = (split(&a, &bs), split(&b, &bs));
        let at0 = overlap_post(&sa, &sb).unwrap();
        assert_eq!(overlap_at_time(&sa, &sb, 0.0, 1.0).unwrap(), at0);
        for t in [0.5, 3.0, 40.0] {
            let v = overlap_at_time(&sa, &sb, t, 2.0).unwrap();
            assert!((v - at0).norm() <= 1e-12);
        }
    }

    #[test]
    fn overlap_at_time_grid_wraparound() {
        let grid = SpatialGrid::new(-8.0, 0.0625, 256).unwrap();
        let (a, b) = pair();
        let bs = BeamSplitter::symmetric();
        let sa = split(&GridPacket::sample(&a, grid), &bs);
        let sb = split(&GridPacket::sample(&b, grid), &bs);
        assert!(overlap_at_time(&sa, &sb, 1.0, 1.0).is_ok());
        assert!(matches!(
            overlap_at_time(&sa, &sb, 20.0, 1.0),
            Err(Error::Wraparound { .. })
        ));
    }

    #[test]
    fn arrival_times() {
        let g = ExperimentGeometry::new(1.0, 3.0, 2.0).unwrap();
        assert_eq!(g.arrival_time(Detector::D1), 0.5);
        assert_eq!(g.arrival_time(Detector::D2), 1.5);
        let unit = ExperimentGeometry::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(unit.arrival_time(Detector::D1), 1.0);
        let doubled = g.with_l2(6.0).unwrap();
        assert_eq!(doubled.arrival_time(Detector::D2), 2.0 * g.arrival_time(Detector::D2));
        assert!(ExperimentGeometry::new(0.0, 1.0, 1.0).is_err());
        assert!(ExperimentGeometry::new(1.0, 1.0, -1.0).is_err());
    }
}
