//! The plane-wave approximation assigns each arm the phase
//! `exp(i (w_beta - w_alpha) t_i)`, which makes its overlap depend on the
//! D2 arrival time. The exact overlap does not.

use packet_overlap::models::{derive_plane_wave_model, exact_epsilon};
use packet_overlap::optics::{split, BeamSplitter, Detector, ExperimentGeometry};
use packet_overlap::packets::GaussianPacket;

fn main() -> packet_overlap::Result<()> {
    let alpha = GaussianPacket::new(0.0, 1.0, 10.0, 0.0)?;
    let beta = GaussianPacket::new(0.0, 1.0, 11.0, 0.0)?;
    let bs = BeamSplitter::symmetric();
    let c = 1.0;
    let model = derive_plane_wave_model(&split(&alpha, &bs), &split(&beta, &bs), alpha.k0(), beta.k0(), c)?;
    let eps = exact_epsilon(&alpha, &beta)?;
    let period = model.period().expect("distinct carriers");

    println!("dw = {}, period in t2 = {period:.6}", model.delta_omega());
    println!("|a1| = {:.6}, |a2| = {:.6}, exact eps = {eps:.6}", model.a1.norm(), model.a2.norm());

    let base = ExperimentGeometry::new(1.0, 1.0, c)?;
    let t1 = base.arrival_time(Detector::D1);
    println!("\n{:>8}  {:>22}  {:>10}", "l2", "eps_wss", "|eps_wss|");
    for i in 0..=8 {
        let geom = base.with_l2(1.0 + i as f64 * period * c / 8.0)?;
        let w = model.wss_epsilon(t1, geom.arrival_time(Detector::D2));
        println!("{:>8.4}  {:>10.6} {:+.6}i  {:>10.6}", geom.l2(), w.re, w.im, w.norm());
    }
    Ok(())
}
