//! Moves D2 over two plane-wave periods and prints the D2 counting rate for
//! the prepared state `(|alpha> + e^{i phi}|beta>) / N`, exact and plane-wave.

use packet_overlap::models::{default_l2_values, sweep_d2, Preparation};
use packet_overlap::optics::{BeamSplitter, ExperimentGeometry};
use packet_overlap::packets::GaussianPacket;

fn main() -> packet_overlap::Result<()> {
    let alpha = GaussianPacket::new(0.0, 1.0, 10.0, 0.0)?;
    let beta = GaussianPacket::new(0.0, 1.0, 11.0, 0.0)?;
    let bs = BeamSplitter::symmetric();
    let geom = ExperimentGeometry::new(1.0, 1.0, 1.0)?;
    let prep = Preparation::new(0.0);
    let carriers = (alpha.k0(), beta.k0());

    let probe = sweep_d2(&alpha, &beta, &bs, &geom, &[geom.l2()], prep, carriers)?;
    let l2 = default_l2_values(&probe.model, geom.c(), geom.l2(), 24)?;
    let sweep = sweep_d2(&alpha, &beta, &bs, &geom, &l2, prep, carriers)?;

    println!("{:>8}  {:>10}  {:>10}", "l2", "rate", "rate_wss");
    for row in &sweep.rows {
        println!("{:>8.4}  {:>10.6}  {:>10.6}", row.l2, row.rate_exact, row.rate_wss);
    }
    println!("\nspread: exact {:.3e}, plane-wave {:.3e}", sweep.rate_exact_spread(), sweep.rate_wss_spread());
    Ok(())
}
