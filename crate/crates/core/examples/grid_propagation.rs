//! Spectral translation on a periodic grid, checked against the analytic
//! packet, and the wraparound guard that stops a packet leaving the window.

use packet_overlap::packets::{GaussianPacket, GridPacket, Packet, SpatialGrid};
use packet_overlap::Error;

fn main() -> packet_overlap::Result<()> {
    let packet = GaussianPacket::new(0.0, 1.0, 12.0, 0.0)?;
    let grid = SpatialGrid::new(-20.0, 1.0 / 16.0, 1024)?;
    let sampled = GridPacket::sample(&packet, grid).normalize()?;
    println!("grid [{}, {}), n = {}, centroid k = {:.6}", grid.x_min(), grid.x_end(), grid.len(), sampled.spectral_centroid());

    for t in [0.3, 7.77, 25.0] {
        let moved = sampled.propagate(t, 1.0)?;
        let expected = GridPacket::sample(&packet.propagate(t, 1.0)?, grid).normalize()?;
        let max_err = moved
            .amplitudes()
            .iter()
            .zip(expected.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!("t = {t:>5}: max |grid - analytic| = {max_err:.3e}, norm^2 = {:.15}", moved.norm_sqr());
    }

    match sampled.propagate(40.0, 1.0) {
        Err(Error::Wraparound { shift, mass, .. }) => {
            println!("t = 40 refused: shift {shift} would wrap mass {mass:.3e}")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
