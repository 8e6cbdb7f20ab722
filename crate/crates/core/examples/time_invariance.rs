//! Splits two packets at a plate and tracks
//! `eps(t) = <alpha_1(t)|beta_1(t)> + <alpha_2(t)|beta_2(t)>` in both the
//! analytic and the sampled representation.

use packet_overlap::optics::{arm_overlaps, overlap_at_time, overlap_pre, split, BeamSplitter};
use packet_overlap::packets::{GaussianPacket, GridPacket, SpatialGrid};
use packet_overlap::Complex64;

fn main() -> packet_overlap::Result<()> {
    let alpha = GaussianPacket::new(0.0, 1.0, 10.0, 0.0)?;
    let beta = GaussianPacket::new(0.4, 0.9, 11.0, 0.7)?;
    let bs = BeamSplitter::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8))?;

    let (sa, sb) = (split(&alpha, &bs), split(&beta, &bs));
    let pre = overlap_pre(&alpha, &beta)?;
    let [x1, x2] = arm_overlaps(&sa, &sb)?;
    println!("before the plate   eps = {pre:.12}");
    println!("reflected arm      <a1|b1> = {x1:.12}");
    println!("transmitted arm    <a2|b2> = {x2:.12}");

    let grid = SpatialGrid::new(-20.0, 1.0 / 16.0, 4096)?;
    let ga = GridPacket::sample(&alpha, grid).normalize()?;
    let gb = GridPacket::sample(&beta, grid).normalize()?;
    let (gsa, gsb) = (split(&ga, &bs), split(&gb, &bs));
    let g0 = overlap_at_time(&gsa, &gsb, 0.0, 1.0)?;

    println!("\n{:>8}  {:>14}  {:>14}", "t", "|analytic dev|", "|grid dev|");
    for t in [0.0, 1.0, 10.0, 50.0, 100.0, 200.0] {
        let a = overlap_at_time(&sa, &sb, t, 1.0)?;
        let g = overlap_at_time(&gsa, &gsb, t, 1.0)?;
        println!("{t:>8.1}  {:>14.3e}  {:>14.3e}", (a - pre).norm(), (g - g0).norm());
    }
    Ok(())
}
