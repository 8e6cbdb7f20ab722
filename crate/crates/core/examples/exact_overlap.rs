//! Closed-form overlap of two Gaussian packets, and how it falls off with
//! center and carrier separation.

use packet_overlap::packets::{GaussianPacket, Packet};

fn main() -> packet_overlap::Result<()> {
    let alpha = GaussianPacket::new(0.0, 1.0, 10.0, 0.0)?;
    let beta = GaussianPacket::new(0.5, 1.2, 10.5, 0.3)?;
    let eps = alpha.inner_product(&beta)?;
    println!("<alpha|beta> = {:.6} {:+.6}i  (|eps| = {:.6})", eps.re, eps.im, eps.norm());

    println!("\ncenter separation d (sigma = 1, k0 = 10)");
    for d in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let b = alpha.translated(d);
        println!("  d = {d:>3}  |eps| = {:.6}", alpha.inner_product(&b)?.norm());
    }

    println!("\ncarrier separation dk (sigma = 1, co-centered)");
    for dk in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let b = GaussianPacket::new(0.0, 1.0, 10.0 + dk, 0.0)?;
        println!("  dk = {dk:>3}  |eps| = {:.6}", alpha.inner_product(&b)?.norm());
    }
    Ok(())
}
