//! Loads a TOML scenario, runs the sweep and an invariance report, and
//! writes both CSV files into a scratch directory.
//!
//! ```text
//! cargo run --example scenario_file -- scenarios/grid_reference.toml
//! ```

use std::path::PathBuf;

use packet_overlap::cli::{load_config, run_invariance_report, run_sweep};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios/distinct_carriers.toml")
    });
    let cfg = load_config(&path)?;
    let out = std::env::temp_dir().join("packet-overlap-example");
    std::fs::create_dir_all(&out)?;

    let sweep = run_sweep(&cfg, &out.join("sweep.csv"))?;
    println!("{}\n{sweep}\n", path.display());

    let times = [0.0, 1.0, 5.0, 25.0, 60.0];
    let report = run_invariance_report(&cfg, &times, &out.join("invariance.csv"))?;
    println!("{report}");
    println!("\nwrote {}", out.display());
    Ok(())
}
