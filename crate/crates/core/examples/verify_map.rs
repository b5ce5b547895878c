//! Run every structural check on maps built with random conventions.
//!
//! cargo run --example verify_map

use color2surface::{build_hexagonal_torus, verify_theorem1, Color, MapConventions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> color2surface::Result<()> {
    let g = build_hexagonal_torus(6, 6)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for c in Color::ALL {
        let conv = MapConventions::random(&g, c, &mut rng);
        let report = verify_theorem1(&g, &conv);
        println!("color {c}: {} checks, all passed: {}", report.checks.len(), report.all_passed());
        for check in &report.checks {
            if !check.passed {
                println!("  {}: {}", check.name, check.detail.as_deref().unwrap_or(""));
            }
        }
    }
    let report = verify_theorem1(&g, &MapConventions::standard(&g, Color::Green)?);
    println!("{report}");
    Ok(())
}
