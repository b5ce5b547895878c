//! Estimate logical failure rates under depolarizing noise and print CSV.
//!
//! cargo run --release --example simulate_sweep

use color2surface::simulate::{prepare_decoder, write_csv};
use color2surface::{build_hexagonal_torus, sweep, Color, MapConventions, MatchingStrategy};

fn main() -> color2surface::Result<()> {
    let p_values = [0.005, 0.01, 0.02, 0.04];
    let mut out = Vec::new();
    for size in [3, 6, 9] {
        let g = build_hexagonal_torus(size, size)?;
        let decoder =
            prepare_decoder(&g, &MapConventions::standard(&g, Color::Red)?, MatchingStrategy::Exact)?;
        let rows = sweep(&decoder, &p_values, 20_000, 7)?;
        let mut csv = Vec::new();
        write_csv(&mut csv, &g, &decoder, &rows, false)?;
        let text = String::from_utf8(csv).expect("CSV is UTF-8");
        let mut lines = text.lines();
        let header = lines.next().unwrap_or_default();
        if out.is_empty() {
            out.push(header.to_string());
        }
        out.extend(lines.map(str::to_string));
    }
    println!("{}", out.join("\n"));
    Ok(())
}
