//! Decode color-code errors by matching on the two surface copies.
//!
//! cargo run --example decode_errors

use color2surface::simulate::prepare_decoder;
use color2surface::{build_hexagonal_torus, Color, MapConventions, MatchingStrategy, Pauli, PauliOp};

fn main() -> color2surface::Result<()> {
    for (rows, cols) in [(3, 3), (6, 6)] {
        let g = build_hexagonal_torus(rows, cols)?;
        let conv = MapConventions::standard(&g, Color::Blue)?;
        let decoder = prepare_decoder(&g, &conv, MatchingStrategy::Exact)?;
        let space = decoder.color_code().space();
        let mut corrected = 0;
        let mut total = 0;
        for q in 0..g.num_vertices() {
            for p in [Pauli::X, Pauli::Y, Pauli::Z] {
                total += 1;
                if decoder.decode_error(&PauliOp::single(space, q, p))?.success {
                    corrected += 1;
                }
            }
        }
        println!("hex({rows},{cols}): {corrected}/{total} single-qubit errors corrected");
    }

    let g = build_hexagonal_torus(6, 6)?;
    let decoder = prepare_decoder(&g, &MapConventions::standard(&g, Color::Red)?, MatchingStrategy::Greedy)?;
    let mut e = PauliOp::identity(decoder.color_code().space());
    e.set(3, Pauli::X);
    e.set(40, Pauli::Z);
    let outcome = decoder.decode_error(&e)?;
    println!("error      {e}\ncorrection {}\nsuccess {}", outcome.correction, outcome.success);
    Ok(())
}
