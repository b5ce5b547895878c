//! Contract a lattice along each color and compare code parameters.
//!
//! cargo run --example code_parameters

use color2surface::{build_hexagonal_torus, code_params, color_code, contract, surface_code, Color};

fn main() -> color2surface::Result<()> {
    for (rows, cols) in [(3, 3), (6, 6)] {
        let g = build_hexagonal_torus(rows, cols)?;
        let color = color_code(&g)?;
        println!("hex({rows},{cols}) color code {}", code_params(&color));
        for c in Color::ALL {
            let sg = contract(&g, c)?;
            let code = surface_code(&sg)?;
            println!(
                "  contracted along {c}: V={} E={} F={} surface code {}",
                sg.num_vertices(),
                sg.num_edges(),
                sg.num_faces(),
                code_params(&code)
            );
        }
    }
    Ok(())
}
