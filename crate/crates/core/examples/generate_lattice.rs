//! Build the two lattice families, validate them and print their shape.
//!
//! cargo run --example generate_lattice

use color2surface::{build_hexagonal_torus, build_square_octagon_rect, save_colex, validate_colex, Color};

fn main() -> color2surface::Result<()> {
    let lattices = [
        ("hexagonal 6x6", build_hexagonal_torus(6, 6)?),
        ("square-octagon 2x4", build_square_octagon_rect(2, 4)?),
    ];
    for (name, g) in &lattices {
        let report = validate_colex(g);
        println!(
            "{name}: {} vertices, {} edges, {} faces, genus {}",
            g.num_vertices(),
            g.edges().len(),
            g.faces().len(),
            g.genus()
        );
        for c in Color::ALL {
            println!("  {c}: {} faces, {} edges", g.count_faces(c), g.edges_of_color(c).count());
        }
        println!("  validation: {}", if report.all_passed() { "ok" } else { "FAILED" });
    }
    let json = save_colex(&lattices[0].1);
    println!("serialized hexagonal lattice: {} bytes of JSON", json.len());

    match build_hexagonal_torus(4, 3) {
        Ok(_) => println!("4x3 unexpectedly built"),
        Err(e) => println!("4x3 rejected: {e}"),
    }
    Ok(())
}
