//! Build the color-to-surface map and print where single-qubit Paulis go.
//!
//! cargo run --example build_map

use color2surface::{build_hexagonal_torus, build_map, single_qubit_images, Color, MapConventions};

fn main() -> color2surface::Result<()> {
    let g = build_hexagonal_torus(3, 3)?;
    let cm = build_map(&g, &MapConventions::standard(&g, Color::Red)?)?;
    let sg = cm.surface();
    println!(
        "{} color qubits -> 2 x {} surface qubits, symplectic: {}",
        g.num_vertices(),
        sg.num_edges(),
        cm.is_symplectic()
    );
    for lab in cm.labelings() {
        println!("face {} walk {:?} (m = {})", lab.face, lab.vertices, lab.m);
    }
    println!("qubit\tcopy 1\tcopy 2");
    for row in single_qubit_images(&cm) {
        let [a, b] = cm.map().split_image(&row.image, [sg.space(), sg.space()])?;
        println!("{}{}\t{a}\t{b}", row.pauli.letter(), row.vertex);
    }
    Ok(())
}
