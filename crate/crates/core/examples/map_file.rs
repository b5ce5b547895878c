//! Save a map to disk, load it back and decode from the loaded copy.
//!
//! cargo run --example map_file

use color2surface::{
    build_hexagonal_torus, build_map, Color, MapArtifact, MapConventions, MappedDecoder, MatchingStrategy,
};

fn main() -> color2surface::Result<()> {
    let g = build_hexagonal_torus(6, 6)?;
    let artifact = MapArtifact::new(build_map(&g, &MapConventions::standard(&g, Color::Green)?)?)?;
    let path = std::env::temp_dir().join("color2surface-example.map");
    artifact.write(&path)?;
    println!("wrote {} ({} bytes)", path.display(), std::fs::metadata(&path)?.len());

    let loaded = MapArtifact::read(&path)?;
    loaded.check_lattice(&g)?;
    println!("same matrix after reload: {}", loaded.code_map().map() == artifact.code_map().map());

    let other = build_hexagonal_torus(3, 3)?;
    if let Err(e) = loaded.check_lattice(&other) {
        println!("wrong lattice rejected: {e}");
    }

    let decoder = MappedDecoder::from_artifact(loaded, MatchingStrategy::Exact)?;
    println!("decoder ready for {} qubits", decoder.color_code().num_qubits());
    std::fs::remove_file(&path)?;
    Ok(())
}
