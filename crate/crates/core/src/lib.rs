//! Color-code to surface-code equivalence.
//!
//! A 2D color code lives on a 2-colex: a trivalent, 3-face-colorable graph
//! embedded on a closed orientable surface, with one qubit per vertex and an
//! X- and Z-type generator on every face. Contracting every face of one color
//! `c` yields a graph `τ_c(Γ)` whose surface code, taken twice, is locally
//! equivalent to the color code. This crate builds that equivalence as an
//! explicit binary symplectic matrix, checks its structural properties on
//! concrete lattices, and decodes color codes by running minimum-weight
//! perfect matching on the two surface codes and lifting the result back.
//!
//! Phases are ignored throughout: Pauli operators are `(x|z)` bit vectors,
//! and every property checked here (commutation, stabilizer membership,
//! syndromes) is phase-insensitive.
//!
//! ```
//! use color2surface::{build_hexagonal_torus, build_map, verify_map, Color, MapConventions};
//!
//! let colex = build_hexagonal_torus(3, 3).unwrap();
//! let conv = MapConventions::standard(&colex, Color::Red).unwrap();
//! let map = build_map(&colex, &conv).unwrap();
//! assert!(map.is_symplectic());
//! assert!(verify_map(&map).all_passed());
//! ```

pub mod cli;
pub mod codemap;
pub mod colex;
pub mod contraction;
pub mod decode;
mod error;
pub mod report;
pub mod simulate;
pub mod stabilizers;
pub mod symplectic;

pub use codemap::{
    basis_change, build_map, hopping_operator, single_qubit_images, verify_closed_forms, verify_hoppers,
    verify_lemma5, verify_lemma6, verify_map, verify_theorem1, Charge, ChargeAssignment, CodeMap,
    FaceConvention, MapArtifact, MapConventions, SplitElement,
};
pub use colex::{
    build_hexagonal_torus, build_square_octagon_rect, build_square_octagon_torus, load_colex, save_colex,
    validate_colex, Colex, Color,
};
pub use contraction::{contract, surface_dual_check, SurfaceGraph};
pub use decode::{
    decode_color, extract_syndrome, mwpm_decode, push_syndrome, DecodeOutcome, MappedDecoder,
    MatchingStrategy, Syndrome,
};
pub use error::{Error, Result};
pub use report::ValidationReport;
pub use simulate::{run_trials, sweep, NoiseModel, TrialStats};
pub use stabilizers::{code_params, color_code, surface_code, surface_pair_code, CodeParams, StabilizerCode};
pub use symplectic::{symplectic_product, Gf2Matrix, Pauli, PauliOp, SpaceId, SymplecticMap};

/// Version of the binary map file layout.
pub const MAP_FORMAT_VERSION: u32 = 1;
