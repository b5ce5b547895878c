//! The map `π` from the color code to two copies of the contracted surface code.

mod artifact;
mod build;
mod conventions;
mod hopping;
mod images;
mod verify;

pub use artifact::MapArtifact;
pub use build::{build_map, CodeMap, PairBuilder};
pub use conventions::{compatible_splits, FaceConvention, FaceLabeling, MapConventions, SplitElement};
pub use hopping::{hopping_operator, Charge, ChargeAssignment, ColoredCharge};
pub use images::{closed_form_images, single_qubit_images, verify_closed_forms, SingleQubitImage};
pub use verify::{
    basis_change, verify_basis_images, verify_counts, verify_hoppers, verify_lemma5, verify_lemma6,
    verify_logical_count, verify_map, verify_theorem1,
};
