//! Binary symplectic algebra: Paulis as `(x|z)` vectors over GF(2), dense GF(2)
//! matrices, and linear maps that preserve commutation.

mod bits;
mod map;
mod matrix;
mod pauli;

pub use bits::BitVec;
pub use map::{standard_form, SymplecticMap};
pub use matrix::{Gf2Matrix, RowSpace};
pub use pauli::{symplectic_dot, symplectic_product, Pauli, PauliOp, SpaceId, SpaceKind};
