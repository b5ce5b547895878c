use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits::BitVec;
use crate::error::{Error, Result};

/// What a qubit index space hosts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceKind {
    /// Vertices of a colex.
    ColorCode,
    /// Edges of one contracted graph.
    Surface,
    /// Edges of two copies of a contracted graph, copy 1 first.
    SurfacePair,
    /// No lattice attached (tests, scratch work).
    Anonymous,
}

/// Nominal identity of a qubit index space.
///
/// Two Paulis can only be combined when their spaces are equal, so operators
/// on the color code and on the surface codes cannot be mixed by accident.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceId {
    pub kind: SpaceKind,
    /// Identifies the lattice (and contraction color) the qubits belong to.
    pub lattice: u64,
    pub qubits: usize,
}

impl SpaceId {
    pub fn new(kind: SpaceKind, lattice: u64, qubits: usize) -> Self {
        Self { kind, lattice, qubits }
    }

    pub fn anonymous(qubits: usize) -> Self {
        Self::new(SpaceKind::Anonymous, 0, qubits)
    }

    pub fn check(&self, other: &SpaceId) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch { expected: *self, found: *other })
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{} qubits, lattice {:016x}]", self.kind, self.qubits, self.lattice)
    }
}

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Pauli operator modulo phase, as `(x|z)` bit vectors over a named qubit space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOp {
    space: SpaceId,
    x: BitVec,
    z: BitVec,
}

impl PauliOp {
    pub fn identity(space: SpaceId) -> Self {
        Self { space, x: BitVec::zeros(space.qubits), z: BitVec::zeros(space.qubits) }
    }

    pub fn from_parts(space: SpaceId, x: BitVec, z: BitVec) -> Result<Self> {
        if x.len() != space.qubits || z.len() != space.qubits {
            return Err(Error::DimensionMismatch(format!(
                "x/z parts of length {}/{} for {} qubits",
                x.len(),
                z.len(),
                space.qubits
            )));
        }
        Ok(Self { space, x, z })
    }

    /// From a `2n` vector laid out as `(x | z)`.
    pub fn from_symplectic(space: SpaceId, v: &BitVec) -> Result<Self> {
        let n = space.qubits;
        if v.len() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "symplectic vector of length {} for {n} qubits",
                v.len()
            )));
        }
        Ok(Self { space, x: v.slice(0, n), z: v.slice(n, n) })
    }

    pub fn single(space: SpaceId, qubit: usize, p: Pauli) -> Self {
        let mut op = Self::identity(space);
        op.set(qubit, p);
        op
    }

    pub fn x_on(space: SpaceId, qubits: impl IntoIterator<Item = usize>) -> Self {
        let mut op = Self::identity(space);
        for q in qubits {
            op.x.flip(q);
        }
        op
    }

    pub fn z_on(space: SpaceId, qubits: impl IntoIterator<Item = usize>) -> Self {
        let mut op = Self::identity(space);
        for q in qubits {
            op.z.flip(q);
        }
        op
    }

    /// Parses an `IXYZ` string; its length must match the space.
    pub fn parse(space: SpaceId, s: &str) -> Result<Self> {
        let letters: Vec<char> = s.trim().chars().collect();
        if letters.len() != space.qubits {
            return Err(Error::InvalidPauli(format!(
                "string has {} letters, space has {} qubits",
                letters.len(),
                space.qubits
            )));
        }
        let mut op = Self::identity(space);
        for (i, c) in letters.into_iter().enumerate() {
            let p = match c.to_ascii_uppercase() {
                'I' | '_' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                other => {
                    return Err(Error::InvalidPauli(format!("unexpected letter {other:?} at position {i}")))
                }
            };
            op.set(i, p);
        }
        Ok(op)
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn num_qubits(&self) -> usize {
        self.space.qubits
    }

    pub fn x(&self) -> &BitVec {
        &self.x
    }

    pub fn z(&self) -> &BitVec {
        &self.z
    }

    pub fn get(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn weight(&self) -> usize {
        (0..self.num_qubits()).filter(|&q| self.x.get(q) || self.z.get(q)).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.num_qubits()).filter(|&q| self.x.get(q) || self.z.get(q)).collect()
    }

    pub fn to_symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// Product of two operators on the same space, phase dropped.
    pub fn mul(&self, other: &PauliOp) -> Result<PauliOp> {
        self.space.check(&other.space)?;
        Ok(PauliOp { space: self.space, x: &self.x ^ &other.x, z: &self.z ^ &other.z })
    }

    /// In-place product; panics on space mismatch.
    pub fn mul_assign(&mut self, other: &PauliOp) {
        assert_eq!(self.space, other.space, "Pauli space mismatch");
        self.x.xor_with(&other.x);
        self.z.xor_with(&other.z);
    }

    /// Same operator relabeled onto another space of equal size.
    pub fn relabel(&self, space: SpaceId) -> Result<PauliOp> {
        if space.qubits != self.space.qubits {
            return Err(Error::DimensionMismatch(format!(
                "cannot relabel {} qubits as {}",
                self.space.qubits, space.qubits
            )));
        }
        Ok(PauliOp { space, x: self.x.clone(), z: self.z.clone() })
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.num_qubits() {
            write!(f, "{}", self.get(q).letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOp({self})")
    }
}

/// `a.x·b.z + a.z·b.x mod 2`; `true` iff the operators anticommute.
pub fn symplectic_product(a: &PauliOp, b: &PauliOp) -> Result<bool> {
    a.space.check(&b.space)?;
    Ok(a.x.dot(&b.z) ^ a.z.dot(&b.x))
}

/// Symplectic product of two `(x|z)` vectors of equal even length.
pub fn symplectic_dot(a: &BitVec, b: &BitVec) -> bool {
    let n = a.len() / 2;
    let mut acc = false;
    for i in a.iter_ones() {
        let j = if i < n { i + n } else { i - n };
        acc ^= b.get(j);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize) -> SpaceId {
        SpaceId::anonymous(n)
    }

    #[test]
    fn single_qubit_anticommutation() {
        let s = sp(2);
        let x0 = PauliOp::single(s, 0, Pauli::X);
        let z0 = PauliOp::single(s, 0, Pauli::Z);
        let z1 = PauliOp::single(s, 1, Pauli::Z);
        assert!(symplectic_product(&x0, &z0).unwrap());
        assert!(!symplectic_product(&x0, &z1).unwrap());
    }

    #[test]
    fn single_overlap_of_two_qubit_hoppers() {
        let s = sp(3);
        let zz = PauliOp::z_on(s, [0, 1]);
        let xx = PauliOp::x_on(s, [1, 2]);
        assert!(symplectic_product(&zz, &xx).unwrap());
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let a = PauliOp::identity(sp(2));
        let b = PauliOp::identity(SpaceId::new(SpaceKind::ColorCode, 1, 2));
        assert!(matches!(symplectic_product(&a, &b), Err(Error::SpaceMismatch { .. })));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn text_form_uses_y_for_both_bits() {
        let p = PauliOp::parse(sp(4), "IXYZ").unwrap();
        assert_eq!(p.x().iter_ones().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(p.z().iter_ones().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(p.to_string(), "IXYZ");
        assert_eq!(p.weight(), 3);
        assert!(PauliOp::parse(sp(3), "IXYZ").is_err());
        assert!(PauliOp::parse(sp(4), "IXQZ").is_err());
    }

    #[test]
    fn symplectic_dot_matches_operator_form() {
        let s = sp(3);
        let a = PauliOp::parse(s, "XYZ").unwrap();
        let b = PauliOp::parse(s, "ZZI").unwrap();
        assert_eq!(
            symplectic_dot(&a.to_symplectic(), &b.to_symplectic()),
            symplectic_product(&a, &b).unwrap()
        );
    }
}
