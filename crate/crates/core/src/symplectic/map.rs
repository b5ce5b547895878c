use super::bits::BitVec;
use super::matrix::Gf2Matrix;
use super::pauli::{PauliOp, SpaceId};
use crate::error::{Error, Result};

/// GF(2)-linear map on `(x|z)` Pauli coordinates.
///
/// `matrix` acts on column vectors: the image of `p` is `matrix · (x|z)ᵀ`. The
/// codomain is split after `split` qubits: qubits `0..split` belong to the first
/// surface-code copy and the rest to the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticMap {
    matrix: Gf2Matrix,
    // columns of `matrix`, i.e. images of the unit vectors
    columns: Gf2Matrix,
    inverse_columns: Option<Gf2Matrix>,
    domain: SpaceId,
    codomain: SpaceId,
    split: usize,
}

impl SymplecticMap {
    /// Builds the map, rejecting matrices that are not square and invertible.
    pub fn new(matrix: Gf2Matrix, domain: SpaceId, codomain: SpaceId, split: usize) -> Result<Self> {
        let map = Self::from_raw(matrix, domain, codomain, split)?;
        if map.inverse_columns.is_none() {
            return Err(Error::Singular);
        }
        Ok(map)
    }

    /// Builds the map without requiring invertibility; `preimage` then fails.
    pub fn from_raw(matrix: Gf2Matrix, domain: SpaceId, codomain: SpaceId, split: usize) -> Result<Self> {
        if domain.qubits != codomain.qubits {
            return Err(Error::DimensionMismatch(format!(
                "domain has {} qubits, codomain {}",
                domain.qubits, codomain.qubits
            )));
        }
        let dim = 2 * domain.qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {dim}x{dim}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if split > codomain.qubits {
            return Err(Error::DimensionMismatch(format!(
                "split {split} exceeds {} codomain qubits",
                codomain.qubits
            )));
        }
        let columns = matrix.transpose();
        let inverse_columns = matrix.invert().ok().map(|inv| inv.transpose());
        Ok(Self { matrix, columns, inverse_columns, domain, codomain, split })
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn domain(&self) -> SpaceId {
        self.domain
    }

    pub fn codomain(&self) -> SpaceId {
        self.codomain
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse_columns.is_some()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `true` iff `M Λ Mᵀ = Λ` for the standard form `Λ = [[0, I], [I, 0]]`.
    pub fn is_symplectic(&self) -> bool {
        let n = self.domain.qubits;
        let lambda = standard_form(n);
        let lhs = self
            .matrix
            .mul(&lambda)
            .and_then(|ml| ml.mul(&self.columns))
            .expect("square matrices of equal size");
        lhs == lambda
    }

    pub fn apply(&self, p: &PauliOp) -> Result<PauliOp> {
        self.domain.check(&p.space())?;
        let v = combine(&self.columns, &p.to_symplectic());
        PauliOp::from_symplectic(self.codomain, &v)
    }

    pub fn preimage(&self, p: &PauliOp) -> Result<PauliOp> {
        self.codomain.check(&p.space())?;
        let inv = self.inverse_columns.as_ref().ok_or(Error::Singular)?;
        let v = combine(inv, &p.to_symplectic());
        PauliOp::from_symplectic(self.domain, &v)
    }

    /// Splits a codomain operator into its restrictions to the two copies.
    pub fn split_image(&self, p: &PauliOp, copy_space: [SpaceId; 2]) -> Result<[PauliOp; 2]> {
        self.codomain.check(&p.space())?;
        let s = self.split;
        let rest = self.codomain.qubits - s;
        let first = PauliOp::from_parts(copy_space[0], p.x().slice(0, s), p.z().slice(0, s))?;
        let second = PauliOp::from_parts(copy_space[1], p.x().slice(s, rest), p.z().slice(s, rest))?;
        Ok([first, second])
    }

    /// Joins restrictions to the two copies into one codomain operator.
    pub fn join_image(&self, first: &PauliOp, second: &PauliOp) -> Result<PauliOp> {
        if first.num_qubits() != self.split || second.num_qubits() != self.codomain.qubits - self.split {
            return Err(Error::DimensionMismatch("copy operators do not match the codomain split".into()));
        }
        PauliOp::from_parts(self.codomain, first.x().concat(second.x()), first.z().concat(second.z()))
    }
}

/// `Σ_i v_i · columns_i`, i.e. `M v` given the rows of `Mᵀ`.
fn combine(columns: &Gf2Matrix, v: &BitVec) -> BitVec {
    let mut out = BitVec::zeros(columns.ncols());
    for i in v.iter_ones() {
        out.xor_with(columns.row(i));
    }
    out
}

pub fn standard_form(n: usize) -> Gf2Matrix {
    let mut l = Gf2Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        l.set(i, n + i, true);
        l.set(n + i, i, true);
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::pauli::Pauli;

    fn spaces(n: usize) -> (SpaceId, SpaceId) {
        (
            SpaceId::new(crate::symplectic::SpaceKind::Anonymous, 1, n),
            SpaceId::new(crate::symplectic::SpaceKind::Anonymous, 2, n),
        )
    }

    #[test]
    fn identity_is_symplectic() {
        let (d, c) = spaces(3);
        let m = SymplecticMap::new(Gf2Matrix::identity(6), d, c, 3).unwrap();
        assert!(m.is_symplectic());
        let id = PauliOp::identity(d);
        assert!(m.apply(&id).unwrap().is_identity());
    }

    #[test]
    fn global_x_z_swap_is_symplectic() {
        let (d, c) = spaces(3);
        let m = SymplecticMap::new(standard_form(3), d, c, 3).unwrap();
        assert!(m.is_symplectic());
        let x0 = PauliOp::single(d, 0, Pauli::X);
        assert_eq!(m.apply(&x0).unwrap().get(0), Pauli::Z);
    }

    #[test]
    fn zeroed_row_is_neither_invertible_nor_symplectic() {
        let (d, c) = spaces(2);
        let mut mat = Gf2Matrix::identity(4);
        *mat.row_mut(1) = BitVec::zeros(4);
        assert!(matches!(SymplecticMap::new(mat.clone(), d, c, 2), Err(Error::Singular)));
        let m = SymplecticMap::from_raw(mat, d, c, 2).unwrap();
        assert!(!m.is_symplectic());
        assert!(matches!(m.preimage(&PauliOp::identity(c)), Err(Error::Singular)));
    }

    #[test]
    fn apply_checks_the_domain() {
        let (d, c) = spaces(2);
        let m = SymplecticMap::new(Gf2Matrix::identity(4), d, c, 1).unwrap();
        assert!(m.apply(&PauliOp::identity(c)).is_err());
        assert!(m.preimage(&PauliOp::identity(d)).is_err());
    }
}
