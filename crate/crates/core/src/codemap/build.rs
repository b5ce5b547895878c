//! Face-by-face construction of the color-to-surface symplectic map.

use rayon::prelude::*;

use super::conventions::{FaceLabeling, MapConventions, SplitElement};
use crate::colex::Colex;
use crate::contraction::{contract, SurfaceGraph};
use crate::error::{Error, Result};
use crate::stabilizers::color_space;
use crate::symplectic::{BitVec, Gf2Matrix, PauliOp, SymplecticMap};

/// A built map together with everything it was built from.
#[derive(Clone, Debug)]
pub struct CodeMap {
    colex: Colex,
    surface: SurfaceGraph,
    conventions: MapConventions,
    labelings: Vec<FaceLabeling>,
    map: SymplecticMap,
}

impl CodeMap {
    pub fn colex(&self) -> &Colex {
        &self.colex
    }

    pub fn surface(&self) -> &SurfaceGraph {
        &self.surface
    }

    pub fn conventions(&self) -> &MapConventions {
        &self.conventions
    }

    pub fn labelings(&self) -> &[FaceLabeling] {
        &self.labelings
    }

    pub fn map(&self) -> &SymplecticMap {
        &self.map
    }

    pub fn is_symplectic(&self) -> bool {
        self.map.is_symplectic()
    }

    pub fn apply(&self, p: &PauliOp) -> Result<PauliOp> {
        self.map.apply(p)
    }

    pub fn preimage(&self, p: &PauliOp) -> Result<PauliOp> {
        self.map.preimage(p)
    }

    /// Replaces the matrix, keeping the rest; used to test the verifiers on broken maps.
    pub fn with_map(mut self, map: SymplecticMap) -> Result<Self> {
        self.map.domain().check(&map.domain())?;
        self.map.codomain().check(&map.codomain())?;
        self.map = map;
        Ok(self)
    }

    /// Builds an image operator on the pair space from per-copy parts.
    pub fn pair_op(&self) -> PairBuilder {
        PairBuilder::new(&self.surface)
    }

    pub(crate) fn from_parts(
        colex: Colex,
        surface: SurfaceGraph,
        conventions: MapConventions,
        labelings: Vec<FaceLabeling>,
        map: SymplecticMap,
    ) -> Self {
        Self { colex, surface, conventions, labelings, map }
    }
}

/// Accumulates `[X_e]_i` / `[Z_e]_i` factors on the two surface copies.
#[derive(Clone, Debug)]
pub struct PairBuilder {
    op: PauliOp,
    edges: usize,
}

impl PairBuilder {
    pub fn new(sg: &SurfaceGraph) -> Self {
        Self { op: PauliOp::identity(sg.pair_space()), edges: sg.num_edges() }
    }

    fn qubit(&self, copy: u8, edge: usize) -> usize {
        debug_assert!(copy == 1 || copy == 2);
        edge + if copy == 1 { 0 } else { self.edges }
    }

    pub fn x(mut self, copy: u8, edge: usize) -> Self {
        let q = self.qubit(copy, edge);
        self.op.mul_assign(&PauliOp::x_on(self.op.space(), [q]));
        self
    }

    pub fn z(mut self, copy: u8, edge: usize) -> Self {
        let q = self.qubit(copy, edge);
        self.op.mul_assign(&PauliOp::z_on(self.op.space(), [q]));
        self
    }

    pub fn times(mut self, other: &PauliOp) -> Self {
        self.op.mul_assign(other);
        self
    }

    pub fn build(self) -> PauliOp {
        self.op
    }
}

/// The `4ℓ` basis operators of one face and their prescribed images.
pub(crate) struct FaceBasis {
    /// Local operators on `v₁ … v_{2ℓ}`: bits `0..2ℓ` are X, `2ℓ..4ℓ` are Z.
    pub local: Vec<BitVec>,
    pub images: Vec<PauliOp>,
    pub names: Vec<String>,
}

pub(crate) fn face_basis(sg: &SurfaceGraph, lab: &FaceLabeling) -> FaceBasis {
    let l = lab.half_length();
    let w = 2 * l;
    let tau = |j: usize| sg.tau_vertex(lab.v(j));
    let idx = |j: usize| (j - 1) % w;
    let mut basis = FaceBasis {
        local: Vec::with_capacity(2 * w),
        images: Vec::with_capacity(2 * w),
        names: Vec::with_capacity(2 * w),
    };
    let mut push = |xs: &[usize], zs: &[usize], image: PauliOp, name: String| {
        let mut v = BitVec::zeros(2 * w);
        for &j in xs {
            v.flip(idx(j));
        }
        for &j in zs {
            v.flip(w + idx(j));
        }
        basis.local.push(v);
        basis.images.push(image);
        basis.names.push(name);
    };
    let pair = || PairBuilder::new(sg);

    for i in 1..=l {
        let (a, b) = (2 * i - 1, 2 * i);
        push(&[], &[a, b], pair().z(1, tau(b)).build(), format!("Z{a}Z{b}"));
        push(&[a, b], &[], pair().z(2, tau(b)).build(), format!("X{a}X{b}"));
    }
    for i in 1..=l {
        let (a, b) = (2 * i, 2 * i + 1);
        if i < l {
            let img = pair().x(2, tau(a)).x(2, tau(b)).build();
            push(&[], &[a, b], img, format!("Z{a}Z{}", idx(b) + 1));
        }
        if i != lab.m {
            let img = pair().x(1, tau(a)).x(1, tau(b)).build();
            push(&[a, b], &[], img, format!("X{a}X{}", idx(b) + 1));
        }
    }

    let all: Vec<usize> = (1..=w).collect();
    let stabilizer = |g: SplitElement| -> (Vec<usize>, Vec<usize>) {
        (if g.has_x() { all.clone() } else { Vec::new() }, if g.has_z() { all.clone() } else { Vec::new() })
    };
    let (mut xs, zs) = stabilizer(lab.x_split);
    xs.push(1);
    push(&xs, &zs, pair().x(1, tau(1)).build(), "split X1".into());
    let (xs, mut zs) = stabilizer(lab.z_split);
    zs.push(2 * lab.m);
    let img = pair().x(2, tau(2 * lab.m)).build();
    push(&xs, &zs, img, format!("split Z{}", 2 * lab.m));
    basis
}

/// Images of the `4ℓ` single-qubit unit vectors of one face, X units first.
fn face_columns(sg: &SurfaceGraph, lab: &FaceLabeling) -> Result<Vec<BitVec>> {
    let basis = face_basis(sg, lab);
    let w = 2 * lab.half_length();
    let local = Gf2Matrix::from_rows(2 * w, basis.local)?;
    let inv =
        local.invert().map_err(|_| Error::Internal(format!("face {}: local basis is singular", lab.face)))?;
    let images: Vec<BitVec> = basis.images.iter().map(PauliOp::to_symplectic).collect();
    Ok((0..2 * w)
        .map(|k| {
            let mut col = BitVec::zeros(images[0].len());
            for j in inv.row(k).iter_ones() {
                col.xor_with(&images[j]);
            }
            col
        })
        .collect())
}

/// Builds the map face by face over the `c″`-colored faces.
pub fn build_map(g: &Colex, conv: &MapConventions) -> Result<CodeMap> {
    let surface = contract(g, conv.color)?;
    let labelings = conv.labelings(g)?;
    let n = g.num_vertices();
    let per_face: Vec<Vec<BitVec>> =
        labelings.par_iter().map(|lab| face_columns(&surface, lab)).collect::<Result<_>>()?;

    let mut columns: Vec<Option<BitVec>> = vec![None; 2 * n];
    for (lab, cols) in labelings.iter().zip(per_face) {
        let w = lab.vertices.len();
        for (k, col) in cols.into_iter().enumerate() {
            let qubit = lab.vertices[k % w];
            let slot = if k < w { qubit } else { n + qubit };
            if columns[slot].replace(col).is_some() {
                return Err(Error::Internal(format!(
                    "vertex {qubit} lies on two faces of color {}",
                    conv.color.prev()
                )));
            }
        }
    }
    let columns: Vec<BitVec> = columns
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| Error::Internal(format!("no image for unit {i}"))))
        .collect::<Result<_>>()?;
    let matrix = Gf2Matrix::from_rows(2 * n, columns)?.transpose();
    let map = SymplecticMap::new(matrix, color_space(g), surface.pair_space(), surface.num_edges())
        .map_err(|_| Error::Internal("assembled map is singular".into()))?;
    Ok(CodeMap { colex: g.clone(), surface, conventions: conv.clone(), labelings, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::{build_hexagonal_torus, Color};

    #[test]
    fn hexagonal_maps_are_symplectic_and_invertible() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        for c in Color::ALL {
            let conv = MapConventions::standard(&g, c).unwrap();
            let cm = build_map(&g, &conv).unwrap();
            assert!(cm.map().is_invertible());
            assert!(cm.is_symplectic(), "color {c}");
        }
    }

    #[test]
    fn basis_images_are_reproduced() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let cm = build_map(&g, &MapConventions::standard(&g, Color::Blue).unwrap()).unwrap();
        let space = color_space(&g);
        for lab in cm.labelings() {
            let basis = face_basis(cm.surface(), lab);
            let w = lab.vertices.len();
            for (v, img) in basis.local.iter().zip(&basis.images) {
                let mut op = PauliOp::identity(space);
                for k in v.iter_ones() {
                    let q = lab.vertices[k % w];
                    if k < w {
                        op.mul_assign(&PauliOp::x_on(space, [q]));
                    } else {
                        op.mul_assign(&PauliOp::z_on(space, [q]));
                    }
                }
                assert_eq!(&cm.apply(&op).unwrap(), img);
            }
        }
    }
}
