//! Stabilizer generator sets for the color code and the contracted surface codes.

use std::fmt;

use serde::Serialize;

use crate::colex::{validate_colex, Colex};
use crate::contraction::SurfaceGraph;
use crate::error::{Error, Result};
use crate::symplectic::{symplectic_dot, BitVec, Gf2Matrix, Pauli, PauliOp, RowSpace, SpaceId, SpaceKind};

/// Largest code for which [`code_params`] searches for the distance.
pub const DISTANCE_SEARCH_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CodeKind {
    Color,
    Surface,
    SurfacePair,
}

/// Where a generator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// `B_f^X` or `B_f^Z` of colex face `face`.
    Face { face: usize, pauli: Pauli },
    /// `A_v` of surface vertex `vertex` on copy `copy` (1 or 2).
    Vertex { copy: u8, vertex: usize },
    /// `B_f` of surface face `face` on copy `copy` (1 or 2).
    Plaquette { copy: u8, face: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Face { face, pauli } => write!(f, "B{}[face {face}]", pauli.letter()),
            Provenance::Vertex { copy, vertex } => write!(f, "A[vertex {vertex}]@{copy}"),
            Provenance::Plaquette { copy, face } => write!(f, "B[face {face}]@{copy}"),
        }
    }
}

/// Over-complete, ordered generator list of a stabilizer group.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    kind: CodeKind,
    space: SpaceId,
    generators: Vec<PauliOp>,
    provenance: Vec<Provenance>,
    rows: Vec<BitVec>,
    span: RowSpace,
}

impl StabilizerCode {
    pub fn new(
        kind: CodeKind,
        space: SpaceId,
        generators: Vec<PauliOp>,
        provenance: Vec<Provenance>,
    ) -> Result<Self> {
        if generators.len() != provenance.len() {
            return Err(Error::DimensionMismatch("one provenance entry per generator required".into()));
        }
        for g in &generators {
            space.check(&g.space())?;
        }
        let rows: Vec<BitVec> = generators.iter().map(PauliOp::to_symplectic).collect();
        let span = RowSpace::new(2 * space.qubits, &rows);
        Ok(Self { kind, space, generators, provenance, rows, span })
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn num_qubits(&self) -> usize {
        self.space.qubits
    }

    pub fn generators(&self) -> &[PauliOp] {
        &self.generators
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    /// Number of logical qubits, `n − rank`.
    pub fn logical_qubits(&self) -> usize {
        self.num_qubits() - self.rank()
    }

    pub fn span(&self) -> &RowSpace {
        &self.span
    }

    pub fn check_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(2 * self.num_qubits(), self.rows.clone())
            .expect("generators share the code space")
    }

    /// Membership of `p` in the stabilizer group (phase ignored).
    pub fn contains(&self, p: &PauliOp) -> Result<bool> {
        self.space.check(&p.space())?;
        Ok(self.span.contains(&p.to_symplectic()))
    }

    /// Generators whose product is `p`, if `p` is a stabilizer.
    pub fn express(&self, p: &PauliOp) -> Result<Option<BitVec>> {
        self.space.check(&p.space())?;
        Ok(self.span.express(&p.to_symplectic()))
    }

    /// One bit per generator: whether it anticommutes with `e`.
    pub fn syndrome_bits(&self, e: &PauliOp) -> Result<BitVec> {
        self.space.check(&e.space())?;
        let v = e.to_symplectic();
        Ok(BitVec::from_bools(self.rows.iter().map(|g| symplectic_dot(g, &v))))
    }

    pub fn all_commute(&self) -> bool {
        let rows = &self.rows;
        rows.iter().enumerate().all(|(i, a)| rows[i + 1..].iter().all(|b| !symplectic_dot(a, b)))
    }

    /// Representatives of the normalizer modulo the stabilizer group (`2k` operators).
    pub fn logical_operators(&self) -> Vec<PauliOp> {
        let n = self.num_qubits();
        // ⟨g, v⟩ = g_x·v_z + g_z·v_x, so swap halves of each generator.
        let swapped: Vec<BitVec> = self.generators.iter().map(|g| g.z().concat(g.x())).collect();
        let normalizer = Gf2Matrix::from_rows(2 * n, swapped).expect("consistent widths").nullspace();
        let mut chosen: Vec<BitVec> = self.span_basis();
        let base = chosen.len();
        for v in normalizer {
            if !RowSpace::new(2 * n, &chosen).contains(&v) {
                chosen.push(v);
            }
        }
        chosen[base..].iter().map(|v| PauliOp::from_symplectic(self.space, v).expect("width 2n")).collect()
    }

    fn span_basis(&self) -> Vec<BitVec> {
        let mut basis = Vec::new();
        for v in &self.rows {
            if !RowSpace::new(2 * self.num_qubits(), &basis).contains(v) {
                basis.push(v.clone());
            }
        }
        basis
    }
}

/// Color code on `g`: `B_f^X` for every face in index order, then `B_f^Z`.
pub fn color_code(g: &Colex) -> Result<StabilizerCode> {
    let report = validate_colex(g);
    if !report.all_passed() {
        return Err(Error::InvalidColex(
            report.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "),
        ));
    }
    let space = color_space(g);
    let mut gens = Vec::with_capacity(2 * g.faces().len());
    let mut prov = Vec::with_capacity(2 * g.faces().len());
    for pauli in [Pauli::X, Pauli::Z] {
        for (fi, f) in g.faces().iter().enumerate() {
            let op = match pauli {
                Pauli::X => PauliOp::x_on(space, f.boundary.iter().copied()),
                _ => PauliOp::z_on(space, f.boundary.iter().copied()),
            };
            gens.push(op);
            prov.push(Provenance::Face { face: fi, pauli });
        }
    }
    StabilizerCode::new(CodeKind::Color, space, gens, prov)
}

pub fn color_space(g: &Colex) -> SpaceId {
    SpaceId::new(SpaceKind::ColorCode, g.fingerprint(), g.num_vertices())
}

/// `A_v` for every vertex, then `B_f` for every face, on qubits `offset..offset+E`.
fn surface_generators(
    sg: &SurfaceGraph,
    space: SpaceId,
    offset: usize,
    copy: u8,
    gens: &mut Vec<PauliOp>,
    prov: &mut Vec<Provenance>,
) {
    for v in 0..sg.num_vertices() {
        gens.push(PauliOp::x_on(space, sg.vertex_edges(v).map(|e| e + offset)));
        prov.push(Provenance::Vertex { copy, vertex: v });
    }
    for f in 0..sg.num_faces() {
        gens.push(PauliOp::z_on(space, sg.face_edges(f).map(|e| e + offset)));
        prov.push(Provenance::Plaquette { copy, face: f });
    }
}

/// Surface code on one copy of `sg`: `A_v` generators, then `B_f`.
///
/// Edges met twice around a vertex or face cancel over GF(2).
pub fn surface_code(sg: &SurfaceGraph) -> Result<StabilizerCode> {
    let space = sg.space();
    let mut gens = Vec::new();
    let mut prov = Vec::new();
    surface_generators(sg, space, 0, 1, &mut gens, &mut prov);
    StabilizerCode::new(CodeKind::Surface, space, gens, prov)
}

/// Both copies on the pair space: copy 1 generators, then copy 2.
pub fn surface_pair_code(sg: &SurfaceGraph) -> Result<StabilizerCode> {
    let space = sg.pair_space();
    let mut gens = Vec::new();
    let mut prov = Vec::new();
    surface_generators(sg, space, 0, 1, &mut gens, &mut prov);
    surface_generators(sg, space, sg.num_edges(), 2, &mut gens, &mut prov);
    StabilizerCode::new(CodeKind::SurfacePair, space, gens, prov)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    /// `None` when the code is too large for exhaustive search or has `k = 0`.
    pub d: Option<usize>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{}, {}, {}]]", self.n, self.k, d),
            None => write!(f, "[[{}, {}, ?]]", self.n, self.k),
        }
    }
}

/// `n`, `k = n − rank`, and the distance by exhaustive search when `n ≤ 24`.
pub fn code_params(code: &StabilizerCode) -> CodeParams {
    let n = code.num_qubits();
    let k = code.logical_qubits();
    let d = (n <= DISTANCE_SEARCH_LIMIT && k > 0).then(|| distance(code));
    CodeParams { n, k, d }
}

/// Minimum weight of a normalizer element outside the stabilizer group.
fn distance(code: &StabilizerCode) -> usize {
    let n = code.num_qubits();
    let mut x_checks = Vec::new();
    let mut z_checks = Vec::new();
    let mut css = true;
    for g in code.generators() {
        match (g.x().is_zero(), g.z().is_zero()) {
            (_, true) => x_checks.push(mask_of(g.x())),
            (true, false) => z_checks.push(mask_of(g.z())),
            _ => css = false,
        }
    }
    if css {
        // Z-type logicals commute with X checks and avoid the Z stabilizers; dually for X.
        let dz = min_css_weight(n, &x_checks, &z_checks);
        let dx = min_css_weight(n, &z_checks, &x_checks);
        return dz.min(dx);
    }
    let space = code.space();
    for w in 1..=n {
        let mut found = false;
        for_each_subset(n, w, |support| {
            if found {
                return;
            }
            let qubits: Vec<usize> = (0..n).filter(|q| support >> q & 1 == 1).collect();
            for mut digits in 0..3usize.pow(w as u32) {
                let mut p = PauliOp::identity(space);
                for &q in &qubits {
                    p.set(q, [Pauli::X, Pauli::Y, Pauli::Z][digits % 3]);
                    digits /= 3;
                }
                let commutes = code.syndrome_bits(&p).expect("same space").is_zero();
                if commutes && !code.contains(&p).expect("same space") {
                    found = true;
                    return;
                }
            }
        });
        if found {
            return w;
        }
    }
    n
}

fn mask_of(v: &BitVec) -> u32 {
    v.iter_ones().fold(0, |m, i| m | 1 << i)
}

fn min_css_weight(n: usize, checks: &[u32], stabilizers: &[u32]) -> usize {
    let basis = echelon_u32(stabilizers);
    for w in 1..=n {
        let mut found = false;
        for_each_subset(n, w, |m| {
            if found || checks.iter().any(|c| (c & m).count_ones() % 2 == 1) {
                return;
            }
            let mut r = m;
            for &(p, b) in &basis {
                if r >> p & 1 == 1 {
                    r ^= b;
                }
            }
            if r != 0 {
                found = true;
            }
        });
        if found {
            return w;
        }
    }
    n
}

fn echelon_u32(rows: &[u32]) -> Vec<(u32, u32)> {
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &(p, b) in &basis {
            if v >> p & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            let p = v.trailing_zeros();
            for (_, b) in basis.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push((p, v));
        }
    }
    basis
}

/// Calls `f` on every `w`-subset of `0..n` as a bit mask (Gosper's hack).
fn for_each_subset(n: usize, w: usize, mut f: impl FnMut(u32)) {
    if w == 0 || w > n {
        return;
    }
    let limit: u64 = 1 << n;
    let mut m: u64 = (1 << w) - 1;
    while m < limit {
        f(m as u32);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::{build_hexagonal_torus, Color};
    use crate::contraction::contract;

    #[test]
    fn hexagonal_color_code_generators() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let code = color_code(&g).unwrap();
        assert_eq!(code.len(), 18);
        assert!(code.generators().iter().all(|p| p.weight() == 6));
        assert!(code.all_commute());
        assert_eq!(code.logical_qubits(), 4);
        assert_eq!(code.logical_operators().len(), 8);
    }

    #[test]
    fn contracted_surface_code_generators() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = contract(&g, Color::Red).unwrap();
        let code = surface_code(&sg).unwrap();
        assert_eq!(code.num_qubits(), 9);
        assert_eq!(code.len(), 3 + 6);
        assert!(code.all_commute());
        assert_eq!(code.logical_qubits(), 2);
    }

    #[test]
    fn gosper_enumerates_binomial_counts() {
        let mut count = 0;
        for_each_subset(10, 3, |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 120);
    }

    #[test]
    fn distance_search_is_skipped_for_large_codes() {
        let g = build_hexagonal_torus(3, 6).unwrap();
        let p = code_params(&color_code(&g).unwrap());
        assert_eq!(p.n, 36);
        assert_eq!(p.d, None);
    }

    #[test]
    fn general_distance_path_agrees_with_css_path() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = contract(&g, Color::Red).unwrap();
        let code = surface_code(&sg).unwrap();
        let css = distance(&code);
        // Mixing one generator into another hides the CSS structure without changing the group.
        let mut gens = code.generators().to_vec();
        let first = gens[0].clone();
        gens.last_mut().unwrap().mul_assign(&first);
        let mixed = StabilizerCode::new(code.kind(), code.space(), gens, code.provenance().to_vec()).unwrap();
        assert_eq!(distance(&mixed), css);
    }
}
