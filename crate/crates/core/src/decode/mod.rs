//! Decoding the color code through the two surface codes.
//!
//! A color-code syndrome is pushed through the map to syndromes on the two
//! surface-code copies, each copy is decoded by matching, and the joined
//! correction is pulled back through the inverse map.

mod matching;

use serde::Serialize;

use crate::codemap::{CodeMap, MapArtifact};
use crate::contraction::SurfaceGraph;
use crate::error::{Error, Result};
use crate::stabilizers::{color_code, surface_code, CodeKind, StabilizerCode};
use crate::symplectic::{symplectic_dot, BitVec, Gf2Matrix, PauliOp, SpaceId};

pub use matching::{MatchingStrategy, PathGraph};

/// One bit per generator of a code, in the code's generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome {
    pub kind: CodeKind,
    pub space: SpaceId,
    pub bits: BitVec,
}

impl Syndrome {
    pub fn is_trivial(&self) -> bool {
        self.bits.is_zero()
    }

    /// Parses a string of `0`/`1` characters, ignoring whitespace.
    pub fn parse(code: &StabilizerCode, text: &str) -> Result<Self> {
        let bits: Vec<bool> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidArgument(format!("syndrome contains {other:?}; expected 0 or 1"))),
            })
            .collect::<Result<_>>()?;
        if bits.len() != code.len() {
            return Err(Error::DimensionMismatch(format!(
                "syndrome has {} bits, the code has {} generators",
                bits.len(),
                code.len()
            )));
        }
        Ok(Self { kind: code.kind(), space: code.space(), bits: BitVec::from_bools(bits) })
    }
}

pub fn extract_syndrome(code: &StabilizerCode, e: &PauliOp) -> Result<Syndrome> {
    Ok(Syndrome { kind: code.kind(), space: code.space(), bits: code.syndrome_bits(e)? })
}

/// Surface syndromes of `π(e)` computed from the color syndrome of `e` alone.
///
/// `basis_change` has one row per surface-pair generator (copy 1, then copy 2)
/// and one column per color generator.
pub fn push_syndrome(
    cm: &CodeMap,
    color_syndrome: &Syndrome,
    basis_change: &Gf2Matrix,
) -> Result<(Syndrome, Syndrome)> {
    cm.map().domain().check(&color_syndrome.space)?;
    let sg = cm.surface();
    let per_copy = sg.num_vertices() + sg.num_faces();
    if basis_change.ncols() != color_syndrome.bits.len() || basis_change.nrows() != 2 * per_copy {
        return Err(Error::MapMismatch(format!(
            "basis change is {}x{}, expected {}x{}",
            basis_change.nrows(),
            basis_change.ncols(),
            2 * per_copy,
            color_syndrome.bits.len()
        )));
    }
    let pushed = basis_change.mul_vec(&color_syndrome.bits)?;
    let copy =
        |start| Syndrome { kind: CodeKind::Surface, space: sg.space(), bits: pushed.slice(start, per_copy) };
    Ok((copy(0), copy(per_copy)))
}

/// Matching decoder for one surface-code copy.
#[derive(Clone, Debug)]
pub struct SurfaceDecoder {
    space: SpaceId,
    vertices: usize,
    primal: PathGraph,
    dual: PathGraph,
}

impl SurfaceDecoder {
    pub fn new(sg: &SurfaceGraph) -> Self {
        let links: Vec<[usize; 2]> = sg.edges().iter().map(|e| e.ends).collect();
        Self {
            space: sg.space(),
            vertices: sg.num_vertices(),
            primal: PathGraph::new(sg.num_vertices(), &links),
            dual: PathGraph::new(sg.num_faces(), &sg.edge_faces()),
        }
    }

    /// Correction whose syndrome is `syn`: Z paths between vertex defects, X
    /// on dual paths between face defects.
    pub fn decode(&self, syn: &Syndrome, strategy: MatchingStrategy) -> Result<PauliOp> {
        self.space.check(&syn.space)?;
        let expected = self.vertices + self.dual.num_nodes();
        if syn.bits.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "surface syndrome has {} bits, expected {expected}",
                syn.bits.len()
            )));
        }
        let mut x = BitVec::zeros(self.space.qubits);
        let mut z = BitVec::zeros(self.space.qubits);
        let vertex_defects: Vec<usize> = syn.bits.iter_ones().take_while(|&i| i < self.vertices).collect();
        let face_defects: Vec<usize> =
            syn.bits.iter_ones().filter(|&i| i >= self.vertices).map(|i| i - self.vertices).collect();
        for (kind, defects, graph, out) in
            [("vertex", vertex_defects, &self.primal, &mut z), ("face", face_defects, &self.dual, &mut x)]
        {
            if defects.len() % 2 == 1 {
                return Err(Error::OddDefects { kind, count: defects.len() });
            }
            for (i, j) in graph.match_defects(&defects, strategy)? {
                for e in graph.path(defects[i], defects[j])? {
                    out.flip(e);
                }
            }
        }
        PauliOp::from_parts(self.space, x, z)
    }
}

/// Decodes one surface copy; builds the path tables on every call.
pub fn mwpm_decode(sg: &SurfaceGraph, syn: &Syndrome) -> Result<PauliOp> {
    SurfaceDecoder::new(sg).decode(syn, MatchingStrategy::Exact)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeOutcome {
    #[serde(serialize_with = "as_string")]
    pub correction: PauliOp,
    /// Residual `error · correction` is a stabilizer.
    pub success: bool,
    /// Commutation bits of the residual with the logical basis; `0` on success.
    #[serde(rename = "logicalClass")]
    pub logical_class: u64,
}

fn as_string<S: serde::Serializer>(p: &PauliOp, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Everything needed to decode color-code errors through one map.
#[derive(Clone, Debug)]
pub struct MappedDecoder {
    code_map: CodeMap,
    basis_change: Gf2Matrix,
    color: StabilizerCode,
    logicals: Vec<BitVec>,
    surface: SurfaceDecoder,
    strategy: MatchingStrategy,
}

impl MappedDecoder {
    pub fn new(code_map: CodeMap, basis_change: Gf2Matrix, strategy: MatchingStrategy) -> Result<Self> {
        let color = color_code(code_map.colex())?;
        let logicals: Vec<BitVec> = color.logical_operators().iter().map(PauliOp::to_symplectic).collect();
        if logicals.len() > 64 {
            return Err(Error::Internal("more than 64 logical operators".into()));
        }
        let surface = SurfaceDecoder::new(code_map.surface());
        Ok(Self { code_map, basis_change, color, logicals, surface, strategy })
    }

    pub fn from_artifact(artifact: MapArtifact, strategy: MatchingStrategy) -> Result<Self> {
        let (cm, b) = artifact.into_parts();
        Self::new(cm, b, strategy)
    }

    pub fn code_map(&self) -> &CodeMap {
        &self.code_map
    }

    pub fn color_code(&self) -> &StabilizerCode {
        &self.color
    }

    pub fn strategy(&self) -> MatchingStrategy {
        self.strategy
    }

    /// Surface code of one copy, for callers that want to inspect copy syndromes.
    pub fn surface_code(&self) -> Result<StabilizerCode> {
        surface_code(self.code_map.surface())
    }

    /// Color-code correction reproducing `syn`.
    pub fn decode(&self, syn: &Syndrome) -> Result<PauliOp> {
        let (s1, s2) = push_syndrome(&self.code_map, syn, &self.basis_change)?;
        let c1 = self.surface.decode(&s1, self.strategy)?;
        let c2 = self.surface.decode(&s2, self.strategy)?;
        let joined = self.code_map.map().join_image(&c1, &c2)?;
        self.code_map.preimage(&joined)
    }

    /// Decodes the syndrome of `error` and grades the correction against it.
    pub fn decode_error(&self, error: &PauliOp) -> Result<DecodeOutcome> {
        let syn = extract_syndrome(&self.color, error)?;
        let correction = self.decode(&syn)?;
        let residual = error.mul(&correction)?;
        let success = self.color.contains(&residual)?;
        Ok(DecodeOutcome {
            correction,
            success,
            logical_class: if success { 0 } else { self.logical_class(&residual) },
        })
    }

    /// Commutation pattern of `p` with the logical basis, bit `j` for operator `j`.
    pub fn logical_class(&self, p: &PauliOp) -> u64 {
        let v = p.to_symplectic();
        self.logicals
            .iter()
            .enumerate()
            .filter(|(_, l)| symplectic_dot(l, &v))
            .fold(0, |acc, (j, _)| acc | 1 << j)
    }
}

/// One-shot decode from separately held artifacts.
pub fn decode_color(
    cm: &CodeMap,
    basis_change: &Gf2Matrix,
    syn: &Syndrome,
    strategy: MatchingStrategy,
) -> Result<PauliOp> {
    let sg = cm.surface();
    let surface = SurfaceDecoder::new(sg);
    let (s1, s2) = push_syndrome(cm, syn, basis_change)?;
    let joined = cm.map().join_image(&surface.decode(&s1, strategy)?, &surface.decode(&s2, strategy)?)?;
    cm.preimage(&joined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codemap::{basis_change, build_map, MapConventions};
    use crate::colex::{build_hexagonal_torus, Color};
    use crate::symplectic::Pauli;

    fn decoder(c: Color) -> MappedDecoder {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let cm = build_map(&g, &MapConventions::standard(&g, c).unwrap()).unwrap();
        let b = basis_change(&cm).unwrap();
        MappedDecoder::new(cm, b, MatchingStrategy::Exact).unwrap()
    }

    #[test]
    fn trivial_syndrome_gives_identity() {
        let d = decoder(Color::Red);
        let e = PauliOp::identity(d.color_code().space());
        let out = d.decode_error(&e).unwrap();
        assert!(out.correction.is_identity());
        assert!(out.success);
    }

    #[test]
    fn single_z_flags_three_x_checks() {
        let d = decoder(Color::Red);
        let code = d.color_code();
        let e = PauliOp::single(code.space(), 5, Pauli::Z);
        let syn = extract_syndrome(code, &e).unwrap();
        assert_eq!(syn.bits.count_ones(), 3);
        let f = code.len() / 2;
        assert!(syn.bits.iter_ones().all(|i| i < f));
    }

    #[test]
    fn adjacent_vertex_defects_take_one_edge() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = crate::contraction::contract(&g, Color::Red).unwrap();
        let code = surface_code(&sg).unwrap();
        for e in 0..sg.num_edges() {
            let err = PauliOp::z_on(sg.space(), [e]);
            let syn = extract_syndrome(&code, &err).unwrap();
            let corr = mwpm_decode(&sg, &syn).unwrap();
            assert_eq!(corr.weight(), 1);
            assert_eq!(extract_syndrome(&code, &corr).unwrap(), syn);
        }
    }

    #[test]
    fn corrections_reproduce_syndromes() {
        for c in Color::ALL {
            let d = decoder(c);
            let code = d.color_code().clone();
            for q in 0..code.num_qubits() {
                for p in [Pauli::X, Pauli::Y, Pauli::Z] {
                    let e = PauliOp::single(code.space(), q, p);
                    let out = d.decode_error(&e).unwrap();
                    assert_eq!(
                        extract_syndrome(&code, &out.correction).unwrap(),
                        extract_syndrome(&code, &e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn logical_operators_fail_with_stable_class() {
        let d = decoder(Color::Green);
        let logicals = d.color_code().logical_operators();
        for l in &logicals {
            let a = d.decode_error(l).unwrap();
            let b = d.decode_error(l).unwrap();
            assert!(!a.success);
            assert_ne!(a.logical_class, 0);
            assert_eq!(a.logical_class, b.logical_class);
        }
    }

    #[test]
    fn odd_defects_are_a_fault() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = crate::contraction::contract(&g, Color::Red).unwrap();
        let code = surface_code(&sg).unwrap();
        let mut bits = BitVec::zeros(code.len());
        bits.set(0, true);
        let syn = Syndrome { kind: CodeKind::Surface, space: code.space(), bits };
        assert!(matches!(mwpm_decode(&sg, &syn), Err(Error::OddDefects { .. })));
    }
}
