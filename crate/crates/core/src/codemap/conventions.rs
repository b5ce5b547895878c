//! Per-face labeling choices that pin down one concrete map.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::colex::{Colex, Color};
use crate::error::{Error, Result};

/// Face stabilizer multiplied into a splitting operator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitElement {
    #[default]
    I,
    X,
    Y,
    Z,
}

impl SplitElement {
    pub const ALL: [SplitElement; 4] = [Self::I, Self::X, Self::Y, Self::Z];

    pub fn has_x(self) -> bool {
        matches!(self, Self::X | Self::Y)
    }

    pub fn has_z(self) -> bool {
        matches!(self, Self::Z | Self::Y)
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Self> {
        Self::ALL.get(usize::from(code)).copied()
    }
}

/// Labeling and splitter choices for one `c″`-colored face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceConvention {
    pub face: usize,
    /// Which admissible start vertex becomes `v₁`, counted in ascending vertex id.
    ///
    /// A start is admissible when the boundary edge leaving it (in stored
    /// order) has color `c`; `0` picks the lowest such vertex.
    pub base: usize,
    /// The `c′`-edge `(v_{2m}, v_{2m+1})` whose `X` hopper is dependent, `1 ≤ m ≤ ℓ`.
    pub m: usize,
    /// Multiplies the `X₁` splitter.
    pub x_split: SplitElement,
    /// Multiplies the `Z_{2m}` splitter.
    pub z_split: SplitElement,
}

/// Everything needed besides the colex to rebuild a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapConventions {
    pub color: Color,
    /// One entry per `c″`-colored face, ascending by face index.
    pub faces: Vec<FaceConvention>,
}

/// Boundary of a `c″` face relabeled as `v₁ … v_{2ℓ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLabeling {
    pub face: usize,
    /// `vertices[i]` is `v_{i+1}`.
    pub vertices: Vec<usize>,
    pub m: usize,
    pub x_split: SplitElement,
    pub z_split: SplitElement,
}

impl FaceLabeling {
    pub fn half_length(&self) -> usize {
        self.vertices.len() / 2
    }

    /// `v_j` with 1-based, cyclic `j` (`v_{2ℓ+1} = v₁`).
    pub fn v(&self, j: usize) -> usize {
        self.vertices[(j + self.vertices.len() - 1) % self.vertices.len()]
    }
}

/// Splitter pairs that keep the two splitting operators commuting.
///
/// `g₁X₁` and `g₂Z_{2m}` commute iff `g₁` has an X part exactly when `g₂` has a Z part.
pub fn compatible_splits(x_split: SplitElement, z_split: SplitElement) -> bool {
    x_split.has_x() == z_split.has_z()
}

fn admissible_starts(g: &Colex, face: usize, c: Color) -> Vec<usize> {
    let b = &g.face(face).boundary;
    let mut starts: Vec<usize> = (0..b.len())
        .filter(|&k| g.edge_between(b[k], b[(k + 1) % b.len()]).is_some_and(|e| g.edge(e).color == c))
        .collect();
    starts.sort_by_key(|&k| b[k]);
    starts
}

impl MapConventions {
    /// Lowest admissible `v₁`, `m = ℓ`, identity splitters on every face.
    pub fn standard(g: &Colex, color: Color) -> Result<Self> {
        let faces = g
            .faces_of_color(color.prev())
            .map(|f| FaceConvention {
                face: f,
                base: 0,
                m: g.face(f).half_length(),
                x_split: SplitElement::I,
                z_split: SplitElement::I,
            })
            .collect();
        Ok(Self { color, faces })
    }

    /// Uniform draw over start vertices, `m`, and compatible splitter pairs.
    pub fn random<R: Rng + ?Sized>(g: &Colex, color: Color, rng: &mut R) -> Self {
        let pairs: Vec<(SplitElement, SplitElement)> = SplitElement::ALL
            .iter()
            .flat_map(|&a| SplitElement::ALL.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| compatible_splits(a, b))
            .collect();
        let faces = g
            .faces_of_color(color.prev())
            .map(|f| {
                let l = g.face(f).half_length();
                let (x_split, z_split) = pairs[rng.gen_range(0..pairs.len())];
                FaceConvention {
                    face: f,
                    base: rng.gen_range(0..l),
                    m: rng.gen_range(1..=l),
                    x_split,
                    z_split,
                }
            })
            .collect();
        Self { color, faces }
    }

    /// Checks the conventions against `g` and resolves each face's labeling.
    pub fn labelings(&self, g: &Colex) -> Result<Vec<FaceLabeling>> {
        let c = self.color;
        let expected: Vec<usize> = g.faces_of_color(c.prev()).collect();
        let listed: Vec<usize> = self.faces.iter().map(|f| f.face).collect();
        if listed != expected {
            return Err(Error::Convention(format!(
                "conventions must list the {} {}-colored faces in ascending order",
                expected.len(),
                c.prev()
            )));
        }
        self.faces
            .iter()
            .map(|fc| {
                let face = g.face(fc.face);
                let l = face.half_length();
                if fc.m < 1 || fc.m > l {
                    return Err(Error::Convention(format!("face {}: m = {} outside 1..={l}", fc.face, fc.m)));
                }
                let starts = admissible_starts(g, fc.face, c);
                let &start = starts.get(fc.base).ok_or_else(|| {
                    Error::Convention(format!(
                        "face {}: base {} but only {} admissible start vertices",
                        fc.face,
                        fc.base,
                        starts.len()
                    ))
                })?;
                if !compatible_splits(fc.x_split, fc.z_split) {
                    return Err(Error::Convention(format!(
                        "face {}: splitters {:?}·X and {:?}·Z anticommute",
                        fc.face, fc.x_split, fc.z_split
                    )));
                }
                let b = &face.boundary;
                let vertices = (0..b.len()).map(|k| b[(start + k) % b.len()]).collect();
                Ok(FaceLabeling {
                    face: fc.face,
                    vertices,
                    m: fc.m,
                    x_split: fc.x_split,
                    z_split: fc.z_split,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::build_hexagonal_torus;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn standard_labeling_starts_on_a_c_edge() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        for c in Color::ALL {
            let conv = MapConventions::standard(&g, c).unwrap();
            assert_eq!(conv.faces.len(), 3);
            for lab in conv.labelings(&g).unwrap() {
                let l = lab.half_length();
                for i in 1..=l {
                    let e = g.edge_between(lab.v(2 * i - 1), lab.v(2 * i)).unwrap();
                    assert_eq!(g.edge(e).color, c);
                    let e = g.edge_between(lab.v(2 * i), lab.v(2 * i + 1)).unwrap();
                    assert_eq!(g.edge(e).color, c.next());
                }
            }
        }
    }

    #[test]
    fn out_of_range_m_is_rejected() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut conv = MapConventions::standard(&g, Color::Red).unwrap();
        conv.faces[0].m = 4;
        assert!(matches!(conv.labelings(&g), Err(Error::Convention(_))));
        conv.faces[0].m = 0;
        assert!(matches!(conv.labelings(&g), Err(Error::Convention(_))));
    }

    #[test]
    fn anticommuting_splitters_are_rejected() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut conv = MapConventions::standard(&g, Color::Green).unwrap();
        conv.faces[1].x_split = SplitElement::X;
        assert!(matches!(conv.labelings(&g), Err(Error::Convention(_))));
        conv.faces[1].z_split = SplitElement::Z;
        assert!(conv.labelings(&g).is_ok());
    }

    #[test]
    fn random_draws_are_valid() {
        let g = build_hexagonal_torus(3, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for c in Color::ALL {
            for _ in 0..10 {
                MapConventions::random(&g, c, &mut rng).labelings(&g).unwrap();
            }
        }
    }
}
