//! 2-colexes: trivalent, 3-face-colorable graphs with a combinatorial embedding.

mod generators;
mod io;
pub(crate) mod validate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use generators::{build_hexagonal_torus, build_square_octagon_rect, build_square_octagon_torus};
pub use io::{load_colex, parse_colex, save_colex};
pub use validate::validate_colex;

/// Face (and edge) color. Cyclic order `r → g → b → r` fixes `c′` and `c″`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "r")]
    Red,
    #[serde(rename = "g")]
    Green,
    #[serde(rename = "b")]
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Color {
        Self::ALL[i % 3]
    }

    /// `c′` for `c = self`.
    pub fn next(self) -> Color {
        Self::from_index(self.index() + 1)
    }

    /// `c″` for `c = self`.
    pub fn prev(self) -> Color {
        Self::from_index(self.index() + 2)
    }

    /// The color different from both `a` and `b` (which must differ).
    pub fn third(a: Color, b: Color) -> Option<Color> {
        (a != b).then(|| Self::from_index(3 - a.index() - b.index()))
    }

    pub fn letter(self) -> &'static str {
        match self {
            Color::Red => "r",
            Color::Green => "g",
            Color::Blue => "b",
        }
    }

    pub fn parse(s: &str) -> Option<Color> {
        match s {
            "r" | "red" => Some(Color::Red),
            "g" | "green" => Some(Color::Green),
            "b" | "blue" => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl std::str::FromStr for Color {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Color::parse(s).ok_or_else(|| format!("unknown color {s:?} (expected r, g or b)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub ends: [usize; 2],
    pub color: Color,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub color: Color,
    /// Boundary vertices, counter-clockwise.
    pub boundary: Vec<usize>,
}

impl Face {
    /// `ℓ_f`, half the boundary length.
    pub fn half_length(&self) -> usize {
        self.boundary.len() / 2
    }
}

/// Which generator produced a lattice; carried through files for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeMeta {
    pub family: String,
    pub rows: usize,
    pub cols: usize,
}

/// A 2-colex with a rotation system.
///
/// Values are immutable once built. Constructors do not validate; run
/// [`validate_colex`] (or load through [`load_colex`]) before relying on the
/// colex invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colex {
    genus: u32,
    num_vertices: usize,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    rotation: Vec<[usize; 3]>,
    meta: Option<LatticeMeta>,
    vertex_edges: Vec<Vec<usize>>,
    vertex_faces: Vec<Vec<usize>>,
}

impl Colex {
    pub fn from_parts(
        genus: u32,
        num_vertices: usize,
        edges: Vec<Edge>,
        faces: Vec<Face>,
        rotation: Vec<[usize; 3]>,
    ) -> Self {
        let mut vertex_edges = vec![Vec::new(); num_vertices];
        for (i, e) in edges.iter().enumerate() {
            for &v in &e.ends {
                if v < num_vertices {
                    vertex_edges[v].push(i);
                }
            }
        }
        let mut vertex_faces = vec![Vec::new(); num_vertices];
        for (i, f) in faces.iter().enumerate() {
            for &v in &f.boundary {
                if v < num_vertices && !vertex_faces[v].contains(&i) {
                    vertex_faces[v].push(i);
                }
            }
        }
        Self { genus, num_vertices, edges, faces, rotation, meta: None, vertex_edges, vertex_faces }
    }

    /// Builds edges, edge colors and the rotation system from face boundaries.
    ///
    /// Boundaries must be counter-clockwise; each undirected edge must appear in
    /// exactly two faces, once in each direction. Edges are numbered in order of
    /// first appearance.
    pub fn from_faces(genus: u32, num_vertices: usize, faces: Vec<Face>) -> Result<Self> {
        let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edge_ends: Vec<[usize; 2]> = Vec::new();
        let mut edge_faces: Vec<Vec<usize>> = Vec::new();
        for (fi, f) in faces.iter().enumerate() {
            let b = &f.boundary;
            for k in 0..b.len() {
                let (u, v) = (b[k], b[(k + 1) % b.len()]);
                if u >= num_vertices || v >= num_vertices || u == v {
                    return Err(Error::InvalidColex(format!("face {fi} has a bad boundary step {u}->{v}")));
                }
                let key = (u.min(v), u.max(v));
                let id = *edge_index.entry(key).or_insert_with(|| {
                    edge_ends.push([u, v]);
                    edge_faces.push(Vec::new());
                    edge_ends.len() - 1
                });
                edge_faces[id].push(fi);
            }
        }
        let mut edges = Vec::with_capacity(edge_ends.len());
        for (i, ends) in edge_ends.iter().enumerate() {
            let fs = &edge_faces[i];
            if fs.len() != 2 {
                return Err(Error::InvalidColex(format!(
                    "edge {}-{} lies on {} face sides",
                    ends[0],
                    ends[1],
                    fs.len()
                )));
            }
            let color = Color::third(faces[fs[0]].color, faces[fs[1]].color).ok_or_else(|| {
                Error::InvalidColex(format!(
                    "edge {}-{} separates two faces of the same color",
                    ends[0], ends[1]
                ))
            })?;
            edges.push(Edge { ends: *ends, color });
        }

        // Counter-clockwise successor of edge (v,w) at v is (v,u) for each
        // boundary step u -> v -> w.
        let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); num_vertices];
        for f in &faces {
            let b = &f.boundary;
            let len = b.len();
            for k in 0..len {
                let u = b[(k + len - 1) % len];
                let v = b[k];
                let w = b[(k + 1) % len];
                let vw = edge_index[&(v.min(w), v.max(w))];
                let vu = edge_index[&(v.min(u), v.max(u))];
                succ[v].insert(vw, vu);
            }
        }
        let mut rotation = Vec::with_capacity(num_vertices);
        for (v, s) in succ.iter().enumerate() {
            let Some((&start, _)) = s.iter().next() else {
                return Err(Error::InvalidColex(format!("vertex {v} lies on no face")));
            };
            let mut cycle = vec![start];
            let mut cur = start;
            while let Some(&nx) = s.get(&cur) {
                if nx == start {
                    break;
                }
                cycle.push(nx);
                cur = nx;
                if cycle.len() > 3 {
                    break;
                }
            }
            if cycle.len() != 3 || s.len() != 3 {
                return Err(Error::InvalidColex(format!("vertex {v} is not trivalent")));
            }
            rotation.push([cycle[0], cycle[1], cycle[2]]);
        }
        Ok(Self::from_parts(genus, num_vertices, edges, faces, rotation))
    }

    pub fn with_meta(mut self, meta: LatticeMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `n`, the number of vertices (color-code qubits).
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn rotation(&self) -> &[[usize; 3]] {
        &self.rotation
    }

    pub fn meta(&self) -> Option<&LatticeMeta> {
        self.meta.as_ref()
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn faces_of_color(&self, c: Color) -> impl Iterator<Item = usize> + '_ {
        self.faces.iter().enumerate().filter(move |(_, f)| f.color == c).map(|(i, _)| i)
    }

    pub fn edges_of_color(&self, c: Color) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.color == c).map(|(i, _)| i)
    }

    pub fn count_faces(&self, c: Color) -> usize {
        self.faces_of_color(c).count()
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn incident_faces(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    /// The unique `c`-colored edge at `v`.
    pub fn edge_at(&self, v: usize, c: Color) -> Option<usize> {
        self.vertex_edges[v].iter().copied().find(|&e| self.edges[e].color == c)
    }

    /// The unique `c`-colored face containing `v`.
    pub fn face_at(&self, v: usize, c: Color) -> Option<usize> {
        self.vertex_faces[v].iter().copied().find(|&f| self.faces[f].color == c)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.vertex_edges
            .get(u)?
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(u) == v && self.edges[e].ends.contains(&v))
    }

    /// Faces traced from the rotation system, one vertex cycle per face.
    ///
    /// Arriving at `v` along edge `e`, the walk leaves along the edge preceding
    /// `e` in the counter-clockwise order at `v`. Returns `None` if the rotation
    /// does not reference valid incident edges.
    pub fn trace_faces(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.num_vertices;
        if self.rotation.len() != n {
            return None;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.iter().any(|&e| e >= self.edges.len() || !self.edges[e].ends.contains(&v)) {
                return None;
            }
        }
        // dart (edge, from end 0?) visited flags
        let mut seen = vec![[false; 2]; self.edges.len()];
        let mut out = Vec::new();
        for e0 in 0..self.edges.len() {
            for side in 0..2 {
                if seen[e0][side] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut e, mut s) = (e0, side);
                loop {
                    if seen[e][s] {
                        if (e, s) != (e0, side) {
                            return None;
                        }
                        break;
                    }
                    seen[e][s] = true;
                    let tail = self.edges[e].ends[s];
                    let head = self.edges[e].ends[1 - s];
                    cycle.push(tail);
                    let rot = &self.rotation[head];
                    let pos = rot.iter().position(|&x| x == e)?;
                    let nx = rot[(pos + 2) % 3];
                    let ns = if self.edges[nx].ends[0] == head { 0 } else { 1 };
                    e = nx;
                    s = ns;
                    if cycle.len() > 2 * self.edges.len() {
                        return None;
                    }
                }
                out.push(cycle);
            }
        }
        Some(out)
    }

    /// Stable 64-bit fingerprint of the lattice structure (metadata excluded).
    pub fn fingerprint(&self) -> u64 {
        let mut h = Sha256::new();
        h.update(self.genus.to_le_bytes());
        h.update((self.num_vertices as u64).to_le_bytes());
        for e in &self.edges {
            h.update((e.ends[0] as u64).to_le_bytes());
            h.update((e.ends[1] as u64).to_le_bytes());
            h.update([e.color as u8]);
        }
        for f in &self.faces {
            h.update([f.color as u8]);
            h.update((f.boundary.len() as u64).to_le_bytes());
            for &v in &f.boundary {
                h.update((v as u64).to_le_bytes());
            }
        }
        for r in &self.rotation {
            for &e in r {
                h.update((e as u64).to_le_bytes());
            }
        }
        let digest = h.finalize();
        u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_color_convention() {
        assert_eq!(Color::Red.next(), Color::Green);
        assert_eq!(Color::Red.prev(), Color::Blue);
        assert_eq!(Color::Blue.next(), Color::Red);
        for c in Color::ALL {
            let (c1, c2) = (c.next(), c.prev());
            assert!(c != c1 && c1 != c2 && c2 != c);
            assert_eq!(Color::third(c1, c2), Some(c));
        }
        assert_eq!(Color::third(Color::Red, Color::Red), None);
    }

    #[test]
    fn traced_faces_reproduce_stored_faces() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let traced = g.trace_faces().unwrap();
        assert_eq!(traced.len(), g.faces().len());
        for f in g.faces() {
            assert!(traced.iter().any(|t| validate::same_cycle(t, &f.boundary)));
        }
    }
}
