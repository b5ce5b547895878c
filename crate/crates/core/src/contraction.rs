//! Contraction `τ_c`: collapse every `c`-colored face of a colex to a vertex.
//!
//! The result keeps the parent's `c`-colored edges as its edges (parallel edges
//! and loops are kept as distinct edges) and the remaining faces as its faces.
//! The rotation at a contracted vertex lists the outgoing `c`-edges in the
//! order met while walking the contracted face counter-clockwise.

use std::fmt::Write as _;

use crate::colex::{validate::same_cycle, validate_colex, Colex, Color};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::symplectic::{SpaceId, SpaceKind};

/// An edge traversed in one direction: from `ends[0]` to `ends[1]` unless reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: usize,
    pub reversed: bool,
}

impl Dart {
    pub fn reverse(self) -> Dart {
        Dart { edge: self.edge, reversed: !self.reversed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceEdge {
    /// Parent `c`-colored colex edge.
    pub parent: usize,
    pub ends: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceFace {
    /// Parent non-`c` colex face.
    pub parent: usize,
    pub boundary: Vec<Dart>,
}

/// `τ_c(Γ)` together with its correspondence tables back to the parent colex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceGraph {
    color: Color,
    genus: u32,
    lattice: u64,
    vertex_parent: Vec<usize>,
    edges: Vec<SurfaceEdge>,
    faces: Vec<SurfaceFace>,
    rotation: Vec<Vec<Dart>>,
    parent_face_vertex: Vec<Option<usize>>,
    parent_face_face: Vec<Option<usize>>,
    parent_edge_edge: Vec<Option<usize>>,
    qubit_of_vertex: Vec<usize>,
}

/// Contracts all `c`-colored faces of `g`.
pub fn contract(g: &Colex, c: Color) -> Result<SurfaceGraph> {
    let report = validate_colex(g);
    if !report.all_passed() {
        let first = report.failures().next().map(|f| f.name.clone()).unwrap_or_default();
        return Err(Error::InvalidColex(format!("cannot contract: {first} check failed")));
    }

    let mut parent_face_vertex = vec![None; g.faces().len()];
    let mut vertex_parent = Vec::new();
    for f in g.faces_of_color(c) {
        parent_face_vertex[f] = Some(vertex_parent.len());
        vertex_parent.push(f);
    }
    let contracted = |v: usize| -> usize {
        let f = g.face_at(v, c).expect("validated: every vertex meets each color");
        parent_face_vertex[f].expect("c-colored face")
    };

    let mut parent_edge_edge = vec![None; g.edges().len()];
    let mut edges = Vec::new();
    for e in g.edges_of_color(c) {
        let pe = g.edge(e);
        parent_edge_edge[e] = Some(edges.len());
        edges.push(SurfaceEdge { parent: e, ends: [contracted(pe.ends[0]), contracted(pe.ends[1])] });
    }
    // Dart along the c-edge at colex vertex v, leaving v's contracted face.
    let dart_from = |v: usize| -> Dart {
        let e = g.edge_at(v, c).expect("validated: one edge per color");
        Dart { edge: parent_edge_edge[e].expect("c-colored edge"), reversed: g.edge(e).ends[0] != v }
    };

    let rotation: Vec<Vec<Dart>> =
        vertex_parent.iter().map(|&f| g.face(f).boundary.iter().map(|&v| dart_from(v)).collect()).collect();

    let mut parent_face_face = vec![None; g.faces().len()];
    let mut faces = Vec::new();
    for (fi, f) in g.faces().iter().enumerate() {
        if f.color == c {
            continue;
        }
        let b = &f.boundary;
        let mut boundary = Vec::with_capacity(b.len() / 2);
        for k in 0..b.len() {
            let (u, v) = (b[k], b[(k + 1) % b.len()]);
            let e = g.edge_between(u, v).expect("validated boundary");
            if g.edge(e).color == c {
                boundary.push(dart_from(u));
            }
        }
        parent_face_face[fi] = Some(faces.len());
        faces.push(SurfaceFace { parent: fi, boundary });
    }

    let qubit_of_vertex = (0..g.num_vertices()).map(|v| dart_from(v).edge).collect();

    Ok(SurfaceGraph {
        color: c,
        genus: g.genus(),
        lattice: g.fingerprint(),
        vertex_parent,
        edges,
        faces,
        rotation,
        parent_face_vertex,
        parent_face_face,
        parent_edge_edge,
        qubit_of_vertex,
    })
}

impl SurfaceGraph {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Fingerprint of the parent colex.
    pub fn lattice(&self) -> u64 {
        self.lattice
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_parent.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[SurfaceEdge] {
        &self.edges
    }

    pub fn faces(&self) -> &[SurfaceFace] {
        &self.faces
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Qubit space of one surface-code copy.
    pub fn space(&self) -> SpaceId {
        SpaceId::new(SpaceKind::Surface, self.space_tag(), self.num_edges())
    }

    /// Qubit space of both copies, copy 1 on qubits `0..E` and copy 2 on `E..2E`.
    pub fn pair_space(&self) -> SpaceId {
        SpaceId::new(SpaceKind::SurfacePair, self.space_tag(), 2 * self.num_edges())
    }

    fn space_tag(&self) -> u64 {
        self.lattice ^ (self.color.index() as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }

    /// `τ(v)`: the surface edge of colex vertex `v`'s `c`-edge.
    pub fn tau_vertex(&self, v: usize) -> usize {
        self.qubit_of_vertex[v]
    }

    /// Surface vertex of a contracted (`c`-colored) colex face.
    pub fn vertex_of_face(&self, f: usize) -> Option<usize> {
        self.parent_face_vertex.get(f).copied().flatten()
    }

    /// Surface face of a non-`c` colex face.
    pub fn face_of_face(&self, f: usize) -> Option<usize> {
        self.parent_face_face.get(f).copied().flatten()
    }

    pub fn edge_of_edge(&self, e: usize) -> Option<usize> {
        self.parent_edge_edge.get(e).copied().flatten()
    }

    pub fn vertex_parent(&self, v: usize) -> usize {
        self.vertex_parent[v]
    }

    pub fn dart_tail(&self, d: Dart) -> usize {
        self.edges[d.edge].ends[usize::from(d.reversed)]
    }

    pub fn dart_head(&self, d: Dart) -> usize {
        self.edges[d.edge].ends[1 - usize::from(d.reversed)]
    }

    /// Edges at `v` with multiplicity (a loop appears twice).
    pub fn vertex_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(|d| d.edge)
    }

    /// Edges on the boundary of face `f` with multiplicity.
    pub fn face_edges(&self, f: usize) -> impl Iterator<Item = usize> + '_ {
        self.faces[f].boundary.iter().map(|d| d.edge)
    }

    /// The faces on either side of each edge (equal when an edge borders one face twice).
    pub fn edge_faces(&self) -> Vec<[usize; 2]> {
        let mut sides: Vec<Vec<usize>> = vec![Vec::new(); self.num_edges()];
        for (f, face) in self.faces.iter().enumerate() {
            for d in &face.boundary {
                sides[d.edge].push(f);
            }
        }
        sides
            .into_iter()
            .map(|s| {
                let a = s.first().copied().unwrap_or(usize::MAX);
                [a, s.get(1).copied().unwrap_or(a)]
            })
            .collect()
    }

    /// Faces traced from the rotation system as dart cycles.
    ///
    /// Arriving at a vertex along dart `d`, the walk continues with the dart that
    /// precedes `d.reverse()` in that vertex's rotation.
    pub fn trace_faces(&self) -> Option<Vec<Vec<Dart>>> {
        let mut position = vec![[None; 2]; self.num_edges()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (k, d) in rot.iter().enumerate() {
                if d.edge >= self.num_edges() || self.dart_tail(*d) != v {
                    return None;
                }
                position[d.edge][usize::from(d.reversed)] = Some((v, k));
            }
        }
        let mut seen = vec![[false; 2]; self.num_edges()];
        let mut out = Vec::new();
        for e in 0..self.num_edges() {
            for side in [false, true] {
                if seen[e][usize::from(side)] {
                    continue;
                }
                let start = Dart { edge: e, reversed: side };
                let mut cycle = Vec::new();
                let mut d = start;
                loop {
                    let slot = &mut seen[d.edge][usize::from(d.reversed)];
                    if *slot {
                        if d != start {
                            return None;
                        }
                        break;
                    }
                    *slot = true;
                    cycle.push(d);
                    let back = d.reverse();
                    let (v, k) = position[back.edge][usize::from(back.reversed)]?;
                    let rot = &self.rotation[v];
                    d = rot[(k + rot.len() - 1) % rot.len()];
                }
                out.push(cycle);
            }
        }
        Some(out)
    }

    /// JSON form: the lattice layout of a colex plus correspondence tables.
    pub fn to_json(&self) -> String {
        let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(", ");
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"genus\": {},", self.genus);
        let _ = writeln!(s, "  \"color\": \"{}\",", self.color);
        let _ = writeln!(s, "  \"vertices\": {},", self.num_vertices());
        let edges: Vec<String> =
            self.edges.iter().map(|e| format!("    [{}, {}]", e.ends[0], e.ends[1])).collect();
        let _ = writeln!(s, "  \"edges\": [\n{}\n  ],", edges.join(",\n"));
        let faces: Vec<String> = self
            .faces
            .iter()
            .map(|f| {
                let verts = join(&mut f.boundary.iter().map(|d| self.dart_tail(*d).to_string()));
                let es = join(&mut f.boundary.iter().map(|d| d.edge.to_string()));
                format!("    {{\"boundary\": [{verts}], \"edges\": [{es}]}}")
            })
            .collect();
        let _ = writeln!(s, "  \"faces\": [\n{}\n  ],", faces.join(",\n"));
        let rot: Vec<String> = self
            .rotation
            .iter()
            .map(|r| format!("    [{}]", join(&mut r.iter().map(|d| d.edge.to_string()))))
            .collect();
        let _ = writeln!(s, "  \"rotation\": [\n{}\n  ],", rot.join(",\n"));
        s.push_str("  \"tables\": {\n");
        let _ = writeln!(
            s,
            "    \"vertex_face\": [{}],",
            join(&mut self.vertex_parent.iter().map(usize::to_string))
        );
        let _ = writeln!(
            s,
            "    \"edge_parent\": [{}],",
            join(&mut self.edges.iter().map(|e| e.parent.to_string()))
        );
        let _ = writeln!(
            s,
            "    \"face_parent\": [{}],",
            join(&mut self.faces.iter().map(|f| f.parent.to_string()))
        );
        let _ = writeln!(
            s,
            "    \"qubit_of_vertex\": [{}]",
            join(&mut self.qubit_of_vertex.iter().map(usize::to_string))
        );
        s.push_str("  }\n}\n");
        s
    }
}

/// Checks that a contracted graph can host a surface code and that its tables invert.
pub fn surface_dual_check(sg: &SurfaceGraph) -> ValidationReport {
    let mut report = ValidationReport::new();

    let mut sides = vec![0usize; sg.num_edges()];
    for f in &sg.faces {
        for d in &f.boundary {
            if d.edge < sides.len() {
                sides[d.edge] += 1;
            }
        }
    }
    report.record(
        "edge-face-incidence",
        sides.iter().position(|&s| s != 2).map(|e| format!("edge {e} lies on {} face sides", sides[e])),
    );

    let closure = sg.faces.iter().enumerate().find_map(|(i, f)| {
        if f.boundary.is_empty() {
            return Some(format!("face {i} has an empty boundary"));
        }
        if f.boundary.iter().any(|d| d.edge >= sg.num_edges()) {
            return Some(format!("face {i} references a missing edge"));
        }
        let len = f.boundary.len();
        (0..len)
            .find(|&k| sg.dart_head(f.boundary[k]) != sg.dart_tail(f.boundary[(k + 1) % len]))
            .map(|k| format!("face {i} boundary breaks after step {k}"))
    });
    let closure_ok = closure.is_none();
    report.record("boundary-closure", closure);

    let traced = if closure_ok { sg.trace_faces() } else { None };
    let rotation_failure = match traced {
        None => Some("rotation system does not trace closed faces".to_string()),
        Some(t) if t.len() != sg.num_faces() => {
            Some(format!("rotation traces {} faces, {} stored", t.len(), sg.num_faces()))
        }
        Some(t) => sg.faces.iter().enumerate().find_map(|(i, f)| {
            (!t.iter().any(|c| same_cycle(c, &f.boundary)))
                .then(|| format!("face {i} is not traced by the rotation system"))
        }),
    };
    report.record("rotation-faces", rotation_failure);

    report.record("tables", check_tables(sg));

    let chi = sg.euler_characteristic();
    let expected = 2 - 2 * sg.genus as i64;
    report.record("euler", (chi != expected).then(|| format!("V-E+F = {chi}, expected {expected}")));
    report
}

fn check_tables(sg: &SurfaceGraph) -> Option<String> {
    for (v, &f) in sg.vertex_parent.iter().enumerate() {
        if sg.parent_face_vertex.get(f).copied().flatten() != Some(v) {
            return Some(format!("vertex {v} (parent face {f}) is not mapped back"));
        }
    }
    let mapped = sg.parent_face_vertex.iter().flatten().count();
    if mapped != sg.num_vertices() {
        return Some(format!("{mapped} parent faces map to {} vertices", sg.num_vertices()));
    }
    for (i, e) in sg.edges.iter().enumerate() {
        if sg.parent_edge_edge.get(e.parent).copied().flatten() != Some(i) {
            return Some(format!("edge {i} (parent edge {}) is not mapped back", e.parent));
        }
    }
    for (i, f) in sg.faces.iter().enumerate() {
        if sg.parent_face_face.get(f.parent).copied().flatten() != Some(i) {
            return Some(format!("face {i} (parent face {}) is not mapped back", f.parent));
        }
    }
    let mut hits = vec![0usize; sg.num_edges()];
    for (v, &q) in sg.qubit_of_vertex.iter().enumerate() {
        if q >= sg.num_edges() {
            return Some(format!("colex vertex {v} maps to missing edge {q}"));
        }
        hits[q] += 1;
    }
    hits.iter().position(|&h| h != 2).map(|e| format!("edge {e} is the image of {} colex vertices", hits[e]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::{build_hexagonal_torus, build_square_octagon_torus};

    #[test]
    fn hexagonal_contraction_counts() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = contract(&g, Color::Red).unwrap();
        assert_eq!((sg.num_vertices(), sg.num_edges(), sg.num_faces()), (3, 9, 6));
        let r = surface_dual_check(&sg);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn deleting_a_boundary_dart_breaks_closure() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut sg = contract(&g, Color::Red).unwrap();
        sg.faces[2].boundary.remove(1);
        let r = surface_dual_check(&sg);
        assert!(!r.passed("boundary-closure"), "{r}");
        assert!(!r.passed("edge-face-incidence"));
    }

    #[test]
    fn unmapped_vertex_fails_totality() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut sg = contract(&g, Color::Green).unwrap();
        let f = sg.vertex_parent[1];
        sg.parent_face_vertex[f] = None;
        let r = surface_dual_check(&sg);
        assert!(!r.passed("tables"));
        assert!(r.passed("boundary-closure"));
    }

    #[test]
    fn contraction_preserves_parallel_edges() {
        // Three red hexagons pairwise joined by three red edges each.
        let g = build_hexagonal_torus(3, 3).unwrap();
        let sg = contract(&g, Color::Red).unwrap();
        let mut pairs: Vec<[usize; 2]> =
            sg.edges().iter().map(|e| [e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1])]).collect();
        pairs.sort();
        pairs.dedup();
        assert!(pairs.len() < sg.num_edges());
    }

    #[test]
    fn square_color_contraction_gives_square_faces() {
        let g = build_square_octagon_torus(2).unwrap();
        let sg = contract(&g, Color::Red).unwrap();
        assert!(sg.faces().iter().all(|f| f.boundary.len() == 4));
        assert!(surface_dual_check(&sg).all_passed());
    }

    #[test]
    fn invalid_colex_is_rejected() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let h = Colex::from_parts(
            2,
            g.num_vertices(),
            g.edges().to_vec(),
            g.faces().to_vec(),
            g.rotation().to_vec(),
        );
        assert!(matches!(contract(&h, Color::Red), Err(Error::InvalidColex(_))));
    }
}
