use std::collections::HashSet;

use super::{Colex, Color};
use crate::report::ValidationReport;

const CHECKS: [&str; 9] = [
    "indices",
    "trivalent",
    "vertex-edge-colors",
    "parallel-edges",
    "rotation",
    "face-boundaries",
    "face-coloring",
    "embedding",
    "euler",
];

/// Checks every colex invariant, reporting the first offending element of each.
pub fn validate_colex(g: &Colex) -> ValidationReport {
    let mut report = ValidationReport::new();
    let index_failure = check_indices(g);
    let indices_ok = index_failure.is_none();
    report.record(CHECKS[0], index_failure);
    if !indices_ok {
        for name in &CHECKS[1..] {
            report.fail(*name, "not evaluated: index check failed");
        }
        return report;
    }
    report.record(CHECKS[1], check_trivalent(g));
    report.record(CHECKS[2], check_vertex_colors(g));
    report.record(CHECKS[3], check_parallel(g));
    report.record(CHECKS[4], check_rotation(g));
    report.record(CHECKS[5], check_boundaries(g));
    report.record(CHECKS[6], check_face_coloring(g));
    report.record(CHECKS[7], check_embedding(g));
    let chi = g.euler_characteristic();
    let expected = 2 - 2 * g.genus() as i64;
    report.record(
        CHECKS[8],
        (chi != expected).then(|| format!("V-E+F = {chi}, genus {} requires {expected}", g.genus())),
    );
    report
}

fn check_indices(g: &Colex) -> Option<String> {
    let n = g.num_vertices();
    for (i, e) in g.edges().iter().enumerate() {
        if let Some(&v) = e.ends.iter().find(|&&v| v >= n) {
            return Some(format!("edge {i} references vertex {v} >= {n}"));
        }
    }
    for (i, f) in g.faces().iter().enumerate() {
        if let Some(&v) = f.boundary.iter().find(|&&v| v >= n) {
            return Some(format!("face {i} references vertex {v} >= {n}"));
        }
    }
    if g.rotation().len() != n {
        return Some(format!("rotation lists {} vertices, expected {n}", g.rotation().len()));
    }
    for (v, r) in g.rotation().iter().enumerate() {
        if let Some(&e) = r.iter().find(|&&e| e >= g.edges().len()) {
            return Some(format!("rotation at vertex {v} references edge {e}"));
        }
    }
    None
}

fn check_trivalent(g: &Colex) -> Option<String> {
    (0..g.num_vertices())
        .find(|&v| g.incident_edges(v).len() != 3)
        .map(|v| format!("vertex {v} has degree {}", g.incident_edges(v).len()))
}

fn check_vertex_colors(g: &Colex) -> Option<String> {
    for v in 0..g.num_vertices() {
        let colors: HashSet<Color> = g.incident_edges(v).iter().map(|&e| g.edge(e).color).collect();
        if colors.len() != g.incident_edges(v).len() {
            return Some(format!("vertex {v} has two incident edges of the same color"));
        }
    }
    None
}

fn check_parallel(g: &Colex) -> Option<String> {
    let mut seen = HashSet::new();
    for (i, e) in g.edges().iter().enumerate() {
        let [a, b] = e.ends;
        if a == b {
            return Some(format!("edge {i} is a loop at vertex {a}"));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Some(format!("edge {i} duplicates the edge between {a} and {b}"));
        }
    }
    None
}

fn check_rotation(g: &Colex) -> Option<String> {
    for (v, r) in g.rotation().iter().enumerate() {
        let mut listed: Vec<usize> = r.to_vec();
        listed.sort_unstable();
        let mut incident = g.incident_edges(v).to_vec();
        incident.sort_unstable();
        if listed != incident {
            return Some(format!("rotation at vertex {v} lists {r:?}, incident edges are {incident:?}"));
        }
    }
    None
}

fn check_boundaries(g: &Colex) -> Option<String> {
    for (i, f) in g.faces().iter().enumerate() {
        let b = &f.boundary;
        if b.len() < 4 || b.len() % 2 != 0 {
            return Some(format!("face {i} has boundary length {}", b.len()));
        }
        let mut colors = Vec::with_capacity(b.len());
        for k in 0..b.len() {
            let (u, v) = (b[k], b[(k + 1) % b.len()]);
            let Some(e) = g.edge_between(u, v) else {
                return Some(format!("face {i}: vertices {u} and {v} are not adjacent"));
            };
            let c = g.edge(e).color;
            if c == f.color {
                return Some(format!("face {i} has boundary edge {e} of its own color"));
            }
            colors.push(c);
        }
        if (0..colors.len()).any(|k| colors[k] == colors[(k + 1) % colors.len()]) {
            return Some(format!("face {i}: boundary edge colors do not alternate"));
        }
    }
    None
}

fn check_face_coloring(g: &Colex) -> Option<String> {
    for v in 0..g.num_vertices() {
        for c in Color::ALL {
            let count = g.incident_faces(v).iter().filter(|&&f| g.face(f).color == c).count();
            if count != 1 {
                return Some(format!("vertex {v} lies on {count} faces of color {c}"));
            }
        }
    }
    // Each edge borders two faces whose colors differ from each other and from the edge.
    let mut sides: Vec<Vec<usize>> = vec![Vec::new(); g.edges().len()];
    for (i, f) in g.faces().iter().enumerate() {
        let b = &f.boundary;
        for k in 0..b.len() {
            if let Some(e) = g.edge_between(b[k], b[(k + 1) % b.len()]) {
                sides[e].push(i);
            }
        }
    }
    for (e, fs) in sides.iter().enumerate() {
        if fs.len() != 2 {
            return Some(format!("edge {e} borders {} face sides", fs.len()));
        }
        let (a, b) = (g.face(fs[0]).color, g.face(fs[1]).color);
        if a == b {
            return Some(format!("adjacent faces {} and {} share color {a}", fs[0], fs[1]));
        }
        if Color::third(a, b) != Some(g.edge(e).color) {
            return Some(format!("edge {e} color does not complement its faces"));
        }
    }
    None
}

fn check_embedding(g: &Colex) -> Option<String> {
    let Some(traced) = g.trace_faces() else {
        return Some("rotation system does not trace closed faces".into());
    };
    if traced.len() != g.faces().len() {
        return Some(format!("rotation system traces {} faces, {} stored", traced.len(), g.faces().len()));
    }
    let mut used = vec![false; traced.len()];
    for (i, f) in g.faces().iter().enumerate() {
        match (0..traced.len()).find(|&t| !used[t] && same_cycle(&traced[t], &f.boundary)) {
            Some(t) => used[t] = true,
            None => return Some(format!("face {i} is not a counter-clockwise face of the rotation system")),
        }
    }
    None
}

/// `true` if `a` and `b` are the same cyclic sequence (same direction).
pub(crate) fn same_cycle<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|k| a[k] == b[(s + k) % b.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::{build_hexagonal_torus, Edge};

    fn rebuilt(g: &Colex, edges: Vec<Edge>) -> Colex {
        Colex::from_parts(g.genus(), g.num_vertices(), edges, g.faces().to_vec(), g.rotation().to_vec())
    }

    #[test]
    fn generated_hexagonal_lattice_passes() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let r = validate_colex(&g);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn recolored_edge_breaks_vertex_coloring() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut edges = g.edges().to_vec();
        let at0 = g.incident_edges(0).to_vec();
        edges[at0[0]].color = edges[at0[1]].color;
        let r = validate_colex(&rebuilt(&g, edges));
        let check = r.get("vertex-edge-colors").unwrap();
        assert!(!check.passed);
        assert!(check.detail.as_ref().unwrap().contains("vertex 0"), "{r}");
    }

    #[test]
    fn doubled_edge_is_reported() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut edges = g.edges().to_vec();
        edges.push(edges[4]);
        let r = validate_colex(&rebuilt(&g, edges));
        assert!(!r.passed("parallel-edges"));
        assert!(r.get("parallel-edges").unwrap().detail.as_ref().unwrap().contains("duplicates"));
    }

    #[test]
    fn wrong_genus_fails_euler_only() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let h = Colex::from_parts(
            2,
            g.num_vertices(),
            g.edges().to_vec(),
            g.faces().to_vec(),
            g.rotation().to_vec(),
        );
        let r = validate_colex(&h);
        assert!(!r.passed("euler"));
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn reversed_rotation_breaks_embedding() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut rot = g.rotation().to_vec();
        rot[5].swap(0, 1);
        let h = Colex::from_parts(1, g.num_vertices(), g.edges().to_vec(), g.faces().to_vec(), rot);
        let r = validate_colex(&h);
        assert!(!r.passed("embedding"));
        assert!(r.passed("rotation"));
    }

    #[test]
    fn out_of_range_indices_short_circuit() {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let mut edges = g.edges().to_vec();
        edges[0].ends[1] = 999;
        let r = validate_colex(&rebuilt(&g, edges));
        assert!(!r.passed("indices"));
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn cycle_equality_ignores_start_only() {
        assert!(same_cycle(&[1, 2, 3], &[3, 1, 2]));
        assert!(!same_cycle(&[1, 2, 3], &[3, 2, 1]));
    }
}
