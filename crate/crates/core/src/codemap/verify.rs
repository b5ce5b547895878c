//! Structural checks on a built map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::build::{build_map, face_basis, CodeMap, PairBuilder};
use super::conventions::MapConventions;
use super::images::verify_closed_forms;
use crate::colex::Colex;
use crate::report::ValidationReport;
use crate::stabilizers::{color_code, surface_code, surface_pair_code, Provenance};
use crate::symplectic::{symplectic_dot, BitVec, Gf2Matrix, Pauli, PauliOp, RowSpace};

const RANDOM_PAIRS: usize = 1000;
const RANDOM_SEED: u64 = 0x5eed;

/// Vertex, edge, and face counts of the contracted graph against the colex.
pub fn verify_counts(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let g = cm.colex();
    let sg = cm.surface();
    let c = cm.conventions().color;
    let check = |name: &str, found: usize, expected: usize, r: &mut ValidationReport| {
        r.record(name, (found != expected).then(|| format!("found {found}, expected {expected}")));
    };
    check("vertices", sg.num_vertices(), g.count_faces(c), &mut report);
    check("edges", sg.num_edges(), g.num_vertices() / 2, &mut report);
    check("faces", sg.num_faces(), g.count_faces(c.next()) + g.count_faces(c.prev()), &mut report);
    report
}

/// Prescribed images of independent hoppers and splitters, plus image separation.
pub fn verify_basis_images(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let space = cm.map().domain();
    let mut wrong = Vec::new();
    for lab in cm.labelings() {
        let basis = face_basis(cm.surface(), lab);
        let w = lab.vertices.len();
        for ((local, image), name) in basis.local.iter().zip(&basis.images).zip(&basis.names) {
            let mut op = PauliOp::identity(space);
            for k in local.iter_ones() {
                let (q, p) = (lab.vertices[k % w], if k < w { Pauli::X } else { Pauli::Z });
                op.mul_assign(&PauliOp::single(space, q, p));
            }
            if cm.apply(&op).ok().as_ref() != Some(image) {
                wrong.push(format!("face {} {name}", lab.face));
            }
        }
    }
    report.record(
        "prescribed-images",
        (!wrong.is_empty()).then(|| format!("{} wrong: {}", wrong.len(), wrong.join(", "))),
    );

    // ε_c hoppers land on copy 1 as Z, μ_c hoppers on copy 2 as Z.
    let g = cm.colex();
    let sg = cm.surface();
    let c = cm.conventions().color;
    let mut bad = None;
    for e in g.edges_of_color(c) {
        let [u, v] = g.edge(e).ends;
        let q = sg.edge_of_edge(e).expect("c-edge");
        let zz = cm.apply(&PauliOp::z_on(space, [u, v])).expect("domain op");
        let xx = cm.apply(&PauliOp::x_on(space, [u, v])).expect("domain op");
        if zz != PairBuilder::new(sg).z(1, q).build() || xx != PairBuilder::new(sg).z(2, q).build() {
            bad.get_or_insert(format!("edge {e}"));
        }
    }
    report.record("image-separation", bad);
    report
}

/// Elementary hoppers of each `c″` face span a space of rank `4ℓ − 2`, and the
/// two dependent hoppers have their predicted images.
pub fn verify_hoppers(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let space = cm.map().domain();
    let sg = cm.surface();
    let mut rank_fail = None;
    let mut dep_fail = None;
    let mut nontrivial_fail = None;
    for lab in cm.labelings() {
        let l = lab.half_length();
        let tau = |j: usize| sg.tau_vertex(lab.v(j));
        let mut images = Vec::new();
        for j in 1..=2 * l {
            let (a, b) = (lab.v(j), lab.v(j + 1));
            for op in [PauliOp::z_on(space, [a, b]), PauliOp::x_on(space, [a, b])] {
                images.push(cm.apply(&op).expect("domain op").to_symplectic());
            }
        }
        let rank = RowSpace::new(2 * space.qubits, &images).rank();
        if rank != 4 * l - 2 {
            rank_fail.get_or_insert(format!("face {}: rank {rank}, expected {}", lab.face, 4 * l - 2));
        }

        let mut electric = PairBuilder::new(sg).x(2, tau(1)).x(2, tau(2 * l));
        let mut magnetic = PairBuilder::new(sg).x(1, tau(2 * lab.m)).x(1, tau(2 * lab.m + 1));
        for i in 1..=l {
            electric = electric.z(1, tau(2 * i));
            magnetic = magnetic.z(2, tau(2 * i));
        }
        let zz = cm.apply(&PauliOp::z_on(space, [lab.v(1), lab.v(2 * l)])).expect("domain op");
        let xx =
            cm.apply(&PauliOp::x_on(space, [lab.v(2 * lab.m), lab.v(2 * lab.m + 1)])).expect("domain op");
        if zz != electric.build() || xx != magnetic.build() {
            dep_fail.get_or_insert(format!("face {}", lab.face));
        }

        for op in [
            PauliOp::x_on(space, lab.vertices.iter().copied()),
            PauliOp::z_on(space, lab.vertices.iter().copied()),
        ] {
            if cm.apply(&op).expect("domain op").is_identity() {
                nontrivial_fail.get_or_insert(format!("face {}", lab.face));
            }
        }
    }
    report.record("hopper-rank", rank_fail);
    report.record("dependent-hoppers", dep_fail);
    report.record("face-stabilizer-images-nontrivial", nontrivial_fail);
    report
}

/// Commutation is preserved: matrix identity, all single-qubit pairs, and random pairs.
pub fn verify_lemma5(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let map = cm.map();
    report.record("symplectic-form", (!map.is_symplectic()).then(|| "M Λ Mᵀ ≠ Λ".to_string()));

    let space = map.domain();
    let n = space.qubits;
    let units: Vec<PauliOp> = (0..n)
        .map(|q| PauliOp::single(space, q, Pauli::X))
        .chain((0..n).map(|q| PauliOp::single(space, q, Pauli::Z)))
        .collect();
    let images: Vec<BitVec> =
        units.iter().map(|u| map.apply(u).expect("domain op").to_symplectic()).collect();
    let mut first_bad = None;
    'outer: for a in 0..2 * n {
        for b in 0..2 * n {
            let before = a % n == b % n && a != b;
            if symplectic_dot(&images[a], &images[b]) != before {
                first_bad = Some(format!("units {a} and {b}"));
                break 'outer;
            }
        }
    }
    report.record("single-qubit-pairs", first_bad);

    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut random = || {
        let mut p = PauliOp::identity(space);
        for q in 0..n {
            p.set(q, [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..4)]);
        }
        p
    };
    let mut bad = None;
    for i in 0..RANDOM_PAIRS {
        let (a, b) = (random(), random());
        let before = symplectic_dot(&a.to_symplectic(), &b.to_symplectic());
        let after = symplectic_dot(
            &map.apply(&a).expect("domain op").to_symplectic(),
            &map.apply(&b).expect("domain op").to_symplectic(),
        );
        if before != after {
            bad.get_or_insert(format!("pair {i}"));
        }
    }
    report.record("random-pairs", bad);
    report
}

/// Color generators land in the surface stabilizer group, with the sharper
/// per-face forms, and the two groups coincide.
pub fn verify_lemma6(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (color, pair) = match (color_code(cm.colex()), surface_pair_code(cm.surface())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report.fail("codes", e.to_string());
            return report;
        }
    };
    let sg = cm.surface();
    let c = cm.conventions().color;
    let images: Vec<PauliOp> = color.generators().iter().map(|g| cm.apply(g).expect("domain op")).collect();

    let mut outside = None;
    for (img, prov) in images.iter().zip(color.provenance()) {
        if !pair.contains(img).expect("pair space") {
            outside.get_or_insert(format!("{prov}"));
        }
    }
    report.record("membership", outside);

    let find = |want: Provenance| -> &PauliOp {
        let i = pair.provenance().iter().position(|p| *p == want).expect("generator exists");
        &pair.generators()[i]
    };
    let plaquettes: Vec<BitVec> = pair
        .generators()
        .iter()
        .zip(pair.provenance())
        .filter(|(_, p)| matches!(p, Provenance::Plaquette { .. }))
        .map(|(g, _)| g.to_symplectic())
        .collect();
    let plaquette_span = RowSpace::new(2 * pair.num_qubits(), &plaquettes);

    let mut exact_fail = None;
    let mut vertex_fail = None;
    for (img, prov) in images.iter().zip(color.provenance()) {
        let Provenance::Face { face, pauli } = *prov else { continue };
        if cm.colex().face(face).color == c {
            let v = sg.vertex_of_face(face).expect("c face");
            let copy = if pauli == Pauli::Z { 2 } else { 1 };
            let rest = img.mul(find(Provenance::Vertex { copy, vertex: v })).expect("pair space");
            if !plaquette_span.contains(&rest.to_symplectic()) {
                vertex_fail.get_or_insert(format!("{prov}"));
            }
        } else {
            let f = sg.face_of_face(face).expect("non-c face");
            let copy = if pauli == Pauli::Z { 1 } else { 2 };
            if img != find(Provenance::Plaquette { copy, face: f }) {
                exact_fail.get_or_insert(format!("{prov}"));
            }
        }
    }
    report.record("plaquette-images-exact", exact_fail);
    report.record("vertex-images", vertex_fail);

    let image_span =
        RowSpace::new(2 * pair.num_qubits(), &images.iter().map(PauliOp::to_symplectic).collect::<Vec<_>>());
    let forward = pair.span().contains_space(&image_span);
    let backward = image_span.contains_space(pair.span());
    report.record(
        "group-equality",
        match (forward, backward) {
            (true, true) => None,
            (false, _) => Some("image not inside the surface group".into()),
            (_, false) => Some("surface group not inside the image".into()),
        },
    );
    report
}

/// `k` of the color code equals the sum over the two surface copies.
pub fn verify_logical_count(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    match (color_code(cm.colex()), surface_code(cm.surface())) {
        (Ok(color), Ok(surface)) => {
            let (k, k1) = (color.logical_qubits(), surface.logical_qubits());
            let detail = format!("{k} = {k1} + {k1}");
            if k == 2 * k1 {
                report.pass_with("k-identity", detail);
            } else {
                report.fail("k-identity", detail);
            }
        }
        (Err(e), _) | (_, Err(e)) => report.fail("k-identity", e.to_string()),
    }
    report
}

/// Rows: surface-pair generators; columns: color generators. Row `j` expresses
/// surface generator `j` as a product of images of color generators.
pub fn basis_change(cm: &CodeMap) -> crate::Result<Gf2Matrix> {
    let color = color_code(cm.colex())?;
    let pair = surface_pair_code(cm.surface())?;
    let images: Vec<BitVec> = color
        .generators()
        .iter()
        .map(|g| cm.apply(g).map(|p| p.to_symplectic()))
        .collect::<crate::Result<_>>()?;
    let span = RowSpace::new(2 * pair.num_qubits(), &images);
    let rows = pair
        .generators()
        .iter()
        .zip(pair.provenance())
        .map(|(s, prov)| {
            span.express(&s.to_symplectic()).ok_or_else(|| {
                crate::Error::Internal(format!("{prov} is not in the image of the color group"))
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Gf2Matrix::from_rows(color.len(), rows)
}

/// Every check on an already built map.
pub fn verify_map(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.extend_prefixed("counts", verify_counts(cm));
    let n = cm.colex().num_vertices();
    let rank = cm.map().rank();
    report.record("invertibility", (rank != 2 * n).then(|| format!("rank {rank}, expected {}", 2 * n)));
    report.extend_prefixed("images", verify_basis_images(cm));
    report.extend_prefixed("hoppers", verify_hoppers(cm));
    report.extend_prefixed("symplectic", verify_lemma5(cm));
    report.extend_prefixed("stabilizers", verify_lemma6(cm));
    report.extend_prefixed("logicals", verify_logical_count(cm));
    let closed = verify_closed_forms(cm);
    if let Some(c) = closed.get("up-to-stabilizers") {
        report
            .checks
            .push(crate::report::Check { name: "closed-forms/up-to-stabilizers".into(), ..c.clone() });
    }
    report
}

/// Builds the map for `conv` and runs every check; a failed build is a failed check.
pub fn verify_theorem1(g: &Colex, conv: &MapConventions) -> ValidationReport {
    match build_map(g, conv) {
        Ok(cm) => {
            let mut report = ValidationReport::new();
            report.pass("build");
            report.checks.extend(verify_map(&cm).checks);
            report
        }
        Err(e) => {
            let mut report = ValidationReport::new();
            report.fail("build", e.to_string());
            report
        }
    }
}
