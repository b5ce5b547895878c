//! Single-qubit images, read off the matrix and recomputed from the recursions.

use serde::Serialize;

use super::build::{CodeMap, PairBuilder};
use super::conventions::{FaceLabeling, SplitElement};
use crate::report::ValidationReport;
use crate::stabilizers::{color_space, surface_pair_code};
use crate::symplectic::{Pauli, PauliOp};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingleQubitImage {
    pub vertex: usize,
    pub pauli: Pauli,
    /// Image on both copies as one string: copy 1 qubits, then copy 2.
    #[serde(serialize_with = "as_string")]
    pub image: PauliOp,
}

fn as_string<S: serde::Serializer>(p: &PauliOp, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Images of `X_v` and `Z_v` for every vertex, ordered by vertex then X before Z.
pub fn single_qubit_images(cm: &CodeMap) -> Vec<SingleQubitImage> {
    let space = color_space(cm.colex());
    (0..cm.colex().num_vertices())
        .flat_map(|v| [Pauli::X, Pauli::Z].map(|p| (v, p)))
        .map(|(vertex, pauli)| SingleQubitImage {
            vertex,
            pauli,
            image: cm
                .apply(&PauliOp::single(space, vertex, pauli))
                .expect("operator built on the map's domain"),
        })
        .collect()
}

/// Images given by the per-face recursions, in the order of [`single_qubit_images`].
///
/// The recursions assume identity splitters; faces with other splitters
/// agree with the matrix only up to stabilizers.
pub fn closed_form_images(cm: &CodeMap) -> Vec<SingleQubitImage> {
    let n = cm.colex().num_vertices();
    let mut x_img: Vec<Option<PauliOp>> = vec![None; n];
    let mut z_img: Vec<Option<PauliOp>> = vec![None; n];
    for lab in cm.labelings() {
        let (xs, zs) = face_recursions(cm, lab);
        for (j, (x, z)) in xs.into_iter().zip(zs).enumerate() {
            x_img[lab.v(j + 1)] = Some(x);
            z_img[lab.v(j + 1)] = Some(z);
        }
    }
    (0..n)
        .flat_map(|v| {
            [(Pauli::X, x_img[v].take()), (Pauli::Z, z_img[v].take())].map(|(pauli, img)| SingleQubitImage {
                vertex: v,
                pauli,
                image: img.expect("c″ faces cover every vertex"),
            })
        })
        .collect()
}

/// `(π(X_{v_j}), π(Z_{v_j}))` for `j = 1..=2ℓ`, as 0-based vectors.
fn face_recursions(cm: &CodeMap, lab: &FaceLabeling) -> (Vec<PauliOp>, Vec<PauliOp>) {
    let sg = cm.surface();
    let l = lab.half_length();
    let m = lab.m;
    let tau = |j: usize| sg.tau_vertex(lab.v(j));
    let pair = || PairBuilder::new(sg);
    let mut z: Vec<Option<PauliOp>> = vec![None; 2 * l + 1];
    let mut x: Vec<Option<PauliOp>> = vec![None; 2 * l + 1];
    let get = |v: &Vec<Option<PauliOp>>, j: usize| v[j].clone().expect("computed earlier");

    let mut first = pair().x(2, tau(1));
    for i in 1..=m {
        first = first.z(1, tau(2 * i));
    }
    z[1] = Some(first.build());
    for j in 1..=l {
        if j >= 2 {
            let prev = get(&z, 2 * j - 2);
            z[2 * j - 1] = Some(pair().times(&prev).x(2, tau(2 * j - 2)).x(2, tau(2 * j - 1)).build());
        }
        let prev = get(&z, 2 * j - 1);
        z[2 * j] = Some(pair().times(&prev).z(1, tau(2 * j)).build());
    }

    x[1] = Some(pair().x(1, tau(1)).build());
    for j in 1..=m {
        if j >= 2 {
            let prev = get(&x, 2 * j - 2);
            x[2 * j - 1] = Some(pair().times(&prev).x(1, tau(2 * j - 2)).x(1, tau(2 * j - 1)).build());
        }
        let prev = get(&x, 2 * j - 1);
        x[2 * j] = Some(pair().times(&prev).z(2, tau(2 * j)).build());
    }
    if m < l {
        x[2 * l] = Some(pair().x(1, tau(2 * l)).build());
        for j in (m + 1..=l).rev() {
            if j < l {
                let next = get(&x, 2 * j + 1);
                x[2 * j] = Some(pair().times(&next).x(1, tau(2 * j)).x(1, tau(2 * j + 1)).build());
            }
            let next = get(&x, 2 * j);
            x[2 * j - 1] = Some(pair().times(&next).z(2, tau(2 * j)).build());
        }
    }
    let unwrap = |v: Vec<Option<PauliOp>>| v.into_iter().skip(1).map(Option::unwrap).collect();
    (unwrap(x), unwrap(z))
}

/// Compares matrix images with the recursions.
///
/// `up-to-stabilizers` must hold for every convention. `exact` is checked on
/// faces with identity splitters and lists every differing image.
pub fn verify_closed_forms(cm: &CodeMap) -> ValidationReport {
    let mut report = ValidationReport::new();
    let actual = single_qubit_images(cm);
    let expected = closed_form_images(cm);
    let code = match surface_pair_code(cm.surface()) {
        Ok(c) => c,
        Err(e) => {
            report.fail("up-to-stabilizers", e.to_string());
            return report;
        }
    };
    let plain: Vec<bool> = {
        let mut by_vertex = vec![false; cm.colex().num_vertices()];
        for lab in cm.labelings() {
            let plain = lab.x_split == SplitElement::I && lab.z_split == SplitElement::I;
            for &v in &lab.vertices {
                by_vertex[v] = plain;
            }
        }
        by_vertex
    };

    let mut off_group = Vec::new();
    let mut inexact = Vec::new();
    let mut compared = 0;
    for (a, e) in actual.iter().zip(&expected) {
        let quotient = a.image.mul(&e.image).expect("same pair space");
        if !code.contains(&quotient).expect("same pair space") {
            off_group.push(format!("{}{}", a.pauli.letter(), a.vertex));
        }
        if plain[a.vertex] {
            compared += 1;
            if a.image != e.image {
                inexact.push(format!("{}{}", a.pauli.letter(), a.vertex));
            }
        }
    }
    let total = actual.len();
    if off_group.is_empty() {
        report.pass_with("up-to-stabilizers", format!("{total} images"));
    } else {
        report.fail(
            "up-to-stabilizers",
            format!("{} of {total} differ by a non-stabilizer: {}", off_group.len(), off_group.join(" ")),
        );
    }
    if inexact.is_empty() {
        report.pass_with("exact", format!("{compared} of {total} images compared"));
    } else {
        report.fail("exact", format!("{} of {compared} differ: {}", inexact.len(), inexact.join(" ")));
    }
    report
}
