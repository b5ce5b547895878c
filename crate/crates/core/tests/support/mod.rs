//! Independent GF(2) and Pauli helpers for the integration tests.
//!
//! Deliberately naive: plain `Vec<bool>` rows and letter-by-letter
//! commutation, so they share no code with the library's bit-packed routines.

#![allow(dead_code)]

use color2surface::{build_hexagonal_torus, build_square_octagon_torus, Colex, Pauli, PauliOp};

pub type Row = Vec<bool>;

/// `(x | z)` as booleans, read one qubit at a time.
pub fn row_of(p: &PauliOp) -> Row {
    let n = p.num_qubits();
    let mut r = vec![false; 2 * n];
    for q in 0..n {
        let (x, z) = match p.get(q) {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        };
        r[q] = x;
        r[n + q] = z;
    }
    r
}

/// Two Paulis anticommute iff they differ on an odd number of sites where both act.
pub fn anticommute(a: &PauliOp, b: &PauliOp) -> bool {
    assert_eq!(a.num_qubits(), b.num_qubits());
    let mut odd = false;
    for q in 0..a.num_qubits() {
        let (pa, pb) = (a.get(q), b.get(q));
        if pa != Pauli::I && pb != Pauli::I && pa != pb {
            odd = !odd;
        }
    }
    odd
}

pub fn rank(mut rows: Vec<Row>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col]) else {
            continue;
        };
        rows.swap(r, pivot);
        let p = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] {
                for (a, b) in row.iter_mut().zip(&p) {
                    *a ^= *b;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn in_span(rows: &[Row], v: &Row) -> bool {
    let base = rank(rows.to_vec());
    let mut with = rows.to_vec();
    with.push(v.clone());
    rank(with) == base
}

/// The lattices every structural criterion runs on.
pub fn test_lattices() -> Vec<(String, Colex)> {
    let mut out = Vec::new();
    for (r, c) in [(3, 3), (6, 6), (6, 3)] {
        out.push((format!("hex({r},{c})"), build_hexagonal_torus(r, c).unwrap()));
    }
    for d in [2, 4] {
        out.push((format!("sqoct({d})"), build_square_octagon_torus(d).unwrap()));
    }
    out
}
