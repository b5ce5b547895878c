//! Standard periodic lattices on the torus.

use super::{Colex, Color, Face, LatticeMeta};
use crate::error::{Error, Result};

/// Honeycomb (6.6.6) color code on a `rows × cols` torus of hexagons.
///
/// Hexagon centers sit on a triangular lattice with axial coordinates `(i, j)`
/// and neighbor steps `(1,0)`, `(0,1)`, `(1,1)`; hexagon `(i, j)` gets color
/// `(i + j) mod 3`. Every unit cell holds two vertices (an "up" and a "down"
/// triangle of the triangular lattice), so the lattice has `2·rows·cols`
/// vertices. The coloring is periodic only when both dimensions are multiples
/// of three.
pub fn build_hexagonal_torus(rows: usize, cols: usize) -> Result<Colex> {
    for (name, value) in [("rows", rows), ("cols", cols)] {
        if value < 3 {
            return Err(Error::DimensionTooSmall { name, value, min: 3 });
        }
        if value % 3 != 0 {
            return Err(Error::DimensionNotColorable {
                name,
                value,
                rule: "hexagonal torus dimensions must be multiples of 3",
            });
        }
    }
    let wrap = |i: isize, j: isize| -> (usize, usize) {
        (i.rem_euclid(rows as isize) as usize, j.rem_euclid(cols as isize) as usize)
    };
    let up = |i: isize, j: isize| {
        let (i, j) = wrap(i, j);
        2 * (i * cols + j)
    };
    let down = |i: isize, j: isize| up(i, j) + 1;

    let mut faces = Vec::with_capacity(rows * cols);
    for i in 0..rows as isize {
        for j in 0..cols as isize {
            let boundary = vec![
                up(i, j),
                down(i, j),
                up(i - 1, j),
                down(i - 1, j - 1),
                up(i - 1, j - 1),
                down(i, j - 1),
            ];
            faces.push(Face { color: Color::from_index((i + j) as usize % 3), boundary });
        }
    }
    Ok(Colex::from_faces(1, 2 * rows * cols, faces)?.with_meta(LatticeMeta {
        family: "hex".into(),
        rows,
        cols,
    }))
}

/// Square-octagon (4.8.8) color code on a `d × d` torus.
pub fn build_square_octagon_torus(d: usize) -> Result<Colex> {
    build_square_octagon_rect(d, d)
}

/// Square-octagon (4.8.8) color code on a `rows × cols` torus.
///
/// Obtained by truncating every vertex of a periodic square grid: each grid
/// point becomes a red square and each grid cell an octagon, colored green or
/// blue in a checkerboard pattern (which needs both dimensions even).
pub fn build_square_octagon_rect(rows: usize, cols: usize) -> Result<Colex> {
    for (name, value) in [("rows", rows), ("cols", cols)] {
        if value < 2 {
            return Err(Error::DimensionTooSmall { name, value, min: 2 });
        }
        if value % 2 != 0 {
            return Err(Error::DimensionNotColorable {
                name,
                value,
                rule: "square-octagon torus dimensions must be even",
            });
        }
    }
    const EAST: usize = 0;
    const NORTH: usize = 1;
    const WEST: usize = 2;
    const SOUTH: usize = 3;
    let vid = |i: usize, j: usize, dir: usize| 4 * ((i % rows) * cols + (j % cols)) + dir;

    let mut faces = Vec::with_capacity(2 * rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            faces.push(Face {
                color: Color::Red,
                boundary: vec![vid(i, j, EAST), vid(i, j, NORTH), vid(i, j, WEST), vid(i, j, SOUTH)],
            });
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            let color = if (i + j) % 2 == 0 { Color::Green } else { Color::Blue };
            faces.push(Face {
                color,
                boundary: vec![
                    vid(i, j, EAST),
                    vid(i + 1, j, WEST),
                    vid(i + 1, j, NORTH),
                    vid(i + 1, j + 1, SOUTH),
                    vid(i + 1, j + 1, WEST),
                    vid(i, j + 1, EAST),
                    vid(i, j + 1, SOUTH),
                    vid(i, j, NORTH),
                ],
            });
        }
    }
    Ok(Colex::from_faces(1, 4 * rows * cols, faces)?.with_meta(LatticeMeta {
        family: "sqoct".into(),
        rows,
        cols,
    }))
}
