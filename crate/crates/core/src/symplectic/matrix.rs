use std::fmt;

use super::bits::BitVec;
use crate::error::{Error, Result};

/// Dense GF(2) matrix stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("row {i} has length {}, expected {cols}", r.len())));
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows of `0`/`1` characters, one row per line.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bits = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::parse(
                        format!("line {}", ln + 1),
                        format!("unexpected character {other:?}"),
                    )),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(BitVec::from_bools(bits));
        }
        let cols = rows.first().map_or(0, BitVec::len);
        Self::from_rows(cols, rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row_mut(&mut self, i: usize) -> &mut BitVec {
        &mut self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.cols,
                rhs.nrows(),
                rhs.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(rhs.cols);
                for k in row.iter_ones() {
                    acc.xor_with(&rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix { cols: rhs.cols, rows })
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.nrows(),
                self.cols,
                v.len()
            )));
        }
        Ok(BitVec::from_bools(self.rows.iter().map(|r| r.dot(v))))
    }

    pub fn add(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.cols || self.nrows() != rhs.nrows() {
            return Err(Error::DimensionMismatch("matrix sum of unequal shapes".into()));
        }
        let rows = self.rows.iter().zip(&rhs.rows).map(|(a, b)| a ^ b).collect();
        Ok(Gf2Matrix { cols: self.cols, rows })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        reduce_rows(&mut rows, self.cols).len()
    }

    pub fn invert(&self) -> Result<Gf2Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.nrows(),
                self.cols
            )));
        }
        let n = self.cols;
        let mut aug: Vec<BitVec> =
            self.rows.iter().enumerate().map(|(i, r)| r.concat(&BitVec::from_indices(n, [i]))).collect();
        let pivots = reduce_rows(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        // Fully reduced with pivots on the diagonal in order.
        let rows = aug.iter().map(|r| r.slice(n, n)).collect();
        Ok(Gf2Matrix { cols: n, rows })
    }

    /// Some `x` with `self · x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &BitVec) -> Result<Option<BitVec>> {
        if rhs.len() != self.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.nrows()
            )));
        }
        let c = self.cols;
        let mut aug: Vec<BitVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut a = BitVec::zeros(c + 1);
                for j in r.iter_ones() {
                    a.set(j, true);
                }
                a.set(c, rhs.get(i));
                a
            })
            .collect();
        let pivots = reduce_rows(&mut aug, c + 1);
        if pivots.last() == Some(&c) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(c);
        for (row, &p) in aug.iter().zip(&pivots) {
            if row.get(c) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let mut rows = self.rows.clone();
        let pivots = reduce_rows(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.nrows(), self.cols)?;
        f.write_str(&self.to_text())
    }
}

/// Reduced row echelon form over the first `width` columns, in place.
///
/// Returns the pivot column of each of the leading rows; rows past the rank are zero.
fn reduce_rows(rows: &mut [BitVec], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_with(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

/// Row space of a fixed list of generators, kept fully reduced.
///
/// Tracks, for every basis row, which input generators sum to it, so that
/// membership queries can also return a combination.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    generators: usize,
    basis: Vec<(usize, BitVec, BitVec)>,
}

impl RowSpace {
    pub fn new(width: usize, generators: &[BitVec]) -> Self {
        let mut space = Self { width, generators: generators.len(), basis: Vec::new() };
        for (i, g) in generators.iter().enumerate() {
            assert_eq!(g.len(), width, "generator {i} has wrong width");
            let (v, mut coeff) = space.reduce(g);
            coeff.flip(i);
            if let Some(p) = v.first_one() {
                for (_, row, rc) in space.basis.iter_mut() {
                    if row.get(p) {
                        row.xor_with(&v);
                        rc.xor_with(&coeff);
                    }
                }
                space.basis.push((p, v, coeff));
            }
        }
        space
    }

    fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut coeff = BitVec::zeros(self.generators);
        for (p, row, rc) in &self.basis {
            if v.get(*p) {
                v.xor_with(row);
                coeff.xor_with(rc);
            }
        }
        (v, coeff)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients `c` over the generators with `Σ c_i g_i = v`, if `v` is in the span.
    pub fn express(&self, v: &BitVec) -> Option<BitVec> {
        let (rest, coeff) = self.reduce(v);
        rest.is_zero().then_some(coeff)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.basis.iter().all(|(_, row, _)| self.contains(row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Gf2Matrix {
        Gf2Matrix::from_text(text).unwrap()
    }

    #[test]
    fn identity_has_full_rank_and_self_inverse() {
        let id = Gf2Matrix::identity(4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn repeated_rows_lose_rank() {
        let a = m("1010\n0110\n1010\n0001");
        assert_eq!(a.rank(), 3);
        assert!(matches!(a.invert(), Err(Error::Singular)));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = m("11\n11");
        assert_eq!(a.solve(&BitVec::from_indices(2, [0])).unwrap(), None);
        let x = a.solve(&BitVec::from_indices(2, [0, 1])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), BitVec::from_indices(2, [0, 1]));
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = m("1101\n0111");
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(a.mul_vec(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn row_space_expresses_members() {
        let gens = vec![
            BitVec::from_indices(5, [0, 1]),
            BitVec::from_indices(5, [1, 2]),
            BitVec::from_indices(5, [0, 2]),
            BitVec::from_indices(5, [4]),
        ];
        let rs = RowSpace::new(5, &gens);
        assert_eq!(rs.rank(), 3);
        let target = BitVec::from_indices(5, [0, 4, 2]);
        let c = rs.express(&target).unwrap();
        let mut sum = BitVec::zeros(5);
        for i in c.iter_ones() {
            sum ^= &gens[i];
        }
        assert_eq!(sum, target);
        assert!(!rs.contains(&BitVec::from_indices(5, [3])));
    }

    #[test]
    fn text_dump_round_trips() {
        let a = m("101\n011");
        assert_eq!(Gf2Matrix::from_text(&a.to_text()).unwrap(), a);
    }
}
