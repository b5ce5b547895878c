//! Binary map file.
//!
//! All integers are little-endian.
//!
//! ```text
//! magic        8 bytes  "CC2SMAP1"
//! version      u32
//! color        u8       0 = r, 1 = g, 2 = b
//! qubits       u32      color-code qubits n
//! split        u32      edges per surface copy
//! fingerprint  u64      lattice fingerprint
//! lattice      u32 length + UTF-8 lattice JSON
//! faces        u32 count, then per face: face u32, base u32, m u32, x_split u8, z_split u8
//! map          matrix (2n × 2n)
//! basis change matrix (surface generators × color generators)
//! ```
//!
//! A matrix is `rows u32, cols u32`, then each row as `⌈cols/64⌉` u64 words,
//! bit `j` of a row in word `j / 64` at position `j % 64`.

use std::path::Path;

use super::build::CodeMap;
use super::conventions::{FaceConvention, MapConventions, SplitElement};
use super::verify::basis_change;
use crate::colex::{load_colex, save_colex, Colex, Color};
use crate::contraction::contract;
use crate::error::{Error, Result};
use crate::stabilizers::color_space;
use crate::symplectic::{BitVec, Gf2Matrix, SymplecticMap};
use crate::MAP_FORMAT_VERSION;

const MAGIC: &[u8; 8] = b"CC2SMAP1";

/// A built map with its cached syndrome basis change, as stored on disk.
#[derive(Clone, Debug)]
pub struct MapArtifact {
    code_map: CodeMap,
    basis_change: Gf2Matrix,
}

impl MapArtifact {
    pub fn new(code_map: CodeMap) -> Result<Self> {
        let basis_change = basis_change(&code_map)?;
        Ok(Self { code_map, basis_change })
    }

    pub fn code_map(&self) -> &CodeMap {
        &self.code_map
    }

    pub fn basis_change(&self) -> &Gf2Matrix {
        &self.basis_change
    }

    pub fn into_parts(self) -> (CodeMap, Gf2Matrix) {
        (self.code_map, self.basis_change)
    }

    /// Fails with [`Error::MapMismatch`] unless the artifact was built on `g`.
    pub fn check_lattice(&self, g: &Colex) -> Result<()> {
        let (want, have) = (g.fingerprint(), self.code_map.colex().fingerprint());
        if want != have {
            return Err(Error::MapMismatch(format!(
                "map was built for lattice {have:016x}, input lattice is {want:016x}"
            )));
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let cm = &self.code_map;
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        put_u32(&mut out, MAP_FORMAT_VERSION);
        out.push(cm.conventions().color.index() as u8);
        put_u32(&mut out, cm.colex().num_vertices() as u32);
        put_u32(&mut out, cm.map().split() as u32);
        out.extend_from_slice(&cm.colex().fingerprint().to_le_bytes());
        let lattice = save_colex(cm.colex());
        put_u32(&mut out, lattice.len() as u32);
        out.extend_from_slice(lattice.as_bytes());
        let faces = &cm.conventions().faces;
        put_u32(&mut out, faces.len() as u32);
        for f in faces {
            put_u32(&mut out, f.face as u32);
            put_u32(&mut out, f.base as u32);
            put_u32(&mut out, f.m as u32);
            out.push(f.x_split.code());
            out.push(f.z_split.code());
        }
        put_matrix(&mut out, cm.map().matrix());
        put_matrix(&mut out, &self.basis_change);
        out
    }

    /// Parses a map file. The stored matrix is kept as is, even if it is not
    /// what the stored conventions would build; verification decides that.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, pos: 0 };
        if r.take(8)? != MAGIC {
            return Err(Error::MapFormat("bad magic; not a map file".into()));
        }
        let version = r.u32()?;
        if version != MAP_FORMAT_VERSION {
            return Err(Error::MapFormat(format!(
                "format version {version}, this build reads {MAP_FORMAT_VERSION}"
            )));
        }
        let color = match r.u8()? {
            c @ 0..=2 => Color::from_index(usize::from(c)),
            c => return Err(Error::MapFormat(format!("color code {c}"))),
        };
        let n = r.u32()? as usize;
        let split = r.u32()? as usize;
        let fingerprint = r.u64()?;
        let len = r.u32()? as usize;
        let text =
            std::str::from_utf8(r.take(len)?).map_err(|_| Error::MapFormat("lattice is not UTF-8".into()))?;
        let colex = load_colex(text)?;
        if colex.fingerprint() != fingerprint || colex.num_vertices() != n {
            return Err(Error::MapFormat("embedded lattice does not match header".into()));
        }
        let count = r.u32()? as usize;
        let mut faces = Vec::with_capacity(count.min(1 << 20));
        for _ in 0..count {
            let face = r.u32()? as usize;
            let base = r.u32()? as usize;
            let m = r.u32()? as usize;
            let split_of = |code: u8| {
                SplitElement::from_code(code).ok_or_else(|| Error::MapFormat(format!("splitter code {code}")))
            };
            let x_split = split_of(r.u8()?)?;
            let z_split = split_of(r.u8()?)?;
            faces.push(FaceConvention { face, base, m, x_split, z_split });
        }
        let conventions = MapConventions { color, faces };
        let matrix = r.matrix()?;
        let basis_change = r.matrix()?;
        if r.pos != bytes.len() {
            return Err(Error::MapFormat(format!("{} trailing bytes", bytes.len() - r.pos)));
        }

        let surface = contract(&colex, color)?;
        let labelings = conventions.labelings(&colex)?;
        if split != surface.num_edges() {
            return Err(Error::MapFormat(format!(
                "split {split} but the contraction has {} edges",
                surface.num_edges()
            )));
        }
        let map = SymplecticMap::from_raw(matrix, color_space(&colex), surface.pair_space(), split)
            .map_err(|e| Error::MapFormat(e.to_string()))?;
        let code_map = CodeMap::from_parts(colex, surface, conventions, labelings, map);
        Ok(Self { code_map, basis_change })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_bytes())?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_bytes(&std::fs::read(path)?)
    }
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_matrix(out: &mut Vec<u8>, m: &Gf2Matrix) {
    put_u32(out, m.nrows() as u32);
    put_u32(out, m.ncols() as u32);
    for row in m.rows() {
        for w in row.words() {
            out.extend_from_slice(&w.to_le_bytes());
        }
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| Error::MapFormat(format!("truncated at byte {}", self.pos)))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn matrix(&mut self) -> Result<Gf2Matrix> {
        let rows = self.u32()? as usize;
        let cols = self.u32()? as usize;
        let words = cols.div_ceil(64);
        let mut out = Vec::with_capacity(rows.min(1 << 20));
        for _ in 0..rows {
            let ws = (0..words).map(|_| self.u64()).collect::<Result<Vec<_>>>()?;
            if !cols.is_multiple_of(64) && ws.last().is_some_and(|w| w >> (cols % 64) != 0) {
                return Err(Error::MapFormat("padding bits set in matrix row".into()));
            }
            out.push(BitVec::from_words(cols, ws));
        }
        Gf2Matrix::from_rows(cols, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codemap::build_map;
    use crate::colex::build_hexagonal_torus;

    fn artifact() -> MapArtifact {
        let g = build_hexagonal_torus(3, 3).unwrap();
        let conv = MapConventions::standard(&g, Color::Blue).unwrap();
        MapArtifact::new(build_map(&g, &conv).unwrap()).unwrap()
    }

    #[test]
    fn bytes_round_trip() {
        let a = artifact();
        let bytes = a.to_bytes();
        let b = MapArtifact::from_bytes(&bytes).unwrap();
        assert_eq!(b.code_map().map(), a.code_map().map());
        assert_eq!(b.basis_change(), a.basis_change());
        assert_eq!(b.code_map().conventions(), a.code_map().conventions());
        assert_eq!(b.to_bytes(), bytes);
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let bytes = artifact().to_bytes();
        assert!(matches!(MapArtifact::from_bytes(&bytes[..20]), Err(Error::MapFormat(_))));
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(matches!(MapArtifact::from_bytes(&bad), Err(Error::MapFormat(_))));
        let mut bad = bytes.clone();
        bad[8] = 9;
        assert!(matches!(MapArtifact::from_bytes(&bad), Err(Error::MapFormat(_))));
        let mut long = bytes;
        long.push(0);
        assert!(matches!(MapArtifact::from_bytes(&long), Err(Error::MapFormat(_))));
    }

    #[test]
    fn lattice_mismatch_is_detected() {
        let a = artifact();
        let other = build_hexagonal_torus(3, 6).unwrap();
        assert!(matches!(a.check_lattice(&other), Err(Error::MapMismatch(_))));
        assert!(a.check_lattice(a.code_map().colex()).is_ok());
    }
}
