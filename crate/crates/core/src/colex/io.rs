//! JSON lattice files.
//!
//! ```text
//! { "genus": 1, "vertices": n,
//!   "edges": [[u, v, "r|g|b"], ...],
//!   "faces": [{"color": "r|g|b", "boundary": [v, ...]}, ...],
//!   "rotation": [[e, e, e], ...] }
//! ```
//!
//! Optional `family`, `rows` and `cols` keys record the generator that made
//! the lattice. Indices are dense and preserved exactly.

use std::fmt::Write as _;

use serde_json::Value;

use super::{validate_colex, Colex, Color, Edge, Face, LatticeMeta};
use crate::error::{Error, Result};

pub fn save_colex(g: &Colex) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    let _ = writeln!(s, "  \"genus\": {},", g.genus());
    let _ = writeln!(s, "  \"vertices\": {},", g.num_vertices());
    if let Some(m) = g.meta() {
        let _ = writeln!(s, "  \"family\": {},", Value::String(m.family.clone()));
        let _ = writeln!(s, "  \"rows\": {},", m.rows);
        let _ = writeln!(s, "  \"cols\": {},", m.cols);
    }
    let edges: Vec<String> =
        g.edges().iter().map(|e| format!("[{}, {}, \"{}\"]", e.ends[0], e.ends[1], e.color)).collect();
    write_list(&mut s, "edges", &edges, true);
    let faces: Vec<String> = g
        .faces()
        .iter()
        .map(|f| {
            let b: Vec<String> = f.boundary.iter().map(usize::to_string).collect();
            format!("{{\"color\": \"{}\", \"boundary\": [{}]}}", f.color, b.join(", "))
        })
        .collect();
    write_list(&mut s, "faces", &faces, true);
    let rotation: Vec<String> =
        g.rotation().iter().map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2])).collect();
    write_list(&mut s, "rotation", &rotation, false);
    s.push_str("}\n");
    s
}

fn write_list(s: &mut String, key: &str, items: &[String], trailing_comma: bool) {
    let _ = write!(s, "  \"{key}\": [");
    if items.is_empty() {
        s.push(']');
    } else {
        s.push('\n');
        for (i, it) in items.iter().enumerate() {
            let sep = if i + 1 < items.len() { "," } else { "" };
            let _ = writeln!(s, "    {it}{sep}");
        }
        s.push_str("  ]");
    }
    s.push_str(if trailing_comma { ",\n" } else { "\n" });
}

/// Parses a lattice document without validating it.
pub fn parse_colex(text: &str) -> Result<Colex> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    parse_doc(&doc)
}

/// Parses and validates a lattice document.
pub fn load_colex(text: &str) -> Result<Colex> {
    let g = parse_colex(text)?;
    let report = validate_colex(&g);
    if !report.all_passed() {
        let failed: Vec<String> = report
            .failures()
            .map(|c| format!("{} ({})", c.name, c.detail.as_deref().unwrap_or("")))
            .collect();
        return Err(Error::InvalidColex(failed.join("; ")));
    }
    Ok(g)
}

fn parse_doc(doc: &Value) -> Result<Colex> {
    let obj = doc.as_object().ok_or_else(|| Error::parse("$", "document is not an object"))?;
    let field = |key: &str| obj.get(key).ok_or_else(|| Error::parse(key, "missing field"));
    let genus = as_usize(field("genus")?, "genus")? as u32;
    let n = as_usize(field("vertices")?, "vertices")?;

    let edges = as_array(field("edges")?, "edges")?
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let path = format!("edges[{i}]");
            let parts = as_array(e, &path)?;
            if parts.len() != 3 {
                return Err(Error::parse(&path, "expected [u, v, color]"));
            }
            Ok(Edge {
                ends: [
                    as_usize(&parts[0], &format!("{path}[0]"))?,
                    as_usize(&parts[1], &format!("{path}[1]"))?,
                ],
                color: as_color(&parts[2], &format!("{path}[2]"))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let faces = as_array(field("faces")?, "faces")?
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let path = format!("faces[{i}]");
            let fo = f.as_object().ok_or_else(|| Error::parse(&path, "expected an object"))?;
            let color = fo
                .get("color")
                .ok_or_else(|| Error::parse(format!("{path}.color"), format!("face {i} has no color")))?;
            let boundary = fo.get("boundary").ok_or_else(|| {
                Error::parse(format!("{path}.boundary"), format!("face {i} has no boundary"))
            })?;
            let bpath = format!("{path}.boundary");
            Ok(Face {
                color: as_color(color, &format!("{path}.color"))?,
                boundary: as_array(boundary, &bpath)?
                    .iter()
                    .enumerate()
                    .map(|(k, v)| as_usize(v, &format!("{bpath}[{k}]")))
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let rotation = as_array(field("rotation")?, "rotation")?
        .iter()
        .enumerate()
        .map(|(v, r)| {
            let path = format!("rotation[{v}]");
            let parts = as_array(r, &path)?;
            if parts.len() != 3 {
                return Err(Error::parse(
                    &path,
                    format!("vertex {v} lists {} edges, expected 3", parts.len()),
                ));
            }
            let mut out = [0; 3];
            for (k, p) in parts.iter().enumerate() {
                out[k] = as_usize(p, &format!("{path}[{k}]"))?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut g = Colex::from_parts(genus, n, edges, faces, rotation);
    if let Some(family) = obj.get("family") {
        let family = family.as_str().ok_or_else(|| Error::parse("family", "expected a string"))?.to_string();
        let rows = obj.get("rows").map(|v| as_usize(v, "rows")).transpose()?.unwrap_or(0);
        let cols = obj.get("cols").map(|v| as_usize(v, "cols")).transpose()?.unwrap_or(0);
        g = g.with_meta(LatticeMeta { family, rows, cols });
    }
    Ok(g)
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(path, format!("expected a non-negative integer, found {v}")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::parse(path, "expected an array"))
}

fn as_color(v: &Value, path: &str) -> Result<Color> {
    v.as_str()
        .and_then(Color::parse)
        .ok_or_else(|| Error::parse(path, format!("expected \"r\", \"g\" or \"b\", found {v}")))
}
