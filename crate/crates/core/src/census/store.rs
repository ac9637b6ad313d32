//! JSON-lines persistence: one [`PolygonReport`] per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{FanoError, Result};

use super::report::{PolygonReport, SCHEMA};

pub fn write_store(reports: &[PolygonReport], mut out: impl Write) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut out, r).map_err(|e| FanoError::Parse(e.to_string()))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn store_write(reports: &[PolygonReport], path: impl AsRef<Path>) -> Result<()> {
    write_store(reports, BufWriter::new(File::create(path)?))
}

pub fn read_store(input: impl Read) -> Result<Vec<PolygonReport>> {
    let mut reports = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(&line).map_err(|e| FanoError::StoreLine {
            line: line_no,
            detail: e.to_string(),
        })?;
        match value.get("schema").and_then(|s| s.as_str()) {
            Some(SCHEMA) => {}
            other => {
                return Err(FanoError::SchemaMismatch {
                    line: line_no,
                    found: other.unwrap_or("<missing>").to_string(),
                })
            }
        }
        let report: PolygonReport = serde_json::from_value(value).map_err(|e| FanoError::StoreLine {
            line: line_no,
            detail: e.to_string(),
        })?;
        check_consistency(&report, line_no)?;
        reports.push(report);
    }
    Ok(reports)
}

pub fn store_read(path: impl AsRef<Path>) -> Result<Vec<PolygonReport>> {
    read_store(File::open(path)?)
}

fn check_consistency(r: &PolygonReport, line: usize) -> Result<()> {
    let fail = |field: &'static str, detail: String| Err(FanoError::Inconsistent { line, field, detail });
    let p = match r.polygon() {
        Ok(p) => p,
        Err(e) => return fail("vertices", e.to_string()),
    };
    if p.vertices() != r.vertices.as_slice() || p.canonical_form() != r.vertices {
        return fail("vertices", "not in canonical form".into());
    }
    if r.vertex_count != r.vertices.len() {
        return fail("vertex_count", format!("{} != {} vertices", r.vertex_count, r.vertices.len()));
    }
    if r.picard != r.vertex_count as i64 - 2 {
        return fail("picard", format!("{} != vertex_count - 2", r.picard));
    }
    if r.singularities.len() != r.vertex_count {
        return fail("singularities", format!("{} entries", r.singularities.len()));
    }
    if r.my_defect != r.k2 - r.e_orb * 3 {
        return fail("my_defect", "!= k2 - 3 e_orb".into());
    }
    if r.aut.rotations + r.aut.reflections != r.aut.order {
        return fail("aut", "rotations + reflections != order".into());
    }
    if r.smn.is_some() && r.vertex_count != 4 {
        return fail("smn", "present on a polygon that is not a quadrilateral".into());
    }
    Ok(())
}
