//! Reading and writing graphs, orientations, certificates and transcripts.

use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use mbgames_core::play::{Record, Transcript};
use mbgames_core::{Graph, Orientation, OrientationCertificate};

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, g.to_edge_list()).with_context(|| format!("writing {}", path.display()))
}

pub fn read_orientation(path: &Path) -> Result<Orientation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Orientation::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_orientation(path: &Path, o: &Orientation) -> Result<()> {
    fs::write(path, o.to_text()).with_context(|| format!("writing {}", path.display()))
}

/// Certificates are stored as pretty-printed JSON.
pub fn read_certificate(path: &Path) -> Result<OrientationCertificate> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_certificate(path: &Path, cert: &OrientationCertificate) -> Result<()> {
    let text = serde_json::to_string_pretty(cert)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

/// One JSON object per line: header, moves, outcome.
pub fn write_transcript<W: Write>(mut w: W, t: &Transcript) -> Result<()> {
    for r in t.records() {
        serde_json::to_writer(&mut w, &r)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_transcript<R: BufRead>(r: R) -> Result<Transcript> {
    let mut records = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record =
            serde_json::from_str(&line).with_context(|| format!("transcript line {}", i + 1))?;
        records.push(rec);
    }
    match Transcript::from_records(records) {
        Some(t) => Ok(t),
        None => bail!("transcript must be a header, moves, then an outcome"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbgames_core::graph::petersen;
    use mbgames_core::orientation::short_orientation;

    #[test]
    fn certificate_json_round_trip() {
        let g = petersen();
        let (_, cert) = short_orientation(&g).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        let back: OrientationCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
    }
}
