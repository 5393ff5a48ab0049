//! The plain-text complex format.
//!
//! One maximal simplex per line, vertex labels separated by whitespace. `#`
//! starts a comment running to the end of the line and blank lines are
//! ignored. A comment line of the form `# surface: NAME` declares the
//! surface the complex is meant to represent. Files are UTF-8; LF and CRLF
//! line endings are accepted, output always uses LF.

use std::fs;
use std::path::{Path, PathBuf};

use crate::complex::{Simplex, SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

const SURFACE_HEADER: &str = "surface:";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub path: Option<PathBuf>,
    /// Simplices in file order, vertices sorted within each.
    pub simplices: Vec<Simplex>,
    pub declared_surface: Option<String>,
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut simplices = Vec::new();
        let mut declared_surface = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b, Some(c)),
                None => (raw, None),
            };
            if let Some(c) = comment {
                if let Some(name) = c.trim().strip_prefix(SURFACE_HEADER) {
                    if declared_surface.is_none() && body.trim().is_empty() {
                        declared_surface = Some(name.trim().to_string());
                    }
                }
            }
            let labels = body
                .split_whitespace()
                .map(VertexLabel::new)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| parse_error(line_no, e))?;
            if labels.is_empty() {
                continue;
            }
            simplices.push(Simplex::new(labels).map_err(|e| parse_error(line_no, e))?);
        }
        if simplices.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "no simplices in file".into(),
            });
        }
        Ok(Self {
            path: None,
            simplices,
            declared_surface,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let text = String::from_utf8(bytes)
            .map_err(|e| Error::Io(format!("{}: not UTF-8: {e}", path.display())))?;
        let mut file = Self::parse(&text)?;
        file.path = Some(path.to_path_buf());
        Ok(file)
    }

    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_simplices(&self.simplices)
    }
}

fn parse_error(line: usize, e: Error) -> Error {
    let message = match e {
        Error::Malformed(m) => m,
        other => other.to_string(),
    };
    Error::Parse { line, message }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    Ok(ComplexFile::parse(text)?.complex())
}

/// Maximal simplices in canonical order, one per line.
pub fn write_complex(k: &SimplicialComplex, surface: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = surface {
        out.push_str(&format!("# {SURFACE_HEADER} {name}\n"));
    }
    for s in k.maximal_simplices() {
        let labels: Vec<&str> = s.vertices().iter().map(VertexLabel::as_str).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
