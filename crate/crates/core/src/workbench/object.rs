use std::fmt;
use std::path::Path;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use super::format::{self, Lines};
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectKind {
    Matrix,
    Polytope,
    Fan,
    Cycle,
    Class,
    SemistablePair,
}

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Matrix => "matrix",
            ObjectKind::Polytope => "polytope",
            ObjectKind::Fan => "fan",
            ObjectKind::Cycle => "cycle",
            ObjectKind::Class => "class",
            ObjectKind::SemistablePair => "semistable-pair",
        }
    }

    /// Kind announced by the first significant line of a document.
    pub fn detect(text: &str) -> Result<ObjectKind> {
        let lines = Lines::new(text);
        let head = lines.peek().and_then(|l| l.split_whitespace().next());
        match head {
            Some("matrix") => Ok(ObjectKind::Matrix),
            Some("polytope") | Some("points") => Ok(ObjectKind::Polytope),
            Some("fan") => Ok(ObjectKind::Fan),
            Some("tropical-cycle") => Ok(ObjectKind::Cycle),
            Some("tropical-class") => Ok(ObjectKind::Class),
            Some("semistable-pair") => Ok(ObjectKind::SemistablePair),
            Some(other) => Err(parse_err(lines.line_no(), format!("unknown object header `{other}`"))),
            None => Err(parse_err(1, "empty document")),
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            ObjectKind::Matrix,
            ObjectKind::Polytope,
            ObjectKind::Fan,
            ObjectKind::Cycle,
            ObjectKind::Class,
            ObjectKind::SemistablePair,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::InvalidInput(format!("unknown object kind `{s}`")))
    }
}

/// A named object of the file workspace, held in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkspaceObject {
    name: String,
    kind: ObjectKind,
    payload: String,
    digest: String,
}

/// Re-serializes `text` in canonical form.
pub fn canonical_text(kind: ObjectKind, text: &str) -> Result<String> {
    Ok(match kind {
        ObjectKind::Matrix => format::write_matrix(&format::parse_matrix(text)?),
        ObjectKind::Polytope => {
            if Lines::new(text).peek().is_some_and(|l| l.starts_with("points")) {
                format::write_support(&format::parse_support(text)?)
            } else {
                format::write_polytope(&format::parse_polytope(text)?)
            }
        }
        ObjectKind::Fan => format::write_fan(&format::parse_fan(text)?),
        ObjectKind::Cycle => format::write_cycle(&format::parse_cycle(text)?.canonicalize()),
        ObjectKind::Class => format::write_class(&format::parse_class(text)?),
        ObjectKind::SemistablePair => format::write_semistable_pair(&format::parse_semistable_pair(text)?),
    })
}

pub fn digest_of(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl WorkspaceObject {
    pub fn parse(name: impl Into<String>, text: &str) -> Result<WorkspaceObject> {
        let kind = ObjectKind::detect(text)?;
        let payload = canonical_text(kind, text)?;
        let digest = digest_of(&payload);
        Ok(WorkspaceObject { name: name.into(), kind, payload, digest })
    }

    /// Reads a file; the object is named after the file stem.
    pub fn load(path: &Path) -> Result<WorkspaceObject> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        let name = path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        Self::parse(name, &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    pub fn payload(&self) -> &str {
        &self.payload
    }

    /// Lowercase hex SHA-256 of the canonical payload.
    pub fn digest(&self) -> &str {
        &self.digest
    }
}
