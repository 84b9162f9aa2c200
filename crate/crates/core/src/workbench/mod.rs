//! Interchange formats and workspace objects.

pub mod format;
mod object;

pub use object::{canonical_text, digest_of, ObjectKind, WorkspaceObject};
