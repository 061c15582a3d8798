//! JSON documents for designs and certificates.
//!
//! ```json
//! {"v": 1, "host": {"kind": "complete", "v": 6},
//!  "pattern": {"kind": "path", "k": 4}, "blocks": [[0, 1, 2, 4], ...]}
//! {"v": 1, "source": <design>, "target": <design>, "map": [0, 1, ...]}
//! ```
//!
//! Decoding checks structure (labels, pattern arity) but not validity.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::design::{Design, DownLinkCertificate};
use crate::graph::{Block, BlockError, GraphSpec, PatternKind, Vertex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Version(u32),
    #[error("{path}: unknown pattern kind {kind:?}")]
    UnknownPattern { path: String, kind: String },
    #[error("{path}: pattern {kind:?} needs a parameter \"k\"")]
    MissingParameter { path: String, kind: String },
    #[error("{path}: {source}")]
    Block { path: String, source: BlockError },
    #[error("expected a {expected} document")]
    WrongDocument { expected: &'static str },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Serialize, Deserialize)]
struct PatternDoc {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct DesignDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<u32>,
    host: GraphSpec,
    pattern: PatternDoc,
    blocks: Vec<Vec<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<u32>,
    source: DesignDoc,
    target: DesignDoc,
    map: Vec<usize>,
}

/// Either kind of document; certificates are recognised by a `source` key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Design(Design),
    Certificate(DownLinkCertificate),
}

fn pattern_doc(p: PatternKind) -> PatternDoc {
    let (kind, k) = match p {
        PatternKind::Path(k) => ("path", Some(k)),
        PatternKind::Star(k) => ("star", Some(k)),
        PatternKind::Cycle(k) => ("cycle", Some(k)),
        PatternKind::Kite => ("kite", None),
        PatternKind::Complete(k) => ("complete", Some(k)),
    };
    PatternDoc { kind: kind.to_string(), k }
}

fn pattern_from(doc: &PatternDoc, path: &str) -> Result<PatternKind, DocumentError> {
    let need = |k: Option<usize>| {
        k.ok_or_else(|| DocumentError::MissingParameter { path: path.to_string(), kind: doc.kind.clone() })
    };
    let p = match doc.kind.as_str() {
        "path" => PatternKind::Path(need(doc.k)?),
        "star" => PatternKind::Star(need(doc.k)?),
        "cycle" => PatternKind::Cycle(need(doc.k)?),
        "kite" => PatternKind::Kite,
        "complete" => PatternKind::Complete(need(doc.k)?),
        other => {
            return Err(DocumentError::UnknownPattern { path: path.to_string(), kind: other.to_string() })
        }
    };
    p.validate().map_err(|source| DocumentError::Block { path: path.to_string(), source })?;
    Ok(p)
}

fn check_version(v: Option<u32>) -> Result<(), DocumentError> {
    match v {
        Some(v) if v != SCHEMA_VERSION => Err(DocumentError::Version(v)),
        _ => Ok(()),
    }
}

fn design_doc(d: &Design, top: bool) -> DesignDoc {
    DesignDoc {
        v: top.then_some(SCHEMA_VERSION),
        host: d.host.clone(),
        pattern: pattern_doc(d.pattern),
        blocks: d.blocks.iter().map(|b| b.vertices().to_vec()).collect(),
    }
}

fn design_from(doc: DesignDoc, prefix: &str) -> Result<Design, DocumentError> {
    check_version(doc.v)?;
    let pattern = pattern_from(&doc.pattern, &format!("{prefix}pattern"))?;
    let blocks = doc
        .blocks
        .into_iter()
        .enumerate()
        .map(|(i, vs)| {
            Block::new(pattern, vs).map_err(|source| DocumentError::Block { path: format!("{prefix}blocks[{i}]"), source })
        })
        .collect::<Result<_, _>>()?;
    Ok(Design::new(doc.host, pattern, blocks))
}

pub fn encode_design(d: &Design) -> String {
    serde_json::to_string_pretty(&design_doc(d, true)).expect("documents always serialise")
}

pub fn encode_certificate(c: &DownLinkCertificate) -> String {
    let doc = CertificateDoc {
        v: Some(SCHEMA_VERSION),
        source: design_doc(&c.source, false),
        target: design_doc(&c.target, false),
        map: c.mapping.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("documents always serialise")
}

pub fn encode_document(doc: &Document) -> String {
    match doc {
        Document::Design(d) => encode_design(d),
        Document::Certificate(c) => encode_certificate(c),
    }
}

pub fn decode_document(text: &str) -> Result<Document, DocumentError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("source").is_some() {
        let doc: CertificateDoc = serde_json::from_value(value)?;
        check_version(doc.v)?;
        Ok(Document::Certificate(DownLinkCertificate {
            source: design_from(doc.source, "source.")?,
            target: design_from(doc.target, "target.")?,
            mapping: doc.map,
        }))
    } else {
        let doc: DesignDoc = serde_json::from_value(value)?;
        Ok(Document::Design(design_from(doc, "")?))
    }
}

pub fn decode_design(text: &str) -> Result<Design, DocumentError> {
    match decode_document(text)? {
        Document::Design(d) => Ok(d),
        Document::Certificate(_) => Err(DocumentError::WrongDocument { expected: "design" }),
    }
}

pub fn decode_certificate(text: &str) -> Result<DownLinkCertificate, DocumentError> {
    match decode_document(text)? {
        Document::Certificate(c) => Ok(c),
        Document::Design(_) => Err(DocumentError::WrongDocument { expected: "certificate" }),
    }
}

pub fn read_document(path: &Path) -> Result<Document, DocumentError> {
    decode_document(&fs::read_to_string(path)?)
}

/// Write through a temporary file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), DocumentError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.write_all(b"\n")?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| DocumentError::Io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const P6: &str = r#"{"v":1,"host":{"kind":"complete","v":6},"pattern":{"kind":"path","k":6},
        "blocks":[[4,0,5,1,2,3],[2,5,4,1,3,0],[5,3,4,2,0,1]]}"#;

    #[test]
    fn design_round_trip() {
        let d = decode_design(P6).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(decode_design(&encode_design(&d)).unwrap(), d);
    }

    #[test]
    fn kite_arity_error_names_the_block() {
        let text = r#"{"host":{"kind":"complete","v":9},"pattern":{"kind":"kite"},
            "blocks":[[0,1,2,3],[1,2,3]]}"#;
        let err = decode_design(text).unwrap_err();
        assert!(matches!(err, DocumentError::Block { ref path, source: BlockError::WrongArity { .. } } if path == "blocks[1]"));
    }

    #[test]
    fn structural_errors() {
        let unknown = r#"{"host":{"kind":"complete","v":3},"pattern":{"kind":"wheel","k":3},"blocks":[]}"#;
        assert!(matches!(decode_design(unknown), Err(DocumentError::UnknownPattern { .. })));
        let missing = r#"{"host":{"kind":"complete","v":3},"pattern":{"kind":"path"},"blocks":[]}"#;
        assert!(matches!(decode_design(missing), Err(DocumentError::MissingParameter { .. })));
        assert!(matches!(decode_design("{\"host\":"), Err(DocumentError::Json(_))));
        let future = r#"{"v":2,"host":{"kind":"complete","v":3},"pattern":{"kind":"kite"},"blocks":[]}"#;
        assert!(matches!(decode_design(future), Err(DocumentError::Version(2))));
        assert!(matches!(decode_certificate(P6), Err(DocumentError::WrongDocument { .. })));
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.json");
        write_atomic(&path, "old").unwrap();
        write_atomic(&path, P6).unwrap();
        assert!(matches!(read_document(&path).unwrap(), Document::Design(_)));
    }
}
