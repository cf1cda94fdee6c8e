//! Group documents: the JSON ingestion format for the CLI.
//!
//! A document is `{"format_version": 1, "id": "...", "kind": ..., "payload": ...}`
//! with exactly one payload kind: a raw Cayley table, permutation generators
//! in cycle notation, a catalog name, or a product of two nested documents.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use normtop_core::catalog::catalog;
use normtop_core::group::{direct_product, from_permutation_generators, validate_cayley_table};
use normtop_core::{Caps, Group};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {reason}")]
    ParseError {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),
    #[error("malformed Cayley payload: {0}")]
    MalformedTable(String),
    #[error(transparent)]
    Group(#[from] normtop_core::Error),
}

fn default_format_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDocument {
    #[serde(default = "default_format_version")]
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Cayley(CayleyPayload),
    Permutation(PermutationPayload),
    Catalog(String),
    Product(ProductPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CayleyPayload {
    Table(Vec<Vec<usize>>),
    Named {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

impl CayleyPayload {
    pub fn table(&self) -> &[Vec<usize>] {
        match self {
            CayleyPayload::Table(t) => t,
            CayleyPayload::Named { table, .. } => table,
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        match self {
            CayleyPayload::Table(_) => None,
            CayleyPayload::Named { names, .. } => names.as_deref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PermutationPayload {
    pub degree: usize,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductPayload {
    pub left: Box<GroupDocument>,
    pub right: Box<GroupDocument>,
}

/// Parse one permutation in cycle notation, e.g. `"(0 1 2)(3 4)"`.
/// `"e"`, `"()"`, and the empty string all mean the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>, DocumentError> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut moved = vec![false; degree];
    let s = text.trim();
    if s.is_empty() || s == "e" || s == "()" {
        return Ok(perm);
    }
    let bad = |why: &str| DocumentError::MalformedCycle(format!("{}: {:?}", why, text));
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("missing ')'"))?;
        let inner = &open[..close];
        rest = open[close + 1..].trim_start();
        let cycle: Vec<usize> = inner
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|_| bad("non-numeric entry")))
            .collect::<Result<_, _>>()?;
        if cycle.is_empty() {
            continue;
        }
        for &x in &cycle {
            if x >= degree {
                return Err(bad("entry out of range"));
            }
            if moved[x] {
                return Err(bad("repeated entry"));
            }
            moved[x] = true;
        }
        for i in 0..cycle.len() {
            perm[cycle[i]] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(perm)
}

/// Parse and structurally check a group document.
pub fn parse_group_document(text: &str) -> Result<GroupDocument, DocumentError> {
    let doc: GroupDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::ParseError {
            line: e.line(),
            column: e.column(),
            reason: e.to_string(),
        })?;
    check_document(&doc)?;
    Ok(doc)
}

fn check_document(doc: &GroupDocument) -> Result<(), DocumentError> {
    if doc.format_version != FORMAT_VERSION {
        return Err(DocumentError::UnsupportedVersion(doc.format_version));
    }
    match &doc.payload {
        Payload::Cayley(c) => {
            let t = c.table();
            let n = t.len();
            if n == 0 {
                return Err(DocumentError::MalformedTable("empty table".into()));
            }
            if t.iter().any(|row| row.len() != n) {
                return Err(DocumentError::MalformedTable("table is not square".into()));
            }
            if t.iter().any(|row| row.iter().any(|&x| x >= n)) {
                return Err(DocumentError::MalformedTable("entry out of range".into()));
            }
            if let Some(names) = c.names() {
                if names.len() != n {
                    return Err(DocumentError::MalformedTable(
                        "names length differs from order".into(),
                    ));
                }
            }
        }
        Payload::Permutation(p) => {
            for g in &p.gens {
                parse_cycles(g, p.degree)?;
            }
        }
        Payload::Catalog(name) => {
            catalog(name)?;
        }
        Payload::Product(p) => {
            check_document(&p.left)?;
            check_document(&p.right)?;
        }
    }
    Ok(())
}

/// Build the group a document describes.
pub fn to_group(doc: &GroupDocument, caps: &Caps) -> Result<Group, DocumentError> {
    check_document(doc)?;
    match &doc.payload {
        Payload::Cayley(c) => {
            Ok(validate_cayley_table(c.table(), c.names().map(|n| n.to_vec()))?)
        }
        Payload::Permutation(p) => {
            let gens: Vec<Vec<usize>> = p
                .gens
                .iter()
                .map(|g| parse_cycles(g, p.degree))
                .collect::<Result<_, _>>()?;
            Ok(from_permutation_generators(p.degree, &gens, caps.order_cap)?)
        }
        Payload::Catalog(name) => Ok(catalog(name)?),
        Payload::Product(p) => {
            let left = to_group(&p.left, caps)?;
            let right = to_group(&p.right, caps)?;
            Ok(direct_product(&left, &right, caps.order_cap)?)
        }
    }
}

/// Default run id for a document without an explicit one.
pub fn default_id(doc: &GroupDocument) -> String {
    match (&doc.id, &doc.payload) {
        (Some(id), _) => id.clone(),
        (None, Payload::Catalog(name)) => name.clone(),
        (None, Payload::Cayley(c)) => format!("cayley{}", c.table().len()),
        (None, Payload::Permutation(p)) => format!("perm{}", p.degree),
        (None, Payload::Product(p)) => {
            format!("{} x {}", default_id(&p.left), default_id(&p.right))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_document() {
        let doc = parse_group_document(r#"{"kind":"catalog","payload":"S3"}"#).unwrap();
        assert_eq!(doc.format_version, 1);
        let g = to_group(&doc, &Caps::default()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(default_id(&doc), "S3");
    }

    #[test]
    fn cayley_document() {
        let doc = parse_group_document(r#"{"kind":"cayley","payload":[[0,1],[1,0]]}"#).unwrap();
        let g = to_group(&doc, &Caps::default()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn permutation_document() {
        let doc = parse_group_document(
            r#"{"kind":"permutation","payload":{"degree":3,"gens":["(0 1 2)","(0 1)"]}}"#,
        )
        .unwrap();
        let g = to_group(&doc, &Caps::default()).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn product_document() {
        let text = r#"{"kind":"product","payload":{
            "left":{"kind":"catalog","payload":"Z2"},
            "right":{"kind":"catalog","payload":"Z3"}}}"#;
        let doc = parse_group_document(text).unwrap();
        let g = to_group(&doc, &Caps::default()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(default_id(&doc), "Z2 x Z3");
    }

    #[test]
    fn unknown_catalog_name() {
        let err = parse_group_document(r#"{"kind":"catalog","payload":"X9"}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Group(_)));
    }

    #[test]
    fn parse_error_has_position() {
        let err = parse_group_document("{not json").unwrap_err();
        match err {
            DocumentError::ParseError { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn malformed_cycles() {
        assert!(parse_cycles("(0 1", 3).is_err());
        assert!(parse_cycles("(0 5)", 3).is_err());
        assert!(parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(parse_cycles("(0 x)", 3).is_err());
        assert_eq!(parse_cycles("e", 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_cycles("(0 1 2)", 3).unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn round_trip_identity() {
        for text in [
            r#"{"kind":"catalog","payload":"Z6"}"#,
            r#"{"kind":"cayley","payload":[[0,1],[1,0]]}"#,
            r#"{"kind":"permutation","payload":{"degree":4,"gens":["(0 1 2 3)"]}}"#,
        ] {
            let doc = parse_group_document(text).unwrap();
            let ser = serde_json::to_string(&doc).unwrap();
            let doc2 = parse_group_document(&ser).unwrap();
            assert_eq!(doc, doc2);
        }
    }
}
