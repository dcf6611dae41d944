use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::embedding::{Embedding, EmbeddingError};

/// `{"n", "rotations", "outer_face_dart"}` with 0-based vertices. `twins`
/// appears only when parallel edges are paired differently from what the
/// rotations alone would give.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EmbeddingDoc {
    n: usize,
    rotations: Vec<Vec<usize>>,
    outer_face_dart: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    twins: Option<Vec<usize>>,
}

pub fn embedding_to_json(e: &Embedding) -> String {
    let doc = EmbeddingDoc {
        n: e.vertex_count(),
        rotations: e.rotations(),
        outer_face_dart: e.outer_dart(),
        twins: (e.has_parallel_edges() && !e.twins_recoverable()).then(|| e.twins().to_vec()),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn embedding_from_json(text: &str) -> Result<Embedding, FormatError> {
    let doc: EmbeddingDoc = serde_json::from_str(text).map_err(|e| FormatError::SchemaViolation(e.to_string()))?;
    from_doc(doc, 0)
}

/// One embedding object or an array of them.
pub fn embeddings_from_json(text: &str) -> Result<Vec<Embedding>, FormatError> {
    if text.trim_start().starts_with('[') {
        let docs: Vec<EmbeddingDoc> =
            serde_json::from_str(text).map_err(|e| FormatError::SchemaViolation(e.to_string()))?;
        docs.into_iter().enumerate().map(|(i, d)| from_doc(d, i)).collect()
    } else {
        embedding_from_json(text).map(|e| vec![e])
    }
}

fn from_doc(doc: EmbeddingDoc, index: usize) -> Result<Embedding, FormatError> {
    if doc.n != doc.rotations.len() {
        return Err(FormatError::SchemaViolation(format!("n = {} but {} rotation lists", doc.n, doc.rotations.len())));
    }
    let built = match doc.twins {
        Some(twins) => Embedding::from_parts(&doc.rotations, twins, doc.outer_face_dart),
        None => Embedding::from_rotations(&doc.rotations).and_then(|e| e.with_outer_dart(doc.outer_face_dart)),
    };
    built.map_err(|source| match source {
        EmbeddingError::InconsistentAdjacency(..)
        | EmbeddingError::VertexOutOfRange { .. }
        | EmbeddingError::BadTwin(_)
        | EmbeddingError::UnknownDart(_) => FormatError::SchemaViolation(source.to_string()),
        source => FormatError::Embedding { index, source },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, make_hk};

    #[test]
    fn theta_document() {
        let theta = catalog("theta").unwrap();
        assert_eq!(embedding_to_json(&theta), r#"{"n":2,"rotations":[[1,1,1],[0,0,0]],"outer_face_dart":0}"#);
    }

    #[test]
    fn round_trip() {
        for e in [catalog("k4").unwrap(), make_hk(3).gadget.with_outer_dart(5).unwrap()] {
            assert_eq!(embedding_from_json(&embedding_to_json(&e)).unwrap(), e);
        }
    }

    #[test]
    fn explicit_twins_survive() {
        // four parallel edges paired with a shift: planar, but not the
        // pairing that the rotations alone produce
        let e = Embedding::from_parts(&[vec![1, 1, 1, 1], vec![0, 0, 0, 0]], vec![4, 7, 6, 5, 0, 3, 2, 1], 0).unwrap();
        assert!(!e.twins_recoverable());
        let text = embedding_to_json(&e);
        assert!(text.contains(r#""twins":[4,7,6,5,0,3,2,1]"#));
        assert_eq!(embedding_from_json(&text).unwrap(), e);
    }

    #[test]
    fn schema_violations() {
        let bad = r#"{"n":2,"rotations":[[1,1],[0]],"outer_face_dart":0}"#;
        assert!(matches!(embedding_from_json(bad), Err(FormatError::SchemaViolation(_))));
        let wrong_n = r#"{"n":3,"rotations":[[1],[0]],"outer_face_dart":0}"#;
        assert!(matches!(embedding_from_json(wrong_n), Err(FormatError::SchemaViolation(_))));
        let extra = r#"{"n":2,"rotations":[[1],[0]],"outer_face_dart":0,"x":1}"#;
        assert!(matches!(embedding_from_json(extra), Err(FormatError::SchemaViolation(_))));
        let outer = r#"{"n":2,"rotations":[[1],[0]],"outer_face_dart":2}"#;
        assert!(matches!(embedding_from_json(outer), Err(FormatError::SchemaViolation(_))));
    }

    #[test]
    fn arrays() {
        let text = format!(
            "[{},{}]",
            embedding_to_json(&catalog("k4").unwrap()),
            embedding_to_json(&catalog("cube").unwrap())
        );
        let es = embeddings_from_json(&text).unwrap();
        assert_eq!(es.len(), 2);
        assert_eq!(es[1].vertex_count(), 8);
    }
}
