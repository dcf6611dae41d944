//! Canonical codes for plane embeddings.
//!
//! A breadth-first relabeling is started from every dart, in both
//! orientations; the lexicographically smallest code wins. Two simple
//! connected plane graphs get the same code iff they are isomorphic as
//! embedded graphs up to reflection.

use std::collections::VecDeque;

use sha2::{Digest, Sha256};

use crate::embedding::{DartId, Embedding};

const SEP: usize = usize::MAX;

pub fn canonical_code(e: &Embedding) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for start in 0..e.dart_count() {
        for mirror in [false, true] {
            let code = code_from(e, start, mirror, best.as_deref());
            if let Some(c) = code {
                best = Some(c);
            }
        }
    }
    let mut out = vec![e.vertex_count(), e.edge_count()];
    out.extend(best.unwrap_or_default());
    out
}

/// Code from one start; `None` once it is known to exceed `bound`.
fn code_from(e: &Embedding, start: DartId, mirror: bool, bound: Option<&[usize]>) -> Option<Vec<usize>> {
    let n = e.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![0; n];
    let mut queue = VecDeque::new();
    let root = e.origin(start);
    label[root] = 0;
    entry[root] = start;
    queue.push_back(root);
    let mut next_label = 1;
    let mut code = Vec::with_capacity(2 * e.dart_count() + n);
    let mut smaller = false;
    let push = |code: &mut Vec<usize>, x: usize, smaller: &mut bool| -> bool {
        if let (Some(b), false) = (bound, *smaller) {
            let i = code.len();
            match x.cmp(&b[i]) {
                std::cmp::Ordering::Less => *smaller = true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        code.push(x);
        true
    };
    while let Some(v) = queue.pop_front() {
        let mut d = entry[v];
        for _ in 0..e.degree(v) {
            let w = e.head(d);
            if label[w] == usize::MAX {
                label[w] = next_label;
                next_label += 1;
                entry[w] = e.twin(d);
                queue.push_back(w);
            }
            if !push(&mut code, label[w], &mut smaller) {
                return None;
            }
            d = if mirror { e.prev(d) } else { e.next(d) };
        }
        if !push(&mut code, SEP, &mut smaller) {
            return None;
        }
    }
    match bound {
        Some(_) if !smaller => None,
        _ => Some(code),
    }
}

/// Short hex digest of the canonical code.
pub fn fingerprint(e: &Embedding) -> String {
    let mut hasher = Sha256::new();
    for x in canonical_code(e) {
        hasher.update((x as u64).to_le_bytes());
    }
    hasher.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}
