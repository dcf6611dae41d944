//! Plain adjacency-list searches, written independently of the library, to
//! cross-check its answers.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Simple adjacency from rotation lists, dropping multiplicity.
pub fn adjacency(rotations: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rotations.iter().map(|r| r.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()).collect()
}

/// Every simple cycle length (at least 3) of a simple graph, by extending
/// paths from their smallest vertex.
pub fn all_cycle_lengths(adj: &[Vec<usize>]) -> BTreeSet<usize> {
    fn walk(adj: &[Vec<usize>], start: usize, v: usize, depth: usize, on: &mut [bool], out: &mut BTreeSet<usize>) {
        for &w in &adj[v] {
            if w == start && depth >= 3 {
                out.insert(depth);
            } else if w > start && !on[w] {
                on[w] = true;
                walk(adj, start, w, depth + 1, on, out);
                on[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on = vec![false; adj.len()];
    for s in 0..adj.len() {
        on[s] = true;
        walk(adj, s, s, 1, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Shortest cycle of length at most `max`, by bounded path extension.
pub fn short_cycle(adj: &[Vec<usize>], max: usize) -> Option<usize> {
    fn walk(adj: &[Vec<usize>], start: usize, v: usize, depth: usize, max: usize, on: &mut [bool]) -> Option<usize> {
        let mut best = None;
        for &w in &adj[v] {
            if w == start && depth >= 3 {
                best = Some(best.map_or(depth, |b: usize| b.min(depth)));
            } else if w > start && !on[w] && depth < max {
                on[w] = true;
                if let Some(d) = walk(adj, start, w, depth + 1, max, on) {
                    best = Some(best.map_or(d, |b: usize| b.min(d)));
                }
                on[w] = false;
            }
        }
        best
    }
    let mut on = vec![false; adj.len()];
    (0..adj.len())
        .filter_map(|s| {
            on[s] = true;
            let r = walk(adj, s, s, 1, max, &mut on);
            on[s] = false;
            r
        })
        .min()
}

/// A vertex sequence is a simple cycle of the graph.
pub fn is_cycle(adj: &[Vec<usize>], vertices: &[usize]) -> bool {
    let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
    vertices.len() >= 3
        && distinct.len() == vertices.len()
        && vertices.iter().all(|&v| v < adj.len())
        && (0..vertices.len()).all(|i| adj[vertices[i]].contains(&vertices[(i + 1) % vertices.len()]))
}

/// Face count of a rotation system with simple adjacency, traced from
/// scratch: the successor of arc `(u, v)` is `(v, w)` with `w` following
/// `u` in `v`'s rotation.
pub fn face_lengths(rotations: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut lengths = Vec::new();
    for (u, r) in rotations.iter().enumerate() {
        for &v in r {
            if seen.contains(&(u, v)) {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let mut len = 0;
            while seen.insert((a, b)) {
                len += 1;
                let rot = &rotations[b];
                let i = rot.iter().position(|&x| x == a).expect("arc has a twin");
                let c = rot[(i + 1) % rot.len()];
                (a, b) = (b, c);
            }
            lengths.push(len);
        }
    }
    lengths
}
