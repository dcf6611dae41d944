//! The `H_k` gadget and edge replacement.

use std::f64::consts::PI;

use super::geometry::{arc, embed_drawing, rotations_from_points};
use super::{ConstructionError, Result};
use crate::connectivity::{connectivity_level, ConnectivityLevel};
use crate::embedding::{EdgeId, Embedding, EmbeddingError, VertexId};

/// A gadget with four degree-2 attachment vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetAttachment {
    pub gadget: Embedding,
    /// `x_0, x_{2k}, y_0, y_{2k}`.
    pub ports: [VertexId; 4],
    /// Where the external neighbor goes in each port's rotation list.
    pub port_slots: [usize; 4],
}

/// Two `(2k+1)`-cycles `x_0..x_{2k}` and `y_0..y_{2k}` with nested chords
/// `x_i x_{2k-i}`, `y_i y_{2k-i}` for `1 <= i < k` and the edge `x_k y_k`.
///
/// Vertices are numbered `x_i = i`, `y_i = 2k + 1 + i`.
pub fn make_hk(k: usize) -> GadgetAttachment {
    assert!(k >= 1, "H_k needs k >= 1");
    let m = 2 * k + 1;
    let x = |i: usize| i;
    let y = |i: usize| m + i;
    let step = 2.0 * PI / m as f64;
    // x_k faces east toward y_k, which faces west
    let mut points = arc((0.0, 0.0), 1.0, PI - step / 2.0, -step, m);
    points.extend(arc((4.0, 0.0), 1.0, -step / 2.0, -step, m));

    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((x(i), x((i + 1) % m)));
        edges.push((y(i), y((i + 1) % m)));
    }
    for i in 1..k {
        edges.push((x(i), x(2 * k - i)));
        edges.push((y(i), y(2 * k - i)));
    }
    edges.push((x(k), y(k)));
    let gadget = embed_drawing(&points, &edges).expect("H_k drawing is planar");

    let ports = [x(0), x(2 * k), y(0), y(2 * k)];
    // stand-ins for u_1, u_2, v_1, v_2 around the replaced edge
    let outside = [(-3.0, 3.0), (-3.0, -3.0), (7.0, -3.0), (7.0, 3.0)];
    let mut with_outside = points.clone();
    with_outside.extend_from_slice(&outside);
    let mut ext_edges = edges.clone();
    for (i, &p) in ports.iter().enumerate() {
        ext_edges.push((2 * m + i, p));
    }
    let full = rotations_from_points(&with_outside, &ext_edges);
    let mut port_slots = [0; 4];
    for (i, &p) in ports.iter().enumerate() {
        let f = &full[p];
        let at = f.iter().position(|&w| w == 2 * m + i).unwrap();
        let after = [f[(at + 1) % 3], f[(at + 2) % 3]];
        let own = gadget.rotation(p);
        port_slots[i] = if own == after { 2 } else { 1 };
    }
    GadgetAttachment { gadget, ports, port_slots }
}

/// Replaces edge `e = uv` of cubic `d` with the gadget: `u` and `v` are
/// removed and their other neighbors `u_1, u_2` (after `v` in `u`'s rotation)
/// and `v_1, v_2` (after `u` in `v`'s rotation) are joined to the ports
/// `x_0, x_{2k}, y_0, y_{2k}`. The orientation of `e` is that of its smaller
/// dart.
pub fn replace_edge(d: &Embedding, e: EdgeId, g: &GadgetAttachment) -> Result<Embedding> {
    replace_edge_mapped(d, e, g).map(|(emb, _)| emb)
}

/// As [`replace_edge`], also returning where each vertex of `d` went
/// (`None` for the two removed endpoints).
pub fn replace_edge_mapped(
    d: &Embedding,
    e: EdgeId,
    g: &GadgetAttachment,
) -> Result<(Embedding, Vec<Option<VertexId>>)> {
    if !d.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    if e >= d.edge_count() {
        return Err(EmbeddingError::UnknownEdge(e).into());
    }
    let du = d.edge_dart(e);
    let dv = d.twin(du);
    let (u, v) = (d.origin(du), d.origin(dv));
    if u == v {
        return Err(ConstructionError::LoopEdge(e));
    }
    for &p in &g.ports {
        if g.gadget.degree(p) != 2 {
            return Err(ConstructionError::PortMismatch);
        }
    }
    // darts of u_1, u_2, v_1, v_2 that point back into the removed edge
    let inbound = [d.twin(d.next(du)), d.twin(d.next(d.next(du))), d.twin(d.next(dv)), d.twin(d.next(d.next(dv)))];
    if inbound.iter().any(|&t| d.origin(t) == u || d.origin(t) == v) {
        return Err(ConstructionError::PortMismatch);
    }

    let n = d.vertex_count();
    let mut map = vec![None; n];
    let mut next_id = 0;
    for (w, slot) in map.iter_mut().enumerate() {
        if w != u && w != v {
            *slot = Some(next_id);
            next_id += 1;
        }
    }
    let offset = next_id;
    let mut rotations: Vec<Vec<VertexId>> = Vec::with_capacity(offset + g.gadget.vertex_count());
    for w in 0..n {
        if map[w].is_none() {
            continue;
        }
        let rot = d
            .darts_at(w)
            .map(|t| match inbound.iter().position(|&b| b == t) {
                Some(i) => offset + g.ports[i],
                None => map[d.head(t)].expect("only u and v are removed"),
            })
            .collect();
        rotations.push(rot);
    }
    let outside = [d.origin(inbound[0]), d.origin(inbound[1]), d.origin(inbound[2]), d.origin(inbound[3])];
    for x in 0..g.gadget.vertex_count() {
        let mut rot: Vec<VertexId> = g.gadget.rotation(x).iter().map(|&w| offset + w).collect();
        if let Some(i) = g.ports.iter().position(|&p| p == x) {
            rot.insert(g.port_slots[i], map[outside[i]].unwrap());
        }
        rotations.push(rot);
    }

    // keep the outer face: first dart of the old outer face at a kept vertex
    let mut od = d.outer_dart();
    while d.origin(od) == u || d.origin(od) == v {
        od = d.face_successor(od);
    }
    let w = d.origin(od);
    let pos = od - d.darts_at(w).start;
    let result = Embedding::from_rotations(&rotations)?;
    let new_outer = result.darts_at(map[w].unwrap()).start + pos;
    let result = result.with_outer_dart(new_outer)?;

    if connectivity_level(&d.graph()) == ConnectivityLevel::AtLeastThree
        && connectivity_level(&result.graph()) != ConnectivityLevel::AtLeastThree
    {
        return Err(ConstructionError::LostConnectivity);
    }
    Ok((result, map))
}

/// Replaces every edge of the matching `m` by `H_k`, in ascending edge order.
pub fn replace_matching(d: &Embedding, m: &[EdgeId], k: usize) -> Result<Embedding> {
    let mut sorted = m.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut used = vec![false; d.vertex_count()];
    let mut pending = Vec::with_capacity(sorted.len());
    for &e in &sorted {
        if e >= d.edge_count() {
            return Err(EmbeddingError::UnknownEdge(e).into());
        }
        let (a, b) = d.edge_endpoints(e);
        if a == b || used[a] || used[b] {
            return Err(ConstructionError::NotAMatching);
        }
        used[a] = true;
        used[b] = true;
        pending.push((a, b));
    }
    let gadget = make_hk(k);
    let mut current = d.clone();
    for i in 0..pending.len() {
        let (a, b) = pending[i];
        let dart = current.darts_at(a).find(|&t| current.head(t) == b).ok_or(ConstructionError::NotAMatching)?;
        let (next, map) = replace_edge_mapped(&current, current.edge_of(dart), &gadget)?;
        for p in pending.iter_mut().skip(i + 1) {
            p.0 = map[p.0].expect("matching edges are disjoint");
            p.1 = map[p.1].expect("matching edges are disjoint");
        }
        current = next;
    }
    Ok(current)
}
