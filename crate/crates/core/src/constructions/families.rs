use std::f64::consts::PI;

use super::gadget::replace_matching;
use super::geometry::{arc, embed_drawing};
use super::{ConstructionError, Result};
use crate::embedding::{EdgeId, Embedding, VertexId};

/// The frame `D_n` together with its canonical perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnFrame {
    pub embedding: Embedding,
    /// Edge ids of `v_i w_{2i-1}` and `u_i w_{2i}`, ascending.
    pub matching: Vec<EdgeId>,
}

/// Two `n`-cycles `u`, `v` and a `2n`-cycle `w`, with spokes `v_i w_{2i-1}`
/// and `u_i w_{2i}`. Vertices: `u_i = i-1`, `v_i = n+i-1`, `w_j = 2n+j-1`.
pub fn make_dn(n: usize) -> DnFrame {
    assert!(n >= 3, "D_n needs n >= 3");
    let u = |i: usize| i - 1;
    let v = |i: usize| n + i - 1;
    let w = |j: usize| 2 * n + j - 1;
    let step = PI / n as f64;
    // w_j at angle j*step; u_i and v_i sit on the rays of their spokes
    let mut points = arc((0.0, 0.0), 10.0, 2.0 * step, 2.0 * step, n);
    points.extend(arc((0.0, 0.0), 1.0, step, 2.0 * step, n));
    points.extend(arc((0.0, 0.0), 3.0, step, step, 2 * n));

    let mut edges = Vec::with_capacity(6 * n);
    for i in 1..=n {
        let nxt = i % n + 1;
        edges.push((u(i), u(nxt)));
        edges.push((v(i), v(nxt)));
    }
    for j in 1..=2 * n {
        edges.push((w(j), w(j % (2 * n) + 1)));
    }
    let mut spokes = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((v(i), w(2 * i - 1)));
        edges.push((u(i), w(2 * i)));
        spokes.push((v(i), w(2 * i - 1)));
        spokes.push((u(i), w(2 * i)));
    }
    let embedding = embed_drawing(&points, &edges).expect("D_n drawing is planar");
    let mut matching: Vec<EdgeId> = spokes
        .iter()
        .map(|&(a, b)| {
            let d = embedding.darts_at(a).find(|&d| embedding.head(d) == b).unwrap();
            embedding.edge_of(d)
        })
        .collect();
    matching.sort_unstable();
    DnFrame { embedding, matching }
}

/// Whether `G(n, k)` satisfies `n >= 4k + 2`, under which its circumference
/// exceeds `2k`. Smaller `n` is still constructed.
pub fn gnk_meets_hypothesis(n: usize, k: usize) -> bool {
    n >= 4 * k + 2
}

/// `D_n` with every matching edge replaced by `H_{k-1}`; `8nk - 4n` vertices.
pub fn make_gnk(n: usize, k: usize) -> Result<Embedding> {
    if k < 2 {
        return Err(ConstructionError::BadParameters(format!("G(n,k) needs k >= 2, got {k}")));
    }
    if n < 3 {
        return Err(ConstructionError::BadParameters(format!("G(n,k) needs n >= 3, got {n}")));
    }
    let d = make_dn(n);
    replace_matching(&d.embedding, &d.matching, k - 1)
}

/// A `3k`-cycle `v_1..v_{3k}` with hubs `u_i` joined to `v_{3i-2}, v_{3i-1},
/// v_{3i}`, hubs drawn inside the cycle. Vertices: `v_j = j-1`, `u_i = 3k+i-1`.
pub fn make_fan_ring(k: usize) -> Embedding {
    assert!(k >= 2, "fan ring needs k >= 2");
    let m = 3 * k;
    let step = 2.0 * PI / m as f64;
    let mut points = arc((0.0, 0.0), 2.0, 0.0, step, m);
    points.extend(arc((0.0, 0.0), 1.0, step, 3.0 * step, k));
    let mut edges = Vec::with_capacity(6 * k);
    for j in 0..m {
        edges.push((j, (j + 1) % m));
    }
    for i in 0..k {
        for t in 0..3 {
            edges.push((m + i, 3 * i + t));
        }
    }
    embed_drawing(&points, &edges).expect("fan ring drawing is planar")
}

/// Two `n`-cycles joined by a perfect matching; inner cycle `0..n`.
pub fn prism(n: usize) -> Embedding {
    assert!(n >= 3, "prism needs n >= 3");
    let step = 2.0 * PI / n as f64;
    let mut points = arc((0.0, 0.0), 1.0, 0.0, step, n);
    points.extend(arc((0.0, 0.0), 3.0, 0.0, step, n));
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    embed_drawing(&points, &edges).expect("prism drawing is planar")
}

/// Replaces every vertex by a triangle. The dart at position `i` of `v`
/// becomes vertex `3v + i`, whose rotation is `[external, 3v+i+1, 3v+i+2]`
/// (indices mod 3 within the triangle).
pub fn triangle_expand(g: &Embedding) -> Result<Embedding> {
    if !g.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    let n = g.vertex_count();
    let t = |v: VertexId, i: usize| 3 * v + i;
    let mut rotations = Vec::with_capacity(3 * n);
    let mut twin = vec![0; 9 * n];
    for v in 0..n {
        let base = g.darts_at(v).start;
        for i in 0..3 {
            let d = base + i;
            let back = g.twin(d);
            let w = g.origin(back);
            let j = back - g.darts_at(w).start;
            rotations.push(vec![t(w, j), t(v, (i + 1) % 3), t(v, (i + 2) % 3)]);
            let me = 3 * t(v, i);
            twin[me] = 3 * t(w, j);
            // triangle edge t(v,i) -> t(v,i+1) pairs with t(v,i+1) -> t(v,i)
            twin[me + 1] = 3 * t(v, (i + 1) % 3) + 2;
            twin[me + 2] = 3 * t(v, (i + 2) % 3) + 1;
        }
    }
    let od = g.outer_dart();
    let v = g.origin(od);
    let outer = 3 * t(v, od - g.darts_at(v).start);
    Ok(Embedding::from_parts(&rotations, twin, outer)?)
}

pub const CATALOG_NAMES: &[&str] =
    &["k4", "theta", "prism", "cube", "pentagonal-prism", "dodecahedron", "truncated-tetrahedron"];

/// Fixed fixtures by name.
pub fn catalog(name: &str) -> Result<Embedding> {
    let k4 = || Embedding::from_rotations(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]);
    Ok(match name {
        "k4" => k4()?,
        "theta" => Embedding::from_rotations(&[vec![1, 1, 1], vec![0, 0, 0]])?,
        "prism" => prism(3),
        "cube" => prism(4),
        "pentagonal-prism" => prism(5),
        "dodecahedron" => make_dn(5).embedding,
        "truncated-tetrahedron" => triangle_expand(&k4()?)?,
        _ => return Err(ConstructionError::UnknownName(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{connectivity_level, ConnectivityLevel};

    fn sorted_lengths(e: &Embedding) -> Vec<usize> {
        let mut l = e.faces().lengths();
        l.sort_unstable();
        l
    }

    #[test]
    fn dn_faces() {
        for n in 3..=10 {
            let d = make_dn(n);
            let e = &d.embedding;
            assert_eq!((e.vertex_count(), e.edge_count()), (4 * n, 6 * n));
            assert!(e.is_cubic());
            let mut expect = vec![5; 2 * n];
            expect.extend([n, n]);
            expect.sort_unstable();
            assert_eq!(sorted_lengths(e), expect);
            assert_eq!(d.matching.len(), 2 * n);
        }
        assert_eq!(connectivity_level(&make_dn(3).embedding.graph()), ConnectivityLevel::AtLeastThree);
    }

    #[test]
    fn dn_matching_is_the_spokes() {
        let n = 6;
        let d = make_dn(n);
        for &m in &d.matching {
            let (a, b) = d.embedding.edge_endpoints(m);
            let (lo, hi) = (a.min(b), a.max(b));
            assert!(hi >= 2 * n && lo < 2 * n);
            let j = hi - 2 * n + 1;
            if lo < n {
                assert_eq!(j, 2 * (lo + 1));
            } else {
                assert_eq!(j, 2 * (lo - n + 1) - 1);
            }
        }
    }

    #[test]
    fn dn_outer_face_is_the_u_cycle() {
        let e = make_dn(7).embedding;
        let f = e.faces();
        let mut outer = f.boundary_vertices(&e, e.outer_face(&f));
        outer.sort_unstable();
        assert_eq!(outer, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn gnk_counts() {
        for (n, k, v) in [(4, 3, 80), (10, 2, 120), (14, 3, 280), (6, 2, 72)] {
            let g = make_gnk(n, k).unwrap();
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.vertex_count(), 8 * n * k - 4 * n);
            assert!(g.is_cubic());
        }
        assert!(matches!(make_gnk(10, 1), Err(ConstructionError::BadParameters(_))));
        assert!(gnk_meets_hypothesis(10, 2));
        assert!(!gnk_meets_hypothesis(4, 3));
    }

    #[test]
    fn fan_ring_structure() {
        for k in 2..=6 {
            let e = make_fan_ring(k);
            assert_eq!((e.vertex_count(), e.edge_count()), (4 * k, 6 * k));
            assert!(e.is_cubic());
            let mut expect = vec![3; 2 * k];
            expect.extend([3 * k, 3 * k]);
            assert_eq!(sorted_lengths(&e), expect);
            assert_eq!(connectivity_level(&e.graph()), ConnectivityLevel::Two);
        }
    }

    #[test]
    fn fan_ring_face_adjacency() {
        let e = make_fan_ring(4);
        let f = e.faces();
        let adj = f.adjacency(&e);
        for t in f.ids().filter(|&t| f.face_len(t) == 3) {
            let n = &adj.neighbors[t];
            assert_eq!(n.len(), 3);
            let lens: Vec<usize> = n.iter().map(|&x| f.face_len(x)).collect();
            assert_eq!(lens.iter().filter(|&&l| l == 12).count(), 2);
            assert_eq!(lens.iter().filter(|&&l| l == 3).count(), 1);
        }
    }

    #[test]
    fn triangle_expansion() {
        let t = catalog("truncated-tetrahedron").unwrap();
        assert_eq!(t.vertex_count(), 12);
        assert_eq!(sorted_lengths(&t), vec![3, 3, 3, 3, 6, 6, 6, 6]);
        let d = triangle_expand(&catalog("dodecahedron").unwrap()).unwrap();
        assert_eq!(d.vertex_count(), 60);
        let mut expect = vec![3; 20];
        expect.extend([10; 12]);
        assert_eq!(sorted_lengths(&d), expect);
        let p = triangle_expand(&prism(3)).unwrap();
        assert_eq!(p.vertex_count(), 18);
        assert!(p.is_cubic());
        assert_eq!(triangle_expand(&make_fan_ring(2)).unwrap().vertex_count(), 24);
        // theta expands to the prism
        assert_eq!(triangle_expand(&catalog("theta").unwrap()).unwrap().vertex_count(), 6);
        assert_eq!(triangle_expand(&crate::constructions::make_hk(1).gadget), Err(ConstructionError::NotCubic));
    }

    #[test]
    fn catalog_fixtures() {
        let sizes = [4, 2, 6, 8, 10, 20, 12];
        for (name, v) in CATALOG_NAMES.iter().zip(sizes) {
            let e = catalog(name).unwrap();
            assert_eq!(e.vertex_count(), v, "{name}");
            assert!(e.is_cubic());
        }
        assert_eq!(sorted_lengths(&catalog("cube").unwrap()), vec![4; 6]);
        assert!(matches!(catalog("petersen"), Err(ConstructionError::UnknownName(_))));
    }
}
