use std::collections::BTreeSet;

use cycle_spectra::constructions::{random_c3cp, triangle_expand};
use cycle_spectra::io::{embedding_from_json, embedding_to_json, parse_planar_code, write_planar_code};
use cycle_spectra::lab::{audit_counts, long_face_or_midcycle, verify_interval_theorem, DescentOutcome, LabError};
use cycle_spectra::spectrum::{
    circumference, enumerate_spectrum, exists_cycle_in_range, gap_report, girth, IntervalOutcome, UNLIMITED,
};
use cycle_spectra::{fingerprint, suppress_degree2, Embedding, EmbeddingError};
use proptest::prelude::*;

fn cubic(max_n: usize) -> impl Strategy<Value = Embedding> {
    (2..=max_n / 2, any::<u64>()).prop_map(|(half, seed)| random_c3cp(2 * half, seed).unwrap())
}

/// Subdivides each chosen edge once; the new vertex sits where the edge
/// was in both endpoint rotations.
fn subdivide(e: &Embedding, chosen: &BTreeSet<usize>) -> Embedding {
    let mut rot = e.rotations();
    for &edge in chosen {
        let (u, v) = e.edge_endpoints(edge);
        let w = rot.len();
        for (a, b) in [(u, v), (v, u)] {
            let slot = rot[a].iter().position(|&x| x == b).unwrap();
            rot[a][slot] = w;
        }
        rot.push(vec![u, v]);
    }
    Embedding::from_rotations(&rot).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_and_face_sums(g in cubic(40)) {
        let faces = g.faces();
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, faces.len() as i64);
        prop_assert_eq!(v - e + f, 2);
        prop_assert_eq!(faces.lengths().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(faces.len(), g.vertex_count() / 2 + 2);
        prop_assert!(faces.lengths().into_iter().min().unwrap() <= 5);
        prop_assert!(faces.ids().all(|f| faces.is_simple_cycle(&g, f)));
    }

    #[test]
    fn shuffled_rotations_are_planar_or_rejected(g in cubic(16), swaps in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let mut rot = g.rotations();
        for s in &swaps {
            let v = s.index(rot.len());
            rot[v].swap(0, 1);
        }
        match Embedding::from_rotations(&rot) {
            Ok(h) => {
                let faces = h.faces();
                prop_assert_eq!(h.vertex_count() as i64 - h.edge_count() as i64 + faces.len() as i64, 2);
            }
            Err(EmbeddingError::NotPlanar(chi)) => prop_assert!(chi < 2 && chi % 2 == 0),
            Err(other) => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn interval_agrees_with_enumeration(g in cubic(16), a in 3usize..17, width in 0usize..8) {
        let graph = g.graph();
        let spec = enumerate_spectrum(&graph, UNLIMITED);
        prop_assert!(spec.complete);
        let b = a + width;
        let r = exists_cycle_in_range(&graph, a, b, UNLIMITED).unwrap();
        let expected = spec.lengths().into_iter().any(|l| (a..=b).contains(&l));
        match r.outcome {
            IntervalOutcome::Found(w) => {
                prop_assert!(expected);
                prop_assert!(w.validate(&graph) && (a..=b).contains(&w.len()));
            }
            IntervalOutcome::Empty => prop_assert!(!expected),
            IntervalOutcome::Unknown => prop_assert!(false, "unlimited search gave up"),
        }
        prop_assert!(spec.present.values().all(|w| w.validate(&graph)));
        prop_assert_eq!(girth(&graph).unwrap().len(), spec.lengths()[0]);
        let c = circumference(&graph, UNLIMITED).unwrap();
        prop_assert!(c.exact);
        prop_assert_eq!(Some(c.lower_bound), spec.lengths().last().copied());
    }

    #[test]
    fn gaps_are_maximal_and_empty(g in cubic(14).prop_map(|g| triangle_expand(&g).unwrap())) {
        let graph = g.graph();
        let r = gap_report(&graph, UNLIMITED).unwrap();
        let present: BTreeSet<usize> = r.spectrum.iter().copied().collect();
        for &(a, b) in &r.gaps {
            prop_assert!(a <= b && b < r.circumference);
            prop_assert!((a..=b).all(|l| !present.contains(&l)));
            prop_assert!(a == 3 || present.contains(&(a - 1)));
            prop_assert!(present.contains(&(b + 1)));
            let mid = (a + b) / 2;
            prop_assert_eq!(exists_cycle_in_range(&graph, mid, b, UNLIMITED).unwrap().outcome, IntervalOutcome::Empty);
        }
    }

    #[test]
    fn suppression_undoes_subdivision(g in cubic(20), picks in prop::collection::btree_set(0usize..30, 1..6)) {
        let chosen: BTreeSet<usize> = picks.into_iter().filter(|&e| e < g.edge_count()).collect();
        prop_assume!(!chosen.is_empty());
        let sub = subdivide(&g, &chosen);
        let map = suppress_degree2(&sub).unwrap();
        prop_assert_eq!(map.image.vertex_count(), g.vertex_count());
        prop_assert_eq!(map.image.edge_count(), g.edge_count());
        prop_assert_eq!(fingerprint(&map.image), fingerprint(&g));
        let (faces, h_faces) = (sub.faces(), map.image.faces());
        let image: BTreeSet<usize> = map.face_bijection.iter().copied().collect();
        prop_assert_eq!(image.len(), faces.len());
        for f in faces.ids() {
            let lh = h_faces.face_len(map.face_bijection[f]);
            prop_assert!(lh <= faces.face_len(f));
        }
        prop_assert_eq!(
            map.edge_origin.iter().map(Vec::len).sum::<usize>(),
            sub.edge_count()
        );
    }

    #[test]
    fn formats_round_trip(g in cubic(60)) {
        prop_assert_eq!(&embedding_from_json(&embedding_to_json(&g)).unwrap(), &g);
        let bytes = write_planar_code(std::slice::from_ref(&g)).unwrap();
        let back = parse_planar_code(&bytes).unwrap();
        prop_assert_eq!(back[0].rotations(), g.rotations());
        prop_assert_eq!(write_planar_code(&back).unwrap(), bytes);
    }

    #[test]
    fn fingerprint_ignores_labels(g in cubic(24), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = g.rotation(v).iter().map(|&w| perm[w]).collect();
        }
        let relabeled = Embedding::from_rotations(&rot).unwrap();
        prop_assert_eq!(fingerprint(&relabeled), fingerprint(&g));
    }

    #[test]
    fn descent_shrinks_and_lands_in_window(g in cubic(30), k in 3usize..8) {
        let c = circumference(&g.graph(), UNLIMITED).unwrap();
        prop_assume!(c.lower_bound >= k);
        let d = long_face_or_midcycle(&g, k, 9, &c.witness).unwrap();
        prop_assert!(d.interior_counts.windows(2).all(|p| p[1] < p[0]));
        match d.outcome {
            DescentOutcome::MidCycle { witness } => {
                prop_assert!(witness.validate(&g.graph()) && (k..=2 * k + 9).contains(&witness.len()));
            }
            DescentOutcome::LongFace { face, length } => {
                prop_assert_eq!(g.faces().face_len(face), length);
                prop_assert!(length > 2 * k + 9);
            }
        }
    }

    #[test]
    fn verify_never_reaches_a_consistent_audit(g in cubic(26), k in 3usize..10) {
        match verify_interval_theorem(&g, k, UNLIMITED, true) {
            Ok(r) => {
                let audit_euler = r.pipeline.and_then(|p| p.audit).map(|a| a.line("euler").unwrap().holds);
                prop_assert!(audit_euler.unwrap_or(true));
            }
            Err(LabError::CircumferenceTooSmall { bound, .. }) => prop_assert!(bound < k),
            Err(e) => prop_assert!(false, "{}", e),
        }
        prop_assert!(audit_counts(&g, k).unwrap().line("euler").unwrap().holds);
    }
}
