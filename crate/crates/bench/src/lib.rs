//! Fixtures shared by the benchmarks.

use cycle_spectra::constructions::{catalog, make_fan_ring, make_gnk, random_c3cp, triangle_expand};
use cycle_spectra::Embedding;

/// The benchmark fixtures, by name.
pub fn fixtures() -> Vec<(&'static str, Embedding)> {
    vec![
        ("dodecahedron", catalog("dodecahedron").expect("catalog graph")),
        ("fanring4", make_fan_ring(4)),
        ("triexpand_dodecahedron", triangle_expand(&catalog("dodecahedron").expect("catalog graph")).expect("cubic")),
        ("random36", random_c3cp(36, 7).expect("even n")),
        ("g10_2", make_gnk(10, 2).expect("k >= 2")),
    ]
}

pub fn fixture(name: &str) -> Embedding {
    fixtures().into_iter().find(|(n, _)| *n == name).map(|(_, e)| e).unwrap_or_else(|| panic!("no fixture {name}"))
}
