use serde::Serialize;

use super::{enumerate_spectrum, SpectrumError};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub spectrum: Vec<usize>,
    pub circumference: usize,
    /// Maximal intervals `[a, b]` with `3 <= a`, `b < circumference` and no
    /// cycle length inside.
    pub gaps: Vec<(usize, usize)>,
}

/// Maximal gaps of a graph whose spectrum can be enumerated in `budget`.
pub fn gap_report(g: &Graph, budget: u64) -> Result<GapReport, SpectrumError> {
    let spec = enumerate_spectrum(g, budget);
    if !spec.complete {
        return Err(SpectrumError::SpectrumIncomplete);
    }
    let lengths = spec.lengths();
    let circumference = *lengths.last().ok_or(SpectrumError::Acyclic)?;
    let mut gaps = Vec::new();
    let mut open: Option<usize> = None;
    for len in 3..circumference {
        match (spec.contains(len), open) {
            (false, None) => open = Some(len),
            (true, Some(a)) => {
                gaps.push((a, len - 1));
                open = None;
            }
            _ => {}
        }
    }
    if let Some(a) = open {
        gaps.push((a, circumference - 1));
    }
    Ok(GapReport { spectrum: lengths, circumference, gaps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, make_fan_ring, make_hk};
    use crate::spectrum::{exists_cycle_in_range, IntervalOutcome, UNLIMITED};

    #[test]
    fn fan_ring_gap() {
        let r = gap_report(&make_fan_ring(4).graph(), UNLIMITED).unwrap();
        assert!(r.gaps.contains(&(5, 11)));
        assert_eq!(r.circumference, 16);
    }

    #[test]
    fn no_gaps() {
        assert!(gap_report(&catalog("k4").unwrap().graph(), UNLIMITED).unwrap().gaps.is_empty());
        assert!(gap_report(&make_hk(2).gadget.graph(), UNLIMITED).unwrap().gaps.is_empty());
    }

    #[test]
    fn cube_gaps() {
        let r = gap_report(&catalog("cube").unwrap().graph(), UNLIMITED).unwrap();
        assert_eq!(r.gaps, vec![(3, 3), (5, 5), (7, 7)]);
    }

    #[test]
    fn incomplete() {
        let g = catalog("dodecahedron").unwrap().graph();
        assert_eq!(gap_report(&g, 3), Err(SpectrumError::SpectrumIncomplete));
    }

    #[test]
    fn subintervals_of_gaps_are_empty() {
        for g in [make_fan_ring(4).graph(), make_fan_ring(5).graph(), catalog("cube").unwrap().graph()] {
            let r = gap_report(&g, UNLIMITED).unwrap();
            for &(a, b) in &r.gaps {
                assert!(r.spectrum.contains(&(a - 1)) || a == 3);
                assert!(r.spectrum.contains(&(b + 1)));
                assert!(r.circumference > b);
                for lo in a..=b {
                    for hi in lo..=b {
                        let o = exists_cycle_in_range(&g, lo, hi, UNLIMITED).unwrap().outcome;
                        assert_eq!(o, IntervalOutcome::Empty);
                    }
                }
            }
        }
    }
}
