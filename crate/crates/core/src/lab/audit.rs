use serde::Serialize;

use super::{Result, THEOREM_SLACK};
use crate::embedding::{Embedding, FaceId};
use crate::suppress::suppress_degree2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceClass {
    /// Shorter than `k`.
    Short,
    /// In `[k, 2k+9]`.
    Mid,
    /// Longer than `2k+9`.
    Long,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MidFace {
    pub face: FaceId,
    pub length: usize,
    pub length_in_h: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
        }
    }
}

/// One inequality of the counting chain, evaluated on actual quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditLine {
    pub name: &'static str,
    pub statement: &'static str,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub k: usize,
    /// Vertices of the suppressed graph `H`.
    pub n: usize,
    pub x: usize,
    pub y: usize,
    pub mid_faces: Vec<MidFace>,
    pub classes: Vec<FaceClass>,
    pub sum_x_len: usize,
    pub sum_x_len_h: usize,
    pub sum_y_len: usize,
    pub sum_y_len_h: usize,
    pub min_face_len_h: usize,
    pub lines: Vec<AuditLine>,
}

impl AuditReport {
    pub fn line(&self, name: &str) -> Option<&AuditLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    pub fn failed_lines(&self) -> Vec<&'static str> {
        self.lines.iter().filter(|l| !l.holds).map(|l| l.name).collect()
    }

    /// No mid face and every line holds: the state the interval theorem
    /// excludes.
    pub fn fully_consistent(&self) -> bool {
        self.mid_faces.is_empty() && self.lines.iter().all(|l| l.holds)
    }
}

/// Suppresses degree-2 vertices of `gp` and evaluates the counting chain
/// for `k`, with faces classified by their length in `gp`.
pub fn audit_counts(gp: &Embedding, k: usize) -> Result<AuditReport> {
    let map = suppress_degree2(gp)?;
    let faces = gp.faces();
    let h_faces = map.image.faces();
    let long_above = 2 * k + THEOREM_SLACK;
    let mut classes = Vec::with_capacity(faces.len());
    let mut mid_faces = Vec::new();
    let (mut x, mut y) = (0, 0);
    let (mut sum_x_len, mut sum_x_len_h, mut sum_y_len, mut sum_y_len_h) = (0, 0, 0, 0);
    for f in faces.ids() {
        let len = faces.face_len(f);
        let len_h = h_faces.face_len(map.face_bijection[f]);
        let class = if len < k {
            x += 1;
            sum_x_len += len;
            sum_x_len_h += len_h;
            FaceClass::Short
        } else if len > long_above {
            y += 1;
            sum_y_len += len;
            sum_y_len_h += len_h;
            FaceClass::Long
        } else {
            mid_faces.push(MidFace { face: f, length: len, length_in_h: len_h });
            FaceClass::Mid
        };
        classes.push(class);
    }
    let n = map.image.vertex_count();
    let min_face_len_h = h_faces.lengths().into_iter().min().unwrap_or(0);

    let [n_, k_, x_, y_] = [n, k, x, y].map(|v| v as i64);
    let mid = mid_faces.len() as i64;
    let [sxl, sxh, syl, syh] = [sum_x_len, sum_x_len_h, sum_y_len, sum_y_len_h].map(|v| v as i64);
    let half = n_ / 2 + 2;
    let w = 2 * k_ + 10;
    let rows: [(&'static str, &'static str, i64, Relation, i64); 13] = [
        ("euler", "x + y + mid = n/2 + 2", x_ + y_ + mid, Relation::Eq, half),
        ("eq1", "x + y = n/2 + 2", x_ + y_, Relation::Eq, half),
        ("two_faces", "min face length in H >= 3", min_face_len_h as i64, Relation::Ge, 3),
        ("eq2a", "n >= sum_X len_H", n_, Relation::Ge, sxh),
        ("eq2b", "sum_X len_H >= 3x", sxh, Relation::Ge, 3 * x_),
        ("eq2", "n >= 3x", n_, Relation::Ge, 3 * x_),
        ("eq3", "sum_Y len_H <= 3n - 3x", syh, Relation::Le, 3 * n_ - 3 * x_),
        ("eq4a", "sum_Y len <= sum_Y len_H + sum_X len", syl, Relation::Le, syh + sxl),
        ("eq4", "sum_Y len <= 3n + (k-4)x", syl, Relation::Le, 3 * n_ + (k_ - 4) * x_),
        ("eq5a", "sum_Y len >= (2k+10)y", syl, Relation::Ge, w * y_),
        ("eq5b", "(2k+10)(n/2+2-x) > (k+5)n - (2k+10)x", w * (half - x_), Relation::Gt, (k_ + 5) * n_ - w * x_),
        ("eq5", "sum_Y len > (k+5)n - (2k+10)x", syl, Relation::Gt, (k_ + 5) * n_ - w * x_),
        ("final", "(k+2)n < 3(k+2)x", (k_ + 2) * n_, Relation::Lt, 3 * (k_ + 2) * x_),
    ];
    let lines = rows
        .into_iter()
        .map(|(name, statement, lhs, relation, rhs)| AuditLine {
            name,
            statement,
            lhs,
            relation,
            rhs,
            holds: relation.holds(lhs, rhs),
        })
        .collect();
    Ok(AuditReport {
        k,
        n,
        x,
        y,
        mid_faces,
        classes,
        sum_x_len,
        sum_x_len_h,
        sum_y_len,
        sum_y_len_h,
        min_face_len_h,
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, make_fan_ring, make_gnk, random_c3cp, triangle_expand};
    use crate::embedding::EmbeddingError;
    use crate::lab::LabError;

    #[test]
    fn dodecahedron_k6() {
        let r = audit_counts(&catalog("dodecahedron").unwrap(), 6).unwrap();
        assert_eq!((r.x, r.y, r.n), (12, 0, 20));
        assert!(r.mid_faces.is_empty());
        assert!(r.line("euler").unwrap().holds);
        assert!(r.line("eq1").unwrap().holds);
        let eq2 = r.line("eq2").unwrap();
        assert_eq!((eq2.lhs, eq2.rhs, eq2.holds), (20, 36, false));
        assert!(!r.fully_consistent());
    }

    #[test]
    fn expanded_dodecahedron_k4() {
        let g = triangle_expand(&catalog("dodecahedron").unwrap()).unwrap();
        let r = audit_counts(&g, 4).unwrap();
        assert_eq!(r.x, 20);
        assert_eq!(r.mid_faces.len(), 12);
        assert!(r.mid_faces.iter().all(|m| m.length == 10));
    }

    #[test]
    fn subdivided_theta() {
        let g = Embedding::from_rotations(&[vec![4, 3, 2], vec![2, 3, 4], vec![0, 1], vec![0, 1], vec![0, 1]]).unwrap();
        let r = audit_counts(&g, 3).unwrap();
        assert_eq!((r.n, r.x, r.y, r.mid_faces.len()), (2, 0, 0, 3));
        assert_eq!(r.min_face_len_h, 2);
        assert!(!r.line("two_faces").unwrap().holds);
        assert!(r.line("euler").unwrap().holds);
    }

    #[test]
    fn euler_line_is_an_identity() {
        let mut gs =
            vec![make_fan_ring(4), make_gnk(10, 2).unwrap(), triangle_expand(&catalog("cube").unwrap()).unwrap()];
        gs.extend((0..6).map(|s| random_c3cp(10 + 4 * s as usize, s).unwrap()));
        for g in gs {
            for k in 2..12 {
                let r = audit_counts(&g, k).unwrap();
                assert!(r.line("euler").unwrap().holds);
                assert!(!r.fully_consistent());
            }
        }
    }

    #[test]
    fn suppression_errors_pass_through() {
        let cycle = Embedding::from_rotations(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(audit_counts(&cycle, 3).unwrap_err(), LabError::Embedding(EmbeddingError::DegenerateCycle));
    }
}
