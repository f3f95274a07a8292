//! Colored points of a type I triangulation, their red and blue labels, and
//! the label arithmetic of syzygies, translation and relative moves.
//!
//! Labels are 1-based as `r_1, ..., r_N` and `b_1, ..., b_N` with
//! `N = m + d`; arithmetic is modulo `N`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::surface::{notched, peripheral, plain, TaggedArc, Triangulation, TriangulationType};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointColor {
    Uncolored,
    RedBlue,
    Red,
    Blue,
}

/// Which anchoring rule produced the labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnchorCase {
    /// No internal triangle at the puncture.
    NoInternal,
    /// Every triangle at the puncture is internal.
    AllInternal,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLabeling {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub case: AnchorCase,
    pub colors: Vec<PointColor>,
    /// `red[i]` is the point labelled `r_(i+1)`.
    pub red: Vec<usize>,
    /// `blue[j]` is the point labelled `b_(j+1)`.
    pub blue: Vec<usize>,
}

impl ColoredLabeling {
    pub fn size(&self) -> usize {
        self.red.len()
    }

    fn slot(&self, i: usize) -> Result<usize> {
        let n = self.size();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange(i, n));
        }
        Ok(i - 1)
    }

    pub fn red_point(&self, i: usize) -> Result<usize> {
        Ok(self.red[self.slot(i)?])
    }

    pub fn blue_point(&self, j: usize) -> Result<usize> {
        Ok(self.blue[self.slot(j)?])
    }

    /// Labels carried by a point, as `(red, blue)` indices.
    pub fn labels_at(&self, q: usize) -> (Option<usize>, Option<usize>) {
        let r = self.red.iter().position(|&p| p == q).map(|i| i + 1);
        let b = self.blue.iter().position(|&p| p == q).map(|j| j + 1);
        (r, b)
    }
}

pub fn colored_labeling(t: &Triangulation) -> Result<ColoredLabeling> {
    if t.classify() != TriangulationType::I {
        return Err(Error::NotTypeI);
    }
    let n = t.n;
    let pts = t.radial_points();
    let m = pts.len();
    let radial = |q: usize| pts.contains(&q);
    let runs = t.internal_runs();
    let mut colors = alloc::vec![PointColor::Uncolored; n];
    let mut firsts = Vec::new();
    let mut lasts = Vec::new();
    if let Some(runs) = &runs {
        for run in runs {
            firsts.push(pts[run[0]]);
            lasts.push(pts[(run[run.len() - 1] + 1) % m]);
        }
    }
    for q in 0..n {
        if !(radial(q) || radial((q + 1) % n)) {
            continue;
        }
        colors[q] = if firsts.contains(&q) {
            PointColor::Red
        } else if lasts.contains(&((q + 1) % n)) {
            PointColor::Blue
        } else {
            PointColor::RedBlue
        };
    }
    let is_red = |c: PointColor| matches!(c, PointColor::Red | PointColor::RedBlue);
    let is_blue = |c: PointColor| matches!(c, PointColor::Blue | PointColor::RedBlue);
    let first_rb = (0..n).find(|&q| colors[q] == PointColor::RedBlue).ok_or(Error::NotTypeI)?;
    let (case, red_anchor, blue_anchor, blue_offset) = match &runs {
        Some(r) if r.is_empty() => (AnchorCase::NoInternal, first_rb, first_rb, 0),
        None => (AnchorCase::AllInternal, first_rb, first_rb, 1),
        Some(_) => {
            let q = *firsts.iter().min().expect("a run exists");
            let a = (q + n - 1) % n;
            (AnchorCase::Mixed, a, a, 0)
        }
    };
    let walk = |start: usize, pred: &dyn Fn(PointColor) -> bool| -> Vec<usize> {
        (0..n).map(|k| (start + k) % n).filter(|&q| pred(colors[q])).collect()
    };
    let red = walk(red_anchor, &is_red);
    let mut blue = walk(blue_anchor, &is_blue);
    // the blue anchor carries b_N rather than b_1 when all triangles are internal
    blue.rotate_left(blue_offset);
    let d = t.d();
    debug_assert_eq!(red.len(), m + d);
    debug_assert_eq!(blue.len(), m + d);
    Ok(ColoredLabeling { n, m, d, case, colors, red, blue })
}

/// The arc joining `r_i` and `b_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelArc {
    Arc(TaggedArc),
    /// The arc belongs to the triangulation, so its module is zero.
    InTriangulation(TaggedArc),
    BoundarySegment,
}

impl LabelArc {
    pub fn arc(self) -> Option<TaggedArc> {
        match self {
            LabelArc::Arc(a) => Some(a),
            _ => None,
        }
    }
}

pub fn gamma_of_labels(t: &Triangulation, l: &ColoredLabeling, i: usize, j: usize) -> Result<LabelArc> {
    let q = l.red_point(i)?;
    let s = l.blue_point(j)?;
    let arc = if q == s {
        if t.contains(&plain(q)) {
            notched(q)
        } else {
            plain(q)
        }
    } else if (q + 1) % t.n == s {
        return Ok(LabelArc::BoundarySegment);
    } else {
        peripheral(q, s)
    };
    Ok(if t.contains(&arc) { LabelArc::InTriangulation(arc) } else { LabelArc::Arc(arc) })
}

fn wrap(n: usize, x: i64) -> usize {
    (x - 1).rem_euclid(n as i64) as usize + 1
}

/// Whether `(i, j)` indexes a module of the puncture family, i.e.
/// `j` lies in `i+2, ..., i-1` modulo `n`.
pub fn in_odot_range(n: usize, i: usize, j: usize) -> bool {
    if i == 0 || j == 0 || i > n || j > n {
        return false;
    }
    let off = (j + n - i) % n;
    off >= 2
}

fn check(n: usize, i: usize, j: usize) -> Result<()> {
    if in_odot_range(n, i, j) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(i, j))
    }
}

/// All label pairs of the puncture family, ordered by `i` then `j`.
pub fn odot_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if in_odot_range(n, i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Labels of the syzygy: `(i, j) -> (j - 1, i)`.
pub fn syzygy_on_labels(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check(n, i, j)?;
    Ok((wrap(n, j as i64 - 1), i))
}

pub fn tau_tilde(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check(n, i, j)?;
    Ok((wrap(n, i as i64 + 1), wrap(n, j as i64 + 1)))
}

pub fn red_move(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check(n, i, j)?;
    let t = (wrap(n, i as i64 - 1), j);
    if in_odot_range(n, t.0, t.1) {
        Ok(t)
    } else {
        Err(Error::MoveNotDefined(i, j))
    }
}

pub fn blue_move(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check(n, i, j)?;
    let t = (i, wrap(n, j as i64 - 1));
    if in_odot_range(n, t.0, t.1) {
        Ok(t)
    } else {
        Err(Error::MoveNotDefined(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syzygy_example() {
        assert_eq!(syzygy_on_labels(8, 1, 3).unwrap(), (2, 1));
        assert_eq!(tau_tilde(8, 1, 3).unwrap(), (2, 4));
        assert!(syzygy_on_labels(8, 1, 2).is_err());
    }

    #[test]
    fn tau_tilde_inverts_double_syzygy() {
        for n in 3..9 {
            for (i, j) in odot_pairs(n) {
                let (a, b) = syzygy_on_labels(n, i, j).unwrap();
                let (a, b) = syzygy_on_labels(n, a, b).unwrap();
                assert_eq!((a, b), (wrap(n, i as i64 - 1), wrap(n, j as i64 - 1)));
                assert_eq!(tau_tilde(n, a, b).unwrap(), (i, j));
            }
        }
    }

    #[test]
    fn odot_count() {
        for n in 3..10 {
            assert_eq!(odot_pairs(n).len(), n * (n - 2));
        }
    }

    #[test]
    fn moves_commute() {
        let n = 8;
        for (i, j) in odot_pairs(n) {
            if let (Ok(r), Ok(b)) = (red_move(n, i, j), blue_move(n, i, j)) {
                let rb = blue_move(n, r.0, r.1).unwrap();
                let br = red_move(n, b.0, b.1).unwrap();
                assert_eq!(rb, br);
                assert_eq!(rb, (wrap(n, i as i64 - 1), wrap(n, j as i64 - 1)));
            }
        }
        assert!(blue_move(n, 1, 3).is_err());
        assert!(red_move(n, 1, 3).is_ok());
    }
}
