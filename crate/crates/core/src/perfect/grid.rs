use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::poly2::{Exponent, Shape};
use crate::Error;

/// The three grid graphs on `Z²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GridKind {
    Square,
    Triangular,
    King,
}

impl GridKind {
    pub const ALL: [GridKind; 3] = [GridKind::Square, GridKind::Triangular, GridKind::King];

    /// Edge offsets of the graph.
    pub fn edges(self) -> &'static [(i64, i64)] {
        match self {
            GridKind::Square => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
            GridKind::Triangular => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
            GridKind::King => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridKind::Square => "square",
            GridKind::Triangular => "triangular",
            GridKind::King => "king",
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "square" => Ok(GridKind::Square),
            "triangular" => Ok(GridKind::Triangular),
            "king" => Ok(GridKind::King),
            other => Err(Error::Format(format!("unknown grid '{other}'"))),
        }
    }
}

/// Offsets at graph distance at most `r` from the origin.
pub fn neighborhood(kind: GridKind, r: u32) -> Shape {
    let mut seen: BTreeSet<Exponent> = BTreeSet::from([Exponent::ORIGIN]);
    let mut queue = VecDeque::from([(Exponent::ORIGIN, 0u32)]);
    while let Some((u, d)) = queue.pop_front() {
        if d == r {
            continue;
        }
        for &e in kind.edges() {
            let w = u + Exponent::from(e);
            if seen.insert(w) {
                queue.push_back((w, d + 1));
            }
        }
    }
    Shape::from_set(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(pts: &[(i64, i64)]) -> Shape {
        pts.iter().map(|&p| Exponent::from(p)).collect()
    }

    #[test]
    fn radius_one() {
        assert_eq!(neighborhood(GridKind::Square, 1), shape(&[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]));
        assert_eq!(
            neighborhood(GridKind::Triangular, 1),
            shape(&[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
        );
        assert_eq!(neighborhood(GridKind::King, 0), shape(&[(0, 0)]));
    }

    #[test]
    fn sizes() {
        for r in 0..=4u32 {
            let ri = i64::from(r);
            assert_eq!(
                neighborhood(GridKind::King, r),
                Shape::block(2 * ri + 1, 2 * ri + 1).iter().map(|u| u - Exponent::new(ri, ri)).collect()
            );
            assert_eq!(neighborhood(GridKind::Square, r).len() as i64, 2 * ri * ri + 2 * ri + 1);
            assert_eq!(neighborhood(GridKind::Triangular, r).len() as i64, 3 * ri * ri + 3 * ri + 1);
        }
    }
}
