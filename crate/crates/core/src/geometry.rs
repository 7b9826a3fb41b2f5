//! Exact lattice geometry of supports: convex hulls, outer edges and
//! convexity of shapes. All orientation tests are integer cross products.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::poly2::{Exponent, Shape};
use crate::{Error, Result};

/// A primitive lattice direction `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    p: i64,
    q: i64,
}

impl Direction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if (p, q) == (0, 0) || p.gcd(&q) != 1 {
            return Err(Error::NonPrimitiveDirection(p, q));
        }
        Ok(Direction { p, q })
    }

    /// Primitive direction parallel to a nonzero vector, keeping its sign.
    pub fn primitive_of(v: Exponent) -> Result<Self> {
        let g = v.i.gcd(&v.j);
        if g == 0 {
            return Err(Error::NonPrimitiveDirection(0, 0));
        }
        Ok(Direction { p: v.i / g, q: v.j / g })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn as_exponent(self) -> Exponent {
        Exponent::new(self.p, self.q)
    }

    pub fn reversed(self) -> Self {
        Direction { p: -self.p, q: -self.q }
    }

    /// Representative of the undirected axis: `p > 0`, or `p = 0` and `q > 0`.
    pub fn normalized(self) -> Self {
        if self.p < 0 || (self.p == 0 && self.q < 0) {
            self.reversed()
        } else {
            self
        }
    }

    pub fn is_normalized(self) -> bool {
        self == self.normalized()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `(b - a) × (c - a)`; positive when `a, b, c` turn counterclockwise.
fn cross(a: Exponent, b: Exponent, c: Exponent) -> i128 {
    let (bx, by) = (i128::from(b.i - a.i), i128::from(b.j - a.j));
    let (cx, cy) = (i128::from(c.i - a.i), i128::from(c.j - a.j));
    bx * cy - by * cx
}

/// Hull vertices in counterclockwise order, collinear points dropped.
///
/// The cycle starts at the rightmost vertex (lowest among ties). A single
/// point gives itself; a collinear set gives its two extreme points in
/// lexicographic order.
pub fn convex_hull(points: &BTreeSet<Exponent>) -> Result<Vec<Exponent>> {
    if points.is_empty() {
        return Err(Error::EmptyShape);
    }
    let pts: Vec<Exponent> = points.iter().copied().collect();
    if pts.len() <= 2 {
        return Ok(pts);
    }
    // Andrew's monotone chain over lexicographically sorted points.
    let mut lower: Vec<Exponent> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Exponent> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let mut hull = lower;
    hull.extend(upper);
    if hull.len() <= 2 {
        hull.sort();
        hull.dedup();
        return Ok(hull);
    }
    let start = (0..hull.len())
        .max_by(|&a, &b| hull[a].i.cmp(&hull[b].i).then(hull[b].j.cmp(&hull[a].j)))
        .expect("non-empty hull");
    hull.rotate_left(start);
    Ok(hull)
}

/// Signed directions `v` in which the set has an outer edge: a supporting line
/// parallel to `v` meeting the set in at least two points, with the set on the
/// right-hand side when walking along `v` (clockwise orientation).
pub fn outer_edge_directions(points: &BTreeSet<Exponent>) -> Result<BTreeSet<Direction>> {
    let hull = convex_hull(points)?;
    let mut dirs = BTreeSet::new();
    match hull.len() {
        1 => {}
        2 => {
            let v = Direction::primitive_of(hull[1] - hull[0])?;
            dirs.insert(v);
            dirs.insert(v.reversed());
        }
        k => {
            for n in 0..k {
                let (a, b) = (hull[n], hull[(n + 1) % k]);
                // counterclockwise edge a -> b, walked clockwise as b -> a
                dirs.insert(Direction::primitive_of(a - b)?);
            }
        }
    }
    Ok(dirs)
}

/// Normalized directions `v` such that both `v` and `-v` are outer edge
/// directions. Line polynomial factors can only occur along these.
pub fn edge_pair_directions(points: &BTreeSet<Exponent>) -> Result<BTreeSet<Direction>> {
    let signed = outer_edge_directions(points)?;
    Ok(signed.iter().filter(|v| v.is_normalized() && signed.contains(&v.reversed())).copied().collect())
}

/// Whether `u` lies in the closed convex hull given as a counterclockwise
/// vertex cycle (or a point / segment).
pub fn hull_contains(hull: &[Exponent], u: Exponent) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == u,
        2 => {
            let (a, b) = (hull[0], hull[1]);
            cross(a, b, u) == 0
                && u.i >= a.i.min(b.i)
                && u.i <= a.i.max(b.i)
                && u.j >= a.j.min(b.j)
                && u.j <= a.j.max(b.j)
        }
        k => (0..k).all(|n| cross(hull[n], hull[(n + 1) % k], u) >= 0),
    }
}

/// True iff every lattice point of the real convex hull belongs to the shape.
pub fn is_convex(shape: &Shape) -> bool {
    let Ok(hull) = convex_hull(shape.offsets()) else {
        return true;
    };
    let (min_i, max_i) = (hull.iter().map(|u| u.i).min().unwrap(), hull.iter().map(|u| u.i).max().unwrap());
    let (min_j, max_j) = (hull.iter().map(|u| u.j).min().unwrap(), hull.iter().map(|u| u.j).max().unwrap());
    (min_i..=max_i)
        .flat_map(|i| (min_j..=max_j).map(move |j| Exponent::new(i, j)))
        .all(|u| !hull_contains(&hull, u) || shape.contains(u))
}
