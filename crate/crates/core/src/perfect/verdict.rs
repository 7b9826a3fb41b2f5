use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::geometry::{edge_pair_directions, is_convex, Direction};
use crate::linefactor::{covering_factor_directions, critical_t, fiber_set, line_factor_directions, CriticalSet};
use crate::poly2::LaurentPoly;
use crate::unipoly::{cyclotomic, det_scalar, gcd_primitive, UniPoly};
use crate::{CriticalTReport, Error, LineFactorReport, Rational, Result, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictClass {
    ForcedTwoPeriodic,
    ForcedDirection,
    Inconclusive,
}

impl VerdictClass {
    pub fn label(self) -> &'static str {
        match self {
            VerdictClass::ForcedTwoPeriodic => "forced-two-periodic",
            VerdictClass::ForcedDirection => "forced-direction",
            VerdictClass::Inconclusive => "inconclusive",
        }
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictClass::ForcedTwoPeriodic => 0,
            VerdictClass::ForcedDirection => 3,
            VerdictClass::Inconclusive => 4,
        }
    }
}

impl fmt::Display for VerdictClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Per-direction data of the convex criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexDirection {
    pub direction: Direction,
    /// gcd of the numbers of points of `D` on the lines counted.
    pub d: u64,
    /// Normal form of the origin fiber of `f_D - delta` (only for `delta ≠ 0`).
    pub origin_fiber: Option<UniPoly<BigInt>>,
    pub has_factor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexCertificate {
    pub delta: BigInt,
    pub directions: Vec<ConvexDirection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The periodizer has no line polynomial factors.
    NoLineFactors,
    /// Line polynomial factors found.
    LineFactors(Vec<LineFactorReport>),
    Convex(ConvexCertificate),
    /// Critical values of `f_D - t`, with `det(B - t0·I)` when one was needed.
    CriticalT {
        report: CriticalTReport,
        determinant: Option<Rational>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    ForcedTwoPeriodic(Evidence),
    ForcedDirection(Direction, Evidence),
    Inconclusive { reason: String, evidence: Evidence },
}

impl Verdict {
    pub fn class(&self) -> VerdictClass {
        match self {
            Verdict::ForcedTwoPeriodic(_) => VerdictClass::ForcedTwoPeriodic,
            Verdict::ForcedDirection(..) => VerdictClass::ForcedDirection,
            Verdict::Inconclusive { .. } => VerdictClass::Inconclusive,
        }
    }

    pub fn direction(&self) -> Option<Direction> {
        match self {
            Verdict::ForcedDirection(v, _) => Some(*v),
            _ => None,
        }
    }

    pub fn evidence(&self) -> &Evidence {
        match self {
            Verdict::ForcedTwoPeriodic(e) | Verdict::ForcedDirection(_, e) => e,
            Verdict::Inconclusive { evidence, .. } => evidence,
        }
    }
}

fn classify_directions(dirs: BTreeSet<Direction>, evidence: Evidence) -> Verdict {
    let dirs: BTreeSet<Direction> = dirs.into_iter().map(Direction::normalized).collect();
    match dirs.len() {
        0 => Verdict::ForcedTwoPeriodic(evidence),
        1 => Verdict::ForcedDirection(*dirs.iter().next().expect("one direction"), evidence),
        _ => {
            Verdict::Inconclusive { reason: format!("line polynomial factors in {} directions", dirs.len()), evidence }
        }
    }
}

fn classify_reports(reports: Vec<LineFactorReport>) -> Verdict {
    if reports.is_empty() {
        return Verdict::ForcedTwoPeriodic(Evidence::NoLineFactors);
    }
    let dirs = reports.iter().map(|r| r.direction).collect();
    classify_directions(dirs, Evidence::LineFactors(reports))
}

/// Verdict for `(D, b, a)`-coverings from the line factors of `f_D - (b - a)`.
pub fn verdict_covering(shape: &Shape, b: &BigInt, a: &BigInt) -> Result<Verdict> {
    Ok(classify_reports(covering_factor_directions(shape, &(b - a))?))
}

/// Verdict for coverings with `b - a = delta` on a convex shape, decided from
/// line counts and cyclotomic polynomials instead of fiber gcds.
///
/// Every fiber of `f_D` is `1 + s + ... + s^(n-1)`, so the fibers avoiding the
/// origin share exactly the cyclotomic factors `Φ_e` with `e > 1` dividing the
/// gcd `d` of their lengths. With `delta = 0` all fibers count.
pub fn verdict_covering_convex(shape: &Shape, delta: &BigInt) -> Result<Verdict> {
    if !is_convex(shape) {
        return Err(Error::NonConvex);
    }
    let g = LaurentPoly::characteristic(shape)?.minus_constant(delta);
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut directions = Vec::new();
    for v in edge_pair_directions(&g.support())? {
        let mut lengths: BTreeMap<i64, u64> = BTreeMap::new();
        for u in shape.iter() {
            *lengths.entry(v.p() * u.j - v.q() * u.i).or_default() += 1;
        }
        let entry = if delta.is_zero() {
            let d = lengths.values().fold(0, |acc, &n| gcd_u64(acc, n));
            ConvexDirection { direction: v, d, origin_fiber: None, has_factor: d > 1 }
        } else {
            let d = lengths.iter().filter(|(&line, _)| line != 0).fold(0, |acc, (_, &n)| gcd_u64(acc, n));
            let fib = fiber_set(&g, v)?.origin_fiber.map(|o| o.normal_form);
            let has_factor = match &fib {
                None => d > 1,
                Some(fib) if d == 0 => !fib.is_constant(),
                Some(fib) => shares_cyclotomic_factor(fib, d)?,
            };
            ConvexDirection { direction: v, d, origin_fiber: fib, has_factor }
        };
        directions.push(entry);
    }
    let dirs = directions.iter().filter(|d| d.has_factor).map(|d| d.direction).collect();
    let evidence = Evidence::Convex(ConvexCertificate { delta: delta.clone(), directions });
    Ok(classify_directions(dirs, evidence))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Whether `p` has a common factor with some `Φ_e`, `e | d`, `e > 1`.
fn shares_cyclotomic_factor(p: &UniPoly<BigInt>, d: u64) -> Result<bool> {
    for e in 2..=d {
        if d.is_multiple_of(e) && !gcd_primitive(&cyclotomic::<BigInt>(e as usize)?, p)?.is_constant() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `det(B - t·I)` for rational `t = p/q`, as `det(q·B - p·I) / q^n`.
pub fn shifted_determinant(matrix: &[Vec<BigInt>], t: &Rational) -> Result<Rational> {
    let (p, q) = (t.numer(), t.denom());
    let shifted: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, b)| if i == j { b * q - p } else { b * q }).collect())
        .collect();
    let det = det_scalar(&shifted)?;
    Ok(Rational::new(det, num_traits::pow(q.clone(), matrix.len())))
}

/// Verdict for `(D, B)`-colorings: two-periodic when `f_D - t` has no line
/// factors for any `t`, or only at `t0` with `det(B - t0·I) ≠ 0`.
pub fn verdict_coloring(shape: &Shape, matrix: &super::ColoringMatrix) -> Result<Verdict> {
    matrix.check_shape_size(shape.len())?;
    let report: CriticalTReport = critical_t(shape)?;
    match report.global.clone() {
        CriticalSet::NoneForAnyT => Ok(Verdict::ForcedTwoPeriodic(Evidence::CriticalT { report, determinant: None })),
        CriticalSet::OnlyAt(t0) => {
            let det = shifted_determinant(&matrix.to_bigint(), &t0)?;
            let forced = !det.is_zero();
            let evidence = Evidence::CriticalT { report, determinant: Some(det) };
            if forced {
                Ok(Verdict::ForcedTwoPeriodic(evidence))
            } else {
                Ok(Verdict::Inconclusive { reason: format!("det(B - {t0}·I) = 0"), evidence })
            }
        }
        CriticalSet::Finite(set) => Ok(Verdict::Inconclusive {
            reason: format!("{} critical values", set.len()),
            evidence: Evidence::CriticalT { report, determinant: None },
        }),
        CriticalSet::Unresolved { .. } => Ok(Verdict::Inconclusive {
            reason: "critical values not all rational".into(),
            evidence: Evidence::CriticalT { report, determinant: None },
        }),
        CriticalSet::AllT => Ok(Verdict::Inconclusive {
            reason: "line factors for almost every t".into(),
            evidence: Evidence::CriticalT { report, determinant: None },
        }),
    }
}

/// Verdict for configurations of abelian complexity 1 with respect to `D`.
pub fn verdict_abelian(shape: &Shape) -> Result<Verdict> {
    Ok(classify_reports(line_factor_directions(&LaurentPoly::characteristic(shape)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect::{neighborhood, ColoringMatrix, GridKind};
    use crate::Exponent;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn covering_square_radius_one() {
        let plus = neighborhood(GridKind::Square, 1);
        assert_eq!(verdict_covering(&plus, &int(2), &int(2)).unwrap().class(), VerdictClass::ForcedTwoPeriodic);
        assert_eq!(verdict_covering(&plus, &int(1), &int(0)).unwrap().class(), VerdictClass::Inconclusive);
        let king = neighborhood(GridKind::King, 2);
        assert_eq!(verdict_covering(&king, &int(4), &int(1)).unwrap().class(), VerdictClass::ForcedTwoPeriodic);
    }

    #[test]
    fn convex_examples() {
        let sq2 = neighborhood(GridKind::Square, 2);
        for delta in -3..=3 {
            assert_eq!(verdict_covering_convex(&sq2, &int(delta)).unwrap().class(), VerdictClass::ForcedTwoPeriodic);
        }
        let tri = neighborhood(GridKind::Triangular, 1);
        assert_eq!(verdict_covering_convex(&tri, &int(-1)).unwrap().class(), VerdictClass::Inconclusive);
        let segment = Shape::block(3, 1);
        let v = verdict_covering_convex(&segment, &int(0)).unwrap();
        assert_eq!(v.direction(), Some(Direction::new(1, 0).unwrap()));
        let ring = Shape::new([(1, 0), (0, 1), (-1, 0), (0, -1)].map(Exponent::from)).unwrap();
        assert_eq!(verdict_covering_convex(&ring, &int(0)), Err(Error::NonConvex));
    }

    #[test]
    fn coloring_checkerboard_matrix() {
        let plus = neighborhood(GridKind::Square, 1);
        let b = ColoringMatrix::new(vec![vec![1, 4], vec![4, 1]]).unwrap();
        let v = verdict_coloring(&plus, &b).unwrap();
        assert_eq!(v.class(), VerdictClass::ForcedTwoPeriodic);
        match v.evidence() {
            Evidence::CriticalT { determinant, .. } => assert_eq!(determinant, &Some(Rational::from_integer(int(-16)))),
            other => panic!("unexpected {other:?}"),
        }
        let singular = ColoringMatrix::new(vec![vec![3, 2], vec![2, 3]]).unwrap();
        assert_eq!(verdict_coloring(&plus, &singular).unwrap().class(), VerdictClass::Inconclusive);
        let bad = ColoringMatrix::new(vec![vec![1, 4], vec![3, 1]]).unwrap();
        assert!(matches!(verdict_coloring(&plus, &bad), Err(Error::MatrixInconsistent { column: 0, .. })));
    }

    #[test]
    fn rational_shift() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(2)]];
        // det(B - 1/2 I) = (3/2)^2 - 1 = 5/4
        assert_eq!(shifted_determinant(&m, &Rational::new(int(1), int(2))).unwrap(), Rational::new(int(5), int(4)));
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(
            verdict_abelian(&neighborhood(GridKind::Square, 1)).unwrap().class(),
            VerdictClass::ForcedTwoPeriodic
        );
        assert_eq!(verdict_abelian(&Shape::block(2, 1)).unwrap().direction(), Some(Direction::new(1, 0).unwrap()));
        assert_eq!(verdict_abelian(&Shape::block(2, 2)).unwrap().class(), VerdictClass::Inconclusive);
    }
}
