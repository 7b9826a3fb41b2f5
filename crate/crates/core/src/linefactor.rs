//! Line polynomial factors of bivariate Laurent polynomials.
//!
//! A polynomial `f` has a line polynomial factor in a primitive direction `v`
//! exactly when the normal forms of its `v`-fibers share a nonconstant common
//! factor, and this can only happen when the support of `f` has outer edges in
//! both `v` and `-v`. [`line_factor_directions`] checks that finite candidate
//! set. [`critical_t_poly`] does the same for the whole pencil `f - t` and
//! returns the values of `t` at which a factor appears.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Ratio;

use crate::geometry::{edge_pair_directions, Direction};
use crate::poly2::{Exponent, LaurentPoly, Shape};
use crate::unipoly::{gcd_all, rational_roots, resultant_param, ParamUniPoly, UniPoly};
use crate::{Error, Result, Scalar};

/// Coordinates adapted to a primitive direction `v = (p, q)`: the line label
/// `λ(u) = p·u_j - q·u_i` (constant along `u + Zv`) and the position `μ(u)`
/// along the line (`μ(u + v) = μ(u) + 1`). The map `u ↦ (λ, μ)` is unimodular.
#[derive(Debug, Clone, Copy)]
struct LineCoords {
    p: i64,
    q: i64,
    a: i64,
    b: i64,
}

impl LineCoords {
    fn new(v: Direction) -> Self {
        let (p, q) = (v.p(), v.q());
        let e = p.extended_gcd(&q);
        let (a, b) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
        debug_assert_eq!(a * p + b * q, 1);
        LineCoords { p, q, a, b }
    }

    fn split(&self, u: Exponent) -> (i64, i64) {
        (self.p * u.j - self.q * u.i, self.a * u.i + self.b * u.j)
    }

    fn join(&self, line: i64, pos: i64) -> Exponent {
        Exponent::new(-self.b * line + self.p * pos, self.a * line + self.q * pos)
    }
}

/// One nonzero fiber: the terms of `f` on a line `u + Zv`, written as
/// `X^base · normal_form(X^v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber<T> {
    pub line: i64,
    pub base: Exponent,
    pub normal_form: UniPoly<T>,
}

impl<T: Scalar> Fiber<T> {
    pub fn through_origin(&self) -> bool {
        self.line == 0
    }
}

/// The fiber through the lattice origin, with `m0` the position of the
/// origin cell inside its normal form (negative when the fiber starts beyond
/// the origin).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginFiber<T> {
    pub normal_form: UniPoly<T>,
    pub m0: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSet<T> {
    pub direction: Direction,
    /// Every nonzero fiber, ordered by line label.
    pub classes: Vec<Fiber<T>>,
    /// Distinct normal forms of all nonzero fibers.
    pub fibers: BTreeSet<UniPoly<T>>,
    pub origin_fiber: Option<OriginFiber<T>>,
}

impl<T: Scalar> FiberSet<T> {
    /// Distinct normal forms of the fibers that avoid the origin.
    pub fn off_origin(&self) -> BTreeSet<UniPoly<T>> {
        self.classes.iter().filter(|c| !c.through_origin()).map(|c| c.normal_form.clone()).collect()
    }

    /// `Σ X^base · normal_form(X^v)`, which equals the decomposed polynomial.
    pub fn reassemble(&self) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for class in &self.classes {
            out = &out + &line_polynomial(self.direction, &class.normal_form).shift(class.base);
        }
        out
    }
}

/// `Σ c_k X^{k v}` for `φ = Σ c_k t^k`.
pub fn line_polynomial<T: Scalar>(v: Direction, phi: &UniPoly<T>) -> LaurentPoly<T> {
    LaurentPoly::from_terms(phi.coeffs().iter().enumerate().map(|(k, c)| (v.as_exponent().scale(k as i64), c.clone())))
}

/// Groups the terms of `f` into `v`-fibers and keeps their normal forms.
pub fn fiber_set<T: Scalar>(f: &LaurentPoly<T>, v: Direction) -> Result<FiberSet<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coords = LineCoords::new(v);
    let mut lines: BTreeMap<i64, BTreeMap<i64, T>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let (line, pos) = coords.split(e);
        lines.entry(line).or_default().insert(pos, c.clone());
    }
    let mut classes = Vec::with_capacity(lines.len());
    let mut origin_fiber = None;
    for (line, terms) in lines {
        let lo = *terms.keys().next().expect("non-empty line");
        let hi = *terms.keys().next_back().expect("non-empty line");
        let coeffs = (lo..=hi).map(|pos| terms.get(&pos).cloned().unwrap_or_else(T::zero)).collect();
        let normal_form = UniPoly::new(coeffs);
        if line == 0 {
            origin_fiber = Some(OriginFiber { normal_form: normal_form.clone(), m0: -lo });
        }
        classes.push(Fiber { line, base: coords.join(line, lo), normal_form });
    }
    let fibers = classes.iter().map(|c| c.normal_form.clone()).collect();
    Ok(FiberSet { direction: v, classes, fibers, origin_fiber })
}

/// A line polynomial factor in `direction` whose normal form is
/// `gcd_normal_form` (the greatest such factor, up to a monomial and sign).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFactorReport<T> {
    pub direction: Direction,
    pub gcd_normal_form: UniPoly<T>,
}

/// The common factor of the `v`-fibers, if it is nonconstant.
pub fn has_line_factor<T: Scalar>(f: &LaurentPoly<T>, v: Direction) -> Result<Option<LineFactorReport<T>>> {
    let fibers = fiber_set(f, v)?;
    let g = gcd_all(fibers.fibers.iter())?.expect("nonzero polynomial has a fiber");
    Ok((!g.is_constant()).then_some(LineFactorReport { direction: v, gcd_normal_form: g }))
}

/// All directions in which `f` has line polynomial factors. Only the
/// edge-pair directions of the support are candidates.
pub fn line_factor_directions<T: Scalar>(f: &LaurentPoly<T>) -> Result<Vec<LineFactorReport<T>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for v in edge_pair_directions(&f.support())? {
        if let Some(report) = has_line_factor(f, v)? {
            out.push(report);
        }
    }
    Ok(out)
}

/// Line factors of `f_D - delta`, the periodizer of every `(D, b, a)`-covering
/// with `b - a = delta`.
pub fn covering_factor_directions<T: Scalar>(shape: &Shape, delta: &T) -> Result<Vec<LineFactorReport<T>>> {
    let g = LaurentPoly::characteristic(shape)?.minus_constant(delta);
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    line_factor_directions(&g)
}

/// Divides every `v`-fiber of `f` by `phi` and reassembles the quotients, so
/// that `f = line_polynomial(v, phi) · cofactor`. `None` if some fiber is not
/// divisible.
pub fn line_cofactor<T: Scalar>(f: &LaurentPoly<T>, v: Direction, phi: &UniPoly<T>) -> Result<Option<LaurentPoly<T>>> {
    let fibers = fiber_set(f, v)?;
    let mut out = LaurentPoly::zero();
    for class in &fibers.classes {
        let Some(q) = class.normal_form.div_exact(phi) else {
            return Ok(None);
        };
        out = &out + &line_polynomial(v, &q).shift(class.base);
    }
    Ok(Some(out))
}

/// How `f - t` behaves in one candidate direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionCritical<T: Scalar> {
    /// No value of `t` produces a factor in this direction.
    NoCriticalT,
    /// All fibers lie on the origin line: `f - t` is itself a line polynomial
    /// for all but finitely many `t`.
    AllT,
    /// Factors appear exactly at the roots of `resultant`; its rational roots
    /// are `values` and `residual` is the part without rational roots.
    Critical { witness: UniPoly<T>, resultant: Option<UniPoly<T>>, values: BTreeSet<Ratio<T>>, residual: UniPoly<T> },
}

impl<T: Scalar> DirectionCritical<T> {
    pub fn residual_degree(&self) -> usize {
        match self {
            DirectionCritical::Critical { residual, .. } => residual.degree().unwrap_or(0),
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalSet<T: Scalar> {
    /// `f - t` has no line polynomial factors for any complex `t`.
    NoneForAnyT,
    /// Factors occur only at this rational value.
    OnlyAt(Ratio<T>),
    /// Factors occur only at these (two or more) rational values.
    Finite(BTreeSet<Ratio<T>>),
    /// Some resultant has roots that are not rational, so the critical values
    /// are not all certified. `known` lists the rational ones.
    Unresolved { known: BTreeSet<Ratio<T>>, residuals: Vec<(Direction, UniPoly<T>)> },
    /// Some direction has factors for all but finitely many `t`.
    AllT,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalTReport<T: Scalar> {
    pub per_direction: BTreeMap<Direction, DirectionCritical<T>>,
    pub global: CriticalSet<T>,
}

impl<T: Scalar> CriticalTReport<T> {
    /// Whether `t` is a certified critical value (for `Unresolved`, one of the
    /// known rational ones).
    pub fn contains(&self, t: &Ratio<T>) -> bool {
        match &self.global {
            CriticalSet::NoneForAnyT => false,
            CriticalSet::OnlyAt(t0) => t0 == t,
            CriticalSet::Finite(set) | CriticalSet::Unresolved { known: set, .. } => set.contains(t),
            CriticalSet::AllT => true,
        }
    }
}

/// Critical values for the neighborhood polynomial `f_D - t`.
pub fn critical_t<T: Scalar>(shape: &Shape) -> Result<CriticalTReport<T>> {
    critical_t_poly(&LaurentPoly::characteristic(shape)?)
}

/// Values of `t` for which `f - t` has a line polynomial factor.
///
/// Per candidate direction `v`: the fibers avoiding the origin do not depend on
/// `t`; let `g` be their gcd. If `g` is constant no factor is possible. If the
/// origin fiber is the constant `c0` (or absent, `c0 = 0`), the only critical
/// value is `c0`. Otherwise the origin fiber is `L(s) - t` and the critical
/// values are the roots of `Res_s(g, s^N (L(s) - t))`.
pub fn critical_t_poly<T: Scalar>(f: &LaurentPoly<T>) -> Result<CriticalTReport<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut with_origin = f.support();
    let mut without_origin = with_origin.clone();
    with_origin.insert(Exponent::ORIGIN);
    without_origin.remove(&Exponent::ORIGIN);
    let mut candidates = edge_pair_directions(&with_origin)?;
    if !without_origin.is_empty() {
        candidates.extend(edge_pair_directions(&without_origin)?);
    }

    let mut per_direction = BTreeMap::new();
    for v in candidates {
        per_direction.insert(v, analyze_direction(f, v)?);
    }
    let global = assemble(&per_direction);
    Ok(CriticalTReport { per_direction, global })
}

fn analyze_direction<T: Scalar>(f: &LaurentPoly<T>, v: Direction) -> Result<DirectionCritical<T>> {
    let fibers = fiber_set(f, v)?;
    let off = fibers.off_origin();
    let Some(witness) = gcd_all(off.iter())? else {
        return Ok(DirectionCritical::AllT);
    };
    if witness.is_constant() {
        return Ok(DirectionCritical::NoCriticalT);
    }
    let coords = LineCoords::new(v);
    let origin_terms: BTreeMap<i64, T> = f
        .terms()
        .filter_map(|(e, c)| {
            let (line, pos) = coords.split(e);
            (line == 0).then(|| (pos, c.clone()))
        })
        .collect();
    let only_constant = origin_terms.keys().all(|&pos| pos == 0);
    if only_constant {
        let c0 = origin_terms.get(&0).cloned().unwrap_or_else(T::zero);
        return Ok(DirectionCritical::Critical {
            witness,
            resultant: None,
            values: [Ratio::from_integer(c0)].into_iter().collect(),
            residual: UniPoly::one(),
        });
    }
    // H(s, t) = s^N (L(s) - t) with N clearing negative positions.
    let lo = origin_terms.keys().next().copied().unwrap_or(0).min(0);
    let hi = origin_terms.keys().next_back().copied().unwrap_or(0).max(0);
    let shift = -lo;
    let mut coeffs: Vec<UniPoly<T>> =
        (lo..=hi).map(|pos| UniPoly::constant(origin_terms.get(&pos).cloned().unwrap_or_else(T::zero))).collect();
    let at_origin = shift as usize;
    coeffs[at_origin] = &coeffs[at_origin] - &UniPoly::var();
    let h = ParamUniPoly::new(coeffs);
    let resultant = resultant_param(&witness, &h)?;
    if resultant.is_zero() {
        return Ok(DirectionCritical::AllT);
    }
    let roots = rational_roots(&resultant)?;
    Ok(DirectionCritical::Critical {
        witness,
        resultant: Some(resultant),
        values: roots.roots,
        residual: roots.residual,
    })
}

fn assemble<T: Scalar>(per_direction: &BTreeMap<Direction, DirectionCritical<T>>) -> CriticalSet<T> {
    if per_direction.values().any(|d| matches!(d, DirectionCritical::AllT)) {
        return CriticalSet::AllT;
    }
    let mut known = BTreeSet::new();
    let mut residuals = Vec::new();
    for (v, d) in per_direction {
        if let DirectionCritical::Critical { values, residual, .. } = d {
            known.extend(values.iter().cloned());
            if !residual.is_constant() {
                residuals.push((*v, residual.clone()));
            }
        }
    }
    if !residuals.is_empty() {
        return CriticalSet::Unresolved { known, residuals };
    }
    match known.len() {
        0 => CriticalSet::NoneForAnyT,
        1 => CriticalSet::OnlyAt(known.into_iter().next().expect("one value")),
        _ => CriticalSet::Finite(known),
    }
}

/// Whether two line factor reports cover a single undirected direction.
pub fn single_direction<T>(reports: &[LineFactorReport<T>]) -> Option<Direction> {
    let dirs: BTreeSet<Direction> = reports.iter().map(|r| r.direction.normalized()).collect();
    (dirs.len() == 1).then(|| *dirs.iter().next().expect("one direction"))
}

/// gcd of the fibers excluding the origin line, exposed for reporting.
pub fn off_origin_gcd<T: Scalar>(f: &LaurentPoly<T>, v: Direction) -> Result<Option<UniPoly<T>>> {
    let fibers = fiber_set(f, v)?;
    let off = fibers.off_origin();
    gcd_all(off.iter())
}
