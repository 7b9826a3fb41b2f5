//! Univariate integer polynomials: primitive gcds, cyclotomic polynomials,
//! rational roots, fraction-free determinants and resultants whose
//! coefficients are themselves polynomials in an auxiliary variable `t`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

use crate::{Error, Result, Scalar};

/// Dense univariate polynomial `c_0 + c_1 t + … + c_n t^n`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_ratio(&self, x: &Ratio<T>) -> Ratio<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Ratio::from_integer(T::zero()), |acc, c| acc * x.clone() + Ratio::from_integer(c.clone()))
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.lead().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.clone() / content.clone()).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Multiplicity of `t` as a factor.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by the largest power of `t`, so the constant term is nonzero.
    pub fn normal_form(&self) -> Self {
        let k = self.trailing_zeros();
        UniPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Reversal `t^n p(1/t)`, for nonzero constant term the normal form of the
    /// same line polynomial read in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs).normal_form()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1)·p mod d`, computed in the
    /// integers.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo-division by zero");
        let dd = d.coeffs.len() - 1;
        let lc = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = r[top].clone();
            for x in r.iter_mut() {
                *x = x.clone() * lc.clone();
            }
            let off = top - dd;
            for (k, dk) in d.coeffs.iter().enumerate() {
                r[off + k] = r[off + k].clone() - c.clone() * dk.clone();
            }
            // leading entry is now zero
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly { coeffs: r }
    }

    /// Quotient `self / d` if `d` divides `self` with an integral quotient.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len() - dd];
        for off in (0..q.len()).rev() {
            let top = r[off + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (k, dk) in d.coeffs.iter().enumerate() {
                r[off + k] = r[off + k].clone() - c.clone() * dk.clone();
            }
            q[off] = c;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }
}

impl<T: Scalar> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for UniPoly<T> {
            type Output = UniPoly<T>;
            fn $m(self, rhs: UniPoly<T>) -> UniPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{abs}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Gcd over the rationals, returned as a primitive integer polynomial with
/// positive leading coefficient (the constant `1` for coprime inputs).
pub fn gcd_primitive<T: Scalar>(p: &UniPoly<T>, q: &UniPoly<T>) -> Result<UniPoly<T>> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) => return Ok(unit_if_constant(q.primitive_part())),
        (false, true) => return Ok(unit_if_constant(p.primitive_part())),
        _ => {}
    }
    let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.is_constant() {
            return Ok(UniPoly::one());
        }
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    Ok(unit_if_constant(a))
}

fn unit_if_constant<T: Scalar>(p: UniPoly<T>) -> UniPoly<T> {
    if p.is_constant() {
        UniPoly::one()
    } else {
        p
    }
}

/// Folds [`gcd_primitive`] over a collection; `None` for an empty collection.
pub fn gcd_all<'a, T: Scalar, I>(polys: I) -> Result<Option<UniPoly<T>>>
where
    I: IntoIterator<Item = &'a UniPoly<T>>,
{
    let mut acc: Option<UniPoly<T>> = None;
    for p in polys {
        acc = Some(match acc {
            None => gcd_primitive(p, &UniPoly::zero())?,
            Some(g) if g.is_one() => return Ok(Some(g)),
            Some(g) => gcd_primitive(&g, p)?,
        });
    }
    Ok(acc)
}

/// `φ_n = 1 + t + … + t^(n-1)`.
pub fn phi<T: Scalar>(n: usize) -> Result<UniPoly<T>> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    Ok(UniPoly::new(vec![T::one(); n]))
}

/// The `d`-th cyclotomic polynomial, by exact division of `t^d - 1` by the
/// cyclotomic polynomials of the proper divisors of `d`.
pub fn cyclotomic<T: Scalar>(d: usize) -> Result<UniPoly<T>> {
    if d == 0 {
        return Err(Error::NonPositive(0));
    }
    let divisors: Vec<usize> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut table: Vec<(usize, UniPoly<T>)> = Vec::with_capacity(divisors.len());
    for &e in &divisors {
        let mut q = &UniPoly::monomial(T::one(), e) - &UniPoly::one();
        for (f, phi_f) in &table {
            if e % f == 0 {
                q = q.div_exact(phi_f).ok_or(Error::InexactDivision)?;
            }
        }
        table.push((e, q));
    }
    Ok(table.pop().expect("d is its own divisor").1)
}

/// Rational roots of a polynomial together with what is left after dividing
/// out every linear factor found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots<T: Scalar> {
    pub roots: BTreeSet<Ratio<T>>,
    /// Primitive, positive leading coefficient; `1` when `p` splits into
    /// rational linear factors.
    pub residual: UniPoly<T>,
}

/// Finds all rational roots by testing `±a/b` with `a | c_0` and `b | c_n`.
pub fn rational_roots<T: Scalar>(p: &UniPoly<T>) -> Result<RationalRoots<T>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = BTreeSet::new();
    let mut q = p.primitive_part();
    if q.trailing_zeros() > 0 {
        roots.insert(Ratio::from_integer(T::zero()));
        q = q.normal_form();
    }
    if !q.is_constant() {
        let nums = divisors(&q.coeffs[0]);
        let dens = divisors(q.lead().expect("nonzero"));
        let mut candidates = BTreeSet::new();
        for a in &nums {
            for b in &dens {
                candidates.insert(Ratio::new(a.clone(), b.clone()));
                candidates.insert(Ratio::new(-a.clone(), b.clone()));
            }
        }
        for r in candidates {
            if q.is_constant() {
                break;
            }
            let linear = linear_factor(&r);
            let mut hit = false;
            while let Some(next) = q.div_exact(&linear) {
                q = next;
                hit = true;
            }
            if hit {
                roots.insert(r);
            }
        }
    }
    Ok(RationalRoots { roots, residual: unit_if_constant(q.primitive_part()) })
}

/// Primitive linear polynomial `den·t - num` vanishing at `r`.
pub fn linear_factor<T: Scalar>(r: &Ratio<T>) -> UniPoly<T> {
    UniPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

/// `Some(e)` iff `p = c·(t - t0)^e` for a nonzero constant `c`.
pub fn is_power_of_linear<T: Scalar>(p: &UniPoly<T>, t0: &Ratio<T>) -> Option<u32> {
    if p.is_zero() {
        return None;
    }
    let linear = linear_factor(t0);
    let mut q = p.clone();
    let mut e = 0;
    while let Some(next) = q.div_exact(&linear) {
        q = next;
        e += 1;
    }
    q.is_constant().then_some(e)
}

/// Positive divisors of `|n|` by trial division (`n ≠ 0`).
fn divisors<T: Scalar>(n: &T) -> Vec<T> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = T::one();
    while d.clone() * d.clone() <= n {
        if n.is_multiple_of(&d) {
            let other = n.clone() / d.clone();
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d = d + T::one();
    }
    small.extend(large.into_iter().rev());
    small
}

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination. Every division in the recurrence is exact; a nonzero
/// remainder means an arithmetic bug and is reported as an error.
pub fn bareiss_det<T: Scalar>(m: &[Vec<UniPoly<T>>]) -> Result<UniPoly<T>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(UniPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).ok_or(Error::InexactDivision)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Integer determinant through [`bareiss_det`] on constant polynomials.
pub fn det_scalar<T: Scalar>(m: &[Vec<T>]) -> Result<T> {
    let lifted: Vec<Vec<UniPoly<T>>> =
        m.iter().map(|row| row.iter().cloned().map(UniPoly::constant).collect()).collect();
    Ok(bareiss_det(&lifted)?.coeff(0))
}

/// Polynomial in `s` whose coefficients are integer polynomials in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamUniPoly<T> {
    coeffs: Vec<UniPoly<T>>,
}

impl<T: Scalar> ParamUniPoly<T> {
    pub fn new(mut coeffs: Vec<UniPoly<T>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ParamUniPoly { coeffs }
    }

    /// Embeds a polynomial in `s` with constant coefficients.
    pub fn from_constant_coeffs(p: &UniPoly<T>) -> Self {
        Self::new(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly<T>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Specializes `t` to an integer.
    pub fn eval_t(&self, t: &T) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(t)).collect())
    }
}

/// Resultant with respect to `s` of `g(s)` and `H(s, t)`: the determinant of
/// their Sylvester matrix, a polynomial in `t` that vanishes exactly where
/// `g` and `H(·, t)` share a root.
pub fn resultant_param<T: Scalar>(g: &UniPoly<T>, h: &ParamUniPoly<T>) -> Result<UniPoly<T>> {
    let m = match g.degree() {
        Some(m) if m >= 1 => m,
        _ => return Err(Error::ConstantResultant),
    };
    let n = match h.degree() {
        None => return Ok(UniPoly::zero()),
        Some(0) => return Ok(h.coeffs[0].pow(m as u32)),
        Some(n) => n,
    };
    let size = m + n;
    let mut rows = vec![vec![UniPoly::zero(); size]; size];
    for (i, row) in rows.iter_mut().take(n).enumerate() {
        for k in 0..=m {
            row[i + m - k] = UniPoly::constant(g.coeff(k));
        }
    }
    for (i, row) in rows.iter_mut().skip(n).enumerate() {
        for k in 0..=n {
            row[i + n - k] = h.coeffs[k].clone();
        }
    }
    bareiss_det(&rows)
}
