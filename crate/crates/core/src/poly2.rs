//! Sparse bivariate Laurent polynomials and lattice shapes.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, Scalar};

/// A lattice point, read as the monomial `x^i y^j`.
///
/// Ordering is lexicographic by `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub i: i64,
    pub j: i64,
}

impl Exponent {
    pub const ORIGIN: Exponent = Exponent { i: 0, j: 0 };

    pub const fn new(i: i64, j: i64) -> Self {
        Exponent { i, j }
    }

    pub fn scale(self, k: i64) -> Self {
        Exponent::new(self.i * k, self.j * k)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent::new(self.i + rhs.i, self.j + rhs.j)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent::new(self.i - rhs.i, self.j - rhs.j)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::new(-self.i, -self.j)
    }
}

impl From<(i64, i64)> for Exponent {
    fn from((i, j): (i64, i64)) -> Self {
        Exponent::new(i, j)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// A finite set of lattice offsets (a relative neighborhood, a tile, ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Shape {
    offsets: BTreeSet<Exponent>,
}

impl Shape {
    /// Builds a shape from distinct offsets. Repeated offsets are rejected since
    /// a neighborhood is a set.
    pub fn new<I: IntoIterator<Item = Exponent>>(offsets: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for u in offsets {
            if !set.insert(u) {
                return Err(Error::DuplicateOffset(u));
            }
        }
        Ok(Shape { offsets: set })
    }

    /// Like [`Shape::new`] but silently merges duplicates.
    pub fn from_set(offsets: BTreeSet<Exponent>) -> Self {
        Shape { offsets }
    }

    pub fn offsets(&self) -> &BTreeSet<Exponent> {
        &self.offsets
    }

    pub fn iter(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.offsets.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn contains(&self, u: Exponent) -> bool {
        self.offsets.contains(&u)
    }

    /// The reflected shape `-D`.
    pub fn reflect(&self) -> Shape {
        Shape { offsets: self.offsets.iter().map(|&u| -u).collect() }
    }

    /// Axis-aligned `w × h` block with lower left corner at the origin.
    pub fn block(w: i64, h: i64) -> Shape {
        let offsets = (0..w).flat_map(|i| (0..h).map(move |j| Exponent::new(i, j))).collect();
        Shape { offsets }
    }
}

impl FromIterator<Exponent> for Shape {
    fn from_iter<I: IntoIterator<Item = Exponent>>(iter: I) -> Self {
        Shape { offsets: iter.into_iter().collect() }
    }
}

/// Sparse Laurent polynomial in `x, y` with coefficients in `T`.
///
/// Zero coefficients are never stored and terms iterate in lexicographic
/// exponent order, so equal polynomials have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<Exponent, T>,
}

impl<T: Scalar> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, Exponent::ORIGIN)
    }

    pub fn monomial(c: T, e: Exponent) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `x^i y^j` with coefficient one.
    pub fn x_pow(i: i64, j: i64) -> Self {
        Self::monomial(T::one(), Exponent::new(i, j))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c·X^e` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponent, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: Exponent) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &T)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().copied().collect()
    }

    /// Characteristic polynomial `Σ_{u∈D} X^{-u}` of a non-empty shape.
    pub fn characteristic(shape: &Shape) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(LaurentPoly { terms: shape.iter().map(|u| (-u, T::one())).collect() })
    }

    /// The `k`-th dilation `f(X^k)`.
    pub fn dilation(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroDilation);
        }
        let k = i64::from(k);
        Ok(LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.scale(k), c.clone())).collect() })
    }

    /// Multiplication by the monomial `X^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(u, c)| (*u + e, c.clone())).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(u, c)| (*u, c.clone() * k.clone())).collect() }
    }

    /// Subtracts `t` from the constant term.
    pub fn minus_constant(&self, t: &T) -> Self {
        let mut p = self.clone();
        p.add_term(Exponent::ORIGIN, -t.clone());
        p
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

/// Prints in the syntax accepted by [`crate::cli::parse_poly`], e.g.
/// `-2*x^-1*y + x - 3`.
impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || *e == Exponent::ORIGIN {
                factors.push(abs.to_string());
            }
            for (var, k) in [("x", e.i), ("y", e.j)] {
                match k {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    k => factors.push(format!("{var}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
