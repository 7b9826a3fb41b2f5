//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use perfcol::geometry::edge_pair_directions;
use perfcol::perfect::{neighborhood, GridKind, TorusConfig};
use perfcol::poly2::LaurentPoly;
use perfcol::unipoly::UniPoly;
use perfcol::{Direction, Exponent, LaurentPoly2, Shape};
use rand::Rng;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn poly(terms: &[((i64, i64), i64)]) -> LaurentPoly2 {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (Exponent::from(e), int(c))))
}

/// The grid neighborhoods used throughout: three grids, radius 1 to 3.
pub fn grid_shapes() -> Vec<(GridKind, u32, Shape)> {
    GridKind::ALL.iter().flat_map(|&g| (1..=3).map(move |r| (g, r, neighborhood(g, r)))).collect()
}

/// Random polynomial with coefficients in `[-3, 3]` on a `size × size` box
/// offset by `lo`.
pub fn random_poly<R: Rng>(rng: &mut R, lo: i64, size: i64, terms: usize) -> LaurentPoly2 {
    let mut f = LaurentPoly::zero();
    for _ in 0..terms {
        let e = Exponent::new(lo + rng.gen_range(0..size), lo + rng.gen_range(0..size));
        let c = rng.gen_range(-3i64..=3);
        f.add_term(e, int(c));
    }
    f
}

pub fn random_direction<R: Rng>(rng: &mut R, bound: i64) -> Direction {
    loop {
        let (p, q) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if let Ok(v) = Direction::new(p, q) {
            return v;
        }
    }
}

/// Every coloring of the `w × h` torus with `n` colors, in lexicographic
/// order of the row-major color sequence.
pub fn all_configs(w: usize, h: usize, n: usize) -> Vec<TorusConfig> {
    let cells = w * h;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut idx| {
            let mut colors = vec![0u8; cells];
            for slot in colors.iter_mut().rev() {
                *slot = (idx % n) as u8;
                idx /= n;
            }
            TorusConfig::new(w, h, n, colors).unwrap()
        })
        .collect()
}

/// Color of the doubly periodic extension at an arbitrary lattice point.
fn color_at(c: &TorusConfig, x: i64, y: i64) -> u8 {
    let (w, h) = (c.width() as i64, c.height() as i64);
    c.colors()[(y.rem_euclid(h) * w + x.rem_euclid(w)) as usize]
}

/// Ones in the window `(x, y) + D`.
fn ones_around(c: &TorusConfig, shape: &Shape, x: i64, y: i64) -> u64 {
    shape.iter().filter(|u| color_at(c, x + u.i, y + u.j) == 1).count() as u64
}

pub fn oracle_covering(c: &TorusConfig, shape: &Shape, b: u64, a: u64) -> bool {
    (0..c.height() as i64).all(|y| {
        (0..c.width() as i64).all(|x| {
            let want = if color_at(c, x, y) == 1 { b } else { a };
            ones_around(c, shape, x, y) == want
        })
    })
}

/// Perfectness by comparing every pair of same-colored cells.
pub fn oracle_perfect(c: &TorusConfig, shape: &Shape) -> bool {
    let counts = |x: i64, y: i64| -> Vec<usize> {
        let mut v = vec![0; c.alphabet()];
        for u in shape.iter() {
            v[color_at(c, x + u.i, y + u.j) as usize] += 1;
        }
        v
    };
    let cells: Vec<(i64, i64)> =
        (0..c.height() as i64).flat_map(|y| (0..c.width() as i64).map(move |x| (x, y))).collect();
    cells.iter().all(|&(x1, y1)| {
        cells.iter().all(|&(x2, y2)| color_at(c, x1, y1) != color_at(c, x2, y2) || counts(x1, y1) == counts(x2, y2))
    })
}

/// Determinant by Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * laplace_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `Σ c_k X^{k v}`, built without the library helper.
pub fn line_poly(v: Direction, coeffs: &[i64]) -> LaurentPoly2 {
    LaurentPoly::from_terms(
        coeffs.iter().enumerate().map(|(k, &c)| (Exponent::new(v.p() * k as i64, v.q() * k as i64), int(c))),
    )
}

/// Univariate polynomial multiplication on plain coefficient vectors.
pub fn mul_coeffs(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// A line polynomial `ℓ` in direction `v` of degree 1..=4 with nonzero end
/// coefficients, as its coefficient list.
pub fn random_line<R: Rng>(rng: &mut R) -> Vec<i64> {
    let deg = rng.gen_range(1..=4);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
    for k in [0, deg] {
        while c[k] == 0 {
            c[k] = rng.gen_range(-3..=3);
        }
    }
    c
}

/// Normal form of the line polynomial `Σ c_k X^{k v}` read in direction `w = ±v`.
pub fn line_normal_form(v: Direction, w: Direction, c: &[i64]) -> UniPoly<BigInt> {
    let mut c = c.to_vec();
    if w != v {
        c.reverse();
    }
    UniPoly::from_ints(&c).primitive_part()
}

/// Whether some line in direction `v` meets the support of `f` in one point.
pub fn has_monomial_fiber(f: &LaurentPoly2, v: Direction) -> bool {
    let mut per_line: BTreeMap<i64, usize> = BTreeMap::new();
    for e in f.support() {
        *per_line.entry(v.p() * e.j - v.q() * e.i).or_default() += 1;
    }
    per_line.values().any(|&n| n == 1)
}

/// A random polynomial extended until every edge-pair direction of its
/// support has a monomial fiber, so it cannot have line polynomial factors.
pub fn factor_free_poly<R: Rng>(rng: &mut R) -> LaurentPoly2 {
    'retry: loop {
        let mut f = random_poly(rng, 0, 5, 8);
        if f.is_zero() {
            continue;
        }
        for _ in 0..40 {
            let pending: Vec<Direction> = edge_pair_directions(&f.support())
                .unwrap()
                .into_iter()
                .filter(|&v| !has_monomial_fiber(&f, v))
                .collect();
            let Some(&v) = pending.first() else {
                return f;
            };
            let used: BTreeSet<i64> = f.support().iter().map(|e| v.p() * e.j - v.q() * e.i).collect();
            let u = loop {
                let u = Exponent::new(rng.gen_range(-2..=7), rng.gen_range(-2..=7));
                if !used.contains(&(v.p() * u.j - v.q() * u.i)) {
                    break u;
                }
            };
            f.add_term(u, int(rng.gen_range(1..=3)));
        }
        continue 'retry;
    }
}
