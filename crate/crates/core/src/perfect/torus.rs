use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly2::{Exponent, LaurentPoly, Shape};
use crate::{Error, Result};

/// A coloring of the `w × h` torus, standing for the configuration of `Z²`
/// with periods `(w, 0)` and `(0, h)`. Cells are stored row-major, cell
/// `(x, y)` at index `y·w + x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusConfig {
    width: usize,
    height: usize,
    alphabet: usize,
    colors: Vec<u8>,
}

impl TorusConfig {
    pub fn new(width: usize, height: usize, alphabet: usize, colors: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidConfig("torus dimensions must be positive".into()));
        }
        if alphabet == 0 || alphabet > 256 {
            return Err(Error::InvalidConfig(format!("alphabet size {alphabet} out of range")));
        }
        if colors.len() != width * height {
            return Err(Error::InvalidConfig(format!(
                "expected {} cells for a {width}x{height} torus, got {}",
                width * height,
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| usize::from(c) >= alphabet) {
            return Err(Error::InvalidConfig(format!("color {c} outside alphabet of size {alphabet}")));
        }
        Ok(TorusConfig { width, height, alphabet, colors })
    }

    /// Builds a configuration from a function of the cell coordinates.
    pub fn from_fn(width: usize, height: usize, alphabet: usize, f: impl Fn(usize, usize) -> u8) -> Result<Self> {
        let colors = (0..height).flat_map(|y| (0..width).map(move |x| (x, y))).map(|(x, y)| f(x, y)).collect();
        TorusConfig::new(width, height, alphabet, colors)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn cells(&self) -> usize {
        self.colors.len()
    }

    /// Index of the cell `(x, y)` reduced modulo the torus.
    pub fn index(&self, x: i64, y: i64) -> usize {
        let x = x.rem_euclid(self.width as i64) as usize;
        let y = y.rem_euclid(self.height as i64) as usize;
        y * self.width + x
    }

    pub fn get(&self, x: i64, y: i64) -> u8 {
        self.colors[self.index(x, y)]
    }

    /// The configuration `c'(u) = c(u + t)`.
    pub fn translate(&self, t: Exponent) -> TorusConfig {
        let colors = (0..self.height as i64)
            .flat_map(|y| (0..self.width as i64).map(move |x| (x, y)))
            .map(|(x, y)| self.get(x + t.i, y + t.j))
            .collect();
        TorusConfig { colors, ..self.clone() }
    }

    /// Indices of the neighborhood cells `cell + u`, `u ∈ D`, in offset order.
    pub(crate) fn window(&self, shape: &Shape, cell: usize) -> impl Iterator<Item = usize> + '_ {
        let (x, y) = ((cell % self.width) as i64, (cell / self.width) as i64);
        shape.offsets().iter().map(move |u| self.index(x + u.i, y + u.j)).collect::<Vec<_>>().into_iter()
    }
}

/// Pairs of offsets of `D` that coincide modulo the torus. Counts taken on
/// such a torus include every offset separately, which is exactly the count in
/// the doubly periodic configuration of `Z²`; the list is informational.
pub fn offset_collisions(shape: &Shape, width: usize, height: usize) -> Vec<(Exponent, Exponent)> {
    let mut first: BTreeMap<(i64, i64), Exponent> = BTreeMap::new();
    let mut out = Vec::new();
    for u in shape.iter() {
        let key = (u.i.rem_euclid(width as i64), u.j.rem_euclid(height as i64));
        match first.get(&key) {
            Some(&v) => out.push((v, u)),
            None => {
                first.insert(key, u);
            }
        }
    }
    out
}

/// Number of cells of each color in the `D`-neighborhood of `cell`.
pub fn neighborhood_counts(c: &TorusConfig, shape: &Shape, cell: (usize, usize)) -> Vec<usize> {
    let mut counts = vec![0; c.alphabet];
    for k in c.window(shape, c.index(cell.0 as i64, cell.1 as i64)) {
        counts[usize::from(c.colors[k])] += 1;
    }
    counts
}

fn all_counts(c: &TorusConfig, shape: &Shape) -> Vec<Vec<usize>> {
    (0..c.height)
        .flat_map(|y| (0..c.width).map(move |x| (x, y)))
        .map(|cell| neighborhood_counts(c, shape, cell))
        .collect()
}

/// The matrix `B` of a perfect coloring: `b[i][j]` is the number of cells of
/// color `i` in the neighborhood of a cell of color `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringMatrix {
    entries: Vec<Vec<u64>>,
}

impl ColoringMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(ColoringMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        self.entries.iter().map(|row| row[j]).collect()
    }

    pub fn column_sum(&self, j: usize) -> u64 {
        self.entries.iter().map(|row| row[j]).sum()
    }

    /// Checks that every column sums to `|D|`.
    pub fn check_shape_size(&self, shape_size: usize) -> Result<()> {
        for j in 0..self.size() {
            let found = self.column_sum(j);
            if found != shape_size as u64 {
                return Err(Error::MatrixInconsistent { column: j, expected: shape_size, found });
            }
        }
        Ok(())
    }

    pub fn to_bigint(&self) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }
}

/// Result of [`extract_matrix`]: one column per color, `None` for colors that
/// do not occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedMatrix {
    pub columns: Vec<Option<Vec<u64>>>,
}

impl ExtractedMatrix {
    pub fn absent_colors(&self) -> Vec<usize> {
        self.columns.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(j, _)| j).collect()
    }

    /// The full matrix when every color occurs.
    pub fn matrix(&self) -> Option<ColoringMatrix> {
        let cols: Vec<&Vec<u64>> = self.columns.iter().map(|c| c.as_ref()).collect::<Option<_>>()?;
        let n = cols.len();
        let entries = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
        ColoringMatrix::new(entries).ok()
    }
}

/// The matrix of `c` if it is `D`-perfect, i.e. the neighborhood counts of a
/// cell depend only on its color.
pub fn extract_matrix(c: &TorusConfig, shape: &Shape) -> Option<ExtractedMatrix> {
    let mut columns: Vec<Option<Vec<u64>>> = vec![None; c.alphabet];
    for (cell, counts) in all_counts(c, shape).into_iter().enumerate() {
        let counts: Vec<u64> = counts.into_iter().map(|v| v as u64).collect();
        let slot = &mut columns[usize::from(c.colors[cell])];
        match slot {
            Some(existing) if *existing != counts => return None,
            Some(_) => {}
            None => *slot = Some(counts),
        }
    }
    Some(ExtractedMatrix { columns })
}

fn require_binary(c: &TorusConfig) -> Result<()> {
    if c.alphabet != 2 {
        return Err(Error::NonBinary(c.alphabet));
    }
    Ok(())
}

/// Whether `c` is a `(D, b, a)`-covering: cells of color 1 see exactly `b`
/// ones and cells of color 0 exactly `a` ones in their neighborhood.
pub fn verify_covering(c: &TorusConfig, shape: &Shape, b: u64, a: u64) -> Result<bool> {
    require_binary(c)?;
    Ok(all_counts(c, shape).iter().zip(&c.colors).all(|(counts, &color)| {
        let want = if color == 1 { b } else { a };
        counts[1] as u64 == want
    }))
}

/// Checks `(f_D - (b - a))·c = a·𝟙` by multiplying the polynomial of one
/// period of `c` with `f_D - (b - a)` and folding the product onto the torus.
pub fn convolution_identity(c: &TorusConfig, shape: &Shape, b: u64, a: u64) -> Result<bool> {
    require_binary(c)?;
    let period = LaurentPoly::from_terms(
        (0..c.height)
            .flat_map(|y| (0..c.width).map(move |x| (x, y)))
            .filter(|&(x, y)| c.colors[y * c.width + x] == 1)
            .map(|(x, y)| (Exponent::new(x as i64, y as i64), BigInt::from(1))),
    );
    let delta = BigInt::from(b) - BigInt::from(a);
    let g = LaurentPoly::characteristic(shape)?.minus_constant(&delta);
    let product = &g * &period;
    let mut folded = vec![BigInt::zero(); c.cells()];
    for (e, coeff) in product.terms() {
        folded[c.index(e.i, e.j)] += coeff;
    }
    let a = BigInt::from(a);
    Ok(folded.iter().all(|v| *v == a))
}

/// Number of distinct neighborhood count vectors over all cells.
pub fn abelian_complexity(c: &TorusConfig, shape: &Shape) -> usize {
    all_counts(c, shape).into_iter().collect::<BTreeSet<_>>().len()
}

/// Number of distinct `D`-patterns (color tuples in offset order).
pub fn pattern_complexity(c: &TorusConfig, shape: &Shape) -> usize {
    (0..c.cells())
        .map(|cell| c.window(shape, cell).map(|k| c.colors[k]).collect::<Vec<_>>())
        .collect::<BTreeSet<_>>()
        .len()
}

/// All nonzero `(dx, dy)` with `0 ≤ dx < w`, `0 ≤ dy < h` leaving `c` invariant.
pub fn minimal_periods(c: &TorusConfig) -> Vec<Exponent> {
    (0..c.height as i64)
        .flat_map(|dy| (0..c.width as i64).map(move |dx| Exponent::new(dx, dy)))
        .filter(|&t| t != Exponent::ORIGIN && c.translate(t) == *c)
        .collect()
}

/// Character used for a color in the text format (`0-9` then `a-z`).
pub(crate) fn color_char(color: u8) -> char {
    char::from_digit(u32::from(color), 36).expect("color below 36")
}

impl TorusConfig {
    /// Rows from the top (`y = h - 1`) down, one character per cell.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.width + 1) * self.height);
        for y in (0..self.height).rev() {
            out.extend(self.colors[y * self.width..(y + 1) * self.width].iter().map(|&c| color_char(c)));
            out.push('\n');
        }
        out
    }

    /// Parses the text format; `alphabet` defaults to one more than the
    /// largest color present.
    pub fn from_text(text: &str, alphabet: Option<usize>) -> Result<Self> {
        let rows: Vec<&str> = text.lines().map(str::trim_end).filter(|l| !l.is_empty()).collect();
        if rows.is_empty() {
            return Err(Error::InvalidConfig("empty configuration".into()));
        }
        let width = rows[0].chars().count();
        let mut colors = vec![0u8; width * rows.len()];
        let height = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.chars().count() != width {
                return Err(Error::InvalidConfig(format!(
                    "row {} has length {}, expected {width}",
                    r + 1,
                    row.chars().count()
                )));
            }
            let y = height - 1 - r;
            for (x, ch) in row.chars().enumerate() {
                let v = ch
                    .to_digit(36)
                    .filter(|_| !ch.is_ascii_uppercase())
                    .ok_or_else(|| Error::InvalidConfig(format!("invalid color '{ch}' in row {}", r + 1)))?;
                colors[y * width + x] = v as u8;
            }
        }
        let max = colors.iter().copied().max().unwrap_or(0);
        TorusConfig::new(width, height, alphabet.unwrap_or(usize::from(max) + 1), colors)
    }
}
