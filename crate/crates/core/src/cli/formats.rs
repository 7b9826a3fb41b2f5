//! File formats.
//!
//! * Shape: JSON list of `[i, j]` offsets, e.g. `[[0,0],[1,0],[0,1]]`.
//! * Matrix: JSON list of `n` rows of `n` non-negative integers, entry
//!   `[i][j]` being the number of cells of color `i` around a cell of color `j`.
//! * Configuration: text rows of `0-9a-z` characters, top row first (the top
//!   row has `y = h - 1`). This caps the alphabet at 36 colors.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::perfect::{ColoringMatrix, TorusConfig};
use crate::poly2::{Exponent, Shape};
use crate::unipoly::UniPoly;
use crate::{Direction, Error, Rational, Result};

fn json_err(e: serde_json::Error) -> Error {
    Error::Format(format!("invalid JSON: {e}"))
}

pub fn parse_shape(text: &str) -> Result<Shape> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    let items = value.as_array().ok_or_else(|| Error::Format("shape must be a JSON list of [i, j] pairs".into()))?;
    let mut offsets = Vec::with_capacity(items.len());
    for item in items {
        let pair = item
            .as_array()
            .filter(|p| p.len() == 2)
            .and_then(|p| Some(Exponent::new(p[0].as_i64()?, p[1].as_i64()?)))
            .ok_or_else(|| Error::Format(format!("shape entry {item} is not an integer pair")))?;
        offsets.push(pair);
    }
    if offsets.is_empty() {
        return Err(Error::EmptyShape);
    }
    Shape::new(offsets)
}

pub fn parse_matrix(text: &str) -> Result<ColoringMatrix> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    let rows = value.as_array().ok_or_else(|| Error::Format("matrix must be a JSON list of rows".into()))?;
    let entries = rows
        .iter()
        .map(|row| {
            row.as_array()
                .and_then(|r| r.iter().map(Value::as_u64).collect::<Option<Vec<u64>>>())
                .ok_or_else(|| Error::Format(format!("matrix row {row} is not a list of non-negative integers")))
        })
        .collect::<Result<Vec<_>>>()?;
    ColoringMatrix::new(entries)
}

pub fn parse_config(text: &str, colors: Option<usize>) -> Result<TorusConfig> {
    if let Some(n) = colors {
        if n == 0 || n > 36 {
            return Err(Error::InvalidConfig(format!("alphabet size {n} not in 1..=36")));
        }
    }
    TorusConfig::from_text(text, colors)
}

/// An integer as a JSON number when it fits in 64 bits, else as a string.
pub fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

pub fn coeffs_json(p: &UniPoly<BigInt>) -> Value {
    Value::Array(p.coeffs().iter().map(int_json).collect())
}

pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn direction_json(v: Direction) -> Value {
    json!([v.p(), v.q()])
}

pub fn exponent_json(e: Exponent) -> Value {
    json!([e.i, e.j])
}

pub fn shape_json(shape: &Shape) -> Value {
    Value::Array(shape.iter().map(exponent_json).collect())
}

pub fn config_json(c: &TorusConfig) -> Value {
    let rows: Vec<String> = c.to_text().lines().map(str::to_string).collect();
    json!({ "width": c.width(), "height": c.height(), "colors": c.alphabet(), "rows": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = parse_shape("[[0,0],[1,0],[0,-1]]").unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(Exponent::new(0, -1)));
        assert_eq!(parse_shape("[]"), Err(Error::EmptyShape));
        assert!(matches!(parse_shape("[[0,0],[0,0]]"), Err(Error::DuplicateOffset(_))));
        assert!(matches!(parse_shape("[[0,0,1]]"), Err(Error::Format(_))));
        assert!(matches!(parse_shape("{"), Err(Error::Format(_))));
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("[[1,4],[4,1]]").unwrap();
        assert_eq!(m.get(0, 1), 4);
        assert_eq!(parse_matrix("[[1,4]]"), Err(Error::NotSquare));
        assert!(matches!(parse_matrix("[[1,-4],[4,1]]"), Err(Error::Format(_))));
    }

    #[test]
    fn configs() {
        let c = parse_config("01\n10\n", None).unwrap();
        assert_eq!(c.colors(), &[1, 0, 0, 1]);
        assert!(parse_config("01\n", Some(37)).is_err());
        assert!(parse_config("03\n", Some(2)).is_err());
    }
}
