//! Text and JSON formats.
//!
//! Singularity types read and print as `1/r(a,b)`. Polygons travel as JSON
//! objects `{"vertices": [[x, y], ...]}` with exact (arbitrarily large)
//! integer coordinates. Rationals serialize as `p/q` strings in lowest terms
//! with positive denominator, the `/q` omitted when `q = 1`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{Map, Number, Value};

use crate::cone::QuotientSingularityType;
use crate::error::{Error, Result};
use crate::lattice::{DualVector, LatticePoint, Rational};
use crate::polygon::FanoPolygon;

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner { input, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input.as_bytes()[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
    }

    fn expect(&mut self, token: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.input.len() && self.input.as_bytes()[self.pos] == token {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(
                self.pos,
                format!("expected '{}'", char::from(token)),
            ))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.input.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits_start = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return Err(Error::parse(start, "expected an integer"));
        }
        self.pos = end;
        self.input[start..end]
            .parse::<BigInt>()
            .map_err(|e| Error::parse(start, e.to_string()))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.input.len() {
            return Err(Error::parse(self.pos, "trailing input"));
        }
        Ok(())
    }
}

/// Parses `1/r(a,b)`, e.g. `1/60(1,23)`, and canonicalizes.
pub fn parse_singularity_type(input: &str) -> Result<QuotientSingularityType> {
    let mut s = Scanner::new(input);
    s.skip_ws();
    let one = s.integer()?;
    if one != BigInt::from(1) {
        return Err(Error::parse(0, "type must start with '1/'"));
    }
    s.expect(b'/')?;
    let r = s.integer()?;
    s.expect(b'(')?;
    let a = s.integer()?;
    s.expect(b',')?;
    let b = s.integer()?;
    s.expect(b')')?;
    s.finish()?;
    QuotientSingularityType::new(r, a, b)
}

/// Parses a dual vector given as `x,y`.
pub fn parse_dual_vector(input: &str) -> Result<DualVector> {
    let mut s = Scanner::new(input);
    let x = s.integer()?;
    s.expect(b',')?;
    let y = s.integer()?;
    s.finish()?;
    Ok(DualVector { x, y })
}

/// Parses a rational `p/q` or integer `p`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let mut s = Scanner::new(input);
    let p = s.integer()?;
    s.skip_ws();
    if s.pos < s.input.len() && s.input.as_bytes()[s.pos] == b'/' {
        s.pos += 1;
        let qpos = s.pos;
        let q = s.integer()?;
        s.finish()?;
        if q.is_zero() {
            return Err(Error::parse(qpos, "zero denominator"));
        }
        Ok(Rational::new(p, q))
    } else {
        s.finish()?;
        Ok(Rational::from_integer(p))
    }
}

/// Lowest-terms `p/q` rendering, `/q` omitted for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn json_error(input: &str, err: &serde_json::Error) -> Error {
    // serde_json reports 1-based line/column; convert to a byte offset.
    let mut offset = 0usize;
    for (i, line) in input.split('\n').enumerate() {
        if i + 1 == err.line() {
            offset += err.column().saturating_sub(1);
            break;
        }
        offset += line.len() + 1;
    }
    Error::parse(offset, err.to_string())
}

fn number_to_bigint(n: &Number, pos_hint: usize) -> Result<BigInt> {
    let s = n.to_string();
    s.parse::<BigInt>()
        .map_err(|_| Error::parse(pos_hint, format!("coordinate {} is not an integer", s)))
}

/// Parses polygon JSON `{"vertices": [[x, y], ...]}` and validates it.
pub fn polygon_from_json(input: &str) -> Result<FanoPolygon> {
    let value: Value = serde_json::from_str(input).map_err(|e| json_error(input, &e))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse(0, "expected a JSON object"))?;
    let verts = obj
        .get("vertices")
        .ok_or_else(|| Error::parse(0, "missing \"vertices\" field"))?
        .as_array()
        .ok_or_else(|| Error::parse(0, "\"vertices\" must be an array"))?;
    let mut points = Vec::with_capacity(verts.len());
    for v in verts {
        let pair = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::parse(0, "each vertex must be a [x, y] pair"))?;
        let x = pair[0]
            .as_number()
            .ok_or_else(|| Error::parse(0, "vertex coordinates must be integers"))?;
        let y = pair[1]
            .as_number()
            .ok_or_else(|| Error::parse(0, "vertex coordinates must be integers"))?;
        points.push(LatticePoint {
            x: number_to_bigint(x, 0)?,
            y: number_to_bigint(y, 0)?,
        });
    }
    FanoPolygon::new(points)
}

/// JSON value `{"vertices": [[x, y], ...]}` for a polygon.
pub fn polygon_to_json(p: &FanoPolygon) -> Value {
    let verts: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| {
            Value::Array(vec![
                Value::Number(Number::from_string_unchecked(v.x.to_string())),
                Value::Number(Number::from_string_unchecked(v.y.to_string())),
            ])
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("vertices".into(), Value::Array(verts));
    Value::Object(obj)
}
