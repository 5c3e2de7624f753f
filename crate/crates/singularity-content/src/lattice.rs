//! Exact rank-two lattice geometry.
//!
//! Points live in the lattice `N = Z^2`, dual vectors in `M = Hom(N, Z)`.
//! All coordinates are arbitrary-precision integers; mutation orbits grow
//! coordinates quickly, so nothing here may overflow.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// A point of the lattice `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

/// An element of the dual lattice `M`, paired with `N` by `h(v) = h.x*v.x + h.y*v.y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        LatticePoint::new(0, 0)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Scalar multiple `k * self`.
    pub fn scale(&self, k: &BigInt) -> Self {
        LatticePoint {
            x: k * &self.x,
            y: k * &self.y,
        }
    }

    /// `det(self, other)`, the signed area form.
    pub fn det(&self, other: &LatticePoint) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Divides out the gcd of the coordinates. Returns `None` for the origin.
    pub fn primitivize(&self) -> Option<LatticePoint> {
        if self.is_origin() {
            return None;
        }
        let g = gcd(&self.x, &self.y);
        Some(LatticePoint {
            x: &self.x / &g,
            y: &self.y / &g,
        })
    }
}

impl DualVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        DualVector {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Evaluation pairing `<h, v>`.
    pub fn eval(&self, v: &LatticePoint) -> BigInt {
        &self.x * &v.x + &self.y * &v.y
    }

    pub fn is_primitive(&self) -> bool {
        !(self.x.is_zero() && self.y.is_zero()) && gcd(&self.x, &self.y).is_one()
    }

    /// A fixed primitive generator of `h^perp`: the 90-degree rotation of `h`.
    pub fn perp(&self) -> LatticePoint {
        LatticePoint {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn neg(&self) -> DualVector {
        DualVector {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Non-negative gcd, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// `v` is primitive iff it is nonzero and its coordinates are coprime.
pub fn is_primitive(v: &LatticePoint) -> bool {
    !v.is_origin() && gcd(&v.x, &v.y).is_one()
}

/// Lattice length of the segment `uv`: the integer `L` with `v - u = L * p`,
/// `p` primitive. Zero for a degenerate segment.
pub fn lattice_length(u: &LatticePoint, v: &LatticePoint) -> BigInt {
    let d = v - u;
    gcd(&d.x, &d.y)
}

/// Lattice height of the segment `uv` above the origin, `|det(u, v)| / length(uv)`.
///
/// Fails when `u` and `v` are linearly dependent (degenerate cone).
pub fn lattice_height(u: &LatticePoint, v: &LatticePoint) -> Result<BigInt> {
    let d = u.det(v);
    if d.is_zero() {
        return Err(Error::DegenerateCone);
    }
    let len = lattice_length(u, v);
    if len.is_zero() {
        return Err(Error::DegenerateCone);
    }
    Ok(d.abs() / len)
}

/// A linear map of `N` with determinant +-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularMap {
    pub a11: BigInt,
    pub a12: BigInt,
    pub a21: BigInt,
    pub a22: BigInt,
}

impl UnimodularMap {
    pub fn new(
        a11: impl Into<BigInt>,
        a12: impl Into<BigInt>,
        a21: impl Into<BigInt>,
        a22: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMap {
            a11: a11.into(),
            a12: a12.into(),
            a21: a21.into(),
            a22: a22.into(),
        };
        if !m.det().abs().is_one() {
            return Err(Error::InvalidType(format!(
                "matrix determinant {} is not +-1",
                m.det()
            )));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        UnimodularMap::new(1, 0, 0, 1).unwrap()
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn apply(&self, v: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.a11 * &v.x + &self.a12 * &v.y,
            y: &self.a21 * &v.x + &self.a22 * &v.y,
        }
    }

    /// Completes the primitive vector `v` to a positively oriented basis and
    /// returns the map carrying `v` to `(0, 1)`.
    pub fn sending_to_e2(v: &LatticePoint) -> Result<Self> {
        if !is_primitive(v) {
            return Err(Error::NonPrimitiveVertex(v.to_string()));
        }
        // Rows (v.y, -v.x) and (s, t) with s*v.x + t*v.y = 1 have determinant +1.
        let (_, s, t) = extended_gcd(&v.x, &v.y);
        UnimodularMap::new(v.y.clone(), -v.x.clone(), s, t)
    }

    pub fn inverse(&self) -> UnimodularMap {
        let d = self.det(); // +-1
        UnimodularMap {
            a11: &self.a22 * &d,
            a12: -(&self.a12 * &d),
            a21: -(&self.a21 * &d),
            a22: &self.a11 * &d,
        }
    }

    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        // self o other
        UnimodularMap {
            a11: &self.a11 * &other.a11 + &self.a12 * &other.a21,
            a12: &self.a11 * &other.a12 + &self.a12 * &other.a22,
            a21: &self.a21 * &other.a11 + &self.a22 * &other.a21,
            a22: &self.a21 * &other.a12 + &self.a22 * &other.a22,
        }
    }
}

/// Convenience constructor used pervasively in tests.
pub fn lp(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Brute-force segment length: lattice points on the closed segment, minus one.
    fn segment_length_oracle(u: &LatticePoint, v: &LatticePoint) -> i64 {
        let (ux, uy) = (u.x.to_i64().unwrap(), u.y.to_i64().unwrap());
        let (vx, vy) = (v.x.to_i64().unwrap(), v.y.to_i64().unwrap());
        let (xmin, xmax) = (ux.min(vx), ux.max(vx));
        let (ymin, ymax) = (uy.min(vy), uy.max(vy));
        let mut count = 0i64;
        for x in xmin..=xmax {
            for y in ymin..=ymax {
                // on the segment iff collinear with both endpoints and inside the box
                let cross = (x - ux) * (vy - uy) - (y - uy) * (vx - ux);
                if cross == 0 {
                    count += 1;
                }
            }
        }
        count - 1
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&big(60), &big(24)), big(12));
        assert_eq!(gcd(&big(0), &big(7)), big(7));
        assert_eq!(gcd(&big(-12), &big(18)), big(6));
        assert_eq!(gcd(&big(0), &big(0)), big(0));
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&lp(5, 4)));
        assert!(!is_primitive(&lp(0, 0)));
        assert!(!is_primitive(&lp(2, 4)));
    }

    #[test]
    fn lattice_length_examples() {
        // Standard-position cone of 1/60(1,23); width 12.
        let u = lp(0, 1);
        let v = lp(60, -23);
        assert_eq!(segment_length_oracle(&u, &v), 12);
        assert_eq!(lattice_length(&u, &v), big(12));

        assert_eq!(lattice_length(&lp(0, 0), &lp(0, 0)), big(0));
        assert_eq!(lattice_length(&lp(1, 0), &lp(0, 1)), big(1));
        assert_eq!(segment_length_oracle(&lp(1, 0), &lp(0, 1)), 1);
    }

    #[test]
    fn lattice_height_examples() {
        assert_eq!(lattice_height(&lp(0, 1), &lp(60, -23)).unwrap(), big(5));
        assert_eq!(lattice_height(&lp(1, 0), &lp(0, 1)).unwrap(), big(1));
        assert_eq!(lattice_height(&lp(0, 1), &lp(3, -2)).unwrap(), big(1));
        assert_eq!(lattice_height(&lp(2, 0), &lp(4, 0)), Err(Error::DegenerateCone));
    }

    #[test]
    fn height_agrees_with_primitive_normal() {
        // |<h, u>| for h the primitive normal of v - u must equal |det|/length.
        let cases = [
            (lp(0, 1), lp(60, -23)),
            (lp(0, 1), lp(3, -2)),
            (lp(1, 0), lp(0, 1)),
            (lp(-7, -8), lp(5, 4)),
        ];
        for (u, v) in cases {
            let d = (&v - &u).primitivize().unwrap();
            let h = DualVector::new(-d.y.clone(), d.x.clone());
            assert_eq!(h.eval(&u).abs(), lattice_height(&u, &v).unwrap());
        }
    }

    #[test]
    fn apply_map_examples() {
        let id = UnimodularMap::identity();
        assert_eq!(id.apply(&lp(7, -3)), lp(7, -3));
        let swap = UnimodularMap::new(0, 1, 1, 0).unwrap();
        assert_eq!(swap.apply(&lp(2, 5)), lp(5, 2));
        let shear = UnimodularMap::new(1, 1, 0, 1).unwrap();
        assert_eq!(shear.apply(&lp(1, 0)), lp(1, 0));
    }

    #[test]
    fn non_unimodular_rejected() {
        assert!(UnimodularMap::new(2, 0, 0, 1).is_err());
    }

    #[test]
    fn sending_to_e2_is_unimodular() {
        for (x, y) in [(0i64, 1i64), (60, -23), (3, -2), (-7, -8), (1, 0)] {
            let v = lp(x, y);
            let m = UnimodularMap::sending_to_e2(&v).unwrap();
            assert_eq!(m.apply(&v), lp(0, 1));
            assert_eq!(m.det(), big(1));
        }
    }
}
