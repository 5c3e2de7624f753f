//! Fano polygons and the invariants of their spanning fans.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cone::{Cone2, QuotientSingularityType, Residue};
use crate::error::{Error, Result};
use crate::hj::a_correction;
use crate::lattice::{gcd, is_primitive, LatticePoint, Rational, UnimodularMap};

/// A convex lattice polygon with primitive vertices and the origin in its
/// strict interior. Vertices are stored counterclockwise, starting from the
/// lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPolygon {
    vertices: Vec<LatticePoint>,
}

/// Singularity content of a polygon: total elementary-T count and the
/// cyclically ordered residual basket (empty residues omitted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSingularityContent {
    pub n: BigInt,
    pub basket: Vec<QuotientSingularityType>,
}

/// Basket equality mode. The residual basket is a cyclic list; rotation
/// equality is the default, multiset equality is the coarser fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasketComparison {
    CyclicRotation,
    Multiset,
}

/// A convex polygon with rational vertices (the dual of a Fano polygon).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon {
    vertices: Vec<(Rational, Rational)>,
}

/// Weights of a (possibly fake) weighted projective plane, ascending, plus
/// the index of the sublattice spanned by the vertices (1 = genuine).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpsWeights {
    pub weights: [BigInt; 3],
    pub index: BigInt,
}

fn cross(o: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> BigInt {
    (a - o).det(&(b - o))
}

/// Strict convex hull, counterclockwise; collinear and interior points are
/// dropped. Errors when the points span less than the plane.
fn convex_hull(mut points: Vec<LatticePoint>) -> Result<Vec<LatticePoint>> {
    points.sort();
    points.dedup();
    if points.len() < 3 {
        return Err(Error::NotConvex);
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).sign()
                != num_bigint::Sign::Plus
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).sign()
                != num_bigint::Sign::Plus
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::NotConvex);
    }
    Ok(lower)
}

impl FanoPolygon {
    /// Validates a vertex set: convex hull, origin strictly interior, all
    /// hull vertices primitive. Redundant input points are dropped and the
    /// cycle is rotated to a canonical start.
    pub fn new(points: Vec<LatticePoint>) -> Result<Self> {
        let mut hull = convex_hull(points)?;
        for i in 0..hull.len() {
            let j = (i + 1) % hull.len();
            if hull[i].det(&hull[j]).sign() != num_bigint::Sign::Plus {
                return Err(Error::OriginNotInterior);
            }
        }
        for v in &hull {
            if !is_primitive(v) {
                return Err(Error::NonPrimitiveVertex(v.to_string()));
            }
        }
        let start = hull
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .unwrap();
        hull.rotate_left(start);
        Ok(FanoPolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cones of the spanning fan, one per edge, in cyclic order.
    pub fn edge_cones(&self) -> Vec<Cone2> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                Cone2::new(self.vertices[i].clone(), self.vertices[(i + 1) % n].clone())
                    .expect("validated polygon yields valid edge cones")
            })
            .collect()
    }

    /// Singularity content `(n, basket)` of the spanning fan.
    pub fn singularity_content(&self) -> PolygonSingularityContent {
        let mut n = BigInt::zero();
        let mut basket = Vec::new();
        for cone in self.edge_cones() {
            let sc = cone.singularity_type().singularity_content();
            n += sc.n;
            if let Residue::Type(t) = sc.residue {
                basket.push(t);
            }
        }
        PolygonSingularityContent { n, basket }
    }

    /// Anticanonical degree via the content formula
    /// `K^2 = 12 - n - sum A(sigma)`.
    pub fn degree(&self) -> Rational {
        let sc = self.singularity_content();
        let mut acc = Rational::from_integer(BigInt::from(12)) - Rational::from_integer(sc.n);
        for sigma in &sc.basket {
            acc -= a_correction(sigma).expect("basket elements are never smooth");
        }
        acc
    }

    /// Anticanonical degree via twice the Euclidean area of the dual
    /// polygon; an independent check on [`FanoPolygon::degree`].
    pub fn degree_oracle(&self) -> Rational {
        let two = Rational::from_integer(BigInt::from(2));
        two * self.dual().area()
    }

    /// Polar dual `{u in M : u(v) >= -1 for all v in P}`, one vertex per edge.
    pub fn dual(&self) -> RationalPolygon {
        let n = self.vertices.len();
        let vertices = (0..n)
            .map(|i| {
                let a = &self.vertices[i];
                let b = &self.vertices[(i + 1) % n];
                let d = a.det(b);
                (
                    Rational::new(&a.y - &b.y, d.clone()),
                    Rational::new(&b.x - &a.x, d),
                )
            })
            .collect();
        RationalPolygon { vertices }
    }

    /// Picard rank of the toric surface: `|V(P)| - 2`.
    pub fn picard_rank(&self) -> usize {
        self.vertices.len() - 2
    }

    /// For triangles: weights `(l1, l2, l3)` with `sum l_i v_i = 0`,
    /// ascending, and the vertex-sublattice index.
    pub fn wps_weights(&self) -> Option<WpsWeights> {
        if self.vertices.len() != 3 {
            return None;
        }
        let (v1, v2, v3) = (&self.vertices[0], &self.vertices[1], &self.vertices[2]);
        let d1 = v2.det(v3);
        let d2 = v3.det(v1);
        let d3 = v1.det(v2);
        let g = gcd(&d1, &gcd(&d2, &d3));
        let l1 = &d1 / &g;
        let l2 = &d2 / &g;
        let l3 = &d3 / &g;
        debug_assert!(
            (&v1.scale(&l1) + &v2.scale(&l2)).x + v3.scale(&l3).x == BigInt::zero()
                && (&v1.scale(&l1) + &v2.scale(&l2)).y + v3.scale(&l3).y == BigInt::zero()
        );
        let mut weights = [l1, l2, l3];
        weights.sort();
        Some(WpsWeights { weights, index: g })
    }

    /// Noether identity `K^2 + rho + sum mu = 10` for polygons whose basket
    /// is empty (all cones are T-singularities or smooth).
    pub fn noether_check(&self) -> Result<bool> {
        let sc = self.singularity_content();
        if !sc.basket.is_empty() {
            return Err(Error::NonEmptyBasket);
        }
        let mut milnor_sum = BigInt::zero();
        for cone in self.edge_cones() {
            let sigma = cone.singularity_type();
            if !sigma.is_smooth() {
                milnor_sum += sigma.milnor_number()?;
            }
        }
        let lhs = self.degree()
            + Rational::from_integer(BigInt::from(self.picard_rank() as i64))
            + Rational::from_integer(milnor_sum);
        Ok(lhs == Rational::from_integer(BigInt::from(10)))
    }

    pub fn apply(&self, m: &UnimodularMap) -> FanoPolygon {
        FanoPolygon::new(self.vertices.iter().map(|v| m.apply(v)).collect())
            .expect("unimodular image of a Fano polygon is Fano")
    }
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

/// Fano triangle of the weighted projective plane `P(l1, l2, l3)` on the
/// full lattice (index 1). Weights must be positive and pairwise coprime.
pub fn wps_triangle(
    l1: impl Into<BigInt>,
    l2: impl Into<BigInt>,
    l3: impl Into<BigInt>,
) -> Result<FanoPolygon> {
    let (l1, l2, l3) = (l1.into(), l2.into(), l3.into());
    for l in [&l1, &l2, &l3] {
        if l.sign() != num_bigint::Sign::Plus {
            return Err(Error::InvalidType(format!("weight {} must be positive", l)));
        }
    }
    for (a, b) in [(&l1, &l2), (&l1, &l3), (&l2, &l3)] {
        if !gcd(a, b).is_one() {
            return Err(Error::InvalidType(format!(
                "weights {} and {} are not coprime",
                a, b
            )));
        }
    }
    // v1 = (1,0), v2 = (x, l3), v3 = (z, -l2) with l2*x + l3*z = -l1.
    let inv = crate::cone::mod_inverse(&l2.mod_floor(&l3), &l3);
    let x = (-&l1 * inv).mod_floor(&l3);
    let z = (-&l1 - &l2 * &x) / &l3;
    FanoPolygon::new(vec![
        LatticePoint::new(1, 0),
        LatticePoint::new(x, l3),
        LatticePoint::new(z, -l2),
    ])
}

impl PolygonSingularityContent {
    pub fn eq_with(&self, other: &PolygonSingularityContent, mode: BasketComparison) -> bool {
        if self.n != other.n {
            return false;
        }
        match mode {
            BasketComparison::CyclicRotation => cyclic_eq(&self.basket, &other.basket),
            BasketComparison::Multiset => {
                let mut a = self.basket.clone();
                let mut b = other.basket.clone();
                a.sort();
                b.sort();
                a == b
            }
        }
    }
}

fn cyclic_eq(a: &[QuotientSingularityType], b: &[QuotientSingularityType]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(i + s) % b.len()]))
}

impl fmt::Display for PolygonSingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.n)?;
        for (i, t) in self.basket.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", t)?;
        }
        write!(f, "}})")
    }
}

impl RationalPolygon {
    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    /// Euclidean area by the shoelace formula (vertices counterclockwise).
    pub fn area(&self) -> Rational {
        let n = self.vertices.len();
        let mut twice = Rational::zero();
        for i in 0..n {
            let (x0, y0) = &self.vertices[i];
            let (x1, y1) = &self.vertices[(i + 1) % n];
            twice += x0 * y1 - x1 * y0;
        }
        debug_assert!(twice.is_positive());
        twice / Rational::from_integer(BigInt::from(2))
    }
}
