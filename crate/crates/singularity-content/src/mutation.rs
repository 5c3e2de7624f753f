//! Combinatorial mutations of Fano polygons.
//!
//! A factor is a primitive segment `conv{0, f}` lying in the hyperplane of a
//! primitive dual vector `h`. Writing `k` for the height `<h, ->`, the
//! mutation removes `|k|` copies of the factor from every lattice slice at
//! negative height and adds `k` copies at positive height:
//!
//! * for `k_min <= k < 0` the slice must contain a lattice segment `G_k`
//!   with `G_k + |k|*conv{0,f}` inside the slice and containing every vertex
//!   at that height; slices with no vertex may contribute nothing;
//! * for `k >= 0` the (rational) slice `S_k` is replaced by `S_k + k*f`.
//!
//! The mutated polygon is the convex hull of all the pieces. It is a theorem
//! that the hull is again a Fano polygon with the same singularity content
//! and degree; this module panics loudly if that ever fails, since it would
//! mean the construction itself is buggy.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{extended_gcd, DualVector, LatticePoint, Rational};
use crate::polygon::{BasketComparison, FanoPolygon};

/// Mutation factor: the segment `conv{0, f}` at level zero of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    h: DualVector,
    f: LatticePoint,
}

impl Factor {
    pub fn new(h: DualVector, f: LatticePoint) -> Result<Self> {
        if !h.is_primitive() {
            return Err(Error::InvalidType(format!("h = {} is not primitive", h)));
        }
        if !crate::lattice::is_primitive(&f) {
            return Err(Error::InvalidType(format!("f = {} is not primitive", f)));
        }
        if !h.eval(&f).is_zero() {
            return Err(Error::InvalidType(format!("<{}, {}> != 0", h, f)));
        }
        Ok(Factor { h, f })
    }

    /// Factor with the fixed generator `f = (-h.y, h.x)` of `h^perp`.
    pub fn from_normal(h: DualVector) -> Result<Self> {
        let f = h.perp();
        Factor::new(h, f)
    }

    /// The factor reversing this mutation.
    pub fn inverse(&self) -> Factor {
        Factor {
            h: self.h.neg(),
            f: self.f.clone(),
        }
    }

    pub fn h(&self) -> &DualVector {
        &self.h
    }

    pub fn f(&self) -> &LatticePoint {
        &self.f
    }
}

/// One slice of the polygon at an integer height, in factor-direction
/// coordinates: lattice points on the slice line sit at integer `t`.
struct Slice {
    t_lo: Rational,
    t_hi: Rational,
    has_vertex: bool,
}

struct Slicer<'a> {
    poly: &'a FanoPolygon,
    heights: Vec<BigInt>,
    /// point with <h, base> = 1; slice k is { k*base + t*f }.
    base: LatticePoint,
    f: LatticePoint,
    /// dual vector with <param, f> = 1, reading off t.
    param: DualVector,
}

impl<'a> Slicer<'a> {
    fn new(poly: &'a FanoPolygon, factor: &Factor) -> Self {
        let h = &factor.h;
        let (_, s, t) = extended_gcd(&h.x, &h.y);
        let base = LatticePoint { x: s, y: t };
        let (_, s, t) = extended_gcd(&factor.f.x, &factor.f.y);
        let param = DualVector { x: s, y: t };
        let heights = poly.vertices().iter().map(|v| h.eval(v)).collect();
        Slicer {
            poly,
            heights,
            base,
            f: factor.f.clone(),
            param,
        }
    }

    fn t_of_lattice(&self, v: &LatticePoint, k: &BigInt) -> BigInt {
        self.param.eval(v) - k * self.param.eval(&self.base)
    }

    /// Rational point `k*base + t*f` as exact coordinates.
    fn point(&self, k: &BigInt, t: &Rational) -> (Rational, Rational) {
        let kx = Rational::from_integer(k * &self.base.x);
        let ky = Rational::from_integer(k * &self.base.y);
        (
            kx + t * Rational::from_integer(self.f.x.clone()),
            ky + t * Rational::from_integer(self.f.y.clone()),
        )
    }

    fn slice(&self, k: &BigInt) -> Option<Slice> {
        let verts = self.poly.vertices();
        let n = verts.len();
        let mut t_lo: Option<Rational> = None;
        let mut t_hi: Option<Rational> = None;
        let mut has_vertex = false;
        let push = |t: Rational, lo: &mut Option<Rational>, hi: &mut Option<Rational>| {
            if lo.as_ref().is_none_or(|v| &t < v) {
                *lo = Some(t.clone());
            }
            if hi.as_ref().is_none_or(|v| &t > v) {
                *hi = Some(t);
            }
        };
        for i in 0..n {
            let (a, b) = (&verts[i], &verts[(i + 1) % n]);
            let (ka, kb) = (&self.heights[i], &self.heights[(i + 1) % n]);
            if ka == k {
                has_vertex = true;
                push(
                    Rational::from_integer(self.t_of_lattice(a, k)),
                    &mut t_lo,
                    &mut t_hi,
                );
            }
            if (ka < k && k < kb) || (kb < k && k < ka) {
                // t(P) = param(P) - h(P)*param(base) is affine on the plane,
                // so interpolating endpoint values along the edge is exact.
                let ta = Rational::from_integer(self.t_of_lattice(a, ka));
                let tb = Rational::from_integer(self.t_of_lattice(b, kb));
                let lambda = Rational::new(k - ka, kb - ka);
                let t = &ta + &lambda * (tb - &ta);
                push(t, &mut t_lo, &mut t_hi);
            }
        }
        match (t_lo, t_hi) {
            (Some(t_lo), Some(t_hi)) => Some(Slice {
                t_lo,
                t_hi,
                has_vertex,
            }),
            _ => None,
        }
    }
}

/// Applies the mutation when it exists.
///
/// Panics if the construction yields anything other than a valid Fano
/// polygon: that cannot happen for correct inputs and indicates a bug.
pub fn mutate(p: &FanoPolygon, factor: &Factor) -> Option<FanoPolygon> {
    let slicer = Slicer::new(p, factor);
    let k_min = slicer.heights.iter().min().unwrap().clone();
    let k_max = slicer.heights.iter().max().unwrap().clone();
    debug_assert!(k_min.is_negative() && k_max.is_positive());

    let mut points: Vec<(Rational, Rational)> = Vec::new();

    // Negative heights: trim |k| copies of the factor from each lattice slice.
    let mut k = k_min.clone();
    while k.is_negative() {
        let sl = slicer.slice(&k).expect("slice exists between k_min and 0");
        let a = sl.t_lo.ceil().to_integer();
        let b = sl.t_hi.floor().to_integer() + &k;
        if a <= b {
            points.push(slicer.point(&k, &Rational::from_integer(a)));
            points.push(slicer.point(&k, &Rational::from_integer(b)));
        } else if sl.has_vertex {
            return None;
        }
        k += 1;
    }

    // Non-negative heights: shear the rational slices by k copies of f.
    // Slice endpoints are affine in k between vertex heights, so the hull
    // only needs the breakpoint heights.
    let mut breakpoints: Vec<BigInt> = vec![BigInt::zero(), k_max.clone()];
    breakpoints.extend(slicer.heights.iter().filter(|h| h.is_positive()).cloned());
    breakpoints.sort();
    breakpoints.dedup();
    for k in &breakpoints {
        let sl = slicer.slice(k).expect("slice exists between 0 and k_max");
        for t in [&sl.t_lo, &sl.t_hi] {
            points.push(slicer.point(k, t));
            let shifted = t + Rational::from_integer(k.clone());
            points.push(slicer.point(k, &shifted));
        }
    }

    let hull = rational_hull(points);
    let mut vertices = Vec::with_capacity(hull.len());
    for (x, y) in hull {
        assert!(
            x.is_integer() && y.is_integer(),
            "mutation of {} along h={} f={} produced non-lattice vertex ({}, {})",
            p,
            factor.h,
            factor.f,
            x,
            y
        );
        vertices.push(LatticePoint {
            x: x.to_integer(),
            y: y.to_integer(),
        });
    }
    let q = FanoPolygon::new(vertices).unwrap_or_else(|e| {
        panic!(
            "mutation of {} along h={} f={} is not Fano: {}",
            p, factor.h, factor.f, e
        )
    });
    Some(q)
}

/// Convex hull of exact rational points, counterclockwise, collinear points
/// dropped.
fn rational_hull(mut pts: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    pts.sort();
    pts.dedup();
    assert!(pts.len() >= 3, "degenerate mutation hull");
    let cross = |o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)| {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut lower: Vec<(Rational, Rational)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rational, Rational)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// All mutations out of `p` whose `h` is an inner edge normal, paired with
/// their targets. The factor direction is fixed to `h.perp()`; the opposite
/// direction gives a unimodular image of the same target.
pub fn candidate_mutations(p: &FanoPolygon) -> Vec<(Factor, FanoPolygon)> {
    let verts = p.vertices();
    let n = verts.len();
    let mut out = Vec::new();
    for i in 0..n {
        let e = &verts[(i + 1) % n] - &verts[i];
        let normal = LatticePoint {
            x: -e.y.clone(),
            y: e.x.clone(),
        }
        .primitivize()
        .expect("edges are nondegenerate");
        let h = DualVector {
            x: normal.x,
            y: normal.y,
        };
        debug_assert!(h.eval(&verts[i]).is_negative());
        let factor = Factor::from_normal(h).expect("edge normals are primitive");
        if let Some(q) = mutate(p, &factor) {
            out.push((factor, q));
        }
    }
    out
}

/// Factors for which `p` admits a mutation.
pub fn candidate_factors(p: &FanoPolygon) -> Vec<Factor> {
    candidate_mutations(p).into_iter().map(|(f, _)| f).collect()
}

/// Equality of singularity content, comparing baskets as cyclic lists up to
/// rotation. A `false` result certifies the polygons are not connected by
/// mutations.
pub fn same_content(p: &FanoPolygon, q: &FanoPolygon) -> bool {
    same_content_with(p, q, BasketComparison::CyclicRotation)
}

pub fn same_content_with(p: &FanoPolygon, q: &FanoPolygon, mode: BasketComparison) -> bool {
    p.singularity_content().eq_with(&q.singularity_content(), mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lp;
    use crate::normal_form::normal_form;
    use crate::polygon::wps_triangle;
    use num_traits::One;

    fn proj2() -> FanoPolygon {
        FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, -1)]).unwrap()
    }

    fn dv(x: i64, y: i64) -> DualVector {
        DualVector::new(x, y)
    }

    #[test]
    fn factor_validation() {
        assert!(Factor::new(dv(-1, -1), lp(1, -1)).is_ok());
        assert!(Factor::new(dv(-2, -2), lp(1, -1)).is_err());
        assert!(Factor::new(dv(-1, -1), lp(2, -2)).is_err());
        assert!(Factor::new(dv(-1, -1), lp(1, 0)).is_err());
    }

    #[test]
    fn markov_step() {
        // Mutating P^2 across the edge between (1,0) and (0,1) gives the
        // triangle of P(1,1,4).
        let p = proj2();
        let factor = Factor::from_normal(dv(-1, -1)).unwrap();
        let q = mutate(&p, &factor).unwrap();
        let w = q.wps_weights().unwrap();
        assert_eq!(
            w.weights,
            [BigInt::from(1), BigInt::from(1), BigInt::from(4)]
        );
        assert!(w.index.is_one());
        assert_eq!(q.degree(), p.degree());
        assert!(same_content(&p, &q));

        // Second Markov step: some mutation of q reaches the (1,4,25) class.
        let targets = candidate_mutations(&q);
        let weights: Vec<_> = targets
            .iter()
            .filter_map(|(_, t)| t.wps_weights())
            .map(|w| w.weights)
            .collect();
        assert!(weights
            .iter()
            .any(|w| w == &[BigInt::from(1), BigInt::from(4), BigInt::from(25)]));
    }

    #[test]
    fn mutation_is_reversible() {
        let p = proj2();
        for (factor, q) in candidate_mutations(&p) {
            let back = mutate(&q, &factor.inverse()).expect("inverse mutation exists");
            assert_eq!(normal_form(&back), normal_form(&p));
        }
    }

    #[test]
    fn no_mutation_for_width_deficient_slices() {
        // P(3,5,11) admits no mutations at all.
        let p = wps_triangle(3, 5, 11).unwrap();
        assert!(candidate_mutations(&p).is_empty());
    }

    #[test]
    fn square_mutates_to_p112() {
        let sq = FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, 0), lp(0, -1)]).unwrap();
        let muts = candidate_mutations(&sq);
        assert!(!muts.is_empty());
        for (_, t) in &muts {
            assert!(same_content(&sq, t));
            assert_eq!(t.degree(), sq.degree());
            let w = t.wps_weights().unwrap();
            assert_eq!(
                w.weights,
                [BigInt::from(1), BigInt::from(1), BigInt::from(2)]
            );
        }
    }

    #[test]
    fn content_preserved_on_named_polygons() {
        let polys = [
            FanoPolygon::new(vec![lp(0, 1), lp(5, 4), lp(-7, -8)]).unwrap(),
            FanoPolygon::new(vec![lp(0, 1), lp(3, 1), lp(-112, -79)]).unwrap(),
            FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, -3)]).unwrap(),
        ];
        for p in &polys {
            for (_, q) in candidate_mutations(p) {
                assert!(same_content(p, &q), "{} -> {}", p, q);
                assert_eq!(p.degree(), q.degree());
            }
        }
    }

    #[test]
    fn same_content_examples() {
        let p1 = FanoPolygon::new(vec![lp(0, 1), lp(5, 4), lp(-7, -8)]).unwrap();
        let p2 = FanoPolygon::new(vec![lp(0, 1), lp(3, 1), lp(-112, -79)]).unwrap();
        assert!(!same_content(&p1, &p2));
        let m = crate::lattice::UnimodularMap::new(1, 3, 0, 1).unwrap();
        assert!(same_content(&p1, &p1.apply(&m)));
        let p114 = wps_triangle(1, 1, 4).unwrap();
        assert!(same_content(&proj2(), &p114));
    }
}
