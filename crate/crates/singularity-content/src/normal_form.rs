//! Canonical representatives of Fano polygons under `GL(2, Z)`.
//!
//! For every starting edge of the polygon (and of its reflection) there is a
//! unique orientation-preserving lattice map sending the first vertex to
//! `(1, 0)` and the second to a point `(x, y)` with `0 <= x < y`. The normal
//! form is the lexicographically smallest vertex cycle over all these
//! frames, so two polygons have equal normal forms exactly when a unimodular
//! map carries one to the other.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::lattice::{extended_gcd, LatticePoint, UnimodularMap};
use crate::polygon::FanoPolygon;

/// Total-order key for a polygon's lattice-isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    key: Vec<(BigInt, BigInt)>,
}

impl NormalForm {
    pub fn vertices(&self) -> Vec<LatticePoint> {
        self.key
            .iter()
            .map(|(x, y)| LatticePoint {
                x: x.clone(),
                y: y.clone(),
            })
            .collect()
    }

    /// Representative polygon of the class.
    pub fn to_polygon(&self) -> FanoPolygon {
        FanoPolygon::new(self.vertices()).expect("normal form of a Fano polygon is Fano")
    }
}

/// The unique positively oriented map sending `a` to `(1,0)` and `b` into the
/// strip `0 <= x < y`.
fn frame_map(a: &LatticePoint, b: &LatticePoint) -> UnimodularMap {
    let (g, s, t) = extended_gcd(&a.x, &a.y);
    debug_assert!(num_traits::One::is_one(&g));
    let u0 = UnimodularMap {
        a11: s,
        a12: t,
        a21: -a.y.clone(),
        a22: a.x.clone(),
    };
    let b1 = u0.apply(b);
    debug_assert!(b1.y > BigInt::from(0));
    let c = -b1.x.div_floor(&b1.y);
    let shear = UnimodularMap {
        a11: BigInt::from(1),
        a12: c,
        a21: BigInt::from(0),
        a22: BigInt::from(1),
    };
    shear.compose(&u0)
}

/// Canonical representative of `p` under `GL(2, Z)` and relabeling.
pub fn normal_form(p: &FanoPolygon) -> NormalForm {
    let ccw: Vec<LatticePoint> = p.vertices().to_vec();
    // Reflect through the x-axis and reverse to keep the cycle counterclockwise.
    let reflected: Vec<LatticePoint> = ccw
        .iter()
        .rev()
        .map(|v| LatticePoint {
            x: v.x.clone(),
            y: -v.y.clone(),
        })
        .collect();

    let mut best: Option<Vec<(BigInt, BigInt)>> = None;
    for cycle in [&ccw, &reflected] {
        let n = cycle.len();
        for start in 0..n {
            let m = frame_map(&cycle[start], &cycle[(start + 1) % n]);
            let key: Vec<(BigInt, BigInt)> = (0..n)
                .map(|i| {
                    let v = m.apply(&cycle[(start + i) % n]);
                    (v.x, v.y)
                })
                .collect();
            if best.as_ref().is_none_or(|b| &key < b) {
                best = Some(key);
            }
        }
    }
    NormalForm { key: best.unwrap() }
}
