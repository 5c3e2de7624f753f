//! Shared fixtures for the integration suites: the named polygons and the
//! seeded random corpus.

#![allow(dead_code)]

pub mod bigfloat;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use singularity_content::{wps_triangle, FanoPolygon, LatticePoint, QuotientSingularityType};

pub const CORPUS_SEED: u64 = 0x5ee_d_f00d;
pub const CORPUS_SIZE: usize = 500;

pub fn lp(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

pub fn ty(r: i64, q: i64) -> QuotientSingularityType {
    QuotientSingularityType::new(r, 1, q).unwrap()
}

pub fn p1() -> FanoPolygon {
    FanoPolygon::new(vec![lp(0, 1), lp(5, 4), lp(-7, -8)]).unwrap()
}

pub fn p2() -> FanoPolygon {
    FanoPolygon::new(vec![lp(0, 1), lp(3, 1), lp(-112, -79)]).unwrap()
}

pub fn proj2() -> FanoPolygon {
    FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, -1)]).unwrap()
}

pub fn p112() -> FanoPolygon {
    FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, -2)]).unwrap()
}

pub fn p113() -> FanoPolygon {
    FanoPolygon::new(vec![lp(1, 0), lp(0, 1), lp(-1, -3)]).unwrap()
}

pub fn p3_5_11() -> FanoPolygon {
    wps_triangle(3, 5, 11).unwrap()
}

/// 500 random Fano polygons: 3..=6 primitive points in [-10, 10]^2 whose
/// hull strictly contains the origin. Deterministic via `CORPUS_SEED`.
pub fn corpus() -> Vec<FanoPolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    while out.len() < CORPUS_SIZE {
        let k = rng.random_range(3..=6usize);
        let mut points = Vec::with_capacity(k);
        let mut tries = 0;
        while points.len() < k && tries < 100 {
            tries += 1;
            let x: i64 = rng.random_range(-10..=10);
            let y: i64 = rng.random_range(-10..=10);
            if (x, y) == (0, 0) || num_integer::gcd(x, y) != 1 {
                continue;
            }
            points.push(lp(x, y));
        }
        if points.len() < 3 {
            continue;
        }
        if let Ok(p) = FanoPolygon::new(points) {
            out.push(p);
        }
    }
    out
}

/// All canonical quotient singularity types with `2 <= r <= max_r`.
pub fn canonical_types(max_r: i64) -> Vec<QuotientSingularityType> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for q in 1..r {
            if num_integer::gcd(r, q) != 1 {
                continue;
            }
            let t = ty(r, q);
            if t.q() == &BigInt::from(q) {
                out.push(t);
            }
        }
    }
    out
}

/// Standard-position triangle realizing a type: the cone `(r, -q), (0, 1)`
/// closed up with the primitive vector opposite to `u + v`.
pub fn standard_triangle(sigma: &QuotientSingularityType) -> Option<FanoPolygon> {
    let cone = singularity_content::type_to_cone(sigma);
    let closing = (-&(cone.u() + cone.v())).primitivize()?;
    FanoPolygon::new(vec![cone.u().clone(), cone.v().clone(), closing]).ok()
}
