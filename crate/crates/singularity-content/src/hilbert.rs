//! Anticanonical Hilbert series of a toric Fano surface: the closed-form
//! decomposition driven by singularity content, and an independent Ehrhart
//! oracle that counts lattice points in dilations of the dual polygon.
//!
//! The decomposition is
//! `Hilb(t) = (1 + (K^2 - 2) t + t^2) / (1-t)^3 + sum_{sigma in basket} Q_sigma(t)`,
//! and coefficient `m` of the oracle is `#(m * dual(P) cap M)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dedekind::{periodic_correction, PeriodicCorrection};
use crate::lattice::Rational;
use crate::polygon::FanoPolygon;

/// Hilbert series data: leading numerator `(1, K^2 - 2, 1)` over `(1-t)^3`,
/// one periodic correction per basket element, and the expanded coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub degree: Rational,
    pub leading: [Rational; 3],
    pub corrections: Vec<PeriodicCorrection>,
    pub expanded: Vec<BigInt>,
}

fn binom2(n: usize) -> BigInt {
    // n choose 2
    let n = BigInt::from(n as u64);
    &n * (&n - 1) / 2
}

/// Assembles the Hilbert series of the polygon's toric surface and expands
/// the first `terms` coefficients. Every expanded coefficient is checked to
/// be a non-negative integer.
pub fn hilbert_series(p: &FanoPolygon, terms: usize) -> HilbertSeries {
    let degree = p.degree();
    let sc = p.singularity_content();
    let corrections: Vec<PeriodicCorrection> = sc
        .basket
        .iter()
        .map(|sigma| periodic_correction(sigma).expect("basket elements are never smooth"))
        .collect();

    let middle = &degree - Rational::from_integer(BigInt::from(2));
    let leading = [
        Rational::one(),
        middle.clone(),
        Rational::one(),
    ];

    let expanded = (0..terms)
        .map(|m| {
            // 1/(1-t)^3 has coefficients C(m+2, 2).
            let mut coeff = Rational::from_integer(binom2(m + 2))
                + &middle * Rational::from_integer(binom2(m + 1))
                + Rational::from_integer(binom2(m));
            for c in &corrections {
                coeff += c.coefficient(m);
            }
            assert!(
                coeff.is_integer() && !coeff.is_negative(),
                "Hilbert coefficient {} of {} is not a non-negative integer: {}",
                m,
                p,
                coeff
            );
            coeff.to_integer()
        })
        .collect();

    HilbertSeries {
        degree,
        leading,
        corrections,
        expanded,
    }
}

/// Number of expansion terms at which the formula is cross-checked against
/// the oracle: `max(20, 2 * max basket period + 3)`.
pub fn default_check_terms(p: &FanoPolygon) -> usize {
    let max_period = p
        .singularity_content()
        .basket
        .iter()
        .map(|s| {
            use num_traits::ToPrimitive;
            s.r().to_usize().expect("basket order fits usize")
        })
        .max()
        .unwrap_or(0);
    (2 * max_period + 3).max(20)
}

/// Coefficient `m` of the anticanonical Hilbert series by direct lattice
/// point counting: the number of `x` in `M` with `<x, v> >= -m` for every
/// vertex `v` of `p`. Independent of the decomposition formula.
///
/// Rows are counted in `i128` when the coordinates allow it (they always do
/// for the corpora this library targets); huge polygons fall back to exact
/// big-integer arithmetic.
pub fn ehrhart_hilbert_oracle(p: &FanoPolygon, terms: usize) -> Vec<BigInt> {
    let verts = p.vertices();
    let dual = p.dual();

    // y-extent of the dual polygon, as exact rationals.
    let ys: Vec<&Rational> = dual.vertices().iter().map(|(_, y)| y).collect();
    let y_min = (*ys.iter().min().unwrap()).clone();
    let y_max = (*ys.iter().max().unwrap()).clone();

    use num_traits::ToPrimitive;
    let small: Option<Vec<(i128, i128)>> = verts
        .iter()
        .map(|v| Some((v.x.to_i128()?, v.y.to_i128()?)))
        .collect();
    let fits = small
        .as_ref()
        .is_some_and(|vs| {
            (terms as u64) < (1 << 19)
                && vs
                    .iter()
                    .all(|(x, y)| x.abs() < (1 << 20) && y.abs() < (1 << 20))
        });

    (0..terms)
        .map(|m| {
            let m_big = BigInt::from(m as u64);
            let mr = Rational::from_integer(m_big.clone());
            let y_lo = (&y_min * &mr).ceil().to_integer();
            let y_hi = (&y_max * &mr).floor().to_integer();
            if fits {
                let vs = small.as_ref().unwrap();
                let mut count: i128 = 0;
                let mut y = y_lo.to_i128().unwrap();
                let y_hi = y_hi.to_i128().unwrap();
                while y <= y_hi {
                    if let Some((lo, hi)) = row_range_i128(vs, m as i128, y) {
                        if lo <= hi {
                            count += hi - lo + 1;
                        }
                    }
                    y += 1;
                }
                BigInt::from(count)
            } else {
                let mut count = BigInt::zero();
                let mut y = y_lo;
                while y <= y_hi {
                    if let Some((lo, hi)) = row_range(verts, &m_big, &y) {
                        if lo <= hi {
                            count += hi - lo + 1;
                        }
                    }
                    y += 1;
                }
                count
            }
        })
        .collect()
}

fn div_floor_i128(a: i128, b: i128) -> i128 {
    // b > 0 by construction
    let q = a / b;
    if a % b < 0 {
        q - 1
    } else {
        q
    }
}

fn div_ceil_i128(a: i128, b: i128) -> i128 {
    -div_floor_i128(-a, b)
}

fn row_range_i128(verts: &[(i128, i128)], m: i128, y: i128) -> Option<(i128, i128)> {
    let mut lo: Option<i128> = None;
    let mut hi: Option<i128> = None;
    for &(vx, vy) in verts {
        let rhs = -m - vy * y; // vx * x >= rhs
        if vx == 0 {
            if rhs > 0 {
                return None;
            }
        } else if vx > 0 {
            let bound = div_ceil_i128(rhs, vx);
            lo = Some(lo.map_or(bound, |b| b.max(bound)));
        } else {
            let bound = div_floor_i128(-rhs, -vx);
            // vx*x >= rhs with vx < 0 means x <= rhs/vx = (-rhs)/(-vx)
            hi = Some(hi.map_or(bound, |b| b.min(bound)));
        }
    }
    Some((lo.expect("vertices span both x signs"), hi.expect("vertices span both x signs")))
}

/// x-range of lattice points on row `y` of the `m`-th dilation, from the
/// constraints `v.x * x + v.y * y >= -m`.
fn row_range(verts: &[crate::lattice::LatticePoint], m: &BigInt, y: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for v in verts {
        let rhs = -m - &v.y * y; // v.x * x >= rhs
        match v.x.sign() {
            num_bigint::Sign::NoSign => {
                if rhs.is_positive() {
                    return None; // row violates a horizontal constraint
                }
            }
            num_bigint::Sign::Plus => {
                let bound = rhs.div_ceil(&v.x);
                lo = Some(match lo {
                    None => bound,
                    Some(b) => b.max(bound),
                });
            }
            num_bigint::Sign::Minus => {
                let bound = rhs.div_floor(&v.x);
                hi = Some(match hi {
                    None => bound,
                    Some(b) => b.min(bound),
                });
            }
        }
    }
    Some((lo.expect("vertices span both x signs"), hi.expect("vertices span both x signs")))
}
