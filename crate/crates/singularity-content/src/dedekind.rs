//! Exact Dedekind sums and the periodic Hilbert-series corrections they
//! generate.
//!
//! The m-th Dedekind sum of `1/r(a,b)` is
//! `delta_m = (1/r) sum_eps eps^m / ((1 - eps^a)(1 - eps^b))`,
//! summed over r-th roots of unity with `eps^a != 1` and `eps^b != 1`.
//! Rewriting `1/(1 - eps) = -(1/r) sum_k k eps^k` turns each summand into a
//! double polynomial sum, and the character sum over the admissible set is
//! evaluated by inclusion-exclusion over the subgroups `{eps^a = 1}`,
//! `{eps^b = 1}` and their intersection. The whole table costs O(r^2)
//! integer operations and never touches cyclotomic (or floating-point)
//! arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cone::QuotientSingularityType;
use crate::error::{Error, Result};
use crate::lattice::Rational;

/// Exact table of the r Dedekind sums of a singularity type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindTable {
    pub sigma: QuotientSingularityType,
    pub delta: Vec<Rational>,
}

/// Numerator of the periodic correction `Q_sigma(t)`, with period `r`:
/// `Q_sigma = (sum_i c_i t^i) / (1 - t^r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCorrection {
    pub sigma: QuotientSingularityType,
    pub numerator: Vec<Rational>,
    pub period: usize,
}

/// Which multiple of `(a+b)` indexes the delta table inside `Q_sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSign {
    PlusAB,
    MinusAB,
}

/// Index convention for `Q_sigma`: `c_i = delta_{-(a+b) i} - delta_0`.
///
/// The opposite sign describes the inverse group action and fails the
/// Ehrhart cross-check on P(1,1,3); see `periodic_correction_with_sign` and
/// the tests pinning this down.
pub const DELTA_INDEX_SIGN: IndexSign = IndexSign::MinusAB;

// Tables are materialized with one entry per group element.
const MAX_TABLE_ORDER: u64 = 1 << 20;

fn table_order(r: &BigInt) -> Result<usize> {
    match r.to_u64() {
        Some(n) if (2..=MAX_TABLE_ORDER).contains(&n) => Ok(n as usize),
        Some(0) | Some(1) | None => Err(Error::SmoothType),
        Some(n) => Err(Error::InvalidType(format!(
            "Dedekind table of order {} exceeds the supported bound {}",
            n, MAX_TABLE_ORDER
        ))),
    }
}

/// Dedekind sums for explicit weights `(a, b)` modulo `r`.
///
/// Exposed for tests; library callers go through [`dedekind_sums`], which
/// uses the canonical weights of the type.
pub fn dedekind_sums_for_weights(r: &BigInt, a: &BigInt, b: &BigInt) -> Result<Vec<Rational>> {
    let n = table_order(r)?;
    let a = a.mod_floor(r).to_u64().unwrap() as usize;
    let b = b.mod_floor(r).to_u64().unwrap() as usize;

    // c_t = sum of j*k over pairs with a*j + b*k = t (mod r).
    let mut c = vec![0i128; n];
    for j in 1..n {
        let aj = (a * j) % n;
        for k in 1..n {
            let t = (aj + b * k) % n;
            c[t] += (j as i128) * (k as i128);
        }
    }

    // Character sum over the admissible set, as a function of s mod r:
    // E(s) = r[r|s] - g_a[g_a|s] - g_b[g_b|s] + g_ab[g_ab|s].
    let g_a = n.gcd(&a);
    let g_b = n.gcd(&b);
    let g_ab = g_a.gcd(&g_b);
    let e: Vec<i128> = (0..n)
        .map(|s| {
            let mut v = 0i128;
            if s == 0 {
                v += n as i128;
            }
            if s % g_a == 0 {
                v -= g_a as i128;
            }
            if s % g_b == 0 {
                v -= g_b as i128;
            }
            if s % g_ab == 0 {
                v += g_ab as i128;
            }
            v
        })
        .collect();

    // delta_m = (1/r^3) sum_t c_t E(m + t).
    let r3 = BigInt::from(n).pow(3);
    let delta: Vec<Rational> = (0..n)
        .map(|m| {
            let mut acc = 0i128;
            for (t, ct) in c.iter().enumerate() {
                acc += ct * e[(m + t) % n];
            }
            Rational::new(BigInt::from(acc), r3.clone())
        })
        .collect();

    debug_assert!(delta.iter().sum::<Rational>().is_zero());
    Ok(delta)
}

/// Exact Dedekind sum table of a (non-smooth) singularity type.
pub fn dedekind_sums(sigma: &QuotientSingularityType) -> Result<DedekindTable> {
    let (a, b) = sigma.weights();
    let delta = dedekind_sums_for_weights(sigma.r(), &a, &b)?;
    Ok(DedekindTable {
        sigma: sigma.clone(),
        delta,
    })
}

/// Periodic correction with an explicit index sign; tests use this to show
/// the rejected sign fails.
pub fn periodic_correction_with_sign(
    sigma: &QuotientSingularityType,
    sign: IndexSign,
) -> Result<PeriodicCorrection> {
    let table = dedekind_sums(sigma)?;
    let n = table.delta.len();
    let (a, b) = sigma.weights();
    let sum = (&a + &b).mod_floor(sigma.r()).to_u64().unwrap() as usize;
    let mult = match sign {
        IndexSign::PlusAB => sum % n,
        IndexSign::MinusAB => (n - sum % n) % n,
    };
    let numerator: Vec<Rational> = (0..n)
        .map(|i| &table.delta[(mult * i) % n] - &table.delta[0])
        .collect();
    debug_assert!(numerator[0].is_zero());
    Ok(PeriodicCorrection {
        sigma: sigma.clone(),
        numerator,
        period: n,
    })
}

/// Periodic Hilbert-series correction `Q_sigma(t)` of a basket element.
pub fn periodic_correction(sigma: &QuotientSingularityType) -> Result<PeriodicCorrection> {
    periodic_correction_with_sign(sigma, DELTA_INDEX_SIGN)
}

impl PeriodicCorrection {
    /// Coefficient of `t^m` in the expansion of `Q_sigma`.
    pub fn coefficient(&self, m: usize) -> &Rational {
        &self.numerator[m % self.period]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(r: i64, q: i64) -> QuotientSingularityType {
        QuotientSingularityType::new(r, 1, q).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn delta_examples() {
        let t = dedekind_sums(&ty(3, 1)).unwrap();
        assert_eq!(t.delta, vec![rat(1, 9), rat(-2, 9), rat(1, 9)]);

        let t = dedekind_sums(&ty(2, 1)).unwrap();
        assert_eq!(t.delta, vec![rat(1, 8), rat(-1, 8)]);

        // Desk-checked via the character sum: delta(1/5(1,1)).
        let t = dedekind_sums(&ty(5, 1)).unwrap();
        assert_eq!(
            t.delta,
            vec![rat(0, 1), rat(-2, 5), rat(0, 1), rat(1, 5), rat(1, 5)]
        );
    }

    #[test]
    fn delta_sums_to_zero() {
        for r in 2i64..=60 {
            for q in 1..r {
                if num_integer::gcd(r, q) != 1 {
                    continue;
                }
                let t = dedekind_sums(&ty(r, q)).unwrap();
                assert!(t.delta.iter().sum::<Rational>().is_zero(), "r={} q={}", r, q);
            }
        }
    }

    #[test]
    fn delta_rejects_smooth() {
        assert_eq!(
            dedekind_sums(&QuotientSingularityType::smooth()),
            Err(Error::SmoothType)
        );
    }

    #[test]
    fn correction_examples() {
        let c = periodic_correction(&ty(3, 1)).unwrap();
        assert_eq!(c.numerator, vec![rat(0, 1), rat(-1, 3), rat(0, 1)]);
        assert_eq!(c.period, 3);

        let c = periodic_correction(&ty(5, 1)).unwrap();
        assert!(c.numerator[0].is_zero());

        // Expansion is periodic.
        assert_eq!(c.coefficient(1), c.coefficient(6));
    }

    #[test]
    fn rejected_sign_differs() {
        let plus = periodic_correction_with_sign(&ty(3, 1), IndexSign::PlusAB).unwrap();
        let minus = periodic_correction_with_sign(&ty(3, 1), IndexSign::MinusAB).unwrap();
        assert_eq!(plus.numerator, vec![rat(0, 1), rat(0, 1), rat(-1, 3)]);
        assert_ne!(plus.numerator, minus.numerator);
    }

    #[test]
    fn correction_denominators_bounded() {
        // Reduced denominators stay within 4r^2; this is the bound the
        // rational-reconstruction oracle searches under.
        let c = periodic_correction(&ty(10, 3)).unwrap();
        let bound = BigInt::from(400);
        for coeff in &c.numerator {
            assert!(coeff.denom() <= &bound, "denominator {} too large", coeff.denom());
        }
    }

    #[test]
    fn correction_invariant_under_representative() {
        // Q only depends on the lattice-isomorphism class: scaling the
        // weights (and the matching index multiplier) leaves it unchanged.
        for (r, a, b) in [(7i64, 2i64, 3i64), (11, 3, 5), (12, 5, 7), (9, 2, 5)] {
            let canonical = QuotientSingularityType::new(r, a, b).unwrap();
            let via_canonical = periodic_correction(&canonical).unwrap();

            // Same computation with raw weights (a, b).
            let delta =
                dedekind_sums_for_weights(&BigInt::from(r), &BigInt::from(a), &BigInt::from(b))
                    .unwrap();
            let n = r as usize;
            let sum = ((a + b) % r) as usize;
            let mult = (n - sum % n) % n;
            let raw: Vec<Rational> = (0..n)
                .map(|i| &delta[(mult * i) % n] - &delta[0])
                .collect();
            assert_eq!(raw, via_canonical.numerator, "r={} a={} b={}", r, a, b);
        }
    }
}
