//! Hirzebruch-Jung continued fractions, discrepancies of the minimal
//! resolution, and the degree-correction term A(sigma).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cone::QuotientSingularityType;
use crate::error::{Error, Result};
use crate::lattice::{gcd, Rational};

/// Numerical data of the minimal resolution of `1/r(1, q)`:
/// the expansion `r/q = [b_1, ..., b_k]`, the endpoint recursions
/// `alpha`/`beta`, and the discrepancies `d_i = -1 + (alpha_i + beta_i)/r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HjExpansion {
    pub sigma: QuotientSingularityType,
    pub b: Vec<BigInt>,
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
    pub discrepancies: Vec<Rational>,
}

/// Hirzebruch-Jung expansion of `r/q`: `r/q = b_1 - 1/(b_2 - 1/(...))`,
/// all `b_i >= 2`. Requires `0 < q < r` and `gcd(r, q) = 1`.
pub fn hj_expand(r: &BigInt, q: &BigInt) -> Result<Vec<BigInt>> {
    if q <= &BigInt::zero() || q >= r {
        return Err(Error::InvalidType(format!("need 0 < q < r, got r={}, q={}", r, q)));
    }
    if !gcd(r, q).is_one() {
        return Err(Error::InvalidType(format!("gcd({}, {}) != 1", r, q)));
    }
    let mut b = Vec::new();
    let mut r = r.clone();
    let mut q = q.clone();
    while !q.is_zero() {
        let (quot, rem) = r.div_mod_floor(&q);
        let step = if rem.is_zero() { quot } else { quot + 1 }; // ceil(r/q)
        let next_q = &step * &q - &r;
        b.push(step);
        r = q;
        q = next_q;
    }
    Ok(b)
}

/// Evaluates `[b_1, ..., b_k]` as an exact rational; inverse of [`hj_expand`].
pub fn hj_evaluate(b: &[BigInt]) -> Rational {
    let mut acc = Rational::zero();
    for bi in b.iter().rev() {
        // acc := b_i - 1/acc, with the innermost term being b_k.
        if acc.is_zero() {
            acc = Rational::from(bi.clone());
        } else {
            acc = Rational::from(bi.clone()) - acc.recip();
        }
    }
    acc
}

/// Full resolution data for a non-smooth type.
pub fn hj_data(sigma: &QuotientSingularityType) -> Result<HjExpansion> {
    if sigma.is_smooth() {
        return Err(Error::SmoothType);
    }
    let r = sigma.r().clone();
    let q = sigma.q().clone();
    let b = hj_expand(&r, &q)?;
    let k = b.len();

    // alpha_1 = 1, alpha_{i+1} = b_i*alpha_i - alpha_{i-1} (alpha_0 = 0).
    let mut alpha = vec![BigInt::one()];
    let mut prev = BigInt::zero();
    for i in 0..k - 1 {
        let next = &b[i] * &alpha[i] - &prev;
        prev = alpha[i].clone();
        alpha.push(next);
    }

    // beta_k = 1, beta_i = b_{i+1}*beta_{i+1} - beta_{i+2} (beta_{k+1} = 0).
    let mut beta = vec![BigInt::one()];
    let mut prev = BigInt::zero();
    for i in (1..k).rev() {
        let next = &b[i] * &beta[0] - &prev;
        prev = beta[0].clone();
        beta.insert(0, next);
    }

    let discrepancies: Vec<Rational> = (0..k)
        .map(|i| {
            Rational::new(&alpha[i] + &beta[i], r.clone()) - Rational::one()
        })
        .collect();

    // Discrepancies lie in (-1, 0]; they are all zero exactly for the
    // Gorenstein chains r/(r-1) = [2,...,2].
    for d in &discrepancies {
        debug_assert!(d > &Rational::from_integer(BigInt::from(-1)) && d <= &Rational::zero());
    }

    Ok(HjExpansion {
        sigma: sigma.clone(),
        b,
        alpha,
        beta,
        discrepancies,
    })
}

/// Degree correction `A(sigma) = k + 1 - sum d_i^2 b_i + 2 sum d_i d_{i+1}`.
pub fn a_correction(sigma: &QuotientSingularityType) -> Result<Rational> {
    let data = hj_data(sigma)?;
    let k = data.b.len();
    let mut acc = Rational::from_integer(BigInt::from(k as i64 + 1));
    for i in 0..k {
        let d = &data.discrepancies[i];
        acc -= d * d * Rational::from(data.b[i].clone());
    }
    for i in 0..k.saturating_sub(1) {
        let two = Rational::from_integer(BigInt::from(2));
        acc += two * &data.discrepancies[i] * &data.discrepancies[i + 1];
    }
    Ok(acc)
}
