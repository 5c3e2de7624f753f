//! Fixed-point big-float oracle for Dedekind sums: 256 fractional bits,
//! complex summation over roots of unity, and rational reconstruction by
//! continued fractions with the denominator search bounded by 4r^2.
//!
//! This path is deliberately independent of the library's inclusion-
//! exclusion algorithm: pi comes from Machin's formula, sines and cosines
//! from their Taylor series, and the admissible roots are summed directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use singularity_content::Rational;

pub const FRAC_BITS: u32 = 256;

/// Fixed-point real: value = mantissa / 2^FRAC_BITS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fx(pub BigInt);

impl Fx {
    pub fn zero() -> Self {
        Fx(BigInt::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Fx(BigInt::from(n) << FRAC_BITS)
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx((&self.0 * &o.0) >> FRAC_BITS)
    }

    pub fn div_int(&self, n: &BigInt) -> Fx {
        Fx(&self.0 / n)
    }

    pub fn mul_int(&self, n: &BigInt) -> Fx {
        Fx(&self.0 * n)
    }

    pub fn abs(&self) -> Fx {
        Fx(self.0.abs())
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.0.clone(), BigInt::one() << FRAC_BITS)
    }
}

/// arctan(1/x) by the alternating Taylor series, exact to the working scale.
fn atan_inv(x: i64) -> Fx {
    let x2 = BigInt::from(x * x);
    let mut term = BigInt::one() << FRAC_BITS;
    term /= BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !term.is_zero() {
        let contrib = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += contrib;
        } else {
            sum -= contrib;
        }
        term /= &x2;
        k += 1;
    }
    Fx(sum)
}

/// pi = 16 atan(1/5) - 4 atan(1/239).
pub fn pi() -> Fx {
    let a = atan_inv(5).mul_int(&BigInt::from(16));
    let b = atan_inv(239).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// cos and sin by Taylor series; the argument stays within [0, 2*pi).
fn cos_sin(theta: &Fx) -> (Fx, Fx) {
    // cos: sum (-1)^n theta^(2n) / (2n)!; sin: shifted by one power.
    let theta2 = theta.mul(theta);
    let mut cos = Fx::from_int(0);
    let mut term = Fx::from_int(1);
    let mut n = 0u32;
    while !term.0.is_zero() {
        if n % 2 == 0 {
            cos = cos.add(&term);
        } else {
            cos = cos.sub(&term);
        }
        term = term.mul(&theta2);
        term = term.div_int(&BigInt::from((2 * n + 1) as i64 * (2 * n + 2) as i64));
        n += 1;
    }
    let mut sin = Fx::from_int(0);
    let mut term = theta.clone();
    let mut n = 0u32;
    while !term.0.is_zero() {
        if n % 2 == 0 {
            sin = sin.add(&term);
        } else {
            sin = sin.sub(&term);
        }
        term = term.mul(&theta2);
        term = term.div_int(&BigInt::from((2 * n + 2) as i64 * (2 * n + 3) as i64));
        n += 1;
    }
    (cos, sin)
}

#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Fx,
    pub im: Fx,
}

impl Complex {
    fn mul(&self, o: &Complex) -> Complex {
        Complex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn recip(&self) -> Complex {
        // 1/z = conj(z)/|z|^2, carried out at the working scale.
        let norm = (&self.re.0 * &self.re.0 + &self.im.0 * &self.im.0) >> FRAC_BITS;
        Complex {
            re: Fx((&self.re.0 << FRAC_BITS) / &norm),
            im: Fx((-&self.im.0 << FRAC_BITS) / &norm),
        }
    }
}

/// Best rational with denominator at most `max_den`, via continued-fraction
/// convergents.
pub fn reconstruct(x: &Rational, max_den: &BigInt) -> Rational {
    let mut h_prev = BigInt::one();
    let mut h = x.floor().to_integer();
    let mut k_prev = BigInt::zero();
    let mut k = BigInt::one();
    let mut frac = x - Rational::from_integer(h.clone());
    while !frac.is_zero() {
        let next = frac.recip();
        let a = next.floor().to_integer();
        frac = next - Rational::from_integer(a.clone());
        let h_new = &a * &h + &h_prev;
        let k_new = &a * &k + &k_prev;
        if &k_new > max_den {
            break;
        }
        h_prev = std::mem::replace(&mut h, h_new);
        k_prev = std::mem::replace(&mut k, k_new);
    }
    Rational::new(h, k)
}

/// Dedekind sums of `1/r(a,b)` by 256-bit complex summation over the
/// admissible r-th roots of unity, followed by rational reconstruction with
/// denominators bounded by `4r^2`. Returns `(reconstructed, raw_float)` per
/// index; panics if any imaginary part fails to vanish numerically.
pub fn dedekind_float_oracle(r: u64, a: u64, b: u64) -> Vec<(Rational, Rational)> {
    assert!(r >= 2);
    let two_pi = pi().mul_int(&BigInt::from(2));
    let roots: Vec<Complex> = (0..r)
        .map(|k| {
            let theta = Fx(two_pi.0.clone() * BigInt::from(k) / BigInt::from(r));
            let (re, im) = cos_sin(&theta);
            Complex { re, im }
        })
        .collect();

    let inv_dens: Vec<Option<Complex>> = (0..r)
        .map(|k| {
            if (a * k) % r == 0 || (b * k) % r == 0 {
                return None;
            }
            let one = Complex {
                re: Fx::from_int(1),
                im: Fx::from_int(0),
            };
            let ea = &roots[((a * k) % r) as usize];
            let eb = &roots[((b * k) % r) as usize];
            let da = Complex {
                re: one.re.sub(&ea.re),
                im: Fx(-(ea.im.0.clone())),
            };
            let db = Complex {
                re: one.re.sub(&eb.re),
                im: Fx(-(eb.im.0.clone())),
            };
            Some(da.mul(&db).recip())
        })
        .collect();

    // The float sum must agree with itself to ~2^-200; anything beyond
    // 10^-30 in the imaginary part means the oracle itself is broken.
    let imag_tol = Rational::new(BigInt::one(), BigInt::from(10u8).pow(30));
    let max_den = BigInt::from(4 * r * r);

    (0..r)
        .map(|m| {
            let mut acc_re = Fx::zero();
            let mut acc_im = Fx::zero();
            for (k, inv) in inv_dens.iter().enumerate() {
                if let Some(inv) = inv {
                    let num = &roots[(m as usize * k) % r as usize];
                    let term = num.mul(inv);
                    acc_re = acc_re.add(&term.re);
                    acc_im = acc_im.add(&term.im);
                }
            }
            let re = acc_re.div_int(&BigInt::from(r));
            let im = acc_im.div_int(&BigInt::from(r));
            assert!(
                im.to_rational().abs() < imag_tol,
                "imaginary residue too large for r={} a={} b={} m={}",
                r,
                a,
                b,
                m
            );
            let raw = re.to_rational();
            let rec = reconstruct(&raw, &max_den);
            assert!(
                (&rec - &raw).abs() < imag_tol,
                "reconstruction drifted for r={} a={} b={} m={}",
                r,
                a,
                b,
                m
            );
            (rec, raw)
        })
        .collect()
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn pi_matches_known_digits() {
        let p = pi().to_rational();
        let lo = Rational::new(BigInt::from(314159265358979u64), BigInt::from(10u64).pow(14));
        let hi = Rational::new(BigInt::from(314159265358980u64), BigInt::from(10u64).pow(14));
        assert!(lo < p && p < hi);
    }
}
