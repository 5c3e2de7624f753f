//! Exact-method agreement: the inclusion-exclusion Dedekind tables must
//! coincide with the high-precision float oracle after rational
//! reconstruction, across every canonical type with r <= 60.

mod common;

use common::bigfloat::dedekind_float_oracle;
use num_traits::{Signed, ToPrimitive, Zero};
use singularity_content::{dedekind_sums, Rational};

#[test]
fn exact_tables_match_float_oracle_up_to_60() {
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(10u8).pow(30));
    for sigma in common::canonical_types(60) {
        let table = dedekind_sums(&sigma).unwrap();
        let r = sigma.r().to_u64().unwrap();
        let q = sigma.q().to_u64().unwrap();
        let oracle = dedekind_float_oracle(r, 1, q);
        assert_eq!(table.delta.len(), oracle.len());
        let mut sum = Rational::zero();
        for (m, (exact, (reconstructed, raw))) in
            table.delta.iter().zip(oracle.iter()).enumerate()
        {
            assert_eq!(
                exact, reconstructed,
                "delta_{} mismatch for {}",
                m, sigma
            );
            // The exact value re-evaluates to within 10^-30 of the float sum.
            assert!(
                (exact - raw).abs() < tol,
                "float drift at delta_{} of {}",
                m,
                sigma
            );
            sum += exact;
        }
        assert!(sum.is_zero(), "delta sum nonzero for {}", sigma);
    }
}
