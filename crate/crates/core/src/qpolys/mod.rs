//! Exact polynomial arithmetic in `q` and in `(x, q)`.
//!
//! - [`QPoly`]: dense univariate integer polynomials, exact division, [`divides`]
//! - [`XQPoly`]: bivariate polynomials, the operator [`delta_q`]
//! - [`gandhi`]: the q-Gandhi polynomials `C_n(x, q)`
//! - [`cbar`]: the q-extended normalized median Genocchi polynomials
//! - [`lambda_seq`], [`cfrac_coeffs`]: continued-fraction weights and the
//!   truncated expansion of the generating function

mod cfrac;
mod qpoly;
mod xqpoly;

pub use cfrac::{cfrac_coeffs, lambda_seq, lambda_weights};
pub use qpoly::{divides, QPoly};
pub use xqpoly::{cbar, delta_q, gandhi, XQPoly};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|cs| QPoly::from_i64_coeffs(&cs))
    }

    fn small_xqpoly() -> impl Strategy<Value = XQPoly> {
        prop::collection::vec(small_poly(), 0..4).prop_map(XQPoly::from_rows)
    }

    proptest! {
        #[test]
        fn distributivity((a, b, c) in (small_poly(), small_poly(), small_poly())) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn mul_commutes_with_eval((a, b) in (small_poly(), small_poly())) {
            let x = num_bigint::BigInt::from(3);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn division_inverts_multiplication((a, b) in (small_poly(), small_poly())) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert!(divides(&b, &prod));
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn substitution_is_a_ring_homomorphism((a, b) in (small_xqpoly(), small_xqpoly())) {
            let prod = (&a * &b).subst_one_plus_qx();
            prop_assert_eq!(prod, &a.subst_one_plus_qx() * &b.subst_one_plus_qx());
            let sum = (&a + &b).subst_one_plus_qx();
            prop_assert_eq!(sum, &a.subst_one_plus_qx() + &b.subst_one_plus_qx());
        }
    }
}
