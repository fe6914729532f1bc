//! Cross-module identities, each computed along independent routes and
//! compared exactly.

use genocchi::dellac::{binom2, htilde};
use genocchi::permutations::{enumerate_dumont, st, DumontClass};
use genocchi::qpolys::{cbar, cfrac_coeffs, divides, gandhi, lambda_seq, lambda_weights, QPoly};
use genocchi::sequences::{median_genocchi, normalized_h};
use num_bigint::BigInt;

fn st_sum(n: usize, class: DumontClass) -> QPoly {
    let mut acc = QPoly::zero();
    for sigma in enumerate_dumont(n, class) {
        let e = st(&sigma).unwrap();
        assert!(e >= 0, "st is nonnegative on Dumont permutations");
        acc = &acc + &QPoly::monomial(e as usize);
    }
    acc
}

#[test]
fn st_distribution_over_dumont_gives_gandhi() {
    for n in 1..=5 {
        assert_eq!(st_sum(n, DumontClass::All), gandhi(n).eval_x_one());
    }
}

#[test]
fn st_distribution_over_normalized_gives_cbar() {
    let one_plus_q = QPoly::from_i64_coeffs(&[1, 1]);
    for n in 1..=5 {
        let normalized = st_sum(n, DumontClass::NormalizedDumont);
        assert_eq!(normalized, cbar(n).unwrap());
        assert_eq!(&normalized * &one_plus_q.pow(n - 1), gandhi(n).eval_x_one());
    }
}

#[test]
fn dumont_cardinality_is_median_genocchi() {
    for n in 0..=4 {
        let count = enumerate_dumont(n + 1, DumontClass::All).len();
        assert_eq!(BigInt::from(count), median_genocchi(n));
    }
}

#[test]
fn cbar_at_one_is_normalized_h() {
    for n in 1..=8 {
        assert_eq!(cbar(n).unwrap().eval_one(), normalized_h(n - 1).unwrap());
    }
}

#[test]
fn cbar_coefficients_are_nonnegative() {
    for n in 1..=8 {
        assert!(cbar(n).unwrap().has_nonnegative_coeffs());
    }
}

#[test]
fn continued_fraction_matches_cbar() {
    let weights = lambda_weights(6).unwrap();
    let coeffs = cfrac_coeffs(&weights, 7).unwrap();
    for (n, coeff) in coeffs.iter().enumerate() {
        assert_eq!(*coeff, cbar(n + 1).unwrap(), "t^{} coefficient", n);
    }
}

#[test]
fn htilde_matches_cbar() {
    for n in 0..=5 {
        assert_eq!(htilde(n), cbar(n + 1).unwrap());
    }
}

#[test]
fn one_plus_q_divides_cbar_of_odd_index() {
    let one_plus_q = QPoly::from_i64_coeffs(&[1, 1]);
    for n in (3..=9).step_by(2) {
        assert!(divides(&one_plus_q, &cbar(n).unwrap()), "n = {}", n);
    }
    assert!(!divides(&one_plus_q, &QPoly::one()));
}

#[test]
fn lambda_closed_form_matches_triangular_sum() {
    for p in 1..=10 {
        let mut acc = QPoly::zero();
        for n2 in 0..p {
            for n1 in 0..=n2 {
                acc = &acc + &QPoly::monomial(2 * p - 2 - n1 - n2);
            }
        }
        assert_eq!(acc, lambda_seq(2 * p - 1).unwrap(), "p = {}", p);
    }
}

#[test]
fn st_range_on_normalized_dumont() {
    for n in 2..=5 {
        let top = binom2(n - 1) as i64;
        for sigma in enumerate_dumont(n, DumontClass::NormalizedDumont) {
            let v = st(&sigma).unwrap();
            assert!((0..=top).contains(&v));
        }
    }
}
