//! The λ weight sequence and truncated continued-fraction expansion.
//!
//! The expansion `1/(1 - λ₁t/(1 - λ₂t/...))` is computed bottom-up with
//! exact polynomial arithmetic modulo `t^N`, so no rational-function type
//! is ever needed.

use crate::error::{Error, Result};
use crate::qpolys::QPoly;

/// The continued-fraction weight `λ_k`:
/// `λ_{2p-1} = (1-q^{p+1})(1-q^p) / ((1-q^2)(1-q))` and `λ_{2p} = q·λ_{2p-1}`.
pub fn lambda_seq(k: usize) -> Result<QPoly> {
    assert!(k >= 1, "lambda weights are indexed from 1");
    if k % 2 == 0 {
        return Ok(&QPoly::q() * &lambda_seq(k - 1)?);
    }
    let p = (k + 1) / 2;
    let num = &QPoly::one_minus_qpow(p + 1) * &QPoly::one_minus_qpow(p);
    let den = &QPoly::one_minus_qpow(2) * &QPoly::one_minus_qpow(1);
    num.div_exact(&den)
}

/// The first `count` weights `λ_1..λ_count`.
pub fn lambda_weights(count: usize) -> Result<Vec<QPoly>> {
    (1..=count).map(lambda_seq).collect()
}

/// First `n_terms` Taylor coefficients in `t` of the continued fraction
/// `1/(1 - w₁t/(1 - w₂t/...))`, truncated at depth `n_terms - 1`.
pub fn cfrac_coeffs(weights: &[QPoly], n_terms: usize) -> Result<Vec<QPoly>> {
    if n_terms == 0 {
        return Ok(Vec::new());
    }
    let depth = n_terms - 1;
    if weights.len() < depth {
        return Err(Error::InvalidArgument(format!(
            "need at least {} weights for {} terms, got {}",
            depth,
            n_terms,
            weights.len()
        )));
    }
    let mut f = vec![QPoly::one()];
    for w in weights[..depth].iter().rev() {
        // g = 1 - w * t * f  (mod t^n_terms)
        let mut g = vec![QPoly::zero(); n_terms];
        g[0] = QPoly::one();
        for m in 0..n_terms - 1 {
            if let Some(fm) = f.get(m) {
                g[m + 1] = &g[m + 1] - &(w * fm);
            }
        }
        f = series_inverse(&g, n_terms)?;
    }
    f.resize(n_terms, QPoly::zero());
    Ok(f)
}

/// Inverse of a power series with constant term 1, modulo `t^n`.
fn series_inverse(a: &[QPoly], n: usize) -> Result<Vec<QPoly>> {
    if a.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::Integrity(
            "series inversion needs constant term 1".into(),
        ));
    }
    let mut inv = vec![QPoly::zero(); n];
    inv[0] = QPoly::one();
    for m in 1..n {
        let mut acc = QPoly::zero();
        for i in 1..=m {
            if let Some(ai) = a.get(i) {
                acc = &acc + &(ai * &inv[m - i]);
            }
        }
        inv[m] = -acc;
    }
    Ok(inv)
}
