//! The statistic-preserving bijection between Dellac configurations of
//! size `n` and normalized Dumont permutations of order `2n+2`.
//!
//! - [`phi`]: the word-based algorithm
//! - [`tau`], [`phi_via_tau`]: the alternative algorithm through the
//!   refined inversion statistics
//! - [`varphi`]: the inverse map, defined on all Dumont permutations
//! - [`orbit_canonical`]: the unique normalized representative of an
//!   orbit under the transposition group action

use crate::dellac::{label, row_of_label, DellacConfig};
use crate::error::{Error, Result};
use crate::permutations::{is_dumont, is_normalized_dumont, Perm};

/// `φ(C)`: the inverse of the word
/// `2, e_{i2(1)}, e_{i1(1)}, ..., e_{i2(n)}, e_{i1(n)}, 2n+1`
/// (upper label then lower label, column by column).
///
/// The result is a normalized Dumont permutation of order `2n+2`.
pub fn phi(config: &DellacConfig) -> Perm {
    let n = config.n();
    let mut word = Vec::with_capacity(2 * n + 2);
    word.push(2);
    for (i1, i2) in config.columns() {
        word.push(label(i2, n).unwrap());
        word.push(label(i1, n).unwrap());
    }
    word.push(2 * n + 1);
    let result = Perm::new(word)
        .expect("the label word is a permutation")
        .inverse();
    debug_assert!(is_normalized_dumont(&result).unwrap());
    result
}

/// The `y` sequence `(3, 2, 5, 4, ..., 2n+1, 2n)`: `y_i = i` for even
/// `i`, `y_i = i + 2` for odd `i`.
fn y_value(i: usize) -> usize {
    if i % 2 == 0 {
        i
    } else {
        i + 2
    }
}

/// The permutation `τ_C ∈ Σ_{2n}` computed from the refined statistics:
/// `τ_C(i) = i + l_C(e_i) - r_C(e_i)`.
pub fn tau(config: &DellacConfig) -> Perm {
    let images: Vec<usize> = (1..=2 * config.n())
        .map(|i| i + config.l(i) - config.r(i))
        .collect();
    Perm::new(images).expect("tau is a permutation")
}

/// `φ(C)` recomputed through `τ_C` and the relation
/// `φ(C)(e_i) = y_{τ_C(i)}`; agrees with [`phi`] on every configuration.
pub fn phi_via_tau(config: &DellacConfig) -> Perm {
    let n = config.n();
    let t = tau(config);
    let mut images = vec![0usize; 2 * n + 2];
    images[2 - 1] = 1;
    images[2 * n + 1 - 1] = 2 * n + 2;
    for i in 1..=2 * n {
        let lab = label(i, n).unwrap();
        images[lab - 1] = y_value(t.apply(i));
    }
    Perm::new(images).expect("phi_via_tau is a permutation")
}

/// `varphi(σ)` for a Dumont permutation `σ` of order `2n+2`: column `j`
/// receives the dots labelled `σ⁻¹(2j)` and `σ⁻¹(2j+1)`.
pub fn varphi(sigma: &Perm) -> Result<DellacConfig> {
    if !is_dumont(sigma)? {
        return Err(Error::NotDumont);
    }
    let n = sigma.len() / 2 - 1;
    if n == 0 {
        return Err(Error::InvalidPermutation(
            "varphi needs a Dumont permutation of order at least 4".into(),
        ));
    }
    let inv = sigma.inverse();
    let mut col = vec![0usize; 2 * n];
    for j in 1..=n {
        for lab in [inv.apply(2 * j), inv.apply(2 * j + 1)] {
            let row = row_of_label(lab, n)
                .map_err(|_| Error::Integrity(format!("label {} escaped the label range", lab)))?;
            col[row - 1] = j;
        }
    }
    DellacConfig::new(n, col)
        .map_err(|e| Error::Integrity(format!("varphi of a Dumont permutation failed: {}", e)))
}

/// The unique normalized Dumont permutation in the orbit of `σ` under
/// left multiplication by `(2,3), (4,5), ..., (2n,2n+1)`.
pub fn orbit_canonical(sigma: &Perm) -> Result<Perm> {
    Ok(phi(&varphi(sigma)?))
}
