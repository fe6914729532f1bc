//! Permutation words, Dumont permutations and their normalized classes,
//! the `st` statistic, and exhaustive enumeration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., m}` in one-line notation;
/// `images[k]` is `σ(k+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Validates that `images` is a permutation of `1..=m`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a permutation of 1..={}",
                    images, m
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(m: usize) -> Self {
        Perm {
            images: (1..=m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.images.len(), "index {} out of range", i);
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Perm { images: inv }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// Number of inversions of the one-line word.
    pub fn inversions(&self) -> usize {
        inv_word(&self.images)
    }

    /// The subword `σ(1)σ(3)...` of odd positions.
    pub fn odd_subword(&self) -> Vec<usize> {
        self.images.iter().copied().step_by(2).collect()
    }

    /// The subword `σ(2)σ(4)...` of even positions.
    pub fn even_subword(&self) -> Vec<usize> {
        self.images.iter().copied().skip(1).step_by(2).collect()
    }
}

impl fmt::Display for Perm {
    /// Digit string for `m <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.len() <= 9 {
            for v in &self.images {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {:?}", p)))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {:?}", c)))
                })
                .collect::<Result<_>>()?
        };
        Perm::new(images)
    }
}

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn inv_word(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

fn half_order(sigma: &Perm) -> Result<usize> {
    if sigma.len() % 2 != 0 {
        return Err(Error::InvalidPermutation(format!(
            "Dumont permutations have even order, got length {}",
            sigma.len()
        )));
    }
    Ok(sigma.len() / 2)
}

/// True iff `σ(2i) < 2i` and `σ(2i-1) > 2i-1` for all `i`.
pub fn is_dumont(sigma: &Perm) -> Result<bool> {
    let n = half_order(sigma)?;
    for i in 1..=n {
        if sigma.apply(2 * i) >= 2 * i || sigma.apply(2 * i - 1) <= 2 * i - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff σ is Dumont and, for every `j`, `σ⁻¹(2j)` and `σ⁻¹(2j+1)`
/// have the same parity exactly when `σ⁻¹(2j) > σ⁻¹(2j+1)`.
pub fn is_normalized_dumont(sigma: &Perm) -> Result<bool> {
    if !is_dumont(sigma)? {
        return Err(Error::NotDumont);
    }
    Ok(normalized_condition(sigma, |a, b| a > b))
}

/// True iff σ is Dumont and the same-parity condition holds with
/// `σ⁻¹(2j) < σ⁻¹(2j+1)` instead (the normalized Genocchi class).
pub fn is_normalized_genocchi(sigma: &Perm) -> Result<bool> {
    if !is_dumont(sigma)? {
        return Err(Error::NotDumont);
    }
    Ok(normalized_condition(sigma, |a, b| a < b))
}

fn normalized_condition(sigma: &Perm, order: impl Fn(usize, usize) -> bool) -> bool {
    let n = sigma.len() / 2;
    let inv = sigma.inverse();
    for j in 1..n {
        let a = inv.apply(2 * j);
        let b = inv.apply(2 * j + 1);
        let same_parity = a % 2 == b % 2;
        if same_parity != order(a, b) {
            return false;
        }
    }
    true
}

/// The statistic `st(σ) = n² - Σσ(2i) - inv(σᵒ) - inv(σᵉ)` on `Σ_{2n}`.
pub fn st(sigma: &Perm) -> Result<i64> {
    let n = half_order(sigma)? as i64;
    let even_sum: i64 = sigma.even_subword().iter().map(|&v| v as i64).sum();
    let inv_o = inv_word(&sigma.odd_subword()) as i64;
    let inv_e = inv_word(&sigma.even_subword()) as i64;
    Ok(n * n - even_sum - inv_o - inv_e)
}

/// Which subset of the Dumont permutations to enumerate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DumontClass {
    All,
    NormalizedDumont,
    NormalizedGenocchi,
}

/// All members of `D_n`, `D'_n` or `G''_n` (permutations of `[2n]`), in
/// lexicographic one-line order.
///
/// Enumeration backtracks over positions: even positions choose from
/// values below the position, odd positions from values above it, so the
/// search tree only visits valid prefixes.
pub fn enumerate_dumont(n: usize, class: DumontClass) -> Vec<Perm> {
    assert!(n >= 1);
    let m = 2 * n;
    let mut used = vec![false; m + 1];
    let mut images = Vec::with_capacity(m);
    let mut out = Vec::new();
    fill_dumont(m, &mut used, &mut images, &mut out, class);
    out
}

fn fill_dumont(
    m: usize,
    used: &mut Vec<bool>,
    images: &mut Vec<usize>,
    out: &mut Vec<Perm>,
    class: DumontClass,
) {
    let pos = images.len() + 1;
    if pos > m {
        let perm = Perm {
            images: images.clone(),
        };
        let keep = match class {
            DumontClass::All => true,
            DumontClass::NormalizedDumont => is_normalized_dumont(&perm).unwrap(),
            DumontClass::NormalizedGenocchi => is_normalized_genocchi(&perm).unwrap(),
        };
        if keep {
            out.push(perm);
        }
        return;
    }
    let (lo, hi) = if pos % 2 == 0 {
        (1, pos - 1) // σ(2i) < 2i
    } else {
        (pos + 1, m) // σ(2i-1) > 2i-1
    };
    for v in lo..=hi {
        if !used[v] {
            used[v] = true;
            images.push(v);
            fill_dumont(m, used, images, out, class);
            images.pop();
            used[v] = false;
        }
    }
}

/// Side of a transposition composition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// `(a,b)∘σ` (swap the values `a`, `b`) or `σ∘(a,b)` (swap the images at
/// positions `a`, `b`).
pub fn transposition_compose(sigma: &Perm, a: usize, b: usize, side: Side) -> Result<Perm> {
    let m = sigma.len();
    if a == 0 || b == 0 || a > m || b > m || a == b {
        return Err(Error::OutOfRange(format!(
            "transposition ({}, {}) on a permutation of length {}",
            a, b, m
        )));
    }
    let mut images = sigma.images.clone();
    match side {
        Side::Left => {
            for v in images.iter_mut() {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        Side::Right => images.swap(a - 1, b - 1),
    }
    Ok(Perm { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::median_genocchi;
    use num_bigint::BigInt;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn inv_word_examples() {
        assert_eq!(inv_word(&[1, 2, 3]), 0);
        assert_eq!(inv_word(&[3, 2, 1]), 3);
        // direct pair count: (2,1), (4,1), (4,3)
        assert_eq!(inv_word(&[2, 4, 1, 3]), 3);
    }

    #[test]
    fn dumont_predicate() {
        assert!(is_dumont(&perm("2143")).unwrap());
        assert!(is_dumont(&perm("41726583")).unwrap());
        assert!(!is_dumont(&Perm::identity(4)).unwrap());
        assert!(is_dumont(&perm("213")).is_err());
    }

    #[test]
    fn normalized_dumont_predicate() {
        assert!(is_normalized_dumont(&perm("2143")).unwrap());
        assert!(is_normalized_dumont(&perm("21736584")).unwrap());
        assert!(!is_normalized_dumont(&perm("41726583")).unwrap());
        assert_eq!(
            is_normalized_dumont(&Perm::identity(4)),
            Err(Error::NotDumont)
        );
    }

    #[test]
    fn st_examples() {
        assert_eq!(st(&perm("2143")).unwrap(), 0);
        // the involution 2143...(2n+2)(2n+1) has st = 0
        for n in 1..=5 {
            let m = 2 * n + 2;
            let mut images = Vec::new();
            for i in 1..=m / 2 {
                images.push(2 * i);
                images.push(2 * i - 1);
            }
            assert_eq!(st(&Perm::new(images).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn dumont_counts_match_median_genocchi() {
        for n in 0..=3 {
            let count = enumerate_dumont(n + 1, DumontClass::All).len();
            assert_eq!(BigInt::from(count), median_genocchi(n));
        }
    }

    #[test]
    fn dumont_enumeration_is_lexicographic_and_valid() {
        let all = enumerate_dumont(3, DumontClass::All);
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for p in &all {
            assert!(is_dumont(p).unwrap());
        }
        assert_eq!(all.first().unwrap().to_string(), "214365");
    }

    #[test]
    fn normalized_classes_have_h_cardinality() {
        // |D'_{n+1}| = |G''_{n+1}| = h_n
        for (n, h) in [(1, 1), (2, 2), (3, 7), (4, 38)] {
            let nd = enumerate_dumont(n + 1, DumontClass::NormalizedDumont).len();
            let ng = enumerate_dumont(n + 1, DumontClass::NormalizedGenocchi).len();
            assert_eq!(nd, h);
            assert_eq!(ng, h);
        }
    }

    #[test]
    fn transpositions() {
        let sigma = perm("41726583");
        let left = transposition_compose(&sigma, 2, 3, Side::Left).unwrap();
        assert_eq!(left.to_string(), "41736582");
        let back = transposition_compose(&left, 2, 3, Side::Left).unwrap();
        assert_eq!(back, sigma);
        assert!(transposition_compose(&sigma, 1, 9, Side::Left).is_err());
        assert!(transposition_compose(&sigma, 4, 4, Side::Right).is_err());
    }

    #[test]
    fn st_increases_under_condition_c() {
        // for σ satisfying condition C(j), st((2j,2j+1)∘σ) = st(σ) + 1
        for n in 2..=4usize {
            for sigma in enumerate_dumont(n, DumontClass::All) {
                let inv = sigma.inverse();
                for j in 1..n {
                    let a = inv.apply(2 * j);
                    let b = inv.apply(2 * j + 1);
                    let condition_c = (a > b) == (a % 2 == b % 2);
                    if condition_c {
                        let swapped =
                            transposition_compose(&sigma, 2 * j, 2 * j + 1, Side::Left).unwrap();
                        assert_eq!(st(&swapped).unwrap(), st(&sigma).unwrap() + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p10 = Perm::new(vec![2, 1, 4, 3, 6, 5, 8, 7, 10, 9]).unwrap();
        assert_eq!(p10.to_string(), "2,1,4,3,6,5,8,7,10,9");
        assert_eq!(p10.to_string().parse::<Perm>().unwrap(), p10);
        assert_eq!(perm("2143").to_string(), "2143");
    }
}
