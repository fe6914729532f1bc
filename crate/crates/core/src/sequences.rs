//! The Seidel triangle and the Genocchi-family integer sequences.
//!
//! - [`SeidelTriangle`]: boustrophedon generation of the array `g_{i,j}`
//! - [`genocchi`]: `G_{2n} = g_{2n-1,n}` — 1, 1, 3, 17, 155, ...
//! - [`median_genocchi`]: `H_{2n+1} = g_{2n+2,1}` — 1, 2, 8, 56, 608, ...
//! - [`normalized_h`]: `h_n = H_{2n+1} / 2^n` — 1, 1, 2, 7, 38, ...

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The Seidel triangle `g_{i,j}`, generated row by row: odd rows grow
/// left to right by `g_{2p-1,j} = g_{2p-1,j-1} + g_{2p-2,j}`, even rows
/// right to left by `g_{2p,j} = g_{2p-1,j} + g_{2p,j+1}`, seeded with
/// `g_{1,1} = 1`. Row `i` carries `ceil(i/2)` entries; every read outside
/// that support is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl SeidelTriangle {
    /// Generates rows `1..=max_i` (`max_i = 0` gives an empty triangle).
    pub fn new(max_i: usize) -> Self {
        let mut t = SeidelTriangle { rows: Vec::new() };
        if max_i == 0 {
            return t;
        }
        t.rows.push(vec![BigInt::one()]);
        for i in 2..=max_i {
            let width = i.div_ceil(2);
            let mut row = vec![BigInt::zero(); width];
            if i % 2 == 1 {
                for j in 1..=width {
                    let left = if j >= 2 {
                        row[j - 2].clone()
                    } else {
                        BigInt::zero()
                    };
                    row[j - 1] = left + t.get(i - 1, j);
                }
            } else {
                for j in (1..=width).rev() {
                    let right = if j < width {
                        row[j].clone()
                    } else {
                        BigInt::zero()
                    };
                    row[j - 1] = t.get(i - 1, j) + right;
                }
            }
            t.rows.push(row);
        }
        t
    }

    /// 1-based accessor; out-of-range positions read 0, matching the
    /// convention `g_{i,j} = 0` outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        if i == 0 || j == 0 {
            return BigInt::zero();
        }
        self.rows
            .get(i - 1)
            .and_then(|row| row.get(j - 1))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Stored rows, 1-based logically (`rows()[i-1]` is row `i`).
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn max_i(&self) -> usize {
        self.rows.len()
    }
}

/// The Genocchi number `G_{2n} = g_{2n-1,n}`.
pub fn genocchi(n: usize) -> BigInt {
    assert!(n >= 1, "Genocchi numbers are indexed from 1");
    SeidelTriangle::new(2 * n - 1).get(2 * n - 1, n)
}

/// The median Genocchi number `H_{2n+1} = g_{2n+2,1}`.
pub fn median_genocchi(n: usize) -> BigInt {
    SeidelTriangle::new(2 * n + 2).get(2 * n + 2, 1)
}

/// The normalized median Genocchi number `h_n = H_{2n+1} / 2^n`.
///
/// The divisibility by `2^n` is a theorem; if it ever fails the triangle
/// is corrupt and an integrity error is returned.
pub fn normalized_h(n: usize) -> Result<BigInt> {
    let h = median_genocchi(n);
    let pow = BigInt::one() << n;
    if (&h % &pow).is_zero() {
        Ok(h / pow)
    } else {
        Err(Error::Integrity(format!(
            "2^{} does not divide the median Genocchi number {}",
            n, h
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn seed_row() {
        let t = SeidelTriangle::new(1);
        assert_eq!(t.rows(), &[vec![big(1)]]);
        assert_eq!(SeidelTriangle::new(0).rows().len(), 0);
    }

    #[test]
    fn genocchi_values() {
        let expect = [1i64, 1, 3, 17, 155];
        for (n, &g) in expect.iter().enumerate() {
            assert_eq!(genocchi(n + 1), big(g));
        }
    }

    #[test]
    fn median_genocchi_values() {
        let expect = [1i64, 2, 8, 56, 608];
        for (n, &h) in expect.iter().enumerate() {
            assert_eq!(median_genocchi(n), big(h));
        }
    }

    #[test]
    fn normalized_values() {
        let expect = [1i64, 1, 2, 7, 38, 295, 3098];
        for (n, &h) in expect.iter().enumerate() {
            assert_eq!(normalized_h(n).unwrap(), big(h));
        }
    }

    #[test]
    fn recurrences_hold_entrywise() {
        let t = SeidelTriangle::new(40);
        for i in 2..=40usize {
            let width = i.div_ceil(2);
            for j in 1..=width {
                if i % 2 == 1 {
                    assert_eq!(t.get(i, j), t.get(i, j - 1) + t.get(i - 1, j));
                } else {
                    assert_eq!(t.get(i, j), t.get(i - 1, j) + t.get(i, j + 1));
                }
            }
        }
    }

    #[test]
    fn divisibility_up_to_twenty() {
        for n in 0..=20 {
            assert!(normalized_h(n).is_ok());
        }
    }

    #[test]
    fn normalized_h_monotone() {
        let mut prev = normalized_h(0).unwrap();
        for n in 1..=12 {
            let cur = normalized_h(n).unwrap();
            assert!(cur >= prev);
            if n >= 2 {
                assert!(cur > prev, "h must be strictly increasing from n = 2 on");
            }
            prev = cur;
        }
    }

    #[test]
    fn genocchi_exceeds_u64_eventually() {
        assert!(genocchi(20) > BigInt::from(u64::MAX));
    }
}
