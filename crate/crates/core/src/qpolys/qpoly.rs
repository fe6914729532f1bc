//! Dense univariate polynomials in `q` over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Stored dense, lowest degree first, with trailing zeros trimmed; the
/// zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        QPoly::monomial(1)
    }

    /// The polynomial `1 - q^m` (with `m = 0` giving zero).
    pub fn one_minus_qpow(m: usize) -> Self {
        if m == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::one();
        coeffs[m] = -BigInt::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Long division over the integers.
    ///
    /// Returns `None` when some leading-coefficient division is inexact,
    /// which for integer polynomials implies `d` does not divide `self`.
    pub fn div_rem(&self, d: &QPoly) -> Option<(QPoly, QPoly)> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let dl = d.coeffs.last().unwrap();
        if self.coeffs.len() <= dd {
            return Some((QPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - dd];
        for k in (dd..self.coeffs.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            if !(&rem[k] % dl).is_zero() {
                return None;
            }
            let f = &rem[k] / dl;
            for (idx, dc) in d.coeffs.iter().enumerate() {
                let delta = &f * dc;
                rem[k - dd + idx] -= delta;
            }
            quot[k - dd] = f;
        }
        Some((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact division; an inexact division is an integrity error.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        match self.div_rem(d) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::Integrity(format!(
                "inexact polynomial division: ({}) / ({})",
                self, d
            ))),
        }
    }
}

/// True iff `d` divides `p` exactly over the integers.
pub fn divides(d: &QPoly, p: &QPoly) -> bool {
    matches!(p.div_rem(d), Some((_, r)) if r.is_zero())
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for QPoly {
            type Output = QPoly;
            fn $op(self, rhs: QPoly) -> QPoly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&QPoly> for QPoly {
            type Output = QPoly;
            fn $op(self, rhs: &QPoly) -> QPoly {
                (&self).$op(rhs)
            }
        }
        impl $Op<QPoly> for &QPoly {
            type Output = QPoly;
            fn $op(self, rhs: QPoly) -> QPoly {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64_coeffs(cs)
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + q
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(a.eval(&BigInt::from(1)), BigInt::from(2));
    }

    #[test]
    fn exact_division_and_divides() {
        let d = p(&[1, 1]);
        let prod = &d * &p(&[2, 0, 5]);
        assert_eq!(prod.div_exact(&d).unwrap(), p(&[2, 0, 5]));
        assert!(divides(&d, &prod));
        assert!(!divides(&d, &QPoly::one()));
        assert!(p(&[1, 1, 1]).div_exact(&d).is_err());
    }

    #[test]
    fn division_with_nonmonic_divisor() {
        let d = p(&[2, 2]);
        let good = &d * &p(&[-1, 3]);
        assert!(divides(&d, &good));
        // 1 + q is divisible over the rationals but not the integers
        assert!(!divides(&d, &p(&[1, 1])));
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[1, 3, 2, 1]).to_string(), "1 + 3q + 2q^2 + q^3");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-q + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
