//! Bivariate polynomials in `(x, q)`, the q-difference operator, and the
//! q-Gandhi polynomials of the second kind.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::qpolys::QPoly;

/// A polynomial in `x` whose coefficients are integer polynomials in `q`.
///
/// `rows[i]` is the coefficient of `x^i`; the last row is nonzero unless
/// the whole polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct XQPoly {
    rows: Vec<QPoly>,
}

impl XQPoly {
    pub fn zero() -> Self {
        XQPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        XQPoly::constant(QPoly::one())
    }

    /// A polynomial constant in `x`.
    pub fn constant(c: QPoly) -> Self {
        XQPoly::from_rows(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        XQPoly::from_rows(vec![QPoly::zero(), QPoly::one()])
    }

    /// The polynomial `1 + qx`.
    pub fn one_plus_qx() -> Self {
        XQPoly::from_rows(vec![QPoly::one(), QPoly::q()])
    }

    pub fn from_rows(mut rows: Vec<QPoly>) -> Self {
        while rows.last().is_some_and(QPoly::is_zero) {
            rows.pop();
        }
        XQPoly { rows }
    }

    /// Coefficients of increasing powers of `x`.
    pub fn rows(&self) -> &[QPoly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `x`, or `None` for zero.
    pub fn xdeg(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Multiplies by `x`.
    pub fn mul_x(&self) -> XQPoly {
        if self.is_zero() {
            return XQPoly::zero();
        }
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        rows.push(QPoly::zero());
        rows.extend(self.rows.iter().cloned());
        XQPoly { rows }
    }

    /// Substitutes `x <- 1 + qx`, by Horner evaluation in the `x` variable.
    pub fn subst_one_plus_qx(&self) -> XQPoly {
        let arg = XQPoly::one_plus_qx();
        let mut acc = XQPoly::zero();
        for row in self.rows.iter().rev() {
            acc = &(&acc * &arg) + &XQPoly::constant(row.clone());
        }
        acc
    }

    /// Evaluates at `x = 1` (sum of the rows).
    pub fn eval_x_one(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for row in &self.rows {
            acc = &acc + row;
        }
        acc
    }

    /// Exact division by `1 + c·x`, done bottom-up so no coefficient
    /// division is ever needed; a nonzero remainder is an integrity error.
    fn div_exact_one_plus_cx(&self, c: &QPoly) -> Result<XQPoly> {
        if self.is_zero() {
            return Ok(XQPoly::zero());
        }
        let m = self.rows.len() - 1;
        if m == 0 {
            return Err(Error::Integrity(
                "division by 1 + c*x of a nonzero constant".into(),
            ));
        }
        let mut quot: Vec<QPoly> = Vec::with_capacity(m);
        for j in 0..m {
            let mut row = self.rows[j].clone();
            if j > 0 {
                row = &row - &(c * &quot[j - 1]);
            }
            quot.push(row);
        }
        if self.rows[m] != c * &quot[m - 1] {
            return Err(Error::Integrity("inexact division by 1 + c*x".into()));
        }
        Ok(XQPoly::from_rows(quot))
    }
}

impl Add for &XQPoly {
    type Output = XQPoly;
    fn add(self, rhs: &XQPoly) -> XQPoly {
        let mut rows = vec![QPoly::zero(); self.rows.len().max(rhs.rows.len())];
        for (i, r) in self.rows.iter().enumerate() {
            rows[i] = &rows[i] + r;
        }
        for (i, r) in rhs.rows.iter().enumerate() {
            rows[i] = &rows[i] + r;
        }
        XQPoly::from_rows(rows)
    }
}

impl Sub for &XQPoly {
    type Output = XQPoly;
    fn sub(self, rhs: &XQPoly) -> XQPoly {
        let mut rows = vec![QPoly::zero(); self.rows.len().max(rhs.rows.len())];
        for (i, r) in self.rows.iter().enumerate() {
            rows[i] = &rows[i] + r;
        }
        for (i, r) in rhs.rows.iter().enumerate() {
            rows[i] = &rows[i] - r;
        }
        XQPoly::from_rows(rows)
    }
}

impl Mul for &XQPoly {
    type Output = XQPoly;
    fn mul(self, rhs: &XQPoly) -> XQPoly {
        if self.is_zero() || rhs.is_zero() {
            return XQPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        XQPoly::from_rows(rows)
    }
}

impl fmt::Display for XQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", row)?,
                1 => write!(f, "({})x", row)?,
                _ => write!(f, "({})x^{}", row, i)?,
            }
        }
        Ok(())
    }
}

/// The q-difference operator `P -> (P(1+qx) - P(x)) / (1 + qx - x)`.
///
/// The quotient is exact for every polynomial; a remainder signals an
/// arithmetic bug and is reported as an integrity error.
pub fn delta_q(p: &XQPoly) -> Result<XQPoly> {
    let diff = &p.subst_one_plus_qx() - p;
    // divisor is 1 + (q-1)x
    let c = QPoly::from_i64_coeffs(&[-1, 1]);
    diff.div_exact_one_plus_cx(&c)
}

/// The q-Gandhi polynomial `C_n(x, q)` of the second kind, from
/// `C_1 = 1` and `C_{n+1} = (1+qx) * delta_q(x * C_n)`.
pub fn gandhi(n: usize) -> XQPoly {
    assert!(n >= 1, "gandhi polynomials are indexed from 1");
    let one_plus_qx = XQPoly::one_plus_qx();
    let mut c = XQPoly::one();
    for _ in 1..n {
        let d = delta_q(&c.mul_x()).expect("delta_q of a polynomial is exact");
        c = &one_plus_qx * &d;
    }
    c
}

/// The q-extended normalized median Genocchi polynomial
/// `cbar_n(q) = C_n(1, q) / (1+q)^{n-1}`.
///
/// The divisibility is a theorem; an inexact division is an integrity
/// error.
pub fn cbar(n: usize) -> Result<QPoly> {
    assert!(n >= 1, "cbar is indexed from 1");
    let at_one = gandhi(n).eval_x_one();
    let divisor = QPoly::from_i64_coeffs(&[1, 1]).pow(n - 1);
    at_one.div_exact(&divisor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_q_of_x_is_one() {
        // ((1+qx) - x) / (1+qx-x) = 1
        assert_eq!(delta_q(&XQPoly::x()).unwrap(), XQPoly::one());
    }

    #[test]
    fn delta_q_of_qx_squared() {
        // q((1+qx)^2 - x^2) / (1+qx-x) = q(1 + qx + x)
        let p = &XQPoly::constant(QPoly::q()) * &(&XQPoly::x() * &XQPoly::x());
        // q(1 + qx + x) = q + (q + q^2)x
        let expected = XQPoly::from_rows(vec![QPoly::q(), QPoly::from_i64_coeffs(&[0, 1, 1])]);
        assert_eq!(delta_q(&p).unwrap(), expected);
    }

    #[test]
    fn delta_q_of_constant_is_zero() {
        let c = XQPoly::constant(QPoly::from_i64_coeffs(&[7, -3]));
        assert_eq!(delta_q(&c).unwrap(), XQPoly::zero());
    }

    #[test]
    fn gandhi_small_cases() {
        assert_eq!(gandhi(1), XQPoly::one());
        assert_eq!(gandhi(2), XQPoly::one_plus_qx());
        // C_3(1, q) = (1+q)^3
        assert_eq!(
            gandhi(3).eval_x_one(),
            QPoly::from_i64_coeffs(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn cbar_small_cases() {
        assert_eq!(cbar(1).unwrap(), QPoly::one());
        assert_eq!(cbar(2).unwrap(), QPoly::one());
        assert_eq!(cbar(3).unwrap(), QPoly::from_i64_coeffs(&[1, 1]));
    }
}
