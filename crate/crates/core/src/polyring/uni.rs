use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat_add_assign, rat_mul, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Smallest k with a nonzero coefficient of z^k; `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True iff the coefficient vector reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// z^d p(1/z) for d = deg p.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::from_coeffs(c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| rat_mul(v, c)).collect())
    }

    /// Multiplies by z^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Divides by z^k; fails unless the k lowest coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// p(q(z)).
    pub fn compose(&self, q: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder of long division.
    pub fn div_rem(&self, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lead = den.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = den.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                let t = rat_mul(&c, d);
                rem[k + i] -= t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Returns `q` with `self = q * den`, or `NotDivisible` if the remainder
    /// is nonzero.
    pub fn exact_divide(&self, den: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(den)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z + c;
        }
        acc
    }

    /// Coefficients as doubles, failing if any is not finite.
    pub fn to_f64_coeffs(&self) -> Result<Vec<f64>> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }

    /// Complex evaluation by compensated (double-double) Horner.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        Ok(super::CompensatedPoly::new(self)?.eval(z).value)
    }

    /// Sum of |c_k|, the 1-norm of the coefficient vector.
    pub fn norm1(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> DisplayUni<'a> {
        DisplayUni { poly: self, var }
    }
}

pub(crate) fn rat_to_f64(c: &Rational) -> Result<f64> {
    match c.to_f64() {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Overflow(c.to_string())),
    }
}

pub struct DisplayUni<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for DisplayUni<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || k == 0 {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("z"))
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeff(k);
            if let Some(r) = rhs.coeffs.get(k) {
                rat_add_assign(&mut c, r);
            }
            v.push(c);
        }
        UniPoly::from_coeffs(v)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rat_add_assign(&mut v[i + j], &rat_mul(a, b));
            }
        }
        UniPoly::from_coeffs(v)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_divide_table5_row() {
        // ((z^2+z+1)^3 - z^3) / (z^2+1)
        let num = &UniPoly::from_i64(&[1, 1, 1]).pow(3) - &UniPoly::monomial(Rational::one(), 3);
        let q = num.exact_divide(&UniPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(q, UniPoly::from_i64(&[1, 3, 5, 3, 1]));
        assert_eq!(q.to_string(), "z^4+3z^3+5z^2+3z+1");
    }

    #[test]
    fn exact_divide_trivial_cases() {
        let p = UniPoly::from_i64(&[4, 0, -2, 7]);
        assert_eq!(p.exact_divide(&UniPoly::one()).unwrap(), p);
        let w3 = UniPoly::from_i64(&[-1, 0, 0, 1]);
        assert_eq!(
            w3.exact_divide(&UniPoly::from_i64(&[-1, 1])).unwrap(),
            UniPoly::from_i64(&[1, 1, 1])
        );
    }

    #[test]
    fn exact_divide_reports_remainder_and_zero_divisor() {
        let p = UniPoly::from_i64(&[1, 0, 1]);
        assert!(matches!(
            p.exact_divide(&UniPoly::from_i64(&[1, 1])),
            Err(Error::NotDivisible)
        ));
        assert!(matches!(
            p.exact_divide(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn palindromes() {
        assert!(UniPoly::from_i64(&[1, 3, 5, 3, 1]).is_palindromic());
        assert!(!UniPoly::from_i64(&[0, 2, 1]).is_palindromic());
        assert_eq!(UniPoly::zero().degree(), -1);
    }

    #[test]
    fn eval_complex_root_of_linear() {
        let p = UniPoly::from_i64(&[1, 3]);
        let v = p.eval_complex(Complex64::new(-1.0 / 3.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-16);
    }

    #[test]
    fn compose_and_derivative() {
        let p = UniPoly::from_i64(&[1, 1, 1]);
        let q = UniPoly::from_i64(&[1, 2]);
        // 1 + (2z+1) + (2z+1)^2 = 4z^2 + 6z + 3
        assert_eq!(p.compose(&q), UniPoly::from_i64(&[3, 6, 4]));
        assert_eq!(p.derivative(), UniPoly::from_i64(&[1, 2]));
    }
}
