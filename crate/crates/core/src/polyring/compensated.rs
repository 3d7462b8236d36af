//! Double-double Horner evaluation for complex arguments.
//!
//! Each coefficient is split into a pair of doubles (hi + lo) and the Horner
//! recurrence is carried out with error-free transformations, so the result
//! is as accurate as if computed in roughly twice the working precision.

use num_complex::Complex64;
use num_traits::Signed;

use super::{uni::rat_to_f64, Rational, UniPoly};
use crate::error::Result;

#[derive(Clone, Copy, Debug, Default)]
struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

impl Dd {
    #[inline]
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        quick_two_sum(s, e + self.lo + o.lo)
    }

    #[inline]
    fn mul_f64(self, b: f64) -> Dd {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p);
        quick_two_sum(p, e + self.lo * b)
    }

    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl DdComplex {
    #[inline]
    fn mul_add(self, z: Complex64, c: Dd) -> DdComplex {
        let re = self
            .re
            .mul_f64(z.re)
            .add(self.im.mul_f64(z.im).neg())
            .add(c);
        let im = self.re.mul_f64(z.im).add(self.im.mul_f64(z.re));
        DdComplex { re, im }
    }

    #[inline]
    fn mul_add_dd(self, z: Complex64, c: DdComplex) -> DdComplex {
        let re = self
            .re
            .mul_f64(z.re)
            .add(self.im.mul_f64(z.im).neg())
            .add(c.re);
        let im = self.re.mul_f64(z.im).add(self.im.mul_f64(z.re)).add(c.im);
        DdComplex { re, im }
    }

    fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Result of one evaluation: the value and the running bound
/// `sum |c_k| |z|^k` used to scale residual tests.
#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub value: Complex64,
    pub abs_bound: f64,
}

/// A polynomial prepared for repeated compensated evaluation.
#[derive(Clone, Debug)]
pub struct CompensatedPoly {
    coeffs: Vec<Dd>,
    abs: Vec<f64>,
}

impl CompensatedPoly {
    pub fn new(p: &UniPoly) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(p.coeffs().len());
        let mut abs = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            let hi = rat_to_f64(c)?;
            let rest: Rational = c - Rational::from_float(hi).expect("finite");
            let lo = rat_to_f64(&rest)?;
            coeffs.push(Dd { hi, lo });
            abs.push(rat_to_f64(&c.abs())?);
        }
        Ok(CompensatedPoly { coeffs, abs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients rounded to double, constant term first.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn eval(&self, z: Complex64) -> Evaluation {
        let mut acc = DdComplex::default();
        let mut bound = 0.0;
        let r = z.norm();
        for (c, a) in self.coeffs.iter().zip(&self.abs).rev() {
            acc = acc.mul_add(z, *c);
            bound = bound * r + a;
        }
        Evaluation {
            value: acc.value(),
            abs_bound: bound,
        }
    }

    /// Value and first derivative at `z`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = DdComplex::default();
        let mut dp = DdComplex::default();
        for c in self.coeffs.iter().rev() {
            dp = dp.mul_add_dd(z, p);
            p = p.mul_add(z, *c);
        }
        (p.value(), dp.value())
    }

    /// The k-th derivative, with the falling-factorial scaling applied in
    /// double-double arithmetic.
    pub fn derivative(&self, k: usize) -> CompensatedPoly {
        let n = self.coeffs.len();
        let (coeffs, abs) = (k..n.max(k))
            .map(|i| {
                let falling: f64 = ((i - k + 1)..=i).map(|t| t as f64).product();
                (self.coeffs[i].mul_f64(falling), self.abs[i] * falling)
            })
            .unzip();
        CompensatedPoly { coeffs, abs }
    }

    /// Value of the k-th derivative at `z`.
    pub fn eval_derivative(&self, k: usize, z: Complex64) -> Complex64 {
        self.derivative(k).eval(z).value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_beats_naive_near_multiple_root() {
        // (z - 1)^7 expanded; near z = 1 naive Horner is dominated by cancellation.
        let p = UniPoly::from_i64(&[-1, 7, -21, 35, -35, 21, -7, 1]);
        let cp = CompensatedPoly::new(&p).unwrap();
        let z = Complex64::new(1.0 + 1e-3, 0.0);
        let exact = 1e-21_f64;
        let got = cp.eval(z).value.re;
        assert!((got - exact).abs() < 1e-27, "got {got:e}");
    }

    #[test]
    fn derivative_matches() {
        let p = UniPoly::from_i64(&[1, 2, 3]);
        let cp = CompensatedPoly::new(&p).unwrap();
        let (v, d) = cp.eval_with_derivative(Complex64::new(2.0, 1.0));
        assert!((v - Complex64::new(14.0, 14.0)).norm() < 1e-12);
        assert!((d - Complex64::new(14.0, 6.0)).norm() < 1e-12);
        assert!((cp.eval_derivative(2, Complex64::new(5.0, 0.0)).re - 6.0).abs() < 1e-12);
    }
}
