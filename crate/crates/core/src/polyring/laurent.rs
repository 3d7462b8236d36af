use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{Rational, UniPoly};

/// A Laurent polynomial `z^low * body(z)` with `body(0) != 0` (or zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    low: i64,
    body: UniPoly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            body: UniPoly::zero(),
        }
    }

    pub fn new(low: i64, body: UniPoly) -> Self {
        match body.low_degree() {
            None => Self::zero(),
            Some(k) => LaurentPoly {
                low: low + k as i64,
                body: body.shift_down(k).expect("low coefficients vanish"),
            },
        }
    }

    pub fn from_poly(p: &UniPoly) -> Self {
        Self::new(0, p.clone())
    }

    /// The single term c z^k.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::new(k, UniPoly::constant(c))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let mut coeffs: Vec<Rational> = Vec::new();
        for (k, c) in terms {
            let idx = (k - low) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, Rational::zero());
            }
            coeffs[idx] += c;
        }
        Self::new(low, UniPoly::from_coeffs(coeffs))
    }

    /// Exponent of the lowest-order term.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// The polynomial part once the power of z is stripped; its constant
    /// term is nonzero, so it has exactly the nonzero zeros of `self`.
    pub fn body(&self) -> &UniPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn high(&self) -> i64 {
        self.low + self.body.degree() as i64
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            body: self.body.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::new(self.low * k as i64, self.body.pow(k))
    }

    /// Converts to an ordinary polynomial when no negative powers occur.
    pub fn to_poly(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        (self.low >= 0).then(|| self.body.shift_up(self.low as usize))
    }

    fn aligned(&self, other: &Self) -> (i64, UniPoly, UniPoly) {
        let low = self.low.min(other.low);
        let a = self.body.shift_up((self.low - low) as usize);
        let b = other.body.shift_up((other.low - low) as usize);
        (low, a, b)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (low, a, b) = self.aligned(rhs);
        LaurentPoly::new(low, &a + &b)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let neg = LaurentPoly {
            low: rhs.low,
            body: -&rhs.body,
        };
        self + &neg
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + rhs.low, &self.body * &rhs.body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn normalizes_low_power() {
        let p = LaurentPoly::new(-2, UniPoly::from_i64(&[0, 0, 3, 1]));
        assert_eq!(p.low(), 0);
        assert_eq!(p.to_poly(), Some(UniPoly::from_i64(&[3, 1])));
    }

    #[test]
    fn reciprocal_shift_cancels() {
        // (z + 1 + 1/z) * z = z^2 + z + 1
        let l = LaurentPoly::from_terms([
            (1, Rational::one()),
            (0, Rational::one()),
            (-1, Rational::one()),
        ]);
        assert_eq!(l.shift(1).to_poly(), Some(UniPoly::from_i64(&[1, 1, 1])));
        assert_eq!(l.to_poly(), None);
        let sq = &l * &l;
        assert_eq!(sq.low(), -2);
        assert_eq!(sq.high(), 2);
    }
}
