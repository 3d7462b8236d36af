use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat_add_assign, rat_mul, Rational, UniPoly};
use crate::error::{Error, Result};

/// Index of a variable. Index 0 is `x`, index `k` (1 ≤ k ≤ b) is `y_k`.
pub type VarId = usize;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by their exponent vector; zero coefficients are never
/// stored, so the zero polynomial is the empty map and equality of two
/// polynomials is equality of the maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Display order: total degree descending, then exponent vectors compared
/// lexicographically (x first) descending.
pub fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// Default variable names for a polynomial of the given arity: `x,y,z` for
/// arity 3 (the binary case), `x,y1,..,yb` otherwise.
pub fn default_var_names(arity: usize) -> Vec<String> {
    match arity {
        1 => vec!["x".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => std::iter::once("x".to_string())
            .chain((1..arity).map(|k| format!("y{k}")))
            .collect(),
    }
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be at least 1");
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, vec![0; arity], c)
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, Rational::from_integer(BigInt::from(c)))
    }

    /// The single variable `var` as a polynomial of the given arity.
    pub fn var(arity: usize, var: VarId) -> Self {
        assert!(
            var < arity,
            "variable index {var} out of range for arity {arity}"
        );
        let mut e = vec![0; arity];
        e[var] = 1;
        Self::monomial(arity, e, Rational::one())
    }

    pub fn monomial(arity: usize, expo: Vec<u32>, c: Rational) -> Self {
        assert_eq!(expo.len(), arity, "exponent vector length must equal arity");
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(expo, c);
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, summing repeated exponents
    /// and dropping zero coefficients.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                rat_add_assign(o.get_mut(), &c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage (plain lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Terms sorted in the canonical display order.
    pub fn canonical_terms(&self) -> Vec<(&[u32], &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    /// Coefficient of the monomial with exponent vector `expo`; zero when absent.
    pub fn coefficient_of(&self, expo: &[u32]) -> Rational {
        self.terms.get(expo).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, or -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>())
            .max()
            .unwrap_or(-1)
    }

    /// Degree in one variable, or -1 for the zero polynomial.
    pub fn degree_in(&self, var: VarId) -> i64 {
        self.terms.keys().map(|e| e[var] as i64).max().unwrap_or(-1)
    }

    /// Which variables occur with a positive exponent in some term.
    pub fn support(&self) -> Vec<bool> {
        let mut used = vec![false; self.arity];
        for e in self.terms.keys() {
            for (u, &x) in used.iter_mut().zip(e) {
                *u |= x > 0;
            }
        }
        used
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::with_capacity(self.len() * other.len());
        let mut key = vec![0u32; self.arity];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for ((k, a), b) in key.iter_mut().zip(ea).zip(eb) {
                    *k = a + b;
                }
                let prod = rat_mul(ca, cb);
                match acc.get_mut(key.as_slice()) {
                    Some(slot) => rat_add_assign(slot, &prod),
                    None => {
                        acc.insert(key.clone(), prod);
                    }
                }
            }
        }
        Ok(MultiPoly {
            arity: self.arity,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), rat_mul(v, c)))
                .collect(),
        }
    }

    /// Multiplies every term by the monomial with exponent vector `shift`.
    pub fn mul_monomial(&self, shift: &[u32]) -> Self {
        assert_eq!(shift.len(), self.arity);
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.arity);
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

    /// Replaces variable `i` by `images[i]` for every variable. All images
    /// must share one arity, which becomes the arity of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() < self.arity {
            return Err(Error::UnmappedVariable(images.len()));
        }
        let target = images
            .first()
            .map(|p| p.arity)
            .ok_or(Error::UnmappedVariable(0))?;
        for img in &images[..self.arity] {
            if img.arity != target {
                return Err(Error::ArityMismatch {
                    left: target,
                    right: img.arity,
                });
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = images[..self.arity]
            .iter()
            .map(|img| vec![Self::one(target), img.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[v];
                while pw.len() <= k as usize {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                term = &term * &pw[k as usize];
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(v.clone(), k as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Sum of the coefficients, i.e. the value with every variable set to 1.
    pub fn eval_all_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Exact division in Q[vars]. Fails with `NotDivisible` when a nonzero
    /// remainder is left.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Lexicographic leading terms; exact division never needs the
        // remainder bookkeeping of the general algorithm.
        let (lead_e, lead_c) = den.terms.iter().next_back().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            if re.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible);
            }
            let qe: Vec<u32> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = rc / lead_c;
            let step = den.mul_monomial(&qe).scale(&qc);
            quot.add_term(qe, qc);
            rem = &rem - &step;
        }
        Ok(quot)
    }

    /// Converts to a univariate polynomial in `var`; every other variable
    /// must be absent.
    pub fn to_uni(&self, var: VarId) -> Result<UniPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return Err(Error::InvalidArgument(format!(
                    "polynomial is not univariate in variable {var}"
                )));
            }
            let k = e[var] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    pub fn from_uni(p: &UniPoly, arity: usize, var: VarId) -> Self {
        let mut out = Self::zero(arity);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; arity];
            e[var] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Renders with the given variable names in canonical order.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> DisplayPoly<'a> {
        DisplayPoly { poly: self, names }
    }
}

pub struct DisplayPoly<'a> {
    poly: &'a MultiPoly,
    names: &'a [String],
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.canonical_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let joiner = if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            "*"
        };
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            let mut wrote = false;
            if !abs.is_one() || is_const {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "({}/{})", abs.numer(), abs.denom())?;
                }
                wrote = true;
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "{joiner}")?;
                }
                write!(f, "{}", self.names[v])?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.arity);
        write!(f, "{}", self.display_with(&names))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$checked(&rhs).expect("polynomial arity mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(3, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(3, 1)
    }
    fn z() -> MultiPoly {
        MultiPoly::var(3, 2)
    }

    #[test]
    fn cancellation_and_square() {
        let s = &(&x() + &y()) + &(&x() - &y());
        assert_eq!(s, x().scale(&Rational::from_integer(2.into())));
        let sq = &(&x() + &y()) * &(&x() + &y());
        assert_eq!(sq.to_string(), "x^2+2xy+y^2");
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = MultiPoly::var(2, 0);
        assert!(matches!(
            a.checked_add(&x()),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        ));
        assert!(a.checked_mul(&x()).is_err());
    }

    #[test]
    fn zero_polynomial_has_degree_minus_one() {
        let zero = &x() - &x();
        assert!(zero.is_zero());
        assert_eq!(zero.total_degree(), -1);
        assert_eq!(zero.to_string(), "0");
    }

    #[test]
    fn substitute_p2_to_3z_plus_1() {
        let p2 = &(&(&x() * &y()) + &x()) + &(&y() + &z());
        let one = MultiPoly::one(3);
        let q = p2.substitute(&[one, z(), z()]).unwrap();
        assert_eq!(q.to_string(), "3z+1");
        let id = p2.substitute(&[x(), y(), z()]).unwrap();
        assert_eq!(id, p2);
    }

    #[test]
    fn substitute_requires_every_variable() {
        assert!(matches!(
            x().substitute(&[x(), y()]),
            Err(Error::UnmappedVariable(2))
        ));
    }

    #[test]
    fn multivariate_exact_division() {
        let a = &(&x() + &y()) + &MultiPoly::one(3);
        let b = &z() + &MultiPoly::one(3);
        let prod = &a * &b;
        assert_eq!(prod.exact_divide(&b).unwrap(), a);
        assert!(matches!(a.exact_divide(&b), Err(Error::NotDivisible)));
        assert!(matches!(
            a.exact_divide(&MultiPoly::zero(3)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn coefficient_of_absent_monomial_is_zero() {
        let p = &x() * &y();
        assert!(p.coefficient_of(&[1, 0, 0]).is_zero());
        assert!(p.coefficient_of(&[1, 1, 0]).is_one());
    }
}
