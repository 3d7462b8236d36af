//! Exact polynomial arithmetic over arbitrary-precision rationals.

mod compensated;
mod json;
mod laurent;
mod multi;
mod parse;
mod uni;

pub use compensated::{CompensatedPoly, Evaluation};
pub use json::{format_rational, parse_rational};
pub use laurent::LaurentPoly;
pub use multi::{canonical_cmp, default_var_names, DisplayPoly, MultiPoly, VarId};
pub use parse::parse_poly;
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

// Integer fast paths: most coefficients in this crate are integers, and the
// generic rational operations always go through a gcd.
#[inline]
pub(crate) fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

#[inline]
pub(crate) fn rat_add_assign(acc: &mut Rational, v: &Rational) {
    if acc.is_integer() && v.is_integer() {
        *acc = Rational::from_integer(acc.numer() + v.numer());
    } else {
        *acc += v;
    }
}
