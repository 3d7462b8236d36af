//! Univariate specializations of `Q_n` and `R_n`: `y = z = 1` (this file),
//! `x = y = z` ([`diagonal`]), `x = 1` ([`x_one`]), and the enumerator
//! cross-checks of their coefficients ([`stats`]).

pub mod diagonal;
pub mod stats;
pub mod x_one;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ensure, Result};
use crate::polyring::{LaurentPoly, MultiPoly, Rational, UniPoly};
use crate::sequences;

pub use diagonal::*;
pub use x_one::*;

/// Sends variable `k` to `z^{exps[k]}`. Every specialization in this module
/// is of this monomial kind, so no general substitution is needed.
pub fn monomial_specialize(p: &MultiPoly, exps: &[i64]) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, c)| {
        let k: i64 = e.iter().zip(exps).map(|(&a, &s)| a as i64 * s).sum();
        (k, c.clone())
    }))
}

pub(crate) fn specialize_poly(p: &MultiPoly, exps: &[i64]) -> UniPoly {
    monomial_specialize(p, exps)
        .to_poly()
        .expect("nonnegative exponents give a polynomial")
}

/// `Q_0(x)..=Q_{n_max}(x)`, i.e. `Q_n(x, 1, 1)`.
#[allow(non_snake_case)]
pub fn Qx_sequence(n_max: u32) -> Vec<UniPoly> {
    sequences::q_sequence(2, n_max)
        .expect("base 2")
        .iter()
        .map(|p| specialize_poly(p, &[1, 0, 0]))
        .collect()
}

/// `R_0(x)..=R_{n_max}(x)`, i.e. `R_n(x, 1, 1)`.
#[allow(non_snake_case)]
pub fn Rx_sequence(n_max: u32) -> Vec<UniPoly> {
    sequences::r_sequence(2, n_max)
        .expect("base 2")
        .iter()
        .map(|p| specialize_poly(p, &[1, 0, 0]))
        .collect()
}

#[allow(non_snake_case)]
pub fn Qx(n: u32) -> UniPoly {
    Qx_sequence(n).pop().expect("non-empty")
}

#[allow(non_snake_case)]
pub fn Rx(n: u32) -> UniPoly {
    Rx_sequence(n).pop().expect("non-empty")
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Row `n` of the trinomial triangle, entry `j` being the coefficient of
/// `x^j` in `(1 + x + x²)^n`, summed directly over the multinomial terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialRow {
    pub n: u32,
    pub entries: Vec<BigUint>,
}

impl TrinomialRow {
    pub fn new(n: u32) -> Self {
        let n64 = n as u64;
        let entries = (0..=2 * n64)
            .map(|j| {
                // a copies of x², b copies of x, with b + 2a = j
                let mut s = BigUint::zero();
                for a in 0..=j / 2 {
                    let b = j - 2 * a;
                    if a + b > n64 {
                        continue;
                    }
                    s += factorial(n64) / (factorial(a) * factorial(b) * factorial(n64 - a - b));
                }
                s
            })
            .collect();
        TrinomialRow { n, entries }
    }

    pub fn entry(&self, j: usize) -> BigUint {
        self.entries.get(j).cloned().unwrap_or_default()
    }
}

fn as_int(c: &Rational) -> Option<BigInt> {
    c.is_integer().then(|| c.to_integer())
}

/// Palindromic of degree n, coefficient sums, `R_{n+1}(1) = Q_n(1) + 1` and
/// the divisibility `Q_{m−1} | Q_{n−1}` for `m | n ≤ n_max + 1`. The
/// statement about the zeros is numerical and lives in [`crate::zeros`].
pub fn check_qx_structure(n_max: u32) -> Result<()> {
    let qs = Qx_sequence(n_max + 1);
    let rs = Rx_sequence(n_max + 1);
    let three = BigInt::from(3);
    for n in 1..=n_max {
        let (q, r) = (&qs[n as usize], &rs[n as usize]);
        let nn = n as u64;
        for (name, p) in [("Q_n(x)", q), ("R_n(x)", r)] {
            ensure(
                p.degree() == n as isize && p.is_palindromic(),
                "palindromic of degree n",
                nn,
                || format!("{name} = {p}"),
            )?;
        }
        let qsum = q.eval(&Rational::one());
        let rsum = r.eval(&Rational::one());
        ensure(
            as_int(&qsum) == Some((three.pow(n + 1) - 1) / 2),
            "Q_n(1) = (3^{n+1}-1)/2",
            nn,
            || format!("got {qsum}"),
        )?;
        ensure(
            as_int(&rsum) == Some((three.pow(n) + 1) / 2),
            "R_n(1) = (3^n+1)/2",
            nn,
            || format!("got {rsum}"),
        )?;
        let rnext = rs[n as usize + 1].eval(&Rational::one());
        ensure(
            rnext == &qsum + Rational::one(),
            "R_{n+1}(1) = Q_n(1) + 1",
            nn,
            || format!("{rnext} vs {qsum}"),
        )?;
    }
    divisibility_check(&qs, n_max + 1)
}

/// `Q_{m−1}(x) | Q_{n−1}(x)` whenever `m | n`, for `n ≤ n_top`.
pub fn divisibility_check(qs: &[UniPoly], n_top: u32) -> Result<()> {
    for n in 1..=n_top {
        for m in (1..=n).filter(|m| n % m == 0) {
            let (num, den) = (&qs[n as usize - 1], &qs[m as usize - 1]);
            ensure(
                num.exact_divide(den).is_ok(),
                "Q_{m-1} | Q_{n-1}",
                n as u64,
                || format!("m = {m}"),
            )?;
        }
    }
    Ok(())
}

/// `x·Q_{n−1}(x²) + R_n(x²) = (1 + x + x²)^n` and the coefficient
/// extraction `r_n(j) = T(n, 2j)`, `q_{n−1}(j) = T(n, 2j+1)` for
/// 1 ≤ n ≤ `n_max`.
pub fn trinomial_checks(n_max: u32) -> Result<()> {
    let qs = Qx_sequence(n_max);
    let rs = Rx_sequence(n_max);
    let x = UniPoly::x();
    let x2 = UniPoly::from_i64(&[0, 0, 1]);
    let tri = UniPoly::from_i64(&[1, 1, 1]);
    for n in 1..=n_max {
        let nn = n as u64;
        let lhs = &(&x * &qs[n as usize - 1].compose(&x2)) + &rs[n as usize].compose(&x2);
        ensure(
            lhs == tri.pow(n),
            "x Q_{n-1}(x^2) + R_n(x^2) = (1+x+x^2)^n",
            nn,
            || format!("left side {lhs}"),
        )?;
        let row = TrinomialRow::new(n);
        for j in 0..=n as usize {
            let r = as_int(&rs[n as usize].coeff(j));
            ensure(
                r == Some(row.entry(2 * j).into()),
                "r_n(j) = T(n, 2j)",
                nn,
                || format!("j = {j}"),
            )?;
        }
        for j in 0..n as usize {
            let q = as_int(&qs[n as usize - 1].coeff(j));
            ensure(
                q == Some(row.entry(2 * j + 1).into()),
                "q_{n-1}(j) = T(n, 2j+1)",
                nn,
                || format!("j = {j}"),
            )?;
        }
        let total: BigUint = row.entries.iter().sum();
        ensure(
            total == BigUint::from(3u32).pow(n),
            "trinomial row sum 3^n",
            nn,
            || format!("got {total}"),
        )?;
    }
    Ok(())
}

pub(crate) fn small(c: &Rational) -> Option<i64> {
    as_int(c).and_then(|v| v.to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(Qx(2), UniPoly::from_i64(&[3, 7, 3]));
        assert_eq!(Rx(4), UniPoly::from_i64(&[1, 10, 19, 10, 1]));
        assert_eq!(Qx(0), UniPoly::one());
    }

    #[test]
    fn trinomial_row_three() {
        let row = TrinomialRow::new(3);
        let v: Vec<u64> = row.entries.iter().map(|e| e.to_u64().unwrap()).collect();
        assert_eq!(v, vec![1, 3, 6, 7, 6, 3, 1]);
    }

    #[test]
    fn structural_checks() {
        check_qx_structure(8).unwrap();
        trinomial_checks(8).unwrap();
    }

    #[test]
    fn quotient_for_m2_n4() {
        let q = Qx(3).exact_divide(&Qx(1)).unwrap();
        assert_eq!(q, UniPoly::from_i64(&[2, 6, 2]));
    }
}
