//! The specialization `x = 1`: `Q_n(1, y, z)`, its monomial images
//! `Q_n(1, z^α, z^β)`, and their cyclotomic factorizations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{monomial_specialize, TrinomialRow};
use crate::error::{ensure, Error, Result};
use crate::polyring::{rat, LaurentPoly, MultiPoly, Rational, UniPoly};
use crate::sequences;

/// Moves every term of `p` to arity `target`, sending variable `k` to
/// `map[k]` (or to 1 when `map[k]` is `None`).
fn remap(p: &MultiPoly, target: usize, map: &[Option<usize>]) -> MultiPoly {
    let terms = p.terms().map(|(e, c)| {
        let mut out = vec![0u32; target];
        for (k, &a) in e.iter().enumerate() {
            if let Some(t) = map[k] {
                out[t] += a;
            }
        }
        (out, c.clone())
    });
    MultiPoly::from_terms(target, terms).expect("exponent vectors built at the target arity")
}

/// `Q_n(1, y, z)` as a polynomial in `(x, y, z)` free of `x`, obtained from
/// the recurrence by substitution.
#[allow(non_snake_case)]
pub fn Q1_general(n: u32) -> MultiPoly {
    let q = sequences::Q_poly(2, n).expect("base 2");
    remap(&q, 3, &[None, Some(1), Some(2)])
}

/// `((y + z + 1)^{n+1} − y^{n+1}) / (z + 1)` by exact division.
pub fn q1_general_closed(n: u32) -> Result<MultiPoly> {
    closed_form(3, 1, 2, n)
}

fn closed_form(arity: usize, yv: usize, zv: usize, n: u32) -> Result<MultiPoly> {
    let y = MultiPoly::var(arity, yv);
    let z = MultiPoly::var(arity, zv);
    let one = MultiPoly::one(arity);
    let num = &(&(&y + &z) + &one).pow(n + 1) - &y.pow(n + 1);
    num.exact_divide(&(&z + &one))
}

/// Base-`b` version with `x = 1`, `y_{b−1} = y_1`: must equal the binary
/// closed form in `(y_1, y_b)`.
pub fn check_base_closed_form(b: u32, n_max: u32) -> Result<()> {
    let qs = sequences::q_sequence(b, n_max)?;
    let mut map = vec![None; sequences::arity(b)];
    map[1] = Some(1);
    map[b as usize - 1] = Some(1);
    map[b as usize] = Some(2);
    for (n, q) in qs.iter().enumerate() {
        // any stray y_k would be silently dropped by remap
        let stray = q
            .support()
            .iter()
            .enumerate()
            .any(|(k, &used)| used && k > 0 && map[k].is_none());
        ensure(!stray, "x = 1, y_{b-1} = y_1 closed form", n as u64, || {
            format!("base {b}: unexpected variable")
        })?;
        let lhs = remap(q, 3, &map);
        let rhs = closed_form(3, 1, 2, n as u32)?;
        ensure(
            lhs == rhs,
            "x = 1, y_{b-1} = y_1 closed form",
            n as u64,
            || format!("base {b}"),
        )?;
    }
    Ok(())
}

/// `Q_n(1, z^α, z^β)` for any integer exponents, via the recurrence.
pub fn q1_laurent(n: u32, alpha: i64, beta: i64) -> LaurentPoly {
    let q = sequences::Q_poly(2, n).expect("base 2");
    monomial_specialize(&q, &[0, alpha, beta])
}

/// `Q_n(1, z^α, z^β)` for α, β ≥ 0 from the closed form
/// `((z^α + z^β + 1)^{n+1} − z^{α(n+1)}) / (z^β + 1)`.
#[allow(non_snake_case)]
pub fn Q1(n: u32, alpha: i64, beta: i64) -> Result<UniPoly> {
    if alpha < 0 || beta < 0 {
        return Err(Error::InvalidArgument(format!(
            "Q1 needs nonnegative exponents, got ({alpha}, {beta}); use q1_laurent"
        )));
    }
    if alpha == 0 && beta == 0 {
        return Err(Error::InvalidArgument(
            "(alpha, beta) = (0, 0) is excluded".into(),
        ));
    }
    let (a, b) = (alpha as usize, beta as usize);
    let za = UniPoly::monomial(Rational::one(), a);
    let zb = UniPoly::monomial(Rational::one(), b);
    let base = &(&za + &zb) + &UniPoly::one();
    let num = &base.pow(n + 1) - &za.pow(n + 1);
    num.exact_divide(&(&zb + &UniPoly::one()))
}

/// The closed form and the recurrence agree; for negative exponents the
/// comparison is made after clearing the denominator in the Laurent ring.
pub fn check_q1_paths(n_max: u32, alpha: i64, beta: i64) -> Result<()> {
    for n in 0..=n_max {
        let lau = q1_laurent(n, alpha, beta);
        let nn = n as u64;
        if alpha >= 0 && beta >= 0 {
            let closed = Q1(n, alpha, beta)?;
            ensure(
                lau.to_poly().as_ref() == Some(&closed),
                "Q_n(1,z^a,z^b) closed form",
                nn,
                || format!("(alpha, beta) = ({alpha}, {beta})"),
            )?;
        } else {
            let one = LaurentPoly::monomial(Rational::one(), 0);
            let za = LaurentPoly::monomial(Rational::one(), alpha);
            let zb = LaurentPoly::monomial(Rational::one(), beta);
            let num = &(&(&za + &zb) + &one).pow(n + 1) - &za.pow(n + 1);
            ensure(
                &lau * &(&zb + &one) == num,
                "Q_n(1,z^a,z^b) closed form",
                nn,
                || format!("(alpha, beta) = ({alpha}, {beta})"),
            )?;
        }
    }
    Ok(())
}

pub fn euler_phi(d: u64) -> u64 {
    let (mut n, mut result, mut p) = (d, d, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Φ_d(w)`, dividing `w^d − 1` by `Φ_e` for the proper divisors `e`.
pub fn cyclotomic(d: u64) -> Result<UniPoly> {
    fn go(d: u64, memo: &mut HashMap<u64, UniPoly>) -> Result<UniPoly> {
        if let Some(p) = memo.get(&d) {
            return Ok(p.clone());
        }
        let mut acc = &UniPoly::monomial(Rational::one(), d as usize) - &UniPoly::one();
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            let phi_e = go(e, memo)?;
            acc = acc.exact_divide(&phi_e)?;
        }
        memo.insert(d, acc.clone());
        Ok(acc)
    }
    if d == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic index must be >= 1".into(),
        ));
    }
    go(d, &mut HashMap::new())
}

/// Which monomial family is factored: `Q_n(1, z, z)` or `Q_n(1, z, z²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorVariant {
    /// argument `2 + z^{−1}`
    Zz,
    /// argument `z + 1 + z^{−1}`
    Zz2,
}

impl FactorVariant {
    /// Numerator `N` with the argument written as `N / z`.
    fn numerator(self) -> UniPoly {
        match self {
            FactorVariant::Zz => UniPoly::from_i64(&[1, 2]),
            FactorVariant::Zz2 => UniPoly::from_i64(&[1, 1, 1]),
        }
    }

    pub fn beta(self) -> i64 {
        match self {
            FactorVariant::Zz => 1,
            FactorVariant::Zz2 => 2,
        }
    }
}

/// `z^{φ(d)} Φ_d(N/z) = Σ_k c_k N^k z^{φ(d)−k}`, a polynomial because
/// `Φ_d` has degree exactly `φ(d)`.
pub fn cyclotomic_factor(d: u64, variant: FactorVariant) -> Result<UniPoly> {
    let phi = cyclotomic(d)?;
    let deg = phi.degree() as usize;
    let nump = variant.numerator();
    let mut acc = UniPoly::zero();
    let mut npow = UniPoly::one();
    for (k, c) in phi.coeffs().iter().enumerate() {
        acc = &acc + &npow.scale(c).shift_up(deg - k);
        npow = &npow * &nump;
    }
    Ok(acc)
}

/// Factors `z^{φ(d)} Φ_d(..)` for the divisors `d ≠ 1` of `n + 1`.
#[allow(non_snake_case)]
pub fn factor_Q1(n: u32, variant: FactorVariant) -> Result<Vec<UniPoly>> {
    divisors(n as u64 + 1)
        .into_iter()
        .filter(|&d| d != 1)
        .map(|d| cyclotomic_factor(d, variant))
        .collect()
}

fn product(ps: &[UniPoly]) -> UniPoly {
    ps.iter().fold(UniPoly::one(), |acc, p| &acc * p)
}

/// The factor lists multiply back to `Q_n(1, z, z)` and `Q_n(1, z, z²)`;
/// adding the `d = 1` factor gives the full numerator.
pub fn check_factorizations(n_max: u32) -> Result<()> {
    for n in 1..=n_max {
        for variant in [FactorVariant::Zz, FactorVariant::Zz2] {
            let q = Q1(n, 1, variant.beta())?;
            let factors = factor_Q1(n, variant)?;
            let nn = n as u64;
            ensure(
                product(&factors) == q,
                "product of cyclotomic factors",
                nn,
                || format!("{variant:?}"),
            )?;
            let with_one = &product(&factors) * &cyclotomic_factor(1, variant)?;
            let z = UniPoly::x();
            let num = &variant.numerator().pow(n + 1) - &z.pow(n + 1);
            ensure(
                with_one == num,
                "product over all divisors of n+1",
                nn,
                || format!("{variant:?}"),
            )?;
        }
    }
    Ok(())
}

/// `Q_n(1,z,z)·(z+1) = (2z+1)^{n+1} − z^{n+1}`.
pub fn check_q1_diagonal_closed_form(n_max: u32) -> Result<()> {
    let z = UniPoly::x();
    for n in 0..=n_max {
        let lhs = &Q1(n, 1, 1)? * &UniPoly::from_i64(&[1, 1]);
        let rhs = &UniPoly::from_i64(&[1, 2]).pow(n + 1) - &z.pow(n + 1);
        ensure(
            lhs == rhs,
            "Q_n(1,z,z)(z+1) = (2z+1)^{n+1} - z^{n+1}",
            n as u64,
            || lhs.to_string(),
        )?;
    }
    Ok(())
}

/// `Q_n(1,z,z²)·(z²+1) = (z²+z+1)^{n+1} − z^{n+1}`, checked against the
/// recurrence path so the division in [`Q1`] is not assumed.
pub fn check_q1_quartic_closed_form(n_max: u32) -> Result<()> {
    let z = UniPoly::x();
    for n in 0..=n_max {
        let q = q1_laurent(n, 1, 2).to_poly().expect("polynomial");
        let lhs = &q * &UniPoly::from_i64(&[1, 0, 1]);
        let rhs = &UniPoly::from_i64(&[1, 1, 1]).pow(n + 1) - &z.pow(n + 1);
        ensure(
            lhs == rhs,
            "Q_n(1,z,z^2)(z^2+1) = (z^2+z+1)^{n+1} - z^{n+1}",
            n as u64,
            || lhs.to_string(),
        )?;
    }
    Ok(())
}

/// The two small expansions of `z^{φ(d)} Φ_d(z + 1 + z^{−1})`.
pub fn check_cyclotomic_expansions() -> Result<()> {
    let f2 = cyclotomic_factor(2, FactorVariant::Zz2)?;
    ensure(
        f2 == UniPoly::from_i64(&[1, 1]).pow(2),
        "z Phi_2(z+1+1/z) = (z+1)^2",
        2,
        || f2.to_string(),
    )?;
    let f5 = cyclotomic_factor(5, FactorVariant::Zz2)?;
    let expected = &UniPoly::from_i64(&[1, 2, 4, 3, 1]) * &UniPoly::from_i64(&[1, 3, 4, 2, 1]);
    ensure(
        f5 == expected,
        "z^4 Phi_5(z+1+1/z) splits into two quartics",
        5,
        || f5.to_string(),
    )
}

/// `Q_n(1,z,z²)` is monic, self-reciprocal of degree 2n with constant term 1
/// and coefficient sum `(3^{n+1} − 1)/2`.
pub fn check_q1_quartic_symmetry(n_max: u32) -> Result<()> {
    let three = BigInt::from(3);
    for n in 0..=n_max {
        let q = Q1(n, 1, 2)?;
        let nn = n as u64;
        ensure(
            q.is_monic()
                && q.is_palindromic()
                && q.degree() == 2 * n as isize
                && q.coeff(0) == rat(1),
            "Q_n(1,z,z^2) monic, self-reciprocal, degree 2n",
            nn,
            || q.to_string(),
        )?;
        ensure(q.is_integral(), "Q_n(1,z,z^2) integral", nn, || {
            q.to_string()
        })?;
        let sum = q.eval(&rat(1));
        let want = Rational::from_integer((three.pow(n + 1) - 1) / 2);
        ensure(
            sum == want,
            "coefficient sum of Q_n(1,z,z^2) is (3^{n+1}-1)/2",
            nn,
            || format!("got {sum}"),
        )?;
    }
    Ok(())
}

/// Central coefficients of `Q_n(1,z,z²)` equal the partial sums of the
/// central trinomial coefficients; the first six are 1, 2, 5, 12, 31, 82.
pub fn check_central_coefficients(n_max: u32) -> Result<()> {
    let mut partial = BigInt::from(0);
    for n in 0..=n_max {
        partial += BigInt::from(TrinomialRow::new(n).entry(n as usize));
        let c = Q1(n, 1, 2)?.coeff(n as usize);
        ensure(
            c == Rational::from_integer(partial.clone()),
            "central coefficient of Q_n(1,z,z^2)",
            n as u64,
            || format!("got {c}, partial sum {partial}"),
        )?;
    }
    for (n, want) in [1, 2, 5, 12, 31, 82].into_iter().enumerate() {
        let c = Q1(n as u32, 1, 2)?.coeff(n);
        ensure(
            c == rat(want),
            "central coefficients 1, 2, 5, 12, 31, 82",
            n as u64,
            || format!("got {c}"),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    #[test]
    fn table_rows_and_example() {
        assert_eq!(Q1(3, 1, 1).unwrap(), UniPoly::from_i64(&[1, 7, 17, 15]));
        assert_eq!(Q1(2, 1, 2).unwrap(), UniPoly::from_i64(&[1, 3, 5, 3, 1]));
        assert_eq!(Q1(0, 2, 3).unwrap(), UniPoly::one());
        let xyz = ["x", "y", "z"];
        assert_eq!(
            Q1_general(2),
            parse_poly("3y^2+3y+3yz+z^2+2z+1", &xyz).unwrap()
        );
        assert_eq!(q1_general_closed(2).unwrap(), Q1_general(2));
        assert!(Q1_general(0) == MultiPoly::one(3));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(6).unwrap(), UniPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(1).unwrap(), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(euler_phi(12), 4);
        let f = factor_Q1(3, FactorVariant::Zz).unwrap();
        assert_eq!(
            f,
            vec![UniPoly::from_i64(&[1, 3]), UniPoly::from_i64(&[1, 4, 5])]
        );
        let f = factor_Q1(5, FactorVariant::Zz).unwrap();
        assert_eq!(
            f,
            vec![
                UniPoly::from_i64(&[1, 3]),
                UniPoly::from_i64(&[1, 5, 7]),
                UniPoly::from_i64(&[1, 3, 3])
            ]
        );
    }

    #[test]
    fn identity_checks() {
        check_factorizations(8).unwrap();
        check_q1_diagonal_closed_form(8).unwrap();
        check_q1_quartic_closed_form(8).unwrap();
        check_cyclotomic_expansions().unwrap();
        check_q1_quartic_symmetry(8).unwrap();
        check_central_coefficients(8).unwrap();
        check_base_closed_form(3, 5).unwrap();
        check_base_closed_form(5, 5).unwrap();
        for (a, b) in [(1, 1), (1, 2), (2, 1), (-1, 1), (-1, 0), (3, -1)] {
            check_q1_paths(5, a, b).unwrap();
        }
    }
}
