//! The diagonal `x = y_1 = y_{b−1} = y_b = z` and the reduced polynomials
//! `Q̃_n = z^{−n} Q_n(Z)`, `R̃_n = z^{−n} R_n(Z)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::specialize_poly;
use crate::error::{ensure, violation, Result};
use crate::polyring::{Rational, UniPoly};
use crate::sequences;

fn diagonal_exps(b: u32) -> Vec<i64> {
    // y_2..y_{b−2} never occur; sending them to z as well is harmless
    vec![1; sequences::arity(b)]
}

/// `Q_n(z, .., z)` for n ≤ `n_max` in base `b`.
#[allow(non_snake_case)]
pub fn QZ_sequence_base(b: u32, n_max: u32) -> Result<Vec<UniPoly>> {
    let exps = diagonal_exps(b);
    Ok(sequences::q_sequence(b, n_max)?
        .iter()
        .map(|p| specialize_poly(p, &exps))
        .collect())
}

#[allow(non_snake_case)]
pub fn RZ_sequence_base(b: u32, n_max: u32) -> Result<Vec<UniPoly>> {
    let exps = diagonal_exps(b);
    Ok(sequences::r_sequence(b, n_max)?
        .iter()
        .map(|p| specialize_poly(p, &exps))
        .collect())
}

#[allow(non_snake_case)]
pub fn QZ(n: u32) -> UniPoly {
    QZ_sequence_base(2, n)
        .expect("base 2")
        .pop()
        .expect("non-empty")
}

#[allow(non_snake_case)]
pub fn RZ(n: u32) -> UniPoly {
    RZ_sequence_base(2, n)
        .expect("base 2")
        .pop()
        .expect("non-empty")
}

fn reduce(p: &UniPoly, n: u32, name: &str) -> Result<UniPoly> {
    p.shift_down(n as usize)
        .map_err(|_| violation(&format!("z^n divides {name}"), n as u64, p.to_string()))
}

#[allow(non_snake_case)]
pub fn Qtilde_sequence(n_max: u32) -> Result<Vec<UniPoly>> {
    QZ_sequence_base(2, n_max)?
        .iter()
        .enumerate()
        .map(|(n, p)| reduce(p, n as u32, "Q_n(Z)"))
        .collect()
}

#[allow(non_snake_case)]
pub fn Rtilde_sequence(n_max: u32) -> Result<Vec<UniPoly>> {
    RZ_sequence_base(2, n_max)?
        .iter()
        .enumerate()
        .map(|(n, p)| reduce(p, n as u32, "R_n(Z)"))
        .collect()
}

#[allow(non_snake_case)]
pub fn Qtilde(n: u32) -> Result<UniPoly> {
    Ok(Qtilde_sequence(n)?.pop().expect("non-empty"))
}

#[allow(non_snake_case)]
pub fn Rtilde(n: u32) -> Result<UniPoly> {
    Ok(Rtilde_sequence(n)?.pop().expect("non-empty"))
}

/// `F_0..=F_k` by the integer recurrence.
pub fn fibonacci(k: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(), BigInt::one()];
    while f.len() <= k {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f.truncate(k + 1);
    f
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// Leading coefficient, degrees, the second coefficient and the Fibonacci
/// constant term of the diagonal polynomials for n ≤ `n_max`.
pub fn check_diagonal_coefficients(n_max: u32) -> Result<()> {
    let qz = QZ_sequence_base(2, n_max)?;
    let rz = RZ_sequence_base(2, n_max)?;
    let fib = fibonacci(2 * n_max as usize + 2);
    for n in 1..=n_max {
        let (q, nn, nu) = (&qz[n as usize], n as u64, n as usize);
        ensure(
            q.is_monic() && q.degree() == 2 * n as isize,
            "Q_n(Z) monic of degree 2n",
            nn,
            || q.to_string(),
        )?;
        ensure(
            q.low_degree() == Some(nu),
            "lowest term of Q_n(Z) has degree n",
            nn,
            || q.to_string(),
        )?;
        ensure(
            q.coeff(2 * nu - 1) == int(n as i64 + 2),
            "coefficient of z^{2n-1} in Q_n(Z) is n+2",
            nn,
            || q.to_string(),
        )?;
        ensure(
            q.coeff(nu) == big(&fib[2 * nu + 2]),
            "coefficient of z^n in Q_n(Z) is F_{2n+2}",
            nn,
            || q.to_string(),
        )?;
        if n >= 3 {
            let r = &rz[nu];
            ensure(
                r.is_monic() && r.degree() == 2 * n as isize - 2,
                "R_n(Z) monic of degree 2n-2",
                nn,
                || r.to_string(),
            )?;
            ensure(
                r.low_degree() == Some(nu),
                "lowest term of R_n(Z) has degree n",
                nn,
                || r.to_string(),
            )?;
            ensure(
                r.coeff(nu) == big(&fib[2 * nu + 1]),
                "coefficient of z^n in R_n(Z) is F_{2n+1}",
                nn,
                || r.to_string(),
            )?;
            if n >= 4 {
                ensure(
                    r.coeff(2 * nu - 3) == int(n as i64 + 2),
                    "coefficient of z^{2n-3} in R_n(Z) is n+2",
                    nn,
                    || r.to_string(),
                )?;
            }
        }
    }
    Ok(())
}

/// Third-from-top coefficients: `(n² + 5n + 2)/2` in `Q̃_n` (n ≥ 2) and
/// `n(n + 5)/2` in `R̃_n` (n ≥ 5), plus the short sequence prefixes
/// `a_1 = 1, 4, 13, 40, 120` and `b_1 = 1, 6, 25, 90, 300`.
pub fn check_remarks(n_max: u32) -> Result<()> {
    let qt = Qtilde_sequence(n_max.max(7))?;
    let rt = Rtilde_sequence(n_max.max(7))?;
    for n in 2..=n_max as usize {
        let n64 = n as i64;
        ensure(
            qt[n].coeff(n - 2) == int((n64 * n64 + 5 * n64 + 2) / 2),
            "third coefficient of Q~_n is (n^2+5n+2)/2",
            n as u64,
            || qt[n].to_string(),
        )?;
        if n >= 5 {
            ensure(
                rt[n].coeff(n - 4) == int(n64 * (n64 + 5) / 2),
                "third coefficient of R~_n is n(n+5)/2",
                n as u64,
                || rt[n].to_string(),
            )?;
        }
    }
    for (k, want) in [1, 4, 13, 40, 120].into_iter().enumerate() {
        let n = k + 1;
        ensure(
            qt[n].coeff(1) == int(want),
            "linear coefficient of Q~_n",
            n as u64,
            || qt[n].to_string(),
        )?;
    }
    for (k, want) in [1, 6, 25, 90, 300].into_iter().enumerate() {
        let n = k + 3;
        ensure(
            rt[n].coeff(1) == int(want),
            "linear coefficient of R~_n",
            n as u64,
            || rt[n].to_string(),
        )?;
    }
    Ok(())
}

/// The diagonal specialization does not depend on the base.
pub fn check_base_independence(bases: &[u32], n_max: u32) -> Result<()> {
    let (q2, r2) = (QZ_sequence_base(2, n_max)?, RZ_sequence_base(2, n_max)?);
    for &b in bases {
        let (qb, rb) = (QZ_sequence_base(b, n_max)?, RZ_sequence_base(b, n_max)?);
        for n in 0..=n_max as usize {
            ensure(
                qb[n] == q2[n] && rb[n] == r2[n],
                "diagonal specialization independent of b",
                n as u64,
                || format!("base {b}"),
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(QZ(3), UniPoly::from_i64(&[0, 0, 0, 21, 13, 5, 1]));
        assert_eq!(RZ(5), UniPoly::from_i64(&[0, 0, 0, 0, 0, 89, 25, 7, 1]));
        assert_eq!(Qtilde(2).unwrap(), UniPoly::from_i64(&[8, 4, 1]));
        assert_eq!(Rtilde(1).unwrap(), UniPoly::from_i64(&[2]));
    }

    #[test]
    fn lemma_and_remarks() {
        check_diagonal_coefficients(10).unwrap();
        check_remarks(10).unwrap();
        check_base_independence(&[3, 5], 6).unwrap();
    }

    #[test]
    fn fibonacci_prefix() {
        let f = fibonacci(10);
        assert_eq!(f[10], BigInt::from(55));
    }
}
