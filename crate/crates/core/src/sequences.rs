//! The polynomials `p_n`, `Q_n` and `R_n` in base `b`.
//!
//! Variables are `x, y_1, .., y_b` (indices 0..=b). For `b = 2` they print
//! as `x, y, z`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ensure, Error, Result};
use crate::polyring::{default_var_names, MultiPoly, Rational};

fn check_base(b: u32) -> Result<()> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!(
            "base must be >= 2, got {b}"
        )));
    }
    Ok(())
}

pub fn arity(b: u32) -> usize {
    1 + b as usize
}

pub fn var_names(b: u32) -> Vec<String> {
    default_var_names(arity(b))
}

pub fn x(b: u32) -> MultiPoly {
    MultiPoly::var(arity(b), 0)
}

/// `y_k` for 1 ≤ k ≤ b.
pub fn y(b: u32, k: u32) -> MultiPoly {
    assert!((1..=b).contains(&k), "y_{k} out of range for base {b}");
    MultiPoly::var(arity(b), k as usize)
}

/// `x·y_{b−1} + x + y_1 + y_b`.
pub fn w1(b: u32) -> MultiPoly {
    &(&(&x(b) * &y(b, b - 1)) + &x(b)) + &(&y(b, 1) + &y(b, b))
}

/// `x²·y_{b−1} + x·y_1·y_{b−1} + y_1·y_b`.
pub fn w2(b: u32) -> MultiPoly {
    let (x, y1, ybm1, yb) = (x(b), y(b, 1), y(b, b - 1), y(b, b));
    &(&(&(&x * &x) * &ybm1) + &(&(&x * &y1) * &ybm1)) + &(&y1 * &yb)
}

/// `x·y_{b−1} + y_b`, the factor linking `R_n` to `Q_n` and `Q_{n−1}`.
pub fn link_factor(b: u32) -> MultiPoly {
    &(&x(b) * &y(b, b - 1)) + &y(b, b)
}

/// `(b^{n+1} − b)/(b − 1)`.
pub fn q_index(b: u32, n: u32) -> BigUint {
    let bb = BigUint::from(b);
    (bb.pow(n + 1) - &bb) / (bb - 1u32)
}

/// `(b^n − 1)/(b − 1)`.
pub fn r_index(b: u32, n: u32) -> BigUint {
    let bb = BigUint::from(b);
    (bb.pow(n) - 1u32) / (bb - 1u32)
}

/// Memo table for `p_n` in one base. Safe for concurrent readers; misses
/// are computed outside the lock and inserted afterwards.
pub struct PCache {
    b: u32,
    memo: RwLock<HashMap<BigUint, Arc<MultiPoly>>>,
}

impl PCache {
    pub fn new(b: u32) -> Result<Self> {
        check_base(b)?;
        Ok(PCache {
            b,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: &BigUint) -> Arc<MultiPoly> {
        if let Some(p) = self.memo.read().expect("memo lock").get(n) {
            return Arc::clone(p);
        }
        let p = Arc::new(self.compute(n));
        self.memo
            .write()
            .expect("memo lock")
            .entry(n.clone())
            .or_insert(p)
            .clone()
    }

    fn compute(&self, n: &BigUint) -> MultiPoly {
        let b = self.b;
        let a = arity(b);
        if n.is_zero() {
            return MultiPoly::one(a);
        }
        let (m, j) = n.div_rem(&BigUint::from(b));
        let j = j.to_u32().expect("digit below base");
        if m.is_zero() {
            // single digit 1..b−1
            return if j == 1 {
                &x(b) + &y(b, 1)
            } else {
                &(&x(b) * &y(b, j - 1)) + &y(b, j)
            };
        }
        let pm = self.get(&m);
        match j {
            0 => {
                let pm1 = self.get(&(&m - 1u32));
                &*pm + &(&link_factor(b) * &*pm1)
            }
            1 => {
                let pm1 = self.get(&(&m - 1u32));
                let xyb = &x(b) * &y(b, b);
                &(&(&x(b) + &y(b, 1)) * &*pm) + &(&xyb * &*pm1)
            }
            _ => &(&(&x(b) * &y(b, j - 1)) + &y(b, j)) * &*pm,
        }
    }
}

/// `p_n` in base `b` by memoized digit recursion.
pub fn p_poly(b: u32, n: &BigUint) -> Result<MultiPoly> {
    Ok((*PCache::new(b)?.get(n)).clone())
}

/// `Q_0..=Q_{n_max}` by the three-term recurrence.
pub fn q_sequence(b: u32, n_max: u32) -> Result<Vec<MultiPoly>> {
    check_base(b)?;
    Ok(three_term(b, w1(b), n_max))
}

/// `R_0..=R_{n_max}` by the three-term recurrence.
pub fn r_sequence(b: u32, n_max: u32) -> Result<Vec<MultiPoly>> {
    check_base(b)?;
    Ok(three_term(b, &x(b) + &y(b, 1), n_max))
}

fn three_term(b: u32, first: MultiPoly, n_max: u32) -> Vec<MultiPoly> {
    let (a, bq) = (w1(b), w2(b));
    let mut out = vec![MultiPoly::one(arity(b))];
    if n_max >= 1 {
        out.push(first);
    }
    for n in 2..=n_max as usize {
        let next = &(&a * &out[n - 1]) - &(&bq * &out[n - 2]);
        out.push(next);
    }
    out
}

#[allow(non_snake_case)]
pub fn Q_poly(b: u32, n: u32) -> Result<MultiPoly> {
    Ok(q_sequence(b, n)?.pop().expect("non-empty"))
}

#[allow(non_snake_case)]
pub fn R_poly(b: u32, n: u32) -> Result<MultiPoly> {
    Ok(r_sequence(b, n)?.pop().expect("non-empty"))
}

/// Checks the three-term sequences against `p` at the indices q(n), r(n)
/// for n ≤ `n_max`.
pub fn index_check(b: u32, n_max: u32) -> Result<()> {
    let cache = PCache::new(b)?;
    let qs = q_sequence(b, n_max)?;
    let rs = r_sequence(b, n_max)?;
    for n in 0..=n_max {
        let qi = q_index(b, n);
        ensure(
            *cache.get(&qi) == qs[n as usize],
            "Q_n = p_q(n)",
            n as u64,
            || format!("base {b}, index {qi}"),
        )?;
        let ri = r_index(b, n);
        ensure(
            *cache.get(&ri) == rs[n as usize],
            "R_n = p_r(n)",
            n as u64,
            || format!("base {b}, index {ri}"),
        )?;
    }
    Ok(())
}

/// Coefficients of `q^0..=q^n_max` in the expansion of
/// `1/(1 − A q + B q²) = Σ_m (A q − B q²)^m`, collected as
/// `Σ_k (−1)^k C(n−k, k) A^{n−2k} B^k`.
pub fn geometric_series(a: &MultiPoly, bq: &MultiPoly, n_max: u32) -> Vec<MultiPoly> {
    let n_max = n_max as usize;
    let mut apow = vec![MultiPoly::one(a.arity())];
    for k in 1..=n_max {
        let next = &apow[k - 1] * a;
        apow.push(next);
    }
    let mut bpow = vec![MultiPoly::one(a.arity())];
    for k in 1..=n_max / 2 {
        let next = &bpow[k - 1] * bq;
        bpow.push(next);
    }
    (0..=n_max)
        .map(|n| {
            let mut acc = MultiPoly::zero(a.arity());
            let mut binom = BigUint::one();
            for k in 0..=n / 2 {
                if k > 0 {
                    // C(n−k, k) from C(n−k+1, k−1)
                    binom = binom * BigUint::from(((n - 2 * k + 2) * (n - 2 * k + 1)) as u64)
                        / BigUint::from(((k) * (n - k + 1)) as u64);
                }
                let c = Rational::from_integer(binom.clone().into());
                let c = if k % 2 == 1 { -c } else { c };
                acc = &acc + &(&apow[n - 2 * k] * &bpow[k]).scale(&c);
            }
            acc
        })
        .collect()
}

/// Series check of both generating functions to order `n_max`.
pub fn gf_check(b: u32, n_max: u32) -> Result<()> {
    let series = geometric_series(&w1(b), &w2(b), n_max);
    let qs = q_sequence(b, n_max)?;
    let rs = r_sequence(b, n_max)?;
    let link = link_factor(b);
    for n in 0..=n_max as usize {
        ensure(
            series[n] == qs[n],
            "generating function of Q",
            n as u64,
            || format!("base {b}"),
        )?;
        let r_coeff = if n == 0 {
            series[0].clone()
        } else {
            &series[n] - &(&link * &series[n - 1])
        };
        ensure(
            r_coeff == rs[n],
            "generating function of R",
            n as u64,
            || format!("base {b}"),
        )?;
    }
    Ok(())
}

/// The identities tying `R` to `Q` at step `n ≥ 1`, plus the variable
/// support restriction to `x, y_1, y_{b−1}, y_b`.
pub fn relation_checks(b: u32, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("relation checks need n >= 1".into()));
    }
    let qs = q_sequence(b, n)?;
    let rs = r_sequence(b, n + 1)?;
    let (n_us, nn) = (n as usize, n as u64);
    let step = &(&(&x(b) + &y(b, 1)) * &rs[n_us]) + &(&(&x(b) * &y(b, b)) * &qs[n_us - 1]);
    ensure(
        rs[n_us + 1] == step,
        "R_{n+1} = (x+y_1)R_n + x y_b Q_{n-1}",
        nn,
        || format!("base {b}"),
    )?;
    let link = &qs[n_us] - &(&link_factor(b) * &qs[n_us - 1]);
    ensure(
        rs[n_us] == link,
        "R_n = Q_n - (x y_{b-1} + y_b) Q_{n-1}",
        nn,
        || format!("base {b}"),
    )?;
    for (name, p) in [("Q", &qs[n_us]), ("R", &rs[n_us])] {
        let support = p.support();
        let stray: Vec<usize> = (2..b.saturating_sub(1) as usize)
            .filter(|&k| support[k])
            .collect();
        ensure(
            stray.is_empty(),
            "variable support {x, y_1, y_{b-1}, y_b}",
            nn,
            || format!("{name} in base {b} uses y_k for k in {stray:?}"),
        )?;
    }
    Ok(())
}

/// All-ones evaluations `(3^{n+1} − 1)/2` for Q and `(3^n + 1)/2` for R.
pub fn all_ones_check(b: u32, n_max: u32) -> Result<()> {
    let qs = q_sequence(b, n_max)?;
    let rs = r_sequence(b, n_max)?;
    let three = num_bigint::BigInt::from(3);
    for n in 0..=n_max {
        let q_expected: num_bigint::BigInt = (three.pow(n + 1) - 1) / 2;
        let r_expected: num_bigint::BigInt = (three.pow(n) + 1) / 2;
        let qv = qs[n as usize].eval_all_ones();
        let rv = rs[n as usize].eval_all_ones();
        ensure(
            qv == Rational::from_integer(q_expected.clone()),
            "Q_n(1,..,1) = (3^{n+1}-1)/2",
            n as u64,
            || format!("base {b}: got {qv}, expected {q_expected}"),
        )?;
        ensure(
            rv == Rational::from_integer(r_expected.clone()),
            "R_n(1,..,1) = (3^n+1)/2",
            n as u64,
            || format!("base {b}: got {rv}, expected {r_expected}"),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn parse(b: u32, s: &str) -> MultiPoly {
        let names = var_names(b);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        parse_poly(s, &refs).unwrap()
    }

    #[test]
    fn indices() {
        assert_eq!(q_index(2, 3), BigUint::from(14u32));
        assert_eq!(r_index(2, 3), BigUint::from(7u32));
        assert_eq!(q_index(5, 2), BigUint::from(30u32));
        assert!(q_index(2, 0).is_zero() && r_index(2, 0).is_zero());
    }

    #[test]
    fn small_p() {
        assert_eq!(
            p_poly(2, &BigUint::from(2u32)).unwrap(),
            parse(2, "xy+x+y+z")
        );
        assert_eq!(p_poly(3, &BigUint::from(1u32)).unwrap(), parse(3, "x+y1"));
        assert_eq!(p_poly(3, &BigUint::from(2u32)).unwrap(), parse(3, "xy1+y2"));
    }

    #[test]
    fn q_and_r_examples() {
        assert_eq!(Q_poly(5, 1).unwrap(), parse(5, "y1+x+y5+xy4"));
        assert_eq!(R_poly(5, 2).unwrap(), parse(5, "y1^2+2xy1+x^2+xy5"));
        assert_eq!(
            Q_poly(2, 2).unwrap(),
            parse(2, "x^2y^2+x^2y+xy^2+2xyz+x^2+2xy+2xz+y^2+yz+z^2")
        );
    }

    #[test]
    fn checks_pass_for_small_n() {
        for b in [2, 3, 5] {
            index_check(b, 6).unwrap();
            gf_check(b, 6).unwrap();
            all_ones_check(b, 6).unwrap();
            for n in 1..5 {
                relation_checks(b, n).unwrap();
            }
        }
    }

    #[test]
    fn w2_in_binary() {
        assert_eq!(w2(2), parse(2, "x^2y+xy^2+yz"));
    }
}
