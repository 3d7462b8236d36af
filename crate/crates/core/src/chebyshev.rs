//! Chebyshev polynomials, classical and homogenized.
//!
//! The homogenized forms take two polynomial arguments `A`, `B` and obey
//! `F_{n+1} = A·F_n − B·F_{n−1}`; with `A = 2w`, `B = 1` they reduce to the
//! classical `U_n(w)` and `T_n(w)`.

use num_complex::Complex64;

use crate::error::{ensure, Error, Result};
use crate::polyring::{ratio, MultiPoly, UniPoly};
use crate::sequences;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPair {
    a: MultiPoly,
    b: MultiPoly,
}

impl HomogPair {
    pub fn new(a: MultiPoly, b: MultiPoly) -> Result<Self> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        Ok(HomogPair { a, b })
    }

    /// `(W_1, W_2)` for base `b`.
    pub fn weights(b: u32) -> Self {
        HomogPair {
            a: sequences::w1(b),
            b: sequences::w2(b),
        }
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    fn run(&self, first: MultiPoly, n_max: u32) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::one(self.a.arity())];
        if n_max >= 1 {
            out.push(first);
        }
        for k in 2..=n_max as usize {
            let next = &(&self.a * &out[k - 1]) - &(&self.b * &out[k - 2]);
            out.push(next);
        }
        out
    }

    /// `Ũ_0..=Ũ_{n_max}`.
    pub fn u_sequence(&self, n_max: u32) -> Vec<MultiPoly> {
        self.run(self.a.clone(), n_max)
    }

    /// `T̃_0..=T̃_{n_max}`, with `T̃_1 = A/2`.
    pub fn t_sequence(&self, n_max: u32) -> Vec<MultiPoly> {
        self.run(self.a.scale(&ratio(1, 2)), n_max)
    }
}

pub fn u_homog(n: u32, pair: &HomogPair) -> MultiPoly {
    pair.u_sequence(n).pop().expect("non-empty")
}

pub fn t_homog(n: u32, pair: &HomogPair) -> MultiPoly {
    pair.t_sequence(n).pop().expect("non-empty")
}

fn classical(first: UniPoly, n: u32) -> UniPoly {
    let two_w = UniPoly::from_i64(&[0, 2]);
    let (mut prev, mut cur) = (UniPoly::one(), first);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_w * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Classical `U_n(w)`.
pub fn u_classical(n: u32) -> UniPoly {
    classical(UniPoly::from_i64(&[0, 2]), n)
}

/// Classical `T_n(w)`.
pub fn t_classical(n: u32) -> UniPoly {
    classical(UniPoly::x(), n)
}

/// `(x + y_1 − x·y_{b−1} − y_b)/2`.
pub fn correction(b: u32) -> MultiPoly {
    let (x, y1) = (sequences::x(b), sequences::y(b, 1));
    (&(&x + &y1) - &sequences::link_factor(b)).scale(&ratio(1, 2))
}

/// `Q_n = Ũ_n(W_1, W_2)` and `R_n = T̃_n(W_1, W_2) + c·Ũ_{n−1}(W_1, W_2)`
/// for 1 ≤ n ≤ `n_max`; the right-hand sides must also be integral.
pub fn verify_chebyshev_forms(b: u32, n_max: u32) -> Result<()> {
    let pair = HomogPair::weights(b);
    let us = pair.u_sequence(n_max);
    let ts = pair.t_sequence(n_max);
    let qs = sequences::q_sequence(b, n_max)?;
    let rs = sequences::r_sequence(b, n_max)?;
    let corr = correction(b);
    for n in 1..=n_max as usize {
        let nn = n as u64;
        ensure(us[n] == qs[n], "Q_n = U~_n(W1, W2)", nn, || {
            format!("base {b}")
        })?;
        let r = &ts[n] + &(&corr * &us[n - 1]);
        ensure(r.is_integral(), "T~_n + correction is integral", nn, || {
            format!("base {b}")
        })?;
        ensure(
            r == rs[n],
            "R_n = T~_n(W1, W2) + correction U~_{n-1}",
            nn,
            || format!("base {b}"),
        )?;
    }
    Ok(())
}

/// `Ũ_n − (x·y_{b−1} + y_b)·Ũ_{n−1} = T̃_n + c·Ũ_{n−1}` for 1 ≤ n ≤ `n_max`.
pub fn verify_link_form(b: u32, n_max: u32) -> Result<()> {
    let pair = HomogPair::weights(b);
    let us = pair.u_sequence(n_max);
    let ts = pair.t_sequence(n_max);
    let (link, corr) = (sequences::link_factor(b), correction(b));
    for n in 1..=n_max as usize {
        let lhs = &us[n] - &(&link * &us[n - 1]);
        let rhs = &ts[n] + &(&corr * &us[n - 1]);
        ensure(
            lhs == rhs,
            "U~_n - link U~_{n-1} = T~_n + correction U~_{n-1}",
            n as u64,
            || format!("base {b}"),
        )?;
    }
    Ok(())
}

/// Numerical check of `U_n(cos θ)·sin θ = sin((n+1)θ)` and
/// `T_n(cos θ) = cos(nθ)` at the given angles for n ≤ `n_max`. The
/// expanded coefficients grow like `2^n`, so evaluation is compensated.
pub fn trig_sanity(n_max: u32, thetas: &[f64], tol: f64) -> Result<()> {
    for n in 0..=n_max {
        let (u, t) = (u_classical(n), t_classical(n));
        for &th in thetas {
            let w = Complex64::new(th.cos(), 0.0);
            let du = (u.eval_complex(w)?.re * th.sin() - ((n + 1) as f64 * th).sin()).abs();
            let dt = (t.eval_complex(w)?.re - (n as f64 * th).cos()).abs();
            ensure(
                du < tol && dt < tol,
                "classical Chebyshev trigonometric form",
                n as u64,
                || format!("theta = {th}: U error {du:e}, T error {dt:e}"),
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ab() -> HomogPair {
        HomogPair::new(MultiPoly::var(2, 0), MultiPoly::var(2, 1)).unwrap()
    }

    #[test]
    fn unrolled_second_step() {
        let names = ["A", "B"];
        assert_eq!(u_homog(2, &ab()), parse_poly("A^2-B", &names).unwrap());
        assert_eq!(t_homog(2, &ab()), parse_poly("(1/2)A^2-B", &names).unwrap());
    }

    #[test]
    fn reduces_to_classical() {
        let images = [
            MultiPoly::from_uni(&UniPoly::from_i64(&[0, 2]), 1, 0),
            MultiPoly::one(1),
        ];
        for n in 0..8 {
            let u = u_homog(n, &ab())
                .substitute(&images)
                .unwrap()
                .to_uni(0)
                .unwrap();
            let t = t_homog(n, &ab())
                .substitute(&images)
                .unwrap()
                .to_uni(0)
                .unwrap();
            assert_eq!(u, u_classical(n), "U_{n}");
            if n >= 1 {
                assert_eq!(t, t_classical(n), "T_{n}");
            }
        }
        assert_eq!(u_classical(2), UniPoly::from_i64(&[-1, 0, 4]));
        assert_eq!(t_classical(2), UniPoly::from_i64(&[-1, 0, 2]));
    }

    #[test]
    fn forms_hold_for_small_n() {
        for b in [2, 3, 5] {
            verify_chebyshev_forms(b, 6).unwrap();
            verify_link_form(b, 6).unwrap();
        }
    }

    #[test]
    fn correction_vanishes_when_y_and_z_are_one() {
        let one = MultiPoly::one(1);
        let images = [MultiPoly::var(1, 0), one.clone(), one];
        assert!(correction(2).substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn trig_identity() {
        trig_sanity(30, &[0.3, 1.1, 2.9], 1e-10).unwrap();
    }
}
