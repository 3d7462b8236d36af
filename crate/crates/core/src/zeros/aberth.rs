//! Simultaneous root iteration with a companion-matrix fallback.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::polyring::CompensatedPoly;

const MAX_ITER: usize = 1000;

/// Starting points from the upper convex hull of `(k, log|c_k|)`: each hull
/// edge of width `w` contributes `w` points on a circle whose radius is the
/// edge's slope, which copes with roots spread over many orders of
/// magnitude.
pub(super) fn initial_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0.0)
        .map(|(k, c)| (k, c.abs().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross =
                (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (k0, l0) = w[0];
        let (k1, l1) = w[1];
        let m = k1 - k0;
        let radius = ((l0 - l1) / m as f64).exp();
        for i in 0..m {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / m as f64
                + 2.0 * std::f64::consts::PI * k0 as f64 / n as f64
                + sigma;
            out.push(Complex64::from_polar(radius, angle));
        }
    }
    out
}

/// Evenly spaced points on the circle of radius `|c_0/c_n|^{1/n}`.
pub(super) fn circle_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let radius = (coeffs[0].abs() / coeffs[n].abs()).powf(1.0 / n as f64);
    (0..n)
        .map(|i| {
            Complex64::from_polar(
                radius,
                2.0 * std::f64::consts::PI * (i as f64 + 0.25) / n as f64,
            )
        })
        .collect()
}

/// Every root has modulus at most `2·max_k |c_{n−k}/c_n|^{1/k}`.
fn fujiwara_bound(coeffs: &[f64]) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].abs();
    (1..=n)
        .map(|k| {
            let c = coeffs[n - k].abs() / lead;
            if k == n { c / 2.0 } else { c }.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0
}

/// `a / b` with `b` scaled first, so that `|b|²` cannot overflow.
pub(super) fn ratio(a: Complex64, b: Complex64) -> Complex64 {
    let m = b.re.abs().max(b.im.abs());
    if m == 0.0 {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    (a / m) / (b / m)
}

pub(super) struct Iterate {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
}

/// Aberth–Ehrlich in Gauss–Seidel form. A root stops moving once its
/// Newton step is below a few ulps or its residual reaches the noise floor
/// of the compensated evaluation.
pub(super) fn aberth(p: &CompensatedPoly, mut z: Vec<Complex64>) -> Iterate {
    const FLOOR: f64 = 64.0 * f64::EPSILON * f64::EPSILON;
    let n = z.len();
    let bound = fujiwara_bound(&p.coeffs_f64());
    for it in 0..MAX_ITER {
        // Every point moves in every sweep; freezing settled points lets a
        // second iterate sit on the same root unopposed.
        let mut settled = true;
        for i in 0..n {
            let ev = p.eval(z[i]);
            if ev.value.norm() <= FLOOR * ev.abs_bound {
                continue;
            }
            let (v, dv) = p.eval_with_derivative(z[i]);
            let ratio = ratio(v, dv);
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let d = z[i] - z[j];
                if j != i && d.norm() > 0.0 {
                    s += 1.0 / d;
                }
            }
            let w = self::ratio(ratio, Complex64::new(1.0, 0.0) - ratio * s);
            if !w.is_finite() {
                settled = false;
                continue;
            }
            z[i] -= w;
            if z[i].norm() > bound {
                let scale = bound / z[i].norm();
                z[i] *= scale;
            }
            // The Newton ratio, not `w`: a close neighbour can shrink `w`
            // far away from any root.
            if ratio.norm() > 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                settled = false;
            }
        }
        if settled {
            return Iterate {
                roots: z,
                iterations: it + 1,
            };
        }
    }
    Iterate {
        roots: z,
        iterations: MAX_ITER,
    }
}

/// Eigenvalues of the companion matrix of the (monic-normalized)
/// polynomial.
pub(super) fn companion_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// A few Newton steps in compensated arithmetic, keeping the better point.
pub(super) fn polish(p: &CompensatedPoly, z: Complex64) -> Complex64 {
    let mut best = z;
    let mut best_r = p.eval(z).value.norm();
    let mut cur = z;
    for _ in 0..8 {
        let (v, dv) = p.eval_with_derivative(cur);
        if dv.norm() == 0.0 {
            break;
        }
        cur -= ratio(v, dv);
        let r = p.eval(cur).value.norm();
        if r.is_nan() || r >= best_r {
            break;
        }
        best = cur;
        best_r = r;
    }
    best
}
