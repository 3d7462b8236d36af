//! Numerical zeros of the univariate families and their explicit forms.

mod aberth;
mod matching;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

pub use matching::bottleneck_distance;

use crate::error::{ensure, Error, Result};
use crate::polyring::{CompensatedPoly, UniPoly};
use crate::specializations::{self as sp, FactorVariant};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Points closer than this are treated as one multiple root.
const CLUSTER_RADIUS: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl ComplexPoint {
    pub fn new(z: Complex64, residual: f64) -> Self {
        ComplexPoint {
            re: z.re,
            im: z.im,
            residual,
        }
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn points(zs: &[ComplexPoint]) -> Vec<Complex64> {
    zs.iter().map(ComplexPoint::z).collect()
}

fn accepted(cp: &CompensatedPoly, z: Complex64, tol: f64) -> (bool, f64) {
    let ev = cp.eval(z);
    let r = ev.value.norm();
    (r <= tol * (1.0 + ev.abs_bound), r)
}

/// Groups points lying within [`CLUSTER_RADIUS`] of each other.
fn clusters(zs: &[Complex64]) -> Vec<Vec<usize>> {
    let mut group: Vec<usize> = (0..zs.len()).collect();
    fn find(g: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while g[r] != r {
            r = g[r];
        }
        g[i] = r;
        r
    }
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            if (zs[i] - zs[j]).norm() < CLUSTER_RADIUS {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a] = b;
            }
        }
    }
    let mut out: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..zs.len() {
        let r = find(&mut group, i);
        out.entry(r).or_default().push(i);
    }
    out.into_values().collect()
}

/// Points are polished first. A cluster of `m` polished points is then
/// replaced by `m` copies of the zero of `p^{(m−1)}` near its centroid,
/// when that point is itself an acceptable root.
fn refine(cp: &CompensatedPoly, zs: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    let zs: Vec<Complex64> = zs.into_iter().map(|z| aberth::polish(cp, z)).collect();
    let mut out = Vec::with_capacity(zs.len());
    for cl in clusters(&zs) {
        let m = cl.len();
        if m == 1 {
            out.push(zs[cl[0]]);
            continue;
        }
        let mut c: Complex64 = cl.iter().map(|&i| zs[i]).sum::<Complex64>() / m as f64;
        let dp = cp.derivative(m - 1);
        for _ in 0..20 {
            let (v, d) = dp.eval_with_derivative(c);
            if d.norm() == 0.0 {
                break;
            }
            let step = aberth::ratio(v, d);
            c -= step;
            if step.norm() <= 4.0 * f64::EPSILON * c.norm() {
                break;
            }
        }
        if accepted(cp, c, tol).0 {
            out.extend(std::iter::repeat_n(c, m));
        } else {
            out.extend(cl.iter().map(|&i| zs[i]));
        }
    }
    out
}

/// All `deg p` roots with multiplicity. Each accepted root satisfies
/// `|p(z)| ≤ tol·(1 + Σ|c_k||z|^k)`, the evaluated absolute bound.
pub fn roots(p: &UniPoly, tol: f64) -> Result<Vec<ComplexPoint>> {
    if p.degree() < 1 {
        return Err(Error::InvalidArgument(format!(
            "roots of a constant polynomial {p}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let low = p.low_degree().expect("nonzero");
    let body = p.shift_down(low)?;
    let mut out: Vec<ComplexPoint> = vec![ComplexPoint::new(Complex64::new(0.0, 0.0), 0.0); low];
    if body.degree() == 0 {
        return Ok(out);
    }
    let cp = CompensatedPoly::new(&body)?;
    let finish = |zs: Vec<Complex64>| -> (bool, Vec<ComplexPoint>) {
        let zs = refine(&cp, zs, tol);
        let mut all_ok = true;
        let pts = zs
            .into_iter()
            .map(|z| {
                let (ok, r) = accepted(&cp, z, tol);
                all_ok &= ok && z.is_finite();
                ComplexPoint::new(z, r)
            })
            .collect();
        (all_ok, pts)
    };
    let coeffs = cp.coeffs_f64();
    let hull = aberth::aberth(&cp, aberth::initial_guesses(&coeffs));
    let iterations = hull.iterations;
    let (ok, pts) = finish(hull.roots);
    if ok {
        out.extend(pts);
        return Ok(out);
    }
    let retries: [&dyn Fn() -> Vec<Complex64>; 2] = [
        &|| aberth::aberth(&cp, aberth::circle_guesses(&coeffs)).roots,
        &|| aberth::companion_roots(&coeffs),
    ];
    for start in retries {
        let (ok, pts) = finish(start());
        if ok {
            out.extend(pts);
            return Ok(out);
        }
    }
    out.extend(pts);
    Err(Error::NoConvergence {
        iterations,
        best: out,
    })
}

/// Families with a numerical zero routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Q_n(1, z, z)`
    Zz,
    /// `Q_n(1, z, z²)`
    Zz2,
    Qtilde,
    Rtilde,
    Qx,
    Rx,
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "zz" => Family::Zz,
            "zz2" => Family::Zz2,
            "qtilde" => Family::Qtilde,
            "rtilde" => Family::Rtilde,
            "qx" => Family::Qx,
            "rx" => Family::Rx,
            _ => return None,
        })
    }

    pub fn poly(self, n: u32) -> Result<UniPoly> {
        match self {
            Family::Zz => sp::Q1(n, 1, 1),
            Family::Zz2 => sp::Q1(n, 1, 2),
            Family::Qtilde => sp::Qtilde(n),
            Family::Rtilde => sp::Rtilde(n),
            Family::Qx => Ok(sp::Qx(n)),
            Family::Rx => Ok(sp::Rx(n)),
        }
    }

    /// Closed-form zeros where they are known.
    pub fn explicit(self, n: u32) -> Option<Vec<ComplexPoint>> {
        match self {
            Family::Zz => Some(zeros_explicit_zz(n)),
            Family::Zz2 => Some(zeros_explicit_zz2(n)),
            Family::Qtilde => Some(zeros_explicit_qtilde(n)),
            _ => None,
        }
    }
}

fn with_residuals(p: &UniPoly, zs: Vec<Complex64>) -> Vec<ComplexPoint> {
    let cp = CompensatedPoly::new(p).ok();
    zs.into_iter()
        .map(|z| {
            let r = cp.as_ref().map_or(f64::NAN, |c| c.eval(z).value.norm());
            ComplexPoint::new(z, r)
        })
        .collect()
}

/// `e^{2πij/m}`, exact at the quarter turns so that `ζ = −1` gives an
/// exactly vanishing discriminant below.
fn unity_root(j: u32, m: u32) -> Complex64 {
    let j = j % m;
    match 4 * j as u64 {
        q if q == m as u64 => Complex64::new(0.0, 1.0),
        q if q == 2 * m as u64 => Complex64::new(-1.0, 0.0),
        q if q == 3 * m as u64 => Complex64::new(0.0, -1.0),
        _ => Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64),
    }
}

/// `1/(ζ_j − 2)` for the nontrivial `(n+1)`-th roots of unity `ζ_j`.
pub fn zeros_explicit_zz(n: u32) -> Vec<ComplexPoint> {
    let zs = (1..=n)
        .map(|j| 1.0 / (unity_root(j, n + 1) - 2.0))
        .collect();
    with_residuals(&sp::Q1(n, 1, 1).expect("valid"), zs)
}

/// Both roots of `z² + (1 − ζ_j) z + 1` for each nontrivial `ζ_j`.
pub fn zeros_explicit_zz2(n: u32) -> Vec<ComplexPoint> {
    let mut zs = Vec::with_capacity(2 * n as usize);
    for j in 1..=n {
        let zeta = unity_root(j, n + 1);
        let s = (zeta * zeta - 2.0 * zeta - 3.0).sqrt();
        zs.push((zeta - 1.0 + s) / 2.0);
        zs.push((zeta - 1.0 - s) / 2.0);
    }
    with_residuals(&sp::Q1(n, 1, 2).expect("valid"), zs)
}

/// `½(8r² − 5) + 2ir√(5 − 4r²) − ½` with `r = cos(jπ/(n+1))`; the sign of
/// `r` selects the conjugate, so one branch per `j` gives all `n` zeros.
pub fn zeros_explicit_qtilde(n: u32) -> Vec<ComplexPoint> {
    let zs = (1..=n)
        .map(|j| {
            let r = (j as f64 * PI / (n + 1) as f64).cos();
            Complex64::new(
                0.5 * (8.0 * r * r - 5.0) - 0.5,
                2.0 * r * (5.0 - 4.0 * r * r).sqrt(),
            )
        })
        .collect();
    with_residuals(&sp::Qtilde(n).expect("valid"), zs)
}

/// Explicit and numerical zeros of `family` at `n` agree under optimal
/// matching within `tol`; returns the bottleneck distance.
pub fn check_explicit(family: Family, n: u32, tol: f64) -> Result<f64> {
    check_explicit_for(family, n, &family.poly(n)?, tol)
}

/// [`check_explicit`] with the polynomial supplied, so callers walking a
/// whole sequence build it once.
pub fn check_explicit_for(family: Family, n: u32, p: &UniPoly, tol: f64) -> Result<f64> {
    match_explicit(family, n, &roots(p, DEFAULT_TOL)?, tol)
}

fn match_explicit(family: Family, n: u32, numeric: &[ComplexPoint], tol: f64) -> Result<f64> {
    let explicit = family
        .explicit(n)
        .ok_or_else(|| Error::InvalidArgument(format!("{family:?} has no explicit zeros")))?;
    let d = bottleneck_distance(&points(&explicit), &points(numeric)).unwrap_or(f64::INFINITY);
    ensure(
        d < tol,
        "explicit zeros match numerical zeros",
        n as u64,
        || format!("{family:?}: bottleneck distance {d:e}"),
    )?;
    Ok(d)
}

/// Largest deviation of the explicit `Q_n(1,z,z)` zeros from the circle
/// `(x + 2/3)² + y² = 1/9`.
pub fn zz_circle_residual(n: u32) -> f64 {
    zeros_explicit_zz(n)
        .iter()
        .map(|p| ((p.re + 2.0 / 3.0).powi(2) + p.im * p.im - 1.0 / 9.0).abs())
        .fold(0.0, f64::max)
}

/// Numerical zeros of `Q̃_n` lie on `|z + ½| = 5/2` with `Re z < 1`, and
/// match the explicit formula. Returns the largest circle deviation.
pub fn check_qtilde_circle(n: u32) -> Result<f64> {
    check_qtilde_circle_for(n, &sp::Qtilde(n)?)
}

pub fn check_qtilde_circle_for(n: u32, p: &UniPoly) -> Result<f64> {
    let numeric = roots(p, DEFAULT_TOL)?;
    let mut worst: f64 = 0.0;
    for p in &numeric {
        let dev = ((p.z() + 0.5).norm() - 2.5).abs();
        worst = worst.max(dev);
        ensure(
            dev < 1e-9 && p.re < 1.0,
            "zeros of Q~_n on |z+1/2| = 5/2 with Re z < 1",
            n as u64,
            || format!("zero {} {:+}i, deviation {dev:e}", p.re, p.im),
        )?;
    }
    match_explicit(Family::Qtilde, n, &numeric, 1e-8)?;
    Ok(worst)
}

/// Real, negative, reciprocal-paired zeros of `Q_n(x)` and `R_n(x)`.
pub fn check_real_negative_reciprocal(n: u32) -> Result<()> {
    check_real_negative_reciprocal_for(n, &sp::Qx(n), &sp::Rx(n))
}

/// [`check_real_negative_reciprocal`] on given `Q_n(x)` and `R_n(x)`.
pub fn check_real_negative_reciprocal_for(n: u32, qx: &UniPoly, rx: &UniPoly) -> Result<()> {
    for (name, p) in [("Q_n(x)", qx), ("R_n(x)", rx)] {
        if n == 0 {
            continue;
        }
        let zs = roots(p, DEFAULT_TOL)?;
        for z in &zs {
            ensure(
                z.im.abs() < 1e-8 && z.re < 0.0,
                "zeros real and negative",
                n as u64,
                || format!("{name}: zero {} {:+}i", z.re, z.im),
            )?;
        }
        let pts = points(&zs);
        let inv: Vec<Complex64> = pts.iter().map(|z| 1.0 / z).collect();
        let d = bottleneck_distance(&pts, &inv).unwrap_or(f64::INFINITY);
        ensure(d < 1e-8, "zeros pair as (rho, 1/rho)", n as u64, || {
            format!("{name}: distance {d:e}")
        })?;
    }
    Ok(())
}

/// Zeros of `R̃_n` with their distance to the circle `|z + ½| = 5/2`.
/// Nothing is asserted.
pub fn rtilde_zero_survey(n: u32) -> Result<Vec<(ComplexPoint, f64)>> {
    let p = sp::Rtilde(n)?;
    if p.degree() < 1 {
        return Ok(Vec::new());
    }
    Ok(roots(&p, DEFAULT_TOL)?
        .into_iter()
        .map(|z| {
            let d = ((z.z() + 0.5).norm() - 2.5).abs();
            (z, d)
        })
        .collect())
}

/// Numerical zeros (with multiplicity, as a multiset) of the factor lists
/// must reproduce those of the product; used as a consistency check of the
/// root finder on the factored families.
pub fn check_factor_zeros(n: u32, variant: FactorVariant) -> Result<f64> {
    let whole = roots(&sp::Q1(n, 1, variant.beta())?, DEFAULT_TOL)?;
    let mut parts = Vec::new();
    for f in sp::factor_Q1(n, variant)? {
        if f.degree() >= 1 {
            parts.extend(roots(&f, DEFAULT_TOL)?);
        }
    }
    let d = bottleneck_distance(&points(&whole), &points(&parts)).unwrap_or(f64::INFINITY);
    ensure(
        d < 1e-8,
        "zeros of the factors are the zeros of the product",
        n as u64,
        || format!("{variant:?}: distance {d:e}"),
    )?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_double_roots() {
        let r = roots(&UniPoly::from_i64(&[1, 3]), DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].re + 1.0 / 3.0).abs() < 1e-15 && r[0].im.abs() < 1e-15);
        let r = roots(&UniPoly::from_i64(&[1, 2, 1]), DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 2);
        for p in r {
            assert!((p.z() + 1.0).norm() < 1e-10, "{p:?}");
        }
    }

    #[test]
    fn zero_roots_are_split_off() {
        let r = roots(&UniPoly::from_i64(&[0, 0, 2, 1]), DEFAULT_TOL).unwrap();
        assert_eq!(r.iter().filter(|p| p.re == 0.0 && p.im == 0.0).count(), 2);
        assert!(roots(&UniPoly::from_i64(&[5]), DEFAULT_TOL).is_err());
    }

    #[test]
    fn quadratic_matches_formula() {
        let r = roots(&sp::Qx(2), DEFAULT_TOL).unwrap();
        let disc = (49.0f64 - 36.0).sqrt();
        let expected = [
            Complex64::new((-7.0 + disc) / 6.0, 0.0),
            Complex64::new((-7.0 - disc) / 6.0, 0.0),
        ];
        assert!(bottleneck_distance(&points(&r), &expected).unwrap() < 1e-12);
        assert!((r[0].z() * r[1].z() - 1.0).norm() < 1e-10);
    }

    #[test]
    fn explicit_families_small_n() {
        for n in 1..=8 {
            check_explicit(Family::Zz, n, 1e-8).unwrap();
            check_explicit(Family::Zz2, n, 1e-8).unwrap();
            check_qtilde_circle(n).unwrap();
            check_real_negative_reciprocal(n).unwrap();
            assert!(zz_circle_residual(n) < 1e-10);
        }
        assert!((zeros_explicit_qtilde(1)[0].z() + 3.0).norm() < 1e-15);
    }

    #[test]
    fn survey_shapes() {
        assert!(rtilde_zero_survey(1).unwrap().is_empty());
        assert_eq!(rtilde_zero_survey(5).unwrap().len(), 3);
    }
}
