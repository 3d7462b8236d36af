//! Real algebraic curves `f_{α,β}(x, y) = 0` carrying the zeros of
//! `Q_n(1, z^α, z^β)`, and the analysis of the quartic `f_{1,2}`.
//!
//! A zero `z` of `Q_n(1, z^α, z^β)` satisfies `|1 + z^{β−α} + z^{−α}| = 1`.
//! Multiplying through by `|z|^m` with `m = max(0, α, α−β)` turns this into
//! a polynomial condition in `x = Re z`, `y = Im z`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{ensure, violation, Error, Result};
use crate::polyring::{canonical_cmp, parse_poly, ratio, Rational, UniPoly};
use crate::polyring::{LaurentPoly, MultiPoly};
use crate::sequences;
use crate::specializations::{monomial_specialize, q1_laurent};
use crate::zeros::{self, ComplexPoint};

/// Integer polynomial in `x` (variable 0) and `y` (variable 1), kept
/// primitive and with its lowest term, in display order, positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly(MultiPoly);

/// Tabulated curves: `(α, β, f_{α,β}, genus)`.
pub const CURVE_TABLE: [(i64, i64, &str, u32); 15] = [
    (0, 1, "3+4x+x^2+y^2", 0),
    (0, 2, "3+4x^2+x^4-4y^2+2x^2y^2+y^4", 1),
    (0, 3, "3+4x^3+x^6-12xy^2+3x^4y^2+3x^2y^4+y^6", 4),
    (1, 0, "1+x", 0),
    (1, 1, "1+4x+3x^2+3y^2", 0),
    (1, 2, "1+2x+2x^2+2x^3+x^4-2y^2+2xy^2+2x^2y^2+y^4", 0),
    (1, 3, "1+2x+2x^3+2x^4+x^6-6xy^2+3x^4y^2-2y^4+3x^2y^4+y^6", 4),
    (2, 0, "1+x^2-y^2", 0),
    (2, 1, "1+2x+3x^2+2x^3-y^2+2xy^2", 1),
    (2, 2, "1+4x^2+3x^4-4y^2+6x^2y^2+3y^4", 1),
    (
        2,
        3,
        "1+2x^2+2x^3+2x^5+x^6-2y^2-6xy^2+4x^3y^2+3x^4y^2+2xy^4+3x^2y^4+y^6",
        4,
    ),
    (3, 0, "1+x^3-3xy^2", 1),
    (3, 1, "1+2x+x^2+2x^3+2x^4+y^2-6xy^2-2y^4", 3),
    (
        3,
        2,
        "1+2x^2+2x^3+x^4+2x^5-2y^2-6xy^2+2x^2y^2+4x^3y^2+y^4+2xy^4",
        4,
    ),
    (3, 3, "1+4x^3+3x^6-12xy^2+9x^4y^2+9x^2y^4+3y^6", 4),
];

/// The Cassini oval, inverse of `f_{2,1}`.
pub const F_MINUS1_1: &str = "2x+3x^2+2x^3+x^4-y^2+2xy^2+2x^2y^2+y^4";

const XY: [&str; 2] = ["x", "y"];

fn var(k: usize) -> MultiPoly {
    MultiPoly::var(2, k)
}

fn int(c: i64) -> MultiPoly {
    MultiPoly::from_int(2, c)
}

fn circle() -> MultiPoly {
    &var(0).pow(2) + &var(1).pow(2)
}

impl BivarPoly {
    /// Normalizes a nonzero bivariate polynomial with rational
    /// coefficients: clear denominators, divide out the content, fix the
    /// sign.
    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        if p.arity() != 2 {
            return Err(Error::ArityMismatch {
                left: 2,
                right: p.arity(),
            });
        }
        if p.is_zero() {
            return Err(Error::InvalidArgument("zero curve polynomial".into()));
        }
        let lcm = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let scaled = p.scale(&Rational::from_integer(lcm));
        let gcd = scaled
            .terms()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()));
        let lowest = scaled
            .terms()
            .min_by(|a, b| canonical_cmp(b.0, a.0))
            .map(|(_, c)| c.is_negative())
            .expect("nonzero");
        let unit = if lowest { -gcd } else { gcd };
        Ok(BivarPoly(
            scaled.scale(&Rational::from_integer(unit).recip()),
        ))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(&parse_poly(text, &XY)?)
    }

    pub fn as_multi(&self) -> &MultiPoly {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.total_degree()
    }

    /// Coefficient list `[[i, j, c], ...]` of `c x^i y^j` in display order.
    pub fn to_json_value(&self) -> serde_json::Value {
        self.0.to_json_value()
    }

    fn f64_terms(&self) -> Vec<(i32, i32, f64)> {
        self.0
            .terms()
            .map(|(e, c)| (e[0] as i32, e[1] as i32, c.to_f64().unwrap_or(f64::NAN)))
            .collect()
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.f64_terms()
            .iter()
            .map(|&(i, j, c)| c * x.powi(i) * y.powi(j))
            .sum()
    }

    /// `sum |c_ij| |x|^i |y|^j`, the scale for residual tests.
    pub fn abs_bound(&self, x: f64, y: f64) -> f64 {
        self.f64_terms()
            .iter()
            .map(|&(i, j, c)| c.abs() * x.abs().powi(i) * y.abs().powi(j))
            .sum()
    }

    pub fn eval_exact(&self, x: &Rational, y: &Rational) -> Rational {
        self.0.eval(&[x.clone(), y.clone()]).expect("arity two")
    }
}

impl std::fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = ["x".to_string(), "y".to_string()];
        write!(f, "{}", self.0.display_with(&names))
    }
}

/// Real and imaginary parts of `(x + iy)^k`.
fn z_pow(k: u32) -> (MultiPoly, MultiPoly) {
    let (mut re, mut im) = (MultiPoly::zero(2), MultiPoly::zero(2));
    let mut binom = BigInt::one();
    for j in 0..=k {
        let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(&binom * sign);
        let term = MultiPoly::monomial(2, vec![k - j, j], c);
        if j % 2 == 0 {
            re = &re + &term;
        } else {
            im = &im + &term;
        }
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    (re, im)
}

/// Divides out every factor of `x² + y²`.
fn strip_circle(mut p: MultiPoly) -> MultiPoly {
    let r = circle();
    while let Ok(q) = p.exact_divide(&r) {
        if q.is_zero() {
            break;
        }
        p = q;
    }
    p
}

/// The curve through all zeros of `Q_n(1, z^α, z^β)`, for every `n`.
pub fn derive_curve(alpha: i64, beta: i64) -> Result<BivarPoly> {
    if alpha == 0 && beta == 0 {
        return Err(Error::InvalidArgument(
            "(alpha, beta) = (0, 0) is excluded".into(),
        ));
    }
    let m = 0.max(alpha).max(alpha - beta);
    let (mut re, mut im) = (MultiPoly::zero(2), MultiPoly::zero(2));
    for k in [m, m + beta - alpha, m - alpha] {
        let (a, b) = z_pow(k as u32);
        re = &re + &a;
        im = &im + &b;
    }
    let f = &(&re * &re + &im * &im) - &circle().pow(m as u32);
    if f.is_zero() {
        return Err(violation(
            "curve derivation",
            0,
            format!("({alpha}, {beta}) gives the zero polynomial"),
        ));
    }
    BivarPoly::from_poly(&strip_circle(f))
}

/// `f_{−1,0} = (2x+1)² + 4y² − 1`, built from its factored form.
pub fn f_minus1_0_fixture() -> BivarPoly {
    let p = &(&(&int(2) * &var(0)) + &int(1)).pow(2) + &(&int(4) * &var(1).pow(2));
    BivarPoly::from_poly(&(&p - &int(1))).expect("nonzero")
}

/// Every tabulated curve, `f_{2,1}` and the Cassini oval `f_{−1,1}`, derived
/// from scratch and compared with the fixtures.
pub fn check_curve_table() -> Result<()> {
    let mut rows: Vec<(i64, i64, BivarPoly)> = CURVE_TABLE
        .iter()
        .map(|&(a, b, text, _)| Ok((a, b, BivarPoly::parse(text)?)))
        .collect::<Result<_>>()?;
    rows.push((-1, 1, BivarPoly::parse(F_MINUS1_1)?));
    rows.push((-1, 0, f_minus1_0_fixture()));
    for (a, b, want) in rows {
        let got = derive_curve(a, b)?;
        ensure(got == want, "curve table", 0, || {
            format!("f_({a},{b}): derived {got}, expected {want}")
        })?;
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub points: usize,
    /// Largest raw `|f(x, y)|`.
    pub max_residual: f64,
    /// Largest `|f(x, y)| / sum |c_ij| |x|^i |y|^j`.
    pub max_scaled: f64,
    pub worst: Option<(f64, f64)>,
    pub pass: bool,
}

pub fn membership(f: &BivarPoly, pts: &[ComplexPoint], tol: f64) -> MembershipReport {
    let mut rep = MembershipReport {
        points: pts.len(),
        max_residual: 0.0,
        max_scaled: 0.0,
        worst: None,
        pass: true,
    };
    for p in pts {
        let v = f.eval(p.re, p.im).abs();
        let scaled = if v == 0.0 {
            0.0
        } else {
            v / f.abs_bound(p.re, p.im).max(f64::MIN_POSITIVE)
        };
        rep.max_residual = rep.max_residual.max(v);
        if scaled > rep.max_scaled || scaled.is_nan() {
            rep.max_scaled = scaled;
            rep.worst = Some((p.re, p.im));
        }
    }
    rep.pass = rep.max_scaled <= tol;
    rep
}

/// `Q_n(1, z^α, z^β)` as an ordinary polynomial, with the power of `z`
/// that clears the negative exponents removed. `q` is `Q_n` in base 2.
pub fn q1_cleared(q: &MultiPoly, alpha: i64, beta: i64) -> UniPoly {
    let lau: LaurentPoly = monomial_specialize(q, &[0, alpha, beta]);
    lau.shift(-lau.low())
        .to_poly()
        .expect("nonnegative after shift")
}

/// Numerical zeros of `Q_n(1, z^α, z^β)` tested against `f_{α,β}`.
pub fn zero_membership(q: &MultiPoly, alpha: i64, beta: i64, tol: f64) -> Result<MembershipReport> {
    let f = derive_curve(alpha, beta)?;
    let p = q1_cleared(q, alpha, beta);
    let pts = if p.degree() < 1 {
        Vec::new()
    } else {
        zeros::roots(&p, zeros::DEFAULT_TOL)?
    };
    Ok(membership(&f, &pts, tol))
}

/// Every `(α, β) ∈ {−1..3}² \ {(0,0)}` for each `n` in `ns`.
pub fn check_zero_membership(ns: &[u32], tol: f64) -> Result<()> {
    for &n in ns {
        let q = sequences::Q_poly(2, n)?;
        for alpha in -1..=3 {
            for beta in -1..=3 {
                if alpha == 0 && beta == 0 {
                    continue;
                }
                let rep = zero_membership(&q, alpha, beta, tol)?;
                ensure(rep.pass, "zeros on curve", n as u64, || {
                    format!(
                        "({alpha}, {beta}): scaled residual {:e} at {:?}",
                        rep.max_scaled, rep.worst
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn param_parts() -> (UniPoly, UniPoly, UniPoly) {
    let lin = |a: i64| UniPoly::from_i64(&[1, a]);
    let x = &UniPoly::from_i64(&[0, 0, -4]) * &lin(4).pow(2);
    let y = &(&lin(5) * &lin(3)) * &UniPoly::from_i64(&[1, 8, 17]);
    let d = UniPoly::from_i64(&[1, 14, 74, 178, 169]);
    (x, y, d)
}

/// The rational parametrization of `f_{1,2}`.
pub fn param_f12(t: &Rational) -> Result<(Rational, Rational)> {
    let (x, y, d) = param_parts();
    let den = d.eval(t);
    if den.is_zero() {
        return Err(Error::Pole(t.to_string()));
    }
    Ok((x.eval(t) / &den, y.eval(t) / den))
}

/// `dy/dx` along the parametrization at `t`.
fn param_slope(t: &Rational) -> Rational {
    let (x, y, d) = param_parts();
    let dx = &(&x.derivative() * &d) - &(&x * &d.derivative());
    let dy = &(&y.derivative() * &d) - &(&y * &d.derivative());
    dy.eval(t) / dx.eval(t)
}

/// Symbolic check that the parametrization lies on `f_{1,2}`, plus its
/// special values.
pub fn verify_param() -> Result<()> {
    let f = derive_curve(1, 2)?;
    let (x, y, d) = param_parts();
    let deg = f.total_degree() as u32;
    let mut acc = UniPoly::zero();
    for (e, c) in f.as_multi().terms() {
        let term = &(&x.pow(e[0]) * &y.pow(e[1])) * &d.pow(deg - e[0] - e[1]);
        acc = &acc + &term.scale(c);
    }
    ensure(acc.is_zero(), "parametrization on f_{1,2}", 0, || {
        format!("cleared numerator {acc}")
    })?;

    let (zero, one) = (Rational::zero(), Rational::one());
    let at = |t: Rational| param_f12(&t);
    ensure(
        at(zero.clone())? == (zero.clone(), one.clone()),
        "parametrization",
        0,
        || "t = 0 should give (0, 1)",
    )?;
    for (t, slope) in [(ratio(-1, 5), 1), (ratio(-1, 3), -1)] {
        let p = at(t.clone())?;
        ensure(
            p == (-one.clone(), zero.clone()),
            "parametrization",
            0,
            || format!("t = {t} gives {:?}", p),
        )?;
        let s = param_slope(&t);
        ensure(
            s == Rational::from_integer(slope.into()),
            "parametrization",
            0,
            || format!("slope at t = {t} is {s}"),
        )?;
    }
    let lead = |p: &UniPoly| p.leading().cloned().expect("nonzero");
    let lim = (lead(&x) / lead(&d), lead(&y) / lead(&d));
    ensure(
        lim == (-ratio(64, 169), ratio(255, 169)),
        "parametrization",
        0,
        || format!("limit at infinity {:?}", lim),
    )?;
    let (px, py) = at(one)?;
    let v = f.eval_exact(&px, &py);
    ensure(v.is_zero(), "parametrization", 0, || {
        format!("f at t = 1 is {v}")
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub x0: f64,
    pub y0: f64,
    pub vertical: Vec<(f64, f64)>,
    pub horizontal: Vec<(f64, f64)>,
    pub max_residual: f64,
}

/// Points of `f_{1,2}` with vertical or horizontal tangents.
pub fn tangent_points_f12() -> Result<TangentReport> {
    let f = derive_curve(1, 2)?;
    let s93 = 93f64.sqrt();
    let a = (188.0 + 36.0 * s93).cbrt();
    let x0 = -a / 18.0 + 22.0 / (9.0 * a) - 4.0 / 9.0;
    let y0 = ((495.0 * s93 - 1617.0) * a + 33396.0 + (-18.0 * s93 + 699.0) * a * a).sqrt() / 198.0;
    let id = "tangent points of f_{1,2}";
    ensure(
        (x0 + 0.594414).abs() < 5e-6 && (y0 - 1.545634).abs() < 5e-6,
        id,
        0,
        || format!("(x0, y0) = ({x0}, {y0})"),
    )?;
    let cubic = 3.0 * x0.powi(3) + 4.0 * x0 * x0 + 3.0 * x0 + 1.0;
    ensure(cubic.abs() < 1e-10, id, 0, || {
        format!("cubic at x0 is {cubic:e}")
    })?;

    let s5 = 5f64.sqrt() / 3.0;
    let vertical = vec![(0.0, 1.0), (0.0, -1.0), (-4.0 / 3.0, s5), (-4.0 / 3.0, -s5)];
    let horizontal = vec![(x0, y0), (x0, -y0)];
    let num =
        |x: f64, y: f64| 1.0 + 2.0 * x + 3.0 * x * x + 2.0 * x.powi(3) + (1.0 + 2.0 * x) * y * y;
    let den = |x: f64, y: f64| 2.0 * y * (1.0 - x - x * x - y * y);
    let mut max_residual: f64 = 0.0;
    for &(x, y) in vertical.iter().chain(&horizontal) {
        max_residual = max_residual.max(f.eval(x, y).abs());
    }
    ensure(max_residual < 1e-9, id, 0, || {
        format!("residual {max_residual:e}")
    })?;
    for &(x, y) in &vertical {
        ensure(den(x, y).abs() < 1e-9, id, 0, || {
            format!("denominator at ({x}, {y})")
        })?;
    }
    for &(x, y) in &horizontal {
        ensure(num(x, y).abs() < 1e-9, id, 0, || {
            format!("numerator at ({x}, {y})")
        })?;
    }

    // Eliminating y² between f and the numerator leaves this quartic in x.
    let lhs = &UniPoly::from_i64(&[1, 1]) * &UniPoly::from_i64(&[1, 3, 4, 3]);
    ensure(lhs == UniPoly::from_i64(&[1, 4, 7, 7, 3]), id, 0, || {
        format!("factored form expands to {lhs}")
    })?;
    Ok(TangentReport {
        x0,
        y0,
        vertical,
        horizontal,
        max_residual,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuliReport {
    pub r_max: f64,
    pub r_min: f64,
    pub theta_max_over_pi: f64,
    pub theta_min_over_pi: f64,
}

/// Both radii of `f_{1,2}` at angle `θ`, from `r + 1/r = s(θ)`.
/// Only defined where `cos θ ≤ 0`.
pub fn polar_radii_f12(theta: f64) -> Option<(f64, f64)> {
    let c = theta.cos();
    let s = -c + (4.0 - 3.0 * c * c).sqrt();
    let disc = s * s - 4.0;
    if disc < -1e-12 {
        return None;
    }
    let root = disc.max(0.0).sqrt();
    Some(((s + root) / 2.0, (s - root) / 2.0))
}

/// Largest and smallest modulus on `f_{1,2}` from a sweep over
/// `θ ∈ [π/2, π]`.
pub fn extremal_moduli_f12() -> Result<ModuliReport> {
    const STEPS: usize = 200_000;
    let mut rep = ModuliReport {
        r_max: 0.0,
        r_min: f64::INFINITY,
        theta_max_over_pi: 0.0,
        theta_min_over_pi: 0.0,
    };
    for i in 0..=STEPS {
        let theta = PI / 2.0 + PI / 2.0 * i as f64 / STEPS as f64;
        let Some((hi, lo)) = polar_radii_f12(theta) else {
            continue;
        };
        if hi > rep.r_max {
            rep.r_max = hi;
            rep.theta_max_over_pi = theta / PI;
        }
        if lo < rep.r_min {
            rep.r_min = lo;
            rep.theta_min_over_pi = theta / PI;
        }
    }
    let id = "extremal moduli of f_{1,2}";
    let s3 = 3f64.sqrt();
    ensure(
        (rep.r_max - s3).abs() < 1e-6 && (rep.r_min - 1.0 / s3).abs() < 1e-6,
        id,
        0,
        || format!("r in [{}, {}]", rep.r_min, rep.r_max),
    )?;
    ensure(
        (rep.theta_max_over_pi - 0.695913).abs() < 1e-4
            && (rep.theta_min_over_pi - 0.695913).abs() < 1e-4,
        id,
        0,
        || {
            format!(
                "attained at {}π, {}π",
                rep.theta_max_over_pi, rep.theta_min_over_pi
            )
        },
    )?;
    let f = derive_curve(1, 2)?;
    let s2 = 2f64.sqrt();
    for (x, y) in [
        (-1.0, s2),
        (-1.0, -s2),
        (-1.0 / 3.0, s2 / 3.0),
        (-1.0 / 3.0, -s2 / 3.0),
    ] {
        let v = f.eval(x, y);
        ensure(v.abs() < 1e-10, id, 0, || format!("f({x}, {y}) = {v:e}"))?;
    }
    Ok(rep)
}

/// How the inverted partner curve relates to `f_{α,β}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Equal,
    /// `f_{α,β}` divides the inverted curve with a nontrivial cofactor.
    Factor,
    Unrelated,
}

#[derive(Clone, Debug, Serialize)]
pub struct InversionReport {
    pub partner: (i64, i64),
    pub relation: Relation,
    pub inverted: String,
}

/// Image of `f(x, y) = 0` under `z ↦ z/|z|²`, with powers of `x² + y²`
/// cleared.
pub fn invert_curve(f: &BivarPoly) -> Result<BivarPoly> {
    let d = f.total_degree() as u32;
    let r = circle();
    let mut out = MultiPoly::zero(2);
    for (e, c) in f.as_multi().terms() {
        let m = MultiPoly::monomial(2, e.to_vec(), c.clone());
        out = &out + &(&m * &r.pow(d - e[0] - e[1]));
    }
    BivarPoly::from_poly(&strip_circle(out))
}

/// The exact identity relating `Q_n(1, z^{β−α}, z^β)` to the reversed
/// family for `n ≤ n_max`, and the inversion of the partner curve.
pub fn inversion_check(alpha: i64, beta: i64, n_max: u32) -> Result<InversionReport> {
    if alpha == 0 && beta == 0 {
        return Err(Error::InvalidArgument(
            "(alpha, beta) = (0, 0) is excluded".into(),
        ));
    }
    for n in 0..=n_max {
        let lhs = q1_laurent(n, beta - alpha, beta);
        let rhs = q1_laurent(n, -alpha, -beta).shift(n as i64 * beta);
        ensure(lhs == rhs, "reversal of Q_n(1,z^a,z^b)", n as u64, || {
            format!("(alpha, beta) = ({alpha}, {beta})")
        })?;
    }
    let partner = (beta - alpha, beta);
    let f = derive_curve(alpha, beta)?;
    let g = invert_curve(&derive_curve(partner.0, partner.1)?)?;
    let relation = if g == f {
        Relation::Equal
    } else if g.as_multi().exact_divide(f.as_multi()).is_ok() {
        Relation::Factor
    } else {
        Relation::Unrelated
    };
    Ok(InversionReport {
        partner,
        relation,
        inverted: g.to_string(),
    })
}

/// Known inversion pairs: `f_{1,2}` is self-inverse,
/// `f_{1,1} ↔ f_{0,1}`, `f_{1,0} ↔ f_{−1,0}`, `f_{2,1} ↔ f_{−1,1}`.
pub fn check_inversion_examples(n_max: u32) -> Result<()> {
    for (a, b) in [(1, 2), (1, 1), (0, 1), (1, 0), (-1, 0), (2, 1), (-1, 1)] {
        let rep = inversion_check(a, b, n_max)?;
        ensure(
            rep.relation == Relation::Equal,
            "curve inversion",
            0,
            || {
                format!(
                    "({a}, {b}) vs partner {:?}: {:?}, {}",
                    rep.partner, rep.relation, rep.inverted
                )
            },
        )?;
    }
    Ok(())
}

/// Expands the product of squared distances to `(−1/2, ±√3/2)`, minus one,
/// treating `√3` as a formal symbol `s` with `s² = 3`, and compares with
/// `f_{−1,1}`.
pub fn check_cassini() -> Result<()> {
    let (x, y, s) = (
        MultiPoly::var(3, 0),
        MultiPoly::var(3, 1),
        MultiPoly::var(3, 2),
    );
    let half = MultiPoly::constant(3, ratio(1, 2));
    let xs = (&x + &half).pow(2);
    let sh = &s * &half;
    let near = &xs + &(&y - &sh).pow(2);
    let far = &xs + &(&y + &sh).pow(2);
    let prod = &(&near * &far) - &MultiPoly::one(3);
    let mut reduced = MultiPoly::zero(2);
    for (e, c) in prod.terms() {
        ensure(e[2] % 2 == 0, "Cassini form", 0, || {
            format!("odd power of the square root survives: {prod}")
        })?;
        let c = c * Rational::from_integer(BigInt::from(3).pow(e[2] / 2));
        reduced = &reduced + &MultiPoly::monomial(2, vec![e[0], e[1]], c);
    }
    let got = BivarPoly::from_poly(&reduced)?;
    let want = derive_curve(-1, 1)?;
    ensure(got == want, "Cassini form", 0, || {
        format!("{got} vs {want}")
    })?;
    ensure(
        got == BivarPoly::parse(F_MINUS1_1)?,
        "Cassini form",
        0,
        || got.to_string(),
    )
}

/// `f_{2,1}` has the vertical asymptote `x = 1/2`: its `y²` coefficient is
/// a multiple of `2x − 1`.
pub fn check_asymptote() -> Result<()> {
    let f = derive_curve(2, 1)?;
    let id = "asymptote of f_{2,1}";
    ensure(f.as_multi().degree_in(1) == 2, id, 0, || f.to_string())?;
    let at_half = f
        .as_multi()
        .substitute(&[MultiPoly::constant(2, ratio(1, 2)), var(1)])?;
    ensure(at_half.degree_in(1) <= 0, id, 0, || {
        format!("f(1/2, y) = {at_half}")
    })
}

/// Every curve check with a fixed outcome, in one call.
pub fn check_all(n_max_inversion: u32) -> Result<()> {
    check_curve_table()?;
    verify_param()?;
    tangent_points_f12()?;
    extremal_moduli_f12()?;
    check_inversion_examples(n_max_inversion)?;
    check_cassini()?;
    check_asymptote()
}

/// Points on `f_{1,2}` from the polar form, both branches, ordered by angle.
pub fn sample_f12(k: usize) -> Vec<(f64, f64)> {
    let half = k.div_ceil(2).max(1);
    let mut lower = Vec::with_capacity(half);
    let mut upper = Vec::with_capacity(half);
    for i in 0..half {
        let t = (i as f64 + 0.5) / half as f64;
        let theta = PI / 2.0 + PI * t;
        if let Some((hi, lo)) = polar_radii_f12(theta) {
            upper.push((hi * theta.cos(), hi * theta.sin()));
            lower.push((lo * theta.cos(), lo * theta.sin()));
        }
    }
    upper.extend(lower);
    upper.truncate(k);
    upper
}

/// Sign changes of `f` along horizontal and vertical grid lines of the
/// square `[−r, r]²`, each refined by bisection.
pub fn sample_marching(f: &BivarPoly, k: usize, r: f64) -> Vec<(f64, f64)> {
    let lines = k.max(8);
    let steps = 4 * lines;
    let mut out = Vec::new();
    for vertical in [false, true] {
        for li in 0..=lines {
            let c = -r + 2.0 * r * li as f64 / lines as f64;
            let at = |t: f64| if vertical { (c, t) } else { (t, c) };
            let g = |t: f64| {
                let (x, y) = at(t);
                f.eval(x, y)
            };
            let mut t0 = -r;
            let mut v0 = g(t0);
            for si in 1..=steps {
                let t1 = -r + 2.0 * r * si as f64 / steps as f64;
                let v1 = g(t1);
                if v0 == 0.0 {
                    out.push(at(t0));
                } else if v0 * v1 < 0.0 {
                    let (mut a, mut b, mut va) = (t0, t1, v0);
                    for _ in 0..60 {
                        let mid = 0.5 * (a + b);
                        let vm = g(mid);
                        if vm == 0.0 {
                            a = mid;
                            b = mid;
                            break;
                        }
                        if va * vm < 0.0 {
                            b = mid;
                        } else {
                            a = mid;
                            va = vm;
                        }
                    }
                    out.push(at(0.5 * (a + b)));
                }
                t0 = t1;
                v0 = v1;
            }
        }
    }
    if out.len() > k && k > 0 {
        let n = out.len();
        out = (0..k).map(|i| out[i * n / k]).collect();
    }
    out
}

/// Sample points on `f_{α,β} = 0`: the polar solver for `(1, 2)`, marching
/// squares style line scans otherwise.
pub fn sample_curve(alpha: i64, beta: i64, k: usize) -> Result<Vec<(f64, f64)>> {
    if (alpha, beta) == (1, 2) {
        return Ok(sample_f12(k));
    }
    let f = derive_curve(alpha, beta)?;
    Ok(sample_marching(&f, k, 3.0))
}

/// Complex sample points, for membership tests.
pub fn as_points(xy: &[(f64, f64)]) -> Vec<ComplexPoint> {
    xy.iter()
        .map(|&(x, y)| ComplexPoint::new(Complex64::new(x, y), 0.0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_parts() {
        let (re, im) = z_pow(3);
        assert_eq!(re, parse_poly("x^3-3xy^2", &XY).unwrap());
        assert_eq!(im, parse_poly("3x^2y-y^3", &XY).unwrap());
    }

    #[test]
    fn normalization() {
        let p = BivarPoly::parse("-4-4x").unwrap();
        assert_eq!(p, BivarPoly::parse("1+x").unwrap());
        let q = BivarPoly::from_poly(&parse_poly("(1/2)x-(1/3)y^2", &XY).unwrap()).unwrap();
        assert_eq!(q.to_string(), "-2y^2+3x");
    }

    #[test]
    fn small_curves() {
        assert_eq!(derive_curve(1, 0).unwrap().to_string(), "x+1");
        assert_eq!(
            derive_curve(1, 2).unwrap().to_string(),
            "x^4+2x^2y^2+y^4+2x^3+2xy^2+2x^2-2y^2+2x+1"
        );
        let f = derive_curve(1, 1).unwrap();
        assert!(f.eval_exact(&ratio(-1, 3), &Rational::zero()).is_zero());
        assert_eq!(derive_curve(-1, 0).unwrap(), f_minus1_0_fixture());
    }

    #[test]
    fn param_pole() {
        // D has no rational roots, so a pole can only be hit in floating
        // point; the exact path always succeeds on rationals.
        assert!(param_f12(&ratio(7, 3)).is_ok());
    }

    #[test]
    fn sampling_lands_on_curves() {
        let f = derive_curve(1, 2).unwrap();
        let rep = membership(&f, &as_points(&sample_f12(64)), 1e-10);
        assert!(rep.pass, "{rep:?}");
        let g = derive_curve(2, 1).unwrap();
        let pts = sample_curve(2, 1, 50).unwrap();
        assert!(!pts.is_empty());
        assert!(membership(&g, &as_points(&pts), 1e-10).pass);
    }
}
