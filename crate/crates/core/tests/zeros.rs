use num_complex::Complex64;
use overpoly::polyring::UniPoly;
use overpoly::zeros::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn roots_of_products_of_linear_factors(rs in prop::collection::vec(-6i64..=6, 1..8)) {
        let p = rs.iter().fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_i64(&[-r, 1]));
        let got = roots(&p, DEFAULT_TOL).unwrap();
        prop_assert_eq!(got.len(), rs.len());
        let mut want: Vec<f64> = rs.iter().map(|&r| r as f64).collect();
        let mut have: Vec<f64> = got.iter().map(|z| z.re).collect();
        want.sort_by(f64::total_cmp);
        have.sort_by(f64::total_cmp);
        for (w, h) in want.iter().zip(&have) {
            prop_assert!((w - h).abs() < 1e-4, "{want:?} vs {have:?}");
        }
        for z in &got {
            prop_assert!(z.im.abs() < 1e-4);
        }
    }

    #[test]
    fn residuals_within_tolerance(c in prop::collection::vec(-50i64..=50, 2..20)) {
        let p = UniPoly::from_i64(&c);
        prop_assume!(p.degree() >= 1);
        let pts = roots(&p, DEFAULT_TOL).unwrap();
        prop_assert_eq!(pts.len() as isize, p.degree());
        for z in pts {
            let w = Complex64::new(z.re, z.im);
            let v = p.eval_complex(w).unwrap();
            let bound: f64 = c.iter().enumerate().map(|(k, a)| a.abs() as f64 * w.norm().powi(k as i32)).sum();
            prop_assert!(v.norm() <= 1e-10 * (1.0 + bound), "{v} at {w}");
        }
    }
}

#[test]
fn quartic_family_at_larger_degree() {
    for n in [40, 50] {
        check_explicit(Family::Zz2, n, 1e-8).unwrap();
    }
}

#[test]
fn families_parse() {
    for name in ["zz", "zz2", "qtilde", "rtilde", "qx", "rx"] {
        assert!(Family::parse(name).is_some());
    }
    assert!(Family::parse("nope").is_none());
}

#[test]
fn bad_input() {
    assert!(roots(&UniPoly::from_i64(&[3]), DEFAULT_TOL).is_err());
    assert!(roots(&UniPoly::from_i64(&[1, 1]), 0.0).is_err());
}
