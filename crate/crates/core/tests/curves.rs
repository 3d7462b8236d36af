use overpoly::curves::*;
use overpoly::zeros::zeros_explicit_zz2;

#[test]
fn table_matches_derivation() {
    check_curve_table().unwrap();
}

#[test]
fn quartic_analysis() {
    verify_param().unwrap();
    let t = tangent_points_f12().unwrap();
    assert!((t.x0 + 0.594414).abs() < 5e-6);
    let m = extremal_moduli_f12().unwrap();
    assert!((m.r_max - 3f64.sqrt()).abs() < 1e-6);
}

#[test]
fn inversion_and_cassini() {
    check_inversion_examples(8).unwrap();
    check_cassini().unwrap();
    check_asymptote().unwrap();
}

#[test]
fn explicit_zeros_on_quartic() {
    let f = derive_curve(1, 2).unwrap();
    let rep = membership(&f, &zeros_explicit_zz2(21), 1e-12);
    assert!(rep.max_residual < 1e-8, "{rep:?}");
}

#[test]
fn numerical_zeros_on_curves() {
    check_zero_membership(&[10, 20], 1e-7).unwrap();
}

#[test]
fn inversion_is_exact_on_small_grid() {
    for a in -1..=3i64 {
        for b in -1..=3i64 {
            if (a, b) != (0, 0) {
                let r = inversion_check(a, b, 4).unwrap();
                assert_eq!(r.relation, Relation::Equal, "({a},{b})");
            }
        }
    }
}

mod props {
    use num_bigint::BigInt;
    use overpoly::curves::*;
    use overpoly::polyring::Rational;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn parametrization_is_exact(n in -200i64..200, d in 1i64..50) {
            let t = Rational::new(BigInt::from(n), BigInt::from(d));
            let (x, y) = param_f12(&t).unwrap();
            prop_assert!(derive_curve(1, 2).unwrap().eval_exact(&x, &y) == Rational::from_integer(0.into()));
        }

        #[test]
        fn inverted_samples_land_on_partner(a in -1i64..=3, b in -1i64..=3) {
            prop_assume!((a, b) != (0, 0));
            let f = derive_curve(a, b).unwrap();
            let g = derive_curve(b - a, b).unwrap();
            let pts: Vec<(f64, f64)> = sample_curve(a, b, 40)
                .unwrap()
                .into_iter()
                .filter(|(x, y)| x * x + y * y > 1e-3)
                .map(|(x, y)| {
                    let r = x * x + y * y;
                    (x / r, y / r)
                })
                .collect();
            let rep = membership(&g, &as_points(&pts), 1e-8);
            prop_assert!(rep.pass, "{f} -> {g}: {rep:?}");
        }
    }
}
