use num_bigint::BigInt;
use overpoly::polyring::*;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), arb_rational()), 0..6).prop_map(
        |terms| {
            terms.into_iter().fold(MultiPoly::zero(3), |acc, (e, c)| {
                &acc + &MultiPoly::monomial(3, e, c)
            })
        },
    )
}

fn arb_uni() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 0..7).prop_map(|c| UniPoly::from_i64(&c))
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        prop_assert_eq!(MultiPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn display_parses_back(a in arb_poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse_poly(&text, &["x", "y", "z"]).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), p in prop::collection::vec(arb_rational(), 3)) {
        let prod = (&a * &b).eval(&p).unwrap();
        prop_assert_eq!(prod, a.eval(&p).unwrap() * b.eval(&p).unwrap());
    }

    #[test]
    fn univariate_division(a in arb_uni(), b in arb_uni()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn compensated_matches_exact(a in arb_uni(), re in -3i64..=3, im in -3i64..=3) {
        // At Gaussian integers the exact value is an integer pair.
        let z = num_complex::Complex64::new(re as f64, im as f64);
        let cp = CompensatedPoly::new(&a).unwrap();
        let (mut pr, mut pi) = (0i64, 0i64);
        for c in a.coeffs().iter().rev() {
            let c = c.to_integer().to_string().parse::<i64>().unwrap();
            (pr, pi) = (pr * re - pi * im + c, pr * im + pi * re);
        }
        let v = cp.eval(z).value;
        prop_assert_eq!((v.re, v.im), (pr as f64, pi as f64));
    }

    #[test]
    fn laurent_shift_and_product(a in arb_uni(), b in arb_uni(), s in -5i64..5, t in -5i64..5) {
        let la = LaurentPoly::from_poly(&a).shift(s);
        let lb = LaurentPoly::from_poly(&b).shift(t);
        let want = LaurentPoly::from_poly(&(&a * &b)).shift(s + t);
        prop_assert_eq!(&la * &lb, want);
    }
}

#[test]
fn rational_parsing() {
    assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("1/-2").is_err());
    assert_eq!(format_rational(&ratio(4, 2)), "2/1");
}

#[test]
fn malformed_json_rejected() {
    for bad in [
        "",
        "{}",
        r#"{"arity": 0, "terms": []}"#,
        r#"{"arity": 2, "terms": [[[1], "1"]]}"#,
        r#"{"arity": 1, "terms": [[[1], "x"]]}"#,
    ] {
        assert!(MultiPoly::from_json(bad).is_err(), "{bad}");
    }
}
