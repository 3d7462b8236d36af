use num_bigint::BigUint;
use overpoly::chebyshev;
use overpoly::sequences::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn q_and_r_are_p_at_their_indices(b in 2u32..6, n in 0u32..6) {
        prop_assert_eq!(Q_poly(b, n).unwrap(), p_poly(b, &q_index(b, n)).unwrap());
        prop_assert_eq!(R_poly(b, n).unwrap(), p_poly(b, &r_index(b, n)).unwrap());
    }

    #[test]
    fn coefficients_are_nonnegative_integers(b in 2u32..6, n in 0u64..60) {
        prop_assert!(p_poly(b, &BigUint::from(n)).unwrap().has_nonnegative_integer_coefficients());
    }
}

#[test]
fn checks_pass_in_several_bases() {
    for b in [2, 3, 4, 7] {
        index_check(b, 8).unwrap();
        gf_check(b, 8).unwrap();
        all_ones_check(b, 8).unwrap();
        chebyshev::verify_chebyshev_forms(b, 6).unwrap();
    }
}

#[test]
fn base_one_rejected() {
    assert!(p_poly(1, &BigUint::from(3u32)).is_err());
}
