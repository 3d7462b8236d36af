use overpoly::enumerator::*;
use overpoly::polyring::Rational;
use proptest::prelude::*;

proptest! {
    #[test]
    fn counts_match_product(b in 2u32..6, lambda in 1u32..5, n in 0u64..25) {
        let cfg = PartConfig::new(b, lambda).unwrap();
        prop_assert_eq!(count_series(&cfg, n), product_series(&cfg, n));
    }

    #[test]
    fn every_enumerated_part_list_round_trips(b in 2u32..5, n in 0u64..30) {
        let cfg = PartConfig::restricted(b).unwrap();
        for p in enumerate(&cfg, n) {
            prop_assert_eq!(p.value(&cfg), n);
            for compact in [false, true] {
                let back = Overpartition::parse(&p.render(&cfg, compact), &cfg).unwrap();
                prop_assert_eq!(&back, &p);
            }
        }
    }

    #[test]
    fn weight_poly_counts(b in 2u32..5, n in 0u64..30) {
        let cfg = PartConfig::restricted(b).unwrap();
        let total = weight_poly(&cfg, n).eval_all_ones();
        prop_assert_eq!(total, Rational::from_integer((enumerate(&cfg, n).len() as i64).into()));
    }
}

#[test]
fn small_example() {
    let cfg = PartConfig::new(2, 2).unwrap();
    assert_eq!(enumerate(&cfg, 4).len(), 8);
    assert!(PartConfig::new(1, 2).is_err());
    assert!(Overpartition::parse("(3,1)", &cfg).is_err());
    assert!(Overpartition::parse("(~2,~2)", &cfg).is_err());
    assert!(Overpartition::parse("(1,1,1)", &cfg).is_err());
}
