use num_bigint::BigInt;
use proptest::prelude::*;

use lrq_core::lr::admissible_keys;
use lrq_core::{CoeffRecord, LaurentPoly, Method};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-20i64..=20, any::<i64>()), 0..8)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c) * BigInt::from(c)))))
}

fn record() -> impl Strategy<Value = CoeffRecord> {
    let keys = admissible_keys(3, 3);
    (prop::sample::select(keys), poly(), prop::sample::select(vec![Method::Tableau, Method::Oracle, Method::Both]))
        .prop_map(|(key, c, method)| CoeffRecord::new(key, c, method))
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(r in record()) {
        let text = lrq::json::render(&r);
        prop_assert!(!text.contains('\n'));
        let back = lrq::json::parse(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(lrq::json::render(&back), text);
    }

    #[test]
    fn tampered_normalization_is_rejected(r in record(), shift in 1i64..5) {
        prop_assume!(!r.little_c.is_zero());
        let mut bad = r.clone();
        bad.big_c = bad.big_c.shift(shift);
        prop_assert!(lrq::json::parse(&lrq::json::render(&bad)).is_err());
    }
}
