//! Randomized algebraic properties of the scalar and series layers.

use genera::rational::{binom_general, format_rational, parse_rational, rat, Rational};
use genera::QSeries;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn rationals() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=60)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_rationals() -> impl Strategy<Value = Rational> {
    rationals().prop_filter("nonzero", |x| *x != rat(0))
}

fn series(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(rationals(), len).prop_map(QSeries::from_coeffs)
}

proptest! {
    #[test]
    fn rational_addition_associates(a in rationals(), b in rationals(), c in rationals()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }

    #[test]
    fn rational_multiplication_distributes(a in rationals(), b in rationals(), c in rationals()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn rational_inverse(a in nonzero_rationals()) {
        prop_assert_eq!(&a * (Rational::one() / &a), Rational::one());
    }

    #[test]
    fn rational_round_trips_through_text(a in rationals()) {
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn binom_pascal_identity(a in rationals(), k in 1usize..=8) {
        let up = &a - rat(1);
        prop_assert_eq!(
            binom_general(&a, k),
            binom_general(&up, k) + binom_general(&up, k - 1)
        );
    }

    #[test]
    fn binom_matches_factorial_ratio(n in 0u64..=20, k in 0u64..=20) {
        prop_assume!(n >= k);
        let fact = |m: u64| (1..=m).map(BigInt::from).product::<BigInt>().max(BigInt::one());
        let expected = Rational::new(fact(n), fact(k) * fact(n - k));
        prop_assert_eq!(binom_general(&rat(n as i64), k as usize), expected);
    }

    #[test]
    fn series_addition_associates(a in series(1..=6), b in series(1..=6), c in series(1..=6)) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn series_multiplication_commutes(a in series(1..=6), b in series(1..=6)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_multiplication_distributes(a in series(1..=5), b in series(1..=5), c in series(1..=5)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn series_recip_is_right_inverse(mut coeffs in prop::collection::vec(rationals(), 1..=7), head in nonzero_rationals()) {
        coeffs[0] = head;
        let a = QSeries::from_coeffs(coeffs);
        let order = a.order();
        prop_assert_eq!(a.mul(&a.recip().unwrap()), QSeries::one(order));
    }

    #[test]
    fn series_log_undoes_exp(mut coeffs in prop::collection::vec(rationals(), 1..=7)) {
        coeffs[0] = rat(0);
        let a = QSeries::from_coeffs(coeffs);
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
    }

    #[test]
    fn series_exp_undoes_log(mut coeffs in prop::collection::vec(rationals(), 1..=7)) {
        coeffs[0] = rat(1);
        let a = QSeries::from_coeffs(coeffs);
        prop_assert_eq!(a.log().unwrap().exp().unwrap(), a);
    }

    #[test]
    fn argument_scaling_respects_products(a in series(1..=6), b in series(1..=6), c in rationals()) {
        prop_assert_eq!(
            a.mul(&b).scale_arg(&c),
            a.scale_arg(&c).mul(&b.scale_arg(&c))
        );
    }
}
