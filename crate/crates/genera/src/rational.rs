//! Exact rational scalars and the generalized binomial coefficient.
//!
//! Every genus value in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Construction and
//! arithmetic normalize eagerly, so a value has exactly one representation and
//! `==` is structural equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always in lowest terms, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient a(a-1)(a-2)...(a-k+1) / k!.
///
/// `a` may be any rational; half-integral and negative tops occur throughout
/// the closed-form genus sums. `binom_general(a, 0)` is 1 (empty product).
pub fn binom_general(a: &Rational, k: usize) -> Rational {
    let mut num = Rational::one();
    let mut fact = Rational::one();
    for i in 0..k {
        num *= a - rat(i as i64);
        fact *= rat(i as i64 + 1);
    }
    num / fact
}

/// Parse the string form `-?digits(/digits)?` into a rational in lowest terms.
///
/// The grammar is deliberately strict: no whitespace, no `+` sign, no
/// decimal points. A zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    fn digits(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    }

    let invalid = || Error::InvalidRational {
        text: text.to_string(),
    };

    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let unsigned_num = num_part.strip_prefix('-').unwrap_or(num_part);
    if !digits(unsigned_num) {
        return Err(invalid());
    }
    let numer: BigInt = num_part.parse().map_err(|_| invalid())?;

    let denom: BigInt = match den_part {
        None => BigInt::one(),
        Some(d) => {
            if !digits(d) {
                return Err(invalid());
            }
            let denom: BigInt = d.parse().map_err(|_| invalid())?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator {
                    text: text.to_string(),
                });
            }
            denom
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Canonical string form of a rational: `p` when integral, `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    debug_assert!(x.denom().is_positive());
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_integer_cases() {
        assert_eq!(binom_general(&rat(3), 2), rat(3));
        assert_eq!(binom_general(&rat(7), 0), Rational::one());
        assert_eq!(binom_general(&rat(10), 4), rat(210));
        // below-the-diagonal integer tops vanish
        assert_eq!(binom_general(&rat(2), 5), rat(0));
    }

    #[test]
    fn binom_half_integral_and_negative() {
        assert_eq!(binom_general(&ratio(1, 2), 3), ratio(1, 16));
        assert_eq!(binom_general(&rat(-1), 6), rat(1));
        assert_eq!(binom_general(&rat(-1), 5), rat(-1));
        assert_eq!(binom_general(&ratio(3, 2), 3), ratio(-1, 16));
    }

    #[test]
    fn binom_pascal_spot() {
        for (n, d, k) in [(5, 2, 4), (-3, 7, 6), (0, 1, 3)] {
            let a = ratio(n, d);
            let lhs = binom_general(&a, k);
            let rhs = binom_general(&(&a - rat(1)), k) + binom_general(&(&a - rat(1)), k - 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        let x = parse_rational("3/6").unwrap();
        assert_eq!(x, ratio(1, 2));
        assert_eq!(format_rational(&x), "1/2");
    }

    #[test]
    fn parse_integers() {
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert_eq!(format_rational(&rat(-4)), "-4");
        assert_eq!(parse_rational("0").unwrap(), rat(0));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1.5", "+3", "3/-2", "a", "1/", "/2", "1 / 2", "--1"] {
            assert!(matches!(
                parse_rational(bad),
                Err(Error::InvalidRational { .. })
            ));
        }
        assert!(matches!(
            parse_rational("5/0"),
            Err(Error::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn format_negative_fraction() {
        assert_eq!(format_rational(&ratio(-3, 9)), "-1/3");
    }
}
