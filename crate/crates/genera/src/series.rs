//! Truncated univariate formal power series.
//!
//! A [`Series`] stores the coefficients of z^0 ..= z^order; the truncation
//! order is explicit state, not ambient context. Binary operations truncate
//! to the smaller of the two orders, and reading a coefficient past the
//! truncation order is an error rather than a silent zero, so an
//! insufficient working order always fails loudly.
//!
//! The coefficient type is generic over [`Scalar`]; every computation in this
//! crate instantiates it with exact rationals (see [`crate::QSeries`]).

use num_traits::{FromPrimitive, Num};

use crate::error::Error;

/// Coefficient ring for a series: a commutative ring with exact division and
/// an embedding of the integers. `BigRational` is the instantiation used by
/// every genus computation.
pub trait Scalar: Num + Clone + std::ops::Neg<Output = Self> + FromPrimitive {}

impl<T: Num + Clone + std::ops::Neg<Output = T> + FromPrimitive> Scalar for T {}

/// Formal power series truncated at an explicit order (inclusive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Series from a coefficient list; `coeffs[i]` is the coefficient of z^i
    /// and the truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Series { coeffs }
    }

    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// A constant series at the given truncation order.
    pub fn constant(value: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = value;
        Series { coeffs }
    }

    /// Truncation order (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All stored coefficients, index i holding the coefficient of z^i.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of z^k. Asking past the truncation order is an error:
    /// the caller's working order was too small and a silent zero would
    /// corrupt downstream values undetectably.
    pub fn coeff(&self, k: usize) -> Result<T, Error> {
        self.coeffs.get(k).cloned().ok_or(Error::CoeffBeyondOrder {
            index: k,
            order: self.order(),
        })
    }

    /// Constant term.
    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    /// Copy truncated to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Series {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    fn min_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    /// Coefficient-wise sum, truncated to the smaller order.
    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.min_order(rhs);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
            .collect();
        Series { coeffs }
    }

    /// Coefficient-wise difference, truncated to the smaller order.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Coefficient-wise negation.
    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.min_order(rhs);
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, c) in rhs.coeffs.iter().zip(coeffs[i..].iter_mut()) {
                *c = c.clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Substitute z -> c*z: coefficient i becomes c^i times coefficient i.
    pub fn scale_arg(&self, c: &T) -> Self {
        let mut power = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i > 0 {
                    power = power.clone() * c.clone();
                }
                a.clone() * power.clone()
            })
            .collect();
        Series { coeffs }
    }

    /// Nonnegative power by repeated squaring, at this series' order.
    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power; negative exponents go through [`Series::recip`] and so
    /// need a nonzero constant term.
    pub fn powi(&self, e: i64) -> Result<Self, Error> {
        if e < 0 {
            Ok(self.recip()?.pow(e.unsigned_abs() as usize))
        } else {
            Ok(self.pow(e as usize))
        }
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Recurrence: b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    pub fn recip(&self) -> Result<Self, Error> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::RecipZeroConstant);
        }
        let inv_a0 = T::one() / a0.clone();
        let mut out = vec![T::zero(); self.order() + 1];
        out[0] = inv_a0.clone();
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * out[n - k].clone();
                }
            }
            out[n] = -(inv_a0.clone() * acc);
        }
        Ok(Series { coeffs: out })
    }

    /// Exponential of a series with zero constant term.
    ///
    /// From h' = a'h: k*h_k = sum_{j=1..k} j*a_j*h_{k-j}, h_0 = 1.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let mut out = vec![T::zero(); self.order() + 1];
        out[0] = T::one();
        for k in 1..=self.order() {
            let mut acc = T::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + int::<T>(j) * self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out[k] = acc / int::<T>(k);
        }
        Ok(Series { coeffs: out })
    }

    /// Logarithm of a series with constant term 1.
    ///
    /// From a' = a*g': g_k = a_k - (1/k) * sum_{j=1..k-1} j*g_j*a_{k-j}.
    #[allow(clippy::needless_range_loop)]
    pub fn log(&self) -> Result<Self, Error> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstantNotOne);
        }
        let mut out = vec![T::zero(); self.order() + 1];
        for k in 1..=self.order() {
            let mut acc = T::zero();
            for j in 1..k {
                if !out[j].is_zero() && !self.coeffs[k - j].is_zero() {
                    acc = acc + int::<T>(j) * out[j].clone() * self.coeffs[k - j].clone();
                }
            }
            out[k] = self.coeffs[k].clone() - acc / int::<T>(k);
        }
        Ok(Series { coeffs: out })
    }
}

fn int<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("integer embeds into the coefficient ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio, Rational};

    type Q = Series<Rational>;

    fn qs(coeffs: &[(i64, i64)]) -> Q {
        Q::from_coeffs(coeffs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    fn ints(coeffs: &[i64]) -> Q {
        Q::from_coeffs(coeffs.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn mul_basic() {
        let a = ints(&[1, 1, 0]); // 1 + z
        let b = ints(&[1, -1, 0]); // 1 - z
        assert_eq!(a.mul(&b), ints(&[1, 0, -1]));
    }

    #[test]
    fn add_identity_and_min_order() {
        let a = ints(&[2, 3, 4]);
        assert_eq!(a.add(&Q::zero(2)), a);
        // mixed orders truncate to the smaller one
        assert_eq!(a.add(&Q::zero(1)).order(), 1);
    }

    #[test]
    fn scale_halves() {
        let a = ints(&[1, 1]);
        assert_eq!(a.scale(&ratio(1, 2)), qs(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn recip_geometric() {
        let a = ints(&[1, -1, 0, 0]); // 1 - z
        assert_eq!(a.recip().unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn recip_constant() {
        let c = Q::constant(rat(4), 2);
        assert_eq!(c.recip().unwrap(), Q::constant(ratio(1, 4), 2));
    }

    #[test]
    fn recip_of_square() {
        // 1/(1+z)^2 = 1 - 2z + 3z^2 - 4z^3 + ...
        let a = ints(&[1, 1, 0, 0]).pow(2);
        assert_eq!(a.recip().unwrap(), ints(&[1, -2, 3, -4]));
    }

    #[test]
    fn recip_zero_constant_is_error() {
        assert_eq!(ints(&[0, 1]).recip(), Err(Error::RecipZeroConstant));
    }

    #[test]
    fn scale_arg_examples() {
        let a = ints(&[1, 1, 1]);
        assert_eq!(a.scale_arg(&rat(2)), ints(&[1, 2, 4]));
        assert_eq!(a.scale_arg(&rat(1)), a);
        assert_eq!(a.scale_arg(&rat(0)), ints(&[1, 0, 0]));
    }

    #[test]
    fn pow_examples() {
        let a = ints(&[1, 1, 0]);
        assert_eq!(a.pow(2), ints(&[1, 2, 1]));
        assert_eq!(a.pow(0), Q::one(2));
        assert_eq!(
            ints(&[1, -1, 0, 0]).powi(-1).unwrap(),
            ints(&[1, 1, 1, 1])
        );
        assert!(ints(&[0, 1]).powi(-2).is_err());
    }

    #[test]
    fn exp_of_z() {
        let z = ints(&[0, 1, 0, 0, 0]);
        let e = z.exp().unwrap();
        assert_eq!(e, qs(&[(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)]));
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_eq!(Q::one(3).log().unwrap(), Q::zero(3));
    }

    #[test]
    fn exp_log_round_trip() {
        let a = ints(&[1, 1, 0, 0]); // 1 + z
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
        let g = qs(&[(0, 1), (2, 3), (-1, 5), (7, 2)]);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn exp_log_preconditions() {
        assert_eq!(ints(&[1, 0]).exp(), Err(Error::ExpNonzeroConstant));
        assert_eq!(ints(&[2, 0]).log(), Err(Error::LogConstantNotOne));
    }

    #[test]
    fn coeff_in_and_out_of_range() {
        let a = ints(&[1, 0, 3]);
        assert_eq!(a.coeff(2).unwrap(), rat(3));
        assert_eq!(a.coeff(1).unwrap(), rat(0));
        assert_eq!(
            a.coeff(3),
            Err(Error::CoeffBeyondOrder { index: 3, order: 2 })
        );
    }

    #[test]
    fn sinh_functional_identity_univariate() {
        // R(x) = 2 sinh(x/2) satisfies
        //   R(u+w) R(v+w) = R(u) R(v) + R(u+v+w) R(w)
        // specialized to u = a t, v = b t, w = c t.
        let order = 40;
        let r = crate::genus::sinh_r_series(order);
        let at = |q: Rational| r.scale_arg(&q);
        for (a, b, c) in [
            (rat(1), rat(2), rat(3)),
            (ratio(1, 2), ratio(-2, 3), ratio(5, 7)),
            (rat(0), ratio(3, 4), rat(-2)),
        ] {
            let lhs = at(&a + &c).mul(&at(&b + &c));
            let rhs = at(a.clone())
                .mul(&at(b.clone()))
                .add(&at(&a + &b + &c).mul(&at(c)));
            assert_eq!(lhs, rhs);
        }
    }
}
