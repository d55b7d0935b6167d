//! Closed-form binomial sums and structural predicates.
//!
//! Each function here evaluates an explicit formula in the multi-degree and
//! dimension, with no series arithmetic. The verification harness holds
//! these against the residue engine and the Chern-root oracle; three routes
//! to the same rational leave little room for a shared bug.
//!
//! Subset sums over the multi-degree are enumerated by binary masks; r stays
//! tiny in practice, so clarity beats asymptotics.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{binom_general, rat, ratio, Rational};
use crate::series::Series;
use crate::space::Space;

/// Sign classification of the A-hat genus of an even-dimensional spin
/// complete intersection: it vanishes exactly when c1 > 0 and is strictly
/// positive otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignClass {
    Zero,
    Positive,
}

/// Alpha invariant, shaped by the complex dimension mod 4: an integer, half
/// an even integer, a mod-2 class, or nothing at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alpha {
    Integer(Rational),
    Mod2(u8),
    Zero,
}

impl Alpha {
    /// Numeric value as a rational (the mod-2 class as 0 or 1).
    pub fn value(&self) -> Rational {
        match self {
            Alpha::Integer(x) => x.clone(),
            Alpha::Mod2(b) => rat(*b as i64),
            Alpha::Zero => Rational::zero(),
        }
    }

    /// Which target group the invariant lives in.
    pub fn form(&self) -> &'static str {
        match self {
            Alpha::Integer(_) => "integer",
            Alpha::Mod2(_) => "mod2",
            Alpha::Zero => "zero",
        }
    }
}

/// Sum over all subsets K of `degrees` of sign(|K|) * binom(shift + sum K, bottom).
fn subset_binomial_sum<F>(degrees: &[u32], shift: &Rational, bottom: usize, sign: F) -> Rational
where
    F: Fn(usize) -> bool, // true: add, false: subtract
{
    let r = degrees.len();
    assert!(r <= 20, "subset enumeration is capped at 20 degrees");
    let mut total = Rational::zero();
    for mask in 0u32..(1u32 << r) {
        let j = mask.count_ones() as usize;
        let picked: i64 = degrees
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d as i64)
            .sum();
        let term = binom_general(&(shift + rat(picked)), bottom);
        total = if sign(j) { total + term } else { total - term };
    }
    total
}

/// A-hat genus as an alternating binomial sum over sub-multi-degrees.
///
/// Defined for even complex dimension; odd dimensions return 0 so that
/// mixed-parity sweeps run uniformly.
pub fn ahat_closed(sp: &Space) -> Rational {
    if sp.n() % 2 == 1 {
        return Rational::zero();
    }
    let r = sp.r();
    let shift = ratio(sp.c1(), 2) - rat(1);
    subset_binomial_sum(sp.degrees(), &shift, sp.n() + r, |j| (r + j).is_multiple_of(2))
}

/// A-hat genus of the hypersurface of degree `d1` with complex dimension
/// `2 * n_half`, as the product formula
/// (2/(2n+1)!) * prod_{j=-n}^{n} (d1/2 - j).
pub fn ahat_hypersurface(n_half: u32, d1: u32) -> Rational {
    let n = n_half as i64;
    let half_d = ratio(d1 as i64, 2);
    let mut value = rat(2);
    let mut factorial = Rational::one();
    for (count, j) in (-n..=n).enumerate() {
        value *= &half_d - rat(j);
        factorial *= rat(count as i64 + 1);
    }
    value / factorial
}

/// Alpha invariant of a spin complete intersection, dispatched on n mod 4.
pub fn alpha_invariant(sp: &Space) -> Result<Alpha, Error> {
    if !sp.is_spin() {
        return Err(Error::NotSpin {
            space: sp.to_string(),
            c1: sp.c1(),
        });
    }
    match sp.n() % 4 {
        0 => Ok(Alpha::Integer(ahat_closed(sp))),
        2 => Ok(Alpha::Integer(ahat_closed(sp) / rat(2))),
        1 => {
            // Plain (unsigned) subset sum over all degrees but the last;
            // the excluded degree does not change the parity, which the
            // verification harness checks by rotating the tuple.
            let r = sp.r();
            let rest = if r == 0 {
                &[][..]
            } else {
                &sp.degrees()[..r - 1]
            };
            let shift = ratio(sp.c1(), 2) - rat(1);
            let sum = subset_binomial_sum(rest, &shift, sp.n() + r, |_| true);
            debug_assert!(sum.is_integer());
            let parity = sum.numer().mod_floor(&BigInt::from(2));
            Ok(Alpha::Mod2(if parity.is_zero() { 0 } else { 1 }))
        }
        _ => Ok(Alpha::Zero),
    }
}

/// A-hat genus by the degree-lowering recursion: degree-1 factors are
/// absorbed outright, and with the degrees sorted so the two smallest come
/// last, X(..., a, b) splits into a sum of b spaces with one hypersurface
/// fewer. The base cases are handled by the hypersurface product formula
/// (X(1) being all of projective space).
pub fn ahat_iterated(sp: &Space) -> Result<Rational, Error> {
    if sp.n() % 2 == 1 {
        return Err(Error::OddDimension {
            space: sp.to_string(),
            n: sp.n(),
        });
    }
    Ok(iterate(sp.n() as u32 / 2, sp.degrees().to_vec()))
}

fn iterate(n_half: u32, degrees: Vec<u32>) -> Rational {
    let mut ds: Vec<u32> = degrees.into_iter().filter(|&d| d > 1).collect();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    match ds.len() {
        0 => ahat_hypersurface(n_half, 1),
        1 => ahat_hypersurface(n_half, ds[0]),
        r => {
            let last = ds.pop().expect("r >= 2");
            let second = ds.pop().expect("r >= 2");
            debug_assert!(second >= last && last >= 2 && ds.len() == r - 2);
            let mut total = Rational::zero();
            for k in 0..last {
                let merged = second + last - 1 - 2 * k;
                let mut next = ds.clone();
                next.push(merged);
                total += iterate(n_half, next);
            }
            total
        }
    }
}

/// Vanishing classification of the A-hat genus for even-dimensional spin
/// spaces: a predicate on c1 alone. The value-level agreement with
/// [`ahat_closed`] is asserted by the verification harness, not here.
pub fn ahat_sign_class(sp: &Space) -> Result<SignClass, Error> {
    if sp.n() % 2 == 1 {
        return Err(Error::OddDimension {
            space: sp.to_string(),
            n: sp.n(),
        });
    }
    if !sp.is_spin() {
        return Err(Error::NotSpin {
            space: sp.to_string(),
            c1: sp.c1(),
        });
    }
    Ok(if sp.c1() > 0 {
        SignClass::Zero
    } else {
        SignClass::Positive
    })
}

/// Todd genus, first binomial form: signs depend on n + r + |subset|.
pub fn todd_t1(sp: &Space) -> Rational {
    let base = sp.n() + sp.r();
    subset_binomial_sum(sp.degrees(), &rat(-1), base, |j| (base + j).is_multiple_of(2))
}

/// Todd genus, second binomial form: shifted by c1 - 1 with signs in
/// r - |subset|. Equivalent to [`todd_t1`] for every space.
pub fn todd_t2(sp: &Space) -> Rational {
    let r = sp.r();
    let shift = rat(sp.c1()) - rat(1);
    subset_binomial_sum(sp.degrees(), &shift, sp.n() + r, |j| (r + j).is_multiple_of(2))
}

/// Euler characteristic as d * h_n(1, 1, 1-d_1, ..., 1-d_r), with the
/// complete homogeneous symmetric polynomial h_n read off its generating
/// function prod_j 1/(1 - a_j z).
pub fn euler_closed(sp: &Space) -> Rational {
    let order = sp.n();
    let mut gen = Series::one(order);
    let mut values: Vec<i64> = vec![1, 1];
    values.extend(sp.degrees().iter().map(|&d| 1 - d as i64));
    for a in values {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        if order >= 1 {
            coeffs[1] = rat(-a);
        }
        let factor = Series::from_coeffs(coeffs)
            .recip()
            .expect("1 - a z has constant term 1");
        gen = gen.mul(&factor);
    }
    let h_n = gen.coeff(order).expect("order matches by construction");
    Rational::from_integer(sp.total_degree()) * h_n
}

/// A_k genus as k^n times an alternating binomial sum with shift c1/k - 1.
pub fn ak_closed(sp: &Space, k: u32) -> Rational {
    assert!(k >= 1, "A_k needs k >= 1");
    let r = sp.r();
    let shift = ratio(sp.c1(), k as i64) - rat(1);
    let sum = subset_binomial_sum(sp.degrees(), &shift, sp.n() + r, |j| (r + j).is_multiple_of(2));
    Rational::from_integer(BigInt::from(k).pow(sp.n() as u32)) * sum
}
