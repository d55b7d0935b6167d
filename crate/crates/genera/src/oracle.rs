//! Independent first-principles evaluator, used to cross-validate the
//! residue engine.
//!
//! The genus of M is the integral of prod_i Q(x_i) over the formal Chern
//! roots x_1,...,x_n of the tangent bundle. The roots themselves live in an
//! extension ring and are never materialized; only their symmetric functions
//! are. Reading the elementary symmetric data off the total Chern class,
//! converting to power sums with the Newton recurrence, and summing
//! log Q over the roots keeps the whole computation inside the rationals:
//!
//!   prod Q(x_i) = exp( sum_m l_m p_m x^m ),  log Q(t) = sum_m l_m t^m.
//!
//! Nothing here shares code with the residue route beyond the S-series
//! itself, which is exactly what makes the agreement test meaningful.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::genus::Genus;
use crate::rational::{rat, Rational};
use crate::series::Series;
use crate::space::Space;

type QSeries = Series<Rational>;

/// Total Chern class of X_n(d_1,...,d_r) as a series in x, truncated at
/// order n: (1+x)^{n+r+1} * prod_i (1 + d_i x)^{-1}. All coefficients are
/// integers.
pub fn total_chern_series(sp: &Space) -> QSeries {
    let order = sp.n();
    let one_plus_x = linear(rat(1), order);
    let mut chern = one_plus_x.pow(sp.n() + sp.r() + 1);
    let mut denominator = QSeries::one(order);
    for &d in sp.degrees() {
        denominator = denominator.mul(&linear(rat(d as i64), order));
    }
    chern = chern.mul(
        &denominator
            .recip()
            .expect("1 + d x has constant term 1"),
    );
    chern
}

/// Genus of a complete intersection straight from the definition.
pub fn genus_value_oracle(sp: &Space, g: &Genus) -> Result<Rational, Error> {
    let n = sp.n();
    let chern = total_chern_series(sp);
    let elementary: Vec<Rational> = (1..=n)
        .map(|j| chern.coeff(j))
        .collect::<Result<_, _>>()?;
    let power = power_sums(&elementary);

    // l_m from log Q = log (1/S)
    let log_q = g.s_series(n)?.recip()?.log()?;

    // sum over roots of log Q(x_i), as a series in x
    let mut summed = vec![Rational::zero(); n + 1];
    for m in 1..=n {
        summed[m] = log_q.coeff(m)? * &power[m - 1];
    }
    let product_q = QSeries::from_coeffs(summed).exp()?;
    Ok(Rational::from_integer(sp.total_degree()) * product_q.coeff(n)?)
}

/// Newton's recurrence: power sums p_1..p_k from elementary symmetric
/// functions e_1..e_k (e_j = 0 past the supplied slice's length is the
/// caller's responsibility; here the slice always has full length).
///
/// p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-2} e_{k-1} p_1 + (-1)^{k-1} k e_k
pub fn power_sums(elementary: &[Rational]) -> Vec<Rational> {
    let n = elementary.len();
    let mut power: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..k {
            let term = &elementary[i - 1] * &power[k - i - 1];
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        let tail = rat(k as i64) * &elementary[k - 1];
        acc = if k % 2 == 1 { acc + tail } else { acc - tail };
        power.push(acc);
    }
    power
}

fn linear(slope: Rational, order: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    if order >= 1 {
        coeffs[1] = slope;
    }
    QSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::genus_value;
    use crate::rational::ratio;

    fn space(n: usize, degrees: &[u32]) -> Space {
        Space::new(n, degrees.to_vec()).unwrap()
    }

    #[test]
    fn chern_class_of_cp2() {
        let c = total_chern_series(&Space::projective(2));
        assert_eq!(c.coeffs(), &[rat(1), rat(3), rat(3)]);
    }

    #[test]
    fn chern_class_of_elliptic_curve() {
        let c = total_chern_series(&space(1, &[3]));
        assert_eq!(c.coeffs(), &[rat(1), rat(0)]);
    }

    #[test]
    fn linear_chern_coefficient_is_c1() {
        for sp in [
            space(2, &[4]),
            space(4, &[2, 4]),
            space(3, &[]),
            space(5, &[2, 2, 5]),
        ] {
            let c = total_chern_series(&sp);
            assert_eq!(c.coeff(1).unwrap(), rat(sp.c1()), "{sp}");
        }
    }

    #[test]
    fn chern_coefficients_are_integers() {
        for sp in [space(6, &[3, 5]), space(8, &[2, 3, 4])] {
            for c in total_chern_series(&sp).coeffs() {
                assert!(c.is_integer(), "{sp}: {c}");
            }
        }
    }

    #[test]
    fn newton_recurrence_matches_direct_power_sums() {
        // synthetic integer roots; e_j expanded directly, p_k summed directly
        let root_sets: &[&[i64]] = &[
            &[1, 2, 3],
            &[-1, 4, 4, 7],
            &[0, 0, 5],
            &[2, -3, 2, -3, 1, 6],
        ];
        for roots in root_sets {
            let n = roots.len();
            // prod (1 + a_i x) gives the elementary symmetric functions
            let mut poly = QSeries::one(n);
            for &a in *roots {
                poly = poly.mul(&linear(rat(a), n));
            }
            let elementary: Vec<Rational> =
                (1..=n).map(|j| poly.coeff(j).unwrap()).collect();
            let computed = power_sums(&elementary);
            for k in 1..=n {
                let direct: i64 = roots.iter().map(|a| a.pow(k as u32)).sum();
                assert_eq!(computed[k - 1], rat(direct), "p_{k} of {roots:?}");
            }
        }
    }

    #[test]
    fn oracle_spot_values() {
        assert_eq!(
            genus_value_oracle(&Space::projective(3), &Genus::Todd).unwrap(),
            rat(1)
        );
        assert_eq!(
            genus_value_oracle(&space(2, &[4]), &Genus::Ahat).unwrap(),
            rat(2)
        );
        assert_eq!(
            genus_value_oracle(&space(1, &[3]), &Genus::Euler).unwrap(),
            rat(0)
        );
        assert_eq!(
            genus_value_oracle(&space(2, &[4]), &Genus::Signature).unwrap(),
            rat(-16)
        );
    }

    #[test]
    fn oracle_agrees_with_engine_on_a_small_grid() {
        let genera = [
            Genus::Todd,
            Genus::Ahat,
            Genus::Signature,
            Genus::Euler,
            Genus::ty(ratio(1, 2)),
            Genus::ak(3),
        ];
        for n in 0..=4 {
            for ds in [vec![], vec![2], vec![3], vec![2, 2], vec![2, 4]] {
                let sp = Space::new(n, ds).unwrap();
                for g in &genera {
                    assert_eq!(
                        genus_value(&sp, g).unwrap(),
                        genus_value_oracle(&sp, g).unwrap(),
                        "{sp} {g}"
                    );
                }
            }
        }
    }
}
