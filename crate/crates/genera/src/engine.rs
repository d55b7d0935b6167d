//! The residue-formula evaluator.
//!
//! For a genus with series R(z) = z*S(z), the genus of X_n(d_1,...,d_r) is
//! the residue at 0 of prod_i R(d_i z) / R(z)^{n+r+1}. Pulling the powers of
//! z out of R symbolically leaves
//!
//! ```text
//! d * [z^n] ( prod_i S(d_i z) / S(z)^{n+r+1} )
//! ```
//!
//! with d the total degree, which is what this module computes: exact
//! coefficient extraction at working order exactly n.

use crate::error::Error;
use crate::genus::Genus;
use crate::rational::{rat, Rational};
use crate::series::Series;
use crate::space::Space;

/// Genus of a complete intersection by exact residue extraction.
pub fn genus_value(sp: &Space, g: &Genus) -> Result<Rational, Error> {
    let order = sp.n();
    let s = g.s_series(order)?;
    let mut numerator = Series::one(order);
    for &d in sp.degrees() {
        numerator = numerator.mul(&s.scale_arg(&rat(d as i64)));
    }
    let exponent = (sp.n() + sp.r() + 1) as i64;
    let integrand = numerator.mul(&s.powi(-exponent)?);
    Ok(Rational::from_integer(sp.total_degree()) * integrand.coeff(order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn space(n: usize, degrees: &[u32]) -> Space {
        Space::new(n, degrees.to_vec()).unwrap()
    }

    #[test]
    fn todd_of_projective_space_is_one() {
        for n in 0..=10 {
            assert_eq!(
                genus_value(&Space::projective(n), &Genus::Todd).unwrap(),
                rat(1),
                "CP^{n}"
            );
        }
    }

    #[test]
    fn k3_spot_values() {
        let k3 = space(2, &[4]);
        assert_eq!(genus_value(&k3, &Genus::Ahat).unwrap(), rat(2));
        assert_eq!(genus_value(&k3, &Genus::Signature).unwrap(), rat(-16));
        assert_eq!(genus_value(&k3, &Genus::Euler).unwrap(), rat(24));
        assert_eq!(genus_value(&k3, &Genus::Todd).unwrap(), rat(2));
    }

    #[test]
    fn zero_dimensional_space_counts_points() {
        let pts = space(0, &[5]);
        assert_eq!(genus_value(&pts, &Genus::Euler).unwrap(), rat(5));
        assert_eq!(genus_value(&pts, &Genus::Todd).unwrap(), rat(5));
    }

    #[test]
    fn euler_of_projective_space() {
        for n in 0..=6 {
            assert_eq!(
                genus_value(&Space::projective(n), &Genus::Euler).unwrap(),
                rat(n as i64 + 1)
            );
        }
    }

    #[test]
    fn ty_values_frozen_from_independent_expansion() {
        let y = Genus::ty(ratio(1, 2));
        assert_eq!(genus_value(&Space::projective(1), &y).unwrap(), ratio(1, 2));
        assert_eq!(genus_value(&Space::projective(2), &y).unwrap(), ratio(3, 4));
        assert_eq!(genus_value(&Space::projective(3), &y).unwrap(), ratio(5, 8));
        assert_eq!(genus_value(&space(2, &[4]), &y).unwrap(), ratio(-15, 2));
        assert_eq!(genus_value(&space(3, &[2]), &y).unwrap(), ratio(5, 8));
        assert_eq!(genus_value(&space(2, &[2, 3]), &y).unwrap(), ratio(-15, 2));
    }

    #[test]
    fn ak_values_frozen_from_independent_expansion() {
        let a3 = Genus::ak(3);
        assert_eq!(genus_value(&Space::projective(2), &a3).unwrap(), rat(0));
        assert_eq!(genus_value(&Space::projective(3), &a3).unwrap(), ratio(5, 3));
        assert_eq!(genus_value(&space(2, &[4]), &a3).unwrap(), rat(18));
        assert_eq!(genus_value(&space(3, &[2]), &a3).unwrap(), rat(0));
    }

    #[test]
    fn more_frozen_spot_values() {
        assert_eq!(
            genus_value(&space(4, &[2, 2]), &Genus::Ahat).unwrap(),
            ratio(-1, 32)
        );
        assert_eq!(
            genus_value(&space(4, &[5]), &Genus::Ahat).unwrap(),
            ratio(63, 128)
        );
        assert_eq!(
            genus_value(&space(4, &[3]), &Genus::Signature).unwrap(),
            rat(19)
        );
        assert_eq!(
            genus_value(&space(2, &[2, 3]), &Genus::Todd).unwrap(),
            rat(2)
        );
        assert_eq!(
            genus_value(&space(8, &[5, 5, 5]), &Genus::Euler).unwrap(),
            rat(255433125)
        );
    }

    #[test]
    fn ahat_vanishes_in_odd_dimension() {
        for (n, ds) in [(1usize, vec![]), (3, vec![2]), (5, vec![2, 3]), (7, vec![4])] {
            let sp = Space::new(n, ds).unwrap();
            assert_eq!(genus_value(&sp, &Genus::Ahat).unwrap(), rat(0), "{sp}");
        }
    }

    #[test]
    fn degree_one_absorption_spot() {
        let with = space(3, &[2, 1]);
        let without = space(3, &[2]);
        for g in [Genus::Todd, Genus::Euler, Genus::Signature] {
            assert_eq!(
                genus_value(&with, &g).unwrap(),
                genus_value(&without, &g).unwrap()
            );
        }
    }

    #[test]
    fn custom_genus_runs_through_engine() {
        // Q = 1 exactly at order 0: the genus of a zero-dimensional space is
        // its point count, and higher dimensions are out of reach.
        let unit = Genus::custom("unit", vec![]);
        assert_eq!(genus_value(&space(0, &[7]), &unit).unwrap(), rat(7));
        assert!(matches!(
            genus_value(&space(2, &[3]), &unit),
            Err(Error::CustomOrderTooShort { .. })
        ));
    }
}
