//! Complete-intersection descriptors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;

/// A complete intersection X_n(d_1, ..., d_r): the transversal intersection
/// of r hypersurfaces of the given degrees inside CP^{n+r}.
///
/// `r = 0` is CP^n itself and `n = 0` is a finite set of points; both are
/// legal and serve as base cases for every recursive identity. Degrees are
/// kept in input order so that permutation invariance stays a genuine
/// property rather than a normalization artifact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Space {
    n: usize,
    degrees: Vec<u32>,
}

impl Space {
    /// New space; every degree must be at least 1.
    pub fn new(n: usize, degrees: Vec<u32>) -> Result<Self, Error> {
        if degrees.contains(&0) {
            return Err(Error::ZeroDegree);
        }
        Ok(Space { n, degrees })
    }

    /// CP^n, the r = 0 case.
    pub fn projective(n: usize) -> Self {
        Space {
            n,
            degrees: Vec::new(),
        }
    }

    /// Complex dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hypersurfaces cut out.
    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    /// Multi-degree in input order.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Product of the degrees (1 for CP^n); the evaluation of x^n on the
    /// fundamental class.
    pub fn total_degree(&self) -> BigInt {
        self.degrees
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }

    /// Coefficient of the first Chern class: n + r + 1 - sum of degrees.
    pub fn c1(&self) -> i64 {
        (self.n + self.r() + 1) as i64 - self.degrees.iter().map(|&d| d as i64).sum::<i64>()
    }

    /// Whether c1 is even, the spin condition used by the alpha invariant.
    pub fn is_spin(&self) -> bool {
        self.c1() % 2 == 0
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}(", self.n)?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}
