//! Exact computation of Hirzebruch genera of complete intersections.
//!
//! A complete intersection X_n(d_1,...,d_r) is cut out of CP^{n+r} by r
//! hypersurfaces of the given degrees. For any genus determined by a power
//! series with constant term 1, this crate evaluates the genus of such a
//! space by three mutually independent routes:
//!
//! - the **residue engine** ([`engine`]): exact coefficient extraction from
//!   the series prod_i S(d_i z) / S(z)^{n+r+1};
//! - **closed forms** ([`closed`]): explicit binomial sums over
//!   sub-multi-degrees, plus the alpha invariant and the vanishing
//!   classification of the A-hat genus;
//! - the **Chern-root oracle** ([`oracle`]): the definition itself, driven
//!   through Newton's identities so the formal roots never materialize.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! computation path. The [`verify`] module sweeps the three routes against
//! each other over bounded families of spaces.

pub mod closed;
pub mod engine;
pub mod error;
pub mod genus;
pub mod oracle;
pub mod rational;
pub mod series;
pub mod space;
pub mod verify;

pub use closed::{Alpha, SignClass};
pub use error::Error;
pub use genus::Genus;
pub use space::Space;

/// Exact rational scalar used throughout.
pub use rational::Rational;

/// Arbitrary-precision integer.
pub use rational::Int;

/// Series over the rationals: the instantiation every genus computation uses.
pub type QSeries = series::Series<Rational>;
