//! Exact computer algebra for truncated jet ideals of the fat point `x^p`,
//! together with the polyhedral side of the story: stable-set polytopes,
//! Ehrhart counting, and regular unimodular triangulations of grid rectangles.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals,
//! polytope data is integral, and the simplex solver runs over `BigRational`.

pub mod error;
pub mod graph;
pub mod groebner;
pub mod jets;
pub mod ord;
pub mod poly;
pub mod polytope;
pub mod simplex;
pub mod torder;
pub mod tri;
pub mod vars;

pub use error::Error;
pub use ord::{MonomialOrdering, OrderKind};
pub use poly::Polynomial;
pub use vars::{ExpVec, VarSpace};

/// Exact coefficient type used throughout the crate.
pub type Coef = num_rational::BigRational;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
