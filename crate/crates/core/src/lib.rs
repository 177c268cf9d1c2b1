//! Exact arithmetic for dominant alcoves of the affine Weyl group, abelian
//! ideals of a Borel subalgebra and powers of the Euler product.
//!
//! The modules build on each other bottom-up:
//!
//! * [`rootsys`]: Cartan data, inner products, Weyl dimensions, Casimir values.
//! * [`alcove`]: dominant alcoves, their weights `lambda^sigma`, and the sign
//!   of a character at the element of type rho.
//! * [`ideals`]: abelian ideals and their matching alcoves.
//! * [`series`]: integer power series, the alcove sum, `f_k(s)` polynomials.
//! * [`wedge`]: exterior-algebra oracles for small Lie algebras.
//! * [`typea`]: partitions, beta-numbers and m-cores.

pub mod alcove;
pub mod error;
pub mod ideals;
pub mod limits;
pub mod linalg;
pub mod rootsys;
pub mod series;
pub mod typea;
pub mod wedge;


pub use alcove::{AffineElement, CartanPoint};
pub use error::{Error, Result};
pub use ideals::AbelianIdeal;
pub use limits::Limits;
pub use rootsys::{build_root_system, CartanType, Family, RootSystem, Weight};
pub use series::{IntSeries, RatPoly};
pub use typea::Partition;

/// Exact rationals used throughout.
pub type Q = num_rational::BigRational;

pub(crate) fn q_int(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub(crate) fn q_frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
