//! Exact computation of the string topology coproduct and the
//! Goresky-Hingston product on the free loop spaces of complex and
//! quaternionic projective spaces.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is over the
//! rationals; nothing here touches floating point.
//!
//! Layout:
//!
//! * [`graded_ring`]: truncated graded-commutative algebras, Koszul signs,
//!   cup and cross products.
//! * [`duality`]: homology as the dual basis, cap products, Poincaré duality,
//!   Gysin maps and the diagonal pushforward.
//! * [`spaces`]: the concrete rings and maps attached to `KP^n`.
//! * [`string_topology`]: loop homology generators, the coproduct (closed
//!   form and the completing-manifold pipeline), the Goresky-Hingston
//!   product, and the verification sweeps.
#![no_std]

extern crate alloc;

pub mod duality;
mod error;
pub mod laws;
mod report;
pub mod graded_ring;
pub mod spaces;
pub mod string_topology;

pub use error::Error;
pub use report::Report;

/// Exact rational coefficient.
pub type Scalar = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Shorthand for an integer-valued [`Scalar`].
pub fn scalar(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

/// `a/b` as a [`Scalar`]. Panics if `b == 0`.
pub fn ratio(a: i64, b: i64) -> Scalar {
    Scalar::new(a.into(), b.into())
}
