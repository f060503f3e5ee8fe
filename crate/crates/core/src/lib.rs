//! Exact decategorified calculus for category O of a finite-type semisimple
//! Lie algebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`weyl`]: Cartan data, fully enumerated Weyl groups, the dot-action,
//!   Bruhat order and parabolic cosets.
//! * [`hecke`]: Laurent polynomials, the Iwahori–Hecke algebra,
//!   R-polynomials and Kazhdan–Lusztig polynomials.
//! * [`coinv`]: the coinvariant algebra with its Schubert basis, Demazure
//!   operators, invariant subalgebras and Hilbert series.
//! * [`blocks`]: Grothendieck groups of integral blocks with translation,
//!   wall-crossing, projective-functor and tilting calculus.
//! * [`soergel`]: Bott–Samelson modules over the coinvariant algebra, exact
//!   Hom spaces and idempotent splitting.
//! * [`verify`]: the verification battery that ties everything together.
//!
//! All arithmetic is exact (machine integers for K-group matrices, arbitrary
//! precision rationals elsewhere).

pub mod blocks;
pub mod coinv;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod soergel;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;
