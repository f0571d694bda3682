//! Exact computations with Macaulay inverse systems of Artinian algebras of
//! low socle degree.
//!
//! The modules build on each other bottom-up: [`exactla`] does exact linear
//! algebra, [`apolar`] provides polynomials and the contraction action,
//! [`invsys`] computes Hilbert functions of inverse systems, [`qdecomp`] the
//! Q-decomposition of the associated graded ring, [`oseq`] the
//! combinatorics of O-sequences, [`construct`] explicit witness algebras and
//! [`gradcheck`] the obstruction to being canonically graded.

pub mod apolar;
pub mod construct;
pub mod error;
pub mod exactla;
pub mod gradcheck;
pub mod invsys;
pub mod oseq;
pub mod qdecomp;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Fp, Scalar};

/// Exact rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Polynomials over the rationals.
pub type Poly = apolar::Polynomial<Rational>;
/// Dense rational matrices.
pub type QMatrix = exactla::Matrix<Rational>;
/// Rational subspaces of a monomial frame.
pub type QSubspace = exactla::Subspace<Rational, apolar::Monomial>;
/// The prime field with 13 elements.
pub type F13 = Fp<13>;

/// Graded-admissible level sequences `(1,3,h2,h3,h4)`, `h4 >= 2`, shipped
/// with the crate.
pub const GRADED_LEVEL_DATA: &str = include_str!("../data/graded_level_h1_3_s4.txt");
