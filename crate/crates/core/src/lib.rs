//! Exact computer algebra for divided powers of polynomial algebras: the
//! symmetric-tensor model of Gamma^n_A F, the ideal of norms and its
//! discriminant comparison, the Grothendieck-Deligne norm of explicit
//! rank-n quotients, and the chart calculus of the good component of the
//! Hilbert scheme of points.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! or rationals, or residues in a prime field; no floating point appears
//! anywhere. Core types are generic over the coefficient ring through the
//! [`ring::Ring`] object trait; the aliases below fix the concrete scalars
//! used by the command-line surface.

pub mod algebra;
pub mod chart;
pub mod divided;
pub mod error;
pub mod json;
pub mod matrix;
pub mod norm;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{BaseRing, Integers, PrimeField, Rationals, Ring};

/// Polynomials over the rationals, the workhorse scalar of the test
/// catalogs.
pub type QPolyRing = poly::PolyRing<Rationals>;
pub type QPoly = poly::Poly<Rationals>;
pub type QSymTensor = tensor::SymTensor<Rationals>;
pub type QTensor = tensor::TensorElem<Rationals>;

/// Polynomials over the integers.
pub type ZPolyRing = poly::PolyRing<Integers>;
pub type ZPoly = poly::Poly<Integers>;
pub type ZSymTensor = tensor::SymTensor<Integers>;

/// Polynomials over a prime field Z/p.
pub type FpPolyRing = poly::PolyRing<PrimeField>;
pub type FpPoly = poly::Poly<PrimeField>;
pub type FpSymTensor = tensor::SymTensor<PrimeField>;

/// Univariate polynomial rings over Q, e.g. Q[s], used as base rings of
/// finite algebras with polynomial parameters.
pub type QParamRing = poly::PolyRing<Rationals>;
