//! Exact-arithmetic engine for the polynomial invariants of weight
//! multiplicity free representations of simple Lie algebras: Dynkin
//! polynomials, Lusztig q-analogues, jump polynomials, Poincaré series of
//! the g- and t-endomorphism algebras, and an explicit type-A model of the
//! Artinian commutant `(End V)^A`.
//!
//! No floating point is used anywhere.

pub mod budget;
pub mod charmult;
pub mod dynkin;
pub mod endalg_a;
pub mod error;
pub mod linalg;
pub mod qanalogues;
pub mod qpoly;
pub mod truncsym;
pub mod verify;
pub mod weightlat;

pub use budget::Budget;
pub use error::{Error, Result};
pub use qpoly::{GradedSeries, QPolynomial};
pub use weightlat::{RootSystem, TypeLetter, Weight};
