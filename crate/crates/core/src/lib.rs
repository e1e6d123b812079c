pub mod budget;
pub mod character;
pub mod derived;
pub mod document;
pub mod error;
pub mod hypergraph;
pub mod invariants;
pub mod orientation;
pub mod polynomials;
pub mod polytope;
pub mod setcomb;

pub use budget::Budget;
pub use character::Character;
pub use error::{Error, Result};
pub use hypergraph::{FormalSum, Hypergraph};
pub use orientation::Orientation;
pub use polynomials::{Rational, RationalPolynomial};
