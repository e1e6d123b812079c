//! Hopf monoids built on top of hypergraphs: simple hypergraphs, graphs with the
//! restriction/contraction structure, simplicial complexes, building sets, graphs
//! under ripping and sewing, set partitions and sets of paths.
//!
//! Every type evaluates registry characters by mapping into hypergraphs, and
//! exposes two independent routes to its invariant through [`Invariant`].

pub mod building;
pub mod complex;
pub mod graph;
pub mod partition;
pub mod paths;
pub mod ripsew;
pub mod simple;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::{chi_oracle, chi_orientation};
use crate::polynomials::{lagrange_interpolate, Rational, RationalPolynomial};
use crate::polytope::HypergraphicPolytope;
use crate::setcomb::GroundSet;

pub use building::{BForest, BuildingSet};
pub use complex::SimplicialComplex;
pub use graph::{Graph, PartialOrientation};
pub use paths::PathFamily;
pub use ripsew::RipSewGraph;
pub use simple::SimpleHypergraph;

/// The polynomial invariant of an object, by a structural expansion and by definition.
pub trait Invariant {
    fn ground(&self) -> &GroundSet;

    /// `χ(n)` from the object's orientation-like expansion; negative `n` uses
    /// compatible colorings.
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational>;

    /// `χ(n)` by summing over all colorings.
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational>;
}

impl Invariant for Hypergraph {
    fn ground(&self) -> &GroundSet {
        Hypergraph::ground(self)
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        chi_orientation(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_oracle(self, zeta, n, budget)
    }
}

impl Invariant for HypergraphicPolytope {
    fn ground(&self) -> &GroundSet {
        self.generator().ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        self.chi(zeta, n, budget)
    }
    /// The polytope monoid pulls back to hypergraphs, so the generator's definition applies.
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_oracle(self.generator(), zeta, n, budget)
    }
}

/// Interpolates `n ↦ χ(n)` from the formula at `n = 0..=|V|`.
pub fn formula_polynomial<T: Invariant + ?Sized>(x: &T, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    let k = x.ground().len() as i64;
    let points = (0..=k)
        .map(|n| Ok((n, x.chi_formula(zeta, n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&points)
}

/// Interpolates `n ↦ χ(-n)` from the compatible-coloring side of the formula.
pub fn formula_reciprocal<T: Invariant + ?Sized>(x: &T, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    let k = x.ground().len() as i64;
    let points = (0..=k)
        .map(|n| Ok((n, x.chi_formula(zeta, -n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&points)
}

/// Interpolates the definition at `n = 0..=|V|`.
pub fn definition_polynomial<T: Invariant + ?Sized>(x: &T, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    let k = x.ground().len() as u32;
    let points = (0..=k)
        .map(|n| Ok((n as i64, x.chi_by_definition(zeta, n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&points)
}

/// Polynomial from the formula, checked against reciprocity on both sides.
pub fn checked_polynomial<T: Invariant + ?Sized>(x: &T, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    let p = formula_polynomial(x, zeta, budget)?;
    let r = formula_reciprocal(x, zeta, budget)?;
    if r != p.reflect() {
        return Err(Error::disagreement(format!(
            "compatible colorings give χ(-n) = {r}, the polynomial gives {}",
            p.reflect()
        )));
    }
    Ok(p)
}
