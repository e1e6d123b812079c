//! Simple hypergraphs: edge sets rather than multisets, so contraction merges
//! edges that become equal.

use std::fmt;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::{chi_definition, chi_orientation, SpeciesElement};
use crate::polynomials::Rational;
use crate::setcomb::{Decomposition, GroundSet, VertexSet};

use super::Invariant;

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleHypergraph {
    inner: Hypergraph,
}

impl SimpleHypergraph {
    /// Rejects repeated edges.
    pub fn new(ground: GroundSet, edges: Vec<VertexSet>) -> Result<Self> {
        let inner = Hypergraph::new(ground, edges)?;
        if inner.edges().windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation("a simple hypergraph cannot repeat an edge"));
        }
        Ok(SimpleHypergraph { inner })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[&[S]]) -> Result<Self> {
        let h = Hypergraph::from_labels(vertices, edges)?;
        SimpleHypergraph::new(h.ground().clone(), h.edges().to_vec())
    }

    /// The domain of a hypergraph: its edges as a set.
    pub fn domain(h: &Hypergraph) -> Self {
        SimpleHypergraph { inner: h.dedup() }
    }

    /// The same edges, viewed as a hypergraph.
    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.inner
    }

    pub fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    pub fn edges(&self) -> &[VertexSet] {
        self.inner.edges()
    }

    pub fn restrict(&self, subset: VertexSet) -> Result<Self> {
        Ok(SimpleHypergraph {
            inner: self.inner.restrict(subset)?,
        })
    }

    /// `{e ∖ W : e ⊄ W}` as a set.
    pub fn contract(&self, subset: VertexSet) -> Result<Self> {
        Ok(SimpleHypergraph::domain(&self.inner.contract(subset)?))
    }
}

impl fmt::Debug for SimpleHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner)
    }
}

impl SpeciesElement for SimpleHypergraph {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        Ok(SimpleHypergraph::domain(&self.inner.mu_delta(d)?))
    }
}

/// A character of simple hypergraphs, pulled back to hypergraphs along the domain map.
pub fn through_domain(zeta: &Character) -> Character {
    zeta.through(|h| h.dedup())
}

/// `Σ_f ζ(f(h))·#colorings` over acyclic orientations of `h` as a hypergraph,
/// with images compared as sets.
pub fn simple_chi(h: &SimpleHypergraph, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    chi_orientation(&h.inner, &through_domain(zeta), n, budget)
}

impl Invariant for SimpleHypergraph {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        simple_chi(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &SimpleHypergraph| zeta.evaluate(&x.inner), n, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::rat;

    fn shg(vertices: &[&str], edges: &[&[&str]]) -> SimpleHypergraph {
        SimpleHypergraph::from_labels(vertices, edges).unwrap()
    }

    #[test]
    fn contraction_merges_edges() {
        let h = shg(&["1", "2", "3"], &[&["1", "2"], &["1", "3"]]);
        let w = h.ground().subset(&["2", "3"]).unwrap();
        let c = h.contract(w).unwrap();
        assert_eq!(c.edges().len(), 1);
        assert_eq!(c.ground().labels_of(c.edges()[0]), vec!["1"]);
        assert_eq!(h.as_hypergraph().contract(w).unwrap().edges().len(), 2);
    }

    #[test]
    fn rejects_repeated_edges() {
        assert!(SimpleHypergraph::from_labels(&["1", "2"], &[&["1", "2"], &["1", "2"]]).is_err());
    }

    #[test]
    fn path_at_two_colors() {
        let b = Budget::default();
        let h = shg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        assert_eq!(simple_chi(&h, &Character::zeta1(), 2, &b).unwrap(), rat(2));
    }

    #[test]
    fn formula_matches_definition() {
        let b = Budget::default();
        let cases = [
            shg(&["1", "2", "3"], &[&["1", "2", "3"], &["1", "2"], &["2", "3"]]),
            shg(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"], &["1", "4"]]),
            shg(&["1", "2", "3"], &[&["1"], &["1", "2", "3"]]),
        ];
        for h in &cases {
            for z in Character::registry() {
                assert_eq!(h.chi_formula(&z, 1, &b).unwrap(), z.evaluate(h.as_hypergraph()));
                for n in 0..=3 {
                    assert_eq!(
                        h.chi_formula(&z, n, &b).unwrap(),
                        h.chi_by_definition(&z, n as u32, &b).unwrap(),
                        "{h:?} {} n={n}",
                        z.name()
                    );
                }
            }
        }
    }

    #[test]
    fn repeated_images_counted_once() {
        // the 3-edge and one of its 2-subsets can both be sent to {2,3}
        let b = Budget::default();
        let h = shg(&["1", "2", "3"], &[&["1", "2", "3"], &["2", "3"]]);
        let z = Character::zeta_graphic();
        for n in 0..=3 {
            assert_eq!(
                h.chi_formula(&z, n, &b).unwrap(),
                h.chi_by_definition(&z, n as u32, &b).unwrap()
            );
        }
    }
}
