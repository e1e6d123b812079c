//! Simple graphs with the hypergraph coproduct (edges that lose a vertex are
//! dropped), partial orientations and flats.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::{chi_definition, chi_orientation, chi_polynomial, InvariantResult, SpeciesElement};
use crate::orientation::{enumerate_acyclic, Orientation};
use crate::polynomials::{Rational, RationalPolynomial};
use crate::setcomb::{set_partitions_of, Decomposition, GroundSet, VertexSet};

use super::Invariant;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    inner: Hypergraph,
}

impl Graph {
    pub fn new(ground: GroundSet, edges: Vec<VertexSet>) -> Result<Self> {
        if edges.iter().any(|e| e.len() != 2) {
            return Err(Error::validation("graph edges must have exactly two vertices"));
        }
        let inner = Hypergraph::new(ground, edges)?;
        if inner.edges().windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation("a simple graph cannot repeat an edge"));
        }
        Ok(Graph { inner })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[&[S]]) -> Result<Self> {
        let h = Hypergraph::from_labels(vertices, edges)?;
        Graph::new(h.ground().clone(), h.edges().to_vec())
    }

    /// The complete graph on `1..=k`.
    pub fn complete(k: usize) -> Self {
        let ground = GroundSet::numbered(k);
        let edges = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| VertexSet::from_indices([i, j])))
            .collect();
        Graph::new(ground, edges).expect("complete graph is simple")
    }

    /// Keeps only the edges of size 2.
    pub fn from_hypergraph_lossy(h: &Hypergraph) -> Self {
        Graph {
            inner: drop_singletons(h).dedup(),
        }
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.inner
    }

    pub fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    pub fn edges(&self) -> &[VertexSet] {
        self.inner.edges()
    }

    /// Induced subgraph on `subset`.
    pub fn induced(&self, subset: VertexSet) -> Result<Graph> {
        Ok(Graph {
            inner: self.inner.restrict(subset)?,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner)
    }
}

pub(crate) fn drop_singletons(h: &Hypergraph) -> Hypergraph {
    h.with_edges(h.edges().iter().copied().filter(|e| e.len() > 1).collect())
}

impl SpeciesElement for Graph {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }
    /// `g|_{D_1} ⊔ … ⊔ g|_{D_k}`
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        Ok(Graph {
            inner: drop_singletons(&self.inner.mu_delta(d)?),
        })
    }
}

/// A discrete orientation of a subgraph: some edges get a head, the rest stay undirected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    host: Graph,
    /// Edge index to head vertex index.
    directed: BTreeMap<usize, usize>,
}

impl PartialOrientation {
    pub fn new(host: Graph, directed: BTreeMap<usize, usize>) -> Result<Self> {
        for (&e, &head) in &directed {
            let edge = host
                .edges()
                .get(e)
                .ok_or_else(|| Error::validation("directed edge index out of range"))?;
            if !edge.contains(head) {
                return Err(Error::validation("a head must be an endpoint of its edge"));
            }
        }
        Ok(PartialOrientation { host, directed })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn directed(&self) -> &BTreeMap<usize, usize> {
        &self.directed
    }

    /// The admissible orientation sending undirected edges to themselves.
    pub fn to_admissible(&self) -> Orientation {
        let images = self
            .host
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &e)| self.directed.get(&i).map_or(e, |&v| VertexSet::singleton(v)))
            .collect();
        Orientation::new(self.host.inner.clone(), images).expect("heads lie in their edges")
    }

    pub fn from_admissible(host: &Graph, f: &Orientation) -> Result<Self> {
        if f.host() != host.as_hypergraph() {
            return Err(Error::validation("orientation is over a different graph"));
        }
        let directed = f
            .images()
            .iter()
            .enumerate()
            .filter(|(_, img)| img.len() == 1)
            .map(|(i, img)| (i, img.min_index().expect("nonempty image")))
            .collect();
        Ok(PartialOrientation {
            host: host.clone(),
            directed,
        })
    }

    pub fn is_acyclic(&self) -> bool {
        self.to_admissible().is_acyclic()
    }

    /// `f(g)`: the undirected edges.
    pub fn undirected(&self) -> Graph {
        let edges = self
            .host
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.directed.contains_key(i))
            .map(|(_, &e)| e)
            .collect();
        Graph {
            inner: self.host.inner.with_edges(edges),
        }
    }
}

/// A graph character seen as a hypergraph character: singleton edges are forgotten.
pub fn through_graphs(zeta: &Character) -> Character {
    zeta.through(drop_singletons)
}

#[derive(Clone, Debug)]
pub struct PartialOrientationTerm {
    pub orientation: PartialOrientation,
    /// The undirected part, which is also the flat of this term.
    pub flat: Graph,
    pub zeta_value: Rational,
    pub contribution: RationalPolynomial,
    pub reciprocal_contribution: RationalPolynomial,
}

#[derive(Clone, Debug)]
pub struct GraphInvariant {
    pub result: InvariantResult,
    pub terms: Vec<PartialOrientationTerm>,
}

/// The invariant with its breakdown over acyclic partial orientations.
pub fn graph_chi(g: &Graph, zeta: &Character, budget: &Budget) -> Result<GraphInvariant> {
    let result = chi_polynomial(&g.inner, &through_graphs(zeta), budget)?;
    let terms = result
        .breakdown
        .iter()
        .map(|t| {
            let orientation = PartialOrientation::from_admissible(g, &t.orientation)?;
            Ok(PartialOrientationTerm {
                flat: orientation.undirected(),
                orientation,
                zeta_value: t.zeta_value.clone(),
                contribution: t.contribution.clone(),
                reciprocal_contribution: t.reciprocal_contribution.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GraphInvariant { result, terms })
}

pub fn graph_chi_at(g: &Graph, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    chi_orientation(&g.inner, &through_graphs(zeta), n, budget)
}

impl Invariant for Graph {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        graph_chi_at(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &Graph| zeta.evaluate(&x.inner), n, budget)
    }
}

/// The distinct subgraphs `μ_D Δ_D(g)`, one per set partition of the vertices up to repeats.
pub fn flats(g: &Graph) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for blocks in set_partitions_of(g.ground().mask()) {
        let edges: Vec<VertexSet> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| blocks.iter().any(|b| e.is_subset(*b)))
            .collect();
        if seen.insert(edges.clone()) {
            out.push(Graph {
                inner: g.inner.with_edges(edges),
            });
        }
    }
    out
}

/// `g/F`: edges of `F` deleted and each component of `F` merged into one vertex.
/// Parallel edges are kept.
pub fn quotient(g: &Graph, flat: &Graph) -> Result<Hypergraph> {
    let classes = flat.inner.component_masks();
    let labels: Vec<String> = classes.iter().map(|&c| g.ground().format_set(c)).collect();
    let ground = GroundSet::new(labels)?;
    let class_of = |v: usize| classes.iter().position(|c| c.contains(v)).expect("classes cover");
    let mut edges = Vec::new();
    for &e in g.edges() {
        if flat.edges().contains(&e) {
            continue;
        }
        let ends: Vec<usize> = e.iter().map(class_of).collect();
        if ends[0] == ends[1] {
            return Err(Error::validation("not a flat: an edge outside it joins one of its components"));
        }
        edges.push(VertexSet::from_indices(ends));
    }
    Hypergraph::new(ground, edges)
}

/// Discrete acyclic orientations of `g/F`.
pub fn quotient_orientation_count(g: &Graph, flat: &Graph, budget: &Budget) -> Result<usize> {
    let q = quotient(g, flat)?;
    Ok(enumerate_acyclic(&q, budget)?.iter().filter(|f| f.is_discrete()).count())
}

/// The chromatic polynomial by deletion and contraction.
pub fn deletion_contraction_chromatic(g: &Graph) -> RationalPolynomial {
    let k = g.ground().len();
    let position = |v: usize| g.ground().position(v);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let ends: Vec<usize> = e.iter().map(position).collect();
            (ends[0], ends[1])
        })
        .collect();
    chromatic_rec(k, edges)
}

fn chromatic_rec(vertices: usize, mut edges: Vec<(usize, usize)>) -> RationalPolynomial {
    let Some((u, v)) = edges.pop() else {
        return RationalPolynomial::monomial(vertices);
    };
    let deleted = chromatic_rec(vertices, edges.clone());
    // merge v into u, then renumber so vertices stay 0..vertices-1
    let rename = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut merged: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (rename(a), rename(b));
            (a.min(b), a.max(b))
        })
        .collect();
    if merged.iter().any(|&(a, b)| a == b) {
        return deleted;
    }
    merged.sort();
    merged.dedup();
    let contracted = chromatic_rec(vertices - 1, merged);
    &deleted - &contracted
}

/// Proper colorings with `[n]`, by enumeration.
pub fn proper_coloring_count(g: &Graph, n: u32, budget: &Budget) -> Result<Rational> {
    budget.check_colorings(n as u64, g.ground().len())?;
    let mut total = Rational::zero();
    for c in crate::setcomb::enumerate_colorings(g.ground(), n) {
        if g.edges().iter().all(|e| {
            let ends: Vec<usize> = e.iter().collect();
            c.color(ends[0]) != c.color(ends[1])
        }) {
            total += Rational::from_integer(1.into());
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::rat;

    fn gr(vertices: &[&str], edges: &[&[&str]]) -> Graph {
        Graph::from_labels(vertices, edges).unwrap()
    }

    fn triangle() -> Graph {
        Graph::complete(3)
    }

    #[test]
    fn chromatic_recursion() {
        assert_eq!(deletion_contraction_chromatic(&gr(&["a", "b", "c"], &[])), RationalPolynomial::monomial(3));
        assert_eq!(
            deletion_contraction_chromatic(&gr(&["a", "b"], &[&["a", "b"]])),
            RationalPolynomial::from_ints(&[0, -1, 1])
        );
        assert_eq!(deletion_contraction_chromatic(&triangle()), RationalPolynomial::from_ints(&[0, 2, -3, 1]));
        let b = Budget::default();
        let k4 = Graph::complete(4);
        let p = deletion_contraction_chromatic(&k4);
        for n in 0..=4 {
            assert_eq!(p.eval_int(n as i64), proper_coloring_count(&k4, n, &b).unwrap());
        }
    }

    #[test]
    fn triangle_invariant() {
        let b = Budget::default();
        let inv = graph_chi(&triangle(), &Character::zeta1(), &b).unwrap();
        assert_eq!(inv.result.polynomial, RationalPolynomial::from_ints(&[0, 2, -3, 1]));
        assert_eq!(inv.result.polynomial.eval_int(-1), rat(-6));
        // discrete acyclic partial orientations of K3
        assert_eq!(inv.terms.len(), 6);
        assert!(inv.terms.iter().all(|t| t.flat.edges().is_empty()));
    }

    #[test]
    fn single_edge() {
        let b = Budget::default();
        let g = gr(&["a", "b"], &[&["a", "b"]]);
        let inv = graph_chi(&g, &Character::zeta1(), &b).unwrap();
        assert_eq!(inv.result.polynomial, RationalPolynomial::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn kappa_round_trip() {
        let b = Budget::default();
        let g = gr(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "c"]]);
        let all = crate::orientation::enumerate_admissible(g.as_hypergraph(), &b).unwrap();
        assert_eq!(all.len(), 3usize.pow(4));
        for f in &all {
            let p = PartialOrientation::from_admissible(&g, f).unwrap();
            assert_eq!(&p.to_admissible(), f);
            assert_eq!(p.is_acyclic(), f.is_acyclic());
        }
    }

    #[test]
    fn flats_pair_with_quotient_orientations() {
        let b = Budget::default();
        let cases = [
            triangle(),
            gr(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]),
            gr(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "c"]]),
            Graph::complete(4),
        ];
        for g in &cases {
            let acyclic = enumerate_acyclic(g.as_hypergraph(), &b).unwrap().len();
            let paired: usize = flats(g)
                .iter()
                .map(|f| quotient_orientation_count(g, f, &b).unwrap())
                .sum();
            assert_eq!(paired, acyclic, "{g:?}");
        }
        // the undirected parts of acyclic partial orientations are exactly the flats
        let g = &cases[2];
        let mut from_orientations: Vec<Vec<VertexSet>> = enumerate_acyclic(g.as_hypergraph(), &b)
            .unwrap()
            .iter()
            .map(|f| PartialOrientation::from_admissible(g, f).unwrap().undirected().edges().to_vec())
            .collect();
        from_orientations.sort();
        from_orientations.dedup();
        let mut all_flats: Vec<Vec<VertexSet>> = flats(g).iter().map(|f| f.edges().to_vec()).collect();
        all_flats.sort();
        assert_eq!(from_orientations, all_flats);
    }

    #[test]
    fn matches_chromatic_and_definition() {
        let b = Budget::default();
        let g = gr(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "c"]]);
        let inv = graph_chi(&g, &Character::zeta1(), &b).unwrap();
        assert_eq!(inv.result.polynomial, deletion_contraction_chromatic(&g));
        for z in Character::registry() {
            for n in 0..=3 {
                assert_eq!(g.chi_formula(&z, n, &b).unwrap(), g.chi_by_definition(&z, n as u32, &b).unwrap());
            }
        }
    }
}
