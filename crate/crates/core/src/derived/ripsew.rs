//! Simple graphs with the rip/sew coproduct: restricting to `W` takes the induced
//! subgraph, contracting `W` joins two remaining vertices whenever a path between
//! them runs through `W` only.

use std::fmt;

use num_traits::Zero;

use crate::budget::{Budget, StepCounter};
use crate::character::Character;
use crate::error::{Error, Result};
use crate::invariants::{chi_definition, SpeciesElement};
use crate::polynomials::{big_rat, sign, Rational};
use crate::setcomb::{enumerate_colorings, Decomposition, GroundSet, VertexSet};

use super::building::{BForest, BuildingSet};
use super::graph::Graph;
use super::Invariant;

#[derive(Clone, PartialEq, Eq)]
pub struct RipSewGraph {
    graph: Graph,
}

impl RipSewGraph {
    pub fn new(graph: Graph) -> Self {
        RipSewGraph { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ground(&self) -> &GroundSet {
        self.graph.ground()
    }

    fn neighbors(&self, v: usize) -> VertexSet {
        self.graph
            .edges()
            .iter()
            .filter(|e| e.contains(v))
            .fold(VertexSet::EMPTY, |a, &e| a | e)
            - VertexSet::singleton(v)
    }

    /// Vertices reachable from `start` by a path whose vertices after the first all lie in `through`.
    fn reach_through(&self, start: usize, through: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in (self.neighbors(v) & through).iter() {
                if !seen.contains(w) {
                    seen = seen | VertexSet::singleton(w);
                    frontier.push(w);
                }
            }
        }
        seen
    }

    /// The induced subgraph on `subset`.
    pub fn rip(&self, subset: VertexSet) -> Result<RipSewGraph> {
        Ok(RipSewGraph::new(self.graph.induced(subset)?))
    }

    /// The graph on the complement of `subset` joining `u` and `v` when some path
    /// from `u` to `v` has all its interior vertices in `subset`.
    pub fn sew(&self, subset: VertexSet) -> Result<RipSewGraph> {
        if !subset.is_subset(self.ground().mask()) {
            return Err(Error::validation("subset is not contained in the ground set"));
        }
        let rest = self.ground().mask() - subset;
        let mut edges = Vec::new();
        for u in rest.iter() {
            // neighbors of u, directly or through the sewn set
            let mut joined = self.neighbors(u) & rest;
            for w in (self.neighbors(u) & subset).iter() {
                let region = self.reach_through(w, subset);
                for x in region.iter() {
                    joined = joined | (self.neighbors(x) & rest);
                }
            }
            for v in (joined - VertexSet::singleton(u)).iter().filter(|&v| v > u) {
                edges.push(VertexSet::from_indices([u, v]));
            }
        }
        Ok(RipSewGraph::new(Graph::new(self.ground().sub(rest)?, edges)?))
    }

    /// Vertex sets of the connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within;
        while let Some(v) = left.min_index() {
            let comp = self.reach_through(v, within);
            out.push(comp);
            left = left - comp;
        }
        out.sort();
        out
    }

    fn union(parts: &[Graph], ground: &GroundSet) -> Graph {
        let edges = parts.iter().flat_map(|g| g.edges().iter().copied()).collect();
        Graph::new(ground.clone(), edges).expect("pieces are on disjoint vertex sets")
    }
}

impl fmt::Debug for RipSewGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.graph)
    }
}

impl SpeciesElement for RipSewGraph {
    fn ground(&self) -> &GroundSet {
        self.graph.ground()
    }
    /// Rip out the first part, sew through it, and continue with the rest.
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        if !d.ground().is_identical(self.ground()) {
            return Err(Error::validation("decomposition is over a different ground set"));
        }
        let mut pieces = Vec::new();
        let mut current = self.clone();
        for &part in d.parts() {
            pieces.push(current.rip(part)?.graph);
            current = current.sew(part)?;
        }
        Ok(RipSewGraph::new(RipSewGraph::union(&pieces, self.ground())))
    }
}

/// All vertex subsets inducing a connected subgraph.
pub fn tubes(g: &RipSewGraph) -> BuildingSet {
    let sets = g
        .ground()
        .mask()
        .nonempty_subsets()
        .filter(|&s| g.components_within(s).len() == 1)
        .collect();
    BuildingSet::new(g.ground().clone(), sets).expect("connected subsets form a building set")
}

/// Partitioning forests: in each component choose a root block, then recurse on the
/// components of what is left.
pub fn partitioning_forests(g: &RipSewGraph, budget: &Budget) -> Result<Vec<BForest>> {
    type Pairs = Vec<(VertexSet, Option<VertexSet>)>;
    let mut counter = StepCounter::new(budget.orientation_steps, "partitioning forest enumeration");

    fn trees(g: &RipSewGraph, within: VertexSet, counter: &mut StepCounter) -> Result<Vec<Pairs>> {
        let mut out = Vec::new();
        for root in within.nonempty_subsets() {
            counter.tick()?;
            let mut partial: Vec<Pairs> = vec![vec![(root, None)]];
            for comp in g.components_within(within - root) {
                let subtrees = trees(g, comp, counter)?;
                partial = partial
                    .iter()
                    .flat_map(|p| {
                        subtrees.iter().map(move |t| {
                            let mut q = p.clone();
                            q.extend(t.iter().map(|&(n, up)| (n, Some(up.unwrap_or(root)))));
                            q
                        })
                    })
                    .collect();
            }
            out.extend(partial);
        }
        Ok(out)
    }

    let mut forests: Vec<Pairs> = vec![Vec::new()];
    for comp in g.components_within(g.ground().mask()) {
        let options = trees(g, comp, &mut counter)?;
        forests = forests
            .iter()
            .flat_map(|f| {
                options.iter().map(move |t| {
                    let mut q = f.clone();
                    q.extend_from_slice(t);
                    q
                })
            })
            .collect();
    }
    let mut out = forests
        .iter()
        .map(|p| BForest::from_pairs(p))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `g_F`: repeatedly take each leaf block, keep the subgraph it induces, sew through
/// it and remove it from the forest.
pub fn ripped_sewed(g: &RipSewGraph, forest: &BForest) -> Result<Graph> {
    if forest.covered() != g.ground().mask() {
        return Err(Error::validation("forest does not cover the graph"));
    }
    let mut removed = vec![false; forest.nodes().len()];
    let mut current = g.clone();
    let mut pieces = Vec::new();
    while removed.iter().any(|r| !r) {
        let leaves: Vec<usize> = (0..forest.nodes().len())
            .filter(|&i| !removed[i] && forest.children(i).iter().all(|&c| removed[c]))
            .collect();
        for &leaf in &leaves {
            let block = forest.nodes()[leaf];
            pieces.push(current.rip(block)?.graph);
            current = current.sew(block)?;
        }
        for leaf in leaves {
            removed[leaf] = true;
        }
    }
    Ok(RipSewGraph::union(&pieces, g.ground()))
}

/// `Σ_F ζ(g_F)·#colorings(F, n)` over partitioning forests; negative `n` uses compatible
/// colorings with sign `(-1)^{cc(g_F)}`.
pub fn ripsew_chi(g: &RipSewGraph, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    let mut total = Rational::zero();
    for f in partitioning_forests(g, budget)? {
        let gf = ripped_sewed(g, &f)?;
        let z = zeta.evaluate(gf.as_hypergraph());
        if z.is_zero() {
            continue;
        }
        total += if n >= 0 {
            z * big_rat(f.coloring_count(n as u32, true))
        } else {
            sign(gf.as_hypergraph().cc()) * z * big_rat(f.coloring_count((-n) as u32, false))
        };
    }
    Ok(total)
}

/// Colorings in which two distinct vertices of the same color are never joined by a
/// path whose interior colors are all at most theirs.
pub fn higher_interior_colorings(g: &RipSewGraph, n: u32, budget: &Budget) -> Result<u64> {
    budget.check_colorings(n as u64, g.ground().len())?;
    let mut count = 0;
    for c in enumerate_colorings(g.ground(), n) {
        let ok = g.ground().mask().iter().all(|u| {
            let low = VertexSet::from_indices(g.ground().mask().iter().filter(|&w| c.color(w) <= c.color(u)));
            let region = g.reach_through(u, low);
            region.iter().all(|v| v == u || c.color(v) != c.color(u))
        });
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

impl Invariant for RipSewGraph {
    fn ground(&self) -> &GroundSet {
        self.graph.ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        ripsew_chi(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &RipSewGraph| zeta.evaluate(x.graph.as_hypergraph()), n, budget)
    }
}
