//! Building sets, B-forests and their bijection with acyclic orientations.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::budget::{Budget, StepCounter};
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::{chi_definition, SpeciesElement};
use crate::orientation::Orientation;
use crate::polynomials::{big_rat, sign, Rational};
use crate::setcomb::{Decomposition, GroundSet, VertexSet};

use super::simple::SimpleHypergraph;
use super::Invariant;

/// A family of connected sets containing every singleton and closed under the
/// union of two intersecting members.
#[derive(Clone, PartialEq, Eq)]
pub struct BuildingSet {
    sets: SimpleHypergraph,
}

impl BuildingSet {
    pub fn new(ground: GroundSet, sets: Vec<VertexSet>) -> Result<Self> {
        let sets = SimpleHypergraph::new(ground, sets)?;
        let present: BTreeSet<VertexSet> = sets.edges().iter().copied().collect();
        for v in sets.ground().mask().iter() {
            if !present.contains(&VertexSet::singleton(v)) {
                return Err(Error::validation(format!(
                    "building set is missing the singleton {{{}}}",
                    sets.ground().label(v)
                )));
            }
        }
        for &a in &present {
            for &b in &present {
                if a.intersects(b) && !present.contains(&(a | b)) {
                    return Err(Error::validation(format!(
                        "{} and {} intersect but their union is missing",
                        sets.ground().format_set(a),
                        sets.ground().format_set(b)
                    )));
                }
            }
        }
        Ok(BuildingSet { sets })
    }

    /// The smallest building set containing `generators`.
    pub fn closure(ground: GroundSet, generators: &[VertexSet]) -> Result<Self> {
        let mut sets: BTreeSet<VertexSet> = ground.mask().iter().map(VertexSet::singleton).collect();
        sets.extend(generators.iter().copied());
        loop {
            let current: Vec<VertexSet> = sets.iter().copied().collect();
            let before = sets.len();
            for &a in &current {
                for &b in &current {
                    if a.intersects(b) {
                        sets.insert(a | b);
                    }
                }
            }
            if sets.len() == before {
                break;
            }
        }
        BuildingSet::new(ground, sets.into_iter().collect())
    }

    pub fn ground(&self) -> &GroundSet {
        self.sets.ground()
    }

    pub fn sets(&self) -> &[VertexSet] {
        self.sets.edges()
    }

    pub fn as_simple_hypergraph(&self) -> &SimpleHypergraph {
        &self.sets
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        self.sets.as_hypergraph()
    }

    /// Maximal members inside `within`; they partition it.
    pub fn maximal_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let inside: Vec<VertexSet> = self.sets().iter().copied().filter(|s| s.is_subset(within)).collect();
        inside
            .iter()
            .copied()
            .filter(|&s| !inside.iter().any(|&t| t != s && s.is_subset(t)))
            .collect()
    }

    /// The connected components: the maximal members.
    pub fn components(&self) -> Vec<VertexSet> {
        self.maximal_within(self.ground().mask())
    }
}

impl fmt::Debug for BuildingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.sets)
    }
}

impl SpeciesElement for BuildingSet {
    fn ground(&self) -> &GroundSet {
        self.sets.ground()
    }
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        Ok(BuildingSet {
            sets: self.sets.mu_delta(d)?,
        })
    }
}

/// A rooted forest whose nodes are the blocks of a partition of the ground set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BForest {
    /// Sorted.
    nodes: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
}

impl BForest {
    /// Builds a forest from `(node, parent node)` pairs.
    pub fn from_pairs(pairs: &[(VertexSet, Option<VertexSet>)]) -> Result<Self> {
        let mut nodes: Vec<VertexSet> = pairs.iter().map(|p| p.0).collect();
        nodes.sort();
        if nodes.windows(2).any(|w| w[0].intersects(w[1])) || nodes.iter().any(|n| n.is_empty()) {
            return Err(Error::validation("forest nodes must be disjoint and nonempty"));
        }
        let index = |x: VertexSet| nodes.binary_search(&x).ok();
        let mut parent = vec![None; nodes.len()];
        for &(node, up) in pairs {
            if let Some(up) = up {
                let i = index(node).expect("node listed");
                parent[i] = Some(index(up).ok_or_else(|| Error::validation("parent is not a node"))?);
            }
        }
        let forest = BForest { nodes, parent };
        // every node must reach a root
        for start in 0..forest.nodes.len() {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = forest.parent[cur] {
                cur = p;
                steps += 1;
                if steps > forest.nodes.len() {
                    return Err(Error::validation("parent relation has a cycle"));
                }
            }
        }
        Ok(forest)
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.parent[i].is_none()).collect()
    }

    pub fn children(&self, node: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.parent[i] == Some(node)).collect()
    }

    pub fn depth(&self, node: usize) -> usize {
        let mut d = 0;
        let mut cur = node;
        while let Some(p) = self.parent[cur] {
            cur = p;
            d += 1;
        }
        d
    }

    /// `a` is `b` or below it.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        let mut cur = a;
        loop {
            if cur == b {
                return true;
            }
            match self.parent[cur] {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    /// `F_{≤p}`: the union of `p` and its descendants.
    pub fn down_set(&self, node: usize) -> VertexSet {
        (0..self.nodes.len())
            .filter(|&i| self.is_below(i, node))
            .fold(VertexSet::EMPTY, |a, i| a | self.nodes[i])
    }

    pub fn covered(&self) -> VertexSet {
        self.nodes.iter().fold(VertexSet::EMPTY, |a, &n| a | n)
    }

    pub fn pairs(&self) -> Vec<(VertexSet, Option<VertexSet>)> {
        (0..self.nodes.len())
            .map(|i| (self.nodes[i], self.parent[i].map(|p| self.nodes[p])))
            .collect()
    }

    /// Colorings constant on nodes and increasing towards the roots (strictly if `strict`).
    pub fn coloring_count(&self, n: u32, strict: bool) -> BigInt {
        let n = n as usize;
        // ways[node][c]: colorings of the subtree with the node colored c
        fn ways(forest: &BForest, node: usize, n: usize, strict: bool) -> Vec<BigInt> {
            let mut acc = vec![BigInt::one(); n];
            for child in forest.children(node) {
                let below = ways(forest, child, n, strict);
                let mut prefix = BigInt::zero();
                for c in 0..n {
                    if !strict {
                        prefix += &below[c];
                    }
                    acc[c] *= &prefix;
                    if strict {
                        prefix += &below[c];
                    }
                }
            }
            acc
        }
        self.roots()
            .into_iter()
            .map(|r| ways(self, r, n, strict).into_iter().sum::<BigInt>())
            .product()
    }
}

impl fmt::Debug for BForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nodes
            .iter()
            .zip(&self.parent)
            .map(|(n, p)| match p {
                Some(p) => format!("{:?}<{:?}", n, self.nodes[*p]),
                None => format!("{n:?}"),
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Checks the three defining conditions of a B-forest.
pub fn is_bforest(b: &BuildingSet, f: &BForest) -> bool {
    if f.covered() != b.ground().mask() {
        return false;
    }
    let members: BTreeSet<VertexSet> = b.sets().iter().copied().collect();
    let components = b.components();
    if !f.roots().iter().all(|&r| components.contains(&f.down_set(r))) {
        return false;
    }
    let downs: Vec<VertexSet> = (0..f.nodes.len()).map(|i| f.down_set(i)).collect();
    if !downs.iter().all(|d| members.contains(d)) {
        return false;
    }
    // antichains of size at least two
    let m = f.nodes.len();
    for choice in 0u64..(1u64 << m) {
        if choice.count_ones() < 2 {
            continue;
        }
        let picked: Vec<usize> = (0..m).filter(|i| choice >> i & 1 == 1).collect();
        let antichain = picked
            .iter()
            .all(|&i| picked.iter().all(|&j| i == j || (!f.is_below(i, j) && !f.is_below(j, i))));
        if antichain {
            let union = picked.iter().fold(VertexSet::EMPTY, |a, &i| a | downs[i]);
            if members.contains(&union) {
                return false;
            }
        }
    }
    true
}

type Pairs = Vec<(VertexSet, Option<VertexSet>)>;

/// All B-forests, built by choosing a root block in each connected set and
/// recursing on the maximal members avoiding it.
pub fn enumerate_bforests(b: &BuildingSet, budget: &Budget) -> Result<Vec<BForest>> {
    let mut counter = StepCounter::new(budget.orientation_steps, "B-forest enumeration");

    fn trees(b: &BuildingSet, within: VertexSet, counter: &mut StepCounter) -> Result<Vec<Pairs>> {
        let mut out = Vec::new();
        for root in within.nonempty_subsets() {
            counter.tick()?;
            let mut partial: Vec<Pairs> = vec![vec![(root, None)]];
            for child in b.maximal_within(within - root) {
                let subtrees = trees(b, child, counter)?;
                let mut next = Vec::with_capacity(partial.len() * subtrees.len());
                for p in &partial {
                    for t in &subtrees {
                        let mut q = p.clone();
                        q.extend(t.iter().map(|&(n, up)| (n, Some(up.unwrap_or(root)))));
                        next.push(q);
                    }
                }
                partial = next;
            }
            out.extend(partial);
        }
        Ok(out)
    }

    let mut forests: Vec<Pairs> = vec![Vec::new()];
    for component in b.components() {
        let options = trees(b, component, &mut counter)?;
        let mut next = Vec::with_capacity(forests.len() * options.len());
        for f in &forests {
            for t in &options {
                let mut q = f.clone();
                q.extend_from_slice(t);
                next.push(q);
            }
        }
        forests = next;
    }
    let mut out = forests
        .iter()
        .map(|p| BForest::from_pairs(p))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Each connected set is sent to its intersection with the highest node it meets.
pub fn forest_to_orientation(b: &BuildingSet, f: &BForest) -> Result<Orientation> {
    if !is_bforest(b, f) {
        return Err(Error::validation(format!("{f:?} is not a B-forest")));
    }
    let images = b
        .sets()
        .iter()
        .map(|&e| {
            let meeting: Vec<usize> = (0..f.nodes.len()).filter(|&i| f.nodes[i].intersects(e)).collect();
            let top = meeting
                .iter()
                .copied()
                .find(|&i| meeting.iter().all(|&j| f.is_below(j, i)))
                .ok_or_else(|| Error::disagreement("a connected set meets incomparable nodes only"))?;
            Ok(e & f.nodes[top])
        })
        .collect::<Result<Vec<_>>>()?;
    Orientation::new(b.as_hypergraph().clone(), images)
}

/// The root of each connected set is the image of that set; recurse below it.
pub fn orientation_to_forest(b: &BuildingSet, f: &Orientation) -> Result<BForest> {
    if f.host() != b.as_hypergraph() {
        return Err(Error::validation("orientation is over a different building set"));
    }
    if !f.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    let image_of = |set: VertexSet| -> VertexSet {
        let i = b.sets().iter().position(|&s| s == set).expect("maximal sets are members");
        f.images()[i]
    };
    let mut pairs: Pairs = Vec::new();
    let mut stack: Vec<(VertexSet, Option<VertexSet>)> = b.components().into_iter().map(|c| (c, None)).collect();
    while let Some((set, up)) = stack.pop() {
        let root = image_of(set);
        pairs.push((root, up));
        for child in b.maximal_within(set - root) {
            stack.push((child, Some(root)));
        }
    }
    BForest::from_pairs(&pairs)
}

/// `B ∩ F`: the orientation image of the building set, as a set.
pub fn induced_building_set(b: &BuildingSet, f: &BForest) -> Result<BuildingSet> {
    let image = forest_to_orientation(b, f)?.image_hypergraph().dedup();
    BuildingSet::new(image.ground().clone(), image.edges().to_vec())
}

/// `Σ_F ζ(B ∩ F)·#colorings(F, n)`; negative `n` uses compatible colorings with sign `(-1)^{cc(B ∩ F)}`.
pub fn bs_chi(b: &BuildingSet, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    let mut total = Rational::zero();
    for f in enumerate_bforests(b, budget)? {
        let induced = induced_building_set(b, &f)?;
        let z = zeta.evaluate(induced.as_hypergraph());
        if z.is_zero() {
            continue;
        }
        total += if n >= 0 {
            z * big_rat(f.coloring_count(n as u32, true))
        } else {
            sign(induced.components().len()) * z * big_rat(f.coloring_count((-n) as u32, false))
        };
    }
    Ok(total)
}

impl Invariant for BuildingSet {
    fn ground(&self) -> &GroundSet {
        self.sets.ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        bs_chi(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &BuildingSet| zeta.evaluate(x.as_hypergraph()), n, budget)
    }
}
