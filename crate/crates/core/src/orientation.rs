//! Orientations of hypergraphs: each edge `e` sends to a nonempty head `f(e) ⊆ e`.
//!
//! Between two edge instances there is a *strict* arc `e → e'` when
//! `f(e) ∩ (e' ∖ f(e')) ≠ ∅` and a *weak* arc when `∅ ⊊ f(e) ∩ e' ⊊ f(e')`.
//! An orientation is acyclic when no directed cycle of the combined digraph uses a
//! strict arc.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use crate::budget::{Budget, StepCounter};
use crate::error::{Error, Result};
use crate::hypergraph::{FormalSum, Hypergraph};
use crate::polynomials::{nested_power_sum, nested_power_sum_poly, Rational, RationalPolynomial};
use crate::setcomb::{enumerate_colorings, fubini, Coloring, VertexSet};

/// An orientation; `images[i]` is the head of the `i`-th edge of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    host: Hypergraph,
    images: Vec<VertexSet>,
}

/// Arcs between edge instances, as index pairs into the host's edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintDigraph {
    pub nodes: usize,
    pub strict: Vec<(usize, usize)>,
    pub weak: Vec<(usize, usize)>,
}

impl ConstraintDigraph {
    fn from_images(edges: &[VertexSet], images: &[VertexSet]) -> Self {
        let m = images.len();
        let mut g = ConstraintDigraph {
            nodes: m,
            ..Default::default()
        };
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let tail = edges[j] - images[j];
                if images[i].intersects(tail) {
                    g.strict.push((i, j));
                }
                let meet = images[i] & edges[j];
                if !meet.is_empty() && meet != images[j] && meet.is_subset(images[j]) {
                    g.weak.push((i, j));
                }
            }
        }
        g
    }

    /// No strict arc lies on a directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b) in self.strict.iter().chain(&self.weak) {
            adj[a].push(b);
        }
        let reach = |from: usize| -> Vec<bool> {
            let mut seen = vec![false; self.nodes];
            let mut stack = vec![from];
            seen[from] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        };
        let mut cache: HashMap<usize, Vec<bool>> = HashMap::new();
        self.strict
            .iter()
            .all(|&(a, b)| !cache.entry(b).or_insert_with(|| reach(b))[a])
    }
}

impl Orientation {
    pub fn new(host: Hypergraph, images: Vec<VertexSet>) -> Result<Self> {
        if images.len() != host.edges().len() {
            return Err(Error::validation("orientation needs one image per edge"));
        }
        for (&e, &f) in host.edges().iter().zip(&images) {
            if f.is_empty() || !f.is_subset(e) {
                return Err(Error::validation("an image must be a nonempty subset of its edge"));
            }
        }
        Ok(Orientation { host, images })
    }

    /// Every edge sent to itself.
    pub fn full(host: &Hypergraph) -> Orientation {
        Orientation {
            images: host.edges().to_vec(),
            host: host.clone(),
        }
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn images(&self) -> &[VertexSet] {
        &self.images
    }

    /// All images are single vertices.
    pub fn is_discrete(&self) -> bool {
        self.images.iter().all(|f| f.len() == 1)
    }

    /// `f(h)` on the host's ground set.
    pub fn image_hypergraph(&self) -> Hypergraph {
        self.host.with_edges(self.images.clone())
    }

    pub fn constraint_digraph(&self) -> ConstraintDigraph {
        ConstraintDigraph::from_images(self.host.edges(), &self.images)
    }

    pub fn is_acyclic(&self) -> bool {
        self.constraint_digraph().is_acyclic()
    }

    /// Is `c` strictly compatible: `f(e)` is exactly the set of max-color vertices of `e`.
    pub fn is_strictly_compatible(&self, c: &Coloring) -> bool {
        self.host
            .edges()
            .iter()
            .zip(&self.images)
            .all(|(&e, &f)| c.maximal_vertices(e) == f)
    }

    /// Is `c` compatible: every vertex of `f(e)` has the max color of `e`.
    pub fn is_compatible(&self, c: &Coloring) -> bool {
        self.host
            .edges()
            .iter()
            .zip(&self.images)
            .all(|(&e, &f)| f.is_subset(c.maximal_vertices(e)))
    }

    fn require_acyclic(&self) -> Result<()> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::CyclicOrientation)
        }
    }

    /// Strictly compatible colorings with `[n]`, by enumeration.
    pub fn count_strict_colorings(&self, n: u32, budget: &Budget) -> Result<u64> {
        self.require_acyclic()?;
        budget.check_colorings(n as u64, self.host.vertex_count())?;
        Ok(enumerate_colorings(self.host.ground(), n)
            .filter(|c| self.is_strictly_compatible(c))
            .count() as u64)
    }

    /// Compatible colorings with `[n]`, by enumeration.
    pub fn count_compatible_colorings(&self, n: u32, budget: &Budget) -> Result<u64> {
        self.require_acyclic()?;
        budget.check_colorings(n as u64, self.host.vertex_count())?;
        Ok(enumerate_colorings(self.host.ground(), n)
            .filter(|c| self.is_compatible(c))
            .count() as u64)
    }

    /// Exponent data for the power-sum expressions of the coloring counts.
    pub fn coloring_profile(&self, budget: &Budget) -> Result<ColoringProfile> {
        self.require_acyclic()?;
        ColoringProfile::build(self, budget)
    }
}

/// `f(e)` = the max-color vertices of `e`. Always acyclic.
pub fn max_orientation(h: &Hypergraph, c: &Coloring) -> Result<Orientation> {
    if !c.ground().is_identical(h.ground()) {
        return Err(Error::validation("coloring is over a different ground set"));
    }
    let images = h.edges().iter().map(|&e| c.maximal_vertices(e)).collect();
    Ok(Orientation {
        host: h.clone(),
        images,
    })
}

/// All admissible orientations, ignoring acyclicity.
pub fn enumerate_admissible(h: &Hypergraph, budget: &Budget) -> Result<Vec<Orientation>> {
    search(h, budget, false)
}

/// All acyclic orientations, in lexicographic order of image lists.
///
/// The search assigns heads edge by edge and abandons a branch as soon as the
/// already-assigned edges carry a forbidden cycle, since arcs between two edges
/// depend only on those two edges.
pub fn enumerate_acyclic(h: &Hypergraph, budget: &Budget) -> Result<Vec<Orientation>> {
    search(h, budget, true)
}

fn search(h: &Hypergraph, budget: &Budget, acyclic_only: bool) -> Result<Vec<Orientation>> {
    let edges = h.edges();
    let mut counter = StepCounter::new(budget.orientation_steps, "orientation enumeration");
    let mut out = Vec::new();
    let mut images: Vec<VertexSet> = Vec::with_capacity(edges.len());

    fn rec(
        edges: &[VertexSet],
        images: &mut Vec<VertexSet>,
        acyclic_only: bool,
        counter: &mut StepCounter,
        out: &mut Vec<Vec<VertexSet>>,
    ) -> Result<()> {
        counter.tick()?;
        let k = images.len();
        if k == edges.len() {
            out.push(images.clone());
            return Ok(());
        }
        for head in edges[k].nonempty_subsets() {
            // parallel edges with different heads always form a strict 2-cycle
            if acyclic_only && k > 0 && edges[k - 1] == edges[k] && images[k - 1] != head {
                continue;
            }
            images.push(head);
            let ok = !acyclic_only || ConstraintDigraph::from_images(&edges[..=k], images).is_acyclic();
            if ok {
                rec(edges, images, acyclic_only, counter, out)?;
            }
            images.pop();
        }
        Ok(())
    }

    let mut raw = Vec::new();
    rec(edges, &mut images, acyclic_only, &mut counter, &mut raw)?;
    raw.sort();
    for images in raw {
        out.push(Orientation {
            host: h.clone(),
            images,
        });
    }
    Ok(out)
}

/// The compositions of image classes that index the power-sum expression of the
/// coloring counts of an acyclic orientation.
///
/// Images are grouped into the connected components of the image hypergraph (images
/// sharing a vertex must get the same color). For a composition `P` of these groups,
/// the exponent `p_i` counts the vertices outside every image that lie in a source
/// edge of a group in `P_i` and in no source edge of an earlier block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringProfile {
    /// Vertices of the host lying in no edge.
    pub isolated: usize,
    /// Exponent sequences for strictly compatible colorings.
    pub strict: Vec<Vec<u32>>,
    /// Exponent sequences for compatible colorings.
    pub weak: Vec<Vec<u32>>,
}

impl ColoringProfile {
    fn build(f: &Orientation, budget: &Budget) -> Result<ColoringProfile> {
        let host = f.host();
        let edges = host.edges();
        let images = f.images();

        // groups of images connected through shared vertices
        let mut group_masks: Vec<VertexSet> = Vec::new();
        for &img in images {
            let mut merged = img;
            group_masks.retain(|&g| {
                if g.intersects(img) {
                    merged = merged | g;
                    false
                } else {
                    true
                }
            });
            group_masks.push(merged);
        }
        group_masks.sort();
        let group_of = |img: VertexSet| -> usize {
            group_masks
                .iter()
                .position(|g| g.intersects(img))
                .expect("every image is in a group")
        };
        let r = group_masks.len();
        let edge_group: Vec<usize> = images.iter().map(|&img| group_of(img)).collect();

        // strict arcs between images that do not meet
        let mut before: Vec<(usize, usize)> = Vec::new();
        let mut same_group_strict = false;
        for i in 0..edges.len() {
            for j in 0..edges.len() {
                if i == j || images[i].intersects(images[j]) {
                    continue;
                }
                if images[i].intersects(edges[j] - images[j]) {
                    let (a, b) = (edge_group[i], edge_group[j]);
                    if a == b {
                        same_group_strict = true;
                    }
                    before.push((a, b));
                }
            }
        }
        before.sort();
        before.dedup();

        let covered = images.iter().fold(VertexSet::EMPTY, |a, &x| a | x);
        let in_edges = edges.iter().fold(VertexSet::EMPTY, |a, &x| a | x);
        let free = in_edges - covered;
        let mut group_reach = vec![VertexSet::EMPTY; r];
        for (e, &g) in edges.iter().zip(&edge_group) {
            group_reach[g] = group_reach[g] | (*e & free);
        }

        budget.check_compositions(u64::try_from(fubini(r)).unwrap_or(u64::MAX))?;
        let mut strict = Vec::new();
        let mut weak = Vec::new();
        let mut block_of = vec![usize::MAX; r];
        let all = VertexSet::prefix(r);
        let mut blocks: Vec<VertexSet> = Vec::new();
        crate::setcomb::for_each_composition(all, &mut blocks, &mut |parts| {
            for (b, part) in parts.iter().enumerate() {
                for g in part.iter() {
                    block_of[g] = b;
                }
            }
            let exps = || -> Vec<u32> {
                let mut seen = VertexSet::EMPTY;
                parts
                    .iter()
                    .map(|part| {
                        let reach = part.iter().fold(VertexSet::EMPTY, |a, g| a | group_reach[g]) - seen;
                        seen = seen | reach;
                        reach.len() as u32
                    })
                    .collect()
            };
            let weak_ok = before.iter().all(|&(a, b)| block_of[a] <= block_of[b]);
            if weak_ok {
                let p = exps();
                let strict_ok = !same_group_strict && before.iter().all(|&(a, b)| block_of[a] < block_of[b]);
                if strict_ok {
                    strict.push(p.clone());
                }
                weak.push(p);
            }
            Ok(())
        })?;
        Ok(ColoringProfile {
            isolated: host.isolated().len(),
            strict,
            weak,
        })
    }

    fn isolated_factor(&self, n: u32) -> BigInt {
        BigInt::from(n).pow(self.isolated as u32)
    }

    /// `n^{|I|} Σ_P Σ_{0 ≤ k_1 < … < k_t ≤ n-1} Π k_i^{p_i}`
    pub fn strict_count(&self, n: u32) -> BigInt {
        let s: BigInt = self.strict.iter().map(|p| nested_power_sum(p, 0, n as i64 - 1)).sum();
        self.isolated_factor(n) * s
    }

    /// `n^{|I|} Σ_P Σ_{1 ≤ k_1 < … < k_t ≤ n} Π k_i^{p_i}`
    pub fn compatible_count(&self, n: u32) -> BigInt {
        let s: BigInt = self.weak.iter().map(|p| nested_power_sum(p, 1, n as i64)).sum();
        self.isolated_factor(n) * s
    }

    pub fn strict_polynomial(&self, cache: &mut PowerSumCache) -> RationalPolynomial {
        let sum: RationalPolynomial = self.strict.iter().map(|p| cache.get(p, 0)).sum();
        &RationalPolynomial::monomial(self.isolated) * &sum
    }

    pub fn compatible_polynomial(&self, cache: &mut PowerSumCache) -> RationalPolynomial {
        let sum: RationalPolynomial = self.weak.iter().map(|p| cache.get(p, 1)).sum();
        &RationalPolynomial::monomial(self.isolated) * &sum
    }
}

/// Memoized power-sum polynomials keyed by exponent sequence and lower summation bound.
#[derive(Default)]
pub struct PowerSumCache {
    table: HashMap<(Vec<u32>, i64), RationalPolynomial>,
}

impl PowerSumCache {
    pub fn get(&mut self, exponents: &[u32], lo: i64) -> RationalPolynomial {
        self.table
            .entry((exponents.to_vec(), lo))
            .or_insert_with(|| nested_power_sum_poly(exponents, lo))
            .clone()
    }
}

/// `Σ_{f acyclic} (-1)^{cc(f(h))} f(h)`.
///
/// Each image hypergraph must arise from a single orientation; a repeat is
/// reported as a disagreement.
pub fn cancellation_free_antipode(h: &Hypergraph, budget: &Budget) -> Result<FormalSum> {
    let mut sum = FormalSum::zero(h.ground().clone());
    let mut seen: BTreeMap<Vec<VertexSet>, usize> = BTreeMap::new();
    for (idx, f) in enumerate_acyclic(h, budget)?.into_iter().enumerate() {
        let image = f.image_hypergraph();
        if let Some(prev) = seen.insert(image.edges().to_vec(), idx) {
            return Err(Error::disagreement(format!(
                "acyclic orientations {prev} and {idx} share the image {image}"
            )));
        }
        let sign = if image.cc() % 2 == 0 { Rational::one() } else { -Rational::one() };
        sum.add_term(&image, sign)?;
    }
    Ok(sum)
}
