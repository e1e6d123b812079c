//! Hypergraphs with restriction/contraction coproduct and disjoint-union product,
//! formal sums of hypergraphs and the alternating-composition antipode.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polynomials::Rational;
use crate::setcomb::{fubini, for_each_composition, Decomposition, GroundSet, VertexSet};

/// A ground set with a multiset of nonempty edges.
///
/// Edges are stored sorted, so two hypergraphs are equal exactly when they have
/// the same ground set and the same edge multiset.
#[derive(Clone)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(ground: GroundSet, mut edges: Vec<VertexSet>) -> Result<Self> {
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::validation("edges must be nonempty"));
            }
            if !e.is_subset(ground.mask()) {
                return Err(Error::validation("edge contains a vertex outside the ground set"));
            }
        }
        edges.sort();
        Ok(Hypergraph { ground, edges })
    }

    pub(crate) fn new_unchecked(ground: GroundSet, mut edges: Vec<VertexSet>) -> Self {
        edges.sort();
        Hypergraph { ground, edges }
    }

    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[&[S]]) -> Result<Self> {
        let ground = GroundSet::new(vertices.iter().map(|v| v.as_ref().to_string()))?;
        let edges = edges
            .iter()
            .map(|e| ground.subset(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(ground, edges)
    }

    /// Edgeless hypergraph on `ground`.
    pub fn edgeless(ground: GroundSet) -> Self {
        Hypergraph {
            ground,
            edges: Vec::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    /// Same ground set, new edges (already validated by the caller).
    pub(crate) fn with_edges(&self, edges: Vec<VertexSet>) -> Hypergraph {
        Hypergraph::new_unchecked(self.ground.clone(), edges)
    }

    /// `{e ∈ h : e ⊆ W}` on `W`.
    pub fn restrict(&self, subset: VertexSet) -> Result<Hypergraph> {
        let ground = self.ground.sub(subset)?;
        let edges = self.edges.iter().copied().filter(|e| e.is_subset(subset)).collect();
        Ok(Hypergraph { ground, edges })
    }

    /// `{e ∖ W : e ⊄ W}` on the complement of `W`, multiplicities kept.
    pub fn contract(&self, subset: VertexSet) -> Result<Hypergraph> {
        if !subset.is_subset(self.ground.mask()) {
            return Err(Error::validation("subset is not contained in the ground set"));
        }
        let rest = self.ground.mask() - subset;
        let ground = self.ground.sub(rest)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.is_subset(subset))
            .map(|&e| e & rest)
            .collect();
        Ok(Hypergraph::new_unchecked(ground, edges))
    }

    /// Disjoint union. Hypergraphs over different label tables are merged by label.
    pub fn product(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let (ground, left, right) = merge_grounds(&self.ground, &other.ground)?;
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|&e| left(e)).collect();
        edges.extend(other.edges.iter().map(|&e| right(e)));
        Ok(Hypergraph::new_unchecked(ground, edges))
    }

    /// `μ_D ∘ Δ_D(h)`: each edge replaced by its vertices in the last part of `D` it meets.
    pub fn mu_delta(&self, d: &Decomposition) -> Result<Hypergraph> {
        if !d.ground().is_identical(&self.ground) {
            return Err(Error::validation("decomposition is over a different ground set"));
        }
        let edges = self
            .edges
            .iter()
            .map(|&e| {
                let part = d
                    .parts()
                    .iter()
                    .rev()
                    .find(|p| p.intersects(e))
                    .expect("parts cover every edge");
                e & *part
            })
            .collect();
        Ok(self.with_edges(edges))
    }

    /// `μ_D ∘ Δ_D(h)` through the iterated coproduct and product.
    pub fn mu_delta_iterated(&self, d: &Decomposition) -> Result<Hypergraph> {
        if !d.ground().is_identical(&self.ground) {
            return Err(Error::validation("decomposition is over a different ground set"));
        }
        let mut remaining = self.clone();
        let mut result = Hypergraph::edgeless(self.ground.sub(VertexSet::EMPTY)?);
        for &part in d.parts() {
            let piece = remaining.restrict(part)?;
            remaining = remaining.contract(part)?;
            result = result.product(&piece)?;
        }
        Ok(result)
    }

    /// Vertices in no edge.
    pub fn isolated(&self) -> VertexSet {
        let covered = self.edges.iter().fold(VertexSet::EMPTY, |a, &e| a | e);
        self.ground.mask() - covered
    }

    pub fn components(&self) -> ConnectedComponentSplit {
        let classes = self.component_masks();
        let components = classes
            .into_iter()
            .map(|c| {
                let sub = self.restrict(c).expect("component is a subset");
                (c, sub)
            })
            .collect();
        ConnectedComponentSplit {
            components,
            isolated: self.isolated(),
        }
    }

    /// Number of connected components, isolated vertices included.
    pub fn cc(&self) -> usize {
        self.component_masks().len()
    }

    pub(crate) fn component_masks(&self) -> Vec<VertexSet> {
        let mut classes: Vec<VertexSet> = self.ground.mask().iter().map(VertexSet::singleton).collect();
        for &e in &self.edges {
            let mut merged = e;
            classes.retain(|&c| {
                if c.intersects(e) {
                    merged = merged | c;
                    false
                } else {
                    true
                }
            });
            classes.push(merged);
        }
        classes.sort();
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.cc() == 1
    }

    /// Same ground set with repeated edges removed.
    pub fn dedup(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Hypergraph {
            ground: self.ground.clone(),
            edges,
        }
    }

    pub fn edge_labels(&self) -> Vec<Vec<String>> {
        self.edges
            .iter()
            .map(|&e| self.ground.labels_of(e).into_iter().map(String::from).collect())
            .collect()
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        if self.ground.shares_universe(&other.ground) {
            self.ground.mask() == other.ground.mask() && self.edges == other.edges
        } else {
            self.ground == other.ground && self.edge_labels() == other.edge_labels()
        }
    }
}

impl Eq for Hypergraph {}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|&e| self.ground.format_set(e)).collect();
        write!(f, "{{{}}} on {}", edges.join(","), self.ground.format_set(self.ground.mask()))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({self})")
    }
}

type Remap = Box<dyn Fn(VertexSet) -> VertexSet>;

/// Ground set of a disjoint union, with maps carrying subsets of each factor into it.
pub(crate) fn merge_grounds(a: &GroundSet, b: &GroundSet) -> Result<(GroundSet, Remap, Remap)> {
    if a.shares_universe(b) {
        if a.mask().intersects(b.mask()) {
            return Err(Error::validation("product of hypergraphs over overlapping ground sets"));
        }
        let ground = GroundSet::from_parts(a.universe().clone(), a.mask() | b.mask());
        return Ok((ground, Box::new(|s| s), Box::new(|s| s)));
    }
    let mut labels: Vec<String> = a.labels().chain(b.labels()).map(String::from).collect();
    labels.sort();
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::validation("product of hypergraphs over overlapping ground sets"));
    }
    let ground = GroundSet::new(labels)?;
    let translate = |from: &GroundSet, to: &GroundSet| -> Vec<usize> {
        let mut table = vec![usize::MAX; from.universe().len()];
        for i in from.mask().iter() {
            table[i] = to.index_of(from.label(i)).expect("merged label");
        }
        table
    };
    let ta = translate(a, &ground);
    let tb = translate(b, &ground);
    let left: Remap = Box::new(move |s: VertexSet| VertexSet::from_indices(s.iter().map(|i| ta[i])));
    let right: Remap = Box::new(move |s: VertexSet| VertexSet::from_indices(s.iter().map(|i| tb[i])));
    Ok((ground, left, right))
}

/// Connected components of a hypergraph, in ascending order of their vertex sets.
#[derive(Clone, Debug)]
pub struct ConnectedComponentSplit {
    pub components: Vec<(VertexSet, Hypergraph)>,
    pub isolated: VertexSet,
}

impl ConnectedComponentSplit {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Finite rational combination of hypergraphs over one ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum {
    ground: GroundSet,
    terms: BTreeMap<Vec<VertexSet>, Rational>,
}

impl FormalSum {
    pub fn zero(ground: GroundSet) -> Self {
        FormalSum {
            ground,
            terms: BTreeMap::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn add_term(&mut self, h: &Hypergraph, coeff: Rational) -> Result<()> {
        if !h.ground().is_identical(&self.ground) {
            return Err(Error::validation("formal sum terms must share a ground set"));
        }
        self.add_edges(h.edges().to_vec(), coeff);
        Ok(())
    }

    fn add_edges(&mut self, edges: Vec<VertexSet>, coeff: Rational) {
        match self.terms.entry(edges) {
            Entry::Vacant(v) => {
                if !coeff.is_zero() {
                    v.insert(coeff);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn merge(mut self, other: FormalSum) -> FormalSum {
        for (edges, c) in other.terms {
            self.add_edges(edges, c);
        }
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Hypergraph, &Rational)> + '_ {
        self.terms.iter().map(|(edges, c)| {
            (
                Hypergraph {
                    ground: self.ground.clone(),
                    edges: edges.clone(),
                },
                c,
            )
        })
    }

    pub fn coefficient(&self, h: &Hypergraph) -> Rational {
        if !h.ground().is_identical(&self.ground) {
            return Rational::zero();
        }
        self.terms.get(h.edges()).cloned().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(h, c)| format!("{c}·{h}")).collect();
        write!(f, "FormalSum[{}]", parts.join(" + "))
    }
}

/// `S(h) = Σ_C (-1)^{ℓ(C)} μ_C Δ_C(h)` over all compositions `C` of the ground set.
///
/// The empty hypergraph is its own antipode.
pub fn takeuchi_antipode(h: &Hypergraph, budget: &Budget) -> Result<FormalSum> {
    let ground = h.ground().clone();
    if ground.is_empty() {
        let mut unit = FormalSum::zero(ground);
        unit.add_term(h, Rational::one())?;
        return Ok(unit);
    }
    let count = fubini(ground.len());
    budget.check_compositions(u64::try_from(count).unwrap_or(u64::MAX))?;

    let firsts: Vec<VertexSet> = ground.mask().nonempty_subsets().collect();
    let partial: Vec<FormalSum> = firsts
        .par_iter()
        .map(|&first| {
            let mut acc = FormalSum::zero(ground.clone());
            let mut stack = vec![first];
            for_each_composition(ground.mask() - first, &mut stack, &mut |parts| {
                let d = Decomposition::new(ground.clone(), parts.to_vec())?;
                let term = h.mu_delta(&d)?;
                let sign = if parts.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
                acc.add_edges(term.edges, sign);
                Ok(())
            })?;
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(partial
        .into_iter()
        .fold(FormalSum::zero(ground.clone()), FormalSum::merge))
}

/// Relabels a hypergraph onto a fresh label table holding only its own vertices.
pub fn compact(h: &Hypergraph) -> Hypergraph {
    let labels: Vec<String> = h.ground().labels().map(String::from).collect();
    let ground = GroundSet::new(labels).expect("labels are distinct");
    let table: Vec<usize> = {
        let mut t = vec![usize::MAX; h.ground().universe().len()];
        for (pos, i) in h.ground().mask().iter().enumerate() {
            t[i] = pos;
        }
        t
    };
    let edges = h
        .edges()
        .iter()
        .map(|e| VertexSet::from_indices(e.iter().map(|i| table[i])))
        .collect();
    Hypergraph::new_unchecked(ground, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::rat;
    use crate::setcomb::{enumerate_colorings, enumerate_compositions, coloring_to_decomposition};

    fn hg(vertices: &[&str], edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_labels(vertices, edges).unwrap()
    }

    fn set(h: &Hypergraph, labels: &[&str]) -> VertexSet {
        h.ground().subset(labels).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let r = h.restrict(set(&h, &["1", "2"])).unwrap();
        assert_eq!(r.edges(), &[set(&h, &["1", "2"])]);
        assert_eq!(h.restrict(h.ground().mask()).unwrap(), h);
        let t = hg(&["1", "2", "3"], &[&["1", "2", "3"]]);
        let r = t.restrict(set(&t, &["1"])).unwrap();
        assert!(r.edges().is_empty());
        assert_eq!(r.vertex_count(), 1);
    }

    #[test]
    fn contraction_examples() {
        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let c = h.contract(set(&h, &["1"])).unwrap();
        assert_eq!(c.edges(), &[set(&h, &["2"]), set(&h, &["2", "3"])]);
        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["1", "3"]]);
        let c = h.contract(set(&h, &["2", "3"])).unwrap();
        assert_eq!(c.edges(), &[set(&h, &["1"]), set(&h, &["1"])]);
        assert_eq!(h.contract(VertexSet::EMPTY).unwrap(), h);
        assert!(h.contract(VertexSet::singleton(10)).is_err());
    }

    #[test]
    fn product_examples() {
        let a = hg(&["1", "2"], &[&["1", "2"]]);
        let b = hg(&["3"], &[]);
        let p = a.product(&b).unwrap();
        assert_eq!(p, hg(&["1", "2", "3"], &[&["1", "2"]]));
        let unit = Hypergraph::edgeless(GroundSet::empty());
        assert_eq!(a.product(&unit).unwrap(), a);
        let p = hg(&["1"], &[&["1"]]).product(&hg(&["2"], &[&["2"]])).unwrap();
        assert_eq!(p, hg(&["1", "2"], &[&["1"], &["2"]]));
        assert!(a.product(&a).is_err());
    }

    #[test]
    fn mu_delta_examples() {
        let h = hg(&["1", "2"], &[&["1", "2"]]);
        let d = Decomposition::new(h.ground().clone(), vec![set(&h, &["1"]), set(&h, &["2"])]).unwrap();
        assert_eq!(h.mu_delta(&d).unwrap().edges(), &[set(&h, &["2"])]);
        let d = Decomposition::new(h.ground().clone(), vec![h.ground().mask()]).unwrap();
        assert_eq!(h.mu_delta(&d).unwrap(), h);
        let h = hg(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        let d = Decomposition::new(
            h.ground().clone(),
            vec![set(&h, &["1"]), set(&h, &["2", "3"]), set(&h, &["4"])],
        )
        .unwrap();
        assert_eq!(h.mu_delta(&d).unwrap().edges(), &[set(&h, &["2", "3"]), set(&h, &["4"])]);
    }

    #[test]
    fn mu_delta_routes_agree() {
        let h = hg(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "4"], &["1", "4"]]);
        for c in enumerate_colorings(h.ground(), 3) {
            let d = coloring_to_decomposition(&c);
            assert_eq!(h.mu_delta(&d).unwrap(), h.mu_delta_iterated(&d).unwrap());
        }
    }

    #[test]
    fn component_examples() {
        let h = hg(&["1", "2", "3", "4"], &[&["1", "2"], &["2", "3"]]);
        let split = h.components();
        assert_eq!(split.count(), 2);
        assert_eq!(split.isolated, set(&h, &["4"]));
        assert_eq!(h.cc(), 2);
        assert_eq!(hg(&["1", "2"], &[]).cc(), 2);
        assert_eq!(hg(&["1", "2", "3"], &[&["1", "2", "3"]]).cc(), 1);
    }

    #[test]
    fn antipode_examples() {
        let b = Budget::default();
        let v = hg(&["1"], &[]);
        let s = takeuchi_antipode(&v, &b).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(&v), rat(-1));

        let h = hg(&["1", "2"], &[&["1", "2"]]);
        let s = takeuchi_antipode(&h, &b).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coefficient(&h), rat(-1));
        assert_eq!(s.coefficient(&h.with_edges(vec![set(&h, &["1"])])), rat(1));
        assert_eq!(s.coefficient(&h.with_edges(vec![set(&h, &["2"])])), rat(1));

        assert_eq!(enumerate_compositions(&GroundSet::numbered(3)).len(), 13);
        let e = Hypergraph::edgeless(GroundSet::empty());
        assert_eq!(takeuchi_antipode(&e, &b).unwrap().coefficient(&e), rat(1));
    }

    #[test]
    fn antipode_respects_budget() {
        let h = Hypergraph::edgeless(GroundSet::numbered(6));
        assert!(matches!(
            takeuchi_antipode(&h, &Budget::uniform(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn compact_relabels() {
        let h = hg(&["1", "2", "3"], &[&["1", "3"]]);
        let r = h.restrict(set(&h, &["1", "3"])).unwrap();
        let c = compact(&r);
        assert_eq!(c.ground().universe().len(), 2);
        assert_eq!(c, r);
    }
}
