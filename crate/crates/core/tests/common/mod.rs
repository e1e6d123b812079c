//! Deterministic instance families shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hopfpoly::derived::{BuildingSet, Graph, SimplicialComplex};
use hopfpoly::setcomb::{GroundSet, VertexSet};
use hopfpoly::Hypergraph;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Multisets of size `k` drawn from `items`, as nondecreasing index sequences.
fn multisets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], start: usize, k: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, k, &mut Vec::new(), &mut out);
    out
}

/// All hypergraphs on `1..=max_vertices` vertices with at most `max_edges`
/// edges, edges taken with repetition from the nonempty subsets.
pub fn hypergraph_family(max_vertices: usize, max_edges: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for k in 1..=max_vertices {
        let ground = GroundSet::numbered(k);
        let subsets: Vec<VertexSet> = ground.mask().nonempty_subsets().collect();
        for m in 0..=max_edges {
            for edges in multisets(&subsets, m) {
                out.push(Hypergraph::new(ground.clone(), edges).unwrap());
            }
        }
    }
    out
}

fn pairs(ground: &GroundSet) -> Vec<VertexSet> {
    ground.mask().nonempty_subsets().filter(|s| s.len() == 2).collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every labelled simple graph on `1..=max_vertices` vertices.
pub fn labelled_graph_family(max_vertices: usize) -> Vec<Graph> {
    graphs(max_vertices, false)
}

/// One labelled representative of every simple graph on `1..=max_vertices`
/// vertices up to isomorphism.
pub fn graph_family(max_vertices: usize) -> Vec<Graph> {
    graphs(max_vertices, true)
}

fn graphs(max_vertices: usize, up_to_isomorphism: bool) -> Vec<Graph> {
    let mut out = Vec::new();
    for k in 1..=max_vertices {
        let ground = GroundSet::numbered(k);
        let all = pairs(&ground);
        let perms = permutations(k);
        let mut seen = BTreeSet::new();
        for bits in 0u32..(1 << all.len()) {
            let edges: Vec<VertexSet> =
                all.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
            if up_to_isomorphism {
                let canonical = perms
                    .iter()
                    .map(|p| {
                        let mut image: Vec<VertexSet> =
                            edges.iter().map(|e| VertexSet::from_indices(e.iter().map(|v| p[v]))).collect();
                        image.sort();
                        image
                    })
                    .min()
                    .unwrap();
                if !seen.insert(canonical) {
                    continue;
                }
            }
            out.push(Graph::new(ground.clone(), edges).unwrap());
        }
    }
    out
}

fn large_subsets(ground: &GroundSet) -> Vec<VertexSet> {
    ground.mask().nonempty_subsets().filter(|s| s.len() >= 2).collect()
}

/// Every simplicial complex on `1..=max_vertices` vertices containing all
/// vertices, generated from facet lists and deduplicated.
pub fn complex_family(max_vertices: usize) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for k in 1..=max_vertices {
        let ground = GroundSet::numbered(k);
        let mut seen = BTreeSet::new();
        let candidates = large_subsets(&ground);
        for bits in 0u32..(1 << candidates.len()) {
            let mut facets: Vec<VertexSet> = (0..k).map(VertexSet::singleton).collect();
            facets.extend(candidates.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &s)| s));
            let c = SimplicialComplex::from_facets(ground.clone(), &facets).unwrap();
            if seen.insert(c.faces().to_vec()) {
                out.push(c);
            }
        }
    }
    out
}

/// Every building set on `1..=max_elements` elements, as closures of generator
/// lists, deduplicated.
pub fn building_set_family(max_elements: usize) -> Vec<BuildingSet> {
    let mut out = Vec::new();
    for k in 1..=max_elements {
        let ground = GroundSet::numbered(k);
        let mut seen = BTreeSet::new();
        let candidates = large_subsets(&ground);
        for bits in 0u32..(1 << candidates.len()) {
            let generators: Vec<VertexSet> =
                candidates.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &s)| s).collect();
            let b = BuildingSet::closure(ground.clone(), &generators).unwrap();
            if seen.insert(b.sets().to_vec()) {
                out.push(b);
            }
        }
    }
    out
}

/// A reproducible runner: the same seed every run.
pub fn seeded_runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config::with_cases(cases), TestRng::from_seed(RngAlgorithm::ChaCha, &[17; 32]))
}

/// `count` values drawn from `strategy` with a fixed seed.
pub fn draw<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = seeded_runner(count as u32);
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).expect("strategy generates").current())
        .collect()
}

/// A hypergraph on `1..=max_vertices` vertices with up to `max_edges` edges.
pub fn arb_hypergraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_vertices).prop_flat_map(move |k| {
        let full = (1u64 << k) - 1;
        proptest::collection::vec(1..=full, 0..=max_edges).prop_map(move |masks| {
            let ground = GroundSet::numbered(k);
            let edges = masks
                .into_iter()
                .map(|m| VertexSet::from_indices((0..k).filter(|i| m >> i & 1 == 1)))
                .collect();
            Hypergraph::new(ground, edges).unwrap()
        })
    })
}

/// A hypergraph together with an assignment of each vertex to one of `parts` blocks.
pub fn arb_split(max_vertices: usize, max_edges: usize, parts: usize) -> impl Strategy<Value = (Hypergraph, Vec<VertexSet>)> {
    arb_hypergraph(max_vertices, max_edges).prop_flat_map(move |h| {
        let k = h.vertex_count();
        proptest::collection::vec(0..parts, k).prop_map(move |labels| {
            let blocks = (0..parts)
                .map(|p| VertexSet::from_indices((0..k).filter(|&i| labels[i] == p)))
                .collect();
            (h.clone(), blocks)
        })
    })
}

/// Unsigned Stirling numbers of the first kind by the recurrence.
pub fn unsigned_stirling(n: usize, k: usize) -> num_bigint::BigInt {
    let mut table = vec![vec![num_bigint::BigInt::from(0); n + 1]; n + 1];
    table[0][0] = 1.into();
    for i in 1..=n {
        for j in 1..=i {
            table[i][j] = &table[i - 1][j - 1] + &table[i - 1][j] * (i - 1);
        }
    }
    if k > n {
        0.into()
    } else {
        table[n][k].clone()
    }
}

/// Proper colorings of a graph with colors `0..n`, by enumeration.
pub fn brute_proper_colorings(g: &Graph, n: u32) -> u64 {
    let k = g.ground().len();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let mut it = e.iter();
            (g.ground().position(it.next().unwrap()), g.ground().position(it.next().unwrap()))
        })
        .collect();
    let mut colors = vec![0u32; k];
    let mut count = 0u64;
    if n == 0 {
        return u64::from(k == 0);
    }
    loop {
        if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}
