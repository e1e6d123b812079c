//! Set partitions, with restriction of every block as both halves of the coproduct.
//! Characters are read through the graph made of one clique per block.

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::character::Character;
use crate::error::Result;
use crate::invariants::{chi_definition, SpeciesElement};
use crate::polynomials::{binomial, factorial, Rational};
use crate::setcomb::{set_partitions_of, Decomposition, GroundSet, SetPartition, VertexSet};

use super::graph::Graph;
use super::ripsew::RipSewGraph;
use super::Invariant;

impl SpeciesElement for SetPartition {
    fn ground(&self) -> &GroundSet {
        SetPartition::ground(self)
    }
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        self.meet(d)
    }
}

/// One clique per block.
pub fn cliquey_graph(pi: &SetPartition) -> Graph {
    let mut edges = Vec::new();
    for &b in pi.blocks() {
        let members: Vec<usize> = b.iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push(VertexSet::from_indices([u, v]));
            }
        }
    }
    Graph::new(pi.ground().clone(), edges).expect("cliques on disjoint blocks")
}

fn zeta_of(pi: &SetPartition, zeta: &Character) -> Rational {
    zeta.evaluate(cliquey_graph(pi).as_hypergraph())
}

/// `n(n-1)…(n-k+1)`
fn falling(n: i64, k: usize) -> Rational {
    (0..k as i64).fold(Rational::one(), |acc, i| acc * Rational::from_integer((n - i).into()))
}

/// `Π_{B ∈ π} Σ_{τ ⊢ B} ζ(τ) ℓ(τ)! C(n, ℓ(τ))`, valid for every integer `n`.
pub fn partition_chi(pi: &SetPartition, zeta: &Character, n: i64) -> Result<Rational> {
    let mut total = Rational::one();
    for &block in pi.blocks() {
        let ground = pi.ground().sub(block)?;
        let mut sum = Rational::zero();
        for tau in set_partitions_of(block) {
            let len = tau.len();
            let z = zeta_of(&SetPartition::new(ground.clone(), tau)?, zeta);
            if !z.is_zero() {
                sum += z * falling(n, len);
            }
        }
        total *= sum;
    }
    Ok(total)
}

/// The closed form read literally on the whole partition:
/// `Σ_{τ ≺ π} ζ(τ) ℓ(τ)! C(n, ℓ(τ))`. It agrees with [`partition_chi`] when `π` has one block.
pub fn partition_chi_single_sum(pi: &SetPartition, zeta: &Character, n: u32) -> Rational {
    pi.refinements()
        .iter()
        .map(|tau| {
            let len = tau.blocks().len();
            zeta_of(tau, zeta) * Rational::from_integer(factorial(len as u64) * binomial(n as u64, len as u64))
        })
        .sum()
}

impl Invariant for SetPartition {
    fn ground(&self) -> &GroundSet {
        SetPartition::ground(self)
    }
    fn chi_formula(&self, zeta: &Character, n: i64, _budget: &Budget) -> Result<Rational> {
        partition_chi(self, zeta, n)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &SetPartition| zeta_of(x, zeta), n, budget)
    }
}

/// The same invariant computed on the cliquey graph under ripping and sewing.
pub fn partition_chi_via_cliques(pi: &SetPartition, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    RipSewGraph::new(cliquey_graph(pi)).chi_formula(zeta, n, budget)
}
