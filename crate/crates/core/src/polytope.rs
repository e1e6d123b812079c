//! Hypergraphic polytopes `Δ_h = Σ_{e ∈ h} Δ_e`, handled entirely through their
//! faces, which correspond to the acyclic orientations of `h`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::orientation::{enumerate_acyclic, max_orientation, Orientation};
use crate::polynomials::{big_rat, sign, Rational};
use crate::setcomb::{enumerate_colorings, Coloring, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphicPolytope {
    generator: Hypergraph,
}

/// A face `Δ_{f(h)}` of the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub orientation: Orientation,
    pub image: Hypergraph,
    /// `|V| - cc(f(h))`
    pub dimension: usize,
}

impl Face {
    fn from_orientation(orientation: Orientation) -> Face {
        let image = orientation.image_hypergraph();
        let dimension = image.vertex_count() - image.cc();
        Face {
            orientation,
            image,
            dimension,
        }
    }
}

impl HypergraphicPolytope {
    pub fn new(generator: Hypergraph) -> Self {
        HypergraphicPolytope { generator }
    }

    pub fn generator(&self) -> &Hypergraph {
        &self.generator
    }

    /// `|V| - cc(h)`
    pub fn dimension(&self) -> usize {
        self.generator.vertex_count() - self.generator.cc()
    }

    /// One face per acyclic orientation of the generator.
    pub fn faces(&self, budget: &Budget) -> Result<Vec<Face>> {
        Ok(enumerate_acyclic(&self.generator, budget)?
            .into_iter()
            .map(Face::from_orientation)
            .collect())
    }

    /// The face maximizing the linear functional `y`.
    pub fn maximal_face(&self, y: &Coloring) -> Result<Face> {
        Ok(Face::from_orientation(max_orientation(&self.generator, y)?))
    }

    /// Vertex coordinates `Σ_e 1_{f(e)}` over the discrete faces, in canonical ground order.
    pub fn vertices(&self, budget: &Budget) -> Result<Vec<Vec<u32>>> {
        let positions: Vec<usize> = self.generator.ground().indices();
        Ok(self
            .faces(budget)?
            .into_iter()
            .filter(|f| f.dimension == 0)
            .map(|f| {
                positions
                    .iter()
                    .map(|&v| f.orientation.images().iter().filter(|img| img.contains(v)).count() as u32)
                    .collect()
            })
            .collect())
    }

    /// `Σ_Q (-1)^{dim Q}` over all faces.
    pub fn euler_sum(&self, budget: &Budget) -> Result<i64> {
        Ok(self
            .faces(budget)?
            .iter()
            .map(|f| if f.dimension % 2 == 0 { 1 } else { -1 })
            .sum())
    }

    /// Faces with nonzero `ζ`.
    pub fn zeta_faces(&self, zeta: &Character, budget: &Budget) -> Result<Vec<Face>> {
        Ok(self
            .faces(budget)?
            .into_iter()
            .filter(|f| !zeta.evaluate(&f.image).is_zero())
            .collect())
    }

    /// All faces in the support of `ζ` have even dimension.
    pub fn zeta_faces_even(&self, zeta: &Character, budget: &Budget) -> Result<bool> {
        Ok(self.zeta_faces(zeta, budget)?.iter().all(|f| f.dimension % 2 == 0))
    }

    /// `χ^ζ(P)(n)`: strictly compatible pairs of faces and colorings for `n ≥ 0`;
    /// for `n = -m`, `Σ_Q (-1)^{|V| - dim Q} ζ(Q)` times compatible colorings with `[m]`.
    pub fn chi(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        let k = self.generator.vertex_count();
        let mut total = Rational::zero();
        for face in self.faces(budget)? {
            let z = zeta.evaluate(&face.image);
            if z.is_zero() {
                continue;
            }
            let profile = face.orientation.coloring_profile(budget)?;
            total += if n >= 0 {
                z * big_rat(profile.strict_count(n as u32))
            } else {
                sign(k - face.dimension) * z * big_rat(profile.compatible_count((-n) as u32))
            };
        }
        Ok(total)
    }

    /// `Σ_{c : V → [n]}` of the number of vertices of the `c`-maximal face.
    pub fn vertex_count_sum(&self, n: u32, budget: &Budget) -> Result<BigInt> {
        budget.check_colorings(n as u64, self.generator.vertex_count())?;
        let mut memo: HashMap<Vec<VertexSet>, usize> = HashMap::new();
        let mut total = BigInt::zero();
        for c in enumerate_colorings(self.generator.ground(), n) {
            let face = self.maximal_face(&c)?;
            let key = face.image.edges().to_vec();
            let count = match memo.get(&key) {
                Some(&v) => v,
                None => {
                    let v = HypergraphicPolytope::new(face.image.clone())
                        .faces(budget)?
                        .iter()
                        .filter(|f| f.dimension == 0)
                        .count();
                    memo.insert(key, v);
                    v
                }
            };
            total += count;
        }
        Ok(total)
    }
}
