//! Simplicial complexes as simple hypergraphs whose edges are all the faces.
//! Orientations are determined by the 1-skeleton.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::invariants::chi_definition;
use crate::orientation::{enumerate_acyclic, Orientation};
use crate::polynomials::{big_rat, sign, Rational};
use crate::setcomb::{GroundSet, VertexSet};

use super::graph::Graph;
use super::simple::SimpleHypergraph;
use super::Invariant;

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: SimpleHypergraph,
}

impl SimplicialComplex {
    /// `faces` must be closed under taking nonempty subsets.
    pub fn new(ground: GroundSet, faces: Vec<VertexSet>) -> Result<Self> {
        let faces = SimpleHypergraph::new(ground, faces)?;
        let present: BTreeSet<VertexSet> = faces.edges().iter().copied().collect();
        for &f in faces.edges() {
            if let Some(missing) = f.nonempty_subsets().find(|s| !present.contains(s)) {
                return Err(Error::validation(format!(
                    "face {} is missing its subset {}",
                    faces.ground().format_set(f),
                    faces.ground().format_set(missing)
                )));
            }
        }
        Ok(SimplicialComplex { faces })
    }

    /// The complex generated by the given faces.
    pub fn from_facets(ground: GroundSet, facets: &[VertexSet]) -> Result<Self> {
        let mut all = BTreeSet::new();
        for &f in facets {
            all.extend(f.nonempty_subsets());
        }
        SimplicialComplex::new(ground, all.into_iter().collect())
    }

    /// All nonempty subsets of `1..=k`.
    pub fn full_simplex(k: usize) -> Self {
        let ground = GroundSet::numbered(k);
        let mask = ground.mask();
        SimplicialComplex::from_facets(ground, &[mask]).expect("a simplex is closed")
    }

    pub fn ground(&self) -> &GroundSet {
        self.faces.ground()
    }

    pub fn faces(&self) -> &[VertexSet] {
        self.faces.edges()
    }

    pub fn as_simple_hypergraph(&self) -> &SimpleHypergraph {
        &self.faces
    }

    /// The graph of the faces with two vertices.
    pub fn skeleton(&self) -> Graph {
        let edges = self.faces().iter().copied().filter(|f| f.len() == 2).collect();
        Graph::new(self.ground().clone(), edges).expect("2-faces are distinct pairs")
    }

    /// Extends an acyclic orientation of the 1-skeleton to every face: a face is
    /// sent to the vertices that are heads of all their 2-faces inside it.
    pub fn extend(&self, skeleton_orientation: &Orientation) -> Result<Orientation> {
        let skeleton = self.skeleton();
        if skeleton_orientation.host() != skeleton.as_hypergraph() {
            return Err(Error::validation("orientation is not over the 1-skeleton"));
        }
        let pair_image = |u: usize, v: usize| -> VertexSet {
            let pair = VertexSet::from_indices([u, v]);
            let i = skeleton.edges().iter().position(|&e| e == pair).expect("2-faces are in the skeleton");
            skeleton_orientation.images()[i]
        };
        let images = self
            .faces()
            .iter()
            .map(|&face| {
                let members: Vec<usize> = face.iter().collect();
                match members.len() {
                    1 => return Ok(face),
                    2 => return Ok(pair_image(members[0], members[1])),
                    _ => {}
                }
                let heads = VertexSet::from_indices(
                    face.iter()
                        .filter(|&v| face.iter().filter(|&u| u != v).all(|u| pair_image(u, v).contains(v))),
                );
                if heads.is_empty() {
                    return Err(Error::disagreement(format!(
                        "face {} has no vertex heading all its pairs",
                        self.ground().format_set(face)
                    )));
                }
                Ok(heads)
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::new(self.faces.as_hypergraph().clone(), images)
    }

    /// Acyclic orientations of the 1-skeleton with their extensions.
    pub fn orientations(&self, budget: &Budget) -> Result<Vec<(Orientation, Orientation)>> {
        enumerate_acyclic(self.skeleton().as_hypergraph(), budget)?
            .into_iter()
            .map(|f| {
                let ext = self.extend(&f)?;
                Ok((f, ext))
            })
            .collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.faces)
    }
}

/// `Σ_f ζ(f(C))·#colorings(g, f, n)` over acyclic orientations `f` of the 1-skeleton `g`,
/// with `f(C)` taken as a set of faces.
pub fn sc_chi(c: &SimplicialComplex, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    let mut total = Rational::zero();
    for (f, ext) in c.orientations(budget)? {
        let image = ext.image_hypergraph().dedup();
        let z = zeta.evaluate(&image);
        if z.is_zero() {
            continue;
        }
        let profile = f.coloring_profile(budget)?;
        total += if n >= 0 {
            z * big_rat(profile.strict_count(n as u32))
        } else {
            sign(image.cc()) * z * big_rat(profile.compatible_count((-n) as u32))
        };
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub skeleton_orientations: usize,
    pub direct_orientations: usize,
    /// Orientations found by one route but not the other.
    pub mismatches: usize,
}

/// Compares extended skeleton orientations with the acyclic orientations of the
/// full face set, enumerated directly.
pub fn validate_extension(c: &SimplicialComplex, budget: &Budget) -> Result<ExtensionReport> {
    let extended: BTreeSet<Vec<VertexSet>> = c
        .orientations(budget)?
        .into_iter()
        .map(|(_, ext)| ext.images().to_vec())
        .collect();
    let direct: BTreeSet<Vec<VertexSet>> = enumerate_acyclic(c.faces.as_hypergraph(), budget)?
        .into_iter()
        .map(|f| f.images().to_vec())
        .collect();
    Ok(ExtensionReport {
        skeleton_orientations: extended.len(),
        direct_orientations: direct.len(),
        mismatches: extended.symmetric_difference(&direct).count(),
    })
}

impl Invariant for SimplicialComplex {
    fn ground(&self) -> &GroundSet {
        self.faces.ground()
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        sc_chi(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(&self.faces, |x: &SimpleHypergraph| zeta.evaluate(x.as_hypergraph()), n, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::graph::deletion_contraction_chromatic;
    use crate::derived::formula_polynomial;
    use crate::polynomials::RationalPolynomial;

    fn complex(k: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let ground = GroundSet::numbered(k);
        let facets: Vec<VertexSet> = facets
            .iter()
            .map(|f| VertexSet::from_indices(f.iter().map(|&i| i - 1)))
            .collect();
        SimplicialComplex::from_facets(ground, &facets).unwrap()
    }

    #[test]
    fn closure_is_validated() {
        let ground = GroundSet::numbered(2);
        assert!(SimplicialComplex::new(ground.clone(), vec![ground.mask()]).is_err());
        assert_eq!(SimplicialComplex::full_simplex(3).faces().len(), 7);
    }

    #[test]
    fn triangle_is_chromatic() {
        let b = Budget::default();
        let c = SimplicialComplex::full_simplex(3);
        let p = formula_polynomial(&c, &Character::zeta1(), &b).unwrap();
        assert_eq!(p, RationalPolynomial::from_ints(&[0, 2, -3, 1]));
    }

    #[test]
    fn small_cases() {
        let b = Budget::default();
        let z = Character::zeta1();
        let point = complex(1, &[&[1]]);
        assert_eq!(formula_polynomial(&point, &z, &b).unwrap(), RationalPolynomial::x());
        let segments = complex(4, &[&[1, 2], &[3, 4]]);
        let edge = RationalPolynomial::from_ints(&[0, -1, 1]);
        assert_eq!(formula_polynomial(&segments, &z, &b).unwrap(), edge.pow(2));
    }

    #[test]
    fn extension_agrees_with_direct_enumeration() {
        let b = Budget::default();
        let cases = [
            complex(3, &[&[1, 2, 3]]),
            complex(4, &[&[1, 2, 3], &[3, 4]]),
            complex(4, &[&[1, 2, 3], &[2, 3, 4]]),
            complex(4, &[&[1, 2, 3, 4]]),
        ];
        for c in &cases {
            let report = validate_extension(c, &b).unwrap();
            assert_eq!(report.mismatches, 0, "{c:?}");
            assert_eq!(report.skeleton_orientations, report.direct_orientations);
            assert_eq!(
                formula_polynomial(c, &Character::zeta1(), &b).unwrap(),
                deletion_contraction_chromatic(&c.skeleton())
            );
        }
    }

    #[test]
    fn formula_matches_definition() {
        let b = Budget::default();
        let c = complex(4, &[&[1, 2, 3], &[3, 4]]);
        for z in Character::registry() {
            for n in 0..=3 {
                assert_eq!(
                    c.chi_formula(&z, n, &b).unwrap(),
                    c.chi_by_definition(&z, n as u32, &b).unwrap(),
                    "{} {n}",
                    z.name()
                );
            }
        }
    }
}
