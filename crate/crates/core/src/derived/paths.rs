//! Sets of paths. Restricting to `W` keeps the order of the surviving vertices in
//! each path; contracting `W` cuts every path at the vertices of `W`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::invariants::{chi_definition, SpeciesElement};
use crate::polynomials::{binomial, to_integer, Rational};
use crate::setcomb::{Decomposition, GroundSet, VertexSet};

use super::graph::Graph;
use super::ripsew::RipSewGraph;
use super::Invariant;

#[derive(Clone, PartialEq, Eq)]
pub struct PathFamily {
    ground: GroundSet,
    /// Each path read from its smaller end; paths sorted.
    paths: Vec<Vec<usize>>,
}

fn canonical(mut path: Vec<usize>) -> Vec<usize> {
    if path.last() < path.first() {
        path.reverse();
    }
    path
}

impl PathFamily {
    pub fn new(ground: GroundSet, paths: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for p in &paths {
            if p.is_empty() {
                return Err(Error::validation("paths must be nonempty"));
            }
            for &v in p {
                if !ground.mask().contains(v) || seen.contains(v) {
                    return Err(Error::validation("each vertex must appear in exactly one path, once"));
                }
                seen = seen | VertexSet::singleton(v);
            }
        }
        if seen != ground.mask() {
            return Err(Error::validation("the paths must cover the ground set"));
        }
        let mut paths: Vec<Vec<usize>> = paths.into_iter().map(canonical).collect();
        paths.sort();
        Ok(PathFamily { ground, paths })
    }

    /// Words of labels; the ground set is the set of all letters.
    pub fn from_words<S: AsRef<str>>(words: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = words.iter().flatten().map(|s| s.as_ref().to_string()).collect();
        let ground = GroundSet::new(labels)?;
        PathFamily::from_words_on(ground, words)
    }

    pub fn from_words_on<S: AsRef<str>>(ground: GroundSet, words: &[Vec<S>]) -> Result<Self> {
        let paths = words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|s| {
                        ground
                            .index_of(s.as_ref())
                            .ok_or_else(|| Error::validation(format!("unknown vertex {}", s.as_ref())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PathFamily::new(ground, paths)
    }

    /// Single-letter labels, paths separated by `|`, as in `bfcg|aed`.
    pub fn parse(text: &str) -> Result<Self> {
        let words: Vec<Vec<String>> = text
            .split('|')
            .map(|w| w.chars().map(|c| c.to_string()).collect())
            .collect();
        PathFamily::from_words(&words)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn words(&self) -> Vec<Vec<String>> {
        self.paths
            .iter()
            .map(|p| p.iter().map(|&v| self.ground.label(v).to_string()).collect())
            .collect()
    }

    /// Each path restricted to `subset`, order kept.
    pub fn restrict(&self, subset: VertexSet) -> Result<PathFamily> {
        let paths = self
            .paths
            .iter()
            .map(|p| p.iter().copied().filter(|&v| subset.contains(v)).collect::<Vec<_>>())
            .filter(|p| !p.is_empty())
            .collect();
        PathFamily::new(self.ground.sub(subset)?, paths)
    }

    /// The pieces left after deleting the vertices of `subset`.
    pub fn contract(&self, subset: VertexSet) -> Result<PathFamily> {
        let rest = self.ground.mask() - subset;
        let mut paths = Vec::new();
        for p in &self.paths {
            for piece in p.split(|&v| subset.contains(v)) {
                if !piece.is_empty() {
                    paths.push(piece.to_vec());
                }
            }
        }
        PathFamily::new(self.ground.sub(rest)?, paths)
    }

    /// `l(α)`: each path as a path graph.
    pub fn line_graph(&self) -> Graph {
        let edges = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| VertexSet::from_indices([w[0], w[1]])))
            .collect();
        Graph::new(self.ground.clone(), edges).expect("consecutive vertices form distinct pairs")
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words().iter().map(|w| w.concat()).collect();
        write!(f, "{}", words.join("|"))
    }
}

impl fmt::Debug for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SpeciesElement for PathFamily {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        if !d.ground().is_identical(&self.ground) {
            return Err(Error::validation("decomposition is over a different ground set"));
        }
        let mut paths = Vec::new();
        let mut current = self.clone();
        for &part in d.parts() {
            paths.extend(current.restrict(part)?.paths);
            current = current.contract(part)?;
        }
        PathFamily::new(self.ground.clone(), paths)
    }
}

/// The rip/sew invariant of the line graph.
pub fn path_chi(alpha: &PathFamily, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    RipSewGraph::new(alpha.line_graph()).chi_formula(zeta, n, budget)
}

pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// `|χ^{ζ1}(α)(-1)|`, checked against the product of the Catalan numbers of the path lengths.
pub fn path_catalan_check(alpha: &PathFamily, budget: &Budget) -> Result<BigInt> {
    let value = to_integer(&path_chi(alpha, &Character::zeta1(), -1, budget)?)?.abs();
    let expected: BigInt = alpha.paths.iter().map(|p| catalan(p.len() as u64)).product();
    if value != expected {
        return Err(Error::disagreement(format!(
            "|χ(-1)| = {value} but the Catalan product is {expected}"
        )));
    }
    Ok(value)
}

impl Invariant for PathFamily {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }
    fn chi_formula(&self, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
        path_chi(self, zeta, n, budget)
    }
    fn chi_by_definition(&self, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
        chi_definition(self, |x: &PathFamily| zeta.evaluate(x.line_graph().as_hypergraph()), n, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::formula_polynomial;
    use crate::polynomials::RationalPolynomial;

    fn single_path(k: usize) -> PathFamily {
        PathFamily::new(GroundSet::numbered(k), vec![(0..k).collect()]).unwrap()
    }

    #[test]
    fn coproduct_example() {
        let alpha = PathFamily::parse("bfcg|aed").unwrap();
        let w = alpha.ground().subset(&["b", "c", "e"]).unwrap();
        assert_eq!(alpha.restrict(w).unwrap().to_string(), "bc|e");
        let rest = alpha.contract(w).unwrap();
        let mut pieces: Vec<String> = rest.words().iter().map(|w| w.concat()).collect();
        pieces.sort();
        assert_eq!(pieces, vec!["a", "d", "f", "g"]);
    }

    #[test]
    fn reversal_is_the_same_path() {
        assert_eq!(PathFamily::parse("abc").unwrap(), PathFamily::parse("cba").unwrap());
        assert!(PathFamily::parse("aba").is_err());
    }

    #[test]
    fn line_graph_and_restriction_commute_with_sewing() {
        let alpha = PathFamily::parse("bfcg|aed").unwrap();
        let g = RipSewGraph::new(alpha.line_graph());
        let w = alpha.ground().subset(&["b", "c", "e"]).unwrap();
        let rest = alpha.ground().mask() - w;
        // l(α|W) is l(α) sewn through the complement, l(α/W) is the subgraph induced on the complement
        assert_eq!(alpha.restrict(w).unwrap().line_graph(), *g.sew(rest).unwrap().graph());
        assert_eq!(alpha.contract(w).unwrap().line_graph(), *g.rip(rest).unwrap().graph());
    }

    #[test]
    fn catalan_numbers() {
        let b = Budget::default();
        let expected = [2, 5, 14, 42];
        for (k, &c) in (2..=5).zip(&expected) {
            assert_eq!(path_catalan_check(&single_path(k), &b).unwrap(), BigInt::from(c));
        }
        let two = PathFamily::parse("ab|cde").unwrap();
        assert_eq!(path_catalan_check(&two, &b).unwrap(), BigInt::from(10));
    }

    #[test]
    fn two_vertices() {
        let b = Budget::default();
        let p = formula_polynomial(&single_path(2), &Character::zeta1(), &b).unwrap();
        assert_eq!(p, RationalPolynomial::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn formula_matches_definition() {
        let b = Budget::default();
        for alpha in [single_path(3), single_path(4), PathFamily::parse("ab|cd").unwrap()] {
            for z in Character::registry() {
                for n in 0..=3 {
                    assert_eq!(
                        alpha.chi_formula(&z, n, &b).unwrap(),
                        alpha.chi_by_definition(&z, n as u32, &b).unwrap(),
                        "{alpha} {} {n}",
                        z.name()
                    );
                }
            }
        }
    }
}
