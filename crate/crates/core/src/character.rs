//! Multiplicative characters on hypergraphs, defined by their value on connected
//! hypergraphs.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::polynomials::Rational;
use crate::setcomb::{GroundSet, VertexSet};

type ConnectedValue = Arc<dyn Fn(&Hypergraph) -> Rational + Send + Sync>;

/// A character: a rational value on connected hypergraphs, extended to all
/// hypergraphs as the product over connected components.
#[derive(Clone)]
pub struct Character {
    name: String,
    connected_value: ConnectedValue,
    declared_odd: bool,
    declared_characteristic: bool,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Character")
            .field("name", &self.name)
            .field("odd", &self.declared_odd)
            .finish()
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn is_isolated_vertex(c: &Hypergraph) -> bool {
    c.vertex_count() == 1 && c.edges().is_empty()
}

impl Character {
    /// `value` is only ever called on connected hypergraphs with a nonempty ground set.
    pub fn custom<F>(name: impl Into<String>, value: F, declared_odd: bool, declared_characteristic: bool) -> Self
    where
        F: Fn(&Hypergraph) -> Rational + Send + Sync + 'static,
    {
        Character {
            name: name.into(),
            connected_value: Arc::new(value),
            declared_odd,
            declared_characteristic,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn declared_odd(&self) -> bool {
        self.declared_odd
    }

    pub fn declared_characteristic(&self) -> bool {
        self.declared_characteristic
    }

    /// Product of the connected values over the components of `h`; 1 on the empty hypergraph.
    pub fn evaluate(&self, h: &Hypergraph) -> Rational {
        let mut acc = Rational::one();
        for (_, component) in h.components().components {
            let v = (self.connected_value)(&component);
            if v.is_zero() {
                return v;
            }
            acc *= v;
        }
        acc
    }

    /// Value on a connected hypergraph, without splitting.
    pub fn connected_value(&self, h: &Hypergraph) -> Rational {
        (self.connected_value)(h)
    }

    /// Discrete elements: every component a single vertex, possibly carrying singleton edges.
    pub fn zeta1() -> Self {
        Character::custom(
            "zeta1",
            |c: &Hypergraph| indicator(c.edges().iter().all(|e| e.len() == 1)),
            true,
            true,
        )
    }

    /// Components whose edges all have exactly two vertices (isolated vertices included).
    pub fn zeta_graphic() -> Self {
        Character::custom(
            "zeta_graphic",
            |c: &Hypergraph| indicator(c.edges().iter().all(|e| e.len() == 2)),
            false,
            true,
        )
    }

    /// Components that are a single 3-vertex edge, or an isolated vertex.
    pub fn zeta_e3() -> Self {
        Character::custom(
            "zeta_e3",
            |c: &Hypergraph| {
                indicator(
                    is_isolated_vertex(c)
                        || (c.vertex_count() == 3 && c.edges().len() == 1 && c.edges()[0].len() == 3),
                )
            },
            true,
            true,
        )
    }

    /// Connected components on three vertices, or isolated vertices.
    pub fn zeta_3() -> Self {
        Character::custom(
            "zeta_3",
            |c: &Hypergraph| indicator(is_isolated_vertex(c) || c.vertex_count() == 3),
            true,
            true,
        )
    }

    /// `ζ ∘ map`, for pulling a character back along a Hopf monoid morphism into hypergraphs.
    /// `map` must preserve connected components.
    pub fn through<F>(&self, map: F) -> Character
    where
        F: Fn(&Hypergraph) -> Hypergraph + Send + Sync + 'static,
    {
        let inner = self.clone();
        Character::custom(
            self.name.clone(),
            move |c: &Hypergraph| inner.evaluate(&map(c)),
            self.declared_odd,
            self.declared_characteristic,
        )
    }

    pub fn registry() -> Vec<Character> {
        vec![
            Character::zeta1(),
            Character::zeta_graphic(),
            Character::zeta_e3(),
            Character::zeta_3(),
        ]
    }

    pub fn by_name(name: &str) -> Result<Character> {
        Character::registry()
            .into_iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCharacter(name.to_string()))
    }

    pub fn registry_names() -> Vec<&'static str> {
        vec!["zeta1", "zeta_graphic", "zeta_e3", "zeta_3"]
    }
}

/// Checks the odd declaration on every connected hypergraph (edges as a set) with
/// 2 or 4 vertices: an odd character must vanish there.
pub fn spot_check_odd(zeta: &Character) -> bool {
    if !zeta.declared_odd() {
        return true;
    }
    [2usize, 4].into_iter().all(|k| {
        let ground = GroundSet::numbered(k);
        let candidates: Vec<VertexSet> = ground.mask().nonempty_subsets().collect();
        (0u64..(1u64 << candidates.len())).all(|choice| {
            let edges: Vec<VertexSet> = (0..candidates.len())
                .filter(|i| choice >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let h = Hypergraph::new(ground.clone(), edges).expect("valid edges");
            !h.is_connected() || zeta.evaluate(&h).is_zero()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::rat;

    fn hg(vertices: &[&str], edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_labels(vertices, edges).unwrap()
    }

    #[test]
    fn zeta1_examples() {
        let z = Character::zeta1();
        assert_eq!(z.evaluate(&hg(&["1", "2"], &[])), rat(1));
        assert_eq!(z.evaluate(&hg(&["1", "2"], &[&["1", "2"]])), rat(0));
        assert_eq!(z.evaluate(&hg(&["1", "2"], &[&["1"], &["2"]])), rat(1));
        assert_eq!(z.evaluate(&Hypergraph::edgeless(GroundSet::empty())), rat(1));
    }

    #[test]
    fn registry_values() {
        let g = Character::zeta_graphic();
        assert_eq!(g.evaluate(&hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]])), rat(1));
        assert_eq!(g.evaluate(&hg(&["1", "2"], &[&["1"]])), rat(0));
        let e3 = Character::zeta_e3();
        assert_eq!(e3.evaluate(&hg(&["1", "2", "3", "4"], &[&["1", "2", "3"]])), rat(1));
        assert_eq!(e3.evaluate(&hg(&["1", "2", "3"], &[&["1", "2", "3"], &["1", "2"]])), rat(0));
        let z3 = Character::zeta_3();
        assert_eq!(z3.evaluate(&hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]])), rat(1));
        assert_eq!(z3.evaluate(&hg(&["1", "2"], &[&["1", "2"]])), rat(0));
    }

    #[test]
    fn multiplicative_over_disjoint_unions() {
        let a = hg(&["1", "2", "3"], &[&["1", "2", "3"]]);
        let b = hg(&["4", "5"], &[&["4", "5"]]);
        for z in Character::registry() {
            let ab = a.product(&b).unwrap();
            assert_eq!(z.evaluate(&ab), z.evaluate(&a) * z.evaluate(&b));
        }
    }

    #[test]
    fn odd_declarations_hold() {
        for z in Character::registry() {
            assert!(spot_check_odd(&z), "{}", z.name());
        }
        let lying = Character::custom("always_one", |_| rat(1), true, true);
        assert!(!spot_check_odd(&lying));
    }

    #[test]
    fn lookup() {
        assert_eq!(Character::by_name("zeta_3").unwrap().name(), "zeta_3");
        assert!(matches!(Character::by_name("nope"), Err(Error::UnknownCharacter(_))));
        assert_eq!(Character::registry_names().len(), Character::registry().len());
    }
}
