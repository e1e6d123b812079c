//! JSON object documents, loading into library types, and the reports behind the
//! command-line subcommands.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::character::Character;
use crate::derived::building::{enumerate_bforests, induced_building_set};
use crate::derived::complex::validate_extension;
use crate::derived::graph::{deletion_contraction_chromatic, graph_chi};
use crate::derived::partition::partition_chi_via_cliques;
use crate::derived::paths::path_catalan_check;
use crate::derived::ripsew::{partitioning_forests, ripped_sewed};
use crate::derived::{
    checked_polynomial, definition_polynomial, BuildingSet, Graph, Invariant, PathFamily, RipSewGraph,
    SimpleHypergraph, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::hypergraph::{takeuchi_antipode, FormalSum, Hypergraph};
use crate::invariants::{chi_oracle_polynomial, chi_polynomial, reciprocity_report};
use crate::orientation::{cancellation_free_antipode, enumerate_acyclic, enumerate_admissible, Orientation};
use crate::polynomials::{Rational, RationalPolynomial};
use crate::polytope::HypergraphicPolytope;
use crate::setcomb::{GroundSet, SetPartition, VertexSet};

type Sets = Vec<Vec<String>>;

/// The on-disk form of every supported object, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ObjectDocument {
    Hypergraph { vertices: Vec<String>, edges: Sets },
    SimpleHypergraph { vertices: Vec<String>, edges: Sets },
    Graph { vertices: Vec<String>, edges: Sets },
    GraphRipsew { vertices: Vec<String>, edges: Sets },
    SimplicialComplex { vertices: Vec<String>, faces: Sets },
    BuildingSet {
        vertices: Vec<String>,
        #[serde(rename = "connected-sets")]
        connected_sets: Sets,
    },
    Partition { vertices: Vec<String>, blocks: Sets },
    Paths { vertices: Vec<String>, words: Sets },
    HypergraphicPolytope { vertices: Vec<String>, edges: Sets },
}

/// A loaded, validated object.
#[derive(Clone, Debug)]
pub enum Object {
    Hypergraph(Hypergraph),
    SimpleHypergraph(SimpleHypergraph),
    Graph(Graph),
    GraphRipsew(RipSewGraph),
    SimplicialComplex(SimplicialComplex),
    BuildingSet(BuildingSet),
    Partition(SetPartition),
    Paths(PathFamily),
    HypergraphicPolytope(HypergraphicPolytope),
}

fn subsets(ground: &GroundSet, sets: &Sets) -> Result<Vec<VertexSet>> {
    sets.iter().map(|s| ground.subset(s)).collect()
}

fn labelled(ground: &GroundSet, sets: &[VertexSet]) -> Sets {
    sets.iter()
        .map(|&s| ground.labels_of(s).into_iter().map(String::from).collect())
        .collect()
}

fn vertex_labels(ground: &GroundSet) -> Vec<String> {
    ground.labels().map(String::from).collect()
}

impl ObjectDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ObjectDocument::Hypergraph { .. } => "hypergraph",
            ObjectDocument::SimpleHypergraph { .. } => "simple-hypergraph",
            ObjectDocument::Graph { .. } => "graph",
            ObjectDocument::GraphRipsew { .. } => "graph-ripsew",
            ObjectDocument::SimplicialComplex { .. } => "simplicial-complex",
            ObjectDocument::BuildingSet { .. } => "building-set",
            ObjectDocument::Partition { .. } => "partition",
            ObjectDocument::Paths { .. } => "paths",
            ObjectDocument::HypergraphicPolytope { .. } => "hypergraphic-polytope",
        }
    }

    /// Validates the payload against its kind.
    pub fn load(&self) -> Result<Object> {
        use ObjectDocument as D;
        let ground_of = |v: &Vec<String>| GroundSet::new(v.iter().cloned());
        Ok(match self {
            D::Hypergraph { vertices, edges } => {
                let g = ground_of(vertices)?;
                let e = subsets(&g, edges)?;
                Object::Hypergraph(Hypergraph::new(g, e)?)
            }
            D::SimpleHypergraph { vertices, edges } => {
                let g = ground_of(vertices)?;
                let e = subsets(&g, edges)?;
                Object::SimpleHypergraph(SimpleHypergraph::new(g, e)?)
            }
            D::Graph { vertices, edges } => {
                let g = ground_of(vertices)?;
                let e = subsets(&g, edges)?;
                Object::Graph(Graph::new(g, e)?)
            }
            D::GraphRipsew { vertices, edges } => {
                let g = ground_of(vertices)?;
                let e = subsets(&g, edges)?;
                Object::GraphRipsew(RipSewGraph::new(Graph::new(g, e)?))
            }
            D::SimplicialComplex { vertices, faces } => {
                let g = ground_of(vertices)?;
                let f = subsets(&g, faces)?;
                Object::SimplicialComplex(SimplicialComplex::new(g, f)?)
            }
            D::BuildingSet { vertices, connected_sets } => {
                let g = ground_of(vertices)?;
                let s = subsets(&g, connected_sets)?;
                Object::BuildingSet(BuildingSet::new(g, s)?)
            }
            D::Partition { vertices, blocks } => {
                let g = ground_of(vertices)?;
                Object::Partition(SetPartition::from_labels(&g, blocks)?)
            }
            D::Paths { vertices, words } => {
                let g = ground_of(vertices)?;
                Object::Paths(PathFamily::from_words_on(g, words)?)
            }
            D::HypergraphicPolytope { vertices, edges } => {
                let g = ground_of(vertices)?;
                let e = subsets(&g, edges)?;
                Object::HypergraphicPolytope(HypergraphicPolytope::new(Hypergraph::new(g, e)?))
            }
        })
    }
}

impl Object {
    pub fn kind(&self) -> &'static str {
        self.to_document().kind()
    }

    /// Canonical document: vertices in ground order, sets in sorted order.
    pub fn to_document(&self) -> ObjectDocument {
        use ObjectDocument as D;
        match self {
            Object::Hypergraph(h) => D::Hypergraph {
                vertices: vertex_labels(h.ground()),
                edges: labelled(h.ground(), h.edges()),
            },
            Object::SimpleHypergraph(h) => D::SimpleHypergraph {
                vertices: vertex_labels(h.ground()),
                edges: labelled(h.ground(), h.edges()),
            },
            Object::Graph(g) => D::Graph {
                vertices: vertex_labels(g.ground()),
                edges: labelled(g.ground(), g.edges()),
            },
            Object::GraphRipsew(g) => D::GraphRipsew {
                vertices: vertex_labels(g.ground()),
                edges: labelled(g.ground(), g.graph().edges()),
            },
            Object::SimplicialComplex(c) => D::SimplicialComplex {
                vertices: vertex_labels(c.ground()),
                faces: labelled(c.ground(), c.faces()),
            },
            Object::BuildingSet(b) => D::BuildingSet {
                vertices: vertex_labels(b.ground()),
                connected_sets: labelled(b.ground(), b.sets()),
            },
            Object::Partition(p) => D::Partition {
                vertices: vertex_labels(p.ground()),
                blocks: labelled(p.ground(), p.blocks()),
            },
            Object::Paths(a) => D::Paths {
                vertices: vertex_labels(a.ground()),
                words: a.words(),
            },
            Object::HypergraphicPolytope(p) => D::HypergraphicPolytope {
                vertices: vertex_labels(p.generator().ground()),
                edges: labelled(p.generator().ground(), p.generator().edges()),
            },
        }
    }

    pub fn as_invariant(&self) -> &dyn Invariant {
        match self {
            Object::Hypergraph(x) => x,
            Object::SimpleHypergraph(x) => x,
            Object::Graph(x) => x,
            Object::GraphRipsew(x) => x,
            Object::SimplicialComplex(x) => x,
            Object::BuildingSet(x) => x,
            Object::Partition(x) => x,
            Object::Paths(x) => x,
            Object::HypergraphicPolytope(x) => x,
        }
    }

    /// The hypergraph whose orientations this object uses, where there is one.
    pub fn orientation_host(&self) -> Option<Hypergraph> {
        match self {
            Object::Hypergraph(h) => Some(h.clone()),
            Object::SimpleHypergraph(h) => Some(h.as_hypergraph().clone()),
            Object::Graph(g) => Some(g.as_hypergraph().clone()),
            Object::SimplicialComplex(c) => Some(c.as_simple_hypergraph().as_hypergraph().clone()),
            Object::BuildingSet(b) => Some(b.as_hypergraph().clone()),
            Object::HypergraphicPolytope(p) => Some(p.generator().clone()),
            Object::GraphRipsew(_) | Object::Partition(_) | Object::Paths(_) => None,
        }
    }
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn poly_strings(p: &RationalPolynomial) -> Vec<String> {
    p.to_strings()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodChoice {
    Oracle,
    Orientation,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum AntipodeFormat {
    Takeuchi,
    CancellationFree,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The first failing check as an error.
    pub fn into_result(self) -> Result<Certificate> {
        match self.checks.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::Disagreement(format!("check failed: {}", c.name))),
            None => Ok(self),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub n: i64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub description: String,
    pub zeta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub kind: String,
    pub character: String,
    pub method: MethodChoice,
    /// Ascending degree.
    pub polynomial: Vec<String>,
    pub evaluations: Vec<Evaluation>,
    pub breakdown: Vec<Term>,
    pub certificate: Certificate,
}

fn images_description(ground: &GroundSet, f: &Orientation) -> String {
    f.host()
        .edges()
        .iter()
        .zip(f.images())
        .map(|(&e, &img)| format!("{}->{}", ground.format_set(e), ground.format_set(img)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn breakdown(object: &Object, zeta: &Character, budget: &Budget) -> Result<Vec<Term>> {
    let term = |description: String, z: Rational| Term {
        description,
        zeta: rational_string(&z),
    };
    Ok(match object {
        Object::Hypergraph(h) => chi_polynomial(h, zeta, budget)?
            .breakdown
            .into_iter()
            .map(|t| term(images_description(h.ground(), &t.orientation), t.zeta_value))
            .collect(),
        Object::Graph(g) => graph_chi(g, zeta, budget)?
            .terms
            .into_iter()
            .map(|t| {
                let arcs: Vec<String> = t
                    .orientation
                    .directed()
                    .iter()
                    .map(|(&e, &head)| {
                        let edge = g.edges()[e];
                        let tail = (edge - VertexSet::singleton(head)).min_index().expect("two ends");
                        format!("{}->{}", g.ground().label(tail), g.ground().label(head))
                    })
                    .collect();
                let flat = labelled(g.ground(), t.flat.edges());
                term(format!("directed [{}] flat {:?}", arcs.join(" "), flat), t.zeta_value)
            })
            .collect(),
        Object::HypergraphicPolytope(p) => p
            .zeta_faces(zeta, budget)?
            .into_iter()
            .map(|f| {
                let z = zeta.evaluate(&f.image);
                term(format!("face {} dim {}", f.image, f.dimension), z)
            })
            .collect(),
        Object::BuildingSet(b) => {
            let mut out = Vec::new();
            for f in enumerate_bforests(b, budget)? {
                let induced = induced_building_set(b, &f)?;
                let z = zeta.evaluate(induced.as_hypergraph());
                if !z.is_zero() {
                    out.push(term(format!("forest {f:?}"), z));
                }
            }
            out
        }
        Object::GraphRipsew(g) => ripsew_terms(g, zeta, budget)?.into_iter().map(|(d, z)| term(d, z)).collect(),
        Object::Paths(a) => ripsew_terms(&RipSewGraph::new(a.line_graph()), zeta, budget)?
            .into_iter()
            .map(|(d, z)| term(d, z))
            .collect(),
        Object::SimplicialComplex(c) => {
            let mut out = Vec::new();
            for (f, ext) in c.orientations(budget)? {
                let z = zeta.evaluate(&ext.image_hypergraph().dedup());
                if !z.is_zero() {
                    out.push(term(images_description(c.ground(), &f), z));
                }
            }
            out
        }
        Object::SimpleHypergraph(_) | Object::Partition(_) => Vec::new(),
    })
}

fn ripsew_terms(g: &RipSewGraph, zeta: &Character, budget: &Budget) -> Result<Vec<(String, Rational)>> {
    let mut out = Vec::new();
    for f in partitioning_forests(g, budget)? {
        let gf = ripped_sewed(g, &f)?;
        let z = zeta.evaluate(gf.as_hypergraph());
        if !z.is_zero() {
            out.push((format!("forest {f:?}"), z));
        }
    }
    Ok(out)
}

fn formula_polynomial_checked(object: &Object, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    match object {
        Object::Hypergraph(h) => Ok(chi_polynomial(h, zeta, budget)?.polynomial),
        other => checked_polynomial(other.as_invariant(), zeta, budget),
    }
}

fn oracle_polynomial(object: &Object, zeta: &Character, budget: &Budget) -> Result<RationalPolynomial> {
    match object {
        Object::Hypergraph(h) => Ok(chi_oracle_polynomial(h, zeta, budget)?.polynomial),
        other => definition_polynomial(other.as_invariant(), zeta, budget),
    }
}

pub fn cmd_chi(
    object: &Object,
    character: &str,
    evals: &[i64],
    method: MethodChoice,
    budget: &Budget,
) -> Result<ChiReport> {
    let zeta = Character::by_name(character)?;
    let mut certificate = Certificate::default();
    let polynomial = match method {
        MethodChoice::Oracle => oracle_polynomial(object, &zeta, budget)?,
        MethodChoice::Orientation => formula_polynomial_checked(object, &zeta, budget)?,
        MethodChoice::Both => {
            let formula = formula_polynomial_checked(object, &zeta, budget)?;
            let oracle = oracle_polynomial(object, &zeta, budget)?;
            certificate.push("definition = orientation formula", formula == oracle);
            formula
        }
    };
    let mut evaluations = Vec::new();
    for &n in evals {
        let value = polynomial.eval_int(n);
        if method != MethodChoice::Oracle {
            let direct = object.as_invariant().chi_formula(&zeta, n, budget)?;
            certificate.push(format!("formula at n={n}"), direct == value);
        }
        evaluations.push(Evaluation {
            n,
            value: rational_string(&value),
        });
    }
    let breakdown = if method == MethodChoice::Oracle {
        Vec::new()
    } else {
        breakdown(object, &zeta, budget)?
    };
    let certificate = certificate.into_result()?;
    Ok(ChiReport {
        kind: object.kind().to_string(),
        character: zeta.name().to_string(),
        method,
        polynomial: poly_strings(&polynomial),
        evaluations,
        breakdown,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipodeTerm {
    pub edges: Sets,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipodeReport {
    pub kind: String,
    pub format: AntipodeFormat,
    pub terms: Vec<AntipodeTerm>,
    pub certificate: Certificate,
}

fn antipode_terms(sum: &FormalSum) -> Vec<AntipodeTerm> {
    sum.terms()
        .map(|(h, c)| AntipodeTerm {
            edges: h.edge_labels(),
            coefficient: rational_string(c),
        })
        .collect()
}

pub fn cmd_antipode(object: &Object, format: AntipodeFormat, budget: &Budget) -> Result<AntipodeReport> {
    let h = match object {
        Object::Hypergraph(h) => h.clone(),
        Object::HypergraphicPolytope(p) => p.generator().clone(),
        other => {
            return Err(Error::Validation(format!(
                "the antipode is computed for hypergraph documents, not {}",
                other.kind()
            )))
        }
    };
    let mut certificate = Certificate::default();
    let sum = match format {
        AntipodeFormat::Takeuchi => takeuchi_antipode(&h, budget)?,
        AntipodeFormat::CancellationFree => cancellation_free_antipode(&h, budget)?,
        AntipodeFormat::Both => {
            let t = takeuchi_antipode(&h, budget)?;
            let c = cancellation_free_antipode(&h, budget)?;
            certificate.push("takeuchi = cancellation-free", t == c);
            c
        }
    };
    let certificate = certificate.into_result()?;
    Ok(AntipodeReport {
        kind: object.kind().to_string(),
        format,
        terms: antipode_terms(&sum),
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationRow {
    pub images: Sets,
    pub acyclic: bool,
    pub discrete: bool,
    pub image_components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_colorings: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compatible_colorings: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationsReport {
    pub kind: String,
    pub edges: Sets,
    pub rows: Vec<OrientationRow>,
}

pub fn cmd_orientations(
    object: &Object,
    acyclic_only: bool,
    count_colorings: Option<u32>,
    budget: &Budget,
) -> Result<OrientationsReport> {
    let h = object.orientation_host().ok_or_else(|| {
        Error::Validation(format!("{} documents have no hypergraph orientations", object.kind()))
    })?;
    let list = if acyclic_only {
        enumerate_acyclic(&h, budget)?
    } else {
        enumerate_admissible(&h, budget)?
    };
    let mut rows = Vec::with_capacity(list.len());
    for f in list {
        let acyclic = acyclic_only || f.is_acyclic();
        let image = f.image_hypergraph();
        let (strict, compatible) = match count_colorings {
            Some(n) if acyclic => {
                let profile = f.coloring_profile(budget)?;
                (
                    Some(profile.strict_count(n).to_string()),
                    Some(profile.compatible_count(n).to_string()),
                )
            }
            _ => (None, None),
        };
        rows.push(OrientationRow {
            images: labelled(h.ground(), f.images()),
            acyclic,
            discrete: f.is_discrete(),
            image_components: image.cc(),
            strict_colorings: strict,
            compatible_colorings: compatible,
        });
    }
    Ok(OrientationsReport {
        kind: object.kind().to_string(),
        edges: h.edge_labels(),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: String,
    pub level: VerifyLevel,
    pub certificate: Certificate,
}

/// Runs every applicable cross-check. A failing check becomes a disagreement
/// error naming it; the report is only returned when all pass.
pub fn cmd_verify(object: &Object, level: VerifyLevel, budget: &Budget) -> Result<VerifyReport> {
    let mut cert = Certificate::default();
    let characters = match level {
        VerifyLevel::Quick => vec![Character::zeta1()],
        VerifyLevel::Full => Character::registry(),
    };
    for zeta in &characters {
        let formula = formula_polynomial_checked(object, zeta, budget);
        let oracle = oracle_polynomial(object, zeta, budget)?;
        match formula {
            Ok(p) => cert.push(format!("{}: definition = orientation formula", zeta.name()), p == oracle),
            Err(Error::Disagreement(msg)) => cert.push(format!("{}: {msg}", zeta.name()), false),
            Err(e) => return Err(e),
        }
    }
    match object {
        Object::Hypergraph(h) => {
            let n_max = if level == VerifyLevel::Full { 2 } else { 1 };
            for zeta in &characters {
                match reciprocity_report(h, zeta, n_max, budget) {
                    Ok(_) => cert.push(format!("{}: χ(-n) by polynomial, orientations and antipode", zeta.name()), true),
                    Err(Error::Disagreement(msg)) => cert.push(format!("{}: {msg}", zeta.name()), false),
                    Err(e) => return Err(e),
                }
            }
            if level == VerifyLevel::Full {
                let mut ok = true;
                for f in enumerate_acyclic(h, budget)? {
                    let profile = f.coloring_profile(budget)?;
                    for n in 1..=2u32 {
                        ok &= profile.strict_count(n) == f.count_strict_colorings(n, budget)?.into();
                        ok &= profile.compatible_count(n) == f.count_compatible_colorings(n, budget)?.into();
                    }
                }
                cert.push("power-sum counts = enumerated colorings", ok);
                let t = takeuchi_antipode(h, budget)?;
                let c = cancellation_free_antipode(h, budget)?;
                cert.push("takeuchi = cancellation-free", t == c);
            }
        }
        Object::Graph(g) => {
            let p = graph_chi(g, &Character::zeta1(), budget)?.result.polynomial;
            cert.push("zeta1 = deletion-contraction", p == deletion_contraction_chromatic(g));
        }
        Object::SimplicialComplex(c) => {
            let report = validate_extension(c, budget)?;
            cert.push("skeleton extension = direct enumeration", report.mismatches == 0);
            let p = checked_polynomial(c, &Character::zeta1(), budget)?;
            cert.push("zeta1 = chromatic polynomial of the skeleton", p == deletion_contraction_chromatic(&c.skeleton()));
        }
        Object::BuildingSet(b) => {
            let forests = enumerate_bforests(b, budget)?.len();
            let acyclic = enumerate_acyclic(b.as_hypergraph(), budget)?.len();
            cert.push("B-forests = acyclic orientations", forests == acyclic);
        }
        Object::Partition(pi) => {
            for zeta in &characters {
                let mut ok = true;
                for n in -2..=3 {
                    ok &= pi.chi_formula(zeta, n, budget)? == partition_chi_via_cliques(pi, zeta, n, budget)?;
                }
                cert.push(format!("{}: closed form = cliquey graph", zeta.name()), ok);
            }
        }
        Object::Paths(a) => match path_catalan_check(a, budget) {
            Ok(_) => cert.push("|χ(-1)| = Catalan product", true),
            Err(Error::Disagreement(msg)) => cert.push(msg, false),
            Err(e) => return Err(e),
        },
        Object::HypergraphicPolytope(p) => {
            cert.push("Euler relation", p.euler_sum(budget)? == 1);
            let zeta = Character::zeta1();
            let mut ok = true;
            for n in 1..=2u32 {
                let generic = p.vertex_count_sum(n, budget)?;
                let signed = crate::polynomials::sign(p.generator().vertex_count()) * p.chi(&zeta, -(n as i64), budget)?;
                ok &= Rational::from_integer(generic) == signed;
            }
            cert.push("vertex sums = (-1)^|V| χ(-n)", ok);
        }
        Object::SimpleHypergraph(_) | Object::GraphRipsew(_) => {}
    }
    let certificate = cert.into_result()?;
    Ok(VerifyReport {
        kind: object.kind().to_string(),
        level,
        certificate,
    })
}

/// Plain-text rendering of a report for terminals.
pub fn pretty_chi(r: &ChiReport) -> String {
    let mut s = String::new();
    let coeffs: Vec<Rational> = r.polynomial.iter().map(|c| c.parse().expect("rational strings")).collect();
    let p = RationalPolynomial::new(coeffs);
    let _ = writeln!(s, "kind       {}", r.kind);
    let _ = writeln!(s, "character  {}", r.character);
    let _ = writeln!(s, "chi(n)     {}", p.pretty("n"));
    for e in &r.evaluations {
        let _ = writeln!(s, "chi({:>3})   {}", e.n, e.value);
    }
    if !r.breakdown.is_empty() {
        let _ = writeln!(s, "terms      {}", r.breakdown.len());
        for t in &r.breakdown {
            let _ = writeln!(s, "  {:>6}  {}", t.zeta, t.description);
        }
    }
    pretty_certificate(&mut s, &r.certificate);
    s
}

pub fn pretty_antipode(r: &AntipodeReport) -> String {
    let mut s = String::new();
    for t in &r.terms {
        let edges: Vec<String> = t.edges.iter().map(|e| format!("{{{}}}", e.join(","))).collect();
        let _ = writeln!(s, "{:>6}  {{{}}}", t.coefficient, edges.join(","));
    }
    pretty_certificate(&mut s, &r.certificate);
    s
}

pub fn pretty_orientations(r: &OrientationsReport) -> String {
    let mut s = String::new();
    for row in &r.rows {
        let images: Vec<String> = row.images.iter().map(|e| format!("{{{}}}", e.join(","))).collect();
        let _ = write!(
            s,
            "{:<40} acyclic={} discrete={} cc={}",
            images.join(" "),
            row.acyclic,
            row.discrete,
            row.image_components
        );
        if let (Some(a), Some(b)) = (&row.strict_colorings, &row.compatible_colorings) {
            let _ = write!(s, " strict={a} compatible={b}");
        }
        s.push('\n');
    }
    s
}

pub fn pretty_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    pretty_certificate(&mut s, &r.certificate);
    s
}

fn pretty_certificate(s: &mut String, c: &Certificate) {
    for check in &c.checks {
        let _ = writeln!(s, "[{}] {}", if check.passed { "pass" } else { "FAIL" }, check.name);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(json: &str) -> ObjectDocument {
        ObjectDocument::from_json(json).unwrap()
    }

    const QUARTIC: &str = r#"{"kind":"hypergraph","vertices":["1","2","3","4"],"edges":[["1","2","3"],["2","3","4"]]}"#;

    #[test]
    fn quartic_report() {
        let b = Budget::default();
        let obj = doc(QUARTIC).load().unwrap();
        let r = cmd_chi(&obj, "zeta1", &[-1, 2], MethodChoice::Both, &b).unwrap();
        assert_eq!(r.polynomial, vec!["0", "-5/6", "5/2", "-8/3", "1"]);
        assert_eq!(r.evaluations[0].value, "7");
        assert_eq!(r.evaluations[1].value, "3");
        assert!(r.certificate.all_passed());
    }

    #[test]
    fn edgeless_is_a_power() {
        let b = Budget::default();
        let obj = doc(r#"{"kind":"hypergraph","vertices":["a","b"],"edges":[]}"#).load().unwrap();
        let r = cmd_chi(&obj, "zeta1", &[], MethodChoice::Orientation, &b).unwrap();
        assert_eq!(r.polynomial, vec!["0", "0", "1"]);
    }

    #[test]
    fn round_trip() {
        let docs = [
            QUARTIC,
            r#"{"kind":"building-set","vertices":["1","2"],"connected-sets":[["1"],["2"],["1","2"]]}"#,
            r#"{"kind":"paths","vertices":["a","b","c"],"words":[["c","b","a"]]}"#,
            r#"{"kind":"partition","vertices":["1","2","3"],"blocks":[["3"],["1","2"]]}"#,
            r#"{"kind":"simplicial-complex","vertices":["1","2"],"faces":[["1"],["2"],["1","2"]]}"#,
        ];
        for text in docs {
            let first = doc(text).load().unwrap().to_document();
            let again = ObjectDocument::from_json(&first.to_json()).unwrap();
            assert_eq!(first, again);
            assert_eq!(again.load().unwrap().to_document(), first);
        }
    }

    #[test]
    fn validation_failures() {
        let missing = doc(r#"{"kind":"building-set","vertices":["1","2"],"connected-sets":[["1"],["1","2"]]}"#);
        assert_eq!(missing.load().unwrap_err().exit_code(), 2);
        let open = doc(r#"{"kind":"simplicial-complex","vertices":["1","2"],"faces":[["1","2"]]}"#);
        assert_eq!(open.load().unwrap_err().exit_code(), 2);
        assert!(ObjectDocument::from_json(r#"{"kind":"nope"}"#).is_err());
        let obj = doc(QUARTIC).load().unwrap();
        let err = cmd_chi(&obj, "zeta_unknown", &[], MethodChoice::Both, &Budget::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn antipode_of_an_edge() {
        let b = Budget::default();
        let obj = doc(r#"{"kind":"hypergraph","vertices":["1","2"],"edges":[["1","2"]]}"#).load().unwrap();
        let r = cmd_antipode(&obj, AntipodeFormat::Both, &b).unwrap();
        let mut terms: Vec<(Sets, String)> = r.terms.iter().map(|t| (t.edges.clone(), t.coefficient.clone())).collect();
        terms.sort();
        let s = |x: &str| vec![x.to_string()];
        assert_eq!(
            terms,
            vec![
                (vec![s("1")], "1".to_string()),
                (vec![vec!["1".to_string(), "2".to_string()]], "-1".to_string()),
                (vec![s("2")], "1".to_string()),
            ]
        );
    }

    #[test]
    fn orientation_rows() {
        let b = Budget::default();
        let obj = doc(QUARTIC).load().unwrap();
        let r = cmd_orientations(&obj, true, Some(2), &b).unwrap();
        assert_eq!(r.rows.iter().filter(|x| x.discrete).count(), 7);
        let edge = doc(r#"{"kind":"hypergraph","vertices":["1","2"],"edges":[["1","2"]]}"#).load().unwrap();
        assert_eq!(cmd_orientations(&edge, false, None, &b).unwrap().rows.len(), 3);
        let none = doc(r#"{"kind":"hypergraph","vertices":["1"],"edges":[]}"#).load().unwrap();
        assert_eq!(cmd_orientations(&none, false, None, &b).unwrap().rows.len(), 1);
    }

    #[test]
    fn failing_check_is_a_disagreement() {
        let mut cert = Certificate::default();
        cert.push("first", true);
        cert.push("second", false);
        assert!(!cert.all_passed());
        let err = cert.into_result().unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(err.to_string().contains("second"));
    }

    #[test]
    fn verify_passes() {
        let b = Budget::default();
        let obj = doc(QUARTIC).load().unwrap();
        assert!(cmd_verify(&obj, VerifyLevel::Full, &b).unwrap().certificate.all_passed());
        let tri = doc(r#"{"kind":"graph","vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]}"#)
            .load()
            .unwrap();
        let r = cmd_verify(&tri, VerifyLevel::Full, &b).unwrap();
        assert!(r.certificate.checks.iter().any(|c| c.name.contains("deletion-contraction")));
    }
}
