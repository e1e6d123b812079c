//! The polynomial invariant `χ^ζ(x)(n) = Σ_{c : V → [n]} ζ(μ_c Δ_c(x))` and its
//! evaluation at negative integers.

use num_traits::Zero;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::orientation::{cancellation_free_antipode, enumerate_acyclic, Orientation, PowerSumCache};
use crate::polynomials::{big_rat, lagrange_interpolate, sign, Rational, RationalPolynomial};
use crate::setcomb::{coloring_to_decomposition, enumerate_colorings, Decomposition, GroundSet};

/// An object of a Hopf monoid whose product is disjoint union: enough structure
/// to evaluate the invariant by its definition.
pub trait SpeciesElement: Sized {
    fn ground(&self) -> &GroundSet;
    /// `μ_D ∘ Δ_D(self)`
    fn mu_delta(&self, d: &Decomposition) -> Result<Self>;
}

impl SpeciesElement for Hypergraph {
    fn ground(&self) -> &GroundSet {
        Hypergraph::ground(self)
    }
    fn mu_delta(&self, d: &Decomposition) -> Result<Self> {
        Hypergraph::mu_delta(self, d)
    }
}

/// `Σ_{c : V → [n]} ζ(μ_c Δ_c(x))` by enumerating all `n^{|V|}` colorings.
pub fn chi_definition<T, Z>(x: &T, zeta: Z, n: u32, budget: &Budget) -> Result<Rational>
where
    T: SpeciesElement,
    Z: Fn(&T) -> Rational,
{
    budget.check_colorings(n as u64, x.ground().len())?;
    let mut total = Rational::zero();
    for c in enumerate_colorings(x.ground(), n) {
        let d = coloring_to_decomposition(&c);
        total += zeta(&x.mu_delta(&d)?);
    }
    Ok(total)
}

/// Interpolates [`chi_definition`] at `n = 0..=|V|`.
pub fn chi_definition_polynomial<T, Z>(x: &T, zeta: Z, budget: &Budget) -> Result<RationalPolynomial>
where
    T: SpeciesElement,
    Z: Fn(&T) -> Rational,
{
    let k = x.ground().len();
    budget.check_colorings(k as u64, k)?;
    let points = (0..=k as u32)
        .map(|n| Ok((n as i64, chi_definition(x, &zeta, n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&points)
}

/// The invariant of a hypergraph by its definition.
pub fn chi_oracle(h: &Hypergraph, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
    chi_definition(h, |t: &Hypergraph| zeta.evaluate(t), n, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    OrientationFormula,
}

/// One acyclic orientation's share of the invariant.
#[derive(Clone, Debug)]
pub struct OrientationTerm {
    pub orientation: Orientation,
    pub zeta_value: Rational,
    /// `ζ(f(h))` times the strict-coloring count polynomial.
    pub contribution: RationalPolynomial,
    /// `(-1)^{cc(f(h))} ζ(f(h))` times the compatible-coloring count polynomial.
    pub reciprocal_contribution: RationalPolynomial,
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub polynomial: RationalPolynomial,
    /// The polynomial `n ↦ χ(-n)` assembled from compatible colorings.
    pub reciprocal: RationalPolynomial,
    /// Orientations with nonzero `ζ(f(h))`.
    pub breakdown: Vec<OrientationTerm>,
    pub method: Method,
    /// Points where the definition oracle was evaluated and matched.
    pub oracle_checked: Vec<u32>,
}

fn orientation_term(f: Orientation, zeta: &Character, budget: &Budget) -> Result<Option<OrientationTerm>> {
    let image = f.image_hypergraph();
    let z = zeta.evaluate(&image);
    if z.is_zero() {
        return Ok(None);
    }
    let profile = f.coloring_profile(budget)?;
    let mut cache = PowerSumCache::default();
    let contribution = profile.strict_polynomial(&mut cache).scale(&z);
    let signed = &sign(image.cc()) * &z;
    let reciprocal_contribution = profile.compatible_polynomial(&mut cache).scale(&signed);
    Ok(Some(OrientationTerm {
        orientation: f,
        zeta_value: z,
        contribution,
        reciprocal_contribution,
    }))
}

fn breakdown(h: &Hypergraph, zeta: &Character, budget: &Budget) -> Result<Vec<OrientationTerm>> {
    let acyclic = enumerate_acyclic(h, budget)?;
    let terms = acyclic
        .into_par_iter()
        .map(|f| orientation_term(f, zeta, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().flatten().collect())
}

/// `χ(n)` through acyclic orientations.
///
/// For `n ≥ 0` this is `Σ_f ζ(f(h))·#(strictly compatible colorings)`, for `n = -m < 0`
/// it is `Σ_f (-1)^{cc(f(h))} ζ(f(h))·#(compatible colorings with [m])`.
pub fn chi_orientation(h: &Hypergraph, zeta: &Character, n: i64, budget: &Budget) -> Result<Rational> {
    let acyclic = enumerate_acyclic(h, budget)?;
    let parts = acyclic
        .par_iter()
        .map(|f| -> Result<Rational> {
            let image = f.image_hypergraph();
            let z = zeta.evaluate(&image);
            if z.is_zero() {
                return Ok(z);
            }
            let profile = f.coloring_profile(budget)?;
            Ok(if n >= 0 {
                z * big_rat(profile.strict_count(n as u32))
            } else {
                sign(image.cc()) * z * big_rat(profile.compatible_count((-n) as u32))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().sum())
}

/// The invariant as a polynomial, assembled from the orientation breakdown and
/// cross-checked against interpolation, reciprocity, `χ(1) = ζ(h)` and (when the
/// budget allows) the definition oracle at `n = 1, 2`.
pub fn chi_polynomial(h: &Hypergraph, zeta: &Character, budget: &Budget) -> Result<InvariantResult> {
    let terms = breakdown(h, zeta, budget)?;
    let polynomial: RationalPolynomial = terms.iter().map(|t| t.contribution.clone()).sum();
    let reciprocal: RationalPolynomial = terms.iter().map(|t| t.reciprocal_contribution.clone()).sum();

    let k = h.vertex_count() as i64;
    let points = (0..=k)
        .map(|n| Ok((n, chi_orientation(h, zeta, n, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    let interpolated = lagrange_interpolate(&points)?;
    if interpolated != polynomial {
        return Err(Error::disagreement(format!(
            "orientation polynomial {polynomial} differs from interpolated samples {interpolated}"
        )));
    }
    if reciprocal != polynomial.reflect() {
        return Err(Error::disagreement(format!(
            "compatible-coloring polynomial {reciprocal} is not χ(-n) = {}",
            polynomial.reflect()
        )));
    }
    if polynomial.eval_int(1) != zeta.evaluate(h) {
        return Err(Error::disagreement("χ(1) differs from ζ(h)"));
    }
    let mut oracle_checked = Vec::new();
    for n in [1u32, 2] {
        if budget.check_colorings(n as u64, h.vertex_count()).is_err() {
            continue;
        }
        let oracle = chi_oracle(h, zeta, n, budget)?;
        if oracle != polynomial.eval_int(n as i64) {
            return Err(Error::disagreement(format!(
                "definition gives χ({n}) = {oracle}, orientations give {}",
                polynomial.eval_int(n as i64)
            )));
        }
        oracle_checked.push(n);
    }
    Ok(InvariantResult {
        polynomial,
        reciprocal,
        breakdown: terms,
        method: Method::OrientationFormula,
        oracle_checked,
    })
}

/// The invariant interpolated from the definition oracle alone.
pub fn chi_oracle_polynomial(h: &Hypergraph, zeta: &Character, budget: &Budget) -> Result<InvariantResult> {
    let polynomial = chi_definition_polynomial(h, |t: &Hypergraph| zeta.evaluate(t), budget)?;
    Ok(InvariantResult {
        reciprocal: polynomial.reflect(),
        oracle_checked: (0..=h.vertex_count() as u32).collect(),
        polynomial,
        breakdown: Vec::new(),
        method: Method::Oracle,
    })
}

/// `χ(S(h))(n)`, using the cancellation-free antipode.
pub fn chi_negative_via_antipode(h: &Hypergraph, zeta: &Character, n: u32, budget: &Budget) -> Result<Rational> {
    if n == 0 {
        return Err(Error::validation("the antipode route needs n ≥ 1"));
    }
    let s = cancellation_free_antipode(h, budget)?;
    let mut total = Rational::zero();
    for (term, coeff) in s.terms() {
        total += coeff * chi_orientation(&term, zeta, n as i64, budget)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityRow {
    pub n: u32,
    pub polynomial: Rational,
    pub orientation: Rational,
    pub antipode: Rational,
}

#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    pub rows: Vec<ReciprocityRow>,
    /// `χ(n) ≤ (-1)^{|V|} χ(-n)` on every row; only reported for characters declared odd.
    pub odd_inequality: Option<bool>,
}

/// Evaluates `χ(-n)` for `n = 1..=n_max` by the polynomial, the compatible-coloring
/// formula and the antipode, failing on any disagreement.
pub fn reciprocity_report(h: &Hypergraph, zeta: &Character, n_max: u32, budget: &Budget) -> Result<ReciprocityReport> {
    if n_max == 0 {
        return Err(Error::validation("n_max must be at least 1"));
    }
    let chi = chi_polynomial(h, zeta, budget)?.polynomial;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let row = ReciprocityRow {
            n,
            polynomial: chi.eval_int(-(n as i64)),
            orientation: chi_orientation(h, zeta, -(n as i64), budget)?,
            antipode: chi_negative_via_antipode(h, zeta, n, budget)?,
        };
        if row.polynomial != row.orientation || row.polynomial != row.antipode {
            return Err(Error::disagreement(format!(
                "χ(-{n}): polynomial {}, orientations {}, antipode {}",
                row.polynomial, row.orientation, row.antipode
            )));
        }
        rows.push(row);
    }
    let odd_inequality = zeta.declared_odd().then(|| {
        let s = sign(h.vertex_count());
        rows.iter()
            .all(|r| chi.eval_int(r.n as i64) <= &s * &r.polynomial)
    });
    Ok(ReciprocityReport { rows, odd_inequality })
}

/// `(-1)^{|V|} χ(-n)` as a polynomial in `n`.
pub fn signed_reciprocal(h: &Hypergraph, chi: &RationalPolynomial) -> RationalPolynomial {
    chi.reflect().scale(&sign(h.vertex_count()))
}
