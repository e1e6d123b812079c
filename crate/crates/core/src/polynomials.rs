//! Exact rational polynomials, Bernoulli numbers, generalized Faulhaber
//! polynomials and Lagrange interpolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::setcomb::integer_composition_coarsenings;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Dense polynomial with exact rational coefficients, ascending degree.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RationalPolynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        RationalPolynomial::from_ints(&[0, 1])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&rat(n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x) ↦ p(x + a)`
    pub fn shift(&self, a: i64) -> Self {
        let xa = RationalPolynomial::from_ints(&[a, 1]);
        self.compose_linear(&xa)
    }

    /// `p(x) ↦ p(-x)`
    pub fn reflect(&self) -> Self {
        RationalPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    fn compose_linear(&self, inner: &RationalPolynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPolynomial::zero(), |acc, c| &(&acc * inner) + &RationalPolynomial::constant(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(RationalPolynomial::one(), |acc, _| &acc * self)
    }

    /// Coefficients as exact strings ("-5/6", "1"), ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        if self.coeffs.is_empty() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<Rational>()
                    .map_err(|_| Error::validation(format!("`{}` is not a rational number", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(RationalPolynomial::new)
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let monomial = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if monomial.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{abs} {monomial}"));
            }
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("n"))
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

impl std::iter::Sum for RationalPolynomial {
    fn sum<I: Iterator<Item = RationalPolynomial>>(iter: I) -> Self {
        iter.fold(RationalPolynomial::zero(), |acc, p| &acc + &p)
    }
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli number `B_j` with `B_1 = -1/2`.
pub fn bernoulli(j: usize) -> Rational {
    if let Some(b) = bernoulli_table().read().expect("bernoulli table").get(j) {
        return b.clone();
    }
    let mut table = bernoulli_table().write().expect("bernoulli table");
    while table.len() <= j {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let m = table.len() as u64;
        let partial: Rational = table
            .iter()
            .enumerate()
            .map(|(k, b)| big_rat(binomial(m + 1, k as u64)) * b)
            .sum();
        table.push(-partial / big_rat(BigInt::from(m + 1)));
    }
    table[j].clone()
}

/// The exponent sequence of a generalized Faulhaber polynomial: nonempty, all entries positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaulhaberIndex {
    exponents: Vec<u32>,
}

impl FaulhaberIndex {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::validation("Faulhaber index must be nonempty"));
        }
        if exponents.contains(&0) {
            return Err(Error::validation("Faulhaber exponents must be positive"));
        }
        Ok(FaulhaberIndex { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `d_k = p_1 + … + p_k + k`, for `k` in `1..=t`.
    pub fn partial_degree(&self, k: usize) -> u64 {
        self.exponents[..k].iter().map(|&p| p as u64 + 1).sum()
    }

    /// `d_t`, the degree of the polynomial.
    pub fn degree(&self) -> u64 {
        self.partial_degree(self.exponents.len())
    }
}

/// `Σ_{lo ≤ k_1 < … < k_t ≤ hi} k_1^{e_1} ⋯ k_t^{e_t}`, with `0^0 = 1`.
///
/// The empty exponent list gives 1, an empty range gives 0 for nonempty lists.
pub fn nested_power_sum(exponents: &[u32], lo: i64, hi: i64) -> BigInt {
    if exponents.is_empty() {
        return BigInt::one();
    }
    if hi < lo {
        return BigInt::zero();
    }
    let width = (hi - lo + 1) as usize;
    // chains[k] = sum over chains of the current length ending at lo + k
    let mut chains: Vec<BigInt> = (0..width)
        .map(|k| BigInt::from(lo + k as i64).pow(exponents[0]))
        .collect();
    for &e in &exponents[1..] {
        let mut prefix = BigInt::zero();
        let mut next = Vec::with_capacity(width);
        for (k, c) in chains.iter().enumerate() {
            next.push(&prefix * BigInt::from(lo + k as i64).pow(e));
            prefix += c;
        }
        chains = next;
    }
    chains.into_iter().sum()
}

/// `F_p(n)`: the nested sum for `n ≥ 0`, the closed-form polynomial for `n < 0`.
pub fn faulhaber_value(p: &FaulhaberIndex, n: i64) -> Rational {
    if n >= 0 {
        big_rat(nested_power_sum(p.exponents(), 0, n - 1))
    } else {
        faulhaber_poly(p).eval_int(n)
    }
}

/// `F_p` from the Bernoulli–binomial coefficient formula.
pub fn faulhaber_poly(p: &FaulhaberIndex) -> RationalPolynomial {
    let t = p.len();
    let d: Vec<u64> = (0..=t).map(|k| p.partial_degree(k)).collect();
    let dt = d[t];

    // factor for level k going from j_{k-1} = a to j_k = b
    let term = |k: usize, a: u64, b: u64| -> Rational {
        let top = d[k] - a;
        big_rat(binomial(top, b - a)) * bernoulli((b - a) as usize) / big_rat(BigInt::from(top))
    };

    // weight(k, j_k) = Σ over j_{k-1}, …, j_1 of the product of the first k factors
    let mut memo: Vec<Vec<Option<Rational>>> = vec![vec![None; dt as usize + 1]; t + 1];
    fn weight(
        k: usize,
        jk: u64,
        d: &[u64],
        term: &dyn Fn(usize, u64, u64) -> Rational,
        memo: &mut Vec<Vec<Option<Rational>>>,
    ) -> Rational {
        if let Some(v) = &memo[k][jk as usize] {
            return v.clone();
        }
        let v = if k == 1 {
            term(1, 0, jk)
        } else {
            let upper = jk.min(d[k - 1] - 1);
            (0..=upper)
                .map(|a| term(k, a, jk) * weight(k - 1, a, d, term, memo))
                .sum()
        };
        memo[k][jk as usize] = Some(v.clone());
        v
    }

    let mut coeffs = vec![Rational::zero(); dt as usize + 1];
    for i in 0..dt {
        coeffs[(dt - i) as usize] = weight(t, i, &d, &term, &mut memo);
    }
    RationalPolynomial::new(coeffs)
}

/// `F_p` obtained by interpolating the nested sums at `n = 0..=d_t`.
pub fn faulhaber_poly_interpolated(p: &FaulhaberIndex) -> RationalPolynomial {
    nested_power_sum_poly(p.exponents(), 0)
}

/// The polynomial `n ↦ Σ_{lo ≤ k_1 < … < k_t ≤ n-1+lo} Π k_i^{e_i}` for `lo` in `{0, 1}`.
///
/// Zero exponents are allowed (`0^0 = 1`). Built by interpolation at
/// `n = 0..=Σ(e_i + 1)`, the degree bound of the iterated sum.
pub fn nested_power_sum_poly(exponents: &[u32], lo: i64) -> RationalPolynomial {
    let degree: i64 = exponents.iter().map(|&e| e as i64 + 1).sum();
    let points: Vec<(i64, Rational)> = (0..=degree)
        .map(|n| (n, big_rat(nested_power_sum(exponents, lo, n - 1 + lo))))
        .collect();
    lagrange_interpolate(&points).expect("distinct nodes")
}

/// `(-1)^{d_t} Σ_{p ≺ q} F_q(n+1)`, summing over coarsenings `q` of `p`.
pub fn faulhaber_reciprocity_rhs(p: &FaulhaberIndex, n: i64) -> Rational {
    let total: Rational = integer_composition_coarsenings(p.exponents())
        .expect("nonempty index")
        .into_iter()
        .map(|q| big_rat(nested_power_sum(&q, 0, n)))
        .sum();
    if p.degree().is_multiple_of(2) {
        total
    } else {
        -total
    }
}

/// The unique polynomial of degree below `points.len()` through the given points.
pub fn lagrange_interpolate(points: &[(i64, Rational)]) -> Result<RationalPolynomial> {
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::validation("interpolation nodes must be distinct"));
    }
    // Newton divided differences
    let m = points.len();
    let mut table: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            let dx = points[i].0 - points[i - level].0;
            table[i] = (&table[i] - &table[i - 1]) / rat(dx);
        }
    }
    let mut poly = RationalPolynomial::zero();
    for i in (0..m).rev() {
        let factor = RationalPolynomial::from_ints(&[-points[i].0, 1]);
        poly = &(&poly * &factor) + &RationalPolynomial::constant(table[i].clone());
    }
    Ok(poly)
}

/// Exact integer value of a rational known to be integral.
pub fn to_integer(r: &Rational) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::disagreement(format!("expected an integer, got {r}")))
    }
}

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_even() {
        Rational::one()
    } else {
        -Rational::one()
    }
}
