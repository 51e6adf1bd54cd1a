//! The ring of symmetric functions in the Schur basis.
//!
//! Products use Littlewood–Richardson coefficients; multiplication by a
//! single `h_r` or `e_r` uses Pieri's rule directly. Coefficients are
//! arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, IntVector, Partition, SkewShape};
use crate::tableaux::{lr_coefficient, lr_contents};

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `s_∅ = 1`.
    pub fn one() -> Self {
        Self::s(Partition::empty())
    }

    pub fn s(lambda: Partition) -> Self {
        Self::term(lambda, BigInt::one())
    }

    pub fn term(lambda: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(lambda, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// `h_n = s_{(n)}`.
    pub fn h(n: usize) -> Self {
        Self::s(Partition::row(n))
    }

    /// `e_n = s_{(1^n)}`.
    pub fn e(n: usize) -> Self {
        Self::s(Partition::column(n))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (lambda, c) in terms {
            p.add_term(lambda, c.into());
        }
        p
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `s_λ`.
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical print order: decreasing degree, then decreasing
    /// lexicographic.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, BigInt> {
        self.terms
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// The single degree of a nonzero homogeneous element; `None` for zero or
    /// inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn homogeneous_component(&self, degree: usize) -> SchurPoly {
        SchurPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> SchurPoly {
        SchurPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() <= max_degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> SchurPoly {
        if c.is_zero() {
            return SchurPoly::zero();
        }
        SchurPoly {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// `ω`: transposes every index partition.
    pub fn omega(&self) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|(p, c)| (p.transpose(), c.clone())))
    }

    /// The antipode, `(-1)^d ω` on each degree-`d` component.
    pub fn antipode(&self) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|(p, c)| {
            let c = if p.size() % 2 == 1 { -c } else { c.clone() };
            (p.transpose(), c)
        }))
    }

    /// Multiplication by `h_r` via Pieri's rule.
    pub fn mul_h(&self, r: usize) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for (mu, c) in &self.terms {
            for lambda in horizontal_strips(mu, r) {
                out.add_term(lambda, c.clone());
            }
        }
        out
    }

    /// Multiplication by `e_r` via Pieri's rule.
    pub fn mul_e(&self, r: usize) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for (mu, c) in &self.terms {
            for lambda in vertical_strips(mu, r) {
                out.add_term(lambda, c.clone());
            }
        }
        out
    }

    /// Bilinear extension of the Littlewood–Richardson products.
    pub fn multiply(&self, other: &SchurPoly) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let ab = a * b;
                for (lambda, c) in lr_product(mu, nu) {
                    out.add_term(lambda, &ab * c);
                }
            }
        }
        out
    }
}

/// `⟨f, g⟩ = Σ_λ f_λ g_λ`.
pub fn hall_inner(f: &SchurPoly, g: &SchurPoly) -> BigInt {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small
        .terms
        .iter()
        .filter_map(|(p, a)| large.terms.get(p).map(|b| a * b))
        .sum()
}

/// `s_μ s_ν = Σ_λ c^λ_{μ,ν} s_λ`, as a map from `λ` to the coefficient.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    // Count against the smaller content: fewer boxes to fill.
    let (big, small) = if mu.size() >= nu.size() {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let n = mu.size() + nu.size();
    let candidates =
        enumerate_partitions(n, Some(mu.first() + nu.first()), Some(mu.len() + nu.len()));
    candidates
        .into_iter()
        .filter(|lambda| lambda.contains(big) && lambda.contains(small))
        .filter_map(|lambda| {
            let c = lr_coefficient(&lambda, big, small);
            (c > 0).then_some((lambda, c))
        })
        .collect()
}

/// Every `λ ⊇ μ` with `λ/μ` a horizontal strip of `r` boxes.
pub fn horizontal_strips(mu: &Partition, r: usize) -> Vec<Partition> {
    let rows = mu.len() + 1;
    let mut out = Vec::new();
    let mut added = vec![0usize; rows];
    fill_horizontal(mu, r, 0, &mut added, &mut out);
    out
}

fn fill_horizontal(
    mu: &Partition,
    remaining: usize,
    row: usize,
    added: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == added.len() {
        if remaining == 0 {
            let parts = (0..added.len()).map(|i| mu.part(i) + added[i]).collect();
            out.push(Partition::new(parts).expect("horizontal strip keeps shape"));
        }
        return;
    }
    // Row `row` may grow up to the length of the row above in `μ`.
    let cap = if row == 0 {
        remaining
    } else {
        (mu.part(row - 1) - mu.part(row)).min(remaining)
    };
    for a in (0..=cap).rev() {
        added[row] = a;
        fill_horizontal(mu, remaining - a, row + 1, added, out);
    }
    added[row] = 0;
}

/// Every `λ ⊇ μ` with `λ/μ` a vertical strip of `r` boxes.
pub fn vertical_strips(mu: &Partition, r: usize) -> Vec<Partition> {
    horizontal_strips(&mu.transpose(), r)
        .into_iter()
        .map(|p| p.transpose())
        .collect()
}

/// `h_r s_μ`: the sum of `s_λ` over horizontal strips `λ/μ` of size `r`.
pub fn pieri_h(r: usize, mu: &Partition) -> SchurPoly {
    SchurPoly::s(mu.clone()).mul_h(r)
}

/// `e_r s_μ`: the sum of `s_λ` over vertical strips `λ/μ` of size `r`.
pub fn pieri_e(r: usize, mu: &Partition) -> SchurPoly {
    SchurPoly::s(mu.clone()).mul_e(r)
}

/// `h_λ = h_{λ_1} ⋯ h_{λ_ℓ}` in the Schur basis; zero entries are `h_0 = 1`.
pub fn h_to_schur(lambda: &IntVector) -> SchurPoly {
    h_product(lambda.entries())
}

/// `e_λ = e_{λ_1} ⋯ e_{λ_ℓ}` in the Schur basis.
pub fn e_to_schur(lambda: &IntVector) -> SchurPoly {
    e_product(lambda.entries())
}

pub(crate) fn h_product(indices: &[usize]) -> SchurPoly {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.iter().fold(SchurPoly::one(), |acc, &r| acc.mul_h(r))
}

pub(crate) fn e_product(indices: &[usize]) -> SchurPoly {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.iter().fold(SchurPoly::one(), |acc, &r| acc.mul_e(r))
}

/// The index convention `h_m = e_m = 0` unless `m ∈ N`, for `m = num/den`.
///
/// Every formula that indexes `h` or `e` by a computed integer or rational
/// goes through here.
pub fn natural_index(num: i64, den: i64) -> Option<usize> {
    assert!(den > 0, "denominator must be positive");
    if num < 0 || num % den != 0 {
        return None;
    }
    usize::try_from(num / den).ok()
}

/// `Π h_{m_i}` for signed indices, zero if any index is negative.
pub fn h_product_signed(indices: &[i64]) -> SchurPoly {
    match indices
        .iter()
        .map(|&m| natural_index(m, 1))
        .collect::<Option<Vec<_>>>()
    {
        Some(idx) => h_product(&idx),
        None => SchurPoly::zero(),
    }
}

/// `Π e_{m_i}` for signed indices, zero if any index is negative.
pub fn e_product_signed(indices: &[i64]) -> SchurPoly {
    match indices
        .iter()
        .map(|&m| natural_index(m, 1))
        .collect::<Option<Vec<_>>>()
    {
        Some(idx) => e_product(&idx),
        None => SchurPoly::zero(),
    }
}

/// Expands `det(h_{α_i - i + j})` by permutations.
pub fn jacobi_trudi_h(alpha: &[i64]) -> SchurPoly {
    jacobi_trudi(alpha, h_product)
}

/// Expands `det(e_{α_i - i + j})` by permutations.
pub fn jacobi_trudi_e(alpha: &[i64]) -> SchurPoly {
    jacobi_trudi(alpha, e_product)
}

fn jacobi_trudi(alpha: &[i64], expand: fn(&[usize]) -> SchurPoly) -> SchurPoly {
    // Group permutation terms by their multiset of indices first; each
    // distinct product is then expanded once.
    let mut products: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut used = vec![false; alpha.len()];
    let mut chosen = Vec::with_capacity(alpha.len());
    jt_terms(alpha, 0, 0, &mut used, &mut chosen, &mut products);
    let mut out = SchurPoly::zero();
    for (idx, c) in products {
        if c != 0 {
            out += &expand(&idx).scale(&BigInt::from(c));
        }
    }
    out
}

fn jt_terms(
    alpha: &[i64],
    row: usize,
    inversions: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    products: &mut BTreeMap<Vec<usize>, i64>,
) {
    if row == alpha.len() {
        let mut key: Vec<usize> = chosen.iter().copied().filter(|&m| m > 0).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        *products.entry(key).or_insert(0) += sign;
        return;
    }
    for col in 0..alpha.len() {
        if used[col] {
            continue;
        }
        let Some(m) = natural_index(alpha[row] - row as i64 + col as i64, 1) else {
            continue;
        };
        let new_inv = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        chosen.push(m);
        jt_terms(alpha, row + 1, inversions + new_inv, used, chosen, products);
        chosen.pop();
        used[col] = false;
    }
}

/// `s_{λ/μ} = Σ_ν c^λ_{μ,ν} s_ν`.
pub fn skew_schur(shape: &SkewShape) -> SchurPoly {
    SchurPoly::from_terms(lr_contents(shape))
}

/// `s_{λ/μ}`, zero when `μ ⊄ λ`.
pub fn skew_schur_pair(lambda: &Partition, mu: &Partition) -> SchurPoly {
    match SkewShape::new(lambda.clone(), mu.clone()) {
        Ok(shape) => skew_schur(&shape),
        Err(_) => SchurPoly::zero(),
    }
}

impl AddAssign<&SchurPoly> for SchurPoly {
    fn add_assign(&mut self, rhs: &SchurPoly) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurPoly> for SchurPoly {
    fn sub_assign(&mut self, rhs: &SchurPoly) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c);
        }
    }
}

impl Add<&SchurPoly> for &SchurPoly {
    type Output = SchurPoly;
    fn add(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SchurPoly {
    type Output = SchurPoly;
    fn add(mut self, rhs: SchurPoly) -> SchurPoly {
        self += &rhs;
        self
    }
}

impl Sub<&SchurPoly> for &SchurPoly {
    type Output = SchurPoly;
    fn sub(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SchurPoly {
    type Output = SchurPoly;
    fn sub(mut self, rhs: SchurPoly) -> SchurPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &SchurPoly {
    type Output = SchurPoly;
    fn neg(self) -> SchurPoly {
        SchurPoly {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Neg for SchurPoly {
    type Output = SchurPoly;
    fn neg(self) -> SchurPoly {
        -&self
    }
}

impl Mul<&SchurPoly> for &SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: &SchurPoly) -> SchurPoly {
        self.multiply(rhs)
    }
}

impl Mul for SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: SchurPoly) -> SchurPoly {
        self.multiply(&rhs)
    }
}

impl fmt::Display for SchurPoly {
    /// `s[4] + s[2,2]`, `2s[3,2,1] - s[1]`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.canonical_terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if p.is_empty() {
                f.write_str("s[]")?;
            } else {
                write!(f, "s[{p}]")?;
            }
        }
        Ok(())
    }
}

/// JSON form of a coefficient: a number when it fits in `i64`, otherwise a
/// decimal string.
pub(crate) fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn coeff_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("coefficient {n} is not an integer")),
        serde_json::Value::String(s) => s.parse().map_err(|e| format!("coefficient {s:?}: {e}")),
        other => Err(format!("coefficient must be a number, got {other}")),
    }
}

struct TermsSeq<'a>(&'a SchurPoly);

impl Serialize for TermsSeq<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (p, c) in self.0.canonical_terms() {
            seq.serialize_element(&serde_json::json!({
                "partition": p,
                "coeff": coeff_to_json(c),
            }))?;
        }
        seq.end()
    }
}

impl SchurPoly {
    /// `{"terms": [...]}` plus any extra top-level fields.
    pub(crate) fn serialize_with<S: Serializer>(
        &self,
        s: S,
        extra: &[(&str, serde_json::Value)],
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1 + extra.len()))?;
        for (k, v) in extra {
            map.serialize_entry(k, v)?;
        }
        map.serialize_entry("terms", &TermsSeq(self))?;
        map.end()
    }

    pub(crate) fn from_json_terms(
        terms: &[serde_json::Value],
    ) -> std::result::Result<Self, String> {
        let mut out = SchurPoly::zero();
        for t in terms {
            let p: Partition =
                serde_json::from_value(t["partition"].clone()).map_err(|e| e.to_string())?;
            let c = coeff_from_json(&t["coeff"])?;
            if out.terms.contains_key(&p) {
                return Err(format!("duplicate partition {p}"));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }
}

impl Serialize for SchurPoly {
    /// `{"terms":[{"partition":[3,1],"coeff":2}, ...]}` in canonical order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.serialize_with(s, &[])
    }
}

impl<'de> Deserialize<'de> for SchurPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| de::Error::custom("expected {\"terms\": [...]}"))?;
        SchurPoly::from_json_terms(terms).map_err(de::Error::custom)
    }
}

/// Validates that `f` is homogeneous and returns its degree (zero counts as
/// homogeneous of any degree and reports `None`).
pub(crate) fn require_homogeneous(f: &SchurPoly, what: &str) -> Result<Option<usize>> {
    match f.degrees().len() {
        0 => Ok(None),
        1 => Ok(f.homogeneous_degree()),
        _ => Err(Error::NotHomogeneous(format!("{what} = {f}"))),
    }
}
