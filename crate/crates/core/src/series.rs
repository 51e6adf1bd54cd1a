//! Elements of the completed ring of symmetric formal power series.
//!
//! Only two shapes are ever needed: a finite truncation, and the exact form
//! `H · Q` with `H = 1 + h_1 + h_2 + ⋯` and `Q` a finite Schur combination.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::partition::{is_horizontal_strip_pair, Partition};
use crate::schur::SchurPoly;

/// The truncation to degree `≤ max_degree` of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    value: SchurPoly,
    max_degree: usize,
}

impl TruncatedSeries {
    /// Drops the terms of `value` above `max_degree`.
    pub fn new(value: &SchurPoly, max_degree: usize) -> Self {
        TruncatedSeries {
            value: value.truncate(max_degree),
            max_degree,
        }
    }

    /// `1 + h_1 + ⋯ + h_max_degree`.
    pub fn h_series(max_degree: usize) -> Self {
        let value = SchurPoly::from_terms((0..=max_degree).map(|k| (Partition::row(k), 1)));
        TruncatedSeries { value, max_degree }
    }

    pub fn zero(max_degree: usize) -> Self {
        TruncatedSeries {
            value: SchurPoly::zero(),
            max_degree,
        }
    }

    pub fn value(&self) -> &SchurPoly {
        &self.value
    }

    pub fn into_value(self) -> SchurPoly {
        self.value
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Coefficient of `s_μ`, or `None` when `|μ|` lies past the truncation.
    pub fn coeff(&self, mu: &Partition) -> Option<BigInt> {
        (mu.size() <= self.max_degree).then(|| self.value.coeff(mu))
    }

    /// Lowers the truncation degree.
    pub fn truncate(&self, max_degree: usize) -> TruncatedSeries {
        TruncatedSeries::new(&self.value, max_degree.min(self.max_degree))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.value, self.max_degree + 1)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value.serialize_with(
            s,
            &[("max_degree", serde_json::Value::from(self.max_degree))],
        )
    }
}

/// The series `H · factor`. Two values are equal iff their factors are.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HPrefixedSeries {
    factor: SchurPoly,
}

impl HPrefixedSeries {
    pub fn new(factor: SchurPoly) -> Self {
        HPrefixedSeries { factor }
    }

    /// `H` itself.
    pub fn h() -> Self {
        Self::new(SchurPoly::one())
    }

    pub fn zero() -> Self {
        Self::new(SchurPoly::zero())
    }

    pub fn factor(&self) -> &SchurPoly {
        &self.factor
    }

    pub fn into_factor(self) -> SchurPoly {
        self.factor
    }

    /// `H · factor` up to degree `max_degree`, by iterated Pieri.
    pub fn expand(&self, max_degree: usize) -> TruncatedSeries {
        let mut out = SchurPoly::zero();
        for (kappa, c) in self.factor.terms() {
            if kappa.size() > max_degree {
                continue;
            }
            let single = SchurPoly::term(kappa.clone(), c.clone());
            for j in 0..=(max_degree - kappa.size()) {
                out += &single.mul_h(j);
            }
        }
        TruncatedSeries::new(&out, max_degree)
    }

    /// `⟨H · factor, s_μ⟩ = Σ factor_κ` over `κ ⊆ μ` with `μ/κ` a horizontal
    /// strip.
    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.factor
            .terms()
            .filter(|(kappa, _)| is_horizontal_strip_pair(mu, kappa))
            .map(|(_, c)| c.clone())
            .sum()
    }
}

impl fmt::Display for HPrefixedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H * ({})", self.factor)
    }
}

impl Serialize for HPrefixedSeries {
    /// SchurPoly JSON for the factor plus `"h_prefixed": true`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factor
            .serialize_with(s, &[("h_prefixed", serde_json::Value::Bool(true))])
    }
}

impl<'de> Deserialize<'de> for HPrefixedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.get("h_prefixed") != Some(&serde_json::Value::Bool(true)) {
            return Err(de::Error::custom("missing \"h_prefixed\": true"));
        }
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| de::Error::custom("expected \"terms\" array"))?;
        SchurPoly::from_json_terms(terms)
            .map(HPrefixedSeries::new)
            .map_err(de::Error::custom)
    }
}
