//! The power-sum basis over the rationals, conversions to and from the Schur
//! basis, and plethysm by substitution `p_k ↦ p_k[g]`.
//!
//! `s_λ = Σ_ρ χ^λ(ρ) / z_ρ · p_ρ` and `p_ρ = Σ_λ χ^λ(ρ) s_λ`, with the
//! characters coming from [`crate::characters`]. None of this touches the
//! Littlewood–Richardson code, so products and plethysms computed here are
//! an independent check on that path.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::{z_factor, CharacterTable};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurPoly;

/// A finite rational combination of power-sum products `p_ρ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn p(rho: Partition) -> Self {
        Self::term(rho, BigRational::one())
    }

    pub fn term(rho: Partition, coeff: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(rho, coeff);
        out
    }

    pub fn add_term(&mut self, rho: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(rho) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
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

    pub fn coeff(&self, rho: &Partition) -> BigRational {
        self.terms
            .get(rho)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> PowerSumPoly {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumPoly {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn truncate(&self, max_degree: usize) -> PowerSumPoly {
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() <= max_degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product `p_ρ p_σ = p_{ρ ∪ σ}`, dropping terms above `max_degree`.
    pub fn mul_truncated(&self, other: &PowerSumPoly, max_degree: Option<usize>) -> PowerSumPoly {
        let mut acc: HashMap<Partition, BigRational> = HashMap::new();
        for (rho, a) in &self.terms {
            for (sigma, b) in &other.terms {
                if max_degree.is_some_and(|m| rho.size() + sigma.size() > m) {
                    continue;
                }
                *acc.entry(rho.union(sigma))
                    .or_insert_with(BigRational::zero) += a * b;
            }
        }
        PowerSumPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `p_k[self]`: every `p_m` becomes `p_{km}`; constants are fixed.
    pub fn adams(&self, k: usize, max_degree: Option<usize>) -> PowerSumPoly {
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| max_degree.is_none_or(|m| p.size() * k <= m))
                .map(|(p, c)| (p.scaled(k), c.clone()))
                .collect(),
        }
    }

    /// `self[inner]`, where `self = Σ c_ρ p_ρ` and `p_ρ[g] = Π_i p_{ρ_i}[g]`.
    ///
    /// Every term of `inner` must have nonnegative degree for truncation to
    /// be sound, which always holds here.
    pub fn plethysm(&self, inner: &PowerSumPoly, max_degree: Option<usize>) -> PowerSumPoly {
        let mut adams_cache: HashMap<usize, PowerSumPoly> = HashMap::new();
        let mut out = PowerSumPoly::zero();
        for (rho, c) in &self.terms {
            let mut prod = PowerSumPoly::one();
            for &k in rho.parts() {
                let factor = adams_cache
                    .entry(k)
                    .or_insert_with(|| inner.adams(k, max_degree));
                prod = prod.mul_truncated(factor, max_degree);
                if prod.is_zero() {
                    break;
                }
            }
            for (sigma, x) in prod.terms {
                out.add_term(sigma, x * c);
            }
        }
        out
    }
}

/// `s_λ ↦ Σ_ρ χ^λ(ρ)/z_ρ p_ρ`, extended linearly.
pub fn to_power_sum(f: &SchurPoly) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for (lambda, c) in f.terms() {
        let table = CharacterTable::for_degree(lambda.size());
        let li = table.index_of(lambda);
        for (ri, rho) in table.partitions().iter().enumerate() {
            let chi = table.value_at(li, ri);
            if chi == 0 {
                continue;
            }
            let coeff = BigRational::new(c * BigInt::from(chi), z_factor(rho));
            out.add_term(rho.clone(), coeff);
        }
    }
    out
}

/// `p_ρ ↦ Σ_λ χ^λ(ρ) s_λ`, extended linearly. Fails if a Schur coefficient
/// is not an integer.
pub fn from_power_sum(g: &PowerSumPoly) -> Result<SchurPoly> {
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
    for (rho, c) in g.terms() {
        by_degree.entry(rho.size()).or_default().push((rho, c));
    }
    let mut out = SchurPoly::zero();
    for (n, terms) in by_degree {
        let table = CharacterTable::for_degree(n);
        let cols: Vec<(usize, &BigRational)> = terms
            .iter()
            .map(|(rho, c)| (table.index_of(rho), *c))
            .collect();
        for (li, lambda) in table.partitions().iter().enumerate() {
            let mut total = BigRational::zero();
            for (ri, c) in &cols {
                let chi = table.value_at(li, *ri);
                if chi != 0 {
                    total += *c * BigRational::from_integer(BigInt::from(chi));
                }
            }
            if total.is_zero() {
                continue;
            }
            if !total.is_integer() {
                return Err(Error::NonIntegral {
                    partition: lambda.to_string(),
                    value: total.to_string(),
                });
            }
            out.add_term(lambda.clone(), total.to_integer());
        }
    }
    Ok(out)
}

/// `⟨f, g⟩` computed in power sums: `⟨p_ρ, p_σ⟩ = δ z_ρ`.
pub fn power_sum_inner(f: &PowerSumPoly, g: &PowerSumPoly) -> BigRational {
    f.terms()
        .filter_map(|(rho, a)| {
            g.terms
                .get(rho)
                .map(|b| a * b * BigRational::from_integer(z_factor(rho)))
        })
        .fold(BigRational::zero(), |acc, x| acc + x)
}

impl Add<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self + &(-rhs)
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        PowerSumPoly {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul<&PowerSumPoly> for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self.mul_truncated(rhs, None)
    }
}

impl fmt::Display for PowerSumPoly {
    /// `1/2p[2] + 1/2p[1,1]`, canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
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
                f.write_str("p[]")?;
            } else {
                write!(f, "p[{p}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_up_to;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn two_box_expansions() {
        let s2 = to_power_sum(&SchurPoly::s(part![2]));
        let mut expected = PowerSumPoly::term(part![1, 1], q(1, 2));
        expected.add_term(part![2], q(1, 2));
        assert_eq!(s2, expected);

        let s11 = to_power_sum(&SchurPoly::s(part![1, 1]));
        let mut expected = PowerSumPoly::term(part![1, 1], q(1, 2));
        expected.add_term(part![2], q(-1, 2));
        assert_eq!(s11, expected);
        assert_eq!(s11.to_string(), "-1/2p[2] + 1/2p[1,1]");
    }

    #[test]
    fn p1_is_s1() {
        assert_eq!(
            from_power_sum(&PowerSumPoly::p(part![1])).unwrap(),
            SchurPoly::s(part![1])
        );
    }

    #[test]
    fn round_trip_all_small_schur() {
        for lambda in partitions_up_to(8) {
            let s = SchurPoly::s(lambda);
            assert_eq!(from_power_sum(&to_power_sum(&s)).unwrap(), s);
        }
    }

    #[test]
    fn non_integral_is_reported() {
        let half_p1 = PowerSumPoly::term(part![1], q(1, 2));
        assert!(matches!(
            from_power_sum(&half_p1),
            Err(Error::NonIntegral { .. })
        ));
    }

    #[test]
    fn adams_operation() {
        let g = to_power_sum(&SchurPoly::h(2));
        let a = g.adams(2, None);
        let mut expected = PowerSumPoly::term(part![2, 2], q(1, 2));
        expected.add_term(part![4], q(1, 2));
        assert_eq!(a, expected);
        assert!(g.adams(3, Some(5)).is_zero());
    }

    #[test]
    fn inner_product_in_power_sums_matches_schur() {
        for lambda in partitions_up_to(5) {
            for mu in partitions_up_to(5) {
                let a = to_power_sum(&SchurPoly::s(lambda.clone()));
                let b = to_power_sum(&SchurPoly::s(mu.clone()));
                let expected = if lambda == mu { 1 } else { 0 };
                assert_eq!(power_sum_inner(&a, &b), q(expected, 1));
            }
        }
    }
}
