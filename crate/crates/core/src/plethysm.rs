//! General plethysm `f[g]`, plethysm adjoints `f[g^⊥]`, and the brute-force
//! Frobenius transform `f[H^⊥]` built on Littlewood's identity
//! `r_λ^μ = ⟨s_λ, s_μ[H]⟩`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partitions_up_to, Partition};
use crate::power_sum::{from_power_sum, to_power_sum};
use crate::schur::{hall_inner, require_homogeneous, SchurPoly};
use crate::series::TruncatedSeries;

/// `f[g]` by substituting `p_k ↦ p_k[g]` in the power-sum expansion of `f`.
///
/// `g` may be inhomogeneous and may have a constant term.
pub fn plethysm(f: &SchurPoly, g: &SchurPoly) -> Result<SchurPoly> {
    let fp = to_power_sum(f);
    let gp = to_power_sum(g);
    from_power_sum(&fp.plethysm(&gp, None))
}

/// `f[g]` truncated to degree `g.max_degree()`.
///
/// Exact in every degree up to the truncation, because no term of `g` has
/// negative degree.
pub fn plethysm_truncated(f: &SchurPoly, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    let max = g.max_degree();
    let fp = to_power_sum(f);
    let gp = to_power_sum(g.value());
    let value = from_power_sum(&fp.plethysm(&gp, Some(max)))?;
    Ok(TruncatedSeries::new(&value, max))
}

/// `f[g^⊥] = Σ_μ ⟨f, s_μ[g]⟩ s_μ` for `g` homogeneous of degree `k ≥ 1`.
///
/// `f` is handled one homogeneous component at a time; a component of
/// degree `d` contributes only when `k | d`.
pub fn plethysm_adjoint(f: &SchurPoly, g: &SchurPoly) -> Result<SchurPoly> {
    let k = match require_homogeneous(g, "inner argument of a plethysm adjoint")? {
        Some(k) if k >= 1 => k,
        _ => {
            return Err(Error::InvalidArgument(
                "plethysm adjoint needs an inner argument of positive degree".into(),
            ))
        }
    };
    let mut out = SchurPoly::zero();
    for d in f.degrees() {
        if d % k != 0 {
            continue;
        }
        let part = f.homogeneous_component(d);
        for mu in enumerate_partitions(d / k, None, None) {
            let c = hall_inner(&part, &plethysm(&SchurPoly::s(mu.clone()), g)?);
            out.add_term(mu, c);
        }
    }
    Ok(out)
}

/// `f[H^⊥]` up to degree `max_degree`, coefficient by coefficient:
/// the coefficient of `s_μ` is `⟨f, s_μ[H]⟩`.
///
/// Only `H` truncated at the top degree of `f` matters, since the inner
/// product only sees degrees where `f` lives.
pub fn frobenius_oracle(f: &SchurPoly, max_degree: usize) -> Result<TruncatedSeries> {
    let top = f.max_degree().unwrap_or(0);
    let table = HPlethysmTable::new(max_degree, top)?;
    Ok(table.frobenius(f))
}

/// `r_λ^μ = ⟨s_λ, s_μ[H]⟩`, valid for every `λ`.
pub fn restriction_oracle(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    let h = TruncatedSeries::h_series(lambda.size());
    let s_mu_h = plethysm_truncated(&SchurPoly::s(mu.clone()), &h)?;
    Ok(s_mu_h.value().coeff(lambda))
}

/// Precomputed `s_μ[H]` truncated at degree `truncation`, for all
/// `|μ| ≤ max_mu`. Serves repeated oracle queries in sweeps.
#[derive(Clone, Debug)]
pub struct HPlethysmTable {
    max_mu: usize,
    truncation: usize,
    rows: BTreeMap<Partition, SchurPoly>,
}

impl HPlethysmTable {
    /// Rows are computed in parallel; the table is the same regardless of
    /// scheduling.
    pub fn new(max_mu: usize, truncation: usize) -> Result<Self> {
        let h = TruncatedSeries::h_series(truncation);
        let mus: Vec<Partition> = partitions_up_to(max_mu).collect();
        let rows = mus
            .into_par_iter()
            .map(|mu| {
                let row = plethysm_truncated(&SchurPoly::s(mu.clone()), &h)?;
                Ok((mu, row.into_value()))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(HPlethysmTable {
            max_mu,
            truncation,
            rows,
        })
    }

    pub fn max_mu(&self) -> usize {
        self.max_mu
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `s_μ[H]` through degree [`Self::truncation`].
    pub fn row(&self, mu: &Partition) -> Option<&SchurPoly> {
        self.rows.get(mu)
    }

    /// `⟨s_λ, s_μ[H]⟩`, or `None` when outside the table.
    pub fn restriction(&self, lambda: &Partition, mu: &Partition) -> Option<BigInt> {
        if lambda.size() > self.truncation {
            return None;
        }
        self.rows.get(mu).map(|row| row.coeff(lambda))
    }

    /// `f[H^⊥]` through degree `max_mu`. Requires `f` to have no terms above
    /// the truncation degree.
    pub fn frobenius(&self, f: &SchurPoly) -> TruncatedSeries {
        assert!(
            f.max_degree().unwrap_or(0) <= self.truncation,
            "argument exceeds table truncation"
        );
        let mut out = SchurPoly::zero();
        for (mu, row) in &self.rows {
            let c = hall_inner(f, row);
            if !c.is_zero() {
                out.add_term(mu.clone(), c);
            }
        }
        TruncatedSeries::new(&out, self.max_mu)
    }
}

/// Precomputed `s_μ[g]` for a fixed homogeneous `g` of degree `k ≥ 1` and
/// all `|μ| ≤ max_mu`, answering `f[g^⊥]` for `f` of degree `≤ k · max_mu`.
#[derive(Clone, Debug)]
pub struct AdjointTable {
    degree: usize,
    max_mu: usize,
    rows: BTreeMap<Partition, SchurPoly>,
}

impl AdjointTable {
    pub fn new(g: &SchurPoly, max_mu: usize) -> Result<Self> {
        let degree = match require_homogeneous(g, "inner argument of a plethysm adjoint")? {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Error::InvalidArgument(
                    "plethysm adjoint needs an inner argument of positive degree".into(),
                ))
            }
        };
        let mus: Vec<Partition> = partitions_up_to(max_mu).collect();
        let rows = mus
            .into_par_iter()
            .map(|mu| Ok((mu.clone(), plethysm(&SchurPoly::s(mu), g)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(AdjointTable {
            degree,
            max_mu,
            rows,
        })
    }

    /// `f[g^⊥]`; every degree of `f` divisible by `k` must be at most
    /// `k · max_mu` (other degrees contribute nothing).
    pub fn adjoint(&self, f: &SchurPoly) -> SchurPoly {
        assert!(
            f.max_degree().unwrap_or(0) / self.degree <= self.max_mu,
            "argument exceeds table range"
        );
        let mut out = SchurPoly::zero();
        for (mu, row) in &self.rows {
            out.add_term(mu.clone(), hall_inner(f, row));
        }
        out
    }

    /// `s_μ[g]`, if `|μ| ≤ max_mu`.
    pub fn row(&self, mu: &Partition) -> Option<&SchurPoly> {
        self.rows.get(mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn s(p: Partition) -> SchurPoly {
        SchurPoly::s(p)
    }

    #[test]
    fn small_plethysms() {
        let h2 = SchurPoly::h(2);
        assert_eq!(
            plethysm(&s(part![2]), &h2).unwrap(),
            SchurPoly::from_terms([(part![4], 1), (part![2, 2], 1)])
        );
        assert_eq!(plethysm(&s(part![1, 1]), &h2).unwrap(), s(part![3, 1]));
        assert_eq!(
            plethysm(&SchurPoly::e(2), &SchurPoly::h(3)).unwrap(),
            SchurPoly::from_terms([(part![5, 1], 1), (part![3, 3], 1)])
        );
        let f = s(part![2, 1]);
        assert_eq!(plethysm(&f, &SchurPoly::h(1)).unwrap(), f);
        assert_eq!(plethysm(&SchurPoly::h(1), &f).unwrap(), f);
    }

    #[test]
    fn plethysm_with_constants() {
        // s_λ[n] is the number of SSYT of shape λ with entries ≤ n
        let two = SchurPoly::constant(2);
        assert_eq!(
            plethysm(&s(part![2]), &two).unwrap(),
            SchurPoly::constant(3)
        );
        assert_eq!(
            plethysm(&s(part![1, 1]), &two).unwrap(),
            SchurPoly::constant(1)
        );
        assert_eq!(
            plethysm(&s(part![2, 1]), &two).unwrap(),
            SchurPoly::constant(2)
        );
        assert_eq!(
            plethysm(&SchurPoly::one(), &SchurPoly::h(3)).unwrap(),
            SchurPoly::one()
        );
    }

    #[test]
    fn truncated_plethysm_against_h() {
        let h3 = TruncatedSeries::h_series(3);
        let v = plethysm_truncated(&s(part![1]), &h3).unwrap();
        assert_eq!(v, h3);
        let h5 = TruncatedSeries::h_series(5);
        let v = plethysm_truncated(&SchurPoly::one(), &h5).unwrap();
        assert_eq!(v.value(), &SchurPoly::one());

        let h2 = TruncatedSeries::h_series(2);
        let v = plethysm_truncated(&s(part![2, 1]), &h2).unwrap();
        assert_eq!(
            v.value().homogeneous_component(2),
            SchurPoly::from_terms([(part![2], 2), (part![1, 1], 1)])
        );
    }

    #[test]
    fn adjoint_examples() {
        let f = s(part![3, 2]);
        assert_eq!(plethysm_adjoint(&f, &SchurPoly::h(1)).unwrap(), f);
        assert_eq!(
            plethysm_adjoint(&s(part![2, 2]), &SchurPoly::h(2)).unwrap(),
            s(part![2])
        );
        assert!(plethysm_adjoint(&s(part![3]), &SchurPoly::h(2))
            .unwrap()
            .is_zero());
        assert!(plethysm_adjoint(&f, &SchurPoly::one()).is_err());
    }

    /// `⟨f[g^⊥], u⟩ = ⟨f, u[g]⟩`.
    #[test]
    fn adjointness() {
        let gs = [
            SchurPoly::h(2),
            SchurPoly::e(2),
            SchurPoly::h(3),
            s(part![2, 1]),
        ];
        for g in &gs {
            let k = g.homogeneous_degree().unwrap();
            for d in 0..=6 {
                if d % k != 0 {
                    continue;
                }
                for lambda in enumerate_partitions(d, None, None) {
                    let f = s(lambda);
                    let adj = plethysm_adjoint(&f, g).unwrap();
                    for mu in enumerate_partitions(d / k, None, None) {
                        let u = s(mu);
                        assert_eq!(
                            hall_inner(&adj, &u),
                            hall_inner(&f, &plethysm(&u, g).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn adjoint_table_matches_direct() {
        let table = AdjointTable::new(&SchurPoly::h(2), 3).unwrap();
        for lambda in partitions_up_to(6) {
            let f = s(lambda);
            assert_eq!(
                table.adjoint(&f),
                plethysm_adjoint(&f, &SchurPoly::h(2)).unwrap()
            );
        }
    }

    #[test]
    fn frobenius_oracle_examples() {
        // C^n is the trivial plus the standard representation
        let fr = frobenius_oracle(&s(part![1]), 2).unwrap();
        assert_eq!(
            fr.value(),
            &SchurPoly::from_terms([(part![2], 1), (part![1, 1], 1), (part![1], 1)])
        );
        let fr = frobenius_oracle(&s(part![1, 1]), 3).unwrap();
        assert_eq!(fr.coeff(&part![2, 1]), Some(BigInt::from(1)));
        let fr = frobenius_oracle(&s(part![1, 1]), 2).unwrap();
        assert_eq!(fr.coeff(&part![2]), Some(BigInt::from(0)));
    }

    #[test]
    fn restriction_oracle_examples() {
        assert_eq!(
            restriction_oracle(&part![1, 1], &part![2, 1]).unwrap(),
            1.into()
        );
        assert_eq!(
            restriction_oracle(&part![1, 1], &part![2]).unwrap(),
            0.into()
        );
        assert_eq!(restriction_oracle(&part![], &part![4]).unwrap(), 1.into());
        assert_eq!(
            restriction_oracle(&part![], &part![3, 1]).unwrap(),
            0.into()
        );
    }

    /// Restriction coefficients are multiplicities, hence nonnegative.
    #[test]
    fn frobenius_coefficients_nonnegative() {
        let table = HPlethysmTable::new(6, 5).unwrap();
        for lambda in partitions_up_to(5) {
            let fr = table.frobenius(&s(lambda));
            assert!(fr.value().terms().all(|(_, c)| c > &BigInt::zero()));
        }
    }

    /// The degree-0 part of `s_μ[H]` is `s_μ[1]`, which is 1 for at most one
    /// row and 0 otherwise.
    #[test]
    fn degree_zero_terms() {
        let table = HPlethysmTable::new(4, 0).unwrap();
        for mu in partitions_up_to(4) {
            let expected = if mu.len() <= 1 { 1 } else { 0 };
            assert_eq!(
                table.restriction(&Partition::empty(), &mu),
                Some(BigInt::from(expected))
            );
        }
        assert!(table.restriction(&part![1], &part![1]).is_none());
    }
}
