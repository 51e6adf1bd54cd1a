//! Closed forms for plethysms `s_μ[h_r]` with `λ_1 ≤ r + 1`, for the adjoints
//! `h_λ[h_r^⊥]`, `e_λ[h_r^⊥]`, `f[H^⊥]`, and the restriction coefficients
//! `r_λ^μ` for partitions `λ` with at most three columns.
//!
//! Every function here refuses inputs outside the range where its formula
//! is proven, rather than falling back to brute force.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{is_horizontal_strip_pair, sub_partitions, IntVector, Partition, SkewShape};
use crate::schur::{
    e_product, h_product, natural_index, skew_schur_pair, vertical_strips, SchurPoly,
};
use crate::series::{HPrefixedSeries, TruncatedSeries};
use crate::tableaux::{count_lr_tableaux, enumerate_lr_tableaux, lr_contents, LRTableau};

fn require_columns(lambda: &Partition, max: usize, what: &str) -> Result<()> {
    if lambda.first() > max {
        return Err(Error::OutOfScope(format!(
            "{what} requires λ_1 ≤ {max}, got λ = ({lambda})"
        )));
    }
    Ok(())
}

fn require_three_columns(lambda: &Partition) -> Result<()> {
    require_columns(lambda, 3, "the three-column restriction formula")
}

/// `⟨s_λ, s_μ[h_0]⟩`: 1 iff `μ` has at most one row and `λ = ∅`.
fn h_zero_coeff(lambda: &Partition, mu: &Partition) -> u64 {
    u64::from(mu.len() <= 1 && lambda.is_empty())
}

/// `⟨s_λ, s_μ[h_r]⟩ ∈ {0, 1}` for `λ_1 ≤ r + 1`.
///
/// For even `r` the coefficient is 1 iff `ℓ(μ) ≤ r + 1` and
/// `λ^T_i = |μ| - μ_{r+2-i}`; for odd `r` iff `μ_1 ≤ r + 1` and
/// `λ^T_i = |μ| - μ^T_{r+2-i}`, for `1 ≤ i ≤ r + 1`. `r = 0` is the
/// degenerate case `s_μ[1]`.
pub fn plethysm_coeff_hr_closed(lambda: &Partition, mu: &Partition, r: usize) -> Result<u64> {
    require_columns(lambda, r + 1, "the closed form for ⟨s_λ, s_μ[h_r]⟩")?;
    if r == 0 {
        return Ok(h_zero_coeff(lambda, mu));
    }
    let n = r + 1;
    let basis = if r.is_multiple_of(2) {
        mu.clone()
    } else {
        mu.transpose()
    };
    if basis.len() > n {
        return Ok(0);
    }
    let lt = lambda.transpose().padded(n);
    let b = basis.padded(n);
    let ok = (0..n).all(|i| lt[i] + b[n - 1 - i] == mu.size());
    Ok(u64::from(ok))
}

/// `⟨s_λ, s_μ[h_r]⟩` for `λ_1 ≤ 3`, one case per `r ∈ {0, 1, 2, 3}` and a
/// final case for `r ≥ 4`.
pub fn plethysm_coeff_small_r(lambda: &Partition, mu: &Partition, r: usize) -> Result<u64> {
    require_three_columns(lambda)?;
    let hit = match r {
        0 => return Ok(h_zero_coeff(lambda, mu)),
        1 => lambda == mu,
        2 => {
            mu.len() <= 3 && {
                let (a, b, c) = (mu.part(0), mu.part(1), mu.part(2));
                let t = Partition::new(vec![a + b, a + c, b + c]).expect("decreasing");
                *lambda == t.transpose()
            }
        }
        3 => {
            mu.first() <= 1 && {
                let m = mu.len();
                *lambda == Partition::new(vec![m, m, m]).expect("constant").transpose()
            }
        }
        _ => mu.is_empty() && lambda.is_empty(),
    };
    Ok(u64::from(hit))
}

/// `s_λ[h_r^⊥]` for `λ_1 ≤ r + 1`.
///
/// With `q = |λ|/r`, this is the Schur function indexed by
/// `(q - λ^T_{r+1}, …, q - λ^T_1)` (transposed for odd `r`), or zero when
/// `q - λ^T_1 ∉ N`. For `r = 0` it is `H` if `λ = ∅` and zero otherwise.
pub fn s_lambda_hr_perp_closed(
    lambda: &Partition,
    r: usize,
    max_degree: usize,
) -> Result<TruncatedSeries> {
    require_columns(lambda, r + 1, "the closed form for s_λ[h_r^⊥]")?;
    if r == 0 {
        return Ok(if lambda.is_empty() {
            TruncatedSeries::h_series(max_degree)
        } else {
            TruncatedSeries::zero(max_degree)
        });
    }
    let n = r + 1;
    let lt = lambda.transpose().padded(n);
    let size = lambda.size() as i64;
    let mut parts = Vec::with_capacity(n);
    for i in (0..n).rev() {
        match natural_index(size - r as i64 * lt[i] as i64, r as i64) {
            Some(m) => parts.push(m),
            None => return Ok(TruncatedSeries::zero(max_degree)),
        }
    }
    let nu = Partition::new(parts).expect("λ^T is decreasing, so the index is");
    let nu = if r % 2 == 1 { nu.transpose() } else { nu };
    Ok(TruncatedSeries::new(&SchurPoly::s(nu), max_degree))
}

/// The five cases of `s_λ[h_r^⊥]` for `λ_1 ≤ 3`, written out separately
/// for `r = 0, 1, 2, 3` and `r ≥ 4`.
pub fn s_lambda_h_perp_three_columns(
    lambda: &Partition,
    r: usize,
    max_degree: usize,
) -> Result<TruncatedSeries> {
    require_three_columns(lambda)?;
    let lt = lambda.transpose().padded(3);
    let (a, b, c) = (lt[0] as i64, lt[1] as i64, lt[2] as i64);
    let value = match r {
        0 => {
            return Ok(if lambda.is_empty() {
                TruncatedSeries::h_series(max_degree)
            } else {
                TruncatedSeries::zero(max_degree)
            })
        }
        1 => SchurPoly::s(lambda.clone()),
        2 => match (
            natural_index(a + b - c, 2),
            natural_index(a - b + c, 2),
            natural_index(-a + b + c, 2),
        ) {
            (Some(x), Some(y), Some(z)) => {
                SchurPoly::s(Partition::new(vec![x, y, z]).expect("decreasing"))
            }
            _ => SchurPoly::zero(),
        },
        3 if a == b && b == c => SchurPoly::e(lt[0]),
        3 => SchurPoly::zero(),
        _ if lambda.is_empty() => SchurPoly::one(),
        _ => SchurPoly::zero(),
    };
    Ok(TruncatedSeries::new(&value, max_degree))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    H,
    E,
}

/// `Σ_M Π_j (h or e)_{M(j)}` over `M: parts → N` with `Σ M(j) j = target`.
///
/// Every part vector must be nonzero. Products of total degree
/// `Σ M(j) > max_total` are skipped.
fn sum_over_vector_partitions(
    target: &[usize],
    parts: &[(Vec<usize>, Factor)],
    max_total: Option<usize>,
) -> SchurPoly {
    // Usable parts fit under the target componentwise.
    let parts: Vec<&(Vec<usize>, Factor)> = parts
        .iter()
        .filter(|(j, _)| j.iter().zip(target).all(|(a, b)| a <= b))
        .collect();
    debug_assert!(parts.iter().all(|(j, _)| j.iter().any(|&x| x > 0)));
    let mut products: std::collections::BTreeMap<(Vec<usize>, Vec<usize>), u64> =
        Default::default();
    let mut remaining = target.to_vec();
    let mut mult = vec![0usize; parts.len()];
    fn walk(
        k: usize,
        parts: &[&(Vec<usize>, Factor)],
        remaining: &mut Vec<usize>,
        mult: &mut Vec<usize>,
        total: usize,
        max_total: Option<usize>,
        products: &mut std::collections::BTreeMap<(Vec<usize>, Vec<usize>), u64>,
    ) {
        if k == parts.len() {
            if remaining.iter().all(|&x| x == 0) {
                let mut hs = Vec::new();
                let mut es = Vec::new();
                for (m, (_, kind)) in mult.iter().zip(parts) {
                    if *m > 0 {
                        match kind {
                            Factor::H => hs.push(*m),
                            Factor::E => es.push(*m),
                        }
                    }
                }
                hs.sort_unstable();
                es.sort_unstable();
                *products.entry((hs, es)).or_insert(0) += 1;
            }
            return;
        }
        let j = &parts[k].0;
        let max_m = j
            .iter()
            .zip(remaining.iter())
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| b / a)
            .min()
            .expect("nonzero part");
        for m in 0..=max_m {
            if max_total.is_some_and(|cap| total + m > cap) {
                break;
            }
            for (r, a) in remaining.iter_mut().zip(j) {
                *r -= m * a;
            }
            mult[k] = m;
            walk(
                k + 1,
                parts,
                remaining,
                mult,
                total + m,
                max_total,
                products,
            );
            for (r, a) in remaining.iter_mut().zip(j) {
                *r += m * a;
            }
        }
        mult[k] = 0;
    }
    walk(
        0,
        &parts,
        &mut remaining,
        &mut mult,
        0,
        max_total,
        &mut products,
    );

    let mut out = SchurPoly::zero();
    for ((hs, es), count) in products {
        let prod = es.iter().fold(h_product(&hs), |acc, &m| acc.mul_e(m));
        out += &prod.scale(&BigInt::from(count));
    }
    out
}

/// All vectors in `{0, …, bound_1} × ⋯ × {0, …, bound_ℓ}` except zero.
fn nonzero_boxes(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out
}

/// Weak compositions of `r` into `ℓ` parts.
pub fn weak_compositions(len: usize, r: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if r == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=r).rev() {
        for mut rest in weak_compositions(len - 1, r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// 0/1 vectors of length `ℓ` and weight `r`.
pub fn binary_vectors(len: usize, r: usize) -> Vec<Vec<usize>> {
    weak_compositions(len, r)
        .into_iter()
        .filter(|v| v.iter().all(|&x| x <= 1))
        .collect()
}

/// `h_λ[H^⊥] = H · Σ_M Π_{j ≠ 0} h_{M(j)}` over `M: N^ℓ → N` with
/// `Σ M(j) j = λ`. The `j = 0` factor of the full sum is the leading `H`.
/// Terms of the finite factor above `max_degree` are dropped.
pub fn frobenius_h_closed(lambda: &IntVector, max_degree: usize) -> HPrefixedSeries {
    let parts: Vec<_> = nonzero_boxes(lambda.entries())
        .into_iter()
        .map(|j| (j, Factor::H))
        .collect();
    HPrefixedSeries::new(sum_over_vector_partitions(
        lambda.entries(),
        &parts,
        Some(max_degree),
    ))
}

/// `e_λ[H^⊥] = H · Σ_M Π_{j ≠ 0}` (`h_{M(j)}` for even weight `j`,
/// `e_{M(j)}` for odd) over `M: {0,1}^ℓ → N` with `Σ M(j) j = λ`.
pub fn frobenius_e_closed(lambda: &IntVector, max_degree: usize) -> HPrefixedSeries {
    let bounds: Vec<usize> = lambda.entries().iter().map(|&x| x.min(1)).collect();
    let parts: Vec<_> = nonzero_boxes(&bounds)
        .into_iter()
        .map(|j| {
            let kind = if j.iter().sum::<usize>() % 2 == 0 {
                Factor::H
            } else {
                Factor::E
            };
            (j, kind)
        })
        .collect();
    HPrefixedSeries::new(sum_over_vector_partitions(
        lambda.entries(),
        &parts,
        Some(max_degree),
    ))
}

/// `h_λ[h_r^⊥] = Σ_M Π_j h_{M(j)}` over `M: WC(ℓ, r) → N` with
/// `Σ M(j) j = λ`, for `r ≥ 1`. See [`h_lambda_h0_perp`] for `r = 0`.
pub fn h_lambda_hr_perp_closed(lambda: &IntVector, r: usize) -> Result<SchurPoly> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "r = 0 gives a series; use h_lambda_h0_perp".into(),
        ));
    }
    let parts: Vec<_> = weak_compositions(lambda.len(), r)
        .into_iter()
        .map(|j| (j, Factor::H))
        .collect();
    Ok(sum_over_vector_partitions(lambda.entries(), &parts, None))
}

/// `h_λ[h_0^⊥]`: `H` when `λ = 0`, else zero.
pub fn h_lambda_h0_perp(lambda: &IntVector) -> HPrefixedSeries {
    if lambda.is_zero() {
        HPrefixedSeries::h()
    } else {
        HPrefixedSeries::zero()
    }
}

/// `e_λ[h_r^⊥] = Σ_M Π_j (h_{M(j)} if r is even, else e_{M(j)})` over
/// `M: B(ℓ, r) → N` with `Σ M(j) j = λ`, for `r ≥ 1`.
pub fn e_lambda_hr_perp_closed(lambda: &IntVector, r: usize) -> Result<SchurPoly> {
    if r == 0 {
        return Err(Error::InvalidArgument("e_λ[h_r^⊥] needs r ≥ 1".into()));
    }
    let kind = if r.is_multiple_of(2) {
        Factor::H
    } else {
        Factor::E
    };
    let parts: Vec<_> = binary_vectors(lambda.len(), r)
        .into_iter()
        .map(|j| (j, kind))
        .collect();
    Ok(sum_over_vector_partitions(lambda.entries(), &parts, None))
}

/// `e_λ[h_r^⊥]` for `λ ∈ Z^{r+1}`: `Π_i h_{|λ|/r - λ_i}` for even `r`,
/// `Π_i e_{|λ|/r - λ_i}` for odd `r`, with `h_m = e_m = 0` for `m ∉ N`.
pub fn e_vector_hr_perp_special(lambda: &[i64], r: usize) -> Result<SchurPoly> {
    if r == 0 {
        return Err(Error::InvalidArgument("needs r ≥ 1".into()));
    }
    if lambda.len() != r + 1 {
        return Err(Error::InvalidArgument(format!(
            "vector must have length r + 1 = {}, got {}",
            r + 1,
            lambda.len()
        )));
    }
    let total: i64 = lambda.iter().sum();
    let r = r as i64;
    let Some(indices) = lambda
        .iter()
        .map(|&x| natural_index(total - r * x, r))
        .collect::<Option<Vec<_>>>()
    else {
        return Ok(SchurPoly::zero());
    };
    Ok(if r % 2 == 0 {
        h_product(&indices)
    } else {
        e_product(&indices)
    })
}

/// The Schur index `((ν_1+ν_2-ν_3-r)/2, (ν_1-ν_2+ν_3-r)/2, (-ν_1+ν_2+ν_3-r)/2)`
/// with `ν` padded to three parts, or `None` unless the last entry is a
/// nonnegative integer (the other two then are too).
pub fn three_column_index(nu: &Partition, r: usize) -> Option<Partition> {
    if nu.len() > 3 {
        return None;
    }
    let p = nu.padded(3);
    let (a, b, c, r) = (p[0] as i64, p[1] as i64, p[2] as i64, r as i64);
    let z = natural_index(-a + b + c - r, 2)?;
    let x = natural_index(a + b - c - r, 2)?;
    let y = natural_index(a - b + c - r, 2)?;
    Some(Partition::new(vec![x, y, z]).expect("ν decreasing makes the index decreasing"))
}

/// The `(r, ν)` pairs in the three-column formula: `ν^T ⊆ λ`, and `r` with
/// `(-ν_1+ν_2+ν_3-r)/2 ∈ N`, in a fixed order.
fn three_column_terms(lambda: &Partition) -> Vec<(usize, Partition, Partition)> {
    let mut out = Vec::new();
    for kappa in sub_partitions(lambda) {
        let nu = kappa.transpose();
        assert!(nu.len() <= 3, "ν^T ⊆ λ with λ_1 ≤ 3 bounds ℓ(ν)");
        let p = nu.padded(3);
        let slack = (p[1] + p[2]).saturating_sub(p[0]);
        for r in 0..=slack {
            if let Some(alpha) = three_column_index(&nu, r) {
                out.push((r, nu.clone(), alpha));
            }
        }
    }
    out
}

/// `s_λ[H^⊥] = H · Σ_{r,ν} e_r s_α s_{λ/ν^T}` for `λ_1 ≤ 3`, with `α` the
/// [`three_column_index`] of `(ν, r)`. Summands above `max_degree` are
/// dropped.
pub fn frobenius_three_columns(lambda: &Partition, max_degree: usize) -> Result<HPrefixedSeries> {
    require_three_columns(lambda)?;
    let terms = three_column_terms(lambda);
    let pieces: Vec<SchurPoly> = terms
        .par_iter()
        .filter(|(r, nu, alpha)| r + alpha.size() + lambda.size() - nu.size() <= max_degree)
        .map(|(r, nu, alpha)| {
            skew_schur_pair(lambda, &nu.transpose())
                .multiply(&SchurPoly::s(alpha.clone()))
                .mul_e(*r)
        })
        .collect();
    let mut q = SchurPoly::zero();
    for piece in &pieces {
        q += piece;
    }
    Ok(HPrefixedSeries::new(q))
}

/// `r_λ^μ` read off [`frobenius_three_columns`].
pub fn restriction_via_main(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    Ok(frobenius_three_columns(lambda, mu.size())?.coeff(mu))
}

/// One witness `(r, ν, λ^(1), λ^(2), λ^(3), T^(1), T^(2))` for `r_λ^μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionTuple {
    pub r: usize,
    pub nu: Partition,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub lambda3: Partition,
    pub t1: LRTableau,
    pub t2: LRTableau,
}

impl RestrictionTuple {
    /// Checks every defining condition against `λ` and `μ`.
    pub fn is_valid_for(&self, lambda: &Partition, mu: &Partition) -> bool {
        let Some(alpha) = three_column_index(&self.nu, self.r) else {
            return false;
        };
        let nu_t = self.nu.transpose();
        self.t1.is_valid()
            && self.t2.is_valid()
            && self.t1.shape().outer() == lambda
            && self.t1.shape().inner() == &nu_t
            && self.t1.content() == self.lambda1
            && self.t2.shape().outer() == &self.lambda2
            && self.t2.shape().inner() == &self.lambda1
            && self.t2.content() == alpha
            && self.lambda3.size() == self.lambda2.size() + self.r
            && crate::partition::is_vertical_strip_pair(&self.lambda3, &self.lambda2)
            && is_horizontal_strip_pair(mu, &self.lambda3)
    }
}

/// Calls `visit(r, ν, α, λ^(1), λ^(2))` for every chain of shapes that can
/// start a tuple; the tableaux and `λ^(3)` are chosen by the caller.
fn for_each_chain(
    lambda: &Partition,
    mu: &Partition,
    mut visit: impl FnMut(usize, &Partition, &Partition, &Partition, &Partition),
) {
    let inside_mu = sub_partitions(mu);
    for (r, nu, alpha) in three_column_terms(lambda) {
        let nu_t = nu.transpose();
        let shape = SkewShape::new(lambda.clone(), nu_t).expect("ν^T ⊆ λ");
        for lambda1 in lr_contents(&shape).into_keys() {
            let target = lambda1.size() + alpha.size();
            for lambda2 in inside_mu
                .iter()
                .filter(|p| p.size() == target && p.contains(&lambda1))
            {
                visit(r, &nu, &alpha, &lambda1, lambda2);
            }
        }
    }
}

/// The admissible `λ^(3)` for given `λ^(2)`, `r`, `μ`.
fn third_shapes(lambda2: &Partition, r: usize, mu: &Partition) -> Vec<Partition> {
    vertical_strips(lambda2, r)
        .into_iter()
        .filter(|l3| mu.contains(l3) && is_horizontal_strip_pair(mu, l3))
        .collect()
}

/// Every [`RestrictionTuple`] for `(λ, μ)`, `λ_1 ≤ 3`.
pub fn enumerate_restriction_tuples(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Vec<RestrictionTuple>> {
    require_three_columns(lambda)?;
    let mut out = Vec::new();
    for_each_chain(lambda, mu, |r, nu, alpha, lambda1, lambda2| {
        let thirds = third_shapes(lambda2, r, mu);
        if thirds.is_empty() {
            return;
        }
        let shape1 = SkewShape::new(lambda.clone(), nu.transpose()).expect("ν^T ⊆ λ");
        let shape2 = SkewShape::new(lambda2.clone(), lambda1.clone()).expect("λ^(1) ⊆ λ^(2)");
        let t2s = enumerate_lr_tableaux(&shape2, alpha);
        if t2s.is_empty() {
            return;
        }
        for t1 in enumerate_lr_tableaux(&shape1, lambda1) {
            for t2 in &t2s {
                for lambda3 in &thirds {
                    out.push(RestrictionTuple {
                        r,
                        nu: nu.clone(),
                        lambda1: lambda1.clone(),
                        lambda2: lambda2.clone(),
                        lambda3: lambda3.clone(),
                        t1: t1.clone(),
                        t2: t2.clone(),
                    });
                }
            }
        }
    });
    Ok(out)
}

/// The number of [`RestrictionTuple`]s for `(λ, μ)`, counted without
/// materializing them.
pub fn count_restriction_tuples(lambda: &Partition, mu: &Partition) -> Result<u64> {
    require_three_columns(lambda)?;
    let mut total = 0u64;
    for_each_chain(lambda, mu, |r, nu, alpha, lambda1, lambda2| {
        let thirds = third_shapes(lambda2, r, mu).len() as u64;
        if thirds == 0 {
            return;
        }
        let shape1 = SkewShape::new(lambda.clone(), nu.transpose()).expect("ν^T ⊆ λ");
        let shape2 = SkewShape::new(lambda2.clone(), lambda1.clone()).expect("λ^(1) ⊆ λ^(2)");
        let t1 = count_lr_tableaux(&shape1, lambda1);
        let t2 = count_lr_tableaux(&shape2, alpha);
        total += t1 * t2 * thirds;
    });
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_up_to;
    use crate::plethysm::{plethysm, plethysm_adjoint, restriction_oracle};
    use crate::schur::{e_to_schur, h_to_schur};

    fn s(p: Partition) -> SchurPoly {
        SchurPoly::s(p)
    }

    fn iv(v: &[usize]) -> IntVector {
        IntVector::new(v.to_vec())
    }

    #[test]
    fn hr_closed_examples() {
        assert_eq!(
            plethysm_coeff_hr_closed(&part![2, 2], &part![2], 2).unwrap(),
            1
        );
        assert_eq!(
            plethysm_coeff_hr_closed(&part![3, 3], &part![1, 1], 3).unwrap(),
            1
        );
        assert_eq!(plethysm_coeff_hr_closed(&part![], &part![], 5).unwrap(), 1);
        assert!(matches!(
            plethysm_coeff_hr_closed(&part![4], &part![2], 2),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn hr_closed_matches_brute_force_small() {
        for r in 1..=3 {
            for m in 0..=2 {
                for mu in crate::partition::enumerate_partitions(m, None, None) {
                    let pl = plethysm(&s(mu.clone()), &SchurPoly::h(r)).unwrap();
                    for lambda in crate::partition::enumerate_partitions(m * r, Some(r + 1), None) {
                        let closed = plethysm_coeff_hr_closed(&lambda, &mu, r).unwrap();
                        assert_eq!(BigInt::from(closed), pl.coeff(&lambda), "{lambda} {mu} {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_r_examples() {
        assert_eq!(
            plethysm_coeff_small_r(&part![3, 2, 1], &part![2, 1], 2).unwrap(),
            1
        );
        assert_eq!(
            plethysm_coeff_small_r(&part![2, 2, 1], &part![2, 2, 1], 1).unwrap(),
            1
        );
        // e_2[h_3] = s_{5,1} + s_{3,3}
        assert_eq!(
            plethysm_coeff_small_r(&part![3, 3], &part![1, 1], 3).unwrap(),
            1
        );
        assert_eq!(
            plethysm_coeff_small_r(&part![2, 2, 2], &part![1, 1], 3).unwrap(),
            0
        );
        assert!(plethysm_coeff_small_r(&part![4], &part![1], 4).is_err());
    }

    #[test]
    fn small_r_agrees_with_general() {
        for r in 0..=6 {
            for lambda in partitions_up_to(9).filter(|l| l.first() <= 3.min(r + 1)) {
                for mu in partitions_up_to(4) {
                    assert_eq!(
                        plethysm_coeff_small_r(&lambda, &mu, r).unwrap(),
                        plethysm_coeff_hr_closed(&lambda, &mu, r).unwrap(),
                        "{lambda} {mu} {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn s_perp_examples() {
        let v = s_lambda_hr_perp_closed(&part![3, 1], 2, 10).unwrap();
        assert_eq!(v.value(), &s(part![1, 1]));
        let v = s_lambda_hr_perp_closed(&part![2, 2], 2, 10).unwrap();
        assert_eq!(v.value(), &s(part![2]));
        let v = s_lambda_hr_perp_closed(&part![], 4, 10).unwrap();
        assert_eq!(v.value(), &SchurPoly::one());
        let v = s_lambda_hr_perp_closed(&part![2, 2, 1], 1, 10).unwrap();
        assert_eq!(v.value(), &s(part![2, 2, 1]));
        let v = s_lambda_hr_perp_closed(&part![], 0, 3).unwrap();
        assert_eq!(v, TruncatedSeries::h_series(3));
        assert!(s_lambda_hr_perp_closed(&part![1], 0, 3)
            .unwrap()
            .value()
            .is_zero());
    }

    #[test]
    fn s_perp_against_adjoint() {
        for r in 1..=3 {
            for lambda in partitions_up_to(8).filter(|l| l.first() <= r + 1) {
                let closed = s_lambda_hr_perp_closed(&lambda, r, 8).unwrap();
                let brute = plethysm_adjoint(&s(lambda.clone()), &SchurPoly::h(r)).unwrap();
                assert_eq!(closed.value(), &brute, "{lambda} r={r}");
                if lambda.first() <= 3 {
                    let cases = s_lambda_h_perp_three_columns(&lambda, r, 8).unwrap();
                    assert_eq!(cases.value(), &brute, "{lambda} r={r}");
                }
            }
        }
    }

    #[test]
    fn frobenius_h_examples() {
        let f = frobenius_h_closed(&iv(&[2]), 10);
        assert_eq!(f.factor(), &(SchurPoly::h(1) + SchurPoly::h(2)));
        let f = frobenius_h_closed(&iv(&[3]), 10);
        let expected = &(&SchurPoly::h(1) + &SchurPoly::h(1).mul_h(1)) + &SchurPoly::h(3);
        assert_eq!(f.factor(), &expected);
        assert_eq!(frobenius_h_closed(&iv(&[]), 10), HPrefixedSeries::h());
    }

    #[test]
    fn frobenius_e_examples() {
        assert_eq!(frobenius_e_closed(&iv(&[2]), 10).factor(), &SchurPoly::e(2));
        let f = frobenius_e_closed(&iv(&[1, 1]), 10);
        assert_eq!(f.factor(), &(&SchurPoly::h(1) + &SchurPoly::e(1).mul_e(1)));
        assert_eq!(frobenius_e_closed(&iv(&[0, 0]), 10), HPrefixedSeries::h());
    }

    #[test]
    fn he_perp_examples() {
        let v = h_lambda_hr_perp_closed(&iv(&[2, 2]), 2).unwrap();
        assert_eq!(v, &SchurPoly::h(2) + &SchurPoly::h(1).mul_h(1));
        assert_eq!(
            h_lambda_hr_perp_closed(&iv(&[0, 0]), 3).unwrap(),
            SchurPoly::one()
        );
        assert_eq!(
            h_lambda_hr_perp_closed(&iv(&[1]), 1).unwrap(),
            SchurPoly::h(1)
        );
        assert!(h_lambda_hr_perp_closed(&iv(&[1]), 0).is_err());
        assert_eq!(h_lambda_h0_perp(&iv(&[0, 0])), HPrefixedSeries::h());
        assert!(h_lambda_h0_perp(&iv(&[1])).factor().is_zero());

        let h11 = SchurPoly::h(1).mul_h(1);
        assert_eq!(e_lambda_hr_perp_closed(&iv(&[2, 1, 1]), 2).unwrap(), h11);
        assert_eq!(e_lambda_hr_perp_closed(&iv(&[1, 1]), 1).unwrap(), h11);
        assert_eq!(
            e_lambda_hr_perp_closed(&iv(&[0, 0]), 2).unwrap(),
            SchurPoly::one()
        );
    }

    #[test]
    fn he_perp_against_adjoint() {
        for r in 1..=2 {
            for len in 1..=3 {
                for v in crate::partition::int_vectors_up_to(len, 6) {
                    let h = h_to_schur(&v);
                    let e = e_to_schur(&v);
                    let g = SchurPoly::h(r);
                    assert_eq!(
                        h_lambda_hr_perp_closed(&v, r).unwrap(),
                        plethysm_adjoint(&h, &g).unwrap(),
                        "h {v} r={r}"
                    );
                    assert_eq!(
                        e_lambda_hr_perp_closed(&v, r).unwrap(),
                        plethysm_adjoint(&e, &g).unwrap(),
                        "e {v} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn special_vector_examples() {
        let h11 = SchurPoly::h(1).mul_h(1);
        assert_eq!(e_vector_hr_perp_special(&[2, 1, 1], 2).unwrap(), h11);
        assert_eq!(
            e_vector_hr_perp_special(&[1, 1, 1, 0], 3).unwrap(),
            s(part![1])
        );
        assert!(e_vector_hr_perp_special(&[2, 0, 0], 2).unwrap().is_zero());
        assert!(e_vector_hr_perp_special(&[2, 0], 2).is_err());
    }

    #[test]
    fn three_columns_examples() {
        assert_eq!(
            frobenius_three_columns(&part![1, 1], 10).unwrap().factor(),
            &s(part![1, 1])
        );
        assert_eq!(
            frobenius_three_columns(&part![1], 10).unwrap().factor(),
            &s(part![1])
        );
        let expected = SchurPoly::from_terms([
            (part![3], 1),
            (part![2], 1),
            (part![1, 1], 1),
            (part![1], 1),
        ]);
        assert_eq!(
            frobenius_three_columns(&part![3], 10).unwrap().factor(),
            &expected
        );
        assert_eq!(
            frobenius_three_columns(&part![3], 10).unwrap(),
            frobenius_h_closed(&iv(&[3]), 10)
        );
        assert!(frobenius_three_columns(&part![4], 10).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            restriction_via_main(&part![1, 1], &part![2, 1]).unwrap(),
            1.into()
        );
        assert_eq!(
            restriction_via_main(&part![1, 1, 1], &part![2, 1, 1]).unwrap(),
            1.into()
        );
        assert_eq!(
            restriction_via_main(&part![1, 1], &part![3]).unwrap(),
            0.into()
        );

        assert_eq!(
            count_restriction_tuples(&part![1, 1], &part![2, 1]).unwrap(),
            1
        );
        assert_eq!(
            count_restriction_tuples(&part![1, 1], &part![2]).unwrap(),
            0
        );
        assert_eq!(count_restriction_tuples(&part![], &part![3]).unwrap(), 1);

        let tuples = enumerate_restriction_tuples(&part![1, 1], &part![2, 1]).unwrap();
        assert_eq!(tuples.len(), 1);
        let t = &tuples[0];
        assert_eq!((t.r, t.nu.clone()), (0, part![]));
        assert_eq!(t.lambda1, part![1, 1]);
        assert_eq!(t.lambda2, part![1, 1]);
        assert_eq!(t.lambda3, part![1, 1]);
        assert!(t.is_valid_for(&part![1, 1], &part![2, 1]));
    }

    #[test]
    fn triple_agreement_small() {
        for lambda in partitions_up_to(4).filter(|l| l.first() <= 3) {
            for mu in partitions_up_to(4) {
                let oracle = restriction_oracle(&lambda, &mu).unwrap();
                let main = restriction_via_main(&lambda, &mu).unwrap();
                let tuples = enumerate_restriction_tuples(&lambda, &mu).unwrap();
                assert!(tuples.iter().all(|t| t.is_valid_for(&lambda, &mu)));
                let count = count_restriction_tuples(&lambda, &mu).unwrap();
                assert_eq!(tuples.len() as u64, count);
                assert_eq!(main, oracle, "{lambda} {mu}");
                assert_eq!(BigInt::from(count), oracle, "{lambda} {mu}");
            }
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(
            weak_compositions(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(binary_vectors(3, 2).len(), 3);
        assert_eq!(weak_compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(weak_compositions(0, 1).is_empty());
    }
}
