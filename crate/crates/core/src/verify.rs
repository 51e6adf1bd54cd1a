//! Brute-force oracles and exhaustive differential sweeps.
//!
//! The monomial-substitution plethysm here shares no code with the
//! power-sum path: it works with explicit polynomials in finitely many
//! variables, builds `h_k` and `e_k` of the substituted monomials by Newton's
//! identities, applies Jacobi–Trudi as a polynomial determinant, and reads
//! the Schur expansion back by leading-term subtraction with Kostka numbers.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::formulas::{
    count_restriction_tuples, e_lambda_hr_perp_closed, e_vector_hr_perp_special,
    frobenius_e_closed, frobenius_h_closed, frobenius_three_columns, h_lambda_hr_perp_closed,
    plethysm_coeff_hr_closed, s_lambda_h_perp_three_columns, s_lambda_hr_perp_closed,
};
use crate::partition::{
    enumerate_partitions, int_vectors_up_to, partitions_up_to, IntVector, Partition,
};
use crate::plethysm::{plethysm, AdjointTable, HPlethysmTable};
use crate::power_sum::{from_power_sum, to_power_sum};
use crate::schur::{
    e_to_schur, h_to_schur, jacobi_trudi_e, jacobi_trudi_h, require_homogeneous, skew_schur_pair,
    SchurPoly,
};
use crate::series::TruncatedSeries;

/// Largest number of variables the packed exponent encoding supports.
const MAX_VARIABLES: usize = 21;
const BITS: u32 = 6;

/// A polynomial in at most [`MAX_VARIABLES`] variables; each exponent is a
/// 6-bit field of the key, so adding keys multiplies monomials.
type Poly = HashMap<u128, BigInt>;

fn pack(exponents: &[usize]) -> u128 {
    exponents.iter().enumerate().fold(0u128, |acc, (i, &e)| {
        acc | ((e as u128) << (BITS * i as u32))
    })
}

fn unpack(key: u128, vars: usize) -> Vec<usize> {
    (0..vars)
        .map(|i| ((key >> (BITS * i as u32)) & ((1 << BITS) - 1)) as usize)
        .collect()
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::with_capacity(a.len().max(b.len()));
    for (ka, ca) in a {
        for (kb, cb) in b {
            *out.entry(ka + kb).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add_scaled(acc: &mut Poly, p: &Poly, c: &BigInt) {
    for (k, x) in p {
        *acc.entry(*k).or_insert_with(BigInt::zero) += x * c;
    }
}

fn poly_one() -> Poly {
    Poly::from([(0u128, BigInt::one())])
}

/// Number of semistandard tableaux of shape `λ` and content `β` (any order).
struct Kostka {
    memo: HashMap<(Partition, Vec<usize>), u64>,
}

impl Kostka {
    fn new() -> Self {
        Kostka {
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, lambda: &Partition, content: &[usize]) -> u64 {
        let content: Vec<usize> = content.iter().copied().filter(|&x| x > 0).collect();
        if content.iter().sum::<usize>() != lambda.size() {
            return 0;
        }
        self.count(lambda, &content)
    }

    /// Strips the largest entry, which occupies a horizontal strip.
    fn count(&mut self, lambda: &Partition, content: &[usize]) -> u64 {
        if content.is_empty() {
            return u64::from(lambda.is_empty());
        }
        let key = (lambda.clone(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (&last, rest) = content.split_last().expect("nonempty");
        let mut total = 0;
        for kappa in remove_horizontal_strips(lambda, last) {
            total += self.count(&kappa, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Every `κ ⊆ λ` with `λ/κ` a horizontal strip of `r` boxes.
fn remove_horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == lambda.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(current.clone()));
            }
            return;
        }
        // κ_i ranges over [λ_{i+1}, λ_i].
        let lo = lambda.part(row + 1);
        let hi = lambda.part(row);
        for k in (lo..=hi).rev() {
            let taken = hi - k;
            if taken > left {
                break;
            }
            current.push(k);
            go(lambda, row + 1, left - taken, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, r, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `len` parts.
fn compositions(len: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == len {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=n).rev() {
            cur.push(k);
            go(len, n - k, cur, out);
            cur.pop();
        }
    }
    if len == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(len, n, &mut Vec::new(), &mut out);
    out
}

/// Signed multisets of indices in `det(x_{α_i - i + j})`, negative indices
/// dropped (those entries are zero).
fn determinant_terms(alpha: &[i64]) -> BTreeMap<Vec<usize>, i64> {
    let n = alpha.len();
    let mut out = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm; the sign flips with every swap.
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let record = |perm: &[usize], sign: i64, out: &mut BTreeMap<Vec<usize>, i64>| {
        let mut idx = Vec::with_capacity(n);
        for (i, &j) in perm.iter().enumerate() {
            let m = alpha[i] - i as i64 + j as i64;
            if m < 0 {
                return;
            }
            idx.push(m as usize);
        }
        idx.sort_unstable();
        *out.entry(idx).or_insert(0) += sign;
    };
    record(&perm, sign, &mut out);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            record(&perm, sign, &mut out);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `f[g]` for homogeneous `f`, `g` by monomial substitution:
/// `f[M_1 + ⋯ + M_N] = f(M_1, …, M_N)` with `g` written as a sum of
/// monomials in `D = deg f · deg g` variables.
///
/// Fails with [`Error::CapExceeded`] when `deg f · deg g > cap`.
pub fn monomial_substitution_plethysm(
    f: &SchurPoly,
    g: &SchurPoly,
    cap: usize,
) -> Result<SchurPoly> {
    let df = require_homogeneous(f, "outer argument")?;
    let dg = require_homogeneous(g, "inner argument")?.unwrap_or(0);
    let Some(df) = df else {
        return Ok(SchurPoly::zero());
    };
    let n = df * dg;
    if n > cap || n > MAX_VARIABLES {
        return Err(Error::CapExceeded {
            product: n,
            cap: cap.min(MAX_VARIABLES),
        });
    }
    let vars = n;
    let mut kostka = Kostka::new();

    // g as a polynomial in `vars` variables.
    let mut g_poly = Poly::new();
    for alpha in compositions(vars, dg) {
        let mut sorted = alpha.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut c = BigInt::zero();
        for (lambda, x) in g.terms() {
            let k = kostka.get(lambda, &sorted);
            if k > 0 {
                c += x * BigInt::from(k);
            }
        }
        if !c.is_zero() {
            g_poly.insert(pack(&alpha), c);
        }
    }

    // Power sums of the substituted monomials: p_i(M) = g(x_1^i, …).
    // Multiplying a packed key by i multiplies every exponent by i.
    let p: Vec<Poly> = (0..=df)
        .map(|i| {
            g_poly
                .iter()
                .map(|(k, c)| (k * i as u128, c.clone()))
                .collect()
        })
        .collect();

    // Newton: k h_k = Σ p_i h_{k-i}, k e_k = Σ (-1)^{i-1} p_i e_{k-i}.
    let mut hs = vec![poly_one()];
    let mut es = vec![poly_one()];
    for k in 1..=df {
        let mut h = Poly::new();
        let mut e = Poly::new();
        for i in 1..=k {
            let sign = if i % 2 == 1 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            poly_add_scaled(&mut h, &poly_mul(&p[i], &hs[k - i]), &BigInt::one());
            poly_add_scaled(&mut e, &poly_mul(&p[i], &es[k - i]), &sign);
        }
        let kk = BigInt::from(k);
        for poly in [&mut h, &mut e] {
            poly.retain(|_, c| !c.is_zero());
            for c in poly.values_mut() {
                debug_assert!((&*c % &kk).is_zero(), "Newton division must be exact");
                *c = &*c / &kk;
            }
        }
        hs.push(h);
        es.push(e);
    }

    // f(M) by Jacobi–Trudi on the shorter side of each shape.
    let mut value = Poly::new();
    let mut product_cache: HashMap<(bool, Vec<usize>), Poly> = HashMap::new();
    for (lambda, c) in f.terms() {
        let use_h = lambda.len() <= lambda.first();
        let alpha: Vec<i64> = if use_h {
            lambda.parts().iter().map(|&x| x as i64).collect()
        } else {
            lambda
                .transpose()
                .parts()
                .iter()
                .map(|&x| x as i64)
                .collect()
        };
        for (idx, sign) in determinant_terms(&alpha) {
            let prod = product_cache
                .entry((use_h, idx.clone()))
                .or_insert_with(|| {
                    let base = if use_h { &hs } else { &es };
                    idx.iter()
                        .fold(poly_one(), |acc, &m| poly_mul(&acc, &base[m]))
                });
            poly_add_scaled(&mut value, prod, &(c * BigInt::from(sign)));
        }
    }

    // Only monomials with weakly decreasing exponents are needed.
    let mut dominant: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (k, c) in value {
        if c.is_zero() {
            continue;
        }
        let e = unpack(k, vars);
        if e.windows(2).all(|w| w[0] >= w[1]) {
            dominant.insert(Partition::from_unsorted(e), c);
        }
    }

    let shapes = enumerate_partitions(n, None, Some(vars.max(1)));
    let mut out = SchurPoly::zero();
    while let Some((top, c)) = dominant
        .iter()
        .next_back()
        .map(|(p, c)| (p.clone(), c.clone()))
    {
        for beta in &shapes {
            let k = kostka.get(&top, beta.parts());
            if k == 0 {
                continue;
            }
            let entry = dominant.entry(beta.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * BigInt::from(k);
            if entry.is_zero() {
                dominant.remove(beta);
            }
        }
        out.add_term(top, c);
    }
    Ok(out)
}

/// One disagreement found by a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub input: String,
    pub closed: String,
    pub oracle: String,
}

/// The outcome of a sweep. The sweep passed iff `mismatches` is empty.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub checked: u64,
    /// In the sweep's enumeration order, which is canonical.
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
    pub config: serde_json::Value,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The JSON form without the timing field, which is the only part that
    /// varies between identical runs.
    pub fn to_json_without_timing(&self) -> serde_json::Value {
        json!({
            "checked": self.checked,
            "mismatches": self.mismatches,
            "config": self.config,
        })
    }
}

impl Serialize for SweepReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SweepReport", 4)?;
        st.serialize_field("checked", &self.checked)?;
        st.serialize_field("mismatches", &self.mismatches)?;
        st.serialize_field("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        st.serialize_field("config", &self.config)?;
        st.end()
    }
}

/// Per-cell outcome: how many comparisons, and which failed.
type Cell = (u64, Vec<Mismatch>);

fn run_cells<T: Sync>(
    cells: &[T],
    config: serde_json::Value,
    check: impl Fn(&T) -> Result<Cell> + Sync,
) -> Result<SweepReport> {
    let start = Instant::now();
    let results: Vec<Cell> = cells.par_iter().map(&check).collect::<Result<_>>()?;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (n, m) in results {
        checked += n;
        mismatches.extend(m);
    }
    Ok(SweepReport {
        checked,
        mismatches,
        elapsed: start.elapsed(),
        config,
    })
}

fn compare<A: PartialEq + ToString>(
    cell: &mut Cell,
    input: impl FnOnce() -> String,
    closed: &A,
    oracle: &A,
) {
    cell.0 += 1;
    if closed != oracle {
        cell.1.push(Mismatch {
            input: input(),
            closed: closed.to_string(),
            oracle: oracle.to_string(),
        });
    }
}

/// `⟨s_λ, s_μ[h_r]⟩` closed form against brute-force plethysm, for
/// `1 ≤ r ≤ r_max`, `|λ| = r|μ| ≤ max_size`, `λ_1 ≤ r + 1`.
pub fn sweep_plethysm_hr(max_size: usize, r_max: usize) -> Result<SweepReport> {
    let mut cells = Vec::new();
    for r in 1..=r_max {
        for mu in partitions_up_to(max_size / r) {
            cells.push((r, mu));
        }
    }
    let config = json!({"suite": "plethysm-hr", "max_size": max_size, "r_max": r_max});
    run_cells(&cells, config, |(r, mu)| {
        let r = *r;
        let brute = plethysm(&SchurPoly::s(mu.clone()), &SchurPoly::h(r))?;
        let mut cell = Cell::default();
        for lambda in enumerate_partitions(mu.size() * r, Some(r + 1), None) {
            let closed = BigInt::from(plethysm_coeff_hr_closed(&lambda, mu, r)?);
            compare(
                &mut cell,
                || format!("λ=({lambda}) μ=({mu}) r={r}"),
                &closed,
                &brute.coeff(&lambda),
            );
        }
        Ok(cell)
    })
}

/// Three-way agreement of `r_λ^μ` for `λ_1 ≤ 3`: the closed formula, the
/// tuple count, and Littlewood's identity.
pub fn sweep_restriction(max_lambda: usize, max_mu: usize) -> Result<SweepReport> {
    let table = HPlethysmTable::new(max_mu, max_lambda)?;
    let cells: Vec<Partition> = partitions_up_to(max_lambda)
        .filter(|l| l.first() <= 3)
        .collect();
    let mus: Vec<Partition> = partitions_up_to(max_mu).collect();
    let config = json!({"suite": "restriction", "max_lambda": max_lambda, "max_mu": max_mu});
    run_cells(&cells, config, |lambda| {
        let main = frobenius_three_columns(lambda, max_mu)?;
        let mut cell = Cell::default();
        for mu in &mus {
            let oracle = table.restriction(lambda, mu).expect("inside table");
            let via_main = main.coeff(mu);
            let tuples = BigInt::from(count_restriction_tuples(lambda, mu)?);
            cell.0 += 1;
            if via_main != oracle || tuples != oracle {
                cell.1.push(Mismatch {
                    input: format!("λ=({lambda}) μ=({mu})"),
                    closed: format!("main={via_main} tuples={tuples}"),
                    oracle: oracle.to_string(),
                });
            }
        }
        Ok(cell)
    })
}

/// `h_λ[H^⊥]` and `e_λ[H^⊥]` closed forms against the Frobenius oracle for
/// `λ ∈ N^ℓ`, `ℓ ≤ 3`, `|λ| ≤ max_size`, compared through degree `|λ| + 3`.
pub fn sweep_frobenius_he(max_size: usize) -> Result<SweepReport> {
    let table = HPlethysmTable::new(max_size + 3, max_size)?;
    let cells: Vec<IntVector> = (0..=3)
        .flat_map(|l| int_vectors_up_to(l, max_size))
        .collect();
    let config = json!({"suite": "f-he", "max_size": max_size, "max_len": 3, "extra_degree": 3});
    run_cells(&cells, config, |v| {
        let d = v.size() + 3;
        let mut cell = Cell::default();
        let oracle_h = table.frobenius(&h_to_schur(v)).truncate(d);
        let closed_h = frobenius_h_closed(v, d).expand(d);
        compare(&mut cell, || format!("h_({v})"), &closed_h, &oracle_h);
        let oracle_e = table.frobenius(&e_to_schur(v)).truncate(d);
        let closed_e = frobenius_e_closed(v, d).expand(d);
        compare(&mut cell, || format!("e_({v})"), &closed_e, &oracle_e);
        Ok(cell)
    })
}

/// `h_λ[h_r^⊥]`, `e_λ[h_r^⊥]` closed forms against brute-force adjoints for
/// `ℓ ≤ 3`, `1 ≤ r ≤ 3`, `|λ| ≤ max_size`; and the `ℓ = r + 1` special
/// formula against the general one.
pub fn sweep_he_h_perp(max_size: usize) -> Result<SweepReport> {
    const R_MAX: usize = 3;
    let tables = (1..=R_MAX)
        .map(|r| AdjointTable::new(&SchurPoly::h(r), max_size / r))
        .collect::<Result<Vec<_>>>()?;
    let mut cells: Vec<(usize, IntVector, bool)> = Vec::new();
    for r in 1..=R_MAX {
        for l in 0..=3 {
            for v in int_vectors_up_to(l, max_size) {
                cells.push((r, v, false));
            }
        }
        for v in int_vectors_up_to(r + 1, max_size) {
            cells.push((r, v, true));
        }
    }
    let config = json!({"suite": "he-h-perp", "max_size": max_size, "max_len": 3, "r_max": R_MAX});
    run_cells(&cells, config, |(r, v, special)| {
        let r = *r;
        let mut cell = Cell::default();
        if *special {
            let signed: Vec<i64> = v.entries().iter().map(|&x| x as i64).collect();
            compare(
                &mut cell,
                || format!("e_({v}) r={r} special"),
                &e_vector_hr_perp_special(&signed, r)?,
                &e_lambda_hr_perp_closed(v, r)?,
            );
            return Ok(cell);
        }
        let table = &tables[r - 1];
        compare(
            &mut cell,
            || format!("h_({v}) r={r}"),
            &h_lambda_hr_perp_closed(v, r)?,
            &table.adjoint(&h_to_schur(v)),
        );
        compare(
            &mut cell,
            || format!("e_({v}) r={r}"),
            &e_lambda_hr_perp_closed(v, r)?,
            &table.adjoint(&e_to_schur(v)),
        );
        Ok(cell)
    })
}

/// `s_λ[h_r^⊥]` for `λ_1 ≤ 3`, `|λ| ≤ max_size`, `0 ≤ r ≤ r_max`: the
/// five-case formula and, where it applies, the general closed form,
/// against brute force. Series are compared through degree `max_size`.
pub fn sweep_s_h_perp(max_size: usize, r_max: usize) -> Result<SweepReport> {
    let tables = (1..=r_max)
        .map(|r| AdjointTable::new(&SchurPoly::h(r), max_size / r))
        .collect::<Result<Vec<_>>>()?;
    // s_μ[1] for r = 0.
    let one = SchurPoly::one();
    let at_one: Vec<(Partition, SchurPoly)> = partitions_up_to(max_size)
        .map(|mu| Ok((mu.clone(), plethysm(&SchurPoly::s(mu), &one)?)))
        .collect::<Result<_>>()?;
    let mut cells = Vec::new();
    for r in 0..=r_max {
        for lambda in partitions_up_to(max_size).filter(|l| l.first() <= 3) {
            cells.push((r, lambda));
        }
    }
    let config = json!({"suite": "s-h-perp", "max_size": max_size, "r_max": r_max});
    run_cells(&cells, config, |(r, lambda)| {
        let r = *r;
        let f = SchurPoly::s(lambda.clone());
        let brute = if r == 0 {
            let mut out = SchurPoly::zero();
            for (mu, v) in &at_one {
                out.add_term(mu.clone(), crate::schur::hall_inner(&f, v));
            }
            TruncatedSeries::new(&out, max_size)
        } else {
            TruncatedSeries::new(&tables[r - 1].adjoint(&f), max_size)
        };
        let mut cell = Cell::default();
        compare(
            &mut cell,
            || format!("λ=({lambda}) r={r} cases"),
            &s_lambda_h_perp_three_columns(lambda, r, max_size)?,
            &brute,
        );
        if lambda.first() <= r + 1 {
            compare(
                &mut cell,
                || format!("λ=({lambda}) r={r} general"),
                &s_lambda_hr_perp_closed(lambda, r, max_size)?,
                &brute,
            );
        }
        Ok(cell)
    })
}

/// Internal consistency of the Schur ring for sizes up to `max_size`:
/// Jacobi–Trudi in both forms, LR products against power-sum products,
/// `ω` and antipode identities, and Schur/power-sum round trips.
pub fn sweep_ring(max_size: usize) -> Result<SweepReport> {
    #[derive(Clone)]
    enum Check {
        Single(Partition),
        Pair(Partition, Partition),
        Antipode(usize),
    }
    let mut cells = Vec::new();
    for lambda in partitions_up_to(max_size) {
        cells.push(Check::Single(lambda));
    }
    for mu in partitions_up_to(max_size) {
        for nu in partitions_up_to(max_size - mu.size()) {
            cells.push(Check::Pair(mu.clone(), nu));
        }
    }
    for n in 1..=max_size {
        cells.push(Check::Antipode(n));
    }
    let config = json!({"suite": "ring", "max_size": max_size});
    run_cells(&cells, config, |check| {
        let mut cell = Cell::default();
        match check {
            Check::Single(lambda) => {
                let s = SchurPoly::s(lambda.clone());
                let st = SchurPoly::s(lambda.transpose());
                let alpha: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
                compare(
                    &mut cell,
                    || format!("JT-h ({lambda})"),
                    &jacobi_trudi_h(&alpha),
                    &s,
                );
                compare(
                    &mut cell,
                    || format!("JT-e ({lambda})"),
                    &jacobi_trudi_e(&alpha),
                    &st,
                );
                compare(&mut cell, || format!("omega ({lambda})"), &s.omega(), &st);
                compare(
                    &mut cell,
                    || format!("omega^2 ({lambda})"),
                    &s.omega().omega(),
                    &s,
                );
                let sign = if lambda.size() % 2 == 0 { 1 } else { -1 };
                compare(
                    &mut cell,
                    || format!("antipode ({lambda})"),
                    &s.antipode(),
                    &st.scale(&BigInt::from(sign)),
                );
                compare(
                    &mut cell,
                    || format!("round trip ({lambda})"),
                    &from_power_sum(&to_power_sum(&s))?,
                    &s,
                );
            }
            Check::Pair(mu, nu) => {
                let a = SchurPoly::s(mu.clone());
                let b = SchurPoly::s(nu.clone());
                let lr = a.multiply(&b);
                let ps = from_power_sum(&(&to_power_sum(&a) * &to_power_sum(&b)))?;
                compare(&mut cell, || format!("product ({mu})·({nu})"), &lr, &ps);
                compare(
                    &mut cell,
                    || format!("omega product ({mu})·({nu})"),
                    &lr.omega(),
                    &a.omega().multiply(&b.omega()),
                );
            }
            Check::Antipode(n) => {
                // Σ_k S(h_k) h_{n-k} = 0 for n ≥ 1.
                let mut total = SchurPoly::zero();
                for k in 0..=*n {
                    total += &SchurPoly::h(k).antipode().mul_h(n - k);
                }
                compare(
                    &mut cell,
                    || format!("Σ S(h_k) h_(n-k), n={n}"),
                    &total,
                    &SchurPoly::zero(),
                );
            }
        }
        Ok(cell)
    })
}

/// Plethysm laws on small grids: associativity `f[g[u]] = (f[g])[u]` for
/// `u ∈ {h_1, h_2}` and `deg f, deg g ≤ 3`; negation `f[-g] = S(f)[g]` for
/// `deg f ≤ 3`, `deg g ≤ 2`; plethystic addition
/// `s_λ[f + g] = Σ_μ s_μ[f] s_{λ/μ}[g]` for `|λ| ≤ 4`, `f, g ∈ {h_1, h_2, e_2}`;
/// and power-sum against monomial-substitution plethysm for Schur functions
/// with `deg f · deg g ≤ dual_max`.
pub fn sweep_plethysm_laws(dual_max: usize) -> Result<SweepReport> {
    #[derive(Clone)]
    enum Check {
        Assoc(Partition, Partition, usize),
        Negation(Partition, Partition),
        Addition(Partition, usize, usize),
        Dual(Partition, Partition),
    }
    let small: Vec<Partition> = (1..=3)
        .flat_map(|n| enumerate_partitions(n, None, None))
        .collect();
    let mut cells = Vec::new();
    for f in &small {
        for g in &small {
            for u in [1, 2] {
                cells.push(Check::Assoc(f.clone(), g.clone(), u));
            }
            if g.size() <= 2 {
                cells.push(Check::Negation(f.clone(), g.clone()));
            }
        }
    }
    for lambda in partitions_up_to(4) {
        for a in 0..3 {
            for b in 0..3 {
                cells.push(Check::Addition(lambda.clone(), a, b));
            }
        }
    }
    for f in partitions_up_to(dual_max) {
        for g in partitions_up_to(dual_max) {
            if f.size() * g.size() <= dual_max && (f.size() > 0 || g.size() > 0) {
                cells.push(Check::Dual(f.clone(), g));
            }
        }
    }
    let addends = [SchurPoly::h(1), SchurPoly::h(2), SchurPoly::e(2)];
    let names = ["h1", "h2", "e2"];
    let config = json!({"suite": "plethysm-laws", "dual_max": dual_max});
    run_cells(&cells, config, |check| {
        let mut cell = Cell::default();
        match check {
            Check::Assoc(f, g, u) => {
                let (fs, gs, us) = (
                    SchurPoly::s(f.clone()),
                    SchurPoly::s(g.clone()),
                    SchurPoly::h(*u),
                );
                let left = plethysm(&fs, &plethysm(&gs, &us)?)?;
                let right = plethysm(&plethysm(&fs, &gs)?, &us)?;
                compare(
                    &mut cell,
                    || format!("s_({f})[s_({g})[h_{u}]]"),
                    &left,
                    &right,
                );
            }
            Check::Negation(f, g) => {
                let (fs, gs) = (SchurPoly::s(f.clone()), SchurPoly::s(g.clone()));
                let left = plethysm(&fs, &(-&gs))?;
                let right = plethysm(&fs.antipode(), &gs)?;
                compare(&mut cell, || format!("s_({f})[-s_({g})]"), &left, &right);
            }
            Check::Addition(lambda, a, b) => {
                let (fa, gb) = (&addends[*a], &addends[*b]);
                let left = plethysm(&SchurPoly::s(lambda.clone()), &(fa + gb))?;
                let mut right = SchurPoly::zero();
                for mu in crate::partition::sub_partitions(lambda) {
                    let x = plethysm(&SchurPoly::s(mu.clone()), fa)?;
                    let y = plethysm(&skew_schur_pair(lambda, &mu), gb)?;
                    right += &x.multiply(&y);
                }
                compare(
                    &mut cell,
                    || format!("s_({lambda})[{} + {}]", names[*a], names[*b]),
                    &left,
                    &right,
                );
            }
            Check::Dual(f, g) => {
                let (fs, gs) = (SchurPoly::s(f.clone()), SchurPoly::s(g.clone()));
                let mono = monomial_substitution_plethysm(&fs, &gs, dual_max)?;
                compare(
                    &mut cell,
                    || format!("s_({f})[s_({g})]"),
                    &plethysm(&fs, &gs)?,
                    &mono,
                );
            }
        }
        Ok(cell)
    })
}
