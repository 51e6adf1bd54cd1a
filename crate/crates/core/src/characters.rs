//! Irreducible characters of the symmetric groups by the Murnaghan–Nakayama
//! rule, computed on beta-sets (abacus positions).
//!
//! Tables are built bottom-up per degree and cached for the process
//! lifetime; every table is a pure function of its degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::partition::{enumerate_partitions, Partition};

/// `χ^λ(ρ)` for all `λ, ρ ⊢ n`.
#[derive(Debug)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][ρ]`
    values: Vec<Vec<i64>>,
}

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

impl CharacterTable {
    /// The (cached) table for `S_n`.
    pub fn for_degree(n: usize) -> Arc<CharacterTable> {
        let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        // Built outside the lock: construction recurses into smaller degrees.
        let table = Arc::new(CharacterTable::build(n));
        let mut guard = cache.lock().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    fn build(n: usize) -> CharacterTable {
        let partitions = enumerate_partitions(n, None, None);
        let index: HashMap<_, _> = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut values = vec![vec![0i64; partitions.len()]; partitions.len()];
        if n == 0 {
            values[0][0] = 1;
        } else {
            for (ri, rho) in partitions.iter().enumerate() {
                let k = rho.first();
                let rest = Partition::from_parts_unchecked(rho.parts()[1..].to_vec());
                let smaller = CharacterTable::for_degree(n - k);
                for (li, lambda) in partitions.iter().enumerate() {
                    let mut total: i64 = 0;
                    for (sign, reduced) in remove_rim_hooks(lambda, k) {
                        let chi = smaller.value(&reduced, &rest);
                        total = total
                            .checked_add(sign * chi)
                            .expect("character value exceeds i64");
                    }
                    values[li][ri] = total;
                }
            }
        }
        CharacterTable {
            degree: n,
            partitions,
            index,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `χ^λ(ρ)`; both arguments must be partitions of this table's degree.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn value_at(&self, lambda: usize, rho: usize) -> i64 {
        self.values[lambda][rho]
    }
}

/// All ways to remove a rim hook of length `k` from `λ`, with the sign
/// `(-1)^{height}`.
///
/// On the beta-set `β_i = λ_i + (ℓ - 1 - i)`, removing a rim hook of length
/// `k` moves one bead from `b` to an empty position `b - k`; the height is
/// the number of beads strictly between.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[pos] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = (0..l).map(|i| moved[i] - (l - 1 - i)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((
            sign,
            Partition::new(parts).expect("beta-set yields a partition"),
        ));
    }
    out
}

/// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order of cycle type `ρ`.
pub fn z_factor(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate() {
        for j in 1..=m {
            z *= (i + 1) * j;
        }
    }
    z
}
