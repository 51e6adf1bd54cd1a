//! Littlewood–Richardson tableaux.
//!
//! Boxes are filled row by row, top to bottom, and right to left within a
//! row. That is exactly the reverse reading order, so the lattice-word
//! condition is checked on every prefix as the filling grows, together with
//! column strictness against the (already filled) row above.
//!
//! Content is always a [`Partition`]: a filling whose content is not weakly
//! decreasing can never satisfy the lattice condition, so callers holding a
//! general content vector must sort it first.

use std::collections::BTreeMap;
use std::fmt;

use crate::partition::{Partition, SkewShape};

/// A semistandard filling of a skew shape whose reverse reading word is a
/// lattice word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRTableau {
    shape: SkewShape,
    /// `rows[i]` holds the entries of row `i` from column `inner_i` to
    /// `outer_i - 1`.
    rows: Vec<Vec<usize>>,
}

impl LRTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 0-based `(row, column)`, `None` outside the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.shape.inner().part(row);
        self.rows.get(row)?.get(col.checked_sub(start)?).copied()
    }

    /// All `((row, column), value)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.inner().part(i);
            row.iter()
                .enumerate()
                .map(move |(k, &v)| ((i, start + k), v))
        })
    }

    /// Number of occurrences of each value.
    pub fn content(&self) -> Partition {
        let mut counts = Vec::new();
        for (_, v) in self.entries() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// Concatenation of the reversed rows.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Re-checks every defining condition from scratch.
    pub fn is_valid(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) || row.contains(&0) {
                return false;
            }
            if i > 0 {
                let start = self.shape.inner().part(i);
                for (k, &v) in row.iter().enumerate() {
                    if let Some(above) = self.entry(i - 1, start + k) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        is_lattice_word(&self.reading_word())
    }
}

/// Every prefix has at least as many `i` as `i + 1`, for all `i ≥ 1`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for LRTableau {
    /// Rows as lists with `.` for boxes of the inner shape, e.g.
    /// `[[.,1],[2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            let cells = std::iter::repeat_n(".".to_string(), self.shape.inner().part(i))
                .chain(row.iter().map(|v| v.to_string()));
            for (k, c) in cells.enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                f.write_str(&c)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Backtracking state shared by enumeration and counting.
struct Filler<'a> {
    shape: &'a SkewShape,
    /// `Some(ν)` fixes the content; `None` allows any content.
    content: Option<&'a [usize]>,
    max_value: usize,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, content: Option<&'a [usize]>) -> Self {
        let outer = shape.outer();
        let max_value = match content {
            Some(c) => c.len(),
            None => outer.len(),
        };
        Filler {
            shape,
            content,
            max_value,
            grid: outer.parts().iter().map(|&w| vec![0; w]).collect(),
            counts: vec![0; max_value + 1],
        }
    }

    /// Calls `visit` once per complete tableau.
    fn run(&mut self, visit: &mut dyn FnMut(&Filler<'_>)) {
        let outer = self.shape.outer();
        let first = (0..outer.len()).find(|&i| self.shape.inner().part(i) < outer.part(i));
        match first {
            None => {
                if self.content_complete() {
                    visit(self);
                }
            }
            Some(row) => self.place(row, outer.part(row) - 1, visit),
        }
    }

    fn content_complete(&self) -> bool {
        match self.content {
            Some(c) => c.iter().enumerate().all(|(k, &n)| self.counts[k + 1] == n),
            None => true,
        }
    }

    /// Next box after `(row, col)` in reverse reading order.
    fn next_box(&self, row: usize, col: usize) -> Option<(usize, usize)> {
        if col > self.shape.inner().part(row) {
            return Some((row, col - 1));
        }
        let outer = self.shape.outer();
        ((row + 1)..outer.len())
            .find(|&i| self.shape.inner().part(i) < outer.part(i))
            .map(|i| (i, outer.part(i) - 1))
    }

    fn place(&mut self, row: usize, col: usize, visit: &mut dyn FnMut(&Filler<'_>)) {
        // Row weakly increases left to right, so the right neighbour bounds us.
        let hi = if col + 1 < self.shape.outer().part(row) {
            self.grid[row][col + 1]
        } else {
            self.max_value
        };
        // Columns strictly increase downwards.
        let lo = if row > 0 && col >= self.shape.inner().part(row - 1) {
            self.grid[row - 1][col] + 1
        } else {
            1
        };
        // Entries of row i never exceed i + 1 in a lattice filling.
        let hi = hi.min(row + 1);
        for v in lo..=hi {
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            if let Some(c) = self.content {
                if self.counts[v] >= c[v - 1] {
                    continue;
                }
            }
            self.grid[row][col] = v;
            self.counts[v] += 1;
            match self.next_box(row, col) {
                Some((r, c)) => self.place(r, c, visit),
                None => {
                    if self.content_complete() {
                        visit(self);
                    }
                }
            }
            self.counts[v] -= 1;
            self.grid[row][col] = 0;
        }
    }

    fn snapshot(&self) -> LRTableau {
        let rows = self
            .grid
            .iter()
            .enumerate()
            .map(|(i, r)| r[self.shape.inner().part(i)..].to_vec())
            .collect();
        LRTableau {
            shape: self.shape.clone(),
            rows,
        }
    }

    fn current_content(&self) -> Partition {
        Partition::from_unsorted(self.counts[1..].to_vec())
    }
}

fn content_admissible(shape: &SkewShape, content: &Partition) -> bool {
    shape.size() == content.size()
}

/// All LR tableaux of the given shape and content, in backtracking order.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<LRTableau> {
    if !content_admissible(shape, content) {
        return Vec::new();
    }
    let mut out = Vec::new();
    Filler::new(shape, Some(content.parts())).run(&mut |f| out.push(f.snapshot()));
    out
}

/// All LR tableaux of the given shape, any content.
pub fn enumerate_all_lr_tableaux(shape: &SkewShape) -> Vec<LRTableau> {
    let mut out = Vec::new();
    Filler::new(shape, None).run(&mut |f| out.push(f.snapshot()));
    out
}

/// Number of LR tableaux of shape `shape` and content `content`.
pub fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> u64 {
    if !content_admissible(shape, content) {
        return 0;
    }
    let mut n = 0u64;
    Filler::new(shape, Some(content.parts())).run(&mut |_| n += 1);
    n
}

/// Number of LR tableaux of `shape` grouped by content: the coefficients
/// `c^λ_{μ,ν}` for fixed `λ/μ` and all `ν`.
pub fn lr_contents(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    Filler::new(shape, None).run(&mut |f| *out.entry(f.current_content()).or_insert(0) += 1);
    out
}

/// The Littlewood–Richardson coefficient `c^λ_{μ,ν}`; zero when `μ ⊄ λ` or
/// the sizes do not add up.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || !lambda.contains(nu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    count_lr_tableaux(&shape, nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn sk(outer: Partition, inner: Partition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    #[test]
    fn straight_shape_has_unique_filling() {
        let t = enumerate_lr_tableaux(&sk(part![2, 1], part![]), &part![2, 1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows(), &[vec![1, 1], vec![2]]);
        assert_eq!(t[0].to_string(), "[[1,1],[2]]");
    }

    #[test]
    fn skew_321_over_21() {
        let t = enumerate_lr_tableaux(&sk(part![3, 2, 1], part![2, 1]), &part![2, 1]);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(LRTableau::is_valid));
        assert_ne!(t[0], t[1]);
    }

    #[test]
    fn column_cannot_hold_equal_entries() {
        assert!(enumerate_lr_tableaux(&sk(part![1, 1], part![]), &part![2]).is_empty());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&part![2, 1], &part![1], &part![1, 1]), 1);
        assert_eq!(
            lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]),
            2
        );
        assert_eq!(lr_coefficient(&part![4, 2], &part![], &part![4, 2]), 1);
        assert_eq!(lr_coefficient(&part![2], &part![1, 1], &part![1]), 0);
    }

    #[test]
    fn display_marks_inner_boxes() {
        let t = enumerate_lr_tableaux(&sk(part![2, 1], part![1]), &part![1, 1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].to_string(), "[[.,1],[2]]");
        assert_eq!(t[0].entry(0, 0), None);
        assert_eq!(t[0].entry(0, 1), Some(1));
        assert_eq!(t[0].content(), part![1, 1]);
    }

    /// Enumerates every semistandard filling with values ≤ `max` and filters
    /// by content and lattice condition. Independent of the pruned search.
    fn brute_force_count(shape: &SkewShape, content: &Partition) -> u64 {
        let boxes: Vec<_> = shape.boxes().collect();
        let max = content.len().max(1);
        let mut values = vec![1usize; boxes.len()];
        let mut count = 0;
        loop {
            let at =
                |r: usize, c: usize| boxes.iter().position(|&b| b == (r, c)).map(|k| values[k]);
            let ssyt = boxes.iter().enumerate().all(|(k, &(r, c))| {
                let right_ok = at(r, c + 1).is_none_or(|w| values[k] <= w);
                let down_ok = at(r + 1, c).is_none_or(|w| values[k] < w);
                right_ok && down_ok
            });
            if ssyt {
                let mut word = Vec::new();
                for r in 0..shape.outer().len() {
                    for c in (0..shape.outer().part(r)).rev() {
                        if let Some(v) = at(r, c) {
                            word.push(v);
                        }
                    }
                }
                let mut counts = vec![0; max];
                for &v in &word {
                    counts[v - 1] += 1;
                }
                if is_lattice_word(&word) && Partition::new(counts).ok().as_ref() == Some(content) {
                    count += 1;
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == values.len() {
                    return count;
                }
                if values[k] < max {
                    values[k] += 1;
                    break;
                }
                values[k] = 1;
                k += 1;
            }
        }
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        use crate::partition::{enumerate_partitions, sub_partitions};
        for n in 0..=6 {
            for lambda in enumerate_partitions(n, None, None) {
                for mu in sub_partitions(&lambda) {
                    let shape = sk(lambda.clone(), mu.clone());
                    for nu in enumerate_partitions(shape.size(), None, None) {
                        assert_eq!(
                            count_lr_tableaux(&shape, &nu),
                            brute_force_count(&shape, &nu),
                            "{shape} content {nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice_word(&[1, 1, 2, 1, 2, 3]));
        assert!(!is_lattice_word(&[1, 2, 2]));
        assert!(!is_lattice_word(&[2]));
        assert!(is_lattice_word(&[]));
    }
}
