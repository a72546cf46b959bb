//! Integer partitions, double partitions, padding and horizontal strips.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so equality and ordering are
/// those of the canonical part list. Ordering is lexicographic on the parts,
/// which puts `[1,1] < [2] < [2,1]`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary multiset of part sizes into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`; empty when `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, `0` for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), with `0` past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.0[i] >= other.0[i])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    /// The padded partition `λ[n] = (n − |λ|, λ_1, λ_2, …)`, or `None` when
    /// `n − |λ| < λ_1` and the padded shape is not a partition.
    pub fn pad(&self, n: usize) -> Option<Partition> {
        let top = n.checked_sub(self.size())?;
        if top < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        if top > 0 {
            parts.push(top);
        }
        parts.extend_from_slice(&self.0);
        Some(Partition(parts))
    }

    /// Inverse of [`pad`](Self::pad): drop the first row.
    pub fn unpad(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Multiplicity vector: entry `i` counts the parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Concatenation of two multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_multiset(parts)
    }

    /// All partitions with one more box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.get(i) < self.get(i - 1) {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// All partitions with one fewer box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.get(i) > self.get(i + 1) {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Partitions `μ ⊇ λ` with `|μ/λ| = k` and no two new boxes in one column.
    ///
    /// These are exactly the `μ` interlacing `λ`: `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`.
    /// The result is sorted and duplicate-free.
    pub fn add_horizontal_strip(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len() + 1);
        self.add_strip_rec(0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    fn add_strip_rec(
        &self,
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == self.len() {
            // the only place a brand-new row can go
            let above = if row == 0 {
                usize::MAX
            } else {
                self.get(row - 1)
            };
            if left <= above {
                let mut parts = cur.clone();
                if left > 0 {
                    parts.push(left);
                }
                out.push(Partition(parts));
            }
            return;
        }
        let base = self.0[row];
        let room = if row == 0 {
            left
        } else {
            (self.0[row - 1] - base).min(left)
        };
        for extra in 0..=room {
            cur.push(base + extra);
            self.add_strip_rec(row + 1, left - extra, cur, out);
            cur.pop();
        }
    }

    /// Partitions `ν ⊆ λ` with `|λ/ν| = k` and no two removed boxes in one
    /// column, i.e. `λ_{i+1} ≤ ν_i ≤ λ_i`. Sorted and duplicate-free.
    pub fn remove_horizontal_strip(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if k > self.size() {
            return out;
        }
        let mut cur = Vec::with_capacity(self.len());
        self.remove_strip_rec(0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    fn remove_strip_rec(
        &self,
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == self.len() {
            if left == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
            return;
        }
        let top = self.0[row];
        let floor = self.get(row + 1);
        let room = (top - floor).min(left);
        for taken in 0..=room {
            cur.push(top - taken);
            self.remove_strip_rec(row + 1, left - taken, cur, out);
            cur.pop();
        }
    }

    /// Number of standard Young tableaux `f^λ`, by the hook-length formula.
    pub fn standard_tableaux_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: Vec<u128> = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j + conj.0[j] - i - 1) as u128);
            }
        }
        factorial(self.size()) / hooks.into_iter().product::<u128>()
    }

    /// All partitions of `n`, in decreasing lexicographic order (`[n]` first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// An ordered pair `(λ⁺, λ⁻)` of partitions.
///
/// Labels irreducible `B_n`-representations and, read as positive and
/// negative cycle lengths, conjugacy classes of `B_n`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoublePartition {
    pub pos: Partition,
    pub neg: Partition,
}

impl DoublePartition {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        DoublePartition { pos, neg }
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    pub fn swapped(&self) -> DoublePartition {
        DoublePartition::new(self.neg.clone(), self.pos.clone())
    }

    /// `λ[n] = (λ⁺[n − |λ⁻|], λ⁻)`, or `None` when the padded positive
    /// component is not a partition.
    pub fn pad(&self, n: usize) -> Option<DoublePartition> {
        let rank = n.checked_sub(self.neg.size())?;
        Some(DoublePartition::new(self.pos.pad(rank)?, self.neg.clone()))
    }

    /// Inverse of [`pad`](Self::pad): drop the first row of the positive part.
    pub fn unpad(&self) -> DoublePartition {
        DoublePartition::new(self.pos.unpad(), self.neg.clone())
    }

    /// All double partitions of `n`, ordered by decreasing `|λ⁺|`, then
    /// decreasing `λ⁺`, then decreasing `λ⁻`.
    pub fn all_of_size(n: usize) -> Vec<DoublePartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let negs = Partition::all_of_size(n - a);
            for pos in Partition::all_of_size(a) {
                for neg in &negs {
                    out.push(DoublePartition::new(pos.clone(), neg.clone()));
                }
            }
        }
        out
    }

    /// All double partitions obtained by adding one box to either component.
    pub fn add_one_box(&self) -> Vec<DoublePartition> {
        let mut out: Vec<DoublePartition> = self
            .pos
            .add_one_box()
            .into_iter()
            .map(|p| DoublePartition::new(p, self.neg.clone()))
            .collect();
        out.extend(
            self.neg
                .add_one_box()
                .into_iter()
                .map(|q| DoublePartition::new(self.pos.clone(), q)),
        );
        out
    }

    /// Componentwise containment.
    pub fn contains(&self, other: &DoublePartition) -> bool {
        self.pos.contains(&other.pos) && self.neg.contains(&other.neg)
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

impl fmt::Debug for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `λ[n]`, see [`Partition::pad`].
pub fn pad(lambda: &Partition, n: usize) -> Option<Partition> {
    lambda.pad(n)
}

/// `λ[n]` for a double partition, see [`DoublePartition::pad`].
pub fn pad_double(lambda: &DoublePartition, n: usize) -> Option<DoublePartition> {
    lambda.pad(n)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
