use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::labels::{Family, Sign};
use crate::partitions::{DoublePartition, Partition};

/// Lengths of the positive and negative cycles of a signed permutation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCycleType {
    pub pos: Partition,
    pub neg: Partition,
}

impl SignedCycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedCycleType { pos, neg }
    }

    /// The identity type `([1^n], ∅)`.
    pub fn identity(n: usize) -> Self {
        SignedCycleType::new(Partition::column(n), Partition::empty())
    }

    pub fn rank(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// Cycle type of the image in `S_n`.
    pub fn underlying(&self) -> Partition {
        self.pos.union(&self.neg)
    }

    /// `(−1)^{ℓ(neg)}`.
    pub fn epsilon(&self) -> i64 {
        if self.neg.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of positive `i`-cycles.
    pub fn positive_cycles(&self, i: usize) -> usize {
        self.pos.parts().iter().filter(|&&p| p == i).count()
    }

    /// Number of negative `i`-cycles.
    pub fn negative_cycles(&self, i: usize) -> usize {
        self.neg.parts().iter().filter(|&&p| p == i).count()
    }

    pub fn as_double(&self) -> DoublePartition {
        DoublePartition::new(self.pos.clone(), self.neg.clone())
    }
}

impl From<DoublePartition> for SignedCycleType {
    fn from(d: DoublePartition) -> Self {
        SignedCycleType::new(d.pos, d.neg)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// An element of `B_n`, stored as the signed images of `1..=n`.
///
/// The action on `{±1, …, ±n}` is extended by `w(−a) = −w(a)`. Composition
/// is right to left: `(v ∘ w)(a) = v(w(a))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::invalid(
                    "signed images must be a bijection of {±1,…,±n}",
                ));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(a)` for `a ∈ {±1, …, ±n}`.
    pub fn apply(&self, a: i32) -> i32 {
        let img = self.images[a.unsigned_abs() as usize - 1];
        if a > 0 {
            img
        } else {
            -img
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        SignedPermutation {
            images: other.images.iter().map(|&a| self.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            let sign = if x > 0 { 1 } else { -1 };
            images[x.unsigned_abs() as usize - 1] = sign * (i as i32 + 1);
        }
        SignedPermutation { images }
    }

    /// `v w v⁻¹`.
    pub fn conjugate_by(&self, v: &SignedPermutation) -> SignedPermutation {
        v.compose(self).compose(&v.inverse())
    }

    pub fn negative_entries(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    pub fn is_in_sn(&self) -> bool {
        self.negative_entries() == 0
    }

    pub fn is_in_dn(&self) -> bool {
        self.negative_entries().is_multiple_of(2)
    }

    pub fn belongs_to(&self, family: Family) -> bool {
        match family {
            Family::A => self.is_in_sn(),
            Family::BC => true,
            Family::D => self.is_in_dn(),
        }
    }

    /// `ε(w) = (−1)^{#negative images}`.
    pub fn epsilon(&self) -> i64 {
        if self.negative_entries().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Pairs each cycle of `|w|` with the product of the signs met along it:
    /// a `+` product is a positive cycle (together with its negated twin), a
    /// `−` product a negative cycle.
    pub fn signed_cycle_type(&self) -> SignedCycleType {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut negatives = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let img = self.images[i];
                if img < 0 {
                    negatives += 1;
                }
                i = img.unsigned_abs() as usize - 1;
                len += 1;
            }
            if negatives % 2 == 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        SignedCycleType::new(Partition::from_multiset(pos), Partition::from_multiset(neg))
    }

    /// A canonical element of the given signed cycle type: consecutive
    /// blocks, positive cycles first, each negative cycle closing with a
    /// single sign change.
    pub fn representative(t: &SignedCycleType) -> SignedPermutation {
        let mut images = Vec::with_capacity(t.rank());
        let mut start = 1i32;
        let blocks = t
            .pos
            .parts()
            .iter()
            .map(|&l| (l, false))
            .chain(t.neg.parts().iter().map(|&l| (l, true)));
        for (len, negative) in blocks {
            let len = len as i32;
            for k in 0..len {
                if k + 1 < len {
                    images.push(start + k + 1);
                } else if negative {
                    images.push(-start);
                } else {
                    images.push(start);
                }
            }
            start += len;
        }
        SignedPermutation { images }
    }

    /// Representative of a `D_n` class; the `+` half of a split class holds
    /// the sign-free representative, the `−` half its conjugate by the sign
    /// change of coordinate 1.
    pub fn d_representative(t: &SignedCycleType, split: Option<Sign>) -> SignedPermutation {
        let w = Self::representative(t);
        match split {
            Some(Sign::Minus) => {
                let mut flip = Self::identity(t.rank());
                flip.images[0] = -1;
                w.conjugate_by(&flip)
            }
            _ => w,
        }
    }

    /// Every element of `W_n`, `W` one of the three families.
    pub fn all(family: Family, n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        let sign_masks = match family {
            Family::A => 1u32,
            _ => 1u32 << n,
        };
        permutations(&mut perm, 0, &mut |p| {
            for mask in 0..sign_masks {
                if family == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let images = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.push(SignedPermutation { images });
            }
        });
        out
    }
}

fn permutations(v: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_types_from_the_definition() {
        // (1 2)(-1 -2): 1 -> 2 -> 1, no sign change
        let w = SignedPermutation::new(vec![2, 1]).unwrap();
        assert_eq!(
            w.signed_cycle_type(),
            SignedCycleType::new(p(&[2]), Partition::empty())
        );
        // (1 -2)(-1 2) is positive as well
        let w = SignedPermutation::new(vec![-2, -1]).unwrap();
        assert_eq!(
            w.signed_cycle_type(),
            SignedCycleType::new(p(&[2]), Partition::empty())
        );
        // (1 2 -1 -2): 1 -> 2 -> -1
        let w = SignedPermutation::new(vec![2, -1]).unwrap();
        assert_eq!(
            w.signed_cycle_type(),
            SignedCycleType::new(Partition::empty(), p(&[2]))
        );
        assert_eq!(w.epsilon(), -1);
        let id = SignedPermutation::identity(3);
        assert_eq!(id.signed_cycle_type(), SignedCycleType::identity(3));
        assert_eq!(id.epsilon(), 1);
        let flip = SignedPermutation::new(vec![-1]).unwrap();
        assert_eq!(flip.epsilon(), -1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn group_structure() {
        let all = SignedPermutation::all(Family::BC, 3);
        assert_eq!(all.len(), 48);
        let w = &all[17];
        assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(3));
        assert_eq!(SignedPermutation::all(Family::D, 3).len(), 24);
        assert_eq!(SignedPermutation::all(Family::A, 4).len(), 24);
    }

    #[test]
    fn representatives_have_their_type() {
        for t in DoublePartition::all_of_size(4) {
            let t = SignedCycleType::from(t);
            assert_eq!(SignedPermutation::representative(&t).signed_cycle_type(), t);
        }
    }
}
