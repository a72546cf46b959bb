//! Irreducible character values.
//!
//! `S_n` characters come from the Murnaghan–Nakayama rule on beta-sets.
//! `B_n` characters are induced from `B_m × B_{n−m}`, with the class fusion
//! done combinatorially: a class of the subgroup is a pair of signed cycle
//! types, and it fuses into the class of their concatenation.

use alloc::vec::Vec;

use super::classes::ClassLabel;
use super::perm::SignedCycleType;
use crate::error::{Error, Result};
use crate::labels::{DLabel, Label, PaddedLabel};
use crate::partitions::{binomial, DoublePartition, Partition};

/// `χ^{S_n}_λ` on the class of cycle type `class`.
pub fn sn_character(lambda: &Partition, class: &Partition) -> Result<i64> {
    if lambda.size() != class.size() {
        return Err(Error::InvalidArgument(alloc::format!(
            "sn_character: |{lambda}| ≠ |{class}|"
        )));
    }
    Ok(murnaghan_nakayama(lambda, class.parts()))
}

fn murnaghan_nakayama(lambda: &Partition, cycles: &[usize]) -> i64 {
    let len = lambda.len();
    // beta-set: λ_i + (ℓ − 1 − i), strictly decreasing
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    mn_beta(&beta, cycles)
}

fn mn_beta(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // removing an r-rim hook moves bead b to b − r; the sign counts the
        // beads jumped over (the hook's height)
        let jumped = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[idx] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn_beta(&next, rest);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    total
}

/// `χ_(λ⁺,λ⁻)` of `B_n` on the class with signed cycle type `class`.
///
/// The representation is `Ind_{B_m × B_{n−m}} V_(λ⁺,∅) ⊠ V_(∅,λ⁻)`, where
/// `V_(λ,∅)` is pulled back from `S_m` and `V_(∅,ν) = V_(ν,∅) ⊗ ε`. The
/// induced value is summed over the ways of distributing the cycles of the
/// class between the two factors; the centralizer ratio for each way is a
/// product of binomial coefficients, so every term is an integer.
pub fn bn_character(lambda: &DoublePartition, class: &SignedCycleType) -> Result<i64> {
    if lambda.size() != class.rank() {
        return Err(Error::InvalidArgument(alloc::format!(
            "bn_character: |{lambda}| ≠ rank of {class}"
        )));
    }
    let m = lambda.pos.size();
    let pos_mult = class.pos.multiplicities();
    let neg_mult = class.neg.multiplicities();
    // (cycle length, available count, is negative)
    let slots: Vec<(usize, usize, bool)> = pos_mult
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (i, c, false))
        .chain(
            neg_mult
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| (i, c, true)),
        )
        .collect();
    let mut split = Split {
        lambda,
        slots: &slots,
        first: Vec::new(),
        second: Vec::new(),
    };
    let total = split.sum(0, m, 1);
    Ok(total)
}

struct Split<'a> {
    lambda: &'a DoublePartition,
    slots: &'a [(usize, usize, bool)],
    // cycles given to each factor, as (length, count, negative)
    first: Vec<(usize, usize, bool)>,
    second: Vec<(usize, usize, bool)>,
}

impl Split<'_> {
    fn sum(&mut self, idx: usize, left: usize, weight: i64) -> i64 {
        if idx == self.slots.len() {
            if left != 0 {
                return 0;
            }
            return weight * self.term();
        }
        let (len, count, negative) = self.slots[idx];
        let mut total = 0;
        for take in 0..=count.min(left / len) {
            self.first.push((len, take, negative));
            self.second.push((len, count - take, negative));
            total += self.sum(
                idx + 1,
                left - take * len,
                weight * binomial(count, take) as i64,
            );
            self.first.pop();
            self.second.pop();
        }
        total
    }

    fn term(&self) -> i64 {
        let expand = |cycles: &[(usize, usize, bool)]| -> (Partition, usize) {
            let mut parts = Vec::new();
            let mut negatives = 0;
            for &(len, count, negative) in cycles {
                parts.extend(core::iter::repeat_n(len, count));
                if negative {
                    negatives += count;
                }
            }
            (Partition::from_multiset(parts), negatives)
        };
        let (c1, _) = expand(&self.first);
        let (c2, neg2) = expand(&self.second);
        let a = murnaghan_nakayama(&self.lambda.pos, c1.parts());
        if a == 0 {
            return 0;
        }
        let b = murnaghan_nakayama(&self.lambda.neg, c2.parts());
        let eps = if neg2 % 2 == 0 { 1 } else { -1 };
        a * eps * b
    }
}

/// Character value of an irreducible label (given at its rank) on a class.
///
/// Values of the individual split `D_n` irreducibles `{α, ±}` are not
/// computed; such queries return [`Error::OutsideScope`]. Use
/// [`split_pair_sum_character`] for the sum of a split pair.
pub fn character_value(label: &PaddedLabel, class: &ClassLabel) -> Result<i64> {
    if class.family() != label.family() {
        return Err(Error::invalid(
            "label and class belong to different families",
        ));
    }
    let n = label.n;
    let t = class.signed_type();
    if t.rank() != n {
        return Err(Error::invalid("label and class have different ranks"));
    }
    match &label.label {
        Label::A(l) => sn_character(&l.pad(n).expect("validated label"), &t.pos),
        Label::BC(l) => bn_character(&l.pad(n).expect("validated label"), &t),
        Label::D(DLabel::Pair(a, b)) => {
            bn_character(&DoublePartition::new(a.clone(), b.clone()), &t)
        }
        Label::D(DLabel::Split(..)) => Err(Error::OutsideScope(
            "character values of individual split D_n irreducibles are not computed",
        )),
    }
}

/// `χ_{α,+} + χ_{α,−}`, i.e. the restriction of `χ_(α,α)` to `D_n`.
pub fn split_pair_sum_character(alpha: &Partition, class: &SignedCycleType) -> Result<i64> {
    bn_character(&DoublePartition::new(alpha.clone(), alpha.clone()), class)
}

/// Dimension of an irreducible: `f^λ[n]` in type A,
/// `C(n, |α|) f^α f^β` for `V_(α,β)`, and half of that for a split label.
pub fn irrep_dimension(label: &PaddedLabel) -> u128 {
    let n = label.n;
    let bc_dim = |a: &Partition, b: &Partition| {
        binomial(n, a.size()) * a.standard_tableaux_count() * b.standard_tableaux_count()
    };
    match &label.label {
        Label::A(l) => l.pad(n).map_or(0, |full| full.standard_tableaux_count()),
        Label::BC(l) => l.pad(n).map_or(0, |full| bc_dim(&full.pos, &full.neg)),
        Label::D(DLabel::Pair(a, b)) => bc_dim(a, b),
        Label::D(DLabel::Split(a, _)) if n == 0 => bc_dim(a, a),
        Label::D(DLabel::Split(a, _)) => bc_dim(a, a) / 2,
    }
}
