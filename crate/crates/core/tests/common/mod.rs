//! Independent reference computations used by the integration and
//! acceptance tests. None of these go through the library's combinatorial
//! rules: they enumerate cells, group elements or class sums directly.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weylrep::branching::fold_label;
use weylrep::charpoly::{CharacterPolynomial, Monomial};
use weylrep::weyl::{
    bn_character, conjugacy_classes, sn_character, ClassLabel, SignedCycleType, SignedPermutation,
};
use weylrep::{DoublePartition, Family, Label, Partition, Rational};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
    DoublePartition::new(p(a), p(b))
}

pub fn double_partitions_up_to(k: usize) -> Vec<DoublePartition> {
    (0..=k).flat_map(DoublePartition::all_of_size).collect()
}

pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(Partition::all_of_size).collect()
}

pub fn any_partition(max: usize) -> impl Strategy<Value = Partition> {
    proptest::sample::select(partitions_up_to(max))
}

pub fn any_double_partition(max: usize) -> impl Strategy<Value = DoublePartition> {
    proptest::sample::select(double_partitions_up_to(max))
}

/// Every irreducible label of `W_n`; in type D only the pair labels.
pub fn labels(family: Family, n: usize) -> Vec<Label> {
    match family {
        Family::A => Partition::all_of_size(n)
            .iter()
            .map(Label::from_full_a)
            .collect(),
        Family::BC => DoublePartition::all_of_size(n)
            .iter()
            .map(Label::from_full_bc)
            .collect(),
        Family::D => {
            let pairs: BTreeSet<Label> = DoublePartition::all_of_size(n)
                .iter()
                .filter(|l| l.pos != l.neg)
                .flat_map(fold_label)
                .collect();
            pairs.into_iter().collect()
        }
    }
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Horizontal strips by brute force: every `μ ⊢ |λ| + k` containing `λ`
/// whose extra cells sit in distinct columns.
pub fn strip_oracle(lambda: &Partition, k: usize) -> Vec<Partition> {
    let lc = lambda.conjugate();
    let mut out: Vec<Partition> = Partition::all_of_size(lambda.size() + k)
        .into_iter()
        .filter(|mu| {
            mu.contains(lambda) && {
                let mc = mu.conjugate();
                (0..mc.len()).all(|j| mc.get(j) - lc.get(j) <= 1)
            }
        })
        .collect();
    out.sort();
    out
}

/// `c^ν_{λμ} = ⟨Ind_{S_a × S_b} χ_λ ⊠ χ_μ, χ_ν⟩`, summed over pairs of
/// classes of `S_a × S_b` with their sizes.
pub fn lr_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let (a, b) = (lambda.size(), mu.size());
    assert_eq!(a + b, nu.size());
    let ca = conjugacy_classes(Family::A, a).unwrap();
    let cb = conjugacy_classes(Family::A, b).unwrap();
    let mut acc: i128 = 0;
    for x in &ca {
        for y in &cb {
            let (px, py) = (x.label.signed_type().pos, y.label.signed_type().pos);
            let joint = px.union(&py);
            let v = sn_character(lambda, &px).unwrap() as i128
                * sn_character(mu, &py).unwrap() as i128
                * sn_character(nu, &joint).unwrap() as i128;
            acc += (x.size * y.size) as i128 * v;
        }
    }
    let order = Family::A.order(a) * Family::A.order(b);
    assert_eq!(acc % order as i128, 0);
    (acc / order as i128) as i64
}

/// The restriction of `w ∈ B_n` to the coordinates `range`, if it
/// preserves that block.
pub fn block(w: &SignedPermutation, range: std::ops::Range<usize>) -> Option<SignedPermutation> {
    let lo = range.start as i32;
    let mut images = Vec::new();
    for i in range.clone() {
        let img = w.images()[i];
        let a = img.abs();
        if a <= lo || a > range.end as i32 {
            return None;
        }
        images.push(img.signum() * (a - lo));
    }
    Some(SignedPermutation::new(images).unwrap())
}

/// `Ind_{B_a × B_{n−a}}^{B_n} (χ_λ ⊠ χ_μ)` on `g`, by summing over all of
/// `B_n`: `(1/|H|) Σ_x χ°(x g x⁻¹)`.
pub fn induced_bn_character(
    lambda: &DoublePartition,
    mu: &DoublePartition,
    g: &SignedPermutation,
) -> i64 {
    let a = lambda.size();
    let n = a + mu.size();
    let mut acc: i64 = 0;
    for x in SignedPermutation::all(Family::BC, n) {
        let h = g.conjugate_by(&x);
        let (Some(h1), Some(h2)) = (block(&h, 0..a), block(&h, a..n)) else {
            continue;
        };
        acc += bn_character(lambda, &h1.signed_cycle_type()).unwrap()
            * bn_character(mu, &h2.signed_cycle_type()).unwrap();
    }
    let order = (Family::BC.order(a) * Family::BC.order(n - a)) as i64;
    assert_eq!(acc % order, 0);
    acc / order
}

/// Conjugacy classes of `W_n` by orbit enumeration: `(signed type, size)`
/// pairs, sorted.
pub fn classes_by_enumeration(family: Family, n: usize) -> Vec<(SignedCycleType, u128)> {
    let elements = SignedPermutation::all(family, n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in &elements {
        if seen.contains(w) {
            continue;
        }
        let orbit: BTreeSet<_> = elements.iter().map(|x| w.conjugate_by(x)).collect();
        out.push((w.signed_cycle_type(), orbit.len() as u128));
        seen.extend(orbit);
    }
    out.sort();
    out
}

/// The library's class list in the same shape.
pub fn classes_by_formula(family: Family, n: usize) -> Vec<(SignedCycleType, u128)> {
    let mut out: Vec<_> = conjugacy_classes(family, n)
        .unwrap()
        .into_iter()
        .map(|c| (c.label.signed_type(), c.size))
        .collect();
    out.sort();
    out
}

/// A random character polynomial of graded degree `≤ d` with small integer
/// and half-integer coefficients.
pub fn random_polynomial(rng: &mut ChaCha8Rng, d: usize) -> CharacterPolynomial {
    let mut f = CharacterPolynomial::zero();
    for m in Monomial::all_up_to(d) {
        if rng.gen_bool(0.5) {
            let num: i64 = rng.gen_range(-6..=6);
            let den: i64 = rng.gen_range(1..=2);
            f.add_term(m, Rational::new(BigInt::from(num), BigInt::from(den)));
        }
    }
    f
}

/// Class labels mapped to their values of `f`.
pub fn evaluate_on_classes(
    f: &CharacterPolynomial,
    family: Family,
    n: usize,
) -> BTreeMap<ClassLabel, Rational> {
    conjugacy_classes(family, n)
        .unwrap()
        .into_iter()
        .map(|c| {
            let v = f.evaluate(&c.label.signed_type());
            (c.label, v)
        })
        .collect()
}
