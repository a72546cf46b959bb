//! Induction and restriction between `B_a × B_{n−a}`, `B_{n−1}`, `S_n`,
//! `D_n` and `B_n`, all through Littlewood–Richardson and Pieri rules.
//!
//! Type D is never handled natively: `D_n` decompositions are obtained by
//! computing in `B_n` and folding with [`restrict_to_dn`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::labels::{DLabel, Family, Label, Sign};
use crate::lr::LrMemo;
use crate::partitions::{DoublePartition, Partition};

/// Refuses anything but characteristic zero; every rule here assumes it.
pub fn require_characteristic_zero(p: u64) -> Result<()> {
    if p == 0 {
        Ok(())
    } else {
        Err(Error::OutsideScope("only characteristic zero is supported"))
    }
}

/// `Ind_{B_a × B_{n−a}}^{B_n} V_λ ⊠ V_μ`, with `λ`, `μ` full double
/// partitions: the coefficient of `V_ν` is `c^{ν⁺}_{λ⁺μ⁺} c^{ν⁻}_{λ⁻μ⁻}`.
pub fn induce_product(
    lambda: &DoublePartition,
    mu: &DoublePartition,
    n: usize,
) -> Result<Decomposition> {
    if lambda.size() + mu.size() != n {
        return Err(Error::InvalidArgument(format!(
            "induce_product: |{lambda}| + |{mu}| ≠ {n}"
        )));
    }
    let mut memo = LrMemo::default();
    let pos = memo.expand(&lambda.pos, &mu.pos);
    let neg = memo.expand(&lambda.neg, &mu.neg);
    let mut out = Decomposition::zero(Family::BC, n);
    for (p, &cp) in &pos {
        for (q, &cq) in &neg {
            out.add(
                Label::from_full_bc(&DoublePartition::new(p.clone(), q.clone())),
                cp * cq,
            );
        }
    }
    Ok(out)
}

/// `Ind_{S_a × S_{n−a}}^{S_n} V_λ ⊠ V_μ` for full partitions.
pub fn induce_product_a(lambda: &Partition, mu: &Partition, n: usize) -> Result<Decomposition> {
    if lambda.size() + mu.size() != n {
        return Err(Error::InvalidArgument(format!(
            "induce_product_a: |{lambda}| + |{mu}| ≠ {n}"
        )));
    }
    let mut out = Decomposition::zero(Family::A, n);
    for (nu, c) in crate::lr::lr_expand(lambda, mu) {
        out.add(Label::from_full_a(&nu), c);
    }
    Ok(out)
}

/// `Ind_{B_a × B_{n−a}}^{B_n} V_λ ⊠ k`: horizontal strips of `n − a`
/// boxes added to `λ⁺`, `λ⁻` unchanged.
pub fn pieri_induce(lambda: &DoublePartition, n: usize) -> Result<Decomposition> {
    let a = lambda.size();
    if a > n {
        return Err(Error::InvalidArgument(format!(
            "pieri_induce: |{lambda}| > {n}"
        )));
    }
    let mut out = Decomposition::zero(Family::BC, n);
    for pos in lambda.pos.add_horizontal_strip(n - a) {
        out.add(
            Label::from_full_bc(&DoublePartition::new(pos, lambda.neg.clone())),
            1,
        );
    }
    Ok(out)
}

/// `Ind_{S_a × S_{n−a}}^{S_n} V_λ ⊠ k`.
pub fn pieri_induce_a(lambda: &Partition, n: usize) -> Result<Decomposition> {
    let a = lambda.size();
    if a > n {
        return Err(Error::InvalidArgument(format!(
            "pieri_induce_a: |{lambda}| > {n}"
        )));
    }
    let mut out = Decomposition::zero(Family::A, n);
    for nu in lambda.add_horizontal_strip(n - a) {
        out.add(Label::from_full_a(&nu), 1);
    }
    Ok(out)
}

/// Multiplicity of `V_target ⊠ k` in `Res^{B_n}_{B_a × B_{n−a}} V_ν`
/// (full double partitions): 1 when `target⁻ = ν⁻` and `ν⁺/target⁺` is a
/// horizontal strip, else 0.
pub fn coinvariant_restrict_multiplicity(
    nu: &DoublePartition,
    target: &DoublePartition,
    a: usize,
) -> Result<u64> {
    if target.size() != a || a > nu.size() {
        return Err(Error::InvalidArgument(format!(
            "coinvariant_restrict_multiplicity: |{target}| ≠ {a} or {a} > |{nu}|"
        )));
    }
    Ok(u64::from(
        target.neg == nu.neg && is_horizontal_strip(&nu.pos, &target.pos),
    ))
}

/// The type-A analogue of [`coinvariant_restrict_multiplicity`].
pub fn coinvariant_restrict_multiplicity_a(
    nu: &Partition,
    target: &Partition,
    a: usize,
) -> Result<u64> {
    if target.size() != a || a > nu.size() {
        return Err(Error::InvalidArgument(format!(
            "coinvariant_restrict_multiplicity_a: |{target}| ≠ {a} or {a} > |{nu}|"
        )));
    }
    Ok(u64::from(is_horizontal_strip(nu, target)))
}

/// Whether `outer/inner` is a horizontal strip (interlacing).
fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    (0..outer.len()).all(|i| inner.get(i) >= outer.get(i + 1))
}

/// `Ind_{B_{n−1}}^{B_n} V_λ`: one box added to either component.
pub fn induce_one_step(lambda: &DoublePartition) -> Decomposition {
    let mut out = Decomposition::zero(Family::BC, lambda.size() + 1);
    for nu in lambda.add_one_box() {
        out.add(Label::from_full_bc(&nu), 1);
    }
    out
}

/// Multiplicity of `V_λ` in `M_BC(m)_n = Ind_{B_{n−m}}^{B_n} k`: the number
/// of one-box chains from `((n−m), ∅)` to `λ`.
pub fn m_module_multiplicity(lambda: &DoublePartition, m: usize, n: usize) -> Result<u64> {
    if lambda.size() != n {
        return Err(Error::InvalidArgument(format!(
            "m_module_multiplicity: |{lambda}| ≠ {n}"
        )));
    }
    if m > n {
        return Ok(0);
    }
    Ok(m_module_layers(m, n).remove(lambda).unwrap_or(0))
}

/// Forward dynamic programming over the double Young lattice: chain counts
/// for every double partition reachable in `m` one-box steps.
fn m_module_layers(m: usize, n: usize) -> BTreeMap<DoublePartition, u64> {
    let mut layer = BTreeMap::new();
    layer.insert(
        DoublePartition::new(Partition::row(n - m), Partition::empty()),
        1u64,
    );
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (lambda, count) in &layer {
            for nu in lambda.add_one_box() {
                *next.entry(nu).or_insert(0) += count;
            }
        }
        layer = next;
    }
    layer
}

/// The type-A chain count: multiplicity of `V_λ` in `M_A(m)_n`.
pub fn m_module_multiplicity_a(lambda: &Partition, m: usize, n: usize) -> Result<u64> {
    if lambda.size() != n {
        return Err(Error::InvalidArgument(format!(
            "m_module_multiplicity_a: |{lambda}| ≠ {n}"
        )));
    }
    if m > n {
        return Ok(0);
    }
    Ok(m_module_layers_a(m, n).remove(lambda).unwrap_or(0))
}

fn m_module_layers_a(m: usize, n: usize) -> BTreeMap<Partition, u64> {
    let mut layer = BTreeMap::new();
    layer.insert(Partition::row(n - m), 1u64);
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (lambda, count) in &layer {
            for nu in lambda.add_one_box() {
                *next.entry(nu).or_insert(0) += count;
            }
        }
        layer = next;
    }
    layer
}

/// `M_W(m)_n` for `W` of type A or BC; zero when `n < m`.
pub fn m_module_decomposition(family: Family, m: usize, n: usize) -> Result<Decomposition> {
    let mut out = Decomposition::zero(family, n);
    if m > n {
        return Ok(out);
    }
    match family {
        Family::A => {
            for (nu, c) in m_module_layers_a(m, n) {
                out.add(Label::from_full_a(&nu), c);
            }
        }
        Family::BC => {
            for (nu, c) in m_module_layers(m, n) {
                out.add(Label::from_full_bc(&nu), c);
            }
        }
        Family::D => {
            return Err(Error::invalid(
                "m_module_decomposition: type D goes through fiw::decompose_m",
            ))
        }
    }
    Ok(out)
}

/// `Res^{B_n}_{S_n} V_(λ⁺,λ⁻) = ⊕ c^ν_{λ⁺λ⁻} V_ν` for a full double partition.
pub fn restrict_to_sn(lambda: &DoublePartition) -> Decomposition {
    let mut out = Decomposition::zero(Family::A, lambda.size());
    for (nu, c) in crate::lr::lr_expand(&lambda.pos, &lambda.neg) {
        out.add(Label::from_full_a(&nu), c);
    }
    out
}

/// Restriction of a whole `B_n` decomposition to `S_n`.
pub fn restrict_decomposition_to_sn(dec: &Decomposition) -> Result<Decomposition> {
    if dec.family != Family::BC {
        return Err(Error::invalid(
            "restrict_to_sn expects a type BC decomposition",
        ));
    }
    let mut memo = LrMemo::default();
    let mut out = Decomposition::zero(Family::A, dec.n);
    for (label, m) in dec.iter() {
        let full = label
            .full_bc(dec.n)
            .ok_or_else(|| Error::invalid("label does not fit its rank"))?;
        for (nu, c) in memo.expand(&full.pos, &full.neg) {
            out.add(Label::from_full_a(&nu), c * m);
        }
    }
    Ok(out)
}

/// Restricts a `B_n` decomposition to `D_n`: `V_(α,β)` and `V_(β,α)` both
/// become `V_{α,β}`, and `V_(α,α)` becomes `V_{α,+} ⊕ V_{α,−}`.
pub fn restrict_to_dn(dec: &Decomposition) -> Result<Decomposition> {
    if dec.family != Family::BC {
        return Err(Error::invalid(
            "restrict_to_dn expects a type BC decomposition",
        ));
    }
    let n = dec.n;
    let mut out = Decomposition::zero(Family::D, n);
    for (label, m) in dec.iter() {
        let full = label
            .full_bc(n)
            .ok_or_else(|| Error::invalid("label does not fit its rank"))?;
        for folded in fold_label(&full) {
            out.add(folded, m);
        }
    }
    Ok(out)
}

/// The `D_n` constituents of `Res V_λ` for a full double partition `λ`.
pub fn fold_label(full: &DoublePartition) -> Vec<Label> {
    if full.pos != full.neg {
        let pair = DLabel::pair(full.pos.clone(), full.neg.clone()).expect("distinct halves");
        return alloc::vec![Label::D(pair)];
    }
    if full.size() == 0 {
        // D_0 is trivial
        return alloc::vec![Label::D(DLabel::Split(Partition::empty(), Sign::Plus))];
    }
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|s| Label::D(DLabel::Split(full.pos.clone(), s)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
        DoublePartition::new(p(a), p(b))
    }

    fn bc(n: usize, terms: &[(DoublePartition, u64)]) -> Decomposition {
        let mut d = Decomposition::zero(Family::BC, n);
        for (l, m) in terms {
            d.add(Label::from_full_bc(l), *m);
        }
        d
    }

    #[test]
    fn products() {
        assert_eq!(
            induce_product(&dp(&[], &[1]), &dp(&[], &[1]), 2).unwrap(),
            bc(2, &[(dp(&[], &[2]), 1), (dp(&[], &[1, 1]), 1)])
        );
        assert_eq!(
            induce_product(&dp(&[1], &[]), &dp(&[], &[1]), 2).unwrap(),
            bc(2, &[(dp(&[1], &[1]), 1)])
        );
        assert!(induce_product(&dp(&[1], &[]), &dp(&[], &[1]), 3).is_err());
    }

    #[test]
    fn pieri() {
        assert_eq!(
            pieri_induce(&dp(&[], &[1]), 2).unwrap(),
            bc(2, &[(dp(&[1], &[1]), 1)])
        );
        assert_eq!(
            pieri_induce(&dp(&[1], &[]), 2).unwrap(),
            bc(2, &[(dp(&[2], &[]), 1), (dp(&[1, 1], &[]), 1)])
        );
        let l = dp(&[2, 1], &[1]);
        assert_eq!(pieri_induce(&l, 4).unwrap(), bc(4, &[(l.clone(), 1)]));
        assert!(pieri_induce(&l, 3).is_err());
        for a in 0..4 {
            let lam = dp(&[a], &[]);
            let strip = DoublePartition::new(Partition::row(6 - a), Partition::empty());
            assert_eq!(
                pieri_induce(&lam, 6).unwrap(),
                induce_product(&lam, &strip, 6).unwrap()
            );
        }
    }

    #[test]
    fn coinvariant_restriction() {
        assert_eq!(
            coinvariant_restrict_multiplicity(&dp(&[5], &[]), &dp(&[2], &[]), 2).unwrap(),
            1
        );
        assert_eq!(
            coinvariant_restrict_multiplicity(&dp(&[1], &[1]), &dp(&[], &[1]), 1).unwrap(),
            1
        );
        assert_eq!(
            coinvariant_restrict_multiplicity(&dp(&[1], &[1]), &dp(&[1], &[]), 1).unwrap(),
            0
        );
        assert_eq!(
            coinvariant_restrict_multiplicity(&dp(&[1, 1], &[]), &dp(&[], &[]), 0).unwrap(),
            0
        );
    }

    #[test]
    fn one_step() {
        assert_eq!(
            induce_one_step(&dp(&[], &[])),
            bc(1, &[(dp(&[1], &[]), 1), (dp(&[], &[1]), 1)])
        );
        assert_eq!(
            induce_one_step(&dp(&[1], &[1])),
            bc(
                3,
                &[
                    (dp(&[2], &[1]), 1),
                    (dp(&[1, 1], &[1]), 1),
                    (dp(&[1], &[2]), 1),
                    (dp(&[1], &[1, 1]), 1)
                ]
            )
        );
    }

    #[test]
    fn chain_counts() {
        let n = 5;
        assert_eq!(m_module_multiplicity(&dp(&[5], &[]), 3, n).unwrap(), 1);
        assert_eq!(m_module_multiplicity(&dp(&[4], &[1]), 1, n).unwrap(), 1);
        assert_eq!(m_module_multiplicity(&dp(&[3], &[1, 1]), 2, n).unwrap(), 1);
        assert_eq!(m_module_multiplicity(&dp(&[3], &[2]), 2, n).unwrap(), 1);
        assert_eq!(m_module_multiplicity(&dp(&[4], &[1]), 2, n).unwrap(), 2);
        assert_eq!(
            m_module_multiplicity(&dp(&[1, 1, 1, 1, 1], &[]), 2, n).unwrap(),
            0
        );
    }

    #[test]
    fn restrictions() {
        let mut sn = Decomposition::zero(Family::A, 2);
        sn.add(Label::from_full_a(&p(&[2])), 1);
        sn.add(Label::from_full_a(&p(&[1, 1])), 1);
        assert_eq!(restrict_to_sn(&dp(&[1], &[1])), sn);
        assert_eq!(restrict_to_sn(&dp(&[], &[1])).terms().len(), 1);

        let d = restrict_to_dn(&bc(2, &[(dp(&[1], &[1]), 1)])).unwrap();
        let want: Vec<_> = [Sign::Plus, Sign::Minus]
            .map(|s| (Label::D(DLabel::Split(p(&[1]), s)), 1))
            .into();
        assert_eq!(d, Decomposition::from_terms(Family::D, 2, want).unwrap());

        let d = restrict_to_dn(&bc(3, &[(dp(&[2], &[1]), 1), (dp(&[1], &[2]), 1)])).unwrap();
        assert_eq!(
            d.multiplicity(&Label::D(DLabel::pair(p(&[2]), p(&[1])).unwrap())),
            2
        );
        assert_eq!(d.dimension(), 6);
    }

    #[test]
    fn positive_characteristic_is_refused() {
        assert!(require_characteristic_zero(0).is_ok());
        assert!(matches!(
            require_characteristic_zero(3),
            Err(Error::OutsideScope(_))
        ));
    }
}
