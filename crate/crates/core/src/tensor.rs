//! Tensor products of irreducibles, and the stable coefficients `g^ν_{λ,μ}`
//! of `V(λ)_n ⊗ V(μ)_n` found by scanning ranks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::branching::restrict_to_dn;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::labels::{DLabel, Family, Label, PaddedLabel, StableKey};
use crate::limits::Limits;
use crate::partitions::DoublePartition;
use crate::weyl::{character_table, CharacterTable};

/// Decomposes `V_a ⊗ V_b` by character inner products.
///
/// Type D pairs are lifted to `B_n`, multiplied there and folded back;
/// tensor products involving a split label are refused.
pub fn tensor_decompose(
    a: &PaddedLabel,
    b: &PaddedLabel,
    limits: &Limits,
) -> Result<Decomposition> {
    if a.family() != b.family() || a.n != b.n {
        return Err(Error::invalid(
            "tensor factors must have the same family and rank",
        ));
    }
    let n = a.n;
    match a.family() {
        Family::A | Family::BC => {
            let table = character_table(a.family(), n, limits)?;
            tensor_in_table(&table, &a.label, &b.label)
        }
        Family::D => {
            let lift = |l: &Label| match l {
                Label::D(DLabel::Pair(x, y)) => Ok(PaddedLabel {
                    n,
                    label: Label::from_full_bc(&DoublePartition::new(x.clone(), y.clone())),
                }),
                _ => Err(Error::OutsideScope(
                    "tensor products with split D_n irreducibles are not computed",
                )),
            };
            let bc = tensor_decompose(&lift(&a.label)?, &lift(&b.label)?, limits)?;
            restrict_to_dn(&bc)
        }
    }
}

fn tensor_in_table(table: &CharacterTable, a: &Label, b: &Label) -> Result<Decomposition> {
    let x = table.character_of(a)?;
    let y = table.character_of(b)?;
    let product: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p * q).collect();
    table.decompose(&product)
}

/// The tensor product of two `D_n` pair labels computed natively in the
/// folded `D_n` table. Agrees with [`tensor_decompose`]; kept as the check of
/// the fold-after-multiplying route.
pub fn tensor_decompose_d_table(
    a: &PaddedLabel,
    b: &PaddedLabel,
    limits: &Limits,
) -> Result<Decomposition> {
    if a.family() != Family::D || b.family() != Family::D || a.n != b.n {
        return Err(Error::invalid("expected two D_n labels of the same rank"));
    }
    let table = character_table(Family::D, a.n, limits)?;
    tensor_in_table(&table, &a.label, &b.label)
}

/// The stable decomposition of `V(λ)_n ⊗ V(μ)_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableTensorResult {
    pub lambda: DoublePartition,
    pub mu: DoublePartition,
    /// `g^ν_{λ,μ}` keyed by the unpadded `ν`.
    pub coefficients: BTreeMap<DoublePartition, u64>,
    /// First rank of the constant run.
    pub onset_n: usize,
    /// The ranks over which the coefficients were observed constant.
    pub verified_window: (usize, usize),
}

/// Scans `n` upward from `|λ| + λ⁺₁ + |μ| + μ⁺₁` until the unpadded
/// decomposition of `V(λ)_n ⊗ V(μ)_n` is identical on `window` consecutive
/// ranks. Only the observed onset is reported; no bound is claimed.
pub fn stable_kronecker(
    lambda: &DoublePartition,
    mu: &DoublePartition,
    window: usize,
    limits: &Limits,
) -> Result<StableTensorResult> {
    if window < 2 {
        return Err(Error::invalid(
            "stable_kronecker needs a window of at least 2 ranks",
        ));
    }
    let start = lambda.size() + lambda.pos.first() + mu.size() + mu.pos.first();
    let ceiling = limits.table_rank(Family::BC);
    let mut run: Vec<(usize, BTreeMap<StableKey, u64>)> = Vec::new();
    for n in start..=ceiling {
        let a = PaddedLabel::new(Label::BC(lambda.clone()), n)?;
        let b = PaddedLabel::new(Label::BC(mu.clone()), n)?;
        let terms = tensor_decompose(&a, &b, limits)?.stable_terms();
        if run.last().is_some_and(|(_, prev)| *prev != terms) {
            run.clear();
        }
        run.push((n, terms));
        if run.len() == window {
            let (onset, terms) = &run[0];
            let coefficients = terms
                .iter()
                .map(|(k, &g)| match k {
                    StableKey::BC(nu) => (nu.clone(), g),
                    _ => unreachable!("type BC keys"),
                })
                .collect();
            return Ok(StableTensorResult {
                lambda: lambda.clone(),
                mu: mu.clone(),
                coefficients,
                onset_n: *onset,
                verified_window: (*onset, n),
            });
        }
    }
    let detail = match run.last() {
        Some((n, terms)) => {
            let rendered: Vec<_> = terms.iter().map(|(k, g)| format!("{g}·{k}")).collect();
            format!(
                "{} constant rank(s) out of {window} needed; last decomposition at n = {n}: {}",
                run.len(),
                rendered.join(" + ")
            )
        }
        None => format!("scan start {start} is beyond the table ceiling"),
    };
    Err(Error::Inconclusive {
        last_rank: ceiling,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
        DoublePartition::new(p(a), p(b))
    }

    fn bc(l: DoublePartition, n: usize) -> PaddedLabel {
        PaddedLabel::new(Label::BC(l), n).unwrap()
    }

    #[test]
    fn small_products() {
        let limits = Limits::default();
        let eps = bc(dp(&[], &[1]), 1);
        assert_eq!(
            tensor_decompose(&eps, &eps, &limits).unwrap(),
            Decomposition::trivial(Family::BC, 1)
        );

        let v = bc(dp(&[], &[1]), 4);
        let got = tensor_decompose(&v, &v, &limits).unwrap();
        let want = Decomposition::from_terms(
            Family::BC,
            4,
            [dp(&[], &[]), dp(&[1], &[]), dp(&[], &[2]), dp(&[], &[1, 1])]
                .map(|l| (Label::BC(l), 1)),
        )
        .unwrap();
        assert_eq!(got, want);
        assert_eq!(got.dimension(), 16);

        let t = bc(DoublePartition::default(), 4);
        assert_eq!(
            tensor_decompose(&t, &v, &limits).unwrap(),
            Decomposition::irreducible(v.clone())
        );
    }

    #[test]
    fn d_route_matches_d_table() {
        let limits = Limits::default();
        let a = PaddedLabel::new(Label::D(DLabel::pair(p(&[3]), p(&[1])).unwrap()), 4).unwrap();
        let b = PaddedLabel::new(Label::D(DLabel::pair(p(&[2]), p(&[1, 1])).unwrap()), 4).unwrap();
        assert_eq!(
            tensor_decompose(&a, &b, &limits).unwrap(),
            tensor_decompose_d_table(&a, &b, &limits).unwrap()
        );
    }

    #[test]
    fn stable_coefficients() {
        let limits = Limits::default();
        let triv = stable_kronecker(
            &DoublePartition::default(),
            &DoublePartition::default(),
            3,
            &limits,
        )
        .unwrap();
        assert_eq!(triv.onset_n, 0);
        assert_eq!(triv.coefficients.len(), 1);

        let eps = dp(&[], &[1]);
        let r = stable_kronecker(&eps, &eps, 2, &limits).unwrap();
        let want: BTreeMap<_, _> = [dp(&[], &[]), dp(&[1], &[]), dp(&[], &[2]), dp(&[], &[1, 1])]
            .into_iter()
            .map(|l| (l, 1))
            .collect();
        assert_eq!(r.coefficients, want);
        assert!(r.verified_window.1 <= 5);

        let small = Limits {
            table_rank_bc: 3,
            ..Limits::default()
        };
        assert!(matches!(
            stable_kronecker(&dp(&[1], &[]), &dp(&[1], &[]), 3, &small),
            Err(Error::Inconclusive { .. })
        ));
    }
}
