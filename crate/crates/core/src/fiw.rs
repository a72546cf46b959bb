//! FI_W-modules at the level of their per-rank decompositions: the free
//! modules `M_W(m)` and `M_W(U)`, the modules `V(λ)`, weight, the
//! coinvariant functors `Φ_a`, and stability checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::branching::{
    coinvariant_restrict_multiplicity, coinvariant_restrict_multiplicity_a, m_module_decomposition,
    pieri_induce, pieri_induce_a, restrict_to_dn,
};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::labels::{DLabel, Family, Label, Sign, StableKey};
use crate::partitions::{DoublePartition, Partition};

/// `M_W(m)_n = Ind_{W_{n−m}}^{W_n} k`.
///
/// Type D uses `M_D(m)_n = Res M_BC(m)_n` for `n > m`; at `n = m` it is the
/// regular representation of `D_m`, which is half of `Res k[B_m]`.
pub fn decompose_m(family: Family, m: usize, n: usize) -> Result<Decomposition> {
    match family {
        Family::A | Family::BC => m_module_decomposition(family, m, n),
        Family::D if m > n => Ok(Decomposition::zero(Family::D, n)),
        Family::D if n == 0 => Ok(Decomposition::trivial(Family::D, 0)),
        Family::D => {
            let folded = restrict_to_dn(&m_module_decomposition(Family::BC, m, n)?)?;
            if m < n {
                return Ok(folded);
            }
            let mut regular = Decomposition::zero(Family::D, n);
            for (label, mult) in folded.iter() {
                debug_assert!(mult % 2 == 0, "Res k[B_m] is two copies of k[D_m]");
                regular.add(label.clone(), mult / 2);
            }
            Ok(regular)
        }
    }
}

/// `M_W(U)_n = Ind_{W_m × W_{n−m}}^{W_n} U ⊠ k` for an irreducible `U` of
/// `W_m`, given by its label at rank `m`. Zero when `n < m`.
pub fn decompose_m_of_irrep(
    family: Family,
    u: &Label,
    m: usize,
    n: usize,
) -> Result<Decomposition> {
    if u.family() != family {
        return Err(Error::invalid("label from a different family"));
    }
    u.validate(m)?;
    if n < m {
        return Ok(Decomposition::zero(family, n));
    }
    match family {
        Family::A => pieri_induce_a(&u.full_a(m).expect("validated"), n),
        Family::BC => pieri_induce(&u.full_bc(m).expect("validated"), n),
        Family::D => Err(Error::OutsideScope(
            "M_D(U) needs D_n branching rules; compute M_BC(U) and fold instead",
        )),
    }
}

/// The rank from which `V(λ)_n` is nonzero: `|λ| + λ⁺₁`.
pub fn v_lambda_onset(lambda: &DoublePartition) -> usize {
    lambda.size() + lambda.pos.first()
}

/// `V(λ)_n` for the FI_BC-module `V(λ⁺, λ⁻)` and its restriction to FI_D.
/// For type A pass `λ = (λ, ∅)`.
///
/// The module is `V_λ[n]` once `n ≥ |λ| + λ⁺₁` and zero below. In type D
/// the single `B_n` irreducible folds to `V_{λ⁺[n−|λ⁻|], λ⁻}`, or to the
/// split pair `V_{λ⁻,+} ⊕ V_{λ⁻,−}` when the two halves coincide.
pub fn v_lambda(family: Family, lambda: &DoublePartition, n: usize) -> Result<Decomposition> {
    if family == Family::A && !lambda.neg.is_empty() {
        return Err(Error::invalid("type A labels have no negative part"));
    }
    let mut out = Decomposition::zero(family, n);
    if n < v_lambda_onset(lambda) {
        return Ok(out);
    }
    let full = lambda.pad(n).expect("n is past the onset");
    match family {
        Family::A => out.add(Label::from_full_a(&full.pos), 1),
        Family::BC => out.add(Label::from_full_bc(&full), 1),
        Family::D => {
            for l in crate::branching::fold_label(&full) {
                out.add(l, 1);
            }
        }
    }
    Ok(out)
}

/// Largest unpadded size among the constituents.
pub fn weight_of(dec: &Decomposition) -> usize {
    dec.weight()
}

/// `Φ_a(V)_n = (V_{n+a})_{W_n}` as a `W_a`-representation, from the
/// decomposition of `V_{n+a}`: the multiplicity of `U` is that of `U ⊠ k`
/// in the restriction to `W_a × W_n`.
pub fn phi_a(dec: &Decomposition, a: usize) -> Result<Decomposition> {
    if a > dec.n {
        return Err(Error::InvalidArgument(format!(
            "phi_a: a = {a} exceeds the rank {}",
            dec.n
        )));
    }
    let big = dec.n;
    let mut out = Decomposition::zero(dec.family, a);
    match dec.family {
        Family::A => {
            for target in Partition::all_of_size(a) {
                let mut mult = 0;
                for (label, m) in dec.iter() {
                    let nu = label.full_a(big).expect("label fits its rank");
                    mult += m * coinvariant_restrict_multiplicity_a(&nu, &target, a)?;
                }
                out.add(Label::from_full_a(&target), mult);
            }
        }
        Family::BC => {
            for target in DoublePartition::all_of_size(a) {
                let mut mult = 0;
                for (label, m) in dec.iter() {
                    let nu = label.full_bc(big).expect("label fits its rank");
                    mult += m * coinvariant_restrict_multiplicity(&nu, &target, a)?;
                }
                out.add(Label::from_full_bc(&target), mult);
            }
        }
        Family::D => {
            return Err(Error::OutsideScope(
                "Φ_a in type D needs D_n branching rules; apply it in type BC",
            ))
        }
    }
    Ok(out)
}

/// Generation degree `g`, relation degree `r` (when known) and weight bound
/// `d` of a finitely presented FI_W-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityProfile {
    pub weight_bound: usize,
    pub generation_degree: usize,
    pub relation_degree: Option<usize>,
}

impl StabilityProfile {
    /// The profile of the free module `M_W(m)`: `g = d = m`, no relations
    /// beyond degree `m`.
    pub fn free(m: usize) -> Self {
        StabilityProfile {
            weight_bound: m,
            generation_degree: m,
            relation_degree: Some(m),
        }
    }

    /// True when the relation degree was not supplied and `g` stands in for
    /// it, so the prediction is a heuristic.
    pub fn relation_assumed(&self) -> bool {
        self.relation_degree.is_none()
    }
}

/// `max(g, r) + d`, and in type D with `d = 0` at least `g + 1`.
pub fn predicted_stable_range(profile: &StabilityProfile, family: Family) -> usize {
    let g = profile.generation_degree;
    let r = profile.relation_degree.unwrap_or(g);
    let base = g.max(r) + profile.weight_bound;
    if family == Family::D && profile.weight_bound == 0 {
        base.max(g + 1)
    } else {
        base
    }
}

/// A sequence of decompositions over an inclusive window of ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDecomposition {
    pub family: Family,
    pub lo: usize,
    pub hi: usize,
    pub ranks: Vec<Decomposition>,
}

impl SequenceDecomposition {
    /// Builds the sequence by evaluating `f` at every rank of `lo..=hi`.
    pub fn build(
        family: Family,
        lo: usize,
        hi: usize,
        mut f: impl FnMut(usize) -> Result<Decomposition>,
    ) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty window {lo}..{hi}")));
        }
        let ranks = (lo..=hi)
            .map(|n| {
                let d = f(n)?;
                if d.family != family || d.n != n {
                    return Err(Error::invalid(
                        "sequence entry has the wrong family or rank",
                    ));
                }
                Ok(d)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SequenceDecomposition {
            family,
            lo,
            hi,
            ranks,
        })
    }

    pub fn at(&self, n: usize) -> Option<&Decomposition> {
        n.checked_sub(self.lo).and_then(|i| self.ranks.get(i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    /// Smallest rank from which the unpadded multiplicities no longer change,
    /// or `None` when the last two ranks still differ.
    pub observed_onset: Option<usize>,
    /// The multiplicities at the top of the window.
    pub stable_terms: BTreeMap<StableKey, u64>,
}

/// Finds where the multiset of unpadded labels stops changing.
///
/// Labels are compared literally, so an irreducible `V(λ)_n` only counts
/// from the first rank where `λ[n]` is a partition.
pub fn check_uniform_stability(seq: &SequenceDecomposition) -> Result<StabilityReport> {
    if seq.ranks.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "stability check needs a window of at least 3 ranks, got {}",
            seq.ranks.len()
        )));
    }
    let keyed: Vec<_> = seq.ranks.iter().map(Decomposition::stable_terms).collect();
    let last = keyed.last().expect("nonempty").clone();
    let k = keyed.len();
    if keyed[k - 2] != last {
        return Ok(StabilityReport {
            observed_onset: None,
            stable_terms: last,
        });
    }
    let mut start = k - 1;
    while start > 0 && keyed[start - 1] == last {
        start -= 1;
    }
    Ok(StabilityReport {
        observed_onset: Some(seq.lo + start),
        stable_terms: last,
    })
}

/// True iff a type-D decomposition has no split constituents.
pub fn no_split_check(dec: &Decomposition) -> bool {
    dec.family != Family::D
        || dec
            .terms()
            .keys()
            .all(|l| !matches!(l, Label::D(DLabel::Split(..))))
}

/// Constituents that a module generated in degree `≤ m` cannot contain at
/// rank `n`: the alternating representation (or its pullback) for
/// `n > m + 1`, and in type BC the sign `ε`, i.e. `(∅, (n))`, for `n > m`.
/// Returns the ones present.
pub fn excluded_constituents(dec: &Decomposition, m: usize) -> Vec<Label> {
    let n = dec.n;
    let mut forbidden = Vec::new();
    if n > m + 1 {
        forbidden.push(match dec.family {
            Family::A => Label::from_full_a(&Partition::column(n)),
            Family::BC => Label::from_full_bc(&DoublePartition::new(
                Partition::column(n),
                Partition::empty(),
            )),
            Family::D => {
                Label::D(DLabel::pair(Partition::column(n), Partition::empty()).expect("n > 0"))
            }
        });
    }
    if dec.family == Family::BC && n > m {
        forbidden.push(Label::from_full_bc(&DoublePartition::new(
            Partition::empty(),
            Partition::row(n),
        )));
    }
    forbidden.retain(|l| dec.multiplicity(l) > 0);
    forbidden
}

/// The split labels of a `D_n` decomposition, paired with their signs.
pub fn split_labels(dec: &Decomposition) -> Vec<(Partition, Sign)> {
    dec.terms()
        .keys()
        .filter_map(|l| match l {
            Label::D(DLabel::Split(a, s)) => Some((a.clone(), *s)),
            _ => None,
        })
        .collect()
}
