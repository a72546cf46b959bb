mod common;

use common::*;
use proptest::prelude::*;
use weylrep::branching::{
    coinvariant_restrict_multiplicity, induce_one_step, induce_product, induce_product_a,
    m_module_multiplicity, pieri_induce, pieri_induce_a, restrict_decomposition_to_sn,
    restrict_to_dn, restrict_to_sn,
};
use weylrep::fiw::{
    check_uniform_stability, decompose_m, decompose_m_of_irrep, phi_a, predicted_stable_range,
    v_lambda, weight_of, SequenceDecomposition, StabilityProfile,
};
use weylrep::partitions::binomial;
use weylrep::weyl::{
    character_table, conjugacy_classes, sn_character, ClassFunction, SignedPermutation,
};
use weylrep::{Decomposition, DoublePartition, Family, Label, Limits, Partition, Rational};

/// `Ind_{S_a × S_b}^{S_n} χ_λ ⊠ χ_μ` on `g`, summed over all of `S_n`.
fn induced_sn_character(lambda: &Partition, mu: &Partition, g: &SignedPermutation) -> i64 {
    let a = lambda.size();
    let n = a + mu.size();
    let mut acc = 0;
    for x in SignedPermutation::all(Family::A, n) {
        let h = g.conjugate_by(&x);
        let (Some(h1), Some(h2)) = (block(&h, 0..a), block(&h, a..n)) else {
            continue;
        };
        acc += sn_character(lambda, &h1.signed_cycle_type().pos).unwrap()
            * sn_character(mu, &h2.signed_cycle_type().pos).unwrap();
    }
    let order = (Family::A.order(a) * Family::A.order(n - a)) as i64;
    assert_eq!(acc % order, 0);
    acc / order
}

fn character_matches(dec: &Decomposition, oracle: impl Fn(&SignedPermutation) -> i64) {
    let table = character_table(dec.family, dec.n, &Limits::default()).unwrap();
    let chi = table.character_of_decomposition(dec).unwrap();
    for (c, v) in table.classes.iter().zip(chi) {
        assert_eq!(
            v,
            oracle(&c.label.representative()),
            "{dec} at {:?}",
            c.label
        );
    }
}

#[test]
fn type_a_branching_characters() {
    for n in 0..=6 {
        for a in 0..=n {
            for lambda in Partition::all_of_size(a) {
                let rest = Partition::row(n - a);
                character_matches(&pieri_induce_a(&lambda, n).unwrap(), |g| {
                    induced_sn_character(&lambda, &rest, g)
                });
                if n <= 5 {
                    for mu in Partition::all_of_size(n - a) {
                        character_matches(&induce_product_a(&lambda, &mu, n).unwrap(), |g| {
                            induced_sn_character(&lambda, &mu, g)
                        });
                    }
                }
            }
        }
    }
}

#[test]
fn type_bc_branching_characters() {
    for n in 0..=4 {
        for a in 0..=n {
            for lambda in DoublePartition::all_of_size(a) {
                for mu in DoublePartition::all_of_size(n - a) {
                    character_matches(&induce_product(&lambda, &mu, n).unwrap(), |g| {
                        induced_bn_character(&lambda, &mu, g)
                    });
                }
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    for n in 0..=4 {
        for a in 0..=n {
            for lambda in DoublePartition::all_of_size(a) {
                let induced = pieri_induce(&lambda, n).unwrap();
                for nu in DoublePartition::all_of_size(n) {
                    assert_eq!(
                        induced.multiplicity(&Label::from_full_bc(&nu)),
                        coinvariant_restrict_multiplicity(&nu, &lambda, a).unwrap(),
                        "{lambda} ↑ {nu}"
                    );
                }
            }
        }
    }
}

#[test]
fn m_module_ranks() {
    for m in 0..=3 {
        for n in m..=5 {
            let total: u128 = DoublePartition::all_of_size(n)
                .iter()
                .map(|l| {
                    let dim = Decomposition::irreducible(weylrep::PaddedLabel {
                        n,
                        label: Label::from_full_bc(l),
                    })
                    .dimension();
                    m_module_multiplicity(l, m, n).unwrap() as u128 * dim
                })
                .sum();
            let falling: u128 = ((n - m + 1)..=n).map(|k| k as u128).product();
            assert_eq!(total, (1 << m) * falling, "M_BC({m})_{n}");
        }
    }
}

/// `Ind_{B_{n−1}}^{B_n}` applied termwise.
fn induce_once(dec: &Decomposition) -> Decomposition {
    let mut out = Decomposition::zero(Family::BC, dec.n + 1);
    for (label, m) in dec.iter() {
        out = out
            .sum(&induce_one_step(&label.full_bc(dec.n).unwrap()).scale(m))
            .unwrap();
    }
    out
}

#[test]
fn free_module_is_iterated_one_step_induction() {
    for m in 0..=3 {
        for n in m..=6 {
            let mut dec = Decomposition::trivial(Family::BC, n - m);
            for _ in 0..m {
                dec = induce_once(&dec);
            }
            assert_eq!(decompose_m(Family::BC, m, n).unwrap(), dec, "M_BC({m})_{n}");
        }
    }
}

proptest! {
    #[test]
    fn induction_and_restriction_preserve_dimension(
        lambda in any_double_partition(4),
        mu in any_double_partition(3),
    ) {
        let (a, b) = (lambda.size(), mu.size());
        let n = a + b;
        let dim = |l: &DoublePartition| {
            Decomposition::irreducible(weylrep::PaddedLabel { n: l.size(), label: Label::from_full_bc(l) }).dimension()
        };
        let induced = induce_product(&lambda, &mu, n).unwrap();
        prop_assert_eq!(induced.dimension(), binomial(n, a) * dim(&lambda) * dim(&mu));
        prop_assert_eq!(restrict_decomposition_to_sn(&induced).unwrap().dimension(), induced.dimension());
        prop_assert_eq!(restrict_to_dn(&induced).unwrap().dimension(), induced.dimension());
        prop_assert_eq!(restrict_to_sn(&lambda).dimension(), dim(&lambda));
    }

    #[test]
    fn weight_is_bounded_by_generation_degree(m in 0usize..4, n in 0usize..7) {
        for family in [Family::A, Family::BC, Family::D] {
            prop_assert!(weight_of(&decompose_m(family, m, n).unwrap()) <= m);
        }
        for u in Partition::all_of_size(m) {
            prop_assert!(weight_of(&decompose_m_of_irrep(Family::A, &Label::from_full_a(&u), m, n).unwrap()) <= m);
        }
        for u in DoublePartition::all_of_size(m) {
            let bc = decompose_m_of_irrep(Family::BC, &Label::from_full_bc(&u), m, n).unwrap();
            prop_assert!(weight_of(&bc) <= m);
            prop_assert!(weight_of(&restrict_to_dn(&bc).unwrap()) <= m);
        }
    }
}

#[test]
fn observed_onset_within_predicted_range() {
    for m in 0..=3 {
        let hi = 2 * m + 3;
        for family in [Family::A, Family::BC, Family::D] {
            let seq =
                SequenceDecomposition::build(family, 0, hi, |n| decompose_m(family, m, n)).unwrap();
            let onset = check_uniform_stability(&seq)
                .unwrap()
                .observed_onset
                .unwrap();
            assert!(
                onset <= predicted_stable_range(&StabilityProfile::free(m), family),
                "M_{family}({m}): {onset}"
            );
        }
        for u in DoublePartition::all_of_size(m) {
            let label = Label::from_full_bc(&u);
            let seq = SequenceDecomposition::build(Family::BC, 0, hi, |n| {
                decompose_m_of_irrep(Family::BC, &label, m, n)
            })
            .unwrap();
            let onset = check_uniform_stability(&seq)
                .unwrap()
                .observed_onset
                .unwrap();
            assert!(
                onset <= predicted_stable_range(&StabilityProfile::free(m), Family::BC),
                "M_BC({u}): {onset}"
            );
        }
    }
}

#[test]
fn coinvariants_of_free_modules_freeze() {
    for family in [Family::A, Family::BC] {
        for m in 0..=3 {
            for a in 0..=2 {
                let phi: Vec<Decomposition> = (0..=m + 3)
                    .map(|n| phi_a(&decompose_m(family, m, n + a).unwrap(), a).unwrap())
                    .collect();
                for w in phi.windows(2) {
                    assert!(
                        w[0].dimension() <= w[1].dimension(),
                        "Φ_{a} M_{family}({m}) shrinks"
                    );
                }
                for n in m..phi.len() {
                    assert_eq!(phi[n], phi[m], "Φ_{a} M_{family}({m}) moves at n = {n}");
                }
            }
        }
    }
}

#[test]
fn coinvariants_of_v_lambda_freeze() {
    for lambda in double_partitions_up_to(3) {
        for a in 0..=2 {
            let from = a + lambda.pos.first();
            let at = |n: usize| phi_a(&v_lambda(Family::BC, &lambda, n + a).unwrap(), a).unwrap();
            let first = at(from);
            for n in from + 1..=from + 4 {
                assert_eq!(at(n), first, "Φ_{a} V({lambda}) at n = {n}");
            }
        }
    }
}

#[test]
fn coinvariants_of_b_n_reps_by_characters() {
    // Φ_a on a single irreducible equals the trivial-isotypic part of its
    // restriction, computed here from class sums over B_a × B_n.
    for big in 0..=4 {
        for a in 0..=big {
            let n = big - a;
            for nu in DoublePartition::all_of_size(big) {
                let dec = Decomposition::irreducible(weylrep::PaddedLabel {
                    n: big,
                    label: Label::from_full_bc(&nu),
                });
                let phi = phi_a(&dec, a).unwrap();
                for target in DoublePartition::all_of_size(a) {
                    let want = decompose_restriction(&nu, &target, a, n);
                    assert_eq!(
                        phi.multiplicity(&Label::from_full_bc(&target)),
                        want,
                        "Φ_{a} {nu} at {target}"
                    );
                }
            }
        }
    }
}

/// `⟨Res χ_ν, χ_target ⊠ 1⟩` over `B_a × B_n`.
fn decompose_restriction(
    nu: &DoublePartition,
    target: &DoublePartition,
    a: usize,
    n: usize,
) -> u64 {
    let ca = conjugacy_classes(Family::BC, a).unwrap();
    let cb = conjugacy_classes(Family::BC, n).unwrap();
    let mut acc: i128 = 0;
    for x in &ca {
        for y in &cb {
            let (tx, ty) = (x.label.signed_type(), y.label.signed_type());
            let joint =
                weylrep::weyl::SignedCycleType::new(tx.pos.union(&ty.pos), tx.neg.union(&ty.neg));
            let v = weylrep::weyl::bn_character(nu, &joint).unwrap()
                * weylrep::weyl::bn_character(target, &tx).unwrap();
            acc += (x.size * y.size) as i128 * v as i128;
        }
    }
    let order = (Family::BC.order(a) * Family::BC.order(n)) as i128;
    assert_eq!(acc % order, 0);
    (acc / order) as u64
}

#[test]
fn regular_character_of_free_module_at_its_degree() {
    // M_W(m)_m is the regular representation of W_m.
    for family in [Family::A, Family::BC, Family::D] {
        for m in 0..=4 {
            let dec = decompose_m(family, m, m).unwrap();
            let table = character_table(family, m, &Limits::default()).unwrap();
            let chi = table.character_of_decomposition(&dec).unwrap();
            let regular = ClassFunction::regular(family, m).unwrap();
            for (c, v) in table.classes.iter().zip(chi) {
                assert_eq!(
                    Rational::from_integer(v.into()),
                    regular.get(&c.label).unwrap().clone(),
                    "{family}_{m}"
                );
            }
        }
    }
}
