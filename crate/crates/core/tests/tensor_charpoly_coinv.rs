mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylrep::branching::restrict_to_dn;
use weylrep::charpoly::{fit, CharacterPolynomial, Monomial};
use weylrep::coinv::{graded_piece, GradedPiece};
use weylrep::tensor::{stable_kronecker, tensor_decompose, tensor_decompose_d_table};
use weylrep::weyl::{ClassFunction, ClassLabel, SignedCycleType, SignedPermutation};
use weylrep::{Decomposition, Error, Family, Label, Limits, PaddedLabel, Rational};

fn labelled(family: Family, n: usize) -> impl Strategy<Value = PaddedLabel> {
    proptest::sample::select(labels(family, n)).prop_map(move |label| PaddedLabel { n, label })
}

fn family_and_pair() -> impl Strategy<Value = (PaddedLabel, PaddedLabel)> {
    prop_oneof![
        (0usize..=6).prop_flat_map(|n| (labelled(Family::A, n), labelled(Family::A, n))),
        (0usize..=5).prop_flat_map(|n| (labelled(Family::BC, n), labelled(Family::BC, n))),
        (2usize..=5).prop_flat_map(|n| (labelled(Family::D, n), labelled(Family::D, n))),
    ]
}

proptest! {
    #[test]
    fn tensor_dimension_is_multiplicative((a, b) in family_and_pair()) {
        let limits = Limits::default();
        let prod = tensor_decompose(&a, &b, &limits).unwrap();
        prop_assert_eq!(prod.dimension(), a.dimension() * b.dimension());
        prop_assert_eq!(&prod, &tensor_decompose(&b, &a, &limits).unwrap());
    }

    #[test]
    fn trivial_is_the_tensor_unit((a, _) in family_and_pair()) {
        let limits = Limits::default();
        let unit = Decomposition::trivial(a.family(), a.n);
        let (label, _) = unit.iter().next().unwrap();
        let t = PaddedLabel { n: a.n, label: label.clone() };
        prop_assert_eq!(tensor_decompose(&t, &a, &limits).unwrap(), Decomposition::irreducible(a));
    }

    #[test]
    fn tensor_weight_is_subadditive(
        lambda in any_double_partition(2),
        mu in any_double_partition(2),
        n in 0usize..=5,
    ) {
        let limits = Limits::default();
        let (Some(_), Some(_)) = (lambda.pad(n), mu.pad(n)) else { return Ok(()); };
        let a = PaddedLabel::new(Label::BC(lambda.clone()), n).unwrap();
        let b = PaddedLabel::new(Label::BC(mu.clone()), n).unwrap();
        prop_assert!(tensor_decompose(&a, &b, &limits).unwrap().weight() <= lambda.size() + mu.size());
    }
}

#[test]
fn d_tensor_routes_agree() {
    let limits = Limits::default();
    for n in 2..=4 {
        let ls = labels(Family::D, n);
        for a in &ls {
            for b in &ls {
                let (a, b) = (
                    PaddedLabel {
                        n,
                        label: a.clone(),
                    },
                    PaddedLabel {
                        n,
                        label: b.clone(),
                    },
                );
                assert_eq!(
                    tensor_decompose(&a, &b, &limits).unwrap(),
                    tensor_decompose_d_table(&a, &b, &limits).unwrap(),
                    "D_{n}: {} ⊗ {}",
                    a.label,
                    b.label
                );
            }
        }
    }
}

#[test]
fn folding_commutes_with_tensoring() {
    let limits = Limits::default();
    for n in 2..=4 {
        for x in labels(Family::BC, n) {
            for y in labels(Family::BC, n) {
                let (a, b) = (
                    PaddedLabel {
                        n,
                        label: x.clone(),
                    },
                    PaddedLabel {
                        n,
                        label: y.clone(),
                    },
                );
                let folded = restrict_to_dn(&tensor_decompose(&a, &b, &limits).unwrap()).unwrap();
                let fa = restrict_to_dn(&Decomposition::irreducible(a)).unwrap();
                let fb = restrict_to_dn(&Decomposition::irreducible(b)).unwrap();
                let (Some(la), Some(lb)) = (single_pair(&fa), single_pair(&fb)) else {
                    continue;
                };
                let direct = tensor_decompose(
                    &PaddedLabel { n, label: la },
                    &PaddedLabel { n, label: lb },
                    &limits,
                )
                .unwrap();
                assert_eq!(folded, direct, "D_{n}: {x} ⊗ {y}");
            }
        }
    }
}

fn single_pair(dec: &Decomposition) -> Option<Label> {
    let mut it = dec.iter();
    match (it.next(), it.next()) {
        (Some((l, 1)), None) => Some(l.clone()),
        _ => None,
    }
}

#[test]
fn stable_kronecker_is_commutative() {
    let limits = Limits::default();
    let small = double_partitions_up_to(2);
    for lambda in &small {
        for mu in &small {
            match (
                stable_kronecker(lambda, mu, 2, &limits),
                stable_kronecker(mu, lambda, 2, &limits),
            ) {
                (Ok(x), Ok(y)) => {
                    assert_eq!(x.coefficients, y.coefficients, "{lambda} ⊗ {mu}");
                    assert_eq!(x.onset_n, y.onset_n);
                    for nu in x.coefficients.keys() {
                        assert!(nu.size() <= lambda.size() + mu.size());
                    }
                }
                (Err(Error::Inconclusive { .. }), Err(Error::Inconclusive { .. })) => {}
                (x, y) => panic!("{lambda} ⊗ {mu}: {x:?} vs {y:?}"),
            }
        }
    }
}

fn arbitrary_polynomial() -> impl Strategy<Value = CharacterPolynomial> {
    let basis = Monomial::all_up_to(3);
    proptest::collection::vec((-4i64..=4, 1i64..=3), basis.len()).prop_map(move |coeffs| {
        let mut f = CharacterPolynomial::zero();
        for (m, (p, q)) in basis.iter().zip(coeffs) {
            f.add_term(m.clone(), Rational::new(p.into(), q.into()));
        }
        f
    })
}

proptest! {
    #[test]
    fn character_polynomials_are_class_functions(
        f in arbitrary_polynomial(),
        g in proptest::sample::select(SignedPermutation::all(Family::BC, 3)),
        x in proptest::sample::select(SignedPermutation::all(Family::BC, 3)),
    ) {
        prop_assert_eq!(
            f.evaluate(&g.signed_cycle_type()),
            f.evaluate(&g.conjugate_by(&x).signed_cycle_type())
        );
    }

    #[test]
    fn identity_value_is_the_dimension_polynomial(f in arbitrary_polynomial(), n in 0usize..12) {
        prop_assert_eq!(f.evaluate(&SignedCycleType::identity(n)), f.dimension_polynomial().evaluate(n as i64));
    }

    #[test]
    fn binomial_basis_round_trips(f in arbitrary_polynomial()) {
        prop_assert_eq!(CharacterPolynomial::from_binomial_basis(&f.binomial_basis()), f);
    }

    #[test]
    fn fitting_inverts_evaluation(f in arbitrary_polynomial()) {
        let samples: Vec<ClassFunction> = (3..=7)
            .map(|n| ClassFunction { family: Family::BC, n, values: evaluate_on_classes(&f, Family::BC, n) })
            .collect();
        prop_assert_eq!(fit(&samples, 3).unwrap(), Some(f));
    }
}

#[test]
fn seeded_fit_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let f = random_polynomial(&mut rng, 3);
        let samples: Vec<ClassFunction> = (3..=7)
            .map(|n| ClassFunction {
                family: Family::BC,
                n,
                values: evaluate_on_classes(&f, Family::BC, n),
            })
            .collect();
        assert_eq!(fit(&samples, 3).unwrap(), Some(f));
    }
}

#[test]
fn fitting_refuses_underdetermined_windows() {
    let f = CharacterPolynomial::var(weylrep::charpoly::Var::x(3));
    let samples = vec![ClassFunction {
        family: Family::BC,
        n: 1,
        values: evaluate_on_classes(&f, Family::BC, 1),
    }];
    assert!(matches!(
        fit(&samples, 3),
        Err(Error::WindowTooSmall { .. })
    ));
}

const GRADES: [&[usize]; 7] = [&[1], &[2], &[3], &[1, 1], &[2, 1], &[1, 2], &[1, 1, 1]];

#[test]
fn ideal_is_a_subrepresentation() {
    let limits = Limits::default();
    for family in [Family::A, Family::BC, Family::D] {
        for n in 1..=3 {
            for j in GRADES {
                let piece = GradedPiece::new(family, n, j, &limits).unwrap();
                for g in SignedPermutation::all(family, n) {
                    assert!(piece.ideal_is_stable_under(&g), "{family}_{n} J = {j:?}");
                }
            }
        }
    }
}

#[test]
fn traces_are_constant_on_classes() {
    let limits = Limits::default();
    for family in [Family::A, Family::BC, Family::D] {
        for n in 2..=3 {
            for j in GRADES {
                let piece = GradedPiece::new(family, n, j, &limits).unwrap();
                let chi = piece.character().unwrap();
                for g in SignedPermutation::all(family, n) {
                    let class = ClassLabel::of_element(family, &g).unwrap();
                    assert_eq!(
                        &piece.trace(&g),
                        chi.get(&class).unwrap(),
                        "{family}_{n} J = {j:?}"
                    );
                }
                let id = ClassLabel::of_element(family, &SignedPermutation::identity(n)).unwrap();
                assert_eq!(chi.get(&id).unwrap(), &q(piece.dimension() as i64));
            }
        }
    }
}

#[test]
fn coinvariant_poincare_series() {
    let limits = Limits::default();
    let dims = |family, n, top| -> Vec<usize> {
        (0..=top)
            .map(|d| graded_piece(family, n, &[d], &limits).unwrap().dimension)
            .collect()
    };
    // (1+q)(1+q+q²+q³) for B_2, (1+q)(1+q+q²) for S_3
    assert_eq!(dims(Family::BC, 2, 5), vec![1, 2, 2, 2, 1, 0]);
    assert_eq!(dims(Family::BC, 2, 5).iter().sum::<usize>(), 8);
    assert_eq!(dims(Family::A, 3, 4), vec![1, 2, 2, 1, 0]);
    // D_2 = Z/2 × Z/2 acting by x ↦ ±x with an even number of signs
    assert_eq!(dims(Family::D, 2, 3).iter().sum::<usize>(), 4);
}

#[test]
fn characters_are_symmetric_in_j() {
    let limits = Limits::default();
    for family in [Family::A, Family::BC, Family::D] {
        for n in 1..=3 {
            for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2)] {
                let x = graded_piece(family, n, &[a, b], &limits).unwrap();
                let y = graded_piece(family, n, &[b, a], &limits).unwrap();
                assert_eq!(x.dimension, y.dimension);
                assert_eq!(x.character, y.character, "{family}_{n} ({a},{b})");
            }
        }
    }
}

#[test]
fn trailing_zero_grades_change_nothing() {
    let limits = Limits::default();
    for family in [Family::A, Family::BC] {
        for n in 1..=3 {
            for j in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
                let mut padded = j.clone();
                padded.push(0);
                let x = graded_piece(family, n, &j, &limits).unwrap();
                let y = graded_piece(family, n, &padded, &limits).unwrap();
                assert_eq!(x.character, y.character, "{family}_{n} {j:?}");
                assert_eq!(y.r, x.r + 1);
            }
        }
    }
}

#[test]
fn degree_zero_piece_is_trivial() {
    let limits = Limits::default();
    for n in 0..=3 {
        let piece = graded_piece(Family::BC, n, &[0, 0], &limits).unwrap();
        assert_eq!(piece.dimension, 1);
        assert!(piece.character.values.values().all(|v| *v == q(1)));
    }
}
