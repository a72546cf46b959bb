mod common;

use common::*;
use proptest::prelude::*;
use weylrep::lr::{lr_coefficient, lr_expand};
use weylrep::partitions::binomial;
use weylrep::Partition;

proptest! {
    #[test]
    fn pad_then_drop_first_row(lambda in any_partition(6), n in 0usize..14) {
        match lambda.pad(n) {
            Some(full) => {
                prop_assert_eq!(full.size(), n);
                prop_assert_eq!(Partition::new(full.parts().get(1..).unwrap_or_default().to_vec()).unwrap(), lambda.clone());
                prop_assert_eq!(full.unpad(), lambda);
            }
            None => prop_assert!(n < lambda.size() + lambda.first()),
        }
    }

    #[test]
    fn strips_are_adjoint(lambda in any_partition(6), k in 0usize..5) {
        let added = lambda.add_horizontal_strip(k);
        for mu in Partition::all_of_size(lambda.size() + k) {
            prop_assert_eq!(added.contains(&mu), mu.remove_horizontal_strip(k).contains(&lambda));
        }
    }

    #[test]
    fn conjugation_is_an_involution(lambda in any_partition(10)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.size(), lambda.size());
        prop_assert_eq!(c.conjugate(), lambda.clone());
        prop_assert_eq!(c.standard_tableaux_count(), lambda.standard_tableaux_count());
    }

    #[test]
    fn single_row_expansion_is_pieri(lambda in any_partition(6), k in 0usize..5) {
        let expanded = lr_expand(&lambda, &Partition::row(k));
        let strips = lambda.add_horizontal_strip(k);
        prop_assert_eq!(expanded.len(), strips.len());
        for mu in strips {
            prop_assert_eq!(expanded.get(&mu).copied(), Some(1));
        }
    }
}

#[test]
fn strips_match_cell_enumeration() {
    for lambda in partitions_up_to(6) {
        for k in 0..=4 {
            let mut got = lambda.add_horizontal_strip(k);
            got.sort();
            assert_eq!(got, strip_oracle(&lambda, k), "{lambda} + {k}");
        }
    }
}

#[test]
fn tableaux_counts_square_sum() {
    for n in 0..=9 {
        let total: u128 = Partition::all_of_size(n)
            .iter()
            .map(|l| l.standard_tableaux_count().pow(2))
            .sum();
        assert_eq!(total, weylrep::partitions::factorial(n));
    }
}

#[test]
fn lr_symmetry() {
    for lambda in partitions_up_to(5) {
        for mu in partitions_up_to(5) {
            for nu in Partition::all_of_size(lambda.size() + mu.size()) {
                assert_eq!(
                    lr_coefficient(&lambda, &mu, &nu),
                    lr_coefficient(&mu, &lambda, &nu),
                    "{lambda} {mu} {nu}"
                );
            }
        }
    }
}

#[test]
fn lr_dimension_sum() {
    for total in 0..=8 {
        for a in 0..=total {
            for lambda in Partition::all_of_size(a) {
                for mu in Partition::all_of_size(total - a) {
                    let lhs: u128 = lr_expand(&lambda, &mu)
                        .iter()
                        .map(|(nu, &c)| c as u128 * nu.standard_tableaux_count())
                        .sum();
                    let rhs = binomial(total, a)
                        * lambda.standard_tableaux_count()
                        * mu.standard_tableaux_count();
                    assert_eq!(lhs, rhs, "{lambda} · {mu}");
                }
            }
        }
    }
}

#[test]
fn lr_matches_induced_characters() {
    for total in 0..=5 {
        for a in 0..=total {
            for lambda in Partition::all_of_size(a) {
                for mu in Partition::all_of_size(total - a) {
                    for nu in Partition::all_of_size(total) {
                        assert_eq!(
                            lr_coefficient(&lambda, &mu, &nu) as i64,
                            lr_by_characters(&lambda, &mu, &nu)
                        );
                    }
                }
            }
        }
    }
}
