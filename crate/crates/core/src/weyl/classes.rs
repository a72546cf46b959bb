use alloc::vec::Vec;
use core::fmt;

use super::perm::{SignedCycleType, SignedPermutation};
use crate::error::{Error, Result};
use crate::labels::{Family, Sign};
use crate::partitions::{factorial, Partition};

/// Largest rank for which class sizes fit the `u128` formulas.
pub const MAX_CLASS_RANK: usize = 30;

/// A conjugacy class of `S_n`, `B_n` or `D_n`.
///
/// In type D the marker is present exactly for the split classes: no negative
/// cycles and all positive cycles of even length. `+` is the half containing
/// the sign-free representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    A(Partition),
    BC(SignedCycleType),
    D(SignedCycleType, Option<Sign>),
}

impl ClassLabel {
    pub fn family(&self) -> Family {
        match self {
            ClassLabel::A(_) => Family::A,
            ClassLabel::BC(_) => Family::BC,
            ClassLabel::D(..) => Family::D,
        }
    }

    /// The signed cycle type, with type-A cycles read as positive.
    pub fn signed_type(&self) -> SignedCycleType {
        match self {
            ClassLabel::A(l) => SignedCycleType::new(l.clone(), Partition::empty()),
            ClassLabel::BC(t) | ClassLabel::D(t, _) => t.clone(),
        }
    }

    pub fn representative(&self) -> SignedPermutation {
        match self {
            ClassLabel::D(t, s) => SignedPermutation::d_representative(t, *s),
            _ => SignedPermutation::representative(&self.signed_type()),
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, ClassLabel::D(_, Some(_)))
    }

    /// The class of `W_n` containing `w`. For split `D_n` types the half is
    /// decided by conjugating into the `+` representative's class, which
    /// needs element enumeration, so it is only offered for small ranks.
    pub fn of_element(family: Family, w: &SignedPermutation) -> Result<ClassLabel> {
        if !w.belongs_to(family) {
            return Err(Error::invalid("element is not in the group"));
        }
        let t = w.signed_cycle_type();
        Ok(match family {
            Family::A => ClassLabel::A(t.pos),
            Family::BC => ClassLabel::BC(t),
            Family::D if !is_split_type(&t) => ClassLabel::D(t, None),
            Family::D => {
                if t.rank() > 8 {
                    return Err(Error::UnsupportedRank {
                        family,
                        n: t.rank(),
                        max: 8,
                    });
                }
                let plus = SignedPermutation::representative(&t);
                let in_plus = SignedPermutation::all(Family::D, t.rank())
                    .iter()
                    .any(|v| plus.conjugate_by(v) == *w);
                ClassLabel::D(t, Some(if in_plus { Sign::Plus } else { Sign::Minus }))
            }
        })
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::A(l) => write!(f, "{l}"),
            ClassLabel::BC(t) => write!(f, "{t}"),
            ClassLabel::D(t, None) => write!(f, "{t}"),
            ClassLabel::D(t, Some(s)) => write!(f, "{t}{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: ClassLabel,
    pub size: u128,
}

/// A `B_n` type splits in `D_n` iff it has no negative cycles and every
/// positive cycle has even length.
pub fn is_split_type(t: &SignedCycleType) -> bool {
    t.neg.is_empty() && !t.pos.is_empty() && t.pos.parts().iter().all(|p| p % 2 == 0)
}

/// `|C_{S_n}(w)| = Π i^{m_i} m_i!`.
pub fn sn_centralizer(cycle_type: &Partition) -> u128 {
    cycle_type
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u128).pow(m as u32) * factorial(m))
        .product()
}

/// `|C_{B_n}(w)| = Π (2i)^{a_i} a_i! (2i)^{b_i} b_i!` for positive
/// multiplicities `a_i` and negative multiplicities `b_i`.
pub fn bn_centralizer(t: &SignedCycleType) -> u128 {
    let part = |p: &Partition| -> u128 {
        p.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| (2 * i as u128).pow(m as u32) * factorial(m))
            .product()
    };
    part(&t.pos) * part(&t.neg)
}

/// Signed cycle types of rank `n` in the canonical class order: increasing
/// `|neg|`, then increasing positive part, then decreasing negative part.
/// The identity type comes first.
pub fn signed_types(n: usize) -> Vec<SignedCycleType> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pos_list = Partition::all_of_size(n - k);
        pos_list.reverse();
        let negs = Partition::all_of_size(k);
        for pos in &pos_list {
            for neg in &negs {
                out.push(SignedCycleType::new(pos.clone(), neg.clone()));
            }
        }
    }
    out
}

/// Complete list of conjugacy classes with their sizes.
pub fn conjugacy_classes(family: Family, n: usize) -> Result<Vec<ConjugacyClass>> {
    if n > MAX_CLASS_RANK {
        return Err(Error::UnsupportedRank {
            family,
            n,
            max: MAX_CLASS_RANK,
        });
    }
    let out = match family {
        Family::A => {
            let mut parts = Partition::all_of_size(n);
            parts.reverse();
            parts
                .into_iter()
                .map(|l| {
                    let size = factorial(n) / sn_centralizer(&l);
                    ConjugacyClass {
                        label: ClassLabel::A(l),
                        size,
                    }
                })
                .collect()
        }
        Family::BC => signed_types(n)
            .into_iter()
            .map(|t| {
                let size = Family::BC.order(n) / bn_centralizer(&t);
                ConjugacyClass {
                    label: ClassLabel::BC(t),
                    size,
                }
            })
            .collect(),
        Family::D => {
            let mut out = Vec::new();
            for t in signed_types(n) {
                if t.neg.len() % 2 == 1 {
                    continue;
                }
                let size = Family::BC.order(n) / bn_centralizer(&t);
                if is_split_type(&t) {
                    for s in [Sign::Plus, Sign::Minus] {
                        out.push(ConjugacyClass {
                            label: ClassLabel::D(t.clone(), Some(s)),
                            size: size / 2,
                        });
                    }
                } else {
                    out.push(ConjugacyClass {
                        label: ClassLabel::D(t, None),
                        size,
                    });
                }
            }
            out
        }
    };
    Ok(out)
}
