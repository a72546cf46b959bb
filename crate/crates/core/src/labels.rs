//! Irreducible labels for the three families, in the padded notation.
//!
//! Types A and BC store the *unpadded* body: `V(λ)_n` is the irreducible
//! indexed by `λ[n]`. Since every partition `ν ⊢ n` is `ν̄[n]` for `ν̄` = `ν`
//! without its first row, unpadded bodies biject with irreducibles at each
//! rank, and "the same irreducible across `n`" is literal key equality.
//!
//! Type D labels store the full partitions: an unordered pair `{α, β}` with
//! `α ≠ β`, or a split label `{α, ±}` with `|α| = n/2`. Their rank-independent
//! form is [`StableKey`].

use core::fmt;

use crate::error::{Error, Result};
use crate::partitions::{DoublePartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Symmetric groups `S_n`.
    A,
    /// Signed permutation groups `B_n`.
    BC,
    /// Even-signed permutation groups `D_n`.
    D,
}

impl Family {
    /// `|W_n|`.
    pub fn order(self, n: usize) -> u128 {
        let fact = crate::partitions::factorial(n);
        match self {
            Family::A => fact,
            Family::BC => fact << n,
            Family::D if n == 0 => 1,
            Family::D => fact << (n - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::BC => "BC",
            Family::D => "D",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An irreducible `D_n`-representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DLabel {
    /// `V_{α,β}`, the common restriction of `V_(α,β)` and `V_(β,α)`; stored
    /// with `α < β`.
    Pair(Partition, Partition),
    /// One half of the restriction of `V_(α,α)`.
    Split(Partition, Sign),
}

impl DLabel {
    /// The unordered pair `{a, b}`; fails when `a = b`, which is the split case.
    pub fn pair(a: Partition, b: Partition) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(DLabel::Pair(a, b)),
            core::cmp::Ordering::Greater => Ok(DLabel::Pair(b, a)),
            core::cmp::Ordering::Equal => Err(Error::invalid(
                "a D_n pair label needs two distinct partitions; equal halves split",
            )),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            DLabel::Pair(a, b) => a.size() + b.size(),
            DLabel::Split(a, _) => 2 * a.size(),
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, DLabel::Split(..))
    }

    fn stable_key(&self) -> StableKey {
        match self {
            DLabel::Pair(a, b) => {
                // the member with the longer first row is the padded one
                let (top, other) = if (a.first(), a) >= (b.first(), b) {
                    (a, b)
                } else {
                    (b, a)
                };
                StableKey::D {
                    body: DoublePartition::new(top.unpad(), other.clone()),
                    split: None,
                }
            }
            // the trivial representation of D_0
            DLabel::Split(a, _) if a.is_empty() => StableKey::D {
                body: DoublePartition::default(),
                split: None,
            },
            DLabel::Split(a, s) => StableKey::D {
                body: DoublePartition::new(a.unpad(), a.clone()),
                split: Some(*s),
            },
        }
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::Pair(a, b) => write!(f, "{{{a},{b}}}"),
            DLabel::Split(a, s) => write!(f, "{{{a},{s}}}"),
        }
    }
}

/// The body of an irreducible label; see the module docs for conventions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A(Partition),
    BC(DoublePartition),
    D(DLabel),
}

impl Label {
    pub fn family(&self) -> Family {
        match self {
            Label::A(_) => Family::A,
            Label::BC(_) => Family::BC,
            Label::D(_) => Family::D,
        }
    }

    /// Label of the `S_n` irreducible `V_ν`.
    pub fn from_full_a(nu: &Partition) -> Self {
        Label::A(nu.unpad())
    }

    /// Label of the `B_n` irreducible `V_(ν⁺,ν⁻)`.
    pub fn from_full_bc(nu: &DoublePartition) -> Self {
        Label::BC(nu.unpad())
    }

    /// The padded `S_n` partition at rank `n`, if this is a valid type-A
    /// label there.
    pub fn full_a(&self, n: usize) -> Option<Partition> {
        match self {
            Label::A(l) => l.pad(n),
            _ => None,
        }
    }

    /// The padded double partition at rank `n`, if this is a valid type-BC
    /// label there.
    pub fn full_bc(&self, n: usize) -> Option<DoublePartition> {
        match self {
            Label::BC(l) => l.pad(n),
            _ => None,
        }
    }

    /// Checks that the label names an irreducible of `W_n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match self {
            Label::A(l) => l.pad(n).is_some(),
            Label::BC(l) => l.pad(n).is_some(),
            Label::D(DLabel::Pair(a, b)) => a != b && a.size() + b.size() == n,
            Label::D(DLabel::Split(a, s)) => 2 * a.size() == n && (n > 0 || *s == Sign::Plus),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(alloc::format!(
                "{self} is not an irreducible label of {} at n = {n}",
                self.family()
            )))
        }
    }

    /// The rank-independent key used to compare decompositions across `n`.
    pub fn stable_key(&self) -> StableKey {
        match self {
            Label::A(l) => StableKey::A(l.clone()),
            Label::BC(l) => StableKey::BC(l.clone()),
            Label::D(d) => d.stable_key(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(l) => write!(f, "{l}"),
            Label::BC(l) => write!(f, "{l}"),
            Label::D(d) => write!(f, "{d}"),
        }
    }
}

/// The unpadded, rank-independent name of an irreducible.
///
/// For type D the padded member of the pair is the one with the longer first
/// row; for large `n` that is always the member carrying `n − |λ|` boxes in
/// its top row, so the key agrees with the `V(λ)_n` body.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StableKey {
    A(Partition),
    BC(DoublePartition),
    D {
        body: DoublePartition,
        split: Option<Sign>,
    },
}

impl StableKey {
    /// `|λ|` of the unpadded body: the weight contributed by this term.
    pub fn size(&self) -> usize {
        match self {
            StableKey::A(l) => l.size(),
            StableKey::BC(l) => l.size(),
            StableKey::D { body, .. } => body.size(),
        }
    }
}

impl fmt::Display for StableKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StableKey::A(l) => write!(f, "{l}"),
            StableKey::BC(l) => write!(f, "{l}"),
            StableKey::D { body, split: None } => write!(f, "{body}"),
            StableKey::D {
                body,
                split: Some(s),
            } => write!(f, "{body}{s}"),
        }
    }
}

/// A label together with its rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaddedLabel {
    pub n: usize,
    pub label: Label,
}

impl PaddedLabel {
    pub fn new(label: Label, n: usize) -> Result<Self> {
        label.validate(n)?;
        Ok(PaddedLabel { n, label })
    }

    pub fn family(&self) -> Family {
        self.label.family()
    }

    pub fn dimension(&self) -> u128 {
        crate::weyl::irrep_dimension(self)
    }
}

impl fmt::Display for PaddedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}:{}", self.family(), self.n, self.label)
    }
}
