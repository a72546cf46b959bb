use alloc::collections::BTreeMap;
use core::fmt;

use crate::error::{Error, Result};
use crate::labels::{DLabel, Family, Label, PaddedLabel, Sign, StableKey};
use crate::partitions::{DoublePartition, Partition};

/// A representation of `W_n` as multiplicities of irreducibles.
///
/// Zero multiplicities are never stored, so the zero representation is the
/// empty map (with its rank).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub family: Family,
    pub n: usize,
    terms: BTreeMap<Label, u64>,
}

impl Decomposition {
    pub fn zero(family: Family, n: usize) -> Self {
        Decomposition {
            family,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A single irreducible with multiplicity one.
    pub fn irreducible(label: PaddedLabel) -> Self {
        let mut d = Decomposition::zero(label.family(), label.n);
        d.add(label.label, 1);
        d
    }

    /// The trivial representation.
    pub fn trivial(family: Family, n: usize) -> Self {
        let label = match family {
            Family::A => Label::A(Default::default()),
            Family::BC => Label::BC(Default::default()),
            // D_0 is the trivial group; its only irreducible is written {∅,+}
            Family::D if n == 0 => Label::D(DLabel::Split(Default::default(), Sign::Plus)),
            Family::D => {
                Label::D(DLabel::pair(Default::default(), Partition::row(n)).expect("n > 0"))
            }
        };
        let mut d = Decomposition::zero(family, n);
        d.add(label, 1);
        d
    }

    /// Builds a decomposition from `(label, multiplicity)` pairs, validating
    /// each label at rank `n`.
    pub fn from_terms(
        family: Family,
        n: usize,
        terms: impl IntoIterator<Item = (Label, u64)>,
    ) -> Result<Self> {
        let mut d = Decomposition::zero(family, n);
        for (label, m) in terms {
            if label.family() != family {
                return Err(Error::invalid("label from a different family"));
            }
            label.validate(n)?;
            d.add(label, m);
        }
        Ok(d)
    }

    /// Adds `m` copies of `label`; adding zero copies is a no-op.
    pub fn add(&mut self, label: Label, m: u64) {
        if m > 0 {
            *self.terms.entry(label).or_insert(0) += m;
        }
    }

    pub fn terms(&self) -> &BTreeMap<Label, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, label: &Label) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of irreducible summands, counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Σ mult · dim`.
    pub fn dimension(&self) -> u128 {
        self.terms
            .iter()
            .map(|(label, &m)| {
                m as u128
                    * PaddedLabel {
                        n: self.n,
                        label: label.clone(),
                    }
                    .dimension()
            })
            .sum()
    }

    /// Largest unpadded size among the constituents; `0` for the zero
    /// representation.
    pub fn weight(&self) -> usize {
        self.terms
            .keys()
            .map(|l| l.stable_key().size())
            .max()
            .unwrap_or(0)
    }

    /// The multiplicities keyed by rank-independent labels.
    ///
    /// In type D a balanced split pair `{α,+} ⊕ {α,−}` is the single module
    /// `V(α[−], α)_n`, so it is keyed like a pair label; only an excess of one
    /// sign keeps its signed key.
    pub fn stable_terms(&self) -> BTreeMap<StableKey, u64> {
        let mut out = BTreeMap::new();
        for (label, &m) in &self.terms {
            let mut m = m;
            if let Label::D(DLabel::Split(a, s)) = label {
                if !a.is_empty() {
                    let flip = if *s == Sign::Plus {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    };
                    let both = m.min(self.multiplicity(&Label::D(DLabel::Split(a.clone(), flip))));
                    if *s == Sign::Plus && both > 0 {
                        let key = StableKey::D {
                            body: DoublePartition::new(a.unpad(), a.clone()),
                            split: None,
                        };
                        *out.entry(key).or_insert(0) += both;
                    }
                    m -= both;
                    if m == 0 {
                        continue;
                    }
                }
            }
            *out.entry(label.stable_key()).or_insert(0) += m;
        }
        out
    }

    /// Direct sum.
    pub fn sum(&self, other: &Decomposition) -> Result<Decomposition> {
        if self.family != other.family || self.n != other.n {
            return Err(Error::invalid(
                "direct sum of representations of different groups",
            ));
        }
        let mut out = self.clone();
        for (label, &m) in &other.terms {
            out.add(label.clone(), m);
        }
        Ok(out)
    }

    /// Multiplies every multiplicity by `k`.
    pub fn scale(&self, k: u64) -> Decomposition {
        let mut out = Decomposition::zero(self.family, self.n);
        for (label, &m) in &self.terms {
            out.add(label.clone(), m * k);
        }
        out
    }

    /// Keeps the terms whose unpadded size is at least `d`.
    pub fn weight_at_least(&self, d: usize) -> Decomposition {
        let mut out = Decomposition::zero(self.family, self.n);
        for (label, &m) in &self.terms {
            if label.stable_key().size() >= d {
                out.add(label.clone(), m);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, u64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (label, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{m}·{label}")?;
            }
        }
        Ok(())
    }
}
