use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::characters::{bn_character, sn_character};
use super::classes::{conjugacy_classes, ClassLabel, ConjugacyClass};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::labels::{DLabel, Family, Label, PaddedLabel, Sign};
use crate::limits::Limits;
use crate::partitions::{DoublePartition, Partition};
use crate::Rational;

/// A rational-valued function on the conjugacy classes of `W_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub family: Family,
    pub n: usize,
    pub values: BTreeMap<ClassLabel, Rational>,
}

impl ClassFunction {
    pub fn new(family: Family, n: usize) -> Self {
        ClassFunction {
            family,
            n,
            values: BTreeMap::new(),
        }
    }

    /// Builds a class function by evaluating `f` on every class.
    pub fn from_fn(
        family: Family,
        n: usize,
        mut f: impl FnMut(&ClassLabel) -> Rational,
    ) -> Result<Self> {
        let values = conjugacy_classes(family, n)?
            .into_iter()
            .map(|c| {
                let v = f(&c.label);
                (c.label, v)
            })
            .collect();
        Ok(ClassFunction { family, n, values })
    }

    pub fn get(&self, class: &ClassLabel) -> Option<&Rational> {
        self.values.get(class)
    }

    /// The regular character: `|W_n|` at the identity, `0` elsewhere.
    pub fn regular(family: Family, n: usize) -> Result<Self> {
        let order = Rational::from_integer(BigInt::from(family.order(n)));
        Self::from_fn(family, n, |c| {
            let t = c.signed_type();
            if t.neg.is_empty() && t.pos.parts().iter().all(|&p| p == 1) {
                order.clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Pointwise product.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.family != other.family || self.n != other.n {
            return Err(Error::invalid("class functions on different groups"));
        }
        let mut values = BTreeMap::new();
        for (c, v) in &self.values {
            let w = other.values.get(c).ok_or_else(|| {
                Error::InvalidArgument(alloc::format!("missing value on class {c}"))
            })?;
            values.insert(c.clone(), v * w);
        }
        Ok(ClassFunction {
            family: self.family,
            n: self.n,
            values,
        })
    }
}

/// `⟨φ, ψ⟩ = (1/|W_n|) Σ_C |C| φ(C) ψ(C)`, exactly.
///
/// Characters of Weyl groups are rational, so no complex conjugation is
/// involved.
pub fn inner_product(
    phi: &ClassFunction,
    psi: &ClassFunction,
    family: Family,
    n: usize,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for ConjugacyClass { label, size } in conjugacy_classes(family, n)? {
        let missing = || Error::InvalidArgument(alloc::format!("missing value on class {label}"));
        let a = phi.values.get(&label).ok_or_else(missing)?;
        let b = psi.values.get(&label).ok_or_else(missing)?;
        acc += a * b * Rational::from_integer(BigInt::from(size));
    }
    Ok(acc / Rational::from_integer(BigInt::from(family.order(n))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Irreducible,
    /// `χ_{α,+} + χ_{α,−}` for a split `D_n` pair; the label holds the `+`
    /// member and `dim` is the dimension of one member.
    SplitPairSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: Label,
    pub dim: u128,
    pub kind: RowKind,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.label) {
            (RowKind::SplitPairSum, Label::D(DLabel::Split(a, _))) => write!(f, "{{{a},±}}"),
            _ => write!(f, "{}", self.label),
        }
    }
}

/// An exact character table.
///
/// For type D the table is folded: pair labels `{α, β}` get their full rows,
/// and each split pair `{α, ±}` is represented by the single row
/// `χ_{α,+} + χ_{α,−}`. That is enough for every multiplicity computation on
/// restrictions from `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub family: Family,
    pub n: usize,
    pub classes: Vec<ConjugacyClass>,
    pub rows: Vec<TableRow>,
    /// `values[row][class]`.
    pub values: Vec<Vec<i64>>,
}

/// Builds the character table of `W_n`.
pub fn character_table(family: Family, n: usize, limits: &Limits) -> Result<CharacterTable> {
    limits.check_table_rank(family, n)?;
    let classes = conjugacy_classes(family, n)?;
    let mut rows = Vec::new();
    let mut values = Vec::new();
    match family {
        Family::A => {
            for lambda in Partition::all_of_size(n) {
                let row = classes
                    .iter()
                    .map(|c| sn_character(&lambda, &c.label.signed_type().pos))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(TableRow {
                    label: Label::from_full_a(&lambda),
                    dim: lambda.standard_tableaux_count(),
                    kind: RowKind::Irreducible,
                });
                values.push(row);
            }
        }
        Family::BC => {
            for lambda in DoublePartition::all_of_size(n) {
                let row = bc_row(&lambda, &classes)?;
                let label = Label::from_full_bc(&lambda);
                let dim = PaddedLabel {
                    n,
                    label: label.clone(),
                }
                .dimension();
                rows.push(TableRow {
                    label,
                    dim,
                    kind: RowKind::Irreducible,
                });
                values.push(row);
            }
        }
        Family::D => {
            for lambda in DoublePartition::all_of_size(n) {
                let (label, kind) = match lambda.pos.cmp(&lambda.neg) {
                    core::cmp::Ordering::Less => continue,
                    core::cmp::Ordering::Greater => (
                        Label::D(DLabel::pair(lambda.pos.clone(), lambda.neg.clone())?),
                        RowKind::Irreducible,
                    ),
                    // D_0 is trivial; its single irreducible is not a pair sum
                    core::cmp::Ordering::Equal if n == 0 => (
                        Label::D(DLabel::Split(Partition::empty(), Sign::Plus)),
                        RowKind::Irreducible,
                    ),
                    core::cmp::Ordering::Equal => (
                        Label::D(DLabel::Split(lambda.pos.clone(), Sign::Plus)),
                        RowKind::SplitPairSum,
                    ),
                };
                let row = bc_row(&lambda, &classes)?;
                let dim = PaddedLabel {
                    n,
                    label: label.clone(),
                }
                .dimension();
                rows.push(TableRow { label, dim, kind });
                values.push(row);
            }
        }
    }
    Ok(CharacterTable {
        family,
        n,
        classes,
        rows,
        values,
    })
}

fn bc_row(lambda: &DoublePartition, classes: &[ConjugacyClass]) -> Result<Vec<i64>> {
    classes
        .iter()
        .map(|c| bn_character(lambda, &c.label.signed_type()))
        .collect()
}

impl CharacterTable {
    pub fn order(&self) -> u128 {
        self.family.order(self.n)
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| &c.label == label)
    }

    pub fn row_index(&self, label: &Label) -> Option<usize> {
        self.rows.iter().position(|r| &r.label == label)
    }

    /// The column of the identity class.
    pub fn identity_column(&self) -> usize {
        0
    }

    pub fn row_function(&self, row: usize) -> ClassFunction {
        let values = self
            .classes
            .iter()
            .zip(&self.values[row])
            .map(|(c, &v)| (c.label.clone(), Rational::from_integer(BigInt::from(v))))
            .collect();
        ClassFunction {
            family: self.family,
            n: self.n,
            values,
        }
    }

    /// The character of a label at this table's rank. Split members are
    /// refused; see [`character_value`](super::characters::character_value).
    pub fn character_of(&self, label: &Label) -> Result<Vec<i64>> {
        if let Label::D(DLabel::Split(..)) = label {
            return Err(Error::OutsideScope(
                "character values of individual split D_n irreducibles are not computed",
            ));
        }
        let i = self.row_index(label).ok_or_else(|| {
            Error::InvalidArgument(alloc::format!(
                "{label} is not an irreducible of {} at n = {}",
                self.family,
                self.n
            ))
        })?;
        Ok(self.values[i].clone())
    }

    /// `Σ_C |C| a(C) b(C) c(C)` for integer class vectors.
    fn weighted_sum(&self, vectors: &[&[i64]]) -> i128 {
        self.classes
            .iter()
            .enumerate()
            .map(|(j, c)| {
                vectors
                    .iter()
                    .fold(c.size as i128, |acc, v| acc * v[j] as i128)
            })
            .sum()
    }

    /// `⟨a, b⟩` for integer class vectors, as an exact rational.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Rational {
        Rational::new(
            BigInt::from(self.weighted_sum(&[a, b])),
            BigInt::from(self.order()),
        )
    }

    /// Multiplicity of row `row` in the class vector `chi` (a genuine
    /// character), checked to be a nonnegative integer.
    pub fn multiplicity(&self, chi: &[i64], row: usize) -> Result<u64> {
        let num = self.weighted_sum(&[chi, &self.values[row]]);
        let order = self.order() as i128;
        if num % order != 0 || num < 0 {
            return Err(Error::invalid("class vector is not a character"));
        }
        Ok((num / order) as u64)
    }

    /// Decomposes a character given as a class vector.
    ///
    /// In type D a split pair-sum row pairs to `m₊ + m₋`; the character must
    /// agree on the two halves of every split class (as restrictions from
    /// `B_n` do), and then `m₊ = m₋`.
    pub fn decompose(&self, chi: &[i64]) -> Result<Decomposition> {
        if chi.len() != self.classes.len() {
            return Err(Error::invalid("class vector has the wrong length"));
        }
        let mut dec = Decomposition::zero(self.family, self.n);
        for (i, row) in self.rows.iter().enumerate() {
            let m = self.multiplicity(chi, i)?;
            if m == 0 {
                continue;
            }
            match (row.kind, &row.label) {
                (RowKind::SplitPairSum, Label::D(DLabel::Split(a, _))) => {
                    if !self.agrees_on_split_halves(chi) || m % 2 == 1 {
                        return Err(Error::OutsideScope(
                            "separating the two halves of a split D_n pair needs split character values",
                        ));
                    }
                    dec.add(Label::D(DLabel::Split(a.clone(), Sign::Plus)), m / 2);
                    dec.add(Label::D(DLabel::Split(a.clone(), Sign::Minus)), m / 2);
                }
                _ => dec.add(row.label.clone(), m),
            }
        }
        Ok(dec)
    }

    fn agrees_on_split_halves(&self, chi: &[i64]) -> bool {
        self.classes
            .iter()
            .enumerate()
            .all(|(j, c)| match &c.label {
                ClassLabel::D(t, Some(Sign::Plus)) => {
                    let minus = ClassLabel::D(t.clone(), Some(Sign::Minus));
                    self.class_index(&minus).is_some_and(|k| chi[k] == chi[j])
                }
                _ => true,
            })
    }

    /// The class vector of a decomposition, `Σ mult · row`. Split members
    /// must come in equal pairs.
    pub fn character_of_decomposition(&self, dec: &Decomposition) -> Result<Vec<i64>> {
        let mut out = alloc::vec![0i64; self.classes.len()];
        for (label, &m) in dec.terms() {
            let (row, weight) = match label {
                Label::D(DLabel::Split(a, s))
                    if self
                        .row_index(label)
                        .is_none_or(|i| self.rows[i].kind == RowKind::SplitPairSum) =>
                {
                    let other = Label::D(DLabel::Split(
                        a.clone(),
                        if *s == Sign::Plus {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        },
                    ));
                    if dec.multiplicity(&other) != m {
                        return Err(Error::OutsideScope(
                            "unbalanced split D_n pair has no folded character",
                        ));
                    }
                    if *s == Sign::Minus {
                        continue;
                    }
                    (Label::D(DLabel::Split(a.clone(), Sign::Plus)), m)
                }
                _ => (label.clone(), m),
            };
            let i = self.row_index(&row).ok_or_else(|| {
                Error::InvalidArgument(alloc::format!("{row} is not in the table"))
            })?;
            for (o, v) in out.iter_mut().zip(&self.values[i]) {
                *o += weight as i64 * v;
            }
        }
        Ok(out)
    }
}

/// Converts an exact rational to `i64` when it is an integer.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
