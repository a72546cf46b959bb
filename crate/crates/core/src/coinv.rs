//! Multigraded pieces of the diagonal coinvariant algebras
//! `C^(r)(n) = k[V^⊕r] / I_n`, with `V = k^n` the defining representation of
//! `W_n` and `I_n` generated by the invariants without constant term.
//!
//! The degree-`J` part of `I_n` is spanned by the products `m · R(m′)` with
//! `m`, `m′` monomials whose multidegrees add to `J`, `m′` of positive
//! degree, and `R` the Reynolds average over `W_n`. Everything is exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::labels::Family;
use crate::limits::Limits;
use crate::linalg::{rref, Rref};
use crate::weyl::{conjugacy_classes, ClassFunction, SignedPermutation};
use crate::Rational;

/// Exponents of the `r·n` variables `x_i^(s)`, laid out as `s·n + i`.
pub type Exponents = Vec<u8>;

/// A polynomial in the variables `x_i^(s)`.
pub type Polynomial = BTreeMap<Exponents, Rational>;

/// `w · m` for a monomial `m`: `x_i^(s) ↦ ±x_{|w(i)|}^(s)`, for every copy `s`.
/// Returns the image monomial and its sign.
fn act(w: &SignedPermutation, n: usize, m: &[u8]) -> (Exponents, bool) {
    let mut out = alloc::vec![0u8; m.len()];
    let mut negative = false;
    for (idx, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let (s, i) = (idx / n, idx % n);
        let img = w.images()[i];
        let j = img.unsigned_abs() as usize - 1;
        out[s * n + j] = e;
        if img < 0 && e % 2 == 1 {
            negative = !negative;
        }
    }
    (out, negative)
}

fn group(family: Family, n: usize, limits: &Limits) -> Result<Vec<SignedPermutation>> {
    limits.check_enum_rank(family, n)?;
    Ok(SignedPermutation::all(family, n))
}

/// The Reynolds average `(1/|W_n|) Σ_w w · m` of a monomial in the `r·n`
/// variables (`m.len()` must be a multiple of `n`).
pub fn reynolds(m: &[u8], family: Family, n: usize, limits: &Limits) -> Result<Polynomial> {
    if n == 0 || !m.len().is_multiple_of(n) {
        return Err(Error::invalid(
            "monomial length must be a positive multiple of n",
        ));
    }
    Ok(reynolds_in(m, n, &group(family, n, limits)?))
}

fn reynolds_in(m: &[u8], n: usize, elements: &[SignedPermutation]) -> Polynomial {
    let mut out: BTreeMap<Exponents, i64> = BTreeMap::new();
    for w in elements {
        let (img, neg) = act(w, n, m);
        *out.entry(img).or_insert(0) += if neg { -1 } else { 1 };
    }
    let order = elements.len() as i64;
    out.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| (k, Rational::new(c.into(), order.into())))
        .collect()
}

/// All monomials in the `r·n` variables with multidegree `j`.
fn monomials_of_multidegree(n: usize, j: &[usize]) -> Vec<Exponents> {
    let mut out = alloc::vec![Vec::new()];
    for &d in j {
        let block = compositions(d, n);
        let mut next = Vec::with_capacity(out.len() * block.len());
        for prefix in &out {
            for b in &block {
                let mut m: Exponents = prefix.clone();
                m.extend_from_slice(b);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Weak compositions of `d` into `n` parts.
fn compositions(d: usize, n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return if d == 0 {
            alloc::vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, n - 1) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

fn count_monomials(n: usize, j: &[usize]) -> u128 {
    j.iter()
        .map(|&d| crate::partitions::binomial(n + d - 1, d))
        .product()
}

/// One multigraded piece `C^(r)_J(n)` with its character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieceResult {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub j: Vec<usize>,
    pub dimension: usize,
    pub character: ClassFunction,
    /// Dimension of the degree-`J` part of the ideal.
    pub ideal_rank: usize,
}

/// The degree-`J` part of `k[V^⊕r]` together with the ideal inside it.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    pub family: Family,
    pub n: usize,
    pub j: Vec<usize>,
    basis: Vec<Exponents>,
    index: BTreeMap<Exponents, usize>,
    ideal: Rref,
}

impl GradedPiece {
    pub fn new(family: Family, n: usize, j: &[usize], limits: &Limits) -> Result<Self> {
        if j.is_empty() {
            return Err(Error::invalid("J must have at least one entry"));
        }
        let full_size = if n == 0 {
            u128::from(j.iter().all(|&d| d == 0))
        } else {
            count_monomials(n, j)
        };
        if full_size > limits.monomial_ceiling as u128 {
            return Err(Error::CeilingExceeded {
                what: "multigraded monomial space",
                size: usize::try_from(full_size).unwrap_or(usize::MAX),
                ceiling: limits.monomial_ceiling,
            });
        }
        if n == 0 {
            // k[V^⊕r] is just k when n = 0
            let basis: Vec<Exponents> = if full_size == 1 {
                alloc::vec![Vec::new()]
            } else {
                Vec::new()
            };
            let index = basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let ideal = rref(&[], basis.len());
            return Ok(GradedPiece {
                family,
                n,
                j: j.to_vec(),
                basis,
                index,
                ideal,
            });
        }
        let elements = group(family, n, limits)?;
        let basis = monomials_of_multidegree(n, j);
        let index: BTreeMap<Exponents, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let spanning = ideal_spanning_set(n, j, &elements, &index, basis.len());
        let ideal = rref(&spanning, basis.len());
        Ok(GradedPiece {
            family,
            n,
            j: j.to_vec(),
            basis,
            index,
            ideal,
        })
    }

    /// Dimension of the full degree-`J` space.
    pub fn full_dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    /// Dimension of the quotient `C^(r)_J(n)`.
    pub fn dimension(&self) -> usize {
        self.full_dimension() - self.ideal_rank()
    }

    /// For each basis monomial `p`, the `k` and sign with `g · m_k = ±m_p`.
    fn preimages(&self, g: &SignedPermutation) -> Vec<(usize, bool)> {
        let mut pre = alloc::vec![(0usize, false); self.basis.len()];
        for (k, m) in self.basis.iter().enumerate() {
            let (img, neg) = act(g, self.n, m);
            pre[self.index[&img]] = (k, neg);
        }
        pre
    }

    /// Trace of `g` on the quotient: the trace on the full space minus the
    /// trace on the ideal part. For `v` in the ideal, `v = Σ v[p_j] b_j` over
    /// the reduced basis, so the ideal trace is `Σ_j (g·b_j)[p_j]`.
    pub fn trace(&self, g: &SignedPermutation) -> Rational {
        let pre = self.preimages(g);
        let full: i64 = pre
            .iter()
            .enumerate()
            .filter(|(p, (k, _))| p == k)
            .map(|(_, (_, neg))| if *neg { -1 } else { 1 })
            .sum();
        let mut sub = Rational::zero();
        for (row, &p) in self.ideal.rows.iter().zip(&self.ideal.pivots) {
            let (k, neg) = pre[p];
            if neg {
                sub -= &row[k];
            } else {
                sub += &row[k];
            }
        }
        Rational::from_integer(full.into()) - sub
    }

    /// Whether `g` maps the ideal part into itself.
    pub fn ideal_is_stable_under(&self, g: &SignedPermutation) -> bool {
        let pre = self.preimages(g);
        self.ideal.rows.iter().all(|row| {
            let mut image = alloc::vec![Rational::zero(); row.len()];
            for (p, &(k, neg)) in pre.iter().enumerate() {
                image[p] = if neg { -row[k].clone() } else { row[k].clone() };
            }
            self.ideal.contains(&image)
        })
    }

    /// The character, evaluated on a representative of every class.
    pub fn character(&self) -> Result<ClassFunction> {
        let mut values = BTreeMap::new();
        for class in conjugacy_classes(self.family, self.n)? {
            let g = class.label.representative();
            let v = self.trace(&g);
            values.insert(class.label, v);
        }
        Ok(ClassFunction {
            family: self.family,
            n: self.n,
            values,
        })
    }
}

/// Computes `C^(r)_J(n)`: its dimension and its character.
pub fn graded_piece(
    family: Family,
    n: usize,
    j: &[usize],
    limits: &Limits,
) -> Result<GradedPieceResult> {
    let piece = GradedPiece::new(family, n, j, limits)?;
    Ok(GradedPieceResult {
        family,
        n,
        r: j.len(),
        j: j.to_vec(),
        dimension: piece.dimension(),
        character: piece.character()?,
        ideal_rank: piece.ideal_rank(),
    })
}

/// The vectors `m · R(m′)` spanning the degree-`J` part of the ideal, written
/// in the monomial basis of that degree.
fn ideal_spanning_set(
    n: usize,
    j: &[usize],
    elements: &[SignedPermutation],
    index: &BTreeMap<Exponents, usize>,
    width: usize,
) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for k in sub_multidegrees(j) {
        if k.iter().all(|&d| d == 0) {
            continue;
        }
        let rest: Vec<usize> = j.iter().zip(&k).map(|(a, b)| a - b).collect();
        let cofactors = monomials_of_multidegree(n, &rest);
        // R is constant on orbits up to sign, so one monomial per orbit suffices
        let mut seen: BTreeSet<Exponents> = BTreeSet::new();
        for m1 in monomials_of_multidegree(n, &k) {
            if seen.contains(&m1) {
                continue;
            }
            for w in elements {
                seen.insert(act(w, n, &m1).0);
            }
            let inv = reynolds_in(&m1, n, elements);
            if inv.is_empty() {
                continue;
            }
            for c in &cofactors {
                let mut row = alloc::vec![Rational::zero(); width];
                for (mono, coeff) in &inv {
                    let prod: Exponents = mono.iter().zip(c).map(|(a, b)| a + b).collect();
                    row[index[&prod]] += coeff;
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Every `K` with `0 ≤ K ≤ J` componentwise.
fn sub_multidegrees(j: &[usize]) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for &d in j {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=d).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Characters of `C^(r)_J(n)` for `n` in `lo..=hi`, ready for
/// [`fit`](crate::charpoly::fit).
pub fn character_series(
    family: Family,
    j: &[usize],
    lo: usize,
    hi: usize,
    limits: &Limits,
) -> Result<Vec<GradedPieceResult>> {
    if lo > hi {
        return Err(Error::invalid("empty window"));
    }
    (lo..=hi)
        .map(|n| graded_piece(family, n, j, limits))
        .collect()
}
