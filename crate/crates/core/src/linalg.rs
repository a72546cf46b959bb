//! Exact linear algebra over `Q`.
//!
//! Elimination is fraction-free (Bareiss) on integer rows, so intermediate
//! entries stay bounded by minors of the input; rationals only appear in the
//! final reduced form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// Scales a rational row to a primitive integer row with the same span.
pub fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Fraction-free row echelon form. Returns the nonzero echelon rows and
/// their pivot columns.
pub fn bareiss_echelon(mut rows: Vec<Vec<BigInt>>, width: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..width {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = core::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A reduced row echelon basis of a row space: every pivot entry is 1 and
/// every other row is 0 in each pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub width: usize,
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Trace of a linear map preserving this row space, given the images of
    /// the basis rows. For `v` in the span, `v = Σ v[pivot_j] · row_j`, so the
    /// coefficient of `row_j` in `image_j` is `image_j[pivot_j]`.
    pub fn trace_of_images(&self, images: &[Vec<Rational>]) -> Rational {
        images
            .iter()
            .zip(&self.pivots)
            .map(|(img, &p)| img[p].clone())
            .sum()
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut residual = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                *x -= &c * y;
            }
        }
        residual.iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form of the span of `rows`.
pub fn rref(rows: &[Vec<Rational>], width: usize) -> Rref {
    let ints = rows.iter().map(|r| clear_denominators(r)).collect();
    let (echelon, pivots) = bareiss_echelon(ints, width);
    let mut out: Vec<Vec<Rational>> = echelon
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|x| Rational::new(x, lead.clone()))
                .collect()
        })
        .collect();
    for k in (0..out.len()).rev() {
        let p = pivots[k];
        let (above, rest) = out.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in p..width {
                let d = &c * &pivot_row[j];
                row[j] -= d;
            }
        }
    }
    Rref {
        width,
        rows: out,
        pivots,
    }
}

pub fn rank(rows: &[Vec<Rational>], width: usize) -> usize {
    let ints = rows.iter().map(|r| clear_denominators(r)).collect();
    bareiss_echelon(ints, width).1.len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// The system is consistent but its coefficient matrix has rank below the
    /// number of unknowns.
    Underdetermined {
        rank: usize,
    },
    Inconsistent,
}

/// Solves `A x = b` exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], unknowns: usize) -> Solution {
    let augmented: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let reduced = rref(&augmented, unknowns + 1);
    if reduced.pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent;
    }
    if reduced.rank() < unknowns {
        return Solution::Underdetermined {
            rank: reduced.rank(),
        };
    }
    Solution::Unique(reduced.rows.iter().map(|r| r[unknowns].clone()).collect())
}
