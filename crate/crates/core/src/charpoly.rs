//! Character polynomials in `X_1, Y_1, X_2, Y_2, …`, where `X_i` counts the
//! positive and `Y_i` the negative `i`-cycles of a signed permutation.
//!
//! Polynomials are stored in the monomial basis. The binomial basis
//! `Π C(X_i, a_i) C(Y_i, b_i)` is used only for display.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, Solution};
use crate::weyl::{ClassFunction, SignedCycleType};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    X,
    Y,
}

/// `X_i` or `Y_i`, of graded degree `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub index: usize,
}

impl Var {
    pub fn x(index: usize) -> Self {
        Var {
            kind: VarKind::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        Var {
            kind: VarKind::Y,
            index,
        }
    }

    /// The value on a signed cycle type: the number of cycles it counts.
    pub fn count(&self, t: &SignedCycleType) -> usize {
        match self.kind {
            VarKind::X => t.positive_cycles(self.index),
            VarKind::Y => t.negative_cycles(self.index),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VarKind::X => "X",
            VarKind::Y => "Y",
        };
        write!(f, "{k}_{}", self.index)
    }
}

/// A product of variable powers; exponents are positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::from_powers([(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    /// `Σ i · exponent`.
    pub fn graded_degree(&self) -> usize {
        self.0.iter().map(|(v, &e)| v.index * e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.powers().chain(other.powers()))
    }

    pub fn evaluate(&self, t: &SignedCycleType) -> BigInt {
        self.0
            .iter()
            .map(|(v, &e)| BigInt::from(v.count(t)).pow(e))
            .product()
    }

    /// Every monomial of graded degree at most `d`, in increasing degree.
    pub fn all_up_to(d: usize) -> Vec<Monomial> {
        let vars: Vec<Var> = (1..=d).flat_map(|i| [Var::x(i), Var::y(i)]).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        monomials_rec(&vars, 0, d, &mut cur, &mut out);
        out.sort_by(|a, b| {
            a.graded_degree()
                .cmp(&b.graded_degree())
                .then_with(|| a.cmp(b))
        });
        out
    }
}

fn monomials_rec(
    vars: &[Var],
    idx: usize,
    budget: usize,
    cur: &mut Vec<(Var, u32)>,
    out: &mut Vec<Monomial>,
) {
    if idx == vars.len() {
        out.push(Monomial::from_powers(cur.iter().copied()));
        return;
    }
    let v = vars[idx];
    for e in 0..=budget / v.index {
        cur.push((v, e as u32));
        monomials_rec(vars, idx + 1, budget - e * v.index, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `Q[X_1, Y_1, X_2, Y_2, …]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CharacterPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    /// `C(v, k) = v (v − 1) ⋯ (v − k + 1) / k!`.
    pub fn binomial(v: Var, k: usize) -> Self {
        let mut p = Self::integer(1);
        for j in 0..k {
            let factor = &Self::var(v) - &Self::integer(j as i64);
            p = &p * &factor;
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        p.scale(&Rational::new(BigInt::one(), fact))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Largest graded degree of a term; `0` for the zero polynomial.
    pub fn graded_degree(&self) -> usize {
        self.terms
            .keys()
            .map(Monomial::graded_degree)
            .max()
            .unwrap_or(0)
    }

    /// Substitutes the cycle counts of `t`.
    pub fn evaluate(&self, t: &SignedCycleType) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * Rational::from_integer(m.evaluate(t)))
            .sum()
    }

    /// `F(n, 0, 0, …)`: the dimension at rank `n`, as a polynomial in `n`.
    pub fn dimension_polynomial(&self) -> UnivariatePolynomial {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let mut deg = 0;
            let mut survives = true;
            for (v, e) in m.powers() {
                if v == Var::x(1) {
                    deg = e as usize;
                } else {
                    survives = false;
                }
            }
            if survives {
                if coeffs.len() <= deg {
                    coeffs.resize(deg + 1, Rational::zero());
                }
                coeffs[deg] += c;
            }
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Coefficients in the basis `Π C(v, k_v)`, keyed by the exponents `k_v`
    /// (as a monomial). Uses `x^e = Σ_k S(e, k) k! C(x, k)`.
    pub fn binomial_basis(&self) -> BTreeMap<Monomial, Rational> {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            // expand each variable power independently, then multiply out
            let mut partial: Vec<(Monomial, Rational)> = alloc::vec![(Monomial::one(), c.clone())];
            for (v, e) in m.powers() {
                let mut next = Vec::new();
                for k in 1..=e as usize {
                    let w = stirling2(e as usize, k) * factorial(k);
                    for (b, x) in &partial {
                        next.push((
                            b.mul(&Monomial::from_powers([(v, k as u32)])),
                            x * Rational::from_integer(w.clone()),
                        ));
                    }
                }
                partial = next;
            }
            for (b, x) in partial {
                let entry = out.entry(b.clone()).or_insert_with(Rational::zero);
                *entry += x;
                if entry.is_zero() {
                    out.remove(&b);
                }
            }
        }
        out
    }

    /// Builds a polynomial from binomial-basis coefficients.
    pub fn from_binomial_basis(coeffs: &BTreeMap<Monomial, Rational>) -> Self {
        let mut out = Self::zero();
        for (b, c) in coeffs {
            let mut term = Self::constant(c.clone());
            for (v, k) in b.powers() {
                term = &term * &Self::binomial(v, k as usize);
            }
            out = &out + &term;
        }
        out
    }

    /// Renders in the binomial basis, e.g. `X_1 + 2*(Y_1 choose 2) - 1`.
    ///
    /// Terms are ordered by graded degree, highest first, then by the
    /// variables; `C(v, 1)` is written `v`.
    pub fn binomial_basis_render(&self) -> String {
        let basis = self.binomial_basis();
        if basis.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Monomial> = basis.keys().collect();
        keys.sort_by(|a, b| {
            b.graded_degree()
                .cmp(&a.graded_degree())
                .then_with(|| a.cmp(b))
        });
        let mut s = String::new();
        for (i, key) in keys.into_iter().enumerate() {
            let c = &basis[key];
            let body = render_binomial_product(key);
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            match (abs.is_one(), body.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&body),
                (false, true) => s.push_str(&format!("{abs}")),
                (false, false) => s.push_str(&format!("{abs}*{body}")),
            }
        }
        s
    }
}

fn render_binomial_product(key: &Monomial) -> String {
    let factors: Vec<String> = key
        .powers()
        .map(|(v, k)| {
            if k == 1 {
                format!("{v}")
            } else {
                format!("({v} choose {k})")
            }
        })
        .collect();
    factors.join("*")
}

fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = alloc::vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

impl core::ops::Add for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn add(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl core::ops::Sub for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn sub(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl core::ops::Mul for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn mul(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = CharacterPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for CharacterPolynomial {
    /// Monomial-basis rendering, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            b.graded_degree()
                .cmp(&a.graded_degree())
                .then_with(|| a.cmp(b))
        });
        for (i, m) in keys.into_iter().enumerate() {
            let c = &self.terms[m];
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let abs = c.abs();
            match (abs.is_one(), m.0.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in one variable `n`, coefficients by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    pub coeffs: Vec<Rational>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn evaluate(&self, n: i64) -> Rational {
        let x = Rational::from_integer(n.into());
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let show_coeff = !abs.is_one() || d == 0;
            if show_coeff {
                write!(f, "{abs}")?;
                if d > 0 {
                    f.write_str("*")?;
                }
            }
            match d {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Fits a character polynomial of graded degree `≤ d` to the given class
/// functions, using every class of every rank as a sample point.
///
/// Returns `Ok(None)` when no such polynomial reproduces all samples, and
/// [`Error::WindowTooSmall`] when the samples do not determine it.
pub fn fit(samples: &[ClassFunction], d: usize) -> Result<Option<CharacterPolynomial>> {
    let basis = Monomial::all_up_to(d);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for cf in samples {
        for (class, value) in &cf.values {
            let t = class.signed_type();
            rows.push(
                basis
                    .iter()
                    .map(|m| Rational::from_integer(m.evaluate(&t)))
                    .collect::<Vec<_>>(),
            );
            rhs.push(value.clone());
        }
    }
    match solve(&rows, &rhs, basis.len()) {
        Solution::Unique(x) => {
            let mut out = CharacterPolynomial::zero();
            for (m, c) in basis.into_iter().zip(x) {
                out.add_term(m, c);
            }
            Ok(Some(out))
        }
        Solution::Inconsistent => Ok(None),
        Solution::Underdetermined { rank } => Err(Error::WindowTooSmall {
            ranks: samples.len(),
            rank,
            unknowns: basis.len(),
        }),
    }
}
