//! Serializable results and their aligned-table renderings.
//!
//! Every command produces one of these; `--json` prints it with serde and
//! `--table` prints [`Report::table`]. Labels and rationals are rendered as
//! text in the shared grammar, so both forms carry the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use weylrep::charpoly::{CharacterPolynomial, VarKind};
use weylrep::coinv::GradedPieceResult;
use weylrep::fiw::StabilityReport;
use weylrep::tensor::StableTensorResult;
use weylrep::weyl::{CharacterTable, ConjugacyClass};
use weylrep::{Decomposition, Family, Rational, StableKey};

use crate::text::Window;

pub trait Report: Serialize {
    fn table(&self) -> String;
}

/// Left-aligned columns separated by two spaces.
fn align(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:<w$}");
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

/// `p/q` in lowest terms with `q > 0`; integers print without a denominator.
pub fn rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub label: String,
    pub size: u128,
}

impl From<&ConjugacyClass> for ClassJson {
    fn from(c: &ConjugacyClass) -> Self {
        ClassJson {
            label: c.label.to_string(),
            size: c.size,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassesJson {
    pub family: String,
    pub n: usize,
    pub classes: Vec<ClassJson>,
}

impl Report for ClassesJson {
    fn table(&self) -> String {
        let rows: Vec<_> = self
            .classes
            .iter()
            .map(|c| vec![c.label.clone(), c.size.to_string()])
            .collect();
        format!(
            "{}_{}\n{}",
            self.family,
            self.n,
            align(&["class", "size"], &rows)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct IrrepJson {
    pub label: String,
    pub dim: u128,
}

#[derive(Debug, Serialize)]
pub struct CharTableJson {
    pub family: String,
    pub n: usize,
    pub classes: Vec<ClassJson>,
    pub irreps: Vec<IrrepJson>,
    pub values: Vec<Vec<i64>>,
}

impl From<&CharacterTable> for CharTableJson {
    fn from(t: &CharacterTable) -> Self {
        CharTableJson {
            family: t.family.to_string(),
            n: t.n,
            classes: t.classes.iter().map(ClassJson::from).collect(),
            irreps: t
                .rows
                .iter()
                .map(|r| IrrepJson {
                    label: r.to_string(),
                    dim: r.dim,
                })
                .collect(),
            values: t.values.clone(),
        }
    }
}

impl Report for CharTableJson {
    fn table(&self) -> String {
        let mut header = vec!["irrep", "dim"];
        header.extend(self.classes.iter().map(|c| c.label.as_str()));
        let rows: Vec<_> = self
            .irreps
            .iter()
            .zip(&self.values)
            .map(|(irrep, row)| {
                let mut cells = vec![irrep.label.clone(), irrep.dim.to_string()];
                cells.extend(row.iter().map(i64::to_string));
                cells
            })
            .collect();
        let sizes: Vec<String> = self.classes.iter().map(|c| c.size.to_string()).collect();
        format!(
            "{}_{}  class sizes: {}\n{}",
            self.family,
            self.n,
            sizes.join(" "),
            align(&header, &rows)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub label: String,
    pub mult: u64,
}

#[derive(Debug, Serialize)]
pub struct DecompositionJson {
    pub family: String,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            family: d.family.to_string(),
            n: d.n,
            terms: d
                .iter()
                .map(|(l, m)| TermJson {
                    label: l.to_string(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl DecompositionJson {
    fn rows(&self) -> Vec<Vec<String>> {
        self.terms
            .iter()
            .map(|t| vec![t.label.clone(), t.mult.to_string()])
            .collect()
    }
}

impl Report for DecompositionJson {
    fn table(&self) -> String {
        format!(
            "{}_{}\n{}",
            self.family,
            self.n,
            align(&["label", "mult"], &self.rows())
        )
    }
}

#[derive(Debug, Serialize)]
pub struct StabilityJson {
    pub onset: Option<usize>,
    pub stable_terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_stable_range: Option<usize>,
}

impl StabilityJson {
    pub fn new(report: &StabilityReport, predicted: Option<usize>) -> Self {
        StabilityJson {
            onset: report.observed_onset,
            stable_terms: stable_terms(&report.stable_terms),
            predicted_stable_range: predicted,
        }
    }

    fn table(&self) -> String {
        let rows: Vec<_> = self
            .stable_terms
            .iter()
            .map(|t| vec![t.label.clone(), t.mult.to_string()])
            .collect();
        let mut s = format!(
            "onset: {}\n",
            self.onset
                .map_or_else(|| "not stable in window".into(), |n| n.to_string())
        );
        if let Some(p) = self.predicted_stable_range {
            let _ = writeln!(s, "predicted stable range: n >= {p}");
        }
        s.push_str(&align(&["stable term", "mult"], &rows));
        s
    }
}

fn stable_terms(terms: &BTreeMap<StableKey, u64>) -> Vec<TermJson> {
    terms
        .iter()
        .map(|(k, &m)| TermJson {
            label: k.to_string(),
            mult: m,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct SequenceJson {
    pub family: String,
    pub window: [usize; 2],
    pub ranks: Vec<DecompositionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<StabilityJson>,
}

impl SequenceJson {
    pub fn new(family: Family, w: Window, ranks: &[Decomposition]) -> Self {
        SequenceJson {
            family: family.to_string(),
            window: [w.lo, w.hi],
            ranks: ranks.iter().map(DecompositionJson::from).collect(),
            report: None,
        }
    }
}

impl Report for SequenceJson {
    fn table(&self) -> String {
        let mut s = String::new();
        for d in &self.ranks {
            let terms: Vec<String> = d
                .terms
                .iter()
                .map(|t| format!("{}·{}", t.mult, t.label))
                .collect();
            let body = if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            };
            let _ = writeln!(s, "{}_{}  {body}", self.family, d.n);
        }
        if let Some(r) = &self.report {
            s.push_str(&r.table());
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct PhiRankJson {
    pub n: usize,
    pub dim: u128,
    pub terms: Vec<TermJson>,
}

/// `Φ_a(V)_n` over a window of `n`, each a representation of `W_a`.
#[derive(Debug, Serialize)]
pub struct PhiJson {
    pub family: String,
    pub a: usize,
    pub window: [usize; 2],
    pub ranks: Vec<PhiRankJson>,
    /// First `n` from which `Φ_a(V)_n` no longer changes in the window.
    pub constant_from: Option<usize>,
}

impl PhiJson {
    pub fn new(family: Family, a: usize, w: Window, values: &[Decomposition]) -> Self {
        let last = values.last();
        let constant_from =
            (values.len() >= 2 && values[values.len() - 2] == *last.unwrap()).then(|| {
                let k = values.iter().rev().take_while(|d| Some(*d) == last).count();
                w.hi + 1 - k
            });
        PhiJson {
            family: family.to_string(),
            a,
            window: [w.lo, w.hi],
            ranks: (w.lo..=w.hi)
                .zip(values)
                .map(|(n, d)| PhiRankJson {
                    n,
                    dim: d.dimension(),
                    terms: DecompositionJson::from(d).terms,
                })
                .collect(),
            constant_from,
        }
    }
}

impl Report for PhiJson {
    fn table(&self) -> String {
        let rows: Vec<_> = self
            .ranks
            .iter()
            .map(|r| {
                let terms: Vec<String> = r
                    .terms
                    .iter()
                    .map(|t| format!("{}·{}", t.mult, t.label))
                    .collect();
                vec![
                    r.n.to_string(),
                    r.dim.to_string(),
                    if terms.is_empty() {
                        "0".into()
                    } else {
                        terms.join(" + ")
                    },
                ]
            })
            .collect();
        format!(
            "Φ_{} over {}_{}\n{}constant from: {}\n",
            self.a,
            self.family,
            self.a,
            align(&["n", "dim", "decomposition"], &rows),
            self.constant_from
                .map_or_else(|| "not constant in window".into(), |n| n.to_string())
        )
    }
}

#[derive(Debug, Serialize)]
pub struct CoefficientJson {
    pub nu: String,
    pub g: u64,
}

#[derive(Debug, Serialize)]
pub struct StableTensorJson {
    pub lambda: String,
    pub mu: String,
    pub coefficients: Vec<CoefficientJson>,
    pub onset: usize,
    pub window: [usize; 2],
}

impl From<&StableTensorResult> for StableTensorJson {
    fn from(r: &StableTensorResult) -> Self {
        StableTensorJson {
            lambda: r.lambda.to_string(),
            mu: r.mu.to_string(),
            coefficients: r
                .coefficients
                .iter()
                .map(|(nu, &g)| CoefficientJson {
                    nu: nu.to_string(),
                    g,
                })
                .collect(),
            onset: r.onset_n,
            window: [r.verified_window.0, r.verified_window.1],
        }
    }
}

impl Report for StableTensorJson {
    fn table(&self) -> String {
        let rows: Vec<_> = self
            .coefficients
            .iter()
            .map(|c| vec![c.nu.clone(), c.g.to_string()])
            .collect();
        format!(
            "V({})_n ⊗ V({})_n, constant on n = {}..{}\n{}",
            self.lambda,
            self.mu,
            self.window[0],
            self.window[1],
            align(&["nu", "g"], &rows)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct VarPowerJson {
    pub var: &'static str,
    pub index: usize,
    pub exp: u32,
}

#[derive(Debug, Serialize)]
pub struct PolyTermJson {
    pub monomial: Vec<VarPowerJson>,
    pub coeff: String,
}

#[derive(Debug, Serialize)]
pub struct PolynomialJson {
    pub terms: Vec<PolyTermJson>,
    /// The polynomial in the basis of products of `binomial(X_i, k)`.
    pub rendered: String,
}

impl From<&CharacterPolynomial> for PolynomialJson {
    fn from(f: &CharacterPolynomial) -> Self {
        PolynomialJson {
            terms: f
                .terms()
                .iter()
                .map(|(m, c)| PolyTermJson {
                    monomial: m
                        .powers()
                        .map(|(v, exp)| VarPowerJson {
                            var: match v.kind {
                                VarKind::X => "X",
                                VarKind::Y => "Y",
                            },
                            index: v.index,
                            exp,
                        })
                        .collect(),
                    coeff: rational(c),
                })
                .collect(),
            rendered: f.binomial_basis_render(),
        }
    }
}

impl Report for PolynomialJson {
    fn table(&self) -> String {
        let rows: Vec<_> = self
            .terms
            .iter()
            .map(|t| {
                let m: Vec<String> = t
                    .monomial
                    .iter()
                    .map(|p| {
                        if p.exp == 1 {
                            format!("{}_{}", p.var, p.index)
                        } else {
                            format!("{}_{}^{}", p.var, p.index, p.exp)
                        }
                    })
                    .collect();
                vec![
                    if m.is_empty() {
                        "1".into()
                    } else {
                        m.join("*")
                    },
                    t.coeff.clone(),
                ]
            })
            .collect();
        format!(
            "{}\n{}",
            self.rendered,
            align(&["monomial", "coeff"], &rows)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ClassValueJson {
    pub class: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct PieceJson {
    pub family: String,
    pub n: usize,
    pub r: usize,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub dim: usize,
    pub character: Vec<ClassValueJson>,
}

impl From<&GradedPieceResult> for PieceJson {
    fn from(p: &GradedPieceResult) -> Self {
        PieceJson {
            family: p.family.to_string(),
            n: p.n,
            r: p.r,
            j: p.j.clone(),
            dim: p.dimension,
            character: p
                .character
                .values
                .iter()
                .map(|(c, v)| ClassValueJson {
                    class: c.to_string(),
                    value: rational(v),
                })
                .collect(),
        }
    }
}

impl PieceJson {
    fn heading(&self) -> String {
        let j: Vec<String> = self.j.iter().map(usize::to_string).collect();
        format!(
            "{}_{}  r = {}  J = ({})  dim = {}",
            self.family,
            self.n,
            self.r,
            j.join(","),
            self.dim
        )
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.character
            .iter()
            .map(|c| vec![c.class.clone(), c.value.clone()])
            .collect()
    }
}

impl Report for PieceJson {
    fn table(&self) -> String {
        format!(
            "{}\n{}",
            self.heading(),
            align(&["class", "value"], &self.rows())
        )
    }
}

#[derive(Debug, Serialize)]
pub struct PieceSeriesJson {
    pub family: String,
    pub r: usize,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub window: [usize; 2],
    pub ranks: Vec<PieceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialJson>,
}

impl Report for PieceSeriesJson {
    fn table(&self) -> String {
        let mut s = String::new();
        for p in &self.ranks {
            s.push_str(&p.table());
            s.push('\n');
        }
        if let Some(f) = &self.polynomial {
            let _ = writeln!(s, "character polynomial: {}", f.rendered);
        }
        s
    }
}
