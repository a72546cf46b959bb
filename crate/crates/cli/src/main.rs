//! `weylrep`: batch front end for the weylrep library.
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 outside the supported
//! scope, 4 rank or size ceiling reached (or a scan that stayed inconclusive).

mod report;
mod text;

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use weylrep::branching::{
    induce_product, induce_product_a, pieri_induce, pieri_induce_a, require_characteristic_zero,
    restrict_to_dn, restrict_to_sn,
};
use weylrep::charpoly::fit;
use weylrep::coinv::{character_series, graded_piece};
use weylrep::fiw::{
    check_uniform_stability, decompose_m, decompose_m_of_irrep, phi_a, predicted_stable_range,
    v_lambda, SequenceDecomposition, StabilityProfile,
};
use weylrep::tensor::{stable_kronecker, tensor_decompose};
use weylrep::weyl::{character_table, conjugacy_classes, ClassFunction};
use weylrep::{
    Decomposition, DoublePartition, Error, Family, Label, Limits, PaddedLabel, Partition, Rational,
};

use report::*;
use text::Window;

#[derive(Debug, Parser)]
#[command(
    name = "weylrep",
    version,
    about = "Exact representation theory of the classical Weyl groups"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print an aligned text table with the same data.
    #[arg(long, global = true)]
    table: bool,
    /// Characteristic of the ground field; only 0 is supported.
    #[arg(
        long,
        global = true,
        env = "WEYLREP_CHARACTERISTIC",
        default_value_t = 0
    )]
    characteristic: u64,
    #[arg(long, global = true, env = "WEYLREP_TABLE_RANK_A")]
    table_rank_a: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_TABLE_RANK_BC")]
    table_rank_bc: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_TABLE_RANK_D")]
    table_rank_d: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_ENUM_RANK_A")]
    enum_rank_a: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_ENUM_RANK_BC")]
    enum_rank_bc: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_ENUM_RANK_D")]
    enum_rank_d: Option<usize>,
    #[arg(long, global = true, env = "WEYLREP_MONOMIAL_CEILING")]
    monomial_ceiling: Option<usize>,
}

impl Global {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            table_rank_a: self.table_rank_a.unwrap_or(d.table_rank_a),
            table_rank_bc: self.table_rank_bc.unwrap_or(d.table_rank_bc),
            table_rank_d: self.table_rank_d.unwrap_or(d.table_rank_d),
            enum_rank_a: self.enum_rank_a.unwrap_or(d.enum_rank_a),
            enum_rank_bc: self.enum_rank_bc.unwrap_or(d.enum_rank_bc),
            enum_rank_d: self.enum_rank_d.unwrap_or(d.enum_rank_d),
            monomial_ceiling: self.monomial_ceiling.unwrap_or(d.monomial_ceiling),
        }
    }
}

/// A single rank or an inclusive window of ranks.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Ranks {
    /// A single rank.
    #[arg(long)]
    n: Option<usize>,
    /// An inclusive window `lo..hi`.
    #[arg(long, value_parser = text::parse_window)]
    window: Option<Window>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    A,
    D,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Conjugacy classes of W_n with their sizes.
    Classes {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        n: usize,
    },
    /// The exact character table of W_n (folded in type D).
    Chartable {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        n: usize,
    },
    /// Ind from W_a × W_{n−a} of V_λ ⊠ k, for a full label λ of W_a.
    Pieri {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        lambda: String,
        n: usize,
    },
    /// Ind from W_a × W_b of V_λ ⊠ V_μ, for full labels.
    Induce {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        lambda: String,
        mu: String,
    },
    /// Restriction of the B_n irreducible with full label λ to S_n or D_n.
    Restrict {
        #[arg(value_parser = text::parse_double)]
        lambda: DoublePartition,
        #[arg(long, value_enum, ignore_case = true)]
        to: Target,
    },
    /// M_W(m)_n, or M_W(U)_n for an irreducible U of W_m.
    DecomposeM {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        m: usize,
        #[command(flatten)]
        ranks: Ranks,
        /// U as a full label of W_m: a partition of m, or a double partition.
        #[arg(long)]
        irrep: Option<String>,
        /// Report where the unpadded multiplicities stop changing.
        #[arg(long, requires = "window")]
        check_stability: bool,
    },
    /// V(λ)_n for an unpadded label λ.
    VLambda {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        lambda: String,
        #[command(flatten)]
        ranks: Ranks,
        #[arg(long, requires = "window")]
        check_stability: bool,
    },
    /// Φ_a(V)_n = (V_{n+a})_{W_n} over a window of n, for V = M_W(m) or V(λ).
    Phi {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        #[arg(long)]
        a: usize,
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        m: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_parser = text::parse_window)]
        window: Window,
    },
    /// Decomposition of V_a ⊗ V_b for padded labels of the same rank.
    Tensor {
        #[arg(value_parser = text::parse_padded)]
        a: PaddedLabel,
        #[arg(value_parser = text::parse_padded)]
        b: PaddedLabel,
    },
    /// Stable coefficients of V(λ)_n ⊗ V(μ)_n in type BC.
    StableKron {
        #[arg(value_parser = text::parse_double)]
        lambda: DoublePartition,
        #[arg(value_parser = text::parse_double)]
        mu: DoublePartition,
        /// Number of consecutive equal ranks required.
        #[arg(long, default_value_t = 2)]
        consecutive: usize,
    },
    /// Character of the graded piece C^(r)_J(n) of the diagonal coinvariants.
    CoinvChar {
        #[arg(value_parser = text::parse_family)]
        family: Family,
        #[arg(long)]
        r: usize,
        /// Comma-separated degrees, padded with zeros up to r.
        #[arg(long = "J", value_delimiter = ',', required = true)]
        j: Vec<usize>,
        #[command(flatten)]
        ranks: Ranks,
        /// Fit a character polynomial of this graded degree to the window.
        #[arg(long, requires = "window")]
        fit_degree: Option<usize>,
    },
    /// Fit a character polynomial to per-rank characters read as JSON.
    FitCharpoly {
        #[arg(long)]
        degree: usize,
        /// Input file; standard input when absent.
        file: Option<std::path::PathBuf>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Library(Error::InvalidArgument(_)) => 2,
            Failure::Library(Error::OutsideScope(_)) => 3,
            Failure::Library(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(s) => f.write_str(s),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = Result<Box<dyn Render>, Failure>;

/// Object-safe view of a [`Report`].
trait Render {
    fn json(&self) -> String;
    fn text(&self) -> String;
}

impl<T: Report> Render for T {
    fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    fn text(&self) -> String {
        self.table()
    }
}

fn boxed(r: impl Report + 'static) -> Outcome {
    Ok(Box::new(r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!(
                "{}",
                if cli.global.table {
                    out.text()
                } else {
                    out.json()
                }
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("weylrep: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    require_characteristic_zero(cli.global.characteristic)?;
    let limits = cli.global.limits();
    match &cli.command {
        Command::Classes { family, n } => {
            let classes = conjugacy_classes(*family, *n)?;
            boxed(ClassesJson {
                family: family.to_string(),
                n: *n,
                classes: classes.iter().map(ClassJson::from).collect(),
            })
        }
        Command::Chartable { family, n } => {
            boxed(CharTableJson::from(&character_table(*family, *n, &limits)?))
        }
        Command::Pieri { family, lambda, n } => {
            let dec = match family {
                Family::A => pieri_induce_a(&text::parse_partition(lambda)?, *n)?,
                Family::BC => pieri_induce(&text::parse_double(lambda)?, *n)?,
                Family::D => {
                    return Err(Error::OutsideScope("pieri is offered for A and BC").into())
                }
            };
            boxed(DecompositionJson::from(&dec))
        }
        Command::Induce { family, lambda, mu } => {
            let dec = match family {
                Family::A => {
                    let (l, m) = (text::parse_partition(lambda)?, text::parse_partition(mu)?);
                    induce_product_a(&l, &m, l.size() + m.size())?
                }
                Family::BC => {
                    let (l, m) = (text::parse_double(lambda)?, text::parse_double(mu)?);
                    induce_product(&l, &m, l.size() + m.size())?
                }
                Family::D => {
                    return Err(Error::OutsideScope("induce is offered for A and BC").into())
                }
            };
            boxed(DecompositionJson::from(&dec))
        }
        Command::Restrict { lambda, to } => {
            let dec = match to {
                Target::A => restrict_to_sn(lambda),
                Target::D => {
                    let label = PaddedLabel::new(Label::from_full_bc(lambda), lambda.size())?;
                    restrict_to_dn(&Decomposition::irreducible(label))?
                }
            };
            boxed(DecompositionJson::from(&dec))
        }
        Command::DecomposeM {
            family,
            m,
            ranks,
            irrep,
            check_stability,
        } => {
            let (family, m) = (*family, *m);
            let u = irrep
                .as_deref()
                .map(|s| full_label(family, s, m))
                .transpose()?;
            let f = |n| match &u {
                Some(u) => decompose_m_of_irrep(family, u, m, n),
                None => decompose_m(family, m, n),
            };
            let predicted = predicted_stable_range(&StabilityProfile::free(m), family);
            sequence(family, ranks, *check_stability, Some(predicted), f)
        }
        Command::VLambda {
            family,
            lambda,
            ranks,
            check_stability,
        } => {
            let lambda = unpadded(*family, lambda)?;
            sequence(*family, ranks, *check_stability, None, |n| {
                v_lambda(*family, &lambda, n)
            })
        }
        Command::Phi {
            family,
            a,
            m,
            lambda,
            window,
        } => {
            let lambda = lambda
                .as_deref()
                .map(|l| unpadded(*family, l))
                .transpose()?;
            let values = (window.lo..=window.hi)
                .map(|n| {
                    let v = match (&lambda, m) {
                        (Some(l), _) => v_lambda(*family, l, n + a)?,
                        (None, Some(m)) => decompose_m(*family, *m, n + a)?,
                        (None, None) => unreachable!("clap requires --m or --lambda"),
                    };
                    phi_a(&v, *a)
                })
                .collect::<Result<Vec<_>, _>>()?;
            boxed(PhiJson::new(*family, *a, *window, &values))
        }
        Command::Tensor { a, b } => {
            boxed(DecompositionJson::from(&tensor_decompose(a, b, &limits)?))
        }
        Command::StableKron {
            lambda,
            mu,
            consecutive,
        } => boxed(StableTensorJson::from(&stable_kronecker(
            lambda,
            mu,
            *consecutive,
            &limits,
        )?)),
        Command::CoinvChar {
            family,
            r,
            j,
            ranks,
            fit_degree,
        } => {
            if j.len() > *r {
                return Err(Failure::Usage(format!(
                    "J has {} entries but r = {r}",
                    j.len()
                )));
            }
            let mut j = j.clone();
            j.resize(*r, 0);
            if let Some(n) = ranks.n {
                return boxed(PieceJson::from(&graded_piece(*family, n, &j, &limits)?));
            }
            let w = ranks.window.expect("clap requires --n or --window");
            let pieces = character_series(*family, &j, w.lo, w.hi, &limits)?;
            let polynomial = match fit_degree {
                Some(d) => {
                    let samples: Vec<ClassFunction> =
                        pieces.iter().map(|p| p.character.clone()).collect();
                    Some(PolynomialJson::from(&fitted(&samples, *d)?))
                }
                None => None,
            };
            boxed(PieceSeriesJson {
                family: family.to_string(),
                r: *r,
                j,
                window: [w.lo, w.hi],
                ranks: pieces.iter().map(PieceJson::from).collect(),
                polynomial,
            })
        }
        Command::FitCharpoly { degree, file } => {
            let input = match file {
                Some(path) => {
                    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| format!("stdin: {e}"))?;
                    s
                }
            };
            boxed(PolynomialJson::from(&fitted(
                &samples_from_json(&input)?,
                *degree,
            )?))
        }
    }
}

/// An unpadded label in the family's notation, as the pair `(λ⁺, λ⁻)`
/// (type A reads a single partition as `(λ, ∅)`).
fn unpadded(family: Family, s: &str) -> Result<DoublePartition, String> {
    match family {
        Family::A => Ok(DoublePartition::new(
            text::parse_partition(s)?,
            Partition::empty(),
        )),
        Family::BC | Family::D => text::parse_double(s),
    }
}

/// An irreducible of `W_m` given by its full label.
fn full_label(family: Family, s: &str, m: usize) -> Result<Label, Failure> {
    let (label, size) = match family {
        Family::A => {
            let l = text::parse_partition(s)?;
            (Label::from_full_a(&l), l.size())
        }
        Family::BC => {
            let l = text::parse_double(s)?;
            (Label::from_full_bc(&l), l.size())
        }
        Family::D => return Err(Error::OutsideScope("M_D(U) is not computed; use BC").into()),
    };
    if size != m {
        return Err(Failure::Usage(format!("{s} is not a label of W_{m}")));
    }
    Ok(label)
}

fn sequence(
    family: Family,
    ranks: &Ranks,
    check: bool,
    predicted: Option<usize>,
    f: impl FnMut(usize) -> weylrep::Result<Decomposition>,
) -> Outcome {
    let mut f = f;
    if let Some(n) = ranks.n {
        return boxed(DecompositionJson::from(&f(n)?));
    }
    let w = ranks.window.expect("clap requires --n or --window");
    let seq = SequenceDecomposition::build(family, w.lo, w.hi, f)?;
    let mut out = SequenceJson::new(family, w, &seq.ranks);
    if check {
        out.report = Some(StabilityJson::new(
            &check_uniform_stability(&seq)?,
            predicted,
        ));
    }
    boxed(out)
}

fn fitted(
    samples: &[ClassFunction],
    d: usize,
) -> Result<weylrep::charpoly::CharacterPolynomial, Failure> {
    fit(samples, d)?.ok_or_else(|| {
        Failure::Library(Error::Inconclusive {
            last_rank: samples.iter().map(|s| s.n).max().unwrap_or(0),
            detail: format!("no character polynomial of degree ≤ {d} reproduces the samples"),
        })
    })
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SampleFile {
    Series { ranks: Vec<Sample> },
    List(Vec<Sample>),
    One(Sample),
}

#[derive(Debug, Deserialize)]
struct Sample {
    family: String,
    n: usize,
    character: Vec<ClassValue>,
}

#[derive(Debug, Deserialize)]
struct ClassValue {
    class: String,
    value: NumberOrText,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum NumberOrText {
    Int(i64),
    Text(String),
}

/// Reads the per-rank characters written by `coinv-char`: one piece, a list
/// of pieces, or an object with a `ranks` list.
fn samples_from_json(input: &str) -> Result<Vec<ClassFunction>, String> {
    let file: SampleFile =
        serde_json::from_str(input).map_err(|e| format!("malformed character JSON: {e}"))?;
    let samples = match file {
        SampleFile::Series { ranks } => ranks,
        SampleFile::List(list) => list,
        SampleFile::One(one) => vec![one],
    };
    samples
        .into_iter()
        .map(|s| {
            let family = text::parse_family(&s.family)?;
            let mut cf = ClassFunction::new(family, s.n);
            for cv in s.character {
                let class = text::parse_class(family, &cv.class)?;
                if class.signed_type().rank() != s.n {
                    return Err(format!("class {} does not have rank {}", cv.class, s.n));
                }
                let value = match cv.value {
                    NumberOrText::Int(v) => Rational::from_integer(v.into()),
                    NumberOrText::Text(t) => {
                        t.trim().parse().map_err(|e| format!("value '{t}': {e}"))?
                    }
                };
                cf.values.insert(class, value);
            }
            Ok(cf)
        })
        .collect()
}
