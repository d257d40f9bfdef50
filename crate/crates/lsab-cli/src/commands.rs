//! Command definitions and execution. Exit-code contract: 0 when every
//! check passed and constructions succeeded, 1 when a check failed, 2 on
//! usage or input errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lsab_core::algebra::{Algebra, AlgebraKind};
use lsab_core::bialgebra::{
    check_lie_bialgebra_compat, check_lie_bialgebra, check_lsa_bialgebra, check_manin_triple,
};
use lsab_core::constructions::{self, NovikovVariant};
use lsab_core::error::Error as CoreError;
use lsab_core::form::{
    check_hessian, check_invariant_form, check_left_invariant_form, check_lie_2cocycle,
    check_lsa_2cocycle, check_trace_form,
};
use lsab_core::matrix::Matrix;
use lsab_core::rep::{check_bimodule, check_lie_rep, semidirect_lsa, MatchedPairLsa};
use lsab_core::report::CheckReport;
use lsab_core::scalar::{unit_vec, Scalar};
use lsab_core::yangbaxter::{
    canonical_symmetric_solution, check_cybe, check_o_operator, check_s_equation, check_coboundary_bialgebra,
    lsa_from_o_operator, skew_solution_from_o_operator, symplectic_double,
    symmetric_solution_from_o_operator, verify_symplectic_double,
};

use crate::doc::{emit_document, parse_document, DocError, Document, ObjectValue};
use crate::report_json::outcome_to_json;

#[derive(Parser, Debug)]
#[command(
    name = "lsab",
    about = "Exact verification and construction of left-symmetric algebra structures",
    version
)]
pub struct Cli {
    /// Emit machine-readable JSON reports on stdout
    #[arg(long, global = true)]
    pub json: bool,

    /// Normalize unreduced rationals instead of rejecting them
    #[arg(long, global = true)]
    pub lenient: bool,

    /// Seed for randomized verification suites (LSAB_SEED overrides)
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run identity checks on objects of a document
    Check(CheckArgs),
    /// Emit the sub-adjacent Lie algebra of a left-symmetric algebra
    SubAdjacent {
        #[arg(long)]
        algebra: String,
        /// Name of the emitted object
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// Build left-symmetric algebras from other data
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Build the semidirect sum A ⋉_{S,T} V
    Semidirect {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// Check matched-pair compatibility and optionally build the sum
    MatchedPair {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        la: String,
        #[arg(long)]
        ra: String,
        #[arg(long)]
        lb: String,
        #[arg(long)]
        rb: String,
        /// Also emit the algebra on A + B when the check passes
        #[arg(long)]
        build: bool,
        file: PathBuf,
    },
    /// Check the left-symmetric bialgebra conditions of a pair
    Bialgebra {
        #[arg(long)]
        pair: String,
        file: PathBuf,
    },
    /// Build and verify the symplectic double of a verified pair
    Double {
        #[arg(long)]
        pair: String,
        file: PathBuf,
    },
    /// Check the S-equation for a symmetric tensor
    SEquation {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: String,
        file: PathBuf,
    },
    /// Check the classical Yang-Baxter equation
    Cybe {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        r: String,
        file: PathBuf,
    },
    /// Check the O-operator identity
    OOperator {
        /// Name of an ooperator object
        #[arg(long, conflicts_with_all = ["lie", "rep", "map"])]
        data: Option<String>,
        #[arg(long, requires_all = ["rep", "map"])]
        lie: Option<String>,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        map: Option<String>,
        file: PathBuf,
    },
    /// Build solutions and algebras from an O-operator
    FromOOperator {
        #[arg(long)]
        data: String,
        #[arg(long, value_enum)]
        build: OOperatorBuild,
        file: PathBuf,
    },
    /// The canonical symmetric solution on A ⋉_{L*,0} A*
    CanonicalR {
        #[arg(long)]
        algebra: String,
        file: PathBuf,
    },
    /// Check the Manin-triple axioms
    Manin {
        #[arg(long)]
        lie: String,
        /// Plus span as comma-separated basis indices
        #[arg(long, conflicts_with = "plus_span")]
        plus: Option<String>,
        /// Plus span as a tensor2 whose columns are the basis
        #[arg(long)]
        plus_span: Option<String>,
        /// Minus span as comma-separated basis indices
        #[arg(long, conflicts_with = "minus_span")]
        minus: Option<String>,
        /// Minus span as a tensor2 whose columns are the basis
        #[arg(long)]
        minus_span: Option<String>,
        #[arg(long)]
        form: String,
        file: PathBuf,
    },
    /// The compatibility identity making the sub-adjacent pair a Lie bialgebra
    Compat79 {
        #[arg(long)]
        pair: String,
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Which identity to check
    #[arg(long, value_enum, conflicts_with = "all")]
    pub identity: Option<Identity>,
    /// Verify the claimed kind of every object in the document
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub form: Option<String>,
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub bimodule: Option<String>,
    pub file: PathBuf,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Identity {
    LeftSymmetric,
    Jacobi,
    Associative,
    Commutative,
    Novikov,
    RegularRep,
    #[value(name = "2step-nilpotent")]
    TwoStepNilpotent,
    #[value(name = "lie-2cocycle")]
    Lie2cocycle,
    #[value(name = "lsa-2cocycle")]
    Lsa2cocycle,
    InvariantForm,
    TraceForm,
    LeftInvariantForm,
    Hessian,
    LieRep,
    Bimodule,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum OOperatorBuild {
    /// r = T + T^21 in T(V) ⋉_{rho*,0} V*
    Symmetric,
    /// r = T - T^21 in G ⋉_{rho*} V*
    Skew,
    /// The induced left-symmetric products on V and on T(V)
    Lsa,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Doc(#[from] DocError),
    #[error("{0}")]
    Core(CoreError),
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

/// Everything a command produced: named reports plus an optional emitted
/// document.
#[derive(Default)]
struct Outcome {
    reports: Vec<(String, CheckReport)>,
    document: Option<Document>,
}

impl Outcome {
    fn push(&mut self, object: impl Into<String>, report: CheckReport) {
        self.reports.push((object.into(), report));
    }

    fn all_pass(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.passes())
    }
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    // LSAB_SEED overrides --seed; reserved for the randomized suites that
    // shell out to the binary
    let _seed: u64 = std::env::var("LSAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .or(cli.seed)
        .unwrap_or(0);
    match execute(cli) {
        Ok(outcome) => {
            if cli.json {
                let value = outcome_to_json(&outcome.reports, outcome.document.as_ref());
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                for (object, report) in &outcome.reports {
                    eprintln!("[{object}] {report}");
                }
                if let Some(doc) = &outcome.document {
                    println!("{}", emit_document(doc));
                }
            }
            if outcome.all_pass() {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn load(path: &Path, lenient: bool) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_document(&text, lenient)?)
}

/// Turns a core error into either a failed-check outcome (preconditions)
/// or a hard input error.
fn absorb_core<T>(
    outcome: &mut Outcome,
    object: &str,
    result: Result<T, CoreError>,
) -> Result<Option<T>, CliError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(CoreError::Precondition { report }) => {
            outcome.push(object, report);
            Ok(None)
        }
        Err(other) => Err(CliError::Core(other)),
    }
}

fn parse_index_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid index `{part}` in span list")))
        })
        .collect()
}

fn parse_vector(text: &str) -> Result<Vec<Scalar>, CliError> {
    text.split(',')
        .map(|part| {
            Scalar::parse_strict(part.trim())
                .map_err(|e| CliError::Usage(format!("invalid vector entry: {e}")))
        })
        .collect()
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check(args) => run_check(args, cli.lenient),
        Command::SubAdjacent {
            algebra,
            name,
            file,
        } => {
            let doc = load(file, cli.lenient)?;
            let a = doc.algebra(algebra)?;
            let mut outcome = Outcome::default();
            if let Some(g) = absorb_core(&mut outcome, algebra, a.sub_adjacent_lie())? {
                outcome.push(algebra.as_str(), g.check_jacobi());
                let out_name = name.clone().unwrap_or_else(|| format!("{algebra}.sub-adjacent"));
                let mut out = Document::default();
                out.push(out_name, ObjectValue::Algebra(g));
                outcome.document = Some(out);
            }
            Ok(outcome)
        }
        Command::Construct(what) => run_construct(what, cli.lenient),
        Command::Semidirect {
            algebra,
            s,
            t,
            name,
            file,
        } => {
            let doc = load(file, cli.lenient)?;
            let a = doc.algebra(algebra)?;
            let (s, t) = (doc.rep(s)?, doc.rep(t)?);
            let mut outcome = Outcome::default();
            outcome.push(algebra.as_str(), check_bimodule(a, s, t));
            if let Some(sum) = absorb_core(&mut outcome, algebra, semidirect_lsa(a, s, t))? {
                outcome.push("semidirect-sum", sum.check_left_symmetric());
                let out_name = name.clone().unwrap_or_else(|| format!("{algebra}.semidirect"));
                let mut out = Document::default();
                out.push(out_name, ObjectValue::Algebra(sum));
                outcome.document = Some(out);
            }
            Ok(outcome)
        }
        Command::MatchedPair {
            a,
            b,
            la,
            ra,
            lb,
            rb,
            build,
            file,
        } => {
            let doc = load(file, cli.lenient)?;
            let mp = MatchedPairLsa::new(
                doc.algebra(a)?.clone(),
                doc.algebra(b)?.clone(),
                doc.rep(la)?.clone(),
                doc.rep(ra)?.clone(),
                doc.rep(lb)?.clone(),
                doc.rep(rb)?.clone(),
            )
            .map_err(CliError::Core)?;
            let mut outcome = Outcome::default();
            let report = mp.check();
            let passed = report.passes();
            outcome.push(format!("{a}⋈{b}"), report);
            if *build && passed {
                let sum = mp.build().map_err(CliError::Core)?;
                let mut out = Document::default();
                out.push(format!("{a}.{b}.matched-sum"), ObjectValue::Algebra(sum));
                outcome.document = Some(out);
            }
            Ok(outcome)
        }
        Command::Bialgebra { pair, file } => {
            let doc = load(file, cli.lenient)?;
            let p = doc.pair(pair)?;
            let mut outcome = Outcome::default();
            outcome.push(pair.as_str(), check_lsa_bialgebra(&p));
            Ok(outcome)
        }
        Command::Double { pair, file } => {
            let doc = load(file, cli.lenient)?;
            let p = doc.pair(pair)?;
            let mut outcome = Outcome::default();
            if let Some(sd) = absorb_core(&mut outcome, pair, symplectic_double(&p))? {
                outcome.push(pair.as_str(), verify_symplectic_double(&p, &sd));
                let mut out = Document::default();
                let double_name = format!("{pair}.double");
                let dual_name = format!("{pair}.double.dual");
                out.push(
                    double_name.clone(),
                    ObjectValue::Algebra(sd.pair.a.clone().rename(double_name.clone())),
                );
                out.push(
                    dual_name.clone(),
                    ObjectValue::Algebra(sd.pair.dual.clone().rename(dual_name.clone())),
                );
                out.push(
                    format!("{pair}.double.pair"),
                    ObjectValue::Pair {
                        algebra: double_name,
                        dual: dual_name,
                    },
                );
                out.push(format!("{pair}.double.r"), ObjectValue::Tensor2(sd.r.clone()));
                outcome.document = Some(out);
            }
            Ok(outcome)
        }
        Command::SEquation { algebra, r, file } => {
            let doc = load(file, cli.lenient)?;
            let a = doc.algebra(algebra)?;
            let tensor = doc.tensor2(r)?;
            let mut outcome = Outcome::default();
            outcome.push(format!("{algebra}/{r}"), check_s_equation(a, tensor));
            Ok(outcome)
        }
        Command::Cybe { lie, r, file } => {
            let doc = load(file, cli.lenient)?;
            let g = doc.algebra(lie)?;
            let tensor = doc.tensor2(r)?;
            let mut outcome = Outcome::default();
            outcome.push(format!("{lie}/{r}"), check_cybe(g, tensor));
            Ok(outcome)
        }
        Command::OOperator {
            data,
            lie,
            rep,
            map,
            file,
        } => {
            let doc = load(file, cli.lenient)?;
            let odata = match (data, lie, rep, map) {
                (Some(name), _, _, _) => doc.ooperator(name)?,
                (None, Some(g), Some(r), Some(t)) => lsab_core::yangbaxter::OOperatorData::new(
                    doc.algebra(g)?.clone(),
                    doc.rep(r)?.clone(),
                    doc.map_matrix(t)?,
                )
                .map_err(CliError::Core)?,
                _ => {
                    return Err(CliError::Usage(
                        "pass --data NAME or all of --lie/--rep/--map".to_owned(),
                    ))
                }
            };
            let mut outcome = Outcome::default();
            outcome.push("o-operator", check_o_operator(&odata));
            Ok(outcome)
        }
        Command::FromOOperator { data, build, file } => {
            let doc = load(file, cli.lenient)?;
            let odata = doc.ooperator(data)?;
            let mut outcome = Outcome::default();
            match build {
                OOperatorBuild::Symmetric => {
                    if let Some(sol) =
                        absorb_core(&mut outcome, data, symmetric_solution_from_o_operator(&odata))?
                    {
                        outcome.push("ambient", check_s_equation(&sol.ambient, &sol.r));
                        let mut out = Document::default();
                        out.push(format!("{data}.ambient"), ObjectValue::Algebra(sol.ambient));
                        out.push(format!("{data}.r"), ObjectValue::Tensor2(sol.r));
                        outcome.document = Some(out);
                    }
                }
                OOperatorBuild::Skew => {
                    let sol = skew_solution_from_o_operator(&odata).map_err(CliError::Core)?;
                    outcome.push("o-operator", sol.o_operator.clone());
                    outcome.push("ambient", sol.cybe.clone());
                    let mut out = Document::default();
                    out.push(format!("{data}.ambient"), ObjectValue::Algebra(sol.ambient));
                    out.push(format!("{data}.r"), ObjectValue::Tensor2(sol.r));
                    outcome.document = Some(out);
                }
                OOperatorBuild::Lsa => {
                    if let Some((on_v, on_image)) =
                        absorb_core(&mut outcome, data, lsa_from_o_operator(&odata))?
                    {
                        outcome.push("module-product", on_v.check_left_symmetric());
                        outcome.push("image-product", on_image.check_left_symmetric());
                        let mut out = Document::default();
                        out.push(format!("{data}.module-product"), ObjectValue::Algebra(on_v));
                        out.push(format!("{data}.image-product"), ObjectValue::Algebra(on_image));
                        outcome.document = Some(out);
                    }
                }
            }
            Ok(outcome)
        }
        Command::CanonicalR { algebra, file } => {
            let doc = load(file, cli.lenient)?;
            let a = doc.algebra(algebra)?;
            let mut outcome = Outcome::default();
            if let Some(sol) = absorb_core(&mut outcome, algebra, canonical_symmetric_solution(a))? {
                outcome.push("ambient", check_s_equation(&sol.ambient, &sol.r));
                outcome.push("ambient", check_coboundary_bialgebra(&sol.ambient, &sol.r));
                outcome.push("form", check_lsa_2cocycle(&sol.ambient, &sol.form));
                let mut out = Document::default();
                out.push(format!("{algebra}.ambient"), ObjectValue::Algebra(sol.ambient));
                out.push(format!("{algebra}.r"), ObjectValue::Tensor2(sol.r));
                out.push(format!("{algebra}.form"), ObjectValue::Form(sol.form));
                outcome.document = Some(out);
            }
            Ok(outcome)
        }
        Command::Manin {
            lie,
            plus,
            plus_span,
            minus,
            minus_span,
            form,
            file,
        } => {
            let doc = load(file, cli.lenient)?;
            let p = doc.algebra(lie)?;
            let b = doc.form(form)?;
            let span_of = |indices: &Option<String>,
                           tensor: &Option<String>,
                           which: &str|
             -> Result<Matrix, CliError> {
                match (indices, tensor) {
                    (Some(list), None) => {
                        let idx = parse_index_list(list)?;
                        for &i in &idx {
                            if i >= p.dim() {
                                return Err(CliError::Usage(format!(
                                    "span index {i} out of range for dimension {}",
                                    p.dim()
                                )));
                            }
                        }
                        Ok(Matrix::from_cols(
                            p.dim(),
                            &idx.iter().map(|&i| unit_vec(p.dim(), i)).collect::<Vec<_>>(),
                        ))
                    }
                    (None, Some(name)) => Ok(doc.map_matrix(name)?),
                    _ => Err(CliError::Usage(format!(
                        "pass exactly one of --{which} or --{which}-span"
                    ))),
                }
            };
            let plus = span_of(plus, plus_span, "plus")?;
            let minus = span_of(minus, minus_span, "minus")?;
            let mut outcome = Outcome::default();
            outcome.push(lie.as_str(), check_manin_triple(p, &plus, &minus, b));
            Ok(outcome)
        }
        Command::Compat79 { pair, file } => {
            let doc = load(file, cli.lenient)?;
            let p = doc.pair(pair)?;
            let mut outcome = Outcome::default();
            outcome.push(pair.as_str(), check_lie_bialgebra_compat(&p));
            outcome.push(
                format!("{pair}.sub-adjacent"),
                check_lie_bialgebra(
                    &p.a.commutator_algebra("G(A)"),
                    &p.dual.commutator_algebra("G(A*)"),
                ),
            );
            Ok(outcome)
        }
    }
}

fn run_construct(cmd: &ConstructCmd, lenient: bool) -> Result<Outcome, CliError> {
    match cmd {
        ConstructCmd::Novikov {
            algebra,
            derivation,
            variant,
            scalar,
            element,
            name,
            file,
        } => {
            let doc = load(file, lenient)?;
            let a = doc.algebra(algebra)?;
            let d = doc.map_matrix(derivation)?;
            let variant = match variant {
                NovikovVariantArg::Gelfand => NovikovVariant::Gelfand,
                NovikovVariantArg::Filipov => {
                    let s = scalar
                        .as_ref()
                        .ok_or_else(|| CliError::Usage("filipov needs --scalar".to_owned()))?;
                    NovikovVariant::Filipov(
                        Scalar::parse_strict(s)
                            .map_err(|e| CliError::Usage(format!("invalid scalar: {e}")))?,
                    )
                }
                NovikovVariantArg::Xu => {
                    let e = element
                        .as_ref()
                        .ok_or_else(|| CliError::Usage("xu needs --element".to_owned()))?;
                    NovikovVariant::Xu(parse_vector(e)?)
                }
            };
            construct_outcome(
                name.clone().unwrap_or_else(|| format!("{algebra}.novikov")),
                constructions::novikov_from_derivation(a, &d, &variant),
                |out| out.check_novikov(),
            )
        }
        ConstructCmd::Rmatrix { lie, map, name, file } => {
            let doc = load(file, lenient)?;
            let g = doc.algebra(lie)?;
            let r = doc.map_matrix(map)?;
            construct_outcome(
                name.clone().unwrap_or_else(|| format!("{lie}.rmatrix")),
                constructions::lsa_from_rmatrix(g, &r),
                |out| out.check_left_symmetric(),
            )
        }
        ConstructCmd::RotaBaxter {
            algebra,
            map,
            name,
            file,
        } => {
            let doc = load(file, lenient)?;
            let a = doc.algebra(algebra)?;
            let r = doc.map_matrix(map)?;
            construct_outcome(
                name.clone().unwrap_or_else(|| format!("{algebra}.rota-baxter")),
                constructions::lsa_from_rota_baxter(a, &r),
                |out| out.check_left_symmetric(),
            )
        }
        ConstructCmd::Dotvec { dim, vector, name } => {
            let a = parse_vector(vector)?;
            construct_outcome(
                name.clone().unwrap_or_else(|| "dotvec".to_owned()),
                constructions::lsa_from_dot_vector(*dim, &a),
                |out| out.check_left_symmetric(),
            )
        }
        ConstructCmd::Symplectic { lie, form, name, file } => {
            let doc = load(file, lenient)?;
            let g = doc.algebra(lie)?;
            let w = doc.form(form)?;
            construct_outcome(
                name.clone().unwrap_or_else(|| format!("{lie}.symplectic")),
                constructions::lsa_from_symplectic(g, w),
                |out| out.check_left_symmetric(),
            )
        }
        ConstructCmd::CentralExt {
            algebra,
            form,
            name,
            file,
        } => {
            let doc = load(file, lenient)?;
            let a = doc.algebra(algebra)?;
            let b = doc.form(form)?;
            construct_outcome(
                name.clone().unwrap_or_else(|| format!("{algebra}.central-ext")),
                constructions::central_extension(a, b),
                |out| out.check_left_symmetric(),
            )
        }
    }
}

fn construct_outcome(
    name: String,
    result: Result<Algebra, CoreError>,
    verify: impl Fn(&Algebra) -> CheckReport,
) -> Result<Outcome, CliError> {
    let mut outcome = Outcome::default();
    if let Some(built) = absorb_core(&mut outcome, &name, result)? {
        outcome.push(name.clone(), verify(&built));
        let mut out = Document::default();
        out.push(name.clone(), ObjectValue::Algebra(built.rename(name)));
        outcome.document = Some(out);
    }
    Ok(outcome)
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Novikov algebra from a derivation of a commutative associative algebra
    Novikov {
        #[arg(long)]
        algebra: String,
        /// A tensor2 read as the matrix of the derivation
        #[arg(long)]
        derivation: String,
        #[arg(long, value_enum)]
        variant: NovikovVariantArg,
        /// Field scalar for the filipov variant
        #[arg(long)]
        scalar: Option<String>,
        /// Fixed element (comma-separated coordinates) for the xu variant
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// Left-symmetric product x*y = [R(x),y] of a classical r-matrix
    Rmatrix {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// Left-symmetric product of a Rota-Baxter operator
    RotaBaxter {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// The dot-product family u*v = (u,v)a + (u,a)v
    Dotvec {
        #[arg(long)]
        dim: usize,
        /// Comma-separated rational coordinates of the vector a
        #[arg(long)]
        vector: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// The compatible product of a symplectic Lie algebra
    Symplectic {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
    /// Central extension by a bilinear form
    CentralExt {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        name: Option<String>,
        file: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum NovikovVariantArg {
    Gelfand,
    Filipov,
    Xu,
}

fn run_check(args: &CheckArgs, lenient: bool) -> Result<Outcome, CliError> {
    let doc = load(&args.file, lenient)?;
    let mut outcome = Outcome::default();
    if args.all {
        run_check_all(&doc, &mut outcome);
        return Ok(outcome);
    }
    let Some(identity) = args.identity else {
        return Err(CliError::Usage(
            "pass --identity <NAME> or --all".to_owned(),
        ));
    };
    let algebras: Vec<&Algebra> = match &args.algebra {
        Some(name) => vec![doc.algebra(name)?],
        None => {
            let mut named: Vec<(&str, &Algebra)> = doc
                .objects
                .iter()
                .filter_map(|o| match &o.value {
                    ObjectValue::Algebra(a) => Some((o.name.as_str(), a)),
                    _ => None,
                })
                .collect();
            named.sort_by_key(|(n, _)| n.to_owned());
            named.into_iter().map(|(_, a)| a).collect()
        }
    };
    if algebras.is_empty() {
        return Err(CliError::Usage("document contains no algebras".to_owned()));
    }
    let need_form = || -> Result<&lsab_core::form::BilinearForm, CliError> {
        let name = args
            .form
            .as_ref()
            .ok_or_else(|| CliError::Usage("this identity needs --form".to_owned()))?;
        Ok(doc.form(name)?)
    };
    for a in &algebras {
        let report = match identity {
            Identity::LeftSymmetric => a.check_left_symmetric(),
            Identity::Jacobi => a.check_jacobi(),
            Identity::Associative => a.check_associative(),
            Identity::Commutative => a.check_commutative(),
            Identity::Novikov => a.check_novikov(),
            Identity::RegularRep => a.check_regular_rep(),
            Identity::TwoStepNilpotent => a.check_2step_nilpotent(),
            Identity::Lie2cocycle => check_lie_2cocycle(a, need_form()?),
            Identity::Lsa2cocycle => check_lsa_2cocycle(a, need_form()?),
            Identity::InvariantForm => check_invariant_form(a, need_form()?),
            Identity::TraceForm => check_trace_form(a, need_form()?),
            Identity::LeftInvariantForm => check_left_invariant_form(a, need_form()?),
            Identity::Hessian => check_hessian(a, need_form()?),
            Identity::LieRep => {
                let name = args
                    .rep
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("lie-rep needs --rep".to_owned()))?;
                check_lie_rep(a, doc.rep(name)?)
            }
            Identity::Bimodule => match (&args.bimodule, &args.s, &args.t) {
                (Some(bm), None, None) => {
                    let (alg, s, t) = doc.bimodule(bm)?;
                    check_bimodule(alg, s, t)
                }
                (None, Some(s), Some(t)) => check_bimodule(a, doc.rep(s)?, doc.rep(t)?),
                _ => {
                    return Err(CliError::Usage(
                        "bimodule needs --bimodule NAME or both --s and --t".to_owned(),
                    ))
                }
            },
        };
        outcome.push(a.name().to_owned(), report);
    }
    Ok(outcome)
}

/// Verifies every object's claim, evaluating independent objects
/// concurrently and reporting in name-sorted order.
fn run_check_all(doc: &Document, outcome: &mut Outcome) {
    let mut jobs: Vec<&crate::doc::NamedObject> = doc
        .objects
        .iter()
        .filter(|o| {
            !matches!(
                o.value,
                ObjectValue::Tensor2(_) | ObjectValue::Form(_) | ObjectValue::Rep { .. }
            )
        })
        .collect();
    jobs.sort_by(|a, b| a.name.cmp(&b.name));
    let reports: Vec<(String, CheckReport)> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|obj| {
                scope.spawn(move || {
                    let report = match &obj.value {
                        ObjectValue::Algebra(a) => match a.kind() {
                            AlgebraKind::LeftSymmetric => a.check_left_symmetric(),
                            AlgebraKind::Lie => a.check_jacobi(),
                            AlgebraKind::Associative => a.check_associative(),
                            AlgebraKind::Novikov => a.check_novikov(),
                            AlgebraKind::Generic => {
                                let mut r = CheckReport::new("no-claim");
                                r.add_note("generic kind carries no claim");
                                r
                            }
                        },
                        ObjectValue::Pair { .. } => {
                            let p = doc.pair(&obj.name).expect("validated at parse");
                            check_lsa_bialgebra(&p)
                        }
                        ObjectValue::Bimodule { .. } => {
                            let (a, s, t) = doc.bimodule(&obj.name).expect("validated at parse");
                            check_bimodule(a, s, t)
                        }
                        ObjectValue::OOperator { .. } => {
                            let d = doc.ooperator(&obj.name).expect("validated at parse");
                            check_o_operator(&d)
                        }
                        _ => unreachable!("filtered above"),
                    };
                    (obj.name.clone(), report)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panics")).collect()
    });
    for (name, report) in reports {
        outcome.push(name, report);
    }
}

