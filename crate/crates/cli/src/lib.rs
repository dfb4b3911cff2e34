//! The `witt` command-line tool.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything that would be written to standard output and standard error,
//! so the binary is a thin wrapper and tests can drive the tool in-process.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use witt_algebra::autgrp::{self, Automorphism};
use witt_algebra::centralext::{
    self, FdLieAlgebra, LiftClass, StructureConstants, Subspace, ValidationReport,
};
use witt_algebra::kernel::{int, parse_scalar, MIndex, RatMatrix, Scalar};
use witt_algebra::text;
use witt_algebra::virasoro::{self, VirElement, DEFAULT_LIFT_WINDOW};
use witt_algebra::witt::{self, BracketSolution, Side, WeightVector, Window, WittElement};
use witt_algebra::Error;

#[derive(Debug, Parser)]
#[command(name = "witt", version, about = "Exact computations in the Witt algebras W_n and the Virasoro algebra")]
pub struct Cli {
    /// Number of variables n.
    #[arg(short = 'n', long = "dim", global = true, default_value_t = 1)]
    pub n: usize,

    /// Emit machine-readable JSON instead of canonical text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket of two elements of W_n.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Bracket of two Virasoro elements.
    Vbracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// The Virasoro cocycle (i^3 - i)/12 δ_{i,-j}.
    Cocycle {
        #[arg(allow_hyphen_values = true)]
        i: i64,
        #[arg(allow_hyphen_values = true)]
        j: i64,
    },
    /// Apply an automorphism to an element of W_n.
    Apply {
        sigma: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Composition sigma ∘ tau.
    Compose { sigma: String, tau: String },
    /// Inverse automorphism.
    Invert { sigma: String },
    /// Write a ring map x_i -> λ_i x^(a_i) as σ_A t_λ.
    Decompose { map: String },
    /// Recover σ from the images of H_1..H_n followed by those of d_1..d_n.
    /// Options must precede the images.
    Recover {
        #[arg(allow_hyphen_values = true, num_args = 1..)]
        images: Vec<String>,
    },
    /// Graded components with respect to a weight vector.
    Grade {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Leading (plus) or least (minus) term.
    Lead {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "plus")]
        side: SideArg,
    },
    /// Exponents carrying a nonzero coefficient.
    Support {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Vertices of the Newton polygon (n <= 2).
    Hull {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Whether ad(a) is locally finite.
    LfCheck {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// ad(a)^k(b) for k = 1..steps, a homogeneous.
    LfIterates {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Solve [w, b] = target for w supported in a window.
    SolveBracket {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
        /// Exponent bounds LO:HI applied to every coordinate.
        #[arg(long, allow_hyphen_values = true, default_value = "-3:3")]
        window: String,
    },
    /// Elements of a window commuting with every given element.
    Centralizer {
        #[arg(required = true)]
        elements: Vec<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "-3:3")]
        window: String,
    },
    /// Lift an automorphism of W_1 to the Virasoro algebra.
    LiftVir {
        sigma: String,
        /// Half-width N of the degree window used for solving.
        #[arg(long, default_value_t = DEFAULT_LIFT_WINDOW)]
        window: i64,
    },
    /// Check antisymmetry and the Jacobi identity of an algebra file.
    FdValidate { file: PathBuf },
    /// Centre of a finite-dimensional algebra.
    FdCenter { file: PathBuf },
    /// Derived subalgebra of a finite-dimensional algebra.
    FdDerived { file: PathBuf },
    /// Quotient by a central subspace.
    FdQuotient {
        file: PathBuf,
        /// "center", "none", or a matrix whose rows span Z.
        #[arg(long, default_value = "center")]
        z: String,
    },
    /// Kernel of Aut(G) -> Aut(G/Z).
    FdKernel {
        file: PathBuf,
        #[arg(long, default_value = "center")]
        z: String,
    },
    /// Lifts of an automorphism of G/Z, given in quotient coordinates.
    FdLift {
        file: PathBuf,
        #[arg(long, default_value = "center")]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Malformed input or arguments: exit 2.
    Usage(String),
    /// A library error on well-formed input: exit 1.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(format!("{}: {e}", e.name())),
            e => Failure::Domain(e),
        }
    }
}

type CmdResult = std::result::Result<(String, Value), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok((text, value)) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&value).expect("values serialise")
            } else {
                text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => {
            Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()) }
        }
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let n = cli.n;
    if n == 0 {
        return Err(Error::UnsupportedDimension { n }.into());
    }
    let elem = |s: &str| text::parse_witt(s, n);
    let aut = |s: &str| text::parse_automorphism(s, n);
    match &cli.command {
        Command::Bracket { a, b } => {
            let r = witt::bracket(&elem(a)?, &elem(b)?)?;
            Ok((r.to_string(), witt_json(&r)))
        }
        Command::Vbracket { a, b } => {
            require_w1(n)?;
            let r = virasoro::vir_bracket(&text::parse_vir(a)?, &text::parse_vir(b)?);
            Ok((r.to_string(), vir_json(&r)))
        }
        Command::Cocycle { i, j } => {
            let c = virasoro::cocycle(*i, *j);
            Ok((c.to_string(), json!(c.to_string())))
        }
        Command::Apply { sigma, element } => {
            let r = autgrp::apply_to_witt(&aut(sigma)?, &elem(element)?)?;
            Ok((r.to_string(), witt_json(&r)))
        }
        Command::Compose { sigma, tau } => {
            let r = autgrp::compose(&aut(sigma)?, &aut(tau)?)?;
            Ok((r.to_string(), aut_json(&r)))
        }
        Command::Invert { sigma } => {
            let r = autgrp::inverse(&aut(sigma)?);
            Ok((r.to_string(), aut_json(&r)))
        }
        Command::Decompose { map } => {
            let images = text::parse_ring_map(map, n)?;
            let r = autgrp::decompose_ring_map(&images)?;
            Ok((r.to_string(), aut_json(&r)))
        }
        Command::Recover { images } => {
            if images.len() != 2 * n {
                return Err(Failure::Usage(format!("recover expects {} images, got {}", 2 * n, images.len())));
            }
            let parsed = images.iter().map(|s| elem(s)).collect::<witt_algebra::Result<Vec<_>>>()?;
            let r = autgrp::recover_from_images(&parsed[..n], &parsed[n..])?;
            Ok((r.to_string(), aut_json(&r)))
        }
        Command::Grade { element, weight } => {
            let comps = witt::graded_components(&elem(element)?, &parse_weight(weight)?)?;
            let mut out = String::new();
            for (d, w) in &comps {
                writeln!(out, "{d}: {w}").unwrap();
            }
            if comps.is_empty() {
                out.push_str("0\n");
            }
            let v = comps.iter().map(|(d, w)| json!({"degree": d, "element": witt_json(w)})).collect();
            Ok((out, Value::Array(v)))
        }
        Command::Lead { element, weight, side } => {
            let side = match side {
                SideArg::Plus => Side::Plus,
                SideArg::Minus => Side::Minus,
            };
            let r = witt::leading_term(&elem(element)?, &parse_weight(weight)?, side)?;
            Ok((r.to_string(), witt_json(&r)))
        }
        Command::Support { element } => Ok(index_list(&witt::support(&elem(element)?))),
        Command::Hull { element } => Ok(index_list(&witt::newton_polygon_vertices(&elem(element)?)?)),
        Command::LfCheck { element } => {
            let lf = witt::is_locally_finite(&elem(element)?);
            let text = if lf { "locally finite" } else { "not locally finite" };
            Ok((text.into(), json!({ "locally_finite": lf })))
        }
        Command::LfIterates { a, b, steps } => {
            let its = witt::lf_iterates(&elem(a)?, &elem(b)?, *steps)?;
            Ok((lines(&its), Value::Array(its.iter().map(witt_json).collect())))
        }
        Command::SolveBracket { b, target, window } => {
            let win = parse_window(window, n)?;
            match witt::solve_bracket_equation(&elem(b)?, &elem(target)?, &win)? {
                BracketSolution::NoSolution => Ok(("no solution".into(), json!({ "solvable": false }))),
                BracketSolution::Family { particular, nullspace } => {
                    let mut out = format!("particular: {particular}\n");
                    for v in &nullspace {
                        writeln!(out, "free: {v}").unwrap();
                    }
                    let value = json!({
                        "solvable": true,
                        "particular": witt_json(&particular),
                        "nullspace": nullspace.iter().map(witt_json).collect::<Vec<_>>(),
                    });
                    Ok((out, value))
                }
            }
        }
        Command::Centralizer { elements, window } => {
            let gens = elements.iter().map(|s| elem(s)).collect::<witt_algebra::Result<Vec<_>>>()?;
            let basis = witt::centralizer_window(&gens, &parse_window(window, n)?)?;
            let text = if basis.is_empty() { "0".into() } else { lines(&basis) };
            Ok((text, json!({ "basis": basis.iter().map(witt_json).collect::<Vec<_>>() })))
        }
        Command::LiftVir { sigma, window } => {
            require_w1(n)?;
            let lift = virasoro::lift_w1_automorphism(&aut(sigma)?, *window)?;
            let mut out = format!("base: {}\ngamma: {}\n", lift.base(), lift.gamma());
            if lift.phi().is_empty() {
                out.push_str("phi: 0\n");
            }
            for (k, v) in lift.phi() {
                writeln!(out, "phi({k}): {v}").unwrap();
            }
            let phi: BTreeMap<String, String> = lift.phi().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
            Ok((out, json!({ "base": aut_json(lift.base()), "gamma": lift.gamma().to_string(), "phi": phi })))
        }
        Command::FdValidate { file } => {
            let (sc, _) = load_fd(file)?;
            let report = centralext::validate(&sc);
            let value = match &report {
                ValidationReport::Valid => json!({ "valid": true }),
                ValidationReport::AntisymmetryViolation { i, j } => {
                    json!({ "valid": false, "violation": "antisymmetry", "indices": [i, j] })
                }
                ValidationReport::JacobiViolation { i, j, k } => {
                    json!({ "valid": false, "violation": "jacobi", "indices": [i, j, k] })
                }
            };
            Ok((report.to_string(), value))
        }
        Command::FdCenter { file } => Ok(subspace_output(&centralext::center(&load_algebra(file)?))),
        Command::FdDerived { file } => Ok(subspace_output(&centralext::derived_subalgebra(&load_algebra(file)?))),
        Command::FdQuotient { file, z } => {
            let l = load_algebra(file)?;
            let z = parse_z(&l, z)?;
            let q = centralext::quotient_by_central(&l, &z)?;
            let w = q.algebra();
            let labels = w.labels();
            let mut out = format!("dimension: {}\nsection: {}\n", w.dim(), labels.join(" "));
            let mut brackets = Vec::new();
            let m = w.dim();
            for a in 0..m {
                for b in a + 1..m {
                    let mut ea = vec![int(0); m];
                    let mut eb = ea.clone();
                    ea[a] = int(1);
                    eb[b] = int(1);
                    let wab = w.bracket(&ea, &eb)?;
                    let zab = q.cocycle(a, b);
                    if wab.iter().chain(zab).all(|c| *c == int(0)) {
                        continue;
                    }
                    writeln!(out, "[{}, {}] = {} + {}", labels[a], labels[b], vector(&wab), vector(zab)).unwrap();
                    brackets.push(json!({ "pair": [a + 1, b + 1], "quotient": scalars(&wab), "cocycle": scalars(zab) }));
                }
            }
            let value = json!({
                "dim": m,
                "section": q.section().iter().map(|c| c + 1).collect::<Vec<_>>(),
                "labels": labels,
                "brackets": brackets,
            });
            Ok((out, value))
        }
        Command::FdKernel { file, z } => {
            let l = load_algebra(file)?;
            let z = parse_z(&l, z)?;
            let k = centralext::extension_kernel(&l, &z)?;
            let mut out = format!("dimension: {}\n", k.len());
            for m in &k {
                writeln!(out, "{m}").unwrap();
            }
            Ok((out, json!({ "dim": k.len(), "basis": k.iter().map(matrix_json).collect::<Vec<_>>() })))
        }
        Command::FdLift { file, z, sigma } => {
            let l = load_algebra(file)?;
            let z = parse_z(&l, z)?;
            let sigma = text::parse_rat_matrix(sigma)?;
            let (z_derived, w_perfect) = centralext::extension_conditions(&l, &z)?;
            let sol = centralext::lift_fd_automorphism(&l, &z, &sigma)?;
            let mut out = format!(
                "classification: {}\nz in derived subalgebra: {z_derived}\nquotient perfect: {w_perfect}\n",
                sol.classification
            );
            if let Some(b) = &sol.base {
                writeln!(out, "base: {b}").unwrap();
            }
            for f in &sol.family {
                writeln!(out, "free: {f}").unwrap();
            }
            let value = json!({
                "classification": sol.classification.to_string(),
                "z_in_derived": z_derived,
                "quotient_perfect": w_perfect,
                "base": sol.base.as_ref().map(matrix_json),
                "family": sol.family.iter().map(matrix_json).collect::<Vec<_>>(),
            });
            debug_assert!(sol.base.is_some() || sol.classification == LiftClass::None);
            Ok((out, value))
        }
    }
}

fn require_w1(n: usize) -> std::result::Result<(), Failure> {
    if n != 1 {
        return Err(Error::UnsupportedDimension { n }.into());
    }
    Ok(())
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn index_list<'a>(set: impl IntoIterator<Item = &'a MIndex>) -> (String, Value) {
    let items: Vec<&MIndex> = set.into_iter().collect();
    let text = items.iter().map(|a| format!("{a}\n")).collect();
    (text, json!(items.iter().map(|a| a.as_slice()).collect::<Vec<_>>()))
}

fn parse_weight(s: &str) -> std::result::Result<WeightVector, Failure> {
    let parts = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("invalid weight vector {s:?}: {e}")))?;
    Ok(WeightVector::new(parts))
}

fn parse_window(s: &str, n: usize) -> std::result::Result<Window, Failure> {
    let bad = || Failure::Usage(format!("invalid window {s:?}, expected LO:HI"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(Window::cube(n, lo, hi)?)
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn vector(v: &[Scalar]) -> String {
    format!("({})", scalars(v).join(","))
}

fn matrix_json(m: &RatMatrix) -> Value {
    json!(m.rows_vec().iter().map(|r| scalars(r)).collect::<Vec<_>>())
}

fn subspace_output(s: &Subspace) -> (String, Value) {
    let mut out = format!("dimension: {}\n", s.dim());
    for b in s.basis() {
        writeln!(out, "{}", vector(b)).unwrap();
    }
    (out, json!({ "dim": s.dim(), "basis": s.basis().iter().map(|b| scalars(b)).collect::<Vec<_>>() }))
}

fn gen_name(j: usize) -> String {
    format!("H{}", j + 1)
}

pub fn witt_json(w: &WittElement) -> Value {
    json!({ "terms": witt_terms_json(w) })
}

fn witt_terms_json(w: &WittElement) -> Vec<Value> {
    let mut terms = Vec::new();
    for (alpha, coeffs) in w.terms() {
        for (j, c) in coeffs.iter().enumerate() {
            if *c != int(0) {
                terms.push(json!({ "exp": alpha.as_slice(), "gen": gen_name(j), "coeff": c.to_string() }));
            }
        }
    }
    terms
}

pub fn vir_json(v: &VirElement) -> Value {
    json!({ "terms": witt_terms_json(v.witt_part()), "central": v.central().to_string() })
}

pub fn aut_json(s: &Automorphism) -> Value {
    json!({
        "A": s.matrix().rows(),
        "lambda": scalars(s.lambda()),
        "text": s.to_string(),
    })
}

fn json_err(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

/// Reads back the `{"terms": [...]}` document produced under `--json`.
pub fn witt_from_json(v: &Value, n: usize) -> witt_algebra::Result<WittElement> {
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| json_err("missing \"terms\" array"))?;
    let mut w = WittElement::zero(n);
    for t in terms {
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
            .ok_or_else(|| json_err("term needs an integer \"exp\" array"))?;
        if exp.len() != n {
            return Err(Error::DimensionError { expected: n, found: exp.len() });
        }
        let j = t
            .get("gen")
            .and_then(Value::as_str)
            .and_then(|g| g.strip_prefix('H'))
            .and_then(|g| g.parse::<usize>().ok())
            .filter(|j| (1..=n).contains(j))
            .ok_or_else(|| json_err("term needs a generator \"H1\"..\"Hn\""))?;
        let c = t.get("coeff").and_then(Value::as_str).ok_or_else(|| json_err("term needs a \"coeff\" string"))?;
        w.add_term(MIndex::new(exp), j - 1, &parse_scalar(c)?);
    }
    Ok(w)
}

pub fn vir_from_json(v: &Value) -> witt_algebra::Result<VirElement> {
    let w = witt_from_json(v, 1)?;
    let z = match v.get("central") {
        None => int(0),
        Some(c) => parse_scalar(c.as_str().ok_or_else(|| json_err("\"central\" must be a string"))?)?,
    };
    VirElement::new(w, z)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

type RawBracket = (usize, usize, Vec<(usize, Coeff)>);

/// On-disk description of a finite-dimensional Lie algebra.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FdFile {
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

/// Parses the JSON algebra format into raw (unvalidated) structure constants.
pub fn parse_fd_json(src: &str) -> witt_algebra::Result<(StructureConstants, Option<Vec<String>>)> {
    let file: FdFile = serde_json::from_str(src).map_err(|e| json_err(format!("invalid algebra file: {e}")))?;
    let mut entries = Vec::with_capacity(file.brackets.len());
    for (i, j, terms) in file.brackets {
        let terms = terms
            .into_iter()
            .map(|(k, c)| {
                let c = match c {
                    Coeff::Int(v) => Scalar::from_integer(v.into()),
                    Coeff::Text(s) => parse_scalar(&s)?,
                };
                Ok((k, c))
            })
            .collect::<witt_algebra::Result<Vec<_>>>()?;
        entries.push((i, j, terms));
    }
    Ok((StructureConstants::from_brackets(file.dim, &entries)?, file.labels))
}

fn load_fd(path: &PathBuf) -> std::result::Result<(StructureConstants, Option<Vec<String>>), Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_fd_json(&src)?)
}

fn load_algebra(path: &PathBuf) -> std::result::Result<FdLieAlgebra, Failure> {
    let (sc, labels) = load_fd(path)?;
    Ok(FdLieAlgebra::new(sc, labels)?)
}

fn parse_z(l: &FdLieAlgebra, spec: &str) -> std::result::Result<Subspace, Failure> {
    match spec.trim() {
        "center" => Ok(centralext::center(l)),
        "none" => Ok(Subspace::zero(l.dim())),
        m => {
            let rows = text::parse_rat_matrix(m)?.rows_vec();
            Ok(Subspace::span(l.dim(), &rows)?)
        }
    }
}
