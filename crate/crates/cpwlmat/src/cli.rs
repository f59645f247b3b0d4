//! The `cpwlmat` command line: argument parsing, dispatch and exit codes.
//!
//! Exit status is 0 on success, 1 when `--strict` is given and the verdict is
//! negative, and 2 for malformed input or an exceeded size cap. Diagnostics
//! are a single line naming the flag and field at fault.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cpwlmat_core::constraints::{kernel_dimension, membership, MembershipModel};
use cpwlmat_core::cpwl::{compatibility_probe, compose_pl, lovasz_eval, ComposeOp, CompatiblePL, Evaluable, ProbeConfig, ProbeReport};
use cpwlmat_core::lattice::{interaction_spectrum, moebius_transform, zeta_transform, OrderNorm, MAX_N, ABSOLUTE_MAX_N};
use cpwlmat_core::matroid::{validate_circuit_axioms, AXIOM_CHECK_MAX_N};
use cpwlmat_core::netanalyze::{analyze_network, separation_witness, MAX_REPORTED_VIOLATIONS};
use cpwlmat_core::structure::{decompose, extend_from_low_order, reconstruct, LowOrderTable};
use cpwlmat_core::{Matroid, MoebiusSpectrum, Rational, ScalarMode, SetFunction, SubsetMask, Tolerance, UniformMatroid};
use num_traits::FromPrimitive;
use serde_json::{json, Value};

use crate::formats::{self, elements_json, function_json, matroid_json, mode_name, AnyCoefficients, AnyFunction, AnyTable, JsonScalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Overrides the default cap on the ground-set size.
pub const CAP_VAR: &str = "CPWLMAT_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "cpwlmat", version, about = "Möbius spectra, matroid constraints and piecewise-linear realizations of set functions")]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Model {
    CircuitOnly,
    #[default]
    MoebiusSupport,
}

impl Model {
    fn core(self) -> MembershipModel {
        match self {
            Model::CircuitOnly => MembershipModel::CircuitOnly,
            Model::MoebiusSupport => MembershipModel::MoebiusSupport,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Model::CircuitOnly => "circuit-only",
            Model::MoebiusSupport => "moebius-support",
        }
    }
}

/// JSON arguments are inline when they start with `{`, stdin for `-`, and
/// a file path otherwise.
#[derive(Debug, Subcommand)]
enum Command {
    /// Möbius transform of a set function, or the zeta transform with --inverse.
    Transform {
        #[arg(long)]
        function: String,
        #[arg(long)]
        inverse: bool,
        /// Report per-order norms of the spectrum instead of the spectrum itself.
        #[arg(long, conflicts_with = "inverse")]
        orders: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Decide membership of a set function in the space of a matroid.
    Check {
        #[arg(long)]
        function: String,
        #[arg(long)]
        matroid: String,
        #[arg(long, value_enum, default_value_t)]
        model: Model,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        strict: bool,
    },
    /// Exact constraint rank, kernel dimension and discrepancy of a matroid.
    Dim {
        #[arg(long)]
        matroid: String,
        #[arg(long, value_enum, default_value_t)]
        model: Model,
    },
    /// Möbius coefficients on independent sets, or the inverse with --reconstruct.
    Basis {
        #[arg(long)]
        function: Option<String>,
        #[arg(long)]
        matroid: Option<String>,
        #[arg(long)]
        reconstruct: bool,
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Extend a table of values on sets of size at most k to the whole lattice.
    Reduce {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        table: String,
    },
    /// Evaluate the piecewise-linear extension at a point.
    LovaszEval {
        #[arg(long)]
        function: String,
        /// Comma-separated coordinates, e.g. "1/2,-3,0.25".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Seeded test of whether a function is affine on every braid cone.
    Probe {
        #[arg(long, required_unless_present = "net", conflicts_with = "net")]
        function: Option<String>,
        /// Probe max(F, G) for a second set function G.
        #[arg(long, requires = "function")]
        max_with: Option<String>,
        #[arg(long)]
        net: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        strict: bool,
    },
    /// Spectrum of a ReLU network on the cube and its conformance with M_{n,k}.
    NetAnalyze {
        #[arg(long)]
        net: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        strict: bool,
    },
    /// Rank, counts, circuits and axiom checks of a matroid.
    MatroidInfo {
        #[arg(long)]
        matroid: String,
        #[arg(long, default_value_t = 1000)]
        max_circuits: usize,
    },
    /// A set function lying outside the space of M_{n,k}, with its certificate.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

struct Outcome {
    text: String,
    negative: bool,
}

impl Outcome {
    fn json(v: &Value) -> Self {
        Outcome { text: formats::render(v), negative: false }
    }

    fn verdict(v: &Value, positive: bool) -> Self {
        Outcome { text: formats::render(v), negative: !positive }
    }
}

type Run<T> = Result<T, String>;

fn fail(flag: &str) -> impl Fn(cpwlmat_core::Error) -> String + '_ {
    move |e| format!("{flag}: {e}")
}

/// Reads the cap override from the environment.
pub fn cap_from_env() -> Result<usize, String> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(MAX_N),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if (1..=ABSOLUTE_MAX_N).contains(&n) => Ok(n),
            _ => Err(format!("{CAP_VAR}: expected an integer in 1..={ABSOLUTE_MAX_N}, got {s:?}")),
        },
    }
}

/// Runs the CLI with the size cap taken from the environment.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    match cap_from_env() {
        Ok(cap) => run_with_cap(args, cap, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

pub fn run_with_cap<I, A>(args: I, cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{first}");
            return EXIT_INPUT;
        }
    };
    let outcome = match execute(cli.command, cap) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| format!("--output: {}: {e}", path.display())),
        None => out.write_all(outcome.text.as_bytes()).map_err(|e| format!("stdout: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_INPUT;
    }
    if outcome.negative {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

fn load(arg: &str, flag: &str) -> Run<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("{flag}: stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("{flag}: {arg}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("{flag}: invalid JSON: {e}"))
}

fn with_flag(flag: &str) -> impl Fn(formats::FormatError) -> String + '_ {
    move |e| format!("{flag}: {e}")
}

fn function_arg(arg: &str, cap: usize, flag: &str) -> Run<AnyFunction> {
    formats::parse_function(&load(arg, flag)?, cap).map_err(with_flag(flag))
}

fn matroid_arg(arg: &str, cap: usize, strict: bool) -> Run<Matroid> {
    formats::parse_matroid(&load(arg, "--matroid")?, cap, strict, "").map_err(with_flag("--matroid"))
}

fn tolerance(mode: ScalarMode, tol: Option<f64>) -> Run<Tolerance> {
    match (mode, tol) {
        (_, Some(t)) if !t.is_finite() || t < 0.0 => Err(format!("--tol: expected a finite non-negative number, got {t}")),
        (ScalarMode::Exact, None) | (_, Some(0.0)) => Ok(Tolerance::EXACT),
        (ScalarMode::Exact, Some(_)) => Err("--tol: exact functions are checked with zero tolerance".into()),
        (ScalarMode::Float64, None) => Ok(Tolerance::FLOAT),
        (ScalarMode::Float64, Some(t)) => Ok(Tolerance { relative: t, absolute: Tolerance::FLOAT.absolute }),
    }
}

fn violations_json<T: JsonScalar>(list: &[(SubsetMask, T)]) -> Value {
    list.iter()
        .take(MAX_REPORTED_VIOLATIONS)
        .map(|(s, v)| json!({"set": elements_json(*s), "mask": s.bits(), "value": v.to_json()}))
        .collect()
}

fn orders_json<T: JsonScalar>(orders: &[OrderNorm<T>]) -> Value {
    orders
        .iter()
        .map(|o| json!({"order": o.order, "max_abs": o.max_abs.to_json(), "sum_abs": o.sum_abs.to_json()}))
        .collect()
}

fn execute(command: Command, cap: usize) -> Run<Outcome> {
    match command {
        Command::Transform { function, inverse, orders, tol } => {
            let f = function_arg(&function, cap, "--function")?;
            match f {
                AnyFunction::Exact(f) => transform(f, inverse, orders, tol),
                AnyFunction::Float(f) => transform(f, inverse, orders, tol),
            }
        }
        Command::Check { function, matroid, model, tol, strict } => {
            let f = function_arg(&function, cap, "--function")?;
            let m = matroid_arg(&matroid, cap, true)?;
            let out = match f {
                AnyFunction::Exact(f) => check(&f, &m, model, tol)?,
                AnyFunction::Float(f) => check(&f, &m, model, tol)?,
            };
            Ok(if strict { out } else { Outcome { negative: false, ..out } })
        }
        Command::Dim { matroid, model } => dim(&matroid_arg(&matroid, cap, true)?, model),
        Command::Basis { function, matroid, reconstruct, coeffs } => basis(function, matroid, reconstruct, coeffs, cap),
        Command::Reduce { k, table } => {
            let table = formats::parse_table(&load(&table, "--table")?, k, cap).map_err(with_flag("--table"))?;
            match table {
                AnyTable::Exact(t) => reduce(&t),
                AnyTable::Float(t) => reduce(&t),
            }
        }
        Command::LovaszEval { function, point } => {
            let value = match function_arg(&function, cap, "--function")? {
                AnyFunction::Exact(f) => evaluate(&f, &point)?,
                AnyFunction::Float(f) => evaluate(&f, &point)?,
            };
            Ok(Outcome { text: format!("{value}\n"), negative: false })
        }
        Command::Probe { function, max_with, net, seed, trials, tol, strict } => {
            let cfg = ProbeConfig::new(trials, seed);
            let report = match (function, net) {
                (Some(f), _) => {
                    let pl = CompatiblePL::new(exact(function_arg(&f, cap, "--function")?));
                    let tol = tolerance(ScalarMode::Exact, tol)?;
                    match max_with {
                        None => compatibility_probe(&pl, &cfg, &tol).map_err(fail("--trials"))?,
                        Some(g) => {
                            let other = CompatiblePL::new(exact(function_arg(&g, cap, "--max-with")?));
                            let composed = compose_pl(ComposeOp::Max, &pl, Some(&other as &dyn Evaluable<Rational>))
                                .map_err(fail("--max-with"))?;
                            compatibility_probe(&composed, &cfg, &tol).map_err(fail("--trials"))?
                        }
                    }
                }
                (None, Some(net)) => {
                    let net = formats::parse_network(&load(&net, "--net")?, cap).map_err(with_flag("--net"))?;
                    let tol = tolerance(ScalarMode::Float64, tol)?;
                    compatibility_probe(&net, &cfg, &tol).map_err(fail("--trials"))?
                }
                (None, None) => return Err("--function or --net is required".into()),
            };
            let out = Outcome::verdict(&probe_json(&report, trials), report.conforming);
            Ok(if strict { out } else { Outcome { negative: false, ..out } })
        }
        Command::NetAnalyze { net, k, tol, strict } => {
            let net = formats::parse_network(&load(&net, "--net")?, cap).map_err(with_flag("--net"))?;
            if k > net.input_dim() {
                return Err(format!("--k: {k} exceeds n = {}", net.input_dim()));
            }
            let tol = tolerance(ScalarMode::Float64, tol)?;
            let r = analyze_network(&net, k, &tol).map_err(fail("--net"))?;
            let v = json!({
                "n": r.n,
                "k": r.k,
                "max_order": r.max_order,
                "conforming": r.conforming,
                "violation_count": r.violation_count,
                "spectrum": orders_json(&r.spectrum),
                "violations": violations_json(&r.violations),
            });
            let out = Outcome::verdict(&v, r.conforming);
            Ok(if strict { out } else { Outcome { negative: false, ..out } })
        }
        Command::MatroidInfo { matroid, max_circuits } => matroid_info(&matroid_arg(&matroid, cap, false)?, max_circuits),
        Command::Witness { n, k } => {
            if n > cap {
                return Err(format!("--n: {n} exceeds the size cap {cap} ({CAP_VAR})"));
            }
            let (f, certificate) = separation_witness(n, k).map_err(fail("--k"))?;
            let spectrum = moebius_transform(&f);
            Ok(Outcome::json(&json!({
                "n": n,
                "k": k,
                "certificate": elements_json(certificate),
                "moebius_value": spectrum.get(certificate).to_json(),
                "function": function_json(&f),
            })))
        }
    }
}

fn transform<T: JsonScalar>(f: SetFunction<T>, inverse: bool, orders: bool, tol: Option<f64>) -> Run<Outcome> {
    let n = f.n();
    if inverse {
        let spectrum = MoebiusSpectrum::with_cap(n, f.into_values(), n).map_err(fail("--function"))?;
        return Ok(Outcome::json(&function_json(&zeta_transform(&spectrum))));
    }
    let spectrum = moebius_transform(&f);
    if orders {
        let inter = interaction_spectrum(&spectrum, &tolerance(T::MODE, tol)?);
        return Ok(Outcome::json(&json!({
            "n": n,
            "mode": mode_name(T::MODE),
            "max_order": inter.max_order,
            "orders": orders_json(&inter.orders),
        })));
    }
    let values = SetFunction::with_cap(n, spectrum.values().to_vec(), n).map_err(fail("--function"))?;
    Ok(Outcome::json(&function_json(&values)))
}

fn check<T: JsonScalar>(f: &SetFunction<T>, m: &Matroid, model: Model, tol: Option<f64>) -> Run<Outcome> {
    if f.n() != m.n() {
        return Err(format!("--matroid: n = {} does not match the function's n = {}", m.n(), f.n()));
    }
    let verdict = membership(f, m, model.core(), &tolerance(T::MODE, tol)?).map_err(fail("--function"))?;
    let v = json!({
        "model": model.name(),
        "member": verdict.member,
        "violation_count": verdict.violations.len(),
        "violations": violations_json(&verdict.violations),
    });
    Ok(Outcome::verdict(&v, verdict.member))
}

fn dim(m: &Matroid, model: Model) -> Run<Outcome> {
    let r = kernel_dimension(m).map_err(fail("--matroid"))?;
    let dimension = match model {
        Model::CircuitOnly => r.kernel_dim,
        Model::MoebiusSupport => r.independent_count,
    };
    Ok(Outcome::json(&json!({
        "n": r.n,
        "k": r.k,
        "circuit_count": r.circuit_count,
        "rank_t": r.rank_t,
        "kernel_dim": r.kernel_dim,
        "independent_count": r.independent_count,
        "discrepancy": r.discrepancy,
        "model": model.name(),
        "dimension": dimension,
    })))
}

fn basis(function: Option<String>, matroid: Option<String>, inverse: bool, coeffs: Option<String>, cap: usize) -> Run<Outcome> {
    if inverse {
        let arg = coeffs.ok_or("--coeffs: required with --reconstruct")?;
        if function.is_some() || matroid.is_some() {
            return Err("--reconstruct: takes only --coeffs".into());
        }
        let parsed = formats::parse_coefficients(&load(&arg, "--coeffs")?, cap).map_err(with_flag("--coeffs"))?;
        let v = match parsed {
            AnyCoefficients::Exact(c) => function_json(&reconstruct(&c).map_err(fail("--coeffs"))?),
            AnyCoefficients::Float(c) => function_json(&reconstruct(&c).map_err(fail("--coeffs"))?),
        };
        return Ok(Outcome::json(&v));
    }
    if coeffs.is_some() {
        return Err("--coeffs: only valid with --reconstruct".into());
    }
    let f = function_arg(&function.ok_or("--function: required")?, cap, "--function")?;
    let m = matroid_arg(&matroid.ok_or("--matroid: required")?, cap, true)?;
    match f {
        AnyFunction::Exact(f) => decompose_json(&f, &m),
        AnyFunction::Float(f) => decompose_json(&f, &m),
    }
}

fn decompose_json<T: JsonScalar>(f: &SetFunction<T>, m: &Matroid) -> Run<Outcome> {
    if f.n() != m.n() {
        return Err(format!("--matroid: n = {} does not match the function's n = {}", m.n(), f.n()));
    }
    let d = decompose(f, m).map_err(fail("--function"))?;
    let mut v = formats::coefficients_json(&d.coeffs);
    v["residual"] = d.residual.iter().map(|(s, x)| (s.bits().to_string(), x.to_json())).collect::<serde_json::Map<_, _>>().into();
    Ok(Outcome::json(&v))
}

fn reduce<T: JsonScalar>(t: &LowOrderTable<T>) -> Run<Outcome> {
    let m = UniformMatroid::new(t.n(), t.k()).map_err(fail("--k"))?;
    let f = extend_from_low_order(t, &m).map_err(fail("--table"))?;
    Ok(Outcome::json(&function_json(&f)))
}

fn evaluate<T: JsonScalar>(f: &SetFunction<T>, point: &str) -> Run<String> {
    let x = point
        .split(',')
        .enumerate()
        .map(|(i, s)| T::parse_text(s).ok_or_else(|| format!("--point: coordinate {} is not a number: {s:?}", i + 1)))
        .collect::<Run<Vec<T>>>()?;
    if x.len() != f.n() {
        return Err(format!("--point: expected {} coordinates, got {}", f.n(), x.len()));
    }
    Ok(lovasz_eval(f, &x).map_err(fail("--point"))?.to_text())
}

/// Float tables are probed through their exact dyadic values.
fn exact(f: AnyFunction) -> SetFunction<Rational> {
    match f {
        AnyFunction::Exact(f) => f,
        AnyFunction::Float(f) => {
            let n = f.n();
            let values = f.into_values().into_iter().map(|v| Rational::from_f64(v).expect("parsed values are finite")).collect();
            SetFunction::with_cap(n, values, n).expect("same shape")
        }
    }
}

fn probe_json(r: &ProbeReport, trials: usize) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "trial": w.trial,
            "cone": w.cone.order().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "points": w.points.iter().map(|p| p.iter().map(JsonScalar::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "values": w.values.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
            "predicted": w.predicted.to_json(),
        })
    });
    json!({
        "n": r.n,
        "seed": r.seed,
        "trials": trials,
        "trials_run": r.trials_run,
        "conforming": r.conforming,
        "witness": witness,
    })
}

fn matroid_info(m: &Matroid, max_circuits: usize) -> Run<Outcome> {
    let n = m.n();
    let circuits: Vec<Value> = m.circuits().take(max_circuits).map(elements_json).collect();
    let axioms = match m {
        Matroid::Uniform(_) => json!({"checked": true, "antichain": true, "elimination": true}),
        Matroid::Circuits(c) if n <= AXIOM_CHECK_MAX_N => {
            let r = validate_circuit_axioms(c).map_err(fail("--matroid"))?;
            json!({
                "checked": true,
                "antichain": r.antichain,
                "elimination": r.elimination,
                "antichain_witness": r.antichain_witness.map(|(a, b)| json!([elements_json(a), elements_json(b)])),
                "elimination_witness": r.elimination_witness.map(|(a, b, e)| json!({
                    "first": elements_json(a),
                    "second": elements_json(b),
                    "element": e,
                })),
            })
        }
        Matroid::Circuits(_) => json!({"checked": false}),
    };
    let circuit_count = m.circuit_count();
    Ok(Outcome::json(&json!({
        "matroid": matroid_json(m),
        "rank": m.rank(SubsetMask::full(n)),
        "independent_count": m.count_independent(),
        "circuit_count": circuit_count,
        "circuits": circuits,
        "circuits_truncated": circuit_count > max_circuits as u64,
        "axioms": axioms,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_cap(std::iter::once("cpwlmat").chain(args.iter().copied()), MAX_N, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tolerance_rules() {
        assert_eq!(tolerance(ScalarMode::Exact, None).unwrap(), Tolerance::EXACT);
        assert!(tolerance(ScalarMode::Exact, Some(1e-9)).is_err());
        assert_eq!(tolerance(ScalarMode::Float64, None).unwrap(), Tolerance::FLOAT);
        assert_eq!(tolerance(ScalarMode::Float64, Some(0.0)).unwrap(), Tolerance::EXACT);
        assert!(tolerance(ScalarMode::Float64, Some(-1.0)).is_err());
    }

    #[test]
    fn unknown_subcommand_is_one_line() {
        let (code, out, err) = run_args(&["frobnicate"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains("frobnicate"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("lovasz-eval"));
    }

    #[test]
    fn point_arity_is_checked() {
        let f = r#"{"n":2,"mode":"exact","values":{"0":"0","1":"1","2":"1","3":"1"}}"#;
        let (code, _, err) = run_args(&["lovasz-eval", "--function", f, "--point", "1"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--point"), "{err}");
        let (code, out, _) = run_args(&["lovasz-eval", "--function", f, "--point", "-1/2,1/4"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1/4\n");
    }
}
