//! JSON encodings of set functions, matroids, coefficient tables and networks.
//!
//! Parsing goes through [`serde_json::Value`] so that every rejection can name
//! the offending field. Output keeps insertion order, which makes the encoding
//! canonical: masks appear in increasing numeric order and exact values are
//! printed in lowest terms, integers without a denominator.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use cpwlmat_core::netanalyze::{Activation, Layer, MlpSpec};
use cpwlmat_core::structure::{BasisCoefficients, LowOrderTable};
use cpwlmat_core::{CircuitMatroid, Matroid, Rational, Scalar, ScalarMode, SetFunction, SubsetMask};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// A schema violation: `field` is a JSON path such as `values."5"`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct FormatError {
    pub field: String,
    pub message: String,
}

impl FormatError {
    pub fn new(field: impl Into<String>, message: impl fmt::Display) -> Self {
        FormatError { field: field.into(), message: message.to_string() }
    }
}

pub type FormatResult<T> = Result<T, FormatError>;

/// Scalars with a JSON encoding: `"p/q"` strings for exact values, numbers
/// for floats.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, field: &str) -> FormatResult<Self>;
    /// Text form used by `lovasz-eval` output and `--point` input.
    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Option<Self>;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value, field: &str) -> FormatResult<Self> {
        let s = v.as_str().ok_or_else(|| FormatError::new(field, "expected a \"p/q\" string"))?;
        Self::parse_text(s).ok_or_else(|| FormatError::new(field, format!("invalid rational {s:?}")))
    }

    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Option<Self> {
        Rational::from_str(s.trim()).ok()
    }
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        json!(self)
    }

    fn from_json(v: &Value, field: &str) -> FormatResult<Self> {
        v.as_f64().ok_or_else(|| FormatError::new(field, "expected a number"))
    }

    fn to_text(&self) -> String {
        json!(self).to_string()
    }

    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            Ok(_) => None,
            Err(_) => Rational::parse_text(s)?.to_f64(),
        }
    }
}

pub fn mode_name(mode: ScalarMode) -> &'static str {
    match mode {
        ScalarMode::Exact => "exact",
        ScalarMode::Float64 => "float64",
    }
}

/// A set function whose scalar mode is only known after parsing.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyFunction {
    Exact(SetFunction<Rational>),
    Float(SetFunction<f64>),
}

impl AnyFunction {
    pub fn n(&self) -> usize {
        match self {
            AnyFunction::Exact(f) => f.n(),
            AnyFunction::Float(f) => f.n(),
        }
    }
}

fn object<'a>(v: &'a Value, field: &str) -> FormatResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| FormatError::new(field, "expected an object"))
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, prefix: &str) -> FormatResult<&'a Value> {
    obj.get(key).ok_or_else(|| FormatError::new(path(prefix, key), "missing"))
}

fn path(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn unsigned(v: &Value, field: &str) -> FormatResult<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| FormatError::new(field, "expected a non-negative integer"))
}

fn ground_size(obj: &Map<String, Value>, prefix: &str, cap: usize) -> FormatResult<usize> {
    let field = path(prefix, "n");
    let n = unsigned(required(obj, "n", prefix)?, &field)?;
    if n == 0 {
        return Err(FormatError::new(field, "must be at least 1"));
    }
    if n > cap {
        return Err(FormatError::new(field, format!("{n} exceeds the size cap {cap} (CPWLMAT_MAX_N)")));
    }
    Ok(n)
}

fn mode(obj: &Map<String, Value>, prefix: &str) -> FormatResult<ScalarMode> {
    let field = path(prefix, "mode");
    match required(obj, "mode", prefix)?.as_str() {
        Some("exact") => Ok(ScalarMode::Exact),
        Some("float64") => Ok(ScalarMode::Float64),
        _ => Err(FormatError::new(field, "expected \"exact\" or \"float64\"")),
    }
}

fn mask_key(key: &str, n: usize, field: &str) -> FormatResult<SubsetMask> {
    let at = || format!("{field}.{key:?}");
    // Decimal without sign or leading zeros, so every mask has one spelling.
    if key.is_empty() || key.len() > 1 && key.starts_with('0') || !key.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::new(at(), "key must be a decimal mask"));
    }
    let mask = key.parse::<u32>().map(SubsetMask).map_err(|_| FormatError::new(at(), "mask too large"))?;
    if !mask.fits(n) {
        return Err(FormatError::new(at(), format!("mask out of range for n = {n}")));
    }
    Ok(mask)
}

/// Reads a `values` object into a mask-keyed map.
fn mask_values<T: JsonScalar>(v: &Value, n: usize, field: &str) -> FormatResult<BTreeMap<SubsetMask, T>> {
    let mut out = BTreeMap::new();
    for (key, value) in object(v, field)? {
        let mask = mask_key(key, n, field)?;
        out.insert(mask, T::from_json(value, &format!("{field}.{key:?}"))?);
    }
    Ok(out)
}

fn values_json<'a, T: JsonScalar + 'a>(entries: impl Iterator<Item = (SubsetMask, &'a T)>) -> Value {
    Value::Object(entries.map(|(s, v)| (s.bits().to_string(), v.to_json())).collect())
}

fn dense<T: JsonScalar>(obj: &Map<String, Value>, n: usize, prefix: &str) -> FormatResult<SetFunction<T>> {
    let field = path(prefix, "values");
    let mut values = mask_values::<T>(required(obj, "values", prefix)?, n, &field)?;
    let table = (0..1u32 << n)
        .map(|s| values.remove(&SubsetMask(s)).ok_or_else(|| FormatError::new(format!("{field}.\"{s}\""), "missing")))
        .collect::<FormatResult<Vec<T>>>()?;
    SetFunction::with_cap(n, table, n).map_err(|e| FormatError::new(field, e))
}

pub fn parse_function(v: &Value, cap: usize) -> FormatResult<AnyFunction> {
    let obj = object(v, "function")?;
    let n = ground_size(obj, "", cap)?;
    Ok(match mode(obj, "")? {
        ScalarMode::Exact => AnyFunction::Exact(dense(obj, n, "")?),
        ScalarMode::Float64 => AnyFunction::Float(dense(obj, n, "")?),
    })
}

pub fn function_json<T: JsonScalar>(f: &SetFunction<T>) -> Value {
    json!({
        "n": f.n(),
        "mode": mode_name(T::MODE),
        "values": values_json(f.iter()),
    })
}

/// Low-order tables carry exactly the masks of size at most `k`.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyTable {
    Exact(LowOrderTable<Rational>),
    Float(LowOrderTable<f64>),
}

fn low_order<T: JsonScalar>(obj: &Map<String, Value>, n: usize, k: usize) -> FormatResult<LowOrderTable<T>> {
    let values = mask_values::<T>(required(obj, "values", "")?, n, "values")?;
    if let Some(big) = values.keys().find(|s| s.len() > k) {
        return Err(FormatError::new(format!("values.\"{}\"", big.bits()), format!("mask has more than k = {k} elements")));
    }
    LowOrderTable::new(n, k, values).map_err(|e| match e {
        cpwlmat_core::Error::IncompleteTable(s) => FormatError::new(format!("values.\"{s}\""), "missing"),
        other => FormatError::new("values", other),
    })
}

pub fn parse_table(v: &Value, k: usize, cap: usize) -> FormatResult<AnyTable> {
    let obj = object(v, "table")?;
    let n = ground_size(obj, "", cap)?;
    if k > n {
        return Err(FormatError::new("--k", format!("{k} exceeds n = {n}")));
    }
    Ok(match mode(obj, "")? {
        ScalarMode::Exact => AnyTable::Exact(low_order(obj, n, k)?),
        ScalarMode::Float64 => AnyTable::Float(low_order(obj, n, k)?),
    })
}

pub fn table_json<T: JsonScalar>(t: &LowOrderTable<T>) -> Value {
    json!({
        "n": t.n(),
        "mode": mode_name(T::MODE),
        "values": values_json(t.values().iter().map(|(s, v)| (*s, v))),
    })
}

fn circuit_list(v: &Value, n: usize, field: &str) -> FormatResult<Vec<SubsetMask>> {
    let list = v.as_array().ok_or_else(|| FormatError::new(field, "expected an array of element lists"))?;
    list.iter()
        .enumerate()
        .map(|(i, c)| {
            let at = format!("{field}[{i}]");
            let elements = c
                .as_array()
                .ok_or_else(|| FormatError::new(&at, "expected an array of elements"))?
                .iter()
                .enumerate()
                .map(|(j, e)| unsigned(e, &format!("{at}[{j}]")))
                .collect::<FormatResult<Vec<usize>>>()?;
            if elements.is_empty() {
                return Err(FormatError::new(at, "empty circuit"));
            }
            SubsetMask::from_elements(n, &elements).map_err(|_| FormatError::new(at, format!("elements must lie in 1..={n}")))
        })
        .collect()
}

/// Parses a matroid. With `strict`, circuit families must form an antichain;
/// otherwise they are only deduplicated, for diagnostics.
pub fn parse_matroid(v: &Value, cap: usize, strict: bool, prefix: &str) -> FormatResult<Matroid> {
    let obj = object(v, if prefix.is_empty() { "matroid" } else { prefix })?;
    let n = ground_size(obj, prefix, cap)?;
    let kind_field = path(prefix, "type");
    match required(obj, "type", prefix)?.as_str() {
        Some("uniform") => {
            let field = path(prefix, "k");
            let k = unsigned(required(obj, "k", prefix)?, &field)?;
            Matroid::uniform(n, k).map_err(|e| FormatError::new(field, e))
        }
        Some("circuits") => {
            let field = path(prefix, "circuits");
            let circuits = circuit_list(required(obj, "circuits", prefix)?, n, &field)?;
            let built = if strict { CircuitMatroid::new(n, circuits) } else { CircuitMatroid::unchecked(n, circuits) };
            built.map(Matroid::from).map_err(|e| FormatError::new(field, e))
        }
        _ => Err(FormatError::new(kind_field, "expected \"uniform\" or \"circuits\"")),
    }
}

pub fn elements_json(s: SubsetMask) -> Value {
    Value::Array(s.elements().map(Value::from).collect())
}

pub fn matroid_json(m: &Matroid) -> Value {
    match m {
        Matroid::Uniform(u) => json!({"type": "uniform", "n": u.n(), "k": u.k()}),
        Matroid::Circuits(c) => json!({
            "type": "circuits",
            "n": c.n(),
            "circuits": c.circuits().iter().map(|&s| elements_json(s)).collect::<Vec<_>>(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyCoefficients {
    Exact(BasisCoefficients<Rational>),
    Float(BasisCoefficients<f64>),
}

fn coefficients<T: JsonScalar>(m: Matroid, v: &Value) -> FormatResult<BasisCoefficients<T>> {
    let coeffs = mask_values::<T>(v, m.n(), "coeffs")?;
    BasisCoefficients::new(m, coeffs).map_err(|e| match e {
        cpwlmat_core::Error::DependentCoefficient(s) => FormatError::new(format!("coeffs.\"{s}\""), "mask is dependent"),
        other => FormatError::new("coeffs", other),
    })
}

/// The scalar mode is read from the values: all strings means exact, all
/// numbers means float64.
pub fn parse_coefficients(v: &Value, cap: usize) -> FormatResult<AnyCoefficients> {
    let obj = object(v, "coefficients")?;
    let m = parse_matroid(required(obj, "matroid", "")?, cap, true, "matroid")?;
    let raw = required(obj, "coeffs", "")?;
    let entries = object(raw, "coeffs")?;
    if entries.values().all(Value::is_string) {
        Ok(AnyCoefficients::Exact(coefficients(m, raw)?))
    } else if entries.values().all(Value::is_number) {
        Ok(AnyCoefficients::Float(coefficients(m, raw)?))
    } else {
        Err(FormatError::new("coeffs", "values must be all \"p/q\" strings or all numbers"))
    }
}

pub fn coefficients_json<T: JsonScalar>(c: &BasisCoefficients<T>) -> Value {
    json!({
        "matroid": matroid_json(c.matroid()),
        "coeffs": values_json(c.coeffs().iter().map(|(s, v)| (*s, v))),
    })
}

fn float_array(v: &Value, field: &str) -> FormatResult<Vec<f64>> {
    v.as_array()
        .ok_or_else(|| FormatError::new(field, "expected an array of numbers"))?
        .iter()
        .enumerate()
        .map(|(i, x)| x.as_f64().ok_or_else(|| FormatError::new(format!("{field}[{i}]"), "expected a number")))
        .collect()
}

pub fn parse_network(v: &Value, cap: usize) -> FormatResult<MlpSpec> {
    let obj = object(v, "net")?;
    let n = ground_size(obj, "", cap)?;
    let layers = required(obj, "layers", "")?
        .as_array()
        .ok_or_else(|| FormatError::new("layers", "expected an array"))?;
    let mut width = n;
    let mut parsed = Vec::with_capacity(layers.len());
    for (i, layer) in layers.iter().enumerate() {
        let at = format!("layers[{i}]");
        let obj = object(layer, &at)?;
        let w_field = format!("{at}.w");
        let weights = required(obj, "w", &at)?
            .as_array()
            .ok_or_else(|| FormatError::new(&w_field, "expected an array of rows"))?
            .iter()
            .enumerate()
            .map(|(r, row)| float_array(row, &format!("{w_field}[{r}]")))
            .collect::<FormatResult<Vec<_>>>()?;
        if let Some(r) = weights.iter().position(|row| row.len() != width) {
            return Err(FormatError::new(format!("{w_field}[{r}]"), format!("expected {width} weights")));
        }
        let bias = float_array(required(obj, "b", &at)?, &format!("{at}.b"))?;
        if bias.len() != weights.len() {
            return Err(FormatError::new(format!("{at}.b"), format!("expected {} entries", weights.len())));
        }
        let activation = match required(obj, "act", &at)?.as_str() {
            Some("relu") => Activation::Relu,
            Some("identity") => Activation::Identity,
            _ => return Err(FormatError::new(format!("{at}.act"), "expected \"relu\" or \"identity\"")),
        };
        width = weights.len();
        parsed.push(Layer::new(weights, bias, activation));
    }
    MlpSpec::new(n, parsed).map_err(|e| FormatError::new("layers", e))
}

pub fn network_json(net: &MlpSpec) -> Value {
    let layers: Vec<Value> = net
        .layers()
        .iter()
        .map(|l| {
            json!({
                "w": l.weights,
                "b": l.bias,
                "act": match l.activation {
                    Activation::Relu => "relu",
                    Activation::Identity => "identity",
                },
            })
        })
        .collect();
    json!({"n": net.input_dim(), "layers": layers})
}

/// Pretty JSON with a trailing newline, the only output form used.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use cpwlmat_core::scalar::integer;

    const CAP: usize = 20;

    fn example() -> Value {
        json!({"n": 2, "mode": "exact", "values": {"0": "0", "1": "1/2", "2": "-3", "3": "4"}})
    }

    #[test]
    fn exact_function_round_trips() {
        let f = match parse_function(&example(), CAP).unwrap() {
            AnyFunction::Exact(f) => f,
            other => panic!("{other:?}"),
        };
        assert_eq!(f.values()[2], integer(-3));
        assert_eq!(function_json(&f), example());
    }

    #[test]
    fn keys_render_in_numeric_order() {
        let f = SetFunction::from_fn(4, |s| integer(s.bits() as i64)).unwrap();
        let text = render(&function_json(&f));
        let pos = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
        assert!(pos("2") < pos("10"));
    }

    #[test]
    fn missing_and_malformed_keys_name_the_field() {
        let mut v = example();
        v["values"].as_object_mut().unwrap().remove("2");
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "values.\"2\"");
        let mut v = example();
        v["values"]["01"] = json!("1");
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "values.\"01\"");
        let mut v = example();
        v["values"]["1"] = json!(0.5);
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "values.\"1\"");
        let mut v = example();
        v["values"]["1"] = json!("1/0");
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "values.\"1\"");
        let mut v = example();
        v["mode"] = json!("fast");
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "mode");
        let v = json!({"n": 21, "mode": "exact", "values": {}});
        assert_eq!(parse_function(&v, CAP).unwrap_err().field, "n");
    }

    #[test]
    fn float_functions_use_numbers() {
        let v = json!({"n": 1, "mode": "float64", "values": {"0": 0.25, "1": -1}});
        match parse_function(&v, CAP).unwrap() {
            AnyFunction::Float(f) => assert_eq!(f.values(), &[0.25, -1.0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matroids_parse_and_render() {
        let u = json!({"type": "uniform", "n": 4, "k": 2});
        assert_eq!(matroid_json(&parse_matroid(&u, CAP, true, "").unwrap()), u);
        let c = json!({"type": "circuits", "n": 4, "circuits": [[1, 2, 3], [1, 2, 4]]});
        assert_eq!(matroid_json(&parse_matroid(&c, CAP, true, "").unwrap()), c);
        let nested = json!({"type": "circuits", "n": 3, "circuits": [[1, 2], [1, 2, 3]]});
        assert_eq!(parse_matroid(&nested, CAP, true, "").unwrap_err().field, "circuits");
        assert!(parse_matroid(&nested, CAP, false, "").is_ok());
        let bad = json!({"type": "circuits", "n": 3, "circuits": [[1, 4]]});
        assert_eq!(parse_matroid(&bad, CAP, true, "").unwrap_err().field, "circuits[0]");
        let big_k = json!({"type": "uniform", "n": 3, "k": 4});
        assert_eq!(parse_matroid(&big_k, CAP, true, "").unwrap_err().field, "k");
    }

    #[test]
    fn tables_reject_large_masks() {
        let v = json!({"n": 2, "mode": "exact", "values": {"0": "1", "1": "1", "2": "1", "3": "1"}});
        assert_eq!(parse_table(&v, 1, CAP).unwrap_err().field, "values.\"3\"");
        let v = json!({"n": 2, "mode": "exact", "values": {"0": "1", "1": "1"}});
        assert_eq!(parse_table(&v, 1, CAP).unwrap_err().field, "values.\"2\"");
    }

    #[test]
    fn coefficients_infer_mode_and_reject_dependent_keys() {
        let v = json!({"matroid": {"type": "uniform", "n": 2, "k": 1}, "coeffs": {"1": "2"}});
        match parse_coefficients(&v, CAP).unwrap() {
            AnyCoefficients::Exact(c) => assert_eq!(c.coeffs().len(), 3),
            other => panic!("{other:?}"),
        }
        let v = json!({"matroid": {"type": "uniform", "n": 2, "k": 1}, "coeffs": {"3": "2"}});
        assert_eq!(parse_coefficients(&v, CAP).unwrap_err().field, "coeffs.\"3\"");
        let v = json!({"matroid": {"type": "uniform", "n": 2, "k": 9}, "coeffs": {}});
        assert_eq!(parse_coefficients(&v, CAP).unwrap_err().field, "matroid.k");
    }

    #[test]
    fn networks_check_shapes() {
        let v = json!({"n": 2, "layers": [
            {"w": [[1, -1], [0, 1]], "b": [0, 0], "act": "relu"},
            {"w": [[1, 1]], "b": [0], "act": "identity"}
        ]});
        let net = parse_network(&v, CAP).unwrap();
        assert_eq!(network_json(&net)["layers"][1]["act"], "identity");
        let mut bad = v.clone();
        bad["layers"][1]["w"] = json!([[1, 1, 1]]);
        assert_eq!(parse_network(&bad, CAP).unwrap_err().field, "layers[1].w[0]");
        let mut bad = v;
        bad["layers"][0]["act"] = json!("tanh");
        assert_eq!(parse_network(&bad, CAP).unwrap_err().field, "layers[0].act");
    }

    #[test]
    fn text_scalars() {
        assert_eq!(Rational::parse_text(" -3/6 ").unwrap().to_text(), "-1/2");
        assert_eq!(f64::parse_text("1/4"), Some(0.25));
        assert_eq!(f64::parse_text("inf"), None);
    }
}
