//! Command implementations. Each returns an [`OutputRecord`] carrying both the
//! JSON payload and its text rendering.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;
use zetatree::tree::{self, MAX_TREE_SUM_K};
use zetatree::zeta::bernoulli_from_zeta;
use zetatree::{
    bernoulli_classical_oracle, bernoulli_even, coeff_recursion, compute_ak, compute_pk,
    enumerate_trees, generalized_transform, translated_pk, translated_pk_half_scale, tree_data,
    tree_data_with, zeta_even_rational, PiMultiple, Rational, SequenceSpec,
};

use crate::record::{approx_label, inputs, OutputRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] zetatree::Error),
}

impl CliError {
    /// 1 for internal consistency failures, 2 for usage and input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(zetatree::Error::Consistency(_) | zetatree::Error::InexactDivision { .. }) => 1,
            _ => 2,
        }
    }
}

pub type CliResult = Result<OutputRecord, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum BernoulliMethod {
    /// The direct operator recursion for P_k.
    #[default]
    Recursion,
    /// The plane-tree sum.
    Tree,
    /// The classical recursion sum_j C(n+1, j) B_j = 0.
    Classical,
}

impl BernoulliMethod {
    fn name(self) -> &'static str {
        match self {
            BernoulliMethod::Recursion => "recursion",
            BernoulliMethod::Tree => "tree",
            BernoulliMethod::Classical => "classical",
        }
    }
}

/// `k` values requested either singly (`--k`) or as `1..=max_k`.
fn k_range(k: Option<usize>, max_k: Option<usize>) -> Result<Vec<usize>, CliError> {
    match (k, max_k) {
        (Some(_), Some(_)) => Err(CliError::Usage("pass either --k or --max-k, not both".into())),
        (Some(0), _) | (_, Some(0)) => Err(CliError::Usage("k must be at least 1".into())),
        (Some(k), None) => Ok(vec![k]),
        (None, Some(m)) => Ok((1..=m).collect()),
        (None, None) => Err(CliError::Usage("--k or --max-k is required".into())),
    }
}

fn pi_json(z: &PiMultiple, approx: bool) -> Value {
    let mut v = json!({ "coeff": z.coeff().to_string(), "power": z.power(), "display": z.to_string() });
    if approx {
        v["approx"] = json!(approx_label(z.to_f64()));
    }
    v
}

pub fn bernoulli_value(k: usize, method: BernoulliMethod) -> Result<Rational, CliError> {
    match method {
        BernoulliMethod::Recursion => Ok(bernoulli_even(k)?),
        BernoulliMethod::Classical => Ok(bernoulli_classical_oracle(2 * k)),
        BernoulliMethod::Tree => {
            if k > MAX_TREE_SUM_K {
                return Err(CliError::Usage(format!("method tree supports 1 <= k <= {MAX_TREE_SUM_K}, got {k}")));
            }
            let twice_zeta = generalized_transform(k, &SequenceSpec::Odd)?;
            let zeta = PiMultiple::new(twice_zeta * Rational::new(1, 2)?, 2 * k as u32)?;
            Ok(bernoulli_from_zeta(k, &zeta)?)
        }
    }
}

pub fn cmd_bernoulli(k: Option<usize>, max_k: Option<usize>, method: BernoulliMethod, approx: bool) -> CliResult {
    let ks = k_range(k, max_k)?;
    let mut values = Vec::new();
    let mut lines = Vec::new();
    for &k in &ks {
        let b = bernoulli_value(k, method)?;
        let mut entry = json!({ "k": k, "n": 2 * k, "value": b.to_string() });
        let mut line = if ks.len() == 1 { b.to_string() } else { format!("B_{} = {b}", 2 * k) };
        if approx {
            entry["approx"] = json!(approx_label(b.to_f64()));
            let _ = write!(line, "  {}", approx_label(b.to_f64()));
        }
        lines.push(line);
        values.push(entry);
    }
    let result = if ks.len() == 1 { values.pop().expect("one value") } else { json!({ "values": values }) };
    let inputs = inputs([
        ("k", k.map(|v| json!(v))),
        ("max_k", max_k.map(|v| json!(v))),
        ("method", Some(json!(method.name()))),
    ]);
    Ok(OutputRecord::ok("bernoulli", inputs, result, lines.join("\n")))
}

pub fn cmd_ak(max: usize) -> CliResult {
    if max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let values: Vec<String> = (1..=max).map(|k| compute_ak(k).map(|a| a.to_string())).collect::<Result<_, _>>()?;
    let text = values.iter().enumerate().map(|(i, a)| format!("A_{} = {a}", i + 1)).collect::<Vec<_>>().join("\n");
    Ok(OutputRecord::ok("ak", inputs([("max", Some(json!(max)))]), json!({ "values": values }), text))
}

pub fn cmd_pk(k: usize, translated: bool, half_scale: bool, basis: bool) -> CliResult {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let (poly, form) = match (translated, half_scale) {
        (_, true) => (translated_pk_half_scale(k)?, "P_k(x/2 + k - 3/2)"),
        (true, false) => (translated_pk(k)?, "P_k(x + k - 3/2)"),
        (false, false) => (compute_pk(k)?.poly, "P_k(x)"),
    };
    let mut result = json!({
        "k": k,
        "form": form,
        "coeffs": poly.to_coeff_strings(),
        "display": poly.to_string(),
    });
    let mut text = poly.to_string();
    if basis && k >= 2 {
        let coeffs: Vec<String> = coeff_recursion(k)?.iter().map(Rational::to_string).collect();
        let _ = write!(text, "\nbasis coefficients c_(i,{k}): {}", coeffs.join(", "));
        result["basis_coeffs"] = json!(coeffs);
    }
    let inputs = inputs([
        ("k", Some(json!(k))),
        ("translated", Some(json!(translated))),
        ("half_scale", Some(json!(half_scale))),
        ("basis", Some(json!(basis))),
    ]);
    Ok(OutputRecord::ok("pk", inputs, result, text))
}

pub fn cmd_zeta_even(k: Option<usize>, max_k: Option<usize>, approx: bool) -> CliResult {
    let ks = k_range(k, max_k)?;
    let mut values = Vec::new();
    let mut lines = Vec::new();
    for &k in &ks {
        let z = zeta_even_rational(k)?;
        let mut line = if ks.len() == 1 { z.to_string() } else { format!("zeta({}) = {z}", 2 * k) };
        if approx {
            let _ = write!(line, "  {}", approx_label(z.to_f64()));
        }
        lines.push(line);
        let mut v = pi_json(&z, approx);
        v["k"] = json!(k);
        values.push(v);
    }
    let result = if ks.len() == 1 { values.pop().expect("one value") } else { json!({ "values": values }) };
    let inputs = inputs([("k", k.map(|v| json!(v))), ("max_k", max_k.map(|v| json!(v)))]);
    Ok(OutputRecord::ok("zeta-even", inputs, result, lines.join("\n")))
}

pub fn load_sequence(path: Option<&Path>) -> Result<SequenceSpec, CliError> {
    let Some(path) = path else {
        return Ok(SequenceSpec::Odd);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    SequenceSpec::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn indices_json(s: &zetatree::IndexSet) -> Value {
    json!(s.indices())
}

pub fn cmd_trees(k: usize, list: bool, sequence: Option<&Path>) -> CliResult {
    let seq = load_sequence(sequence)?;
    let trees = enumerate_trees(k)?;
    let count = tree::catalan(k - 1);
    let mut result = json!({ "k": k, "count": count.to_string() });
    let mut text = format!("{count} plane trees with {k} vertices");
    if list {
        // High sets reach index k - 1.
        seq.require(k.saturating_sub(1))?;
        let mut listing = Vec::new();
        for t in trees {
            let entry = if seq.is_odd_default() {
                let d = tree_data(&t)?;
                let _ = write!(
                    text,
                    "\n{:?}  low={}  high={}  wt={}",
                    t.levels(),
                    d.low,
                    d.high,
                    d.weight
                );
                json!({
                    "levels": t.levels(),
                    "low": d.low.odd_values(),
                    "high": d.high.odd_values(),
                    "low_indices": indices_json(&d.low),
                    "high_indices": indices_json(&d.high),
                    "weight": d.weight.to_string(),
                })
            } else {
                let d = tree_data_with(&t, &seq)?;
                let _ = write!(
                    text,
                    "\n{:?}  low_idx={:?}  high_idx={:?}  wt={}",
                    t.levels(),
                    d.low.indices(),
                    d.high.indices(),
                    d.weight
                );
                json!({
                    "levels": t.levels(),
                    "low_indices": indices_json(&d.low),
                    "high_indices": indices_json(&d.high),
                    "weight": d.weight.to_string(),
                })
            };
            listing.push(entry);
        }
        result["trees"] = json!(listing);
    }
    let inputs = inputs([
        ("k", Some(json!(k))),
        ("list", Some(json!(list))),
        ("sequence", sequence.map(|p| json!(p.display().to_string()))),
    ]);
    Ok(OutputRecord::ok("trees", inputs, result, text))
}

pub fn cmd_transform(k: Option<usize>, max_k: Option<usize>, sequence: Option<&Path>, approx: bool) -> CliResult {
    let ks = k_range(k, max_k)?;
    let seq = load_sequence(sequence)?;
    let mut values = Vec::new();
    let mut lines = Vec::new();
    for &k in &ks {
        let v = generalized_transform(k, &seq)?;
        let mut entry = json!({ "k": k, "value": v.to_string() });
        let mut line = if ks.len() == 1 { v.to_string() } else { format!("T_{k} = {v}") };
        if approx {
            entry["approx"] = json!(approx_label(v.to_f64()));
            let _ = write!(line, "  {}", approx_label(v.to_f64()));
        }
        lines.push(line);
        values.push(entry);
    }
    let result = if ks.len() == 1 { values.pop().expect("one value") } else { json!({ "values": values }) };
    let inputs = inputs([
        ("k", k.map(|v| json!(v))),
        ("max_k", max_k.map(|v| json!(v))),
        ("sequence", Some(json!(sequence.map_or("default: R_n = 2n+1".to_string(), |p| p.display().to_string())))),
    ]);
    Ok(OutputRecord::ok("transform", inputs, result, lines.join("\n")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_methods_agree() {
        for k in 1..=8 {
            let r = bernoulli_value(k, BernoulliMethod::Recursion).unwrap();
            assert_eq!(bernoulli_value(k, BernoulliMethod::Tree).unwrap(), r);
            assert_eq!(bernoulli_value(k, BernoulliMethod::Classical).unwrap(), r);
        }
    }

    #[test]
    fn bernoulli_text() {
        assert_eq!(cmd_bernoulli(Some(1), None, BernoulliMethod::Classical, false).unwrap().text, "1/6");
        assert_eq!(cmd_bernoulli(Some(2), None, BernoulliMethod::Recursion, false).unwrap().text, "-1/30");
        assert_eq!(cmd_bernoulli(Some(5), None, BernoulliMethod::Tree, false).unwrap().text, "5/66");
    }

    #[test]
    fn tree_method_bound() {
        let err = cmd_bernoulli(Some(15), None, BernoulliMethod::Tree, false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("1 <= k <= 14"));
    }

    #[test]
    fn k_range_rules() {
        assert!(k_range(None, None).is_err());
        assert!(k_range(Some(1), Some(2)).is_err());
        assert!(k_range(Some(0), None).is_err());
        assert_eq!(k_range(None, Some(3)).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn pk_forms() {
        assert_eq!(cmd_pk(4, true, true, false).unwrap().text, "465 + 130*x + 10*x^2");
        assert_eq!(cmd_pk(3, true, false, false).unwrap().text, "7 + 2*x");
        assert_eq!(cmd_pk(3, false, false, false).unwrap().text, "4 + 2*x");
        let rec = cmd_pk(4, false, false, true).unwrap();
        assert_eq!(rec.result["basis_coeffs"], json!(["245", "70", "10"]));
    }

    #[test]
    fn zeta_text() {
        assert_eq!(cmd_zeta_even(Some(3), None, false).unwrap().text, "1/945 * pi^6");
        let rec = cmd_zeta_even(Some(1), None, true).unwrap();
        assert!(rec.text.contains("1.6449340668482"), "{}", rec.text);
        assert!(rec.text.contains("approximate"));
    }

    #[test]
    fn trees_listing() {
        let rec = cmd_trees(3, true, None).unwrap();
        let trees = rec.result["trees"].as_array().unwrap();
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[1]["levels"], json!([1, 2]));
        assert_eq!(trees[1]["high"], json!([5]));
        assert_eq!(trees[1]["weight"], json!("5"));
    }
}
