//! Invariant suites behind `verify`. Failures are collected into the report
//! rather than returned as errors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use zetatree::pk::{expand_in_r_basis, lemma_2ni_sides};
use zetatree::tree::leading_coeff_via_trees;
use zetatree::{
    ak_via_trees, bernoulli_classical_oracle, bernoulli_even, catalan, coeff_recursion,
    compute_ak, compute_pk, cycle_index_elementary, elementary_symmetric, enumerate_trees,
    fn_closed_form, fn_partial_sum, generalized_transform, lemma_2ni_check, newton_girard_check,
    pk_via_trees, translated_pk, zeta_even_rational, BigInt, Rational, SequenceSpec, VariableSet,
};

use crate::commands::{CliError, CliResult};
use crate::record::{inputs, OutputRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    NewtonGirard,
    CycleIndex,
    Trees,
    Coeffs,
    Bernoulli,
    Fn,
    Positivity,
    Leading,
    #[value(name = "lemma-2ni")]
    Lemma2ni,
}

/// Seed for the random variable sets, fixed so reports are reproducible.
pub const RANDOM_SEED: u64 = 0x5eed_2c0f;
pub const RANDOM_SETS: usize = 50;

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::NewtonGirard,
        Suite::CycleIndex,
        Suite::Trees,
        Suite::Coeffs,
        Suite::Bernoulli,
        Suite::Fn,
        Suite::Positivity,
        Suite::Leading,
        Suite::Lemma2ni,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::NewtonGirard => "newton-girard",
            Suite::CycleIndex => "cycle-index",
            Suite::Trees => "trees",
            Suite::Coeffs => "coeffs",
            Suite::Bernoulli => "bernoulli",
            Suite::Fn => "fn",
            Suite::Positivity => "positivity",
            Suite::Leading => "leading",
            Suite::Lemma2ni => "lemma-2ni",
        }
    }

    /// Largest accepted `--max-k`. For the symmetric-function suites this
    /// bounds the number of variables; for `fn` it bounds `n`.
    pub fn max_bound(self) -> usize {
        match self {
            Suite::All => usize::MAX,
            Suite::NewtonGirard | Suite::CycleIndex | Suite::Fn => 8,
            Suite::Trees | Suite::Leading => 14,
            Suite::Coeffs => 20,
            Suite::Bernoulli => 60,
            Suite::Positivity => 30,
            Suite::Lemma2ni => 30,
        }
    }

    pub fn default_max_k(self) -> usize {
        match self {
            Suite::All => 0,
            Suite::NewtonGirard | Suite::CycleIndex | Suite::Fn => 8,
            Suite::Trees | Suite::Coeffs | Suite::Leading => 12,
            Suite::Bernoulli => 30,
            Suite::Positivity => 15,
            Suite::Lemma2ni => 6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Display>(name: String, lhs: T, rhs: T) -> Check {
        let passed = lhs == rhs;
        let witness = (!passed).then(|| format!("lhs = {lhs}, rhs = {rhs}"));
        Check { name, passed, witness }
    }

    fn holds(name: String, passed: bool, witness: impl FnOnce() -> String) -> Check {
        Check { name, witness: (!passed).then(witness), passed }
    }

    fn failed(name: String, err: impl std::fmt::Display) -> Check {
        Check { name, passed: false, witness: Some(format!("error: {err}")) }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "passed": self.passed });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w);
        }
        v
    }
}

/// Turns a fallible check into a failed one instead of aborting the suite.
fn guard(name: String, f: impl FnOnce(String) -> zetatree::Result<Check>) -> Check {
    f(name.clone()).unwrap_or_else(|e| Check::failed(name, e))
}

/// Rational variable sets with 1 to 8 nonzero entries, from a fixed seed.
pub fn random_variable_sets(count: usize, max_n: usize, seed: u64) -> Vec<VariableSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let values = (0..n)
                .map(|_| {
                    let mut num: i64 = rng.gen_range(-40..=40);
                    if num == 0 {
                        num = 1;
                    }
                    Rational::new(num, rng.gen_range(1..=30i64)).expect("nonzero denominator")
                })
                .collect();
            VariableSet::new(values).expect("at least one variable")
        })
        .collect()
}

fn newton_girard(max_n: usize) -> Vec<Check> {
    let mut sets = random_variable_sets(RANDOM_SETS, max_n, RANDOM_SEED);
    sets.push(VariableSet::inverse_squares(max_n).expect("max_n >= 1"));
    let mut checks = Vec::new();
    for (i, vars) in sets.iter().enumerate() {
        for k in 1..=vars.len() {
            checks.push(guard(format!("set {i}, N = {}, k = {k}", vars.len()), |name| {
                let w = newton_girard_check(vars, k)?;
                Ok(Check::eq(name, w.lhs, w.rhs))
            }));
        }
    }
    checks
}

fn cycle_index(max_n: usize) -> Vec<Check> {
    let mut sets = random_variable_sets(RANDOM_SETS, max_n, RANDOM_SEED);
    sets.push(VariableSet::inverse_squares(max_n).expect("max_n >= 1"));
    let mut checks = Vec::new();
    for (i, vars) in sets.iter().enumerate() {
        for k in 1..=vars.len() {
            checks.push(guard(format!("set {i}, N = {}, k = {k}", vars.len()), |name| {
                Ok(Check::eq(name, cycle_index_elementary(vars, k)?, elementary_symmetric(vars, k)?))
            }));
        }
    }
    checks
}

fn trees(max_k: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 1..=max_k {
        checks.push(guard(format!("tree count k = {k}"), |name| {
            Ok(Check::eq(name, BigInt::from(enumerate_trees(k)?.count()), catalan(k - 1)))
        }));
    }
    for k in 2..=max_k {
        checks.push(guard(format!("pk_via_trees k = {k}"), |name| {
            Ok(Check::eq(name, pk_via_trees(k)?, compute_pk(k)?.poly))
        }));
        checks.push(guard(format!("ak_via_trees k = {k}"), |name| {
            Ok(Check::eq(name, ak_via_trees(k)?, compute_ak(k)?))
        }));
    }
    for k in 1..=max_k.min(10) {
        checks.push(guard(format!("transform k = {k}"), |name| {
            let twice_zeta = zeta_even_rational(k)?.coeff() * Rational::from(2);
            Ok(Check::eq(name, generalized_transform(k, &SequenceSpec::Odd)?, twice_zeta))
        }));
    }
    checks
}

fn coeffs(max_k: usize) -> Vec<Check> {
    (2..=max_k)
        .map(|k| {
            guard(format!("coefficient recursion k = {k}"), |name| {
                Ok(Check::eq(name, expand_in_r_basis(&coeff_recursion(k)?, k), compute_pk(k)?.poly))
            })
        })
        .collect()
}

fn bernoulli(max_k: usize) -> Vec<Check> {
    (1..=max_k)
        .map(|k| {
            guard(format!("B_{}", 2 * k), |name| {
                Ok(Check::eq(name, bernoulli_even(k)?, bernoulli_classical_oracle(2 * k)))
            })
        })
        .collect()
}

fn fn_suite(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=max_n {
        for k in (n - 1).max(1)..=10 {
            checks.push(guard(format!("F_{n}({k}) partial sum"), |name| {
                Ok(Check::eq(name, fn_partial_sum(n, k)?, fn_closed_form(n, k)?))
            }));
        }
        checks.push(guard(format!("F_{n}({n}) = zeta({})", 2 * n), |name| {
            let sign = Rational::from(if n % 2 == 1 { 1 } else { -1 });
            Ok(Check::eq(name, fn_closed_form(n, n)?.scale(&sign), zeta_even_rational(n)?))
        }));
    }
    checks
}

fn positivity(max_k: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 2..=max_k {
        checks.push(guard(format!("deg P_{k}"), |name| {
            let p = compute_pk(k)?.poly;
            Ok(Check::holds(name, p.degree() == Some(k - 2), || format!("degree {:?}", p.degree())))
        }));
        checks.push(guard(format!("A_{k} > 0"), |name| {
            let a = compute_ak(k)?;
            Ok(Check::holds(name, a > BigInt::from(0), || format!("A_{k} = {a}")))
        }));
        checks.push(guard(format!("P_{k}(x + k - 3/2) positive"), |name| {
            let t = translated_pk(k)?;
            Ok(Check::holds(name, t.coeffs().iter().all(Rational::is_positive), || t.to_string()))
        }));
    }
    checks
}

fn leading(max_k: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 2..=max_k {
        checks.push(guard(format!("leading coefficient P_{k}"), |name| {
            let expected = compute_ak(k - 1)? << (k - 2);
            let lead = compute_pk(k)?.poly.leading_coeff().cloned().unwrap_or_else(Rational::zero);
            Ok(Check::eq(name, lead, Rational::from(expected)))
        }));
        checks.push(guard(format!("leading coefficient via trees k = {k}"), |name| {
            Ok(Check::eq(name, leading_coeff_via_trees(k)?, compute_ak(k - 1)? << (k - 2)))
        }));
    }
    checks
}

fn lemma_2ni(max_n: usize) -> Vec<Check> {
    (0..=max_n)
        .map(|n| {
            let name = format!("lemma n = {n}");
            if lemma_2ni_check(n) {
                Check { name, passed: true, witness: None }
            } else {
                let (lhs, rhs) = lemma_2ni_sides(n);
                Check::eq(name, lhs, rhs)
            }
        })
        .collect()
}

pub fn run_suite(suite: Suite, max_k: usize) -> Vec<Check> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, max_k.min(s.max_bound()))).collect(),
        Suite::NewtonGirard => newton_girard(max_k),
        Suite::CycleIndex => cycle_index(max_k),
        Suite::Trees => trees(max_k),
        Suite::Coeffs => coeffs(max_k),
        Suite::Bernoulli => bernoulli(max_k),
        Suite::Fn => fn_suite(max_k),
        Suite::Positivity => positivity(max_k),
        Suite::Leading => leading(max_k),
        Suite::Lemma2ni => lemma_2ni(max_k),
    }
}

/// Runs one suite, or every suite with `max_k` clamped to each bound.
/// Exit code 1 when any check fails.
pub fn cmd_verify(suite: Suite, max_k: Option<usize>) -> CliResult {
    let checks = match (suite, max_k) {
        (Suite::All, Some(m)) => run_suite(Suite::All, m),
        (Suite::All, None) => Suite::EACH.iter().flat_map(|&s| run_suite(s, s.default_max_k())).collect(),
        (s, m) => {
            let m = m.unwrap_or(s.default_max_k());
            let min = if s == Suite::Lemma2ni { 0 } else { 1 };
            if m < min || m > s.max_bound() {
                return Err(CliError::Usage(format!(
                    "suite {} supports {min} <= max-k <= {}, got {m}",
                    s.name(),
                    s.max_bound()
                )));
            }
            run_suite(s, m)
        }
    };
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let mut text = format!("{} checks, {} failed", checks.len(), failed.len());
    for c in &failed {
        text.push_str(&format!("\nFAIL {}: {}", c.name, c.witness.as_deref().unwrap_or("")));
    }
    let result = json!({
        "suite": suite.name(),
        "total": checks.len(),
        "failed": failed.len(),
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    });
    let inputs = inputs([("suite", Some(json!(suite.name()))), ("max_k", max_k.map(|v| json!(v)))]);
    let mut record = OutputRecord::ok("verify", inputs, result, text);
    if !failed.is_empty() {
        record.exit_code = 1;
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_sets_are_reproducible() {
        let a = random_variable_sets(5, 8, 7);
        let b = random_variable_sets(5, 8, 7);
        assert!(a.iter().zip(&b).all(|(x, y)| x.values() == y.values()));
        assert!(a.iter().all(|v| (1..=8).contains(&v.len())));
    }

    #[test]
    fn small_suites_pass() {
        for (suite, m) in [(Suite::Bernoulli, 10), (Suite::Lemma2ni, 6), (Suite::Trees, 7), (Suite::Fn, 4)] {
            let rec = cmd_verify(suite, Some(m)).unwrap();
            assert_eq!(rec.exit_code, 0, "{}", rec.text);
            assert_eq!(rec.result["failed"], json!(0));
        }
    }

    #[test]
    fn out_of_bound_is_usage_error() {
        let err = cmd_verify(Suite::Fn, Some(9)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("max-k <= 8"));
    }

    #[test]
    fn failures_carry_witnesses() {
        let c = Check::eq("x".into(), 1, 2);
        assert_eq!(c.to_json()["witness"], json!("lhs = 1, rhs = 2"));
    }
}
