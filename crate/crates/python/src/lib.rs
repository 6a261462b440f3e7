//! Python bindings: the seeded experiment runners, returning report lines.

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use bbgroup::error::Error;
use bbgroup::harness::experiments::{self, SuOptions};
use bbgroup::harness::{cli, Report};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(m) => PyValueError::new_err(m),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn lines(r: Vec<Report>) -> Vec<String> {
    r.into_iter().map(|r| r.to_string()).collect()
}

/// Miller–Rabin verdict, "composite" or "probably-prime".
#[pyfunction]
#[pyo3(signature = (n, rounds = 20, seed = 0))]
fn miller_rabin(n: BigUint, rounds: u32, seed: u64) -> PyResult<String> {
    let v = bbgroup::harness::primality::miller_rabin(&n, rounds, seed).map_err(to_py)?;
    Ok(v.to_string())
}

#[pyfunction]
#[pyo3(signature = (q, trials = 100, seed = 0))]
fn involution(q: u64, trials: usize, seed: u64) -> PyResult<String> {
    Ok(experiments::involution(q, trials, seed).map_err(to_py)?.to_string())
}

/// Trace-law report followed by the identity-shift control.
#[pyfunction]
#[pyo3(signature = (group, p, k, trials = 1000, seed = 0))]
fn frobenius(group: &str, p: u64, k: usize, trials: usize, seed: u64) -> PyResult<Vec<String>> {
    experiments::frobenius(group, p, k, trials, seed).map(lines).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (q, n = 3, trials = 1000, seed = 0))]
fn invtrans(q: u64, n: usize, trials: usize, seed: u64) -> PyResult<Vec<String>> {
    experiments::invtrans(q, n, trials, seed).map(lines).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (p, k = 1, n = 3, samples = 200, census = false, hints = Vec::new(), seed = 0))]
fn su_embed(p: BigUint, k: usize, n: usize, samples: usize, census: bool, hints: Vec<BigUint>, seed: u64) -> PyResult<String> {
    let opts = SuOptions { p, k, n, hints, samples, census, exponent_check: false };
    Ok(experiments::su_embed(&opts, seed).map_err(to_py)?.to_string())
}

/// Runs the command line on `args` (without the program name).
#[pyfunction]
fn run(args: Vec<String>) -> PyResult<Vec<String>> {
    let argv = std::iter::once("bbgroup".to_string()).chain(args).collect();
    let (_, reports) = cli::run(argv).map_err(to_py)?;
    Ok(lines(reports))
}

/// (experiment, [(param, value)], seed, trials, failures)
type ReportTuple = (String, Vec<(String, String)>, u64, u64, u64);

/// A report line as a tuple.
#[pyfunction]
fn parse_report(line: &str) -> PyResult<ReportTuple> {
    let r: Report = line.parse().map_err(to_py)?;
    Ok((r.experiment, r.parameters, r.seed, r.trials, r.failures))
}

#[pymodule]
fn pybbgroup(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(miller_rabin, m)?)?;
    m.add_function(wrap_pyfunction!(involution, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(invtrans, m)?)?;
    m.add_function(wrap_pyfunction!(su_embed, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(parse_report, m)?)?;
    Ok(())
}
