//! Python bindings. Each call runs one `gschur` verb and returns its JSON report as a string.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use gschur::cli::commands::run as run_cli;

fn call(args: Vec<String>) -> PyResult<String> {
    let mut argv = vec!["gschur".to_string()];
    argv.extend(args);
    argv.push("--json".into());
    let (code, out, err) = run_cli(argv);
    match code {
        0 => Ok(out),
        1 => Err(PyRuntimeError::new_err(format!("check failed: {out}"))),
        _ => Err(PyValueError::new_err(err.trim().to_string())),
    }
}

fn flag(args: &mut Vec<String>, name: &str, value: Option<String>) {
    if let Some(v) = value {
        args.push(format!("--{name}"));
        args.push(v);
    }
}

/// Raw access: `run(["char", "--algebra", "builtin:trivial", ...])` returns `(code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let mut argv = vec!["gschur".to_string()];
    argv.extend(args);
    run_cli(argv)
}

#[pyfunction]
#[pyo3(signature = (algebra, n=None))]
fn verify(algebra: String, n: Option<usize>) -> PyResult<String> {
    let mut args = vec!["verify".into(), "--algebra".into(), algebra];
    flag(&mut args, "n", n.map(|x| x.to_string()));
    call(args)
}

#[pyfunction]
#[pyo3(signature = (algebra, n, lam, i=None))]
fn character(algebra: String, n: usize, lam: String, i: Option<i64>) -> PyResult<String> {
    let mut args = vec!["char".into(), "--algebra".into(), algebra, "--n".into(), n.to_string(), "--lambda".into(), lam];
    flag(&mut args, "i", i.map(|x| x.to_string()));
    call(args)
}

#[pyfunction]
#[pyo3(signature = (algebra, n, lam, c, i=None, truncate=None))]
fn filtration(algebra: String, n: usize, lam: String, c: usize, i: Option<i64>, truncate: Option<usize>) -> PyResult<String> {
    let mut args = vec![
        "filt".into(), "--algebra".into(), algebra, "--n".into(), n.to_string(),
        "--lambda".into(), lam, "--c".into(), c.to_string(),
    ];
    flag(&mut args, "i", i.map(|x| x.to_string()));
    flag(&mut args, "truncate", truncate.map(|x| x.to_string()));
    call(args)
}

#[pyfunction]
#[pyo3(signature = (algebra, n, lam, mu, i=None))]
fn multiplicities(algebra: String, n: usize, lam: String, mu: String, i: Option<i64>) -> PyResult<String> {
    let mut args = vec![
        "mult".into(), "--algebra".into(), algebra, "--n".into(), n.to_string(),
        "--lambda".into(), lam, "--mu".into(), mu,
    ];
    flag(&mut args, "i", i.map(|x| x.to_string()));
    call(args)
}

#[pymodule]
fn gschur_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(filtration, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicities, m)?)?;
    Ok(())
}
