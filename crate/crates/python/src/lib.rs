//! Python bindings.

use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use equichar::bigraded::BiSymFunc;
use equichar::length;
use equichar::qpoly::format_rational;
use equichar::render;
use equichar::verify::Suite;
use equichar::{Basis, Error, QPoly};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Cache { .. } | Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn coeff_strings(c: &QPoly) -> Vec<String> {
    c.coeffs().iter().map(format_rational).collect()
}

fn integer_coeffs(c: &QPoly) -> PyResult<Vec<BigInt>> {
    c.to_integers()
        .ok_or_else(|| PyValueError::new_err("polynomial has non-integral coefficients"))
}

#[pyclass(name = "Partition", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(equichar::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        equichar::Partition::from_parts(&parts)
            .map(PyPartition)
            .map_err(py_err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    /// -1, 0 or 1 under the conjugate-lexicographic order.
    fn compare(&self, other: &PyPartition) -> PyResult<i32> {
        let ord = self.0.compare(&other.0).map_err(py_err)?;
        Ok(ord as i32)
    }

    fn irrep_dimension(&self) -> PyResult<BigInt> {
        Ok(self.0.irrep_dimension().map_err(py_err)?.into())
    }

    fn __repr__(&self) -> String {
        format!("Partition{}", self.0)
    }
}

#[pyclass(name = "SymFunc", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySymFunc(equichar::SymFunc);

fn parts_of(parts: Vec<usize>) -> PyResult<equichar::Partition> {
    equichar::Partition::from_parts(&parts).map_err(py_err)
}

#[pymethods]
impl PySymFunc {
    #[staticmethod]
    fn s(parts: Vec<usize>) -> PyResult<Self> {
        Ok(PySymFunc(equichar::SymFunc::s(parts_of(parts)?)))
    }

    #[staticmethod]
    fn p(parts: Vec<usize>) -> PyResult<Self> {
        Ok(PySymFunc(equichar::SymFunc::p(parts_of(parts)?)))
    }

    #[staticmethod]
    fn h(n: usize) -> Self {
        PySymFunc(equichar::SymFunc::h(n))
    }

    #[staticmethod]
    fn e(n: usize) -> Self {
        PySymFunc(equichar::SymFunc::e(n))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PySymFunc)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Multiplies by `q^exp`.
    fn shift(&self, exp: usize) -> Self {
        PySymFunc(self.0.scale(&QPoly::q_pow(exp)))
    }

    fn __add__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PySymFunc) -> Self {
        PySymFunc(self.0.multiply(&other.0))
    }

    fn __eq__(&self, other: &PySymFunc) -> bool {
        self.0 == other.0
    }

    fn plethysm(&self, inner: &PySymFunc) -> Self {
        PySymFunc(self.0.plethysm(&inner.0))
    }

    fn kronecker(&self, other: &PySymFunc) -> PyResult<Self> {
        self.0.kronecker(&other.0).map(PySymFunc).map_err(py_err)
    }

    fn pderiv(&self, parts: Vec<usize>) -> PyResult<Self> {
        Ok(PySymFunc(self.0.pderiv(&parts_of(parts)?)))
    }

    fn to_schur(&self) -> Self {
        PySymFunc(self.0.to_schur())
    }

    fn to_powersum(&self) -> Self {
        PySymFunc(self.0.to_powersum())
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// `{parts: [coefficient of q^0, q^1, …]}` in the current basis, with
    /// coefficients as decimal strings or `"n/d"`.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (p, c) in self.0.terms() {
            out.set_item(PyTuple::new(py, p.parts())?, coeff_strings(c))?;
        }
        Ok(out)
    }

    fn dimension(&self) -> PyResult<Vec<BigInt>> {
        integer_coeffs(&self.0.dimension().map_err(py_err)?)
    }

    fn latex(&self) -> String {
        render::symfunc_latex(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        render::symfunc_text(&self.0)
    }
}

#[pyclass(name = "BiSymFunc", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBiSymFunc(Arc<BiSymFunc>);

#[pymethods]
impl PyBiSymFunc {
    #[staticmethod]
    fn parse_latex(text: &str) -> PyResult<Self> {
        render::parse_latex(text)
            .map(|f| PyBiSymFunc(Arc::new(f)))
            .map_err(py_err)
    }

    #[getter]
    fn bidegree(&self) -> Option<(usize, usize)> {
        self.0.bidegree()
    }

    fn swap(&self) -> Self {
        PyBiSymFunc(Arc::new(self.0.swap()))
    }

    fn induce_to_full(&self) -> PySymFunc {
        PySymFunc(self.0.induce_to_full())
    }

    fn q_coefficient(&self, i: usize) -> Self {
        PyBiSymFunc(Arc::new(self.0.q_coefficient(i)))
    }

    /// `{(x_parts, y_parts): [coefficients]}` in the Schur basis.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for ((x, y), c) in self.0.to_schur().terms() {
            let key = (PyTuple::new(py, x.parts())?, PyTuple::new(py, y.parts())?);
            out.set_item(key, coeff_strings(c))?;
        }
        Ok(out)
    }

    fn dimension(&self) -> PyResult<Vec<BigInt>> {
        integer_coeffs(&self.0.dimension().map_err(py_err)?)
    }

    fn is_effective(&self) -> bool {
        self.0.is_effective()
    }

    fn __eq__(&self, other: &PyBiSymFunc) -> bool {
        *self.0 == *other.0
    }

    fn latex(&self) -> String {
        render::latex(&self.0)
    }

    fn text(&self) -> String {
        render::text(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0.to_schur()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        render::text(&self.0)
    }
}

#[pyclass(name = "Engine", frozen)]
struct PyEngine(equichar::Engine);

#[pymethods]
impl PyEngine {
    #[new]
    #[pyo3(signature = (cache=None))]
    fn new(cache: Option<std::path::PathBuf>) -> PyResult<Self> {
        let engine = match cache {
            Some(dir) => equichar::Engine::with_cache(dir).map_err(py_err)?,
            None => equichar::Engine::new(),
        };
        Ok(PyEngine(engine))
    }

    /// `E^n_{k,l}(q)` in the Schur basis.
    #[pyo3(signature = (n, k=0, l=1))]
    fn e(&self, py: Python<'_>, n: usize, k: usize, l: usize) -> PyResult<PyBiSymFunc> {
        let v = py
            .detach(|| self.0.e_schur(n, k, l))
            .map_err(py_err)?;
        Ok(PyBiSymFunc(v))
    }

    fn poincare_polynomial(&self, py: Python<'_>, n: usize) -> PyResult<Vec<BigInt>> {
        let poly = py.detach(|| self.0.poincare_polynomial(n)).map_err(py_err)?;
        integer_coeffs(&poly)
    }

    /// The length report for `n` as a JSON string.
    fn length_report(&self, py: Python<'_>, n: usize) -> PyResult<String> {
        let report = py
            .detach(|| length::length_theorem_report(&self.0, n))
            .map_err(py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Runs a self-check suite and returns its JSON summary.
    #[pyo3(signature = (suite, n_max=None))]
    fn verify(&self, py: Python<'_>, suite: &str, n_max: Option<usize>) -> PyResult<String> {
        let suite: Suite = suite.parse().map_err(py_err)?;
        let n_max = n_max.unwrap_or(suite.default_n_max());
        let report = py
            .detach(|| equichar::verify::run(suite, &self.0, n_max))
            .map_err(py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

#[pyfunction]
fn partitions_of(n: usize) -> Vec<PyPartition> {
    equichar::partitions_of(n).into_iter().map(PyPartition).collect()
}

#[pyfunction]
fn character(lambda: &PyPartition, mu: &PyPartition) -> PyResult<i64> {
    if lambda.0.size() != mu.0.size() {
        return Err(py_err(Error::SizeMismatch(lambda.0.size(), mu.0.size())));
    }
    Ok(equichar::characters::character(&lambda.0, &mu.0))
}

/// Leading constituent of a homogeneous symmetric function.
#[pyfunction]
fn leading_partition(f: &PySymFunc) -> PyResult<PyPartition> {
    length::w(&f.0).map(PyPartition).map_err(py_err)
}

#[pyfunction]
fn representation_length(f: &PySymFunc) -> PyResult<usize> {
    length::length(&f.0).map_err(py_err)
}

#[pyfunction]
fn zero() -> PySymFunc {
    PySymFunc(equichar::SymFunc::zero(Basis::Schur))
}

#[pymodule]
#[pyo3(name = "equichar")]
fn equichar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PySymFunc>()?;
    m.add_class::<PyBiSymFunc>()?;
    m.add_class::<PyEngine>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(leading_partition, m)?)?;
    m.add_function(wrap_pyfunction!(representation_length, m)?)?;
    m.add_function(wrap_pyfunction!(zero, m)?)?;
    Ok(())
}
