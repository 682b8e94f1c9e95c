//! Python bindings: `Element`, `Endo`, and the classifier, search and suites
//! returning plain dicts.

use bicyclic::{BicyclicElement, CanonicalEndo, Error, GeneratorImages, SearchConfig, Suite, SuiteOptions};
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Serializes `value` and hands it to `json.loads`.
fn to_python<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// An element `b^b a^a` of the bicyclic monoid.
#[pyclass(name = "Element", module = "bicyclic", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyElement(BicyclicElement);

#[pymethods]
impl PyElement {
    #[new]
    fn new(b: u64, a: u64) -> Self {
        PyElement(BicyclicElement::new(b, a))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        bicyclic::parse_element(text).map(PyElement).map_err(py_err)
    }

    #[getter]
    fn b(&self) -> u64 {
        self.0.b_exp
    }

    #[getter]
    fn a(&self) -> u64 {
        self.0.a_exp
    }

    fn multiply(&self, other: &PyElement) -> PyResult<Self> {
        self.0.multiply(other.0).map(PyElement).map_err(py_err)
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<Self> {
        self.multiply(other)
    }

    fn power(&self, n: u64) -> PyResult<Self> {
        self.0.power(n).map(PyElement).map_err(py_err)
    }

    fn __pow__(&self, n: u64, _modulo: Option<u64>) -> PyResult<Self> {
        self.power(n)
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn in_plus(&self) -> bool {
        self.0.in_plus()
    }

    fn in_minus(&self) -> bool {
        self.0.in_minus()
    }

    fn degree(&self) -> i128 {
        self.0.mg_degree()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({}, {})", self.0.b_exp, self.0.a_exp)
    }
}

/// A canonical endomorphism of the positive submonoid. Composition reads
/// left to right: `f.compose(g)` applies `f` first.
#[pyclass(name = "Endo", module = "bicyclic", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyEndo(CanonicalEndo);

#[pymethods]
impl PyEndo {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        bicyclic::parse_endo(text).map(PyEndo).map_err(py_err)
    }

    #[staticmethod]
    fn zero() -> Self {
        PyEndo(CanonicalEndo::Zero)
    }

    #[staticmethod]
    fn identity() -> Self {
        PyEndo(bicyclic::IDENTITY)
    }

    #[staticmethod]
    #[pyo3(signature = (scale, shift=0, lift=0))]
    fn inj(scale: u64, shift: u64, lift: u64) -> PyResult<Self> {
        CanonicalEndo::inj(scale, shift, lift).map(PyEndo).map_err(py_err)
    }

    #[staticmethod]
    fn sigma(l: u64, m: u64) -> PyResult<Self> {
        CanonicalEndo::sigma(l, m).map(PyEndo).map_err(py_err)
    }

    fn apply(&self, x: &PyElement) -> PyResult<PyElement> {
        self.0.apply(x.0).map(PyElement).map_err(py_err)
    }

    fn __call__(&self, x: &PyElement) -> PyResult<PyElement> {
        self.apply(x)
    }

    fn compose(&self, then: &PyEndo) -> PyResult<Self> {
        self.0.compose(&then.0).map(PyEndo).map_err(py_err)
    }

    fn is_injective(&self) -> bool {
        self.0.is_injective_form()
    }

    /// Generator images `(a, ba)`.
    fn generator_images(&self) -> PyResult<(PyElement, PyElement)> {
        let (x, y) = self.0.generator_images().map_err(py_err)?;
        Ok((PyElement(x), PyElement(y)))
    }

    fn as_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Endo.parse({:?})", self.0.to_string())
    }
}

/// Classifies the endomorphism with the given generator images on `W_bound`.
#[pyfunction]
#[pyo3(signature = (image_a, image_ba, bound=12))]
fn classify(py: Python<'_>, image_a: &PyElement, image_ba: &PyElement, bound: u64) -> PyResult<Py<PyAny>> {
    let images = GeneratorImages::new(image_a.0, image_ba.0).map_err(py_err)?;
    let result = bicyclic::classify(&images, bound).map_err(py_err)?;
    to_python(py, &result)
}

#[pyfunction]
#[pyo3(signature = (gen_exp=8, bound=12, injective_only=false))]
fn enumerate(py: Python<'_>, gen_exp: u64, bound: u64, injective_only: bool) -> PyResult<Py<PyAny>> {
    let config = SearchConfig::new(gen_exp, bound, injective_only).map_err(py_err)?;
    let report = py.detach(|| bicyclic::enumerate(&config)).map_err(py_err)?;
    to_python(py, &report)
}

/// Runs a named suite such as `"law-2.4"` and returns its report.
#[pyfunction]
#[pyo3(signature = (suite, bound=None, gen_exp=None))]
fn verify(py: Python<'_>, suite: &str, bound: Option<u64>, gen_exp: Option<u64>) -> PyResult<Py<PyAny>> {
    let suite: Suite = suite.parse().map_err(py_err)?;
    let report = py
        .detach(|| bicyclic::run_suite(suite, SuiteOptions { bound, gen_exp }))
        .map_err(py_err)?;
    to_python(py, &report)
}

#[pyfunction]
fn suites() -> Vec<&'static str> {
    Suite::ALL.iter().map(|s| s.name()).collect()
}

#[pymodule]
#[pyo3(name = "bicyclic")]
fn bicyclic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_class::<PyEndo>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    Ok(())
}
