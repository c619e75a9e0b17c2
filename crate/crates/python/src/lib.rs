//! Python bindings: `YoungDiagram`, `Parameter` and the duality functions.
//! Structured results (diagrams, orbits) come back as plain dicts.

use adcurve::diagrams::{full_diagram, gamma_plus, Diagram};
use adcurve::dualities;
use adcurve::orbits::{enumerate, TwistPolicy};
use adcurve::{apply_seq, parse_sequence, AdaParameter, Error, YoungDiagram};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.kind()))
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "YoungDiagram", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyYoungDiagram(YoungDiagram);

#[pymethods]
impl PyYoungDiagram {
    /// Column heights, weakly decreasing.
    #[new]
    fn new(columns: Vec<usize>) -> PyResult<Self> {
        YoungDiagram::new(columns).map(Self).map_err(py_err)
    }

    /// Parses `"[2,1^5]"` or `"2,1^5"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(py_err)
    }

    #[getter]
    fn columns(&self) -> Vec<usize> {
        self.0.columns().to_vec()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn truncate(&self) -> Self {
        Self(self.0.truncate())
    }

    fn prepend_column(&self, height: usize) -> PyResult<Self> {
        self.0.prepend_column(height).map(Self).map_err(py_err)
    }

    fn complement(&self, b: usize) -> PyResult<Self> {
        self.0.complement(b).map(Self).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("YoungDiagram({:?})", self.0.columns())
    }
}

#[pyclass(name = "Parameter", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyParameter(AdaParameter);

fn diagram_dict<'py>(py: Python<'py>, t: &AdaParameter, g: &Diagram) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &serde_json::json!({
            "parameter": t,
            "diagram": g,
            "cartan_pairing": g.cartan_pairing(),
            "dimension": g.wcv_dimension(),
        }),
    )
}

#[pymethods]
impl PyParameter {
    /// Parameter from its JSON encoding; validated.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let t: AdaParameter = serde_json::from_str(text).map_err(|e| PyValueError::new_err(format!("Parse: {e}")))?;
        t.validate().map_err(py_err)?;
        Ok(Self(t))
    }

    /// `(m, s/r, {1: Y}, {})`.
    #[staticmethod]
    fn type_one(m: usize, s: usize, r: usize, columns: Vec<usize>) -> PyResult<Self> {
        let y = YoungDiagram::new(columns).map_err(py_err)?;
        AdaParameter::type_one(m, s, r, y).map(Self).map_err(py_err)
    }

    /// Theory dictionary `D_p^b(sl_N, [Y])` to a parameter.
    #[staticmethod]
    fn from_physics(p: usize, b: usize, n: usize, columns: Vec<usize>) -> PyResult<Self> {
        let y = YoungDiagram::new(columns).map_err(py_err)?;
        AdaParameter::from_physics(p, b, n, y).map(Self).map_err(py_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("parameters serialize")
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }

    /// `(s, r)`.
    #[getter]
    fn slope(&self) -> (usize, usize) {
        (self.0.slope.s(), self.0.slope.r())
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn classify(&self) -> &'static str {
        self.0.classify().as_str()
    }

    /// Applies a sequence such as `"F-,F+@-1,T@i"`.
    fn apply(&self, ops: &str) -> PyResult<Self> {
        let ops = parse_sequence(ops).map_err(py_err)?;
        apply_seq(&ops, &self.0).map(Self).map_err(py_err)
    }

    #[pyo3(signature = (short = false))]
    fn label(&self, short: bool) -> PyResult<String> {
        let label = self.0.to_physics_label().map_err(py_err)?;
        Ok(if short { label.short_form() } else { label.to_string() })
    }

    fn diagram<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        diagram_dict(py, &self.0, &full_diagram(&self.0))
    }

    fn dimension(&self) -> i64 {
        full_diagram(&self.0).wcv_dimension()
    }

    fn gamma_plus<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let (plus, g) = gamma_plus(&self.0).map_err(py_err)?;
        diagram_dict(py, &plus, &g)
    }

    #[pyo3(signature = (max_denominator, twists = "none"))]
    fn orbit<'py>(&self, py: Python<'py>, max_denominator: usize, twists: &str) -> PyResult<Bound<'py, PyAny>> {
        let policy: TwistPolicy = twists.parse().map_err(py_err)?;
        let g = enumerate(&self.0, max_denominator, policy).map_err(py_err)?;
        to_py(py, &g)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Parameter{}", self.0)
    }
}

#[pyfunction]
fn duality_add_columns(t: &PyParameter, l: usize) -> PyResult<PyParameter> {
    dualities::duality_add_columns(&t.0, l).map(PyParameter).map_err(py_err)
}

#[pyfunction]
fn duality_complement(t: &PyParameter) -> PyResult<PyParameter> {
    dualities::duality_complement(&t.0).map(PyParameter).map_err(py_err)
}

#[pyfunction]
fn duality_iii(t: &PyParameter) -> PyResult<PyParameter> {
    dualities::duality_iii(&t.0).map(PyParameter).map_err(py_err)
}

#[pymodule]
pub fn pyadcurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyYoungDiagram>()?;
    m.add_class::<PyParameter>()?;
    m.add_function(wrap_pyfunction!(duality_add_columns, m)?)?;
    m.add_function(wrap_pyfunction!(duality_complement, m)?)?;
    m.add_function(wrap_pyfunction!(duality_iii, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_the_kind() {
        Python::initialize();
        Python::attach(|py| {
            let err = py_err(Error::SlopeOne);
            assert!(err.is_instance_of::<PyValueError>(py));
            assert!(err.value(py).to_string().starts_with("SlopeOne: "));
        });
    }

    #[test]
    fn values_become_python_objects() {
        Python::initialize();
        Python::attach(|py| {
            let obj = to_py(py, &serde_json::json!({ "a": [1, 2] })).unwrap();
            let a: Vec<i64> = obj.get_item("a").unwrap().extract().unwrap();
            assert_eq!(a, [1, 2]);
        });
    }
}
