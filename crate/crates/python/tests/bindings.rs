use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(pyadcurve::pyadcurve)(py);
        let globals = PyDict::new(py);
        globals.set_item("ad", module).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn parameters_and_operations() {
    with_module(
        r#"
pi = ad.Parameter.type_one(1, 5, 2, [2])
assert pi.slope == (5, 2) and pi.m == 1 and pi.rank() == 2
assert pi.apply("F+").slope == (5, 7)
assert pi.apply("F,F") == pi
assert hash(pi.apply("F,F")) == hash(pi)
assert ad.Parameter.from_json(pi.to_json()) == pi
assert str(pi) == "(1, 5/2, {1:[2]}, {})"
"#,
    );
}

#[test]
fn diagrams_labels_and_dualities() {
    with_module(
        r#"
d3_sl7 = ad.Parameter.type_one(1, 3, 7, [2, 1, 1, 1, 1, 1])
assert d3_sl7.label() == "D_3^7(sl_7, [2,1^5])"
assert d3_sl7.gamma_plus()["diagram"]["dims"] == [1, 3, 2, 1, 3, 1]
assert ad.Parameter.type_one(1, 3, 2, [2]).dimension() == 0
five = ad.Parameter.type_one(1, 7, 13, [5, 3, 2, 2, 1])
assert ad.duality_complement(five) == ad.Parameter.type_one(1, 7, 22, [6, 5, 5, 4, 2])
assert len(ad.Parameter.type_one(1, 5, 2, [2]).orbit(8)["nodes"]) == 4
y = ad.YoungDiagram.parse("[3,1^2]")
assert y.columns == [3, 1, 1] and str(y) == "[3,1^2]"
"#,
    );
}

#[test]
fn errors_are_value_errors() {
    with_module(
        r#"
try:
    ad.Parameter.type_one(1, 4, 2, [2])
except ValueError as e:
    assert str(e).startswith("NotCoprime")
else:
    raise AssertionError("expected ValueError")
try:
    ad.YoungDiagram([1, 2])
except ValueError as e:
    assert str(e).startswith("MalformedDiagram")
else:
    raise AssertionError("expected ValueError")
"#,
    );
}
