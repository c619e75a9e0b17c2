//! Verification suites behind `adcurve verify`.

use std::collections::BTreeSet;

use adcurve::classes::Marking;
use adcurve::diagrams::{are_isomorphic, full_diagram, full_diagram_with_markings, gamma_plus, gamma_plus_scan};
use adcurve::dualities::*;
use adcurve::orbits::{enumerate, TwistPolicy};
use adcurve::pipeline::full_op_parameter;
use adcurve::{apply_seq, format_sequence, AdaParameter, Classification, Eigenvalue, Error, OpKind, Operation, Result};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    #[serde(flatten)]
    pub data: Value,
}

#[derive(Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub parameter: AdaParameter,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    fn new(suite: &'static str, t: &AdaParameter, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        Report {
            suite,
            parameter: t.clone(),
            checks,
            passed,
        }
    }
}

fn check(name: impl Into<String>, ok: bool, data: Value) -> Check {
    Check {
        check: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        data,
    }
}

fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
    Check {
        check: name.into(),
        status: Status::Skipped,
        data: json!({ "reason": reason.into() }),
    }
}

fn outcome(r: &Result<AdaParameter>) -> Value {
    match r {
        Ok(t) => json!(t),
        Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
    }
}

fn comparison(name: &str, sequence: &[Operation], closed: Result<AdaParameter>, composed: Result<AdaParameter>) -> Check {
    let equal = closed.is_ok() && closed == composed;
    check(
        name,
        equal,
        json!({
            "duality": name,
            "sequence": format_sequence(sequence),
            "closed_form": outcome(&closed),
            "composed": outcome(&composed),
            "equal": equal,
        }),
    )
}

pub fn dualities(t: &AdaParameter, l: usize) -> Report {
    let mut checks = Vec::new();
    if t.classify() == Classification::StandardTypeI {
        let seq = add_columns_sequence(l);
        checks.push(comparison("add-columns", &seq, duality_add_columns(t, l), apply_seq(&seq, t)));
    } else {
        checks.push(skipped("add-columns", "needs a standard type I parameter"));
    }
    match complement_sequence(t) {
        Ok(seq) => {
            checks.push(comparison("complement", &seq, duality_complement(t), apply_seq(&seq, t)));
            let mismatches: Vec<usize> = (0..=seq.len())
                .filter(|&step| {
                    let closed = intermediate(t, step);
                    closed.is_err() || closed != apply_seq(&seq[..step], t)
                })
                .collect();
            checks.push(check(
                "complement-intermediates",
                mismatches.is_empty(),
                json!({ "steps": seq.len() + 1, "mismatched_steps": mismatches }),
            ));
        }
        Err(e) => checks.push(skipped("complement", e.to_string())),
    }
    match duality_iii_sequence(t) {
        Ok(seq) => checks.push(comparison("semisimple-infinity", &seq, duality_iii(t), apply_seq(&seq, t))),
        Err(e) => checks.push(skipped("semisimple-infinity", e.to_string())),
    }
    Report::new("dualities", t, checks)
}

pub fn orbit(t: &AdaParameter, r_max: usize) -> Result<Report> {
    let g = enumerate(t, r_max, TwistPolicy::None)?;
    let mut checks = Vec::new();
    let window = json!({ "max_denominator": r_max, "nodes": g.nodes.len(), "edges": g.edges.len() });
    checks.push(match g.check_structure() {
        Ok(s) => check("structure", true, json!({ "window": window, "structure": format!("{s:?}") })),
        Err(e) => check("structure", false, json!({ "window": window, "error": e.to_string() })),
    });
    let slopes = g.slopes().iter().map(ToString::to_string).collect::<Vec<_>>();
    checks.push(match g.check_slope_set() {
        Ok(()) => check("slope-set", true, json!({ "slopes": slopes })),
        Err(e) => check("slope-set", false, json!({ "slopes": slopes, "error": e.to_string() })),
    });
    checks.push(match g.check_edge_pairing() {
        Ok(()) => check("edge-pairing", true, json!({})),
        Err(e) => check("edge-pairing", false, json!({ "error": e.to_string() })),
    });
    let dims: BTreeSet<i64> = g.nodes.iter().map(|n| full_diagram(n).wcv_dimension()).collect();
    checks.push(check("dimension-invariance", dims.len() == 1, json!({ "dimensions": dims })));
    let again = enumerate(t, r_max, TwistPolicy::None)?;
    checks.push(check("determinism", again == g, json!({})));
    Ok(Report::new("orbit", t, checks))
}

pub fn pipeline(t: &AdaParameter) -> Report {
    let mut alphas: BTreeSet<Eigenvalue> = t.c0.eigenvalues().chain(t.cinf.eigenvalues()).copied().collect();
    alphas.insert(Eigenvalue::ONE);
    let mut ops = Vec::new();
    for &alpha in &alphas {
        for kind in [OpKind::Fourier, OpKind::FourierPlus, OpKind::FourierMinus] {
            ops.push(Operation::new(kind, alpha));
        }
        if !alpha.is_one() {
            ops.push(Operation::twist(alpha));
        }
    }
    let checks = ops
        .iter()
        .map(|op| {
            if !op.is_allowed(t) {
                return skipped(op.to_string(), format!("not allowed at slope {}", t.slope));
            }
            let closed = op.apply(t);
            let oracle = full_op_parameter(op, t);
            let equal = closed.is_ok() && closed == oracle;
            check(
                op.to_string(),
                equal,
                json!({ "closed_form": outcome(&closed), "pipeline": outcome(&oracle), "equal": equal }),
            )
        })
        .collect();
    Report::new("pipeline", t, checks)
}

fn permutations(items: &[Eigenvalue]) -> BTreeSet<Vec<Eigenvalue>> {
    if items.is_empty() {
        return BTreeSet::from([Vec::new()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.insert(tail);
        }
    }
    out
}

fn eig_list(items: &[Eigenvalue]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

const MAX_MARKING_LEN: usize = 6;

fn marking_independence(t: &AdaParameter, base: i64) -> Check {
    let m0 = t.c0.truncate_at(Eigenvalue::ONE).minimal_marking().map(|m| m.0).unwrap_or_default();
    let minf = t.cinf.minimal_marking().map(|m| m.0).unwrap_or_default();
    if m0.len() > MAX_MARKING_LEN || minf.len() > MAX_MARKING_LEN {
        return skipped("marking-independence", format!("markings longer than {MAX_MARKING_LEN}"));
    }
    let mut tried = 0;
    let mut bad = Vec::new();
    for p0 in permutations(&m0) {
        for pinf in permutations(&minf) {
            tried += 1;
            let pairing = full_diagram_with_markings(t, &Marking(p0.clone()), &Marking(pinf.clone()))
                .map(|g| g.cartan_pairing());
            if pairing != Ok(base) {
                bad.push(json!({ "zero": eig_list(&p0), "infinity": eig_list(&pinf) }));
            }
        }
    }
    check("marking-independence", bad.is_empty(), json!({ "markings": tried, "mismatches": bad }))
}

pub fn diagrams(t: &AdaParameter, r_max: usize) -> Report {
    let g = full_diagram(t);
    let mut checks = vec![
        check(
            "well-formed",
            g.is_well_formed(),
            json!({ "vertices": g.num_vertices(), "dimension": g.wcv_dimension(), "nonnegative": g.is_nonnegative() }),
        ),
        marking_independence(t, g.cartan_pairing()),
    ];
    if t.slope.greater_than_one() {
        checks.push(match Operation::F.apply(t) {
            Ok(ft) => check("fourier-invariance", are_isomorphic(&g, &full_diagram(&ft)), json!({ "image": ft })),
            Err(e) => check("fourier-invariance", false, json!({ "error": e.to_string() })),
        });
    } else {
        checks.push(skipped("fourier-invariance", "F needs slope greater than 1"));
    }
    checks.push(match enumerate(t, r_max, TwistPolicy::None) {
        Ok(orbit) => {
            let dims: BTreeSet<i64> = orbit.nodes.iter().map(|n| full_diagram(n).wcv_dimension()).collect();
            check("dimension-invariance", dims.len() == 1, json!({ "max_denominator": r_max, "dimensions": dims }))
        }
        Err(e) => check("dimension-invariance", false, json!({ "error": e.to_string() })),
    });
    checks.push(match gamma_plus(t) {
        Ok((plus, closed)) => match gamma_plus_scan(t, r_max) {
            Ok(scan) => {
                let unique = scan.len() == 1;
                let agrees = unique && are_isomorphic(&scan[0].1, &closed);
                check(
                    "gamma-plus",
                    agrees,
                    json!({ "closed_form": plus, "scan_classes": scan.len(), "isomorphic": agrees }),
                )
            }
            Err(e) => check("gamma-plus", false, json!({ "error": e.to_string() })),
        },
        Err(e @ Error::Unsupported(_)) => skipped("gamma-plus", e.to_string()),
        Err(e) => check("gamma-plus", false, json!({ "error": e.to_string() })),
    });
    Report::new("diagrams", t, checks)
}
