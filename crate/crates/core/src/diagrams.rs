//! Nonabelian Hodge diagrams of AD-A parameters.
//!
//! Vertices are the `m` wild circles at infinity, the tame circle at 0 with
//! its leg and the tame circle at infinity with its leg. `B` is the symmetric
//! multiplicity matrix; a diagonal entry is twice the number of loops.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classes::{ConjugacyClass, Eigenvalue, Marking};
use crate::error::{Error, Result};
use crate::orbits::{enumerate, TwistPolicy};
use crate::params::{AdaParameter, Classification, Slope};
use crate::young::YoungDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "kebab-case")]
pub enum VertexLabel {
    /// Wild circle, numbered from 1.
    Wild(usize),
    /// Position on the leg at 0; position 0 is the tame circle itself.
    Tame0(usize),
    /// Position on the leg at infinity.
    TameInf(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Wild(i) => write!(f, "wild{i}"),
            VertexLabel::Tame0(j) => write!(f, "zero{j}"),
            VertexLabel::TameInf(j) => write!(f, "inf{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Diagram {
    pub labels: Vec<VertexLabel>,
    pub b: Vec<Vec<i64>>,
    pub dims: Vec<i64>,
}

impl Diagram {
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// `(d, d) = dᵀ (2I - B) d`.
    pub fn cartan_pairing(&self) -> i64 {
        let n = self.num_vertices();
        let mut total = 0;
        for i in 0..n {
            total += 2 * self.dims[i] * self.dims[i];
            for j in 0..n {
                total -= self.b[i][j] * self.dims[i] * self.dims[j];
            }
        }
        total
    }

    /// Dimension of the wild character variety, `2 - (d, d)`.
    pub fn wcv_dimension(&self) -> i64 {
        2 - self.cartan_pairing()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.b.iter().flatten().all(|&x| x >= 0)
    }

    /// Symmetric with even diagonal.
    pub fn is_well_formed(&self) -> bool {
        let n = self.num_vertices();
        self.b.len() == n
            && self.dims.len() == n
            && self.b.iter().all(|row| row.len() == n)
            && (0..n).all(|i| self.b[i][i] % 2 == 0 && (0..n).all(|j| self.b[i][j] == self.b[j][i]))
    }

    /// Restriction to the wild vertices and the two tame circles.
    pub fn core(&self) -> Diagram {
        let keep: Vec<usize> = (0..self.num_vertices())
            .filter(|&i| {
                matches!(
                    self.labels[i],
                    VertexLabel::Wild(_) | VertexLabel::Tame0(0) | VertexLabel::TameInf(0)
                )
            })
            .collect();
        Diagram {
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
            b: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.b[i][j]).collect())
                .collect(),
            dims: keep.iter().map(|&i| self.dims[i]).collect(),
        }
    }

    /// Graphviz rendering. Vertices are labelled `name:dim`, edges carry
    /// `mult=<B_ij>` and loops carry `loops=<B_ii/2>`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph diagram {\n");
        for (i, (label, d)) in self.labels.iter().zip(&self.dims).enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{label}:{d}\"];");
        }
        for i in 0..self.num_vertices() {
            if self.b[i][i] != 0 {
                let loops = self.b[i][i] / 2;
                let _ = writeln!(out, "  v{i} -- v{i} [loops={loops}, label=\"{loops}\"];");
            }
            for j in i + 1..self.num_vertices() {
                let mult = self.b[i][j];
                if mult != 0 {
                    let _ = writeln!(out, "  v{i} -- v{j} [mult={mult}, label=\"{mult}\"];");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Core multiplicities for `m` wild circles of slope `s/r`:
/// `(wild loop, wild-wild, wild-tame∞, wild-tame0)`.
pub fn core_multiplicities(slope: Slope) -> (i64, i64, i64, i64) {
    let (s, r) = (slope.s() as i64, slope.r() as i64);
    ((r - 1) * (s - r - 1), r * (s - r), s - r, r)
}

/// Diagram from explicit leg dimensions at 0 and infinity.
fn assemble(m: usize, slope: Slope, leg0: &[usize], leg_inf: &[usize]) -> Diagram {
    let (loop_b, wild_wild, wild_inf, wild_zero) = core_multiplicities(slope);
    let mut labels: Vec<VertexLabel> = (1..=m).map(VertexLabel::Wild).collect();
    let mut dims: Vec<i64> = vec![1; m];
    let zero_start = labels.len();
    for (j, &d) in leg0.iter().enumerate() {
        labels.push(VertexLabel::Tame0(j));
        dims.push(d as i64);
    }
    let inf_start = labels.len();
    for (j, &d) in leg_inf.iter().enumerate() {
        labels.push(VertexLabel::TameInf(j));
        dims.push(d as i64);
    }
    let n = labels.len();
    let mut b = vec![vec![0i64; n]; n];
    let mut link = |i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    for i in 0..m {
        link(i, i, loop_b);
        for j in i + 1..m {
            link(i, j, wild_wild);
        }
        if !leg0.is_empty() {
            link(i, zero_start, wild_zero);
        }
        if !leg_inf.is_empty() {
            link(i, inf_start, wild_inf);
        }
    }
    if !leg0.is_empty() && !leg_inf.is_empty() {
        link(zero_start, inf_start, 1);
    }
    for j in 1..leg0.len() {
        link(zero_start + j - 1, zero_start + j, 1);
    }
    for j in 1..leg_inf.len() {
        link(inf_start + j - 1, inf_start + j, 1);
    }
    Diagram { labels, b, dims }
}

/// Wild vertices plus the tame circles, without the legs.
pub fn core_diagram(t: &AdaParameter) -> Diagram {
    full_diagram(t).core()
}

/// Full diagram with the canonical minimal markings.
pub fn full_diagram(t: &AdaParameter) -> Diagram {
    let leg0 = t.c0.truncate_at(Eigenvalue::ONE).canonical_leg();
    let leg_inf = t.cinf.canonical_leg();
    assemble(t.m, t.slope, &leg0.dims, &leg_inf.dims)
}

/// Full diagram with chosen markings of `τ_1(C0)` and `Cinf`.
pub fn full_diagram_with_markings(
    t: &AdaParameter,
    marking0: &Marking,
    marking_inf: &Marking,
) -> Result<Diagram> {
    let leg0 = t.c0.truncate_at(Eigenvalue::ONE).leg(marking0)?;
    let leg_inf = t.cinf.leg(marking_inf)?;
    Ok(assemble(t.m, t.slope, &leg0.dims, &leg_inf.dims))
}

/// `Γ₊` parameter and diagram for standard and generalized type I inputs.
///
/// For `s > 1` with `r = κs + ρ` this is `(F-)^κ T`: the slope becomes
/// `s/ρ`, `C0` loses its first `κ` columns at 1 and `Cinf` gains at 1 the
/// columns `ms - h_κ, ..., ms - h_1` in front of its own. For `s = 1` the
/// same formula runs with `κ = r - 1` down to slope 1.
pub fn gamma_plus(t: &AdaParameter) -> Result<(AdaParameter, Diagram)> {
    t.validate()?;
    match t.classify() {
        Classification::Standard | Classification::StandardTypeI | Classification::GeneralizedTypeI => {}
        Classification::Generalized => {
            return Err(Error::Unsupported(
                "closed-form Γ₊ needs a unipotent class at 0; use the orbit scan".into(),
            ))
        }
    }
    let (s, r) = (t.slope.s(), t.slope.r());
    let (kappa, rho) = t.slope.euclid().unwrap_or((r - 1, 1));
    let ms = t.m * s;
    let y0 = t.c0.part(&Eigenvalue::ONE);
    let cols = y0.columns();
    let height = |j: usize| cols.get(j).copied().unwrap_or(0);
    let mut added = Vec::with_capacity(kappa);
    for j in (0..kappa).rev() {
        let h = ms.checked_sub(height(j)).ok_or_else(|| {
            Error::MalformedDiagram(format!("column {} exceeds ms = {ms}", height(j)))
        })?;
        if h > 0 {
            added.push(h);
        }
    }
    let y_inf = t.cinf.part(&Eigenvalue::ONE);
    added.extend_from_slice(y_inf.columns());
    let c0 = ConjugacyClass::unipotent(YoungDiagram::new(cols.iter().skip(kappa).copied().collect())?);
    let cinf = ConjugacyClass::from_parts(
        t.cinf
            .parts()
            .filter(|(e, _)| !e.is_one())
            .map(|(e, y)| (*e, y.clone()))
            .chain(std::iter::once((Eigenvalue::ONE, YoungDiagram::new(added)?))),
    )?;
    let plus = AdaParameter::new(t.m, Slope::new(s, rho)?, c0, cinf)?;
    let diagram = full_diagram(&plus);
    Ok((plus, diagram))
}

/// Nonnegative diagrams of minimal vertex count over the orbit window of
/// `t`, one per isomorphism class of the underlying graph `(V, B)`, in
/// orbit order.
///
/// Twisted round trips such as `F+@a` then `F-@b` reach copies of the same
/// graph with larger dimension vectors, so each class is represented by its
/// member of least total dimension (earliest in orbit order on ties).
pub fn gamma_plus_scan(t: &AdaParameter, r_max: usize) -> Result<Vec<(AdaParameter, Diagram)>> {
    let orbit = enumerate(t, r_max, TwistPolicy::EigenvaluesOfC0)?;
    let candidates: Vec<(AdaParameter, Diagram)> = orbit
        .nodes
        .into_iter()
        .map(|node| {
            let d = full_diagram(&node);
            (node, d)
        })
        .filter(|(_, d)| d.is_nonnegative())
        .collect();
    let Some(min) = candidates.iter().map(|(_, d)| d.num_vertices()).min() else {
        return Ok(Vec::new());
    };
    let total = |d: &Diagram| d.dims.iter().sum::<i64>();
    let mut classes: Vec<(AdaParameter, Diagram)> = Vec::new();
    for (node, d) in candidates {
        if d.num_vertices() != min {
            continue;
        }
        match classes.iter_mut().find(|(_, c)| are_isomorphic_graphs(c, &d)) {
            Some(rep) if total(&d) < total(&rep.1) => *rep = (node, d),
            Some(_) => {}
            None => classes.push((node, d)),
        }
    }
    Ok(classes)
}

/// Vertex invariant used to prune the isomorphism search.
type Signature = (i64, i64, Vec<(i64, i64)>);

fn signature(g: &Diagram, i: usize, with_dims: bool) -> Signature {
    let dim = |j: usize| if with_dims { g.dims[j] } else { 0 };
    let mut row: Vec<(i64, i64)> = (0..g.num_vertices())
        .filter(|&j| j != i && g.b[i][j] != 0)
        .map(|j| (g.b[i][j], dim(j)))
        .collect();
    row.sort_unstable();
    (dim(i), g.b[i][i], row)
}

/// A vertex bijection preserving `B` and the dimension vector exists.
/// Labels are ignored.
pub fn are_isomorphic(g1: &Diagram, g2: &Diagram) -> bool {
    isomorphic(g1, g2, true)
}

/// A vertex bijection preserving `B` exists; dimension vectors are ignored.
pub fn are_isomorphic_graphs(g1: &Diagram, g2: &Diagram) -> bool {
    isomorphic(g1, g2, false)
}

fn isomorphic(g1: &Diagram, g2: &Diagram, with_dims: bool) -> bool {
    let n = g1.num_vertices();
    if n != g2.num_vertices() {
        return false;
    }
    let sig1: Vec<_> = (0..n).map(|i| signature(g1, i, with_dims)).collect();
    let sig2: Vec<_> = (0..n).map(|i| signature(g2, i, with_dims)).collect();
    let mut count: BTreeMap<_, i64> = BTreeMap::new();
    for s in &sig1 {
        *count.entry(s.clone()).or_insert(0) += 1;
    }
    for s in &sig2 {
        *count.entry(s.clone()).or_insert(0) -= 1;
    }
    if count.values().any(|&c| c != 0) {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(g1, g2, &sig1, &sig2, 0, &mut image, &mut used)
}

fn extend_map(
    g1: &Diagram,
    g2: &Diagram,
    sig1: &[Signature],
    sig2: &[Signature],
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == image.len() {
        return true;
    }
    for cand in 0..image.len() {
        if used[cand] || sig1[i] != sig2[cand] {
            continue;
        }
        if (0..i).any(|k| g1.b[i][k] != g2.b[cand][image[k]]) {
            continue;
        }
        image[i] = cand;
        used[cand] = true;
        if extend_map(g1, g2, sig1, sig2, i + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    image[i] = usize::MAX;
    false
}
