//! Bounded orbits under the elementary operations.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::Eigenvalue;
use crate::error::{Error, Result};
use crate::ops::{OpKind, Operation};
use crate::params::{AdaParameter, Slope};

/// Hard cap on the number of nodes visited by [`enumerate`].
pub const MAX_ORBIT_NODES: usize = 200_000;

/// Slopes `s/(ls ± ρ)` with positive denominator at most `r_max`.
pub fn slope_set(slope: Slope, r_max: usize) -> Result<BTreeSet<Slope>> {
    let (_, rho) = slope.euclid()?;
    let s = slope.s();
    let mut out = BTreeSet::new();
    let mut base = 0;
    while base <= r_max + rho {
        if base + rho <= r_max {
            out.insert(Slope::new(s, base + rho)?);
        }
        if base > rho && base - rho <= r_max {
            out.insert(Slope::new(s, base - rho)?);
        }
        base += s;
    }
    Ok(out)
}

/// Slopes `1/l` for `1 <= l <= r_max`.
pub fn s1_slope_set(r_max: usize) -> BTreeSet<Slope> {
    (1..=r_max)
        .map(|l| Slope::new(1, l).expect("1/l is coprime"))
        .collect()
}

/// [`slope_set`] or [`s1_slope_set`] depending on the numerator.
pub fn orbit_slopes(slope: Slope, r_max: usize) -> BTreeSet<Slope> {
    match slope_set(slope, r_max) {
        Ok(set) => set,
        Err(_) => s1_slope_set(r_max),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistPolicy {
    /// Untwisted `F`, `F+`, `F-` only.
    None,
    /// Operations twisted by 1 or by any eigenvalue `a` of the current `C0`,
    /// plus the twists `T@a^-1` that move `a` to 1.
    EigenvaluesOfC0,
}

impl FromStr for TwistPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(TwistPolicy::None),
            "c0" | "eigenvalues-of-c0" => Ok(TwistPolicy::EigenvaluesOfC0),
            other => Err(Error::Parse(format!(
                "unknown twist policy '{other}' (expected none or c0)"
            ))),
        }
    }
}

impl fmt::Display for TwistPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistPolicy::None => "none",
            TwistPolicy::EigenvaluesOfC0 => "c0",
        })
    }
}

impl TwistPolicy {
    /// Candidate operations at `t`, in a fixed order.
    pub fn candidates(&self, t: &AdaParameter) -> Vec<Operation> {
        let type_one = |alpha| {
            [OpKind::Fourier, OpKind::FourierPlus, OpKind::FourierMinus]
                .map(|kind| Operation::new(kind, alpha))
        };
        match self {
            TwistPolicy::None => type_one(Eigenvalue::ONE).to_vec(),
            TwistPolicy::EigenvaluesOfC0 => {
                let mut alphas: BTreeSet<Eigenvalue> = t.c0.eigenvalues().copied().collect();
                alphas.insert(Eigenvalue::ONE);
                let mut ops: Vec<Operation> =
                    alphas.iter().flat_map(|&a| type_one(a)).collect();
                ops.extend(
                    alphas
                        .iter()
                        .filter(|a| !a.is_one())
                        .map(|a| Operation::twist(a.inverse())),
                );
                ops
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub op: Operation,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitGraph {
    pub r_max: usize,
    /// Rank window; `None` when the denominator bound already makes the
    /// orbit finite.
    pub max_rank: Option<usize>,
    pub policy: TwistPolicy,
    /// Breadth-first order; index 0 is the start parameter.
    pub nodes: Vec<AdaParameter>,
    pub edges: Vec<OrbitEdge>,
}

/// Breadth-first closure of `start` under allowed operations whose target
/// has wild-slope denominator at most `r_max`. Operations whose result is
/// not a valid parameter are skipped.
///
/// Twisted operations can grow the rank at a fixed slope (`F+@a` followed
/// by `F-@b`), so with [`TwistPolicy::EigenvaluesOfC0`] the window is also
/// cut at rank `rank(start) + m * r_max`.
pub fn enumerate(start: &AdaParameter, r_max: usize, policy: TwistPolicy) -> Result<OrbitGraph> {
    let max_rank = match policy {
        TwistPolicy::None => None,
        TwistPolicy::EigenvaluesOfC0 => Some(start.rank() + start.m * r_max),
    };
    enumerate_within(start, r_max, max_rank, policy)
}

/// [`enumerate`] with an explicit rank window.
pub fn enumerate_within(
    start: &AdaParameter,
    r_max: usize,
    max_rank: Option<usize>,
    policy: TwistPolicy,
) -> Result<OrbitGraph> {
    start.validate()?;
    let mut index: HashMap<AdaParameter, usize> = HashMap::new();
    let mut nodes = vec![start.clone()];
    let mut edges = Vec::new();
    index.insert(start.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let t = nodes[i].clone();
        for op in policy.candidates(&t) {
            if !op.is_allowed(&t) {
                continue;
            }
            let Ok(image) = op.apply(&t) else {
                continue;
            };
            if image.slope.r() > r_max || max_rank.is_some_and(|n| image.rank() > n) {
                continue;
            }
            let j = match index.get(&image) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= MAX_ORBIT_NODES {
                        return Err(Error::OrbitTooLarge(MAX_ORBIT_NODES));
                    }
                    let j = nodes.len();
                    index.insert(image.clone(), j);
                    nodes.push(image);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(OrbitEdge { from: i, op, to: j });
        }
    }
    Ok(OrbitGraph {
        r_max,
        max_rank,
        policy,
        nodes,
        edges,
    })
}

/// Which of the admissible per-slope patterns an orbit realises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitStructure {
    OnePerSlope,
    TwoPerSlope,
}

impl OrbitGraph {
    pub fn start(&self) -> &AdaParameter {
        &self.nodes[0]
    }

    pub fn slopes(&self) -> BTreeSet<Slope> {
        self.nodes.iter().map(|t| t.slope).collect()
    }

    pub fn count_per_slope(&self) -> BTreeMap<Slope, usize> {
        let mut counts = BTreeMap::new();
        for t in &self.nodes {
            *counts.entry(t.slope).or_insert(0) += 1;
        }
        counts
    }

    /// `s > 2` and `s = 1`: one node per slope. `s = 2`: the same count,
    /// 1 or 2, at every slope.
    pub fn check_structure(&self) -> Result<OrbitStructure> {
        let counts = self.count_per_slope();
        let s = self.start().slope.s();
        let violation = |slope: &Slope, detail: String| Error::StructureViolation {
            slope: slope.to_string(),
            detail,
        };
        if s == 2 {
            let first = *counts.values().next().unwrap_or(&1);
            if let Some((slope, &c)) = counts.iter().find(|(_, &c)| c != first || c > 2) {
                return Err(violation(
                    slope,
                    format!("{c} nodes, expected the uniform count {first} in {{1, 2}}"),
                ));
            }
            return Ok(if first == 2 {
                OrbitStructure::TwoPerSlope
            } else {
                OrbitStructure::OnePerSlope
            });
        }
        if let Some((slope, &c)) = counts.iter().find(|(_, &c)| c != 1) {
            return Err(violation(slope, format!("{c} nodes, expected 1")));
        }
        Ok(OrbitStructure::OnePerSlope)
    }

    /// Node slopes equal the predicted slope set, up to the start slope
    /// which may lie above the window.
    pub fn check_slope_set(&self) -> Result<()> {
        let start = self.start().slope;
        let mut predicted = orbit_slopes(start, self.r_max);
        predicted.insert(start);
        let found = self.slopes();
        if let Some(missing) = predicted.difference(&found).next() {
            return Err(Error::StructureViolation {
                slope: missing.to_string(),
                detail: "predicted slope not reached".into(),
            });
        }
        if let Some(extra) = found.difference(&predicted).next() {
            return Err(Error::StructureViolation {
                slope: extra.to_string(),
                detail: "slope outside the predicted set".into(),
            });
        }
        Ok(())
    }

    /// Every `F+` edge has a reverse `F-` edge with the same twist and vice
    /// versa; every `F` edge has a reverse `F` edge. Edges leaving a start
    /// node above the window have their reverse cut off and are skipped.
    pub fn check_edge_pairing(&self) -> Result<()> {
        let present: BTreeSet<(usize, Operation, usize)> =
            self.edges.iter().map(|e| (e.from, e.op, e.to)).collect();
        for e in &self.edges {
            if self.nodes[e.from].slope.r() > self.r_max {
                continue;
            }
            let reverse_kind = match e.op.kind {
                OpKind::Fourier => OpKind::Fourier,
                OpKind::FourierPlus => OpKind::FourierMinus,
                OpKind::FourierMinus => OpKind::FourierPlus,
                OpKind::Twist => continue,
            };
            let reverse = Operation::new(reverse_kind, e.op.alpha);
            if !present.contains(&(e.to, reverse, e.from)) {
                return Err(Error::StructureViolation {
                    slope: self.nodes[e.from].slope.to_string(),
                    detail: format!("edge {} -{}-> {} has no reverse {reverse}", e.from, e.op, e.to),
                });
            }
        }
        Ok(())
    }

    /// Graphviz rendering, one node per parameter.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n  node [shape=box];\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\\nC0 {}\\nCinf {}\"];",
                t.slope, t.c0, t.cinf
            );
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.op);
        }
        out.push_str("}\n");
        out
    }
}
