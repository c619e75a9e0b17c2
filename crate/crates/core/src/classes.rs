//! Conjugacy classes as maps from exact eigenvalues to Young diagrams.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::young::YoungDiagram;

/// The nonzero complex number `modulus * exp(2*pi*i*phase)` with rational
/// modulus and phase. The phase is kept reduced into `[0, 1)`.
///
/// Ordering is by phase first, then modulus; this is the tie-break order of
/// canonical markings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Eigenvalue {
    phase: Rational64,
    modulus: Rational64,
}

fn reduce_phase(phase: Rational64) -> Rational64 {
    let frac = phase - phase.floor();
    if frac < Rational64::zero() {
        frac + Rational64::one()
    } else {
        frac
    }
}

impl Eigenvalue {
    pub const ONE: Eigenvalue = Eigenvalue {
        phase: Rational64::ZERO,
        modulus: Rational64::ONE,
    };

    pub fn new(modulus: Rational64, phase: Rational64) -> Result<Self> {
        if !modulus.is_positive() {
            return Err(Error::Parse(format!("modulus {modulus} must be positive")));
        }
        Ok(Eigenvalue {
            phase: reduce_phase(phase),
            modulus,
        })
    }

    /// `exp(2*pi*i*num/den)`.
    pub fn root_of_unity(num: i64, den: i64) -> Self {
        Eigenvalue {
            phase: reduce_phase(Rational64::new(num, den)),
            modulus: Rational64::one(),
        }
    }

    pub fn modulus(&self) -> Rational64 {
        self.modulus
    }

    pub fn phase(&self) -> Rational64 {
        self.phase
    }

    pub fn is_one(&self) -> bool {
        *self == Eigenvalue::ONE
    }

    pub fn inverse(&self) -> Self {
        Eigenvalue {
            phase: reduce_phase(-self.phase),
            modulus: self.modulus.recip(),
        }
    }
}

impl Default for Eigenvalue {
    fn default() -> Self {
        Eigenvalue::ONE
    }
}

impl std::ops::Mul for Eigenvalue {
    type Output = Eigenvalue;

    fn mul(self, rhs: Eigenvalue) -> Eigenvalue {
        Eigenvalue {
            phase: reduce_phase(self.phase + rhs.phase),
            modulus: self.modulus * rhs.modulus,
        }
    }
}

fn fmt_ratio(r: Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = Rational64::new(1, 2);
        if self.phase.is_zero() {
            write!(f, "{}", fmt_ratio(self.modulus))
        } else if self.phase == half {
            write!(f, "-{}", fmt_ratio(self.modulus))
        } else if self.modulus.is_one() {
            write!(f, "e({})", fmt_ratio(self.phase))
        } else {
            write!(f, "{}*e({})", fmt_ratio(self.modulus), fmt_ratio(self.phase))
        }
    }
}

fn parse_ratio(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
    }
}

/// Accepts `1`, `-1`, `i`, `-i`, `2/3`, `e(a/b)`, `p/q*e(a/b)`.
impl FromStr for Eigenvalue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "i" => return Ok(Eigenvalue::root_of_unity(1, 4)),
            "-i" => return Ok(Eigenvalue::root_of_unity(3, 4)),
            _ => {}
        }
        let (scalar, phase) = match t.find("e(") {
            Some(pos) => {
                let inner = t[pos + 2..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unterminated e(...) in '{s}'")))?;
                let prefix = t[..pos].trim();
                let scalar = match prefix.strip_suffix('*') {
                    Some(p) => parse_ratio(p)?,
                    None if prefix.is_empty() => Rational64::one(),
                    None if prefix == "-" => -Rational64::one(),
                    None => return Err(Error::Parse(format!("bad eigenvalue '{s}'"))),
                };
                (scalar, parse_ratio(inner)?)
            }
            None => (parse_ratio(t)?, Rational64::zero()),
        };
        if scalar.is_zero() {
            return Err(Error::Parse(format!("eigenvalue '{s}' is zero")));
        }
        let phase = if scalar.is_negative() {
            phase + Rational64::new(1, 2)
        } else {
            phase
        };
        Eigenvalue::new(scalar.abs(), phase)
    }
}

#[derive(Serialize, Deserialize)]
struct EigenvalueRepr {
    #[serde(rename = "mod")]
    modulus: [i64; 2],
    phase: [i64; 2],
}

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EigenvalueRepr {
            modulus: [*self.modulus.numer(), *self.modulus.denom()],
            phase: [*self.phase.numer(), *self.phase.denom()],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Eigenvalue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Exact(EigenvalueRepr),
            Shorthand(String),
        }
        let parsed = match Repr::deserialize(deserializer)? {
            Repr::Exact(e) => {
                if e.modulus[1] == 0 || e.phase[1] == 0 {
                    Err(Error::Parse("zero denominator in eigenvalue".into()))
                } else {
                    Eigenvalue::new(
                        Rational64::new(e.modulus[0], e.modulus[1]),
                        Rational64::new(e.phase[0], e.phase[1]),
                    )
                }
            }
            Repr::Shorthand(s) => s.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

/// A conjugacy class in `GL_n`, recorded by its Jordan data: one Young
/// diagram per eigenvalue. Parts never hold an empty diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjugacyClass {
    parts: BTreeMap<Eigenvalue, YoungDiagram>,
}

impl ConjugacyClass {
    /// The rank-0 class.
    pub fn trivial() -> Self {
        ConjugacyClass::default()
    }

    pub fn unipotent(y: YoungDiagram) -> Self {
        ConjugacyClass::from_parts([(Eigenvalue::ONE, y)])
            .expect("a single part cannot repeat an eigenvalue")
    }

    /// Builds a class; empty diagrams are skipped, repeated eigenvalues are
    /// rejected.
    pub fn from_parts<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Eigenvalue, YoungDiagram)>,
    {
        let mut map = BTreeMap::new();
        for (eig, y) in parts {
            if y.is_empty() {
                continue;
            }
            if map.insert(eig, y).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "eigenvalue {eig} listed twice"
                )));
            }
        }
        Ok(ConjugacyClass { parts: map })
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Eigenvalue, &YoungDiagram)> {
        self.parts.iter()
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = &Eigenvalue> {
        self.parts.keys()
    }

    /// Diagram at `eig`; the empty diagram when `eig` is not an eigenvalue.
    pub fn part(&self, eig: &Eigenvalue) -> YoungDiagram {
        self.parts.get(eig).cloned().unwrap_or_default()
    }

    pub fn num_eigenvalues(&self) -> usize {
        self.parts.len()
    }

    pub fn rank(&self) -> usize {
        self.parts.values().map(YoungDiagram::rank).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// Single eigenvalue equal to 1.
    pub fn is_unipotent(&self) -> bool {
        self.parts.len() == 1 && self.parts.contains_key(&Eigenvalue::ONE)
    }

    /// Diagonalizable with pairwise distinct eigenvalues.
    pub fn is_regular_semisimple(&self) -> bool {
        self.parts.values().all(|y| y.columns() == [1])
    }

    /// Multiplies every eigenvalue by `alpha`.
    pub fn scale(&self, alpha: Eigenvalue) -> Self {
        ConjugacyClass {
            parts: self
                .parts
                .iter()
                .map(|(eig, y)| (*eig * alpha, y.clone()))
                .collect(),
        }
    }

    /// Removes the first column of the diagram at `alpha`.
    pub fn truncate_at(&self, alpha: Eigenvalue) -> Self {
        let mut parts = self.parts.clone();
        if let Some(y) = parts.get(&alpha) {
            let t = y.truncate();
            if t.is_empty() {
                parts.remove(&alpha);
            } else {
                parts.insert(alpha, t);
            }
        }
        ConjugacyClass { parts }
    }

    /// Prepends a column of height `h` to the diagram at `alpha`.
    pub fn extend_at(&self, h: usize, alpha: Eigenvalue) -> Result<Self> {
        let extended = self.part(&alpha).prepend_column(h)?;
        let mut parts = self.parts.clone();
        if !extended.is_empty() {
            parts.insert(alpha, extended);
        }
        Ok(ConjugacyClass { parts })
    }

    /// Canonical minimal marking: repeatedly take the eigenvalue whose
    /// remaining diagram has the tallest first column, ties broken by
    /// (phase, modulus) ascending.
    pub fn minimal_marking(&self) -> Result<Marking> {
        if self.is_trivial() {
            return Err(Error::EmptyClass);
        }
        let mut current = self.clone();
        let mut marking = Vec::new();
        while let Some(eig) = current
            .parts
            .iter()
            // max_by_key keeps the last maximum; iterate in reverse so the
            // smallest eigenvalue wins ties
            .rev()
            .max_by_key(|(_, y)| y.first_column_height())
            .map(|(e, _)| *e)
        {
            marking.push(eig);
            current = current.truncate_at(eig);
        }
        Ok(Marking(marking))
    }

    /// Dimension vector of the type-A leg attached to `(self, marking)`:
    /// `d1 = rank` and each subsequent entry is the rank of the running
    /// product `(A - xi_1)...(A - xi_i)`. Trailing zero entries are dropped.
    pub fn leg(&self, marking: &Marking) -> Result<Leg> {
        for (eig, y) in &self.parts {
            let occurrences = marking.0.iter().filter(|x| *x == eig).count();
            if occurrences < y.num_columns() {
                return Err(Error::NotAMarking {
                    eigenvalue: eig.to_string(),
                    occurrences,
                    columns: y.num_columns(),
                });
            }
        }
        let mut dims = Vec::with_capacity(marking.len());
        let mut current = self.clone();
        let mut d = self.rank();
        if d == 0 {
            return Ok(Leg { dims });
        }
        dims.push(d);
        for eig in marking.0.iter().take(marking.len().saturating_sub(1)) {
            d -= current.part(eig).first_column_height();
            current = current.truncate_at(*eig);
            dims.push(d);
        }
        while dims.last() == Some(&0) {
            dims.pop();
        }
        Ok(Leg { dims })
    }

    /// Leg for the canonical minimal marking (empty for the trivial class).
    pub fn canonical_leg(&self) -> Leg {
        match self.minimal_marking() {
            Ok(marking) => self.leg(&marking).expect("minimal marking is a marking"),
            Err(_) => Leg { dims: Vec::new() },
        }
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (eig, y)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{eig}:{y}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct PartRepr {
    eig: Eigenvalue,
    cols: YoungDiagram,
}

impl Serialize for ConjugacyClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<PartRepr> = self
            .parts
            .iter()
            .map(|(eig, y)| PartRepr {
                eig: *eig,
                cols: y.clone(),
            })
            .collect();
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConjugacyClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<PartRepr>::deserialize(deserializer)?;
        if parts.iter().any(|p| p.cols.is_empty()) {
            return Err(serde::de::Error::custom(
                "conjugacy class part with an empty diagram",
            ));
        }
        ConjugacyClass::from_parts(parts.into_iter().map(|p| (p.eig, p.cols)))
            .map_err(serde::de::Error::custom)
    }
}

/// Ordered eigenvalues `xi_1, ..., xi_w` with `(A - xi_1)...(A - xi_w) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking(pub Vec<Eigenvalue>);

impl Marking {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Eigenvalue] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Leg {
    pub dims: Vec<usize>,
}

impl Leg {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}
