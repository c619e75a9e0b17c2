//! AD-A parameters `(m, s/r, C0, Cinf)`: one regular singularity at 0 and
//! `m` wild circles of slope `s/r` at infinity, plus the tame class there.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::classes::{ConjugacyClass, Eigenvalue};
use crate::error::{Error, Result};
use crate::young::YoungDiagram;

/// A slope `s/r` in lowest terms with `s, r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SlopeRepr")]
pub struct Slope {
    s: usize,
    r: usize,
}

#[derive(Deserialize)]
struct SlopeRepr {
    s: usize,
    r: usize,
}

impl TryFrom<SlopeRepr> for Slope {
    type Error = Error;

    fn try_from(value: SlopeRepr) -> Result<Self> {
        Slope::new(value.s, value.r)
    }
}

impl Slope {
    pub fn new(s: usize, r: usize) -> Result<Self> {
        if s == 0 || r == 0 {
            return Err(Error::InvalidParameter(format!(
                "slope {s}/{r} needs positive numerator and denominator"
            )));
        }
        if s.gcd(&r) != 1 {
            return Err(Error::NotCoprime {
                s: s as u64,
                r: r as u64,
            });
        }
        Ok(Slope { s, r })
    }

    /// Irregularity.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Ramification order.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn greater_than_one(&self) -> bool {
        self.s > self.r
    }

    pub fn less_than_one(&self) -> bool {
        self.s < self.r
    }

    /// `r = kappa*s + rho` with `1 <= rho <= s-1`.
    pub fn euclid(&self) -> Result<(usize, usize)> {
        if self.s == 1 {
            return Err(Error::SlopeOne);
        }
        Ok(self.r.div_rem(&self.s))
    }

    pub fn as_ratio(&self) -> Rational64 {
        Rational64::new(self.s as i64, self.r as i64)
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.s * other.r).cmp(&(other.s * self.r))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.s, self.r)
    }
}

/// `(m, k, C0, Cinf)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdaParameter {
    pub m: usize,
    pub slope: Slope,
    pub c0: ConjugacyClass,
    pub cinf: ConjugacyClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Generalized,
    GeneralizedTypeI,
    Standard,
    StandardTypeI,
}

impl Classification {
    pub fn is_standard(self) -> bool {
        matches!(self, Classification::Standard | Classification::StandardTypeI)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Generalized => "generalized",
            Classification::GeneralizedTypeI => "generalized-type-I",
            Classification::Standard => "standard",
            Classification::StandardTypeI => "standard-type-I",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl AdaParameter {
    pub fn new(m: usize, slope: Slope, c0: ConjugacyClass, cinf: ConjugacyClass) -> Result<Self> {
        let t = AdaParameter { m, slope, c0, cinf };
        t.validate()?;
        Ok(t)
    }

    /// `(m, s/r, {1: y}, {})`.
    pub fn type_one(m: usize, s: usize, r: usize, y: YoungDiagram) -> Result<Self> {
        AdaParameter::new(
            m,
            Slope::new(s, r)?,
            ConjugacyClass::unipotent(y),
            ConjugacyClass::trivial(),
        )
    }

    /// Total rank `N = rk(C0)`.
    pub fn rank(&self) -> usize {
        self.c0.rank()
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        Slope::new(self.slope.s, self.slope.r)?;
        let rank0 = self.c0.rank();
        let expected = self.m * self.slope.r + self.cinf.rank();
        if rank0 != expected {
            return Err(Error::RankMismatch { rank0, expected });
        }
        Ok(())
    }

    pub fn classify(&self) -> Classification {
        if !self.c0.is_unipotent() {
            return Classification::Generalized;
        }
        if self.cinf.is_trivial() {
            return Classification::StandardTypeI;
        }
        let one = Eigenvalue::ONE;
        if self.cinf.is_regular_semisimple() && self.cinf.eigenvalues().all(|e| *e != one) {
            return Classification::Standard;
        }
        if self.cinf.is_unipotent() {
            return Classification::GeneralizedTypeI;
        }
        Classification::Generalized
    }

    /// Young diagram of the unipotent class at 0, for standard parameters.
    pub fn reduced(&self) -> Result<ReducedParameter> {
        if !self.classify().is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(ReducedParameter {
            m: self.m,
            slope: self.slope,
            y: self.c0.part(&Eigenvalue::ONE),
        })
    }

    pub fn to_physics_label(&self) -> Result<PhysicsLabel> {
        let reduced = self.reduced()?;
        Ok(PhysicsLabel {
            p: self.m * self.slope.s,
            b: self.m * self.slope.r,
            n: reduced.y.rank(),
            y: reduced.y,
        })
    }

    /// Inverse of the physics dictionary. When `N > b` the class at infinity
    /// is regular semisimple with eigenvalues `e(j/(N-b+1))`, `j = 1..N-b`.
    pub fn from_physics(p: usize, b: usize, n: usize, y: YoungDiagram) -> Result<Self> {
        if p == 0 || b == 0 {
            return Err(Error::Inconsistent("p and b must be positive".into()));
        }
        if y.rank() != n {
            return Err(Error::Inconsistent(format!(
                "diagram {y} has rank {} but N = {n}",
                y.rank()
            )));
        }
        let m = p.gcd(&b);
        let slope = Slope::new(p / m, b / m)?;
        if b > n {
            return Err(Error::Inconsistent(format!("b = {b} exceeds N = {n}")));
        }
        let extra = n - b;
        let cinf = ConjugacyClass::from_parts((1..=extra).map(|j| {
            (
                Eigenvalue::root_of_unity(j as i64, extra as i64 + 1),
                YoungDiagram::column(1),
            )
        }))?;
        AdaParameter::new(m, slope, ConjugacyClass::unipotent(y), cinf)
    }
}

impl fmt::Display for AdaParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.m, self.slope, self.c0, self.cinf)
    }
}

/// `(m, k, [Y])` for standard parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedParameter {
    pub m: usize,
    pub slope: Slope,
    pub y: YoungDiagram,
}

/// The theory `D_p^b(sl_N, [Y])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PhysicsLabel {
    pub p: usize,
    pub b: usize,
    pub n: usize,
    pub y: YoungDiagram,
}

impl PhysicsLabel {
    /// Drops the superscript when `b = N`, as is customary.
    pub fn short_form(&self) -> String {
        if self.b == self.n {
            format!("D_{}(sl_{}, {})", self.p, self.n, self.y)
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for PhysicsLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}^{}(sl_{}, {})", self.p, self.b, self.n, self.y)
    }
}
