//! Elementary operations on AD-A parameters.
//!
//! `F` is the Fourier transform, `F+ = F∘M` and `F- = M∘F` where `M` swaps
//! 0 and infinity, `T@a` is the Kummer twist multiplying every eigenvalue by
//! `a`. The twisted variants `F@a`, `F+@a`, `F-@a` are the conjugates
//! `T@a ∘ O ∘ T@a^-1`. Each step removes the first column of the diagram at
//! `a` on one side and adds a column of height `ms - h` on the other.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::classes::{ConjugacyClass, Eigenvalue};
use crate::error::{Error, Result};
use crate::params::{AdaParameter, Slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpKind {
    Fourier,
    FourierPlus,
    FourierMinus,
    Twist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operation {
    pub kind: OpKind,
    pub alpha: Eigenvalue,
}

impl Operation {
    pub const F: Operation = Operation {
        kind: OpKind::Fourier,
        alpha: Eigenvalue::ONE,
    };
    pub const F_PLUS: Operation = Operation {
        kind: OpKind::FourierPlus,
        alpha: Eigenvalue::ONE,
    };
    pub const F_MINUS: Operation = Operation {
        kind: OpKind::FourierMinus,
        alpha: Eigenvalue::ONE,
    };

    pub fn new(kind: OpKind, alpha: Eigenvalue) -> Self {
        Operation { kind, alpha }
    }

    pub fn twist(alpha: Eigenvalue) -> Self {
        Operation::new(OpKind::Twist, alpha)
    }

    pub fn is_allowed(&self, t: &AdaParameter) -> bool {
        match self.kind {
            OpKind::Fourier => t.slope.greater_than_one(),
            OpKind::FourierPlus | OpKind::Twist => true,
            OpKind::FourierMinus => t.slope.less_than_one(),
        }
    }

    pub fn apply(&self, t: &AdaParameter) -> Result<AdaParameter> {
        if !self.is_allowed(t) {
            return Err(Error::NotAllowed {
                op: self.to_string(),
                step: 0,
                slope: t.slope.to_string(),
            });
        }
        let alpha = self.alpha;
        let (s, r) = (t.slope.s(), t.slope.r());
        let ms = t.m * s;
        let (slope, c0, cinf) = match self.kind {
            OpKind::Fourier => {
                let h = t.c0.part(&alpha).first_column_height();
                (
                    Slope::new(s, s - r)?,
                    extend_by_complement(&t.cinf, ms, h, alpha)?,
                    t.c0.truncate_at(alpha),
                )
            }
            OpKind::FourierPlus => {
                let h = t.cinf.part(&alpha).first_column_height();
                (
                    Slope::new(s, s + r)?,
                    extend_by_complement(&t.c0, ms, h, alpha)?,
                    t.cinf.truncate_at(alpha),
                )
            }
            OpKind::FourierMinus => {
                let h = t.c0.part(&alpha).first_column_height();
                (
                    Slope::new(s, r - s)?,
                    t.c0.truncate_at(alpha),
                    extend_by_complement(&t.cinf, ms, h, alpha)?,
                )
            }
            OpKind::Twist => (t.slope, t.c0.scale(alpha), t.cinf.scale(alpha)),
        };
        AdaParameter::new(t.m, slope, c0, cinf)
    }
}

/// `extend_at(class, ms - h, alpha)`, failing when `h > ms`.
fn extend_by_complement(
    class: &ConjugacyClass,
    ms: usize,
    h: usize,
    alpha: Eigenvalue,
) -> Result<ConjugacyClass> {
    let height = ms.checked_sub(h).ok_or_else(|| {
        Error::MalformedDiagram(format!(
            "column of height {h} at {alpha} exceeds ms = {ms}"
        ))
    })?;
    class.extend_at(height, alpha)
}

/// Applies `ops` left to right.
pub fn apply_seq(ops: &[Operation], t: &AdaParameter) -> Result<AdaParameter> {
    ops.iter().enumerate().try_fold(t.clone(), |acc, (step, op)| {
        op.apply(&acc).map_err(|e| match e {
            Error::NotAllowed { op, slope, .. } => Error::NotAllowed { op, step, slope },
            other => other,
        })
    })
}

/// Parses a comma-separated list such as `"F-,F-,F,F+@e(1/3)"`.
pub fn parse_sequence(s: &str) -> Result<Vec<Operation>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

pub fn format_sequence(ops: &[Operation]) -> String {
    ops.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OpKind::Fourier => "F",
            OpKind::FourierPlus => "F+",
            OpKind::FourierMinus => "F-",
            OpKind::Twist => return write!(f, "T@{}", self.alpha),
        };
        if self.alpha.is_one() {
            f.write_str(name)
        } else {
            write!(f, "{name}@{}", self.alpha)
        }
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, alpha) = match s.split_once('@') {
            Some((n, a)) => (n.trim(), a.parse()?),
            None => (s, Eigenvalue::ONE),
        };
        let kind = match name {
            "F" => OpKind::Fourier,
            "F+" => OpKind::FourierPlus,
            "F-" => OpKind::FourierMinus,
            "T" if s.contains('@') => OpKind::Twist,
            "T" => return Err(Error::Parse("twist needs an eigenvalue: T@<eig>".into())),
            _ => return Err(Error::Parse(format!("unknown operation '{s}'"))),
        };
        Ok(Operation { kind, alpha })
    }
}

impl Serialize for Operation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::YoungDiagram;

    fn yd(c: &[usize]) -> YoungDiagram {
        YoungDiagram::new(c.to_vec()).unwrap()
    }

    fn type_one(m: usize, s: usize, r: usize, c: &[usize]) -> AdaParameter {
        AdaParameter::type_one(m, s, r, yd(c)).unwrap()
    }

    fn pi() -> AdaParameter {
        type_one(1, 5, 2, &[2])
    }

    #[test]
    fn allowed_examples() {
        assert!(Operation::F.is_allowed(&pi()));
        assert!(!Operation::F_MINUS.is_allowed(&pi()));
        assert!(!Operation::F.is_allowed(&type_one(1, 1, 1, &[1])));
        assert!(Operation::F_PLUS.is_allowed(&type_one(1, 1, 1, &[1])));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Operation::F.apply(&pi()).unwrap(), type_one(1, 5, 3, &[3]));
        assert_eq!(
            Operation::F_PLUS.apply(&pi()).unwrap(),
            type_one(1, 5, 7, &[5, 2])
        );
        assert_eq!(
            Operation::F_MINUS.apply(&type_one(1, 5, 7, &[5, 2])).unwrap(),
            pi()
        );
        let minus_one: Eigenvalue = "-1".parse().unwrap();
        let t = AdaParameter::new(
            1,
            Slope::new(2, 1).unwrap(),
            ConjugacyClass::unipotent(yd(&[1, 1])),
            ConjugacyClass::from_parts([(minus_one, yd(&[1]))]).unwrap(),
        )
        .unwrap();
        let twisted = Operation::twist(minus_one).apply(&t).unwrap();
        assert_eq!(twisted.c0, ConjugacyClass::from_parts([(minus_one, yd(&[1, 1]))]).unwrap());
        assert_eq!(twisted.cinf, ConjugacyClass::unipotent(yd(&[1])));
    }

    #[test]
    fn not_allowed_reports_step() {
        let err = apply_seq(&[Operation::F_PLUS, Operation::F], &pi()).unwrap_err();
        assert_eq!(
            err,
            Error::NotAllowed {
                op: "F".into(),
                step: 1,
                slope: "5/7".into()
            }
        );
    }

    #[test]
    fn sequence_examples() {
        let seq = [Operation::F_PLUS, Operation::F_MINUS];
        assert_eq!(apply_seq(&seq, &pi()).unwrap(), pi());
        assert_eq!(apply_seq(&[Operation::F, Operation::F], &pi()).unwrap(), pi());
        assert_eq!(
            apply_seq(&[Operation::F_PLUS, Operation::F_PLUS], &pi()).unwrap(),
            type_one(1, 5, 12, &[5, 5, 2])
        );
    }

    #[test]
    fn oversized_column_is_rejected() {
        // h1 = 3 exceeds ms = 2
        let t = type_one(1, 2, 3, &[3]);
        assert!(matches!(
            Operation::F_MINUS.apply(&t),
            Err(Error::MalformedDiagram(_))
        ));
    }

    #[test]
    fn parse_and_print() {
        let ops = parse_sequence("F, F+,F-,T@-1,F@e(1/3),F+@i,F-@2/3*e(1/5)").unwrap();
        assert_eq!(ops.len(), 7);
        assert_eq!(ops[3], Operation::twist("-1".parse().unwrap()));
        assert_eq!(
            format_sequence(&ops),
            "F,F+,F-,T@-1,F@e(1/3),F+@e(1/4),F-@2/3*e(1/5)"
        );
        assert_eq!(parse_sequence(&format_sequence(&ops)).unwrap(), ops);
        assert!("T".parse::<Operation>().is_err());
        assert!("G".parse::<Operation>().is_err());
        assert_eq!(parse_sequence("").unwrap(), vec![]);
    }
}
