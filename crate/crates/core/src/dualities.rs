//! Closed forms for the three dualities between AD-A parameters.
//!
//! Each closed form is paired with the operation sequence it abbreviates so
//! that callers can compare the two.

use crate::classes::{ConjugacyClass, Eigenvalue};
use crate::error::{Error, Result};
use crate::ops::{OpKind, Operation};
use crate::params::{AdaParameter, Classification, Slope};
use crate::young::YoungDiagram;

fn require_type_one(t: &AdaParameter) -> Result<&YoungDiagram> {
    if t.classify() != Classification::StandardTypeI {
        return Err(Error::NotStandardTypeI);
    }
    match t.c0.parts().next() {
        Some((_, y)) => Ok(y),
        None => Err(Error::NotStandardTypeI),
    }
}

/// `(m, s/r, [Y]) -> (m, s/(r+ls), [(ms)^l, Y])`.
pub fn duality_add_columns(t: &AdaParameter, l: usize) -> Result<AdaParameter> {
    let y = require_type_one(t)?;
    let ms = t.m * t.slope.s();
    let mut out = y.clone();
    for _ in 0..l {
        out = out.prepend_column(ms)?;
    }
    AdaParameter::type_one(t.m, t.slope.s(), t.slope.r() + l * t.slope.s(), out)
}

/// `(F+)^l`.
pub fn add_columns_sequence(l: usize) -> Vec<Operation> {
    vec![Operation::F_PLUS; l]
}

struct ComplementData<'a> {
    y: &'a YoungDiagram,
    ms: usize,
    kappa: usize,
    rho: usize,
}

fn complement_data(t: &AdaParameter) -> Result<ComplementData<'_>> {
    let y = require_type_one(t).map_err(|_| {
        Error::PreconditionFailed("the parameter must be standard of type I".into())
    })?;
    let (kappa, rho) = t
        .slope
        .euclid()
        .map_err(|_| Error::PreconditionFailed("s > 1 is required".into()))?;
    let ms = t.m * t.slope.s();
    let l = y.num_columns();
    if l <= kappa {
        return Err(Error::PreconditionFailed(format!(
            "Ls > r is required, got L = {l}, s = {}, r = {}",
            t.slope.s(),
            t.slope.r()
        )));
    }
    if y.first_column_height() > ms {
        return Err(Error::PreconditionFailed(format!(
            "first column {} exceeds ms = {ms}",
            y.first_column_height()
        )));
    }
    Ok(ComplementData { y, ms, kappa, rho })
}

/// `(m, s/r, [Y]) -> (m, s/(Ls-r), [Y^c])` with `Y^c` the complement of `Y`
/// in the box of height `ms`.
pub fn duality_complement(t: &AdaParameter) -> Result<AdaParameter> {
    let ComplementData { y, ms, .. } = complement_data(t)?;
    let (s, r) = (t.slope.s(), t.slope.r());
    let den = y.num_columns() * s - r;
    AdaParameter::type_one(t.m, s, den, y.complement(ms)?)
}

/// `(F-)^κ`, then `F`, then `(F+)^(L-1-κ)`, in application order.
pub fn complement_sequence(t: &AdaParameter) -> Result<Vec<Operation>> {
    let ComplementData { y, kappa, .. } = complement_data(t)?;
    let mut ops = vec![Operation::F_MINUS; kappa];
    ops.push(Operation::F);
    ops.extend(vec![Operation::F_PLUS; y.num_columns() - 1 - kappa]);
    Ok(ops)
}

/// State after the first `l` operations of [`complement_sequence`].
///
/// With `Y_l = τ^l(Y)` and `Ỹ_l` the diagram with columns
/// `ms - h_l, ..., ms - h_1`:
/// * `l <= κ`: slope `s/((κ-l)s+ρ)`, `C0 = Y_l`, `Cinf = Ỹ_l`;
/// * `l = κ+1`: slope `s/(s-ρ)`, `C0 = Ỹ_l`, `Cinf = Y_l`;
/// * `l >= κ+2`: slope `s/(ls-r)`, `C0 = Ỹ_l`, `Cinf = Y_l`.
pub fn intermediate(t: &AdaParameter, l: usize) -> Result<AdaParameter> {
    let ComplementData { y, ms, kappa, rho } = complement_data(t)?;
    let big_l = y.num_columns();
    if l > big_l {
        return Err(Error::IndexOutOfRange {
            index: l,
            max: big_l,
        });
    }
    let (s, r) = (t.slope.s(), t.slope.r());
    let cols = y.columns();
    let y_l = YoungDiagram::new(cols[l..].to_vec())?;
    let y_tilde = YoungDiagram::new(
        cols[..l]
            .iter()
            .rev()
            .map(|&h| ms - h)
            .filter(|&h| h > 0)
            .collect(),
    )?;
    let (den, c0, cinf) = if l <= kappa {
        ((kappa - l) * s + rho, y_l, y_tilde)
    } else if l == kappa + 1 {
        (s - rho, y_tilde, y_l)
    } else {
        (l * s - r, y_tilde, y_l)
    };
    AdaParameter::new(
        t.m,
        Slope::new(s, den)?,
        ConjugacyClass::unipotent(c0),
        ConjugacyClass::unipotent(cinf),
    )
}

/// Eigenvalues `β_1 < ... < β_κ` of a standard non-type-I class at infinity.
fn duality_iii_betas(t: &AdaParameter) -> Result<Vec<Eigenvalue>> {
    match t.classify() {
        Classification::Standard => {}
        Classification::StandardTypeI => {
            return Err(Error::NotStandardNonTypeI(
                "the class at infinity is trivial".into(),
            ))
        }
        other => {
            return Err(Error::NotStandardNonTypeI(format!(
                "the parameter is {other}"
            )))
        }
    }
    Ok(t.cinf.eigenvalues().copied().collect())
}

/// `(m, s/r, {1:Y}, {β_j:[1]}) -> (m, s/(κs+r), {1:Y, β_j:[ms-1]}, {})`.
pub fn duality_iii(t: &AdaParameter) -> Result<AdaParameter> {
    let betas = duality_iii_betas(t)?;
    let kappa = betas.len();
    let ms = t.m * t.slope.s();
    let y = t.c0.part(&Eigenvalue::ONE);
    let c0 = ConjugacyClass::from_parts(
        std::iter::once((Eigenvalue::ONE, y))
            .chain(betas.iter().map(|&b| (b, YoungDiagram::column(ms - 1)))),
    )?;
    AdaParameter::new(
        t.m,
        Slope::new(t.slope.s(), kappa * t.slope.s() + t.slope.r())?,
        c0,
        ConjugacyClass::trivial(),
    )
}

/// `F+@β_1`, ..., `F+@β_κ`, in application order.
pub fn duality_iii_sequence(t: &AdaParameter) -> Result<Vec<Operation>> {
    Ok(duality_iii_betas(t)?
        .into_iter()
        .map(|b| Operation::new(OpKind::FourierPlus, b))
        .collect())
}

/// All columns of all parts of `c`, tallest first.
pub fn merged_columns(c: &ConjugacyClass) -> YoungDiagram {
    let mut cols: Vec<usize> = c.parts().flat_map(|(_, y)| y.columns().to_vec()).collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    YoungDiagram::new(cols).expect("merged columns are positive and sorted")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::apply_seq;

    fn yd(c: &[usize]) -> YoungDiagram {
        YoungDiagram::new(c.to_vec()).unwrap()
    }

    fn type_one(m: usize, s: usize, r: usize, c: &[usize]) -> AdaParameter {
        AdaParameter::type_one(m, s, r, yd(c)).unwrap()
    }

    fn standard(s: usize, r: usize, y: &[usize], betas: &[&str]) -> AdaParameter {
        AdaParameter::new(
            1,
            Slope::new(s, r).unwrap(),
            ConjugacyClass::unipotent(yd(y)),
            ConjugacyClass::from_parts(betas.iter().map(|b| (b.parse().unwrap(), yd(&[1]))))
                .unwrap(),
        )
        .unwrap()
    }

    fn five_columns() -> AdaParameter {
        type_one(1, 7, 13, &[5, 3, 2, 2, 1])
    }

    #[test]
    fn add_columns_examples() {
        let pi = type_one(1, 5, 2, &[2]);
        assert_eq!(duality_add_columns(&pi, 1).unwrap(), type_one(1, 5, 7, &[5, 2]));
        assert_eq!(duality_add_columns(&pi, 0).unwrap(), pi);
        let d3_sl7 = type_one(1, 3, 7, &[2, 1, 1, 1, 1, 1]);
        let out = duality_add_columns(&d3_sl7, 1).unwrap();
        assert_eq!(out, type_one(1, 3, 10, &[3, 2, 1, 1, 1, 1, 1]));
        assert_eq!(apply_seq(&add_columns_sequence(1), &d3_sl7).unwrap(), out);
    }

    #[test]
    fn add_columns_needs_type_one() {
        let t = standard(2, 1, &[1, 1], &["-1"]);
        assert_eq!(duality_add_columns(&t, 1), Err(Error::NotStandardTypeI));
    }

    #[test]
    fn complement_examples() {
        let pi = type_one(1, 5, 2, &[2]);
        assert_eq!(duality_complement(&pi).unwrap(), type_one(1, 5, 3, &[3]));
        assert_eq!(complement_sequence(&pi).unwrap(), vec![Operation::F]);
        let t = type_one(1, 3, 2, &[1, 1]);
        assert_eq!(duality_complement(&t).unwrap(), type_one(1, 3, 4, &[2, 2]));
        let out = duality_complement(&five_columns()).unwrap();
        assert_eq!(out, type_one(1, 7, 22, &[6, 5, 5, 4, 2]));
        assert_eq!(
            apply_seq(&complement_sequence(&five_columns()).unwrap(), &five_columns()).unwrap(),
            out
        );
    }

    #[test]
    fn five_column_example_with_r_two_breaks_the_rank_identity() {
        let err = AdaParameter::type_one(1, 7, 2, yd(&[5, 3, 2, 2, 1])).unwrap_err();
        assert_eq!(err, Error::RankMismatch { rank0: 13, expected: 2 });
    }

    #[test]
    fn complement_preconditions() {
        // L = 1, κ = 2
        let t = type_one(1, 3, 7, &[7]);
        assert!(matches!(duality_complement(&t), Err(Error::PreconditionFailed(_))));
        let s1 = type_one(1, 1, 2, &[1, 1]);
        assert!(matches!(duality_complement(&s1), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn intermediate_examples() {
        let t = five_columns();
        assert_eq!(intermediate(&t, 0).unwrap(), t);
        assert_eq!(intermediate(&t, 5).unwrap(), duality_complement(&t).unwrap());
        // κ = 1, so l = 2 sits in the middle regime
        let mid = intermediate(&t, 2).unwrap();
        assert_eq!(mid.slope, Slope::new(7, 1).unwrap());
        assert_eq!(mid.c0, ConjugacyClass::unipotent(yd(&[4, 2])));
        assert_eq!(mid.cinf, ConjugacyClass::unipotent(yd(&[2, 2, 1])));
        assert_eq!(
            intermediate(&t, 6),
            Err(Error::IndexOutOfRange { index: 6, max: 5 })
        );
        let seq = complement_sequence(&t).unwrap();
        for l in 0..=5 {
            assert_eq!(intermediate(&t, l).unwrap(), apply_seq(&seq[..l], &t).unwrap());
        }
    }

    fn with_parts(s: usize, r: usize, c0: &[(&str, &[usize])]) -> AdaParameter {
        AdaParameter::new(
            1,
            Slope::new(s, r).unwrap(),
            ConjugacyClass::from_parts(c0.iter().map(|(e, c)| (e.parse().unwrap(), yd(c))))
                .unwrap(),
            ConjugacyClass::trivial(),
        )
        .unwrap()
    }

    #[test]
    fn duality_iii_examples() {
        let t = standard(2, 1, &[1, 1], &["-1"]);
        let out = duality_iii(&t).unwrap();
        assert_eq!(out, with_parts(2, 3, &[("1", &[1, 1]), ("-1", &[1])]));
        assert_eq!(apply_seq(&duality_iii_sequence(&t).unwrap(), &t).unwrap(), out);

        let t = standard(3, 1, &[1, 1], &["i"]);
        let out = duality_iii(&t).unwrap();
        assert_eq!(out, with_parts(3, 4, &[("1", &[1, 1]), ("i", &[2])]));
        assert_eq!(apply_seq(&duality_iii_sequence(&t).unwrap(), &t).unwrap(), out);
        assert_eq!(merged_columns(&out.c0), yd(&[2, 1, 1]));

        let type_i = type_one(1, 5, 2, &[2]);
        assert!(matches!(duality_iii(&type_i), Err(Error::NotStandardNonTypeI(_))));
    }
}
