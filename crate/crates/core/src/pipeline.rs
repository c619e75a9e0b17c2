//! Formal-data route to the elementary operations.
//!
//! The Fourier transform is computed in three steps: pass to modified formal
//! data (truncate the tame class at finite distance), move every Stokes
//! circle by the stationary-phase slope rules, then rebuild the non-modified
//! data from the rank at infinity. Möbius swaps 0 and infinity. None of this
//! reuses the closed forms in [`crate::ops`], so the two routes can be
//! compared against each other.

use serde::Serialize;

use crate::classes::{ConjugacyClass, Eigenvalue};
use crate::error::{Error, Result};
use crate::ops::{OpKind, Operation};
use crate::params::{AdaParameter, Slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Zero,
    Infinity,
}

impl Location {
    fn swapped(self) -> Self {
        match self {
            Location::Zero => Location::Infinity,
            Location::Infinity => Location::Zero,
        }
    }
}

/// `count` wild circles of a common slope, all at `location`, each of
/// multiplicity one. Their rank-one scalars are not tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WildPart {
    pub count: usize,
    pub location: Location,
    pub slope: Slope,
}

impl WildPart {
    fn rank(&self) -> usize {
        self.count * self.slope.r()
    }

    fn rank_at(&self, location: Location) -> usize {
        if self.location == location {
            self.rank()
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FormalData {
    pub wild: WildPart,
    pub tame0: ConjugacyClass,
    pub tame_inf: ConjugacyClass,
}

/// Same shape as [`FormalData`] with the class at 0 replaced by its
/// truncation at the eigenvalue 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModifiedFormalData {
    pub wild: WildPart,
    pub tame0: ConjugacyClass,
    pub tame_inf: ConjugacyClass,
}

impl FormalData {
    pub fn from_parameter(t: &AdaParameter) -> Self {
        FormalData {
            wild: WildPart {
                count: t.m,
                location: Location::Infinity,
                slope: t.slope,
            },
            tame0: t.c0.clone(),
            tame_inf: t.cinf.clone(),
        }
    }

    /// Reads back an AD-A parameter; the wild part must sit at infinity.
    pub fn to_parameter(&self) -> Result<AdaParameter> {
        if self.wild.location != Location::Infinity {
            return Err(Error::Unsupported(
                "formal data with wild circles at 0 is not of AD-A shape".into(),
            ));
        }
        AdaParameter::new(
            self.wild.count,
            self.wild.slope,
            self.tame0.clone(),
            self.tame_inf.clone(),
        )
    }

    pub fn rank_at_zero(&self) -> usize {
        self.wild.rank_at(Location::Zero) + self.tame0.rank()
    }

    pub fn rank_at_infinity(&self) -> usize {
        self.wild.rank_at(Location::Infinity) + self.tame_inf.rank()
    }

    /// Both local ranks agree.
    pub fn check_ranks(&self) -> Result<usize> {
        let (zero, inf) = (self.rank_at_zero(), self.rank_at_infinity());
        if zero != inf {
            return Err(Error::RankMismatch {
                rank0: zero,
                expected: inf,
            });
        }
        Ok(inf)
    }

    pub fn scale(&self, alpha: Eigenvalue) -> Self {
        FormalData {
            wild: self.wild,
            tame0: self.tame0.scale(alpha),
            tame_inf: self.tame_inf.scale(alpha),
        }
    }
}

impl ModifiedFormalData {
    pub fn rank_at_infinity(&self) -> usize {
        self.wild.rank_at(Location::Infinity) + self.tame_inf.rank()
    }
}

pub fn modify(fd: &FormalData) -> ModifiedFormalData {
    ModifiedFormalData {
        wild: fd.wild,
        tame0: fd.tame0.truncate_at(Eigenvalue::ONE),
        tame_inf: fd.tame_inf.clone(),
    }
}

/// Rebuilds the class at 0 so that the rank there is `total_rank`.
pub fn unmodify(mfd: &ModifiedFormalData, total_rank: usize) -> Result<FormalData> {
    let present = mfd.wild.rank_at(Location::Zero) + mfd.tame0.rank();
    let h = total_rank.checked_sub(present).ok_or(Error::RankDeficit {
        total: total_rank as i64,
        required: present as i64,
    })?;
    Ok(FormalData {
        wild: mfd.wild,
        tame0: mfd.tame0.extend_at(h, Eigenvalue::ONE)?,
        tame_inf: mfd.tame_inf.clone(),
    })
}

/// Stationary-phase action on modified data.
///
/// * circle at 0 of slope `s/r` goes to infinity with slope `s/(r+s)`;
/// * circle at infinity of slope `s/r > 1` stays there with slope `s/(s-r)`;
/// * circle at infinity of slope `s/r < 1` goes to 0 with slope `s/(r-s)`;
/// * tame circles at 0 and infinity are exchanged.
///
/// The sign twist `(-1)^Irr` only touches the untracked wild scalars, so
/// classes move unchanged.
pub fn fourier_modified(mfd: &ModifiedFormalData) -> Result<ModifiedFormalData> {
    let WildPart {
        count,
        location,
        slope,
    } = mfd.wild;
    let (s, r) = (slope.s(), slope.r());
    let (location, slope) = match location {
        Location::Zero => (Location::Infinity, Slope::new(s, r + s)?),
        Location::Infinity if s > r => (Location::Infinity, Slope::new(s, s - r)?),
        Location::Infinity if s < r => (Location::Zero, Slope::new(s, r - s)?),
        Location::Infinity => return Err(Error::SlopeOneAtInfinity),
    };
    Ok(ModifiedFormalData {
        wild: WildPart {
            count,
            location,
            slope,
        },
        tame0: mfd.tame_inf.clone(),
        tame_inf: mfd.tame0.clone(),
    })
}

pub fn mobius(fd: &FormalData) -> FormalData {
    FormalData {
        wild: WildPart {
            location: fd.wild.location.swapped(),
            ..fd.wild
        },
        tame0: fd.tame_inf.clone(),
        tame_inf: fd.tame0.clone(),
    }
}

/// Full Fourier transform: modify, transport, unmodify.
pub fn fourier(fd: &FormalData) -> Result<FormalData> {
    let transformed = fourier_modified(&modify(fd))?;
    let total = transformed.rank_at_infinity();
    unmodify(&transformed, total)
}

/// Runs `op` through the formal-data route. The result must again have its
/// wild circles at infinity.
pub fn full_op(op: &Operation, fd: &FormalData) -> Result<FormalData> {
    let alpha = op.alpha;
    let untwisted = fd.scale(alpha.inverse());
    let result = match op.kind {
        OpKind::Twist => return Ok(fd.scale(alpha)),
        OpKind::Fourier => fourier(&untwisted)?,
        OpKind::FourierPlus => fourier(&mobius(&untwisted))?,
        OpKind::FourierMinus => mobius(&fourier(&untwisted)?),
    }
    .scale(alpha);
    if result.wild.location != Location::Infinity {
        return Err(Error::Unsupported(format!(
            "{op} moves the wild circles to 0"
        )));
    }
    result.check_ranks()?;
    Ok(result)
}

/// Convenience wrapper: parameter in, parameter out.
pub fn full_op_parameter(op: &Operation, t: &AdaParameter) -> Result<AdaParameter> {
    full_op(op, &FormalData::from_parameter(t))?.to_parameter()
}
