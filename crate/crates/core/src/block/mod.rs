//! Group inverses of the anti-triangular block matrices
//! `[[E, I], [F, 0]]`, `[[E, F], [I, 0]]` and `[[E, F], [F, 0]]`.
//!
//! Each closed-form representation is identified by a [`Theorem`] and comes
//! with two kinds of hypotheses:
//!
//! * standing hypotheses (for instance `FEF^π = 0`), without which the
//!   representation says nothing. Violations are reported as
//!   [`Error::HypothesisViolated`](crate::Error::HypothesisViolated);
//! * an equivalence condition (for instance `E^π F^π = 0`), which holds
//!   exactly when the block matrix is group invertible. Violations are
//!   reported as
//!   [`Error::BlockNotGroupInvertible`](crate::Error::BlockNotGroupInvertible).

mod conditions;
mod formulas;
mod routes;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use conditions::{check_conditions, Condition, ConditionEntry, ConditionReport, Ingredients, Role};
pub use formulas::{
    block_group_inverse, ef_f0_commuting, ef_f0_group_e, ef_f0_left, ef_f0_right, ef_i0_commuting, ef_i0_left,
    ef_i0_right, ei_f0_left, ei_f0_right, BlockGroupInverse,
};
pub use routes::{route_checks, subblock_side_conditions, RouteCheck};

/// Which anti-triangular pattern a block matrix has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockShape {
    /// `[[E, I], [F, 0]]`
    #[serde(rename = "EI_F0")]
    EiF0,
    /// `[[E, F], [I, 0]]`
    #[serde(rename = "EF_I0")]
    EfI0,
    /// `[[E, F], [F, 0]]`
    #[serde(rename = "EF_F0")]
    EfF0,
}

impl BlockShape {
    pub const ALL: [BlockShape; 3] = [BlockShape::EiF0, BlockShape::EfI0, BlockShape::EfF0];

    pub fn name(self) -> &'static str {
        match self {
            BlockShape::EiF0 => "EI_F0",
            BlockShape::EfI0 => "EF_I0",
            BlockShape::EfF0 => "EF_F0",
        }
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BlockShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BlockShape::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("unknown block shape {s:?}"),
            })
    }
}

/// A closed-form group-inverse representation.
///
/// "Right" variants assume `FEF^π = 0`, "left" variants assume `F^π EF = 0`.
/// The string identifiers (`"thm2.1"`, ...) are the stable external names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum Theorem {
    /// `[[E, I], [F, 0]]` under `FEF^π = 0`, direct formula.
    EiF0Right,
    /// `[[E, F], [I, 0]]` under `FEF^π = 0`, by similarity with `EiF0Right`.
    EfI0Right,
    /// `[[E, F], [I, 0]]` under `F^π EF = 0`, by transposing `EiF0Right`.
    EfI0Left,
    /// `[[E, I], [F, 0]]` under `F^π EF = 0`, by similarity with `EfI0Left`.
    EiF0Left,
    /// `[[E, F], [I, 0]]` when `EF = λFE` or `EF² = FEF`.
    EfI0Commuting,
    /// `[[E, F], [F, 0]]` under `FEF^π = 0` with `F` group invertible.
    EfF0Right,
    /// `[[E, F], [F, 0]]` under `F^π EF = 0`, by transposing `EfF0Right`.
    EfF0Left,
    /// `[[E, F], [F, 0]]` with both `E` and `F` group invertible.
    EfF0GroupE,
    /// `EfF0GroupE` reached through `EF = λFE` or `EF² = FEF`.
    EfF0Commuting,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::EiF0Right,
        Theorem::EfI0Right,
        Theorem::EfI0Left,
        Theorem::EiF0Left,
        Theorem::EfI0Commuting,
        Theorem::EfF0Right,
        Theorem::EfF0Left,
        Theorem::EfF0GroupE,
        Theorem::EfF0Commuting,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::EiF0Right => "thm2.1",
            Theorem::EfI0Right => "cor2.2",
            Theorem::EfI0Left => "thm2.3",
            Theorem::EiF0Left => "cor2.4",
            Theorem::EfI0Commuting => "cor2.5",
            Theorem::EfF0Right => "thm3.1",
            Theorem::EfF0Left => "cor3.2",
            Theorem::EfF0GroupE => "cor3.3",
            Theorem::EfF0Commuting => "cor3.4",
        }
    }

    pub fn shape(self) -> BlockShape {
        match self {
            Theorem::EiF0Right | Theorem::EiF0Left => BlockShape::EiF0,
            Theorem::EfI0Right | Theorem::EfI0Left | Theorem::EfI0Commuting => BlockShape::EfI0,
            Theorem::EfF0Right | Theorem::EfF0Left | Theorem::EfF0GroupE | Theorem::EfF0Commuting => {
                BlockShape::EfF0
            }
        }
    }

    /// Whether the representation has an equivalence condition, i.e. whether
    /// non-existence of the group inverse can be certified.
    pub fn has_equivalence(self) -> bool {
        !matches!(self, Theorem::EfF0GroupE | Theorem::EfF0Commuting)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl From<Theorem> for &'static str {
    fn from(t: Theorem) -> &'static str {
        t.id()
    }
}

impl TryFrom<String> for Theorem {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The `2n × 2n` block matrix of the given shape, with `I = identity(n)`.
pub fn assemble_m(e: &Matrix, f: &Matrix, shape: BlockShape) -> Result<Matrix> {
    let n = e.require_square()?;
    if f.shape() != (n, n) {
        return Err(Error::ShapeMismatch {
            op: "assemble_m",
            left: e.shape(),
            right: f.shape(),
        });
    }
    let i = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    match shape {
        BlockShape::EiF0 => Matrix::block2x2(e, &i, f, &z),
        BlockShape::EfI0 => Matrix::block2x2(e, f, &i, &z),
        BlockShape::EfF0 => Matrix::block2x2(e, f, f, &z),
    }
}
