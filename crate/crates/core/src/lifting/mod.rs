//! Sample-point construction: lifting through per-level polynomial pairs,
//! open CAD, the reduced open CAD and the two-at-a-time `Hp` driver.

mod drivers;
mod engine;

pub use drivers::{hp_two, hp_two_guarded, open_cad, reduced_open_cad, reduced_sample};
pub(crate) use engine::lift;
pub use engine::{open_sp, LiftOptions, Progress};

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::poly::PolyError;
use crate::realroots::{RootError, Strategy};

/// Exact rational coordinates `(x_1, ..., x_k)`.
pub type SamplePoint = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("input must be a nonconstant polynomial")]
    Trivial,
    #[error("lift polynomial vanishes identically over a sample point at level {level}")]
    NonGenericSample { level: usize },
    #[error("base point {index} lies on a zero of the base polynomial or its guard")]
    InvalidBase { index: usize },
    #[error("base points have dimension {found}, expected {expected}")]
    BaseDimension { found: usize, expected: usize },
    #[error("cancelled")]
    Cancelled,
}

/// Which construction produced a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    OpenCad,
    HpTwo,
    Reduced(usize),
    Custom,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::OpenCad => f.write_str("opencad"),
            Method::HpTwo => f.write_str("hptwo"),
            Method::Reduced(j) => write!(f, "reduced:{j}"),
            Method::Custom => f.write_str("custom"),
        }
    }
}

/// Points at a common level, sorted lexicographically, with the number of
/// points reached at every level on the way (`counts[k]` is level `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSample {
    pub level: usize,
    pub points: Vec<SamplePoint>,
    pub counts: Vec<usize>,
    pub method: Method,
    pub strategy: Strategy,
}

impl OpenSample {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Lifts from the empty point through levels `1..=n`; returns the points and per-level counts.
pub(crate) fn lift_levels(
    levels: &[crate::projection::LiftLevel],
    opts: &LiftOptions,
) -> Result<(Vec<SamplePoint>, Vec<usize>), LiftError> {
    lift(levels, vec![Vec::new()], opts)
}
