//! Positive semi-definiteness: a sampling test that is complete by the open
//! sample property, and a recursive test that samples only `n - 2`
//! dimensions using `Np`.

mod decide;
mod prep;

pub use decide::{proineq_base, psd_by_sample, psd_hp_two, semi_def, PsdSolver};

use std::fmt;

use thiserror::Error;

use crate::lifting::{LiftError, SamplePoint};
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsdError {
    #[error("base case expects at most two variables, got level {0}")]
    LevelTooHigh(usize),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Psd,
    NotPsd,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Psd => "psd",
            Verdict::NotPsd => "not_psd",
        })
    }
}

/// Which path settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trace {
    /// Zero or constant input, or no odd-multiplicity factor.
    Trivial,
    /// Evaluation over an open sample.
    SampleCheck,
    /// The `Np` recursion with two-variable checks over a reduced sample.
    NpRecursion,
    /// `Np_1` precheck failed; the full sample test decided.
    Fallback,
}

/// `NotPsd` always carries a witness with an exactly negative value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsdVerdict {
    pub verdict: Verdict,
    pub witness: Option<SamplePoint>,
    pub trace: Trace,
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        self.verdict == Verdict::Psd
    }

    pub(crate) fn psd(trace: Trace) -> Self {
        PsdVerdict {
            verdict: Verdict::Psd,
            witness: None,
            trace,
        }
    }

    pub(crate) fn not_psd(witness: SamplePoint, trace: Trace) -> Self {
        PsdVerdict {
            verdict: Verdict::NotPsd,
            witness: Some(witness),
            trace,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiDefClass {
    NonNegative,
    NonPositive,
    Indefinite,
    IdenticallyZero,
}

/// Sign classification with a witness for each strict sign observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiDefSign {
    pub class: SemiDefClass,
    pub positive: Option<SamplePoint>,
    pub negative: Option<SamplePoint>,
}

impl SemiDefSign {
    pub fn is_semi_definite(&self) -> bool {
        self.class != SemiDefClass::Indefinite
    }
}
