//! Exact real root isolation for univariate integer polynomials and the
//! guarded one-point-per-cell sample chooser.

mod isolate;
mod sample;
mod sturm;

pub use isolate::{cauchy_bound, isolate};
pub use sample::{simplest_between, sp_one, sp_one_with, Strategy};
pub use sturm::{sturm_count, sturm_sequence};

use num_rational::BigRational;
use thiserror::Error;

use crate::poly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("no acceptable sample point after {0} attempts")]
    Exhausted(usize),
}

/// An open interval `(lower, upper)` holding exactly one root, or an exact
/// rational root when `lower == upper`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl IsolatingInterval {
    pub fn exact(r: BigRational) -> Self {
        IsolatingInterval {
            lower: r.clone(),
            upper: r,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

/// Sorted, pairwise disjoint isolating intervals for every real root of a
/// squarefree target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootList {
    target: UniPoly,
    intervals: Vec<IsolatingInterval>,
}

impl RootList {
    pub fn target(&self) -> &UniPoly {
        &self.target
    }

    pub fn intervals(&self) -> &[IsolatingInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// A copy with every open interval narrowed below `width`.
    pub fn refined(&self, width: &BigRational) -> RootList {
        let mut out = self.clone();
        for k in 0..out.intervals.len() {
            while !out.intervals[k].is_exact() && &out.intervals[k].width() >= width {
                isolate::bisect(&out.target, &mut out.intervals[k]);
            }
        }
        out
    }
}
