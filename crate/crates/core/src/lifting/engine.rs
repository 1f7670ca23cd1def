use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;

use super::{LiftError, Method, OpenSample, SamplePoint};
use crate::poly::MultiPoly;
use crate::projection::{LiftLevel, LiftSpec};
use crate::realroots::{sp_one_with, Strategy};

/// Called with `(level, points at that level)` after each level completes.
pub type Progress = Arc<dyn Fn(usize, usize) + Send + Sync>;

#[derive(Clone, Default)]
pub struct LiftOptions {
    pub strategy: Strategy,
    pub progress: Option<Progress>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl fmt::Debug for LiftOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LiftOptions")
            .field("strategy", &self.strategy)
            .field("progress", &self.progress.is_some())
            .field("cancel", &self.cancel.is_some())
            .finish()
    }
}

impl LiftOptions {
    pub fn new(strategy: Strategy) -> Self {
        LiftOptions {
            strategy,
            ..Default::default()
        }
    }

    pub fn with_progress(mut self, p: Progress) -> Self {
        self.progress = Some(p);
        self
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub(crate) fn check(&self) -> Result<(), LiftError> {
        match &self.cancel {
            Some(c) if c.load(Ordering::Relaxed) => Err(LiftError::Cancelled),
            _ => Ok(()),
        }
    }

    pub(crate) fn report(&self, level: usize, count: usize) {
        if let Some(p) = &self.progress {
            p(level, count);
        }
    }
}

/// True when `p` becomes the zero polynomial after fixing `x_1..x_k` to `point`.
pub(crate) fn vanishes_over(p: &MultiPoly, point: &[BigRational]) -> bool {
    if p.is_zero() {
        return true;
    }
    if p.level() == 0 {
        return false;
    }
    let mut assignment: Vec<Option<BigRational>> = vec![None; p.nvars()];
    for (slot, v) in assignment.iter_mut().zip(point) {
        *slot = Some(v.clone());
    }
    p.substitute(&assignment).0.is_zero()
}

/// Children of one parent point at `level`; a candidate is rejected when a
/// lift or guard of any later level vanishes identically over it.
fn expand(
    alpha: &SamplePoint,
    level: &LiftLevel,
    later: &[LiftLevel],
    opts: &LiftOptions,
) -> Result<Vec<SamplePoint>, LiftError> {
    opts.check()?;
    let f = level.lift.specialize(alpha);
    let g = level.guard.specialize(alpha);
    if f.is_zero() || g.is_zero() {
        return Err(LiftError::NonGenericSample { level: level.level });
    }
    let accept = |c: &BigRational| {
        if later.is_empty() {
            return true;
        }
        let mut p = alpha.clone();
        p.push(c.clone());
        later
            .iter()
            .all(|nx| !vanishes_over(&nx.lift, &p) && !vanishes_over(&nx.guard, &p))
    };
    let coords = sp_one_with(&f, &g, opts.strategy, accept)
        .map_err(|_| LiftError::NonGenericSample { level: level.level })?;
    Ok(coords
        .into_iter()
        .map(|c| {
            let mut p = alpha.clone();
            p.push(c);
            p
        })
        .collect())
}

/// Lifts `points` through `levels` (ascending); returns the points and the
/// count reached at each lifted level.
pub(crate) fn lift(
    levels: &[LiftLevel],
    mut points: Vec<SamplePoint>,
    opts: &LiftOptions,
) -> Result<(Vec<SamplePoint>, Vec<usize>), LiftError> {
    let mut counts = Vec::with_capacity(levels.len());
    for (k, level) in levels.iter().enumerate() {
        let later = &levels[k + 1..];
        let children: Vec<Result<Vec<SamplePoint>, LiftError>> = points
            .par_iter()
            .map(|alpha| expand(alpha, level, later, opts))
            .collect();
        let mut out = Vec::with_capacity(children.len() * 2);
        for c in children {
            out.extend(c?);
        }
        points = out;
        counts.push(points.len());
        opts.report(level.level, points.len());
    }
    points.sort();
    Ok((points, counts))
}

/// Lifts base points (dimension `spec.base.level`) through every level of `spec`.
/// Base points must avoid the zeros of the base polynomial and its guard.
pub fn open_sp(
    spec: &LiftSpec,
    base: &[SamplePoint],
    opts: &LiftOptions,
) -> Result<OpenSample, LiftError> {
    let d = spec.base.level;
    for (index, p) in base.iter().enumerate() {
        if p.len() != d {
            return Err(LiftError::BaseDimension {
                found: p.len(),
                expected: d,
            });
        }
        let mut full = p.clone();
        full.resize(spec.nvars, BigRational::default());
        if spec.base.lift.sign_at(&full) == 0 || spec.base.guard.sign_at(&full) == 0 {
            return Err(LiftError::InvalidBase { index });
        }
    }
    let mut counts = vec![0; d];
    if d > 0 {
        counts[d - 1] = base.len();
    }
    let (points, lifted) = lift(&spec.levels, base.to_vec(), opts)?;
    counts.extend(lifted);
    Ok(OpenSample {
        level: spec.nvars,
        points,
        counts,
        method: Method::Custom,
        strategy: opts.strategy,
    })
}
