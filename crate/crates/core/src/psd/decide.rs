use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use super::prep::{embed, negative_near, nonzero_point, prepare, Prepared};
use super::{PsdError, PsdVerdict, SemiDefClass, SemiDefSign, Trace};
use crate::lifting::{hp_two, LiftOptions, SamplePoint};
use crate::poly::{gcd_multi, MultiPoly};
use crate::projection::{hp_liftspec, np_parts, HpCache, LiftLevel};

/// Decision procedures sharing lifting options and a verdict memo.
pub struct PsdSolver {
    opts: LiftOptions,
    memo: Mutex<HashMap<MultiPoly, PsdVerdict>>,
}

impl Default for PsdSolver {
    fn default() -> Self {
        Self::new(LiftOptions::default())
    }
}

impl PsdSolver {
    pub fn new(opts: LiftOptions) -> Self {
        PsdSolver {
            opts,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Complete test: evaluate the signed odd part over an open sample of it.
    pub fn psd_by_sample(&self, f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
        self.decide(f, |h| self.sample_core(h, Trace::SampleCheck))
    }

    /// Base case for at most two variables.
    pub fn proineq_base(&self, f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
        if f.level() > 2 {
            return Err(PsdError::LevelTooHigh(f.level()));
        }
        self.psd_by_sample(f)
    }

    /// Recursive test: `Np_1` members must be semi-definite, then two-variable
    /// checks over a reduced open sample of `Np(f, [x_n, x_{n-1}])`.
    pub fn psd_hp_two(&self, f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
        self.decide(f, |h| self.hp_two_core(h))
    }

    pub fn semi_def(&self, f: &MultiPoly) -> Result<SemiDefSign, PsdError> {
        if f.is_zero() {
            return Ok(SemiDefSign {
                class: SemiDefClass::IdenticallyZero,
                positive: None,
                negative: None,
            });
        }
        let up = self.psd_hp_two(f)?;
        if up.is_psd() {
            return Ok(SemiDefSign {
                class: SemiDefClass::NonNegative,
                positive: Some(nonzero_point(f)),
                negative: None,
            });
        }
        let down = self.psd_hp_two(&-f)?;
        if down.is_psd() {
            return Ok(SemiDefSign {
                class: SemiDefClass::NonPositive,
                positive: None,
                negative: Some(nonzero_point(f)),
            });
        }
        Ok(SemiDefSign {
            class: SemiDefClass::Indefinite,
            positive: down.witness,
            negative: up.witness,
        })
    }

    fn decide(
        &self,
        f: &MultiPoly,
        core: impl Fn(&MultiPoly) -> Result<PsdVerdict, PsdError>,
    ) -> Result<PsdVerdict, PsdError> {
        match prepare(f) {
            Prepared::Zero => Ok(PsdVerdict::psd(Trace::Trivial)),
            Prepared::EvenOnly { sign } => Ok(if sign > 0 {
                PsdVerdict::psd(Trace::Trivial)
            } else {
                PsdVerdict::not_psd(nonzero_point(f), Trace::Trivial)
            }),
            Prepared::Core { h, map } => {
                let v = core(&h)?;
                match v.witness {
                    None => Ok(v),
                    Some(w) => {
                        let w = negative_near(f, embed(&w, &map, f.nvars()))
                            .expect("a negative value of the odd part extends to an open set");
                        Ok(PsdVerdict::not_psd(w, v.trace))
                    }
                }
            }
        }
    }

    /// First sample point (in canonical order) where `h` is negative.
    fn first_negative(&self, h: &MultiPoly, points: &[SamplePoint]) -> Option<SamplePoint> {
        points.par_iter().find_first(|p| h.sign_at(p) < 0).cloned()
    }

    fn sample_core(&self, h: &MultiPoly, trace: Trace) -> Result<PsdVerdict, PsdError> {
        let sample = hp_two(h, &self.opts)?;
        Ok(match self.first_negative(h, &sample.points) {
            Some(w) => PsdVerdict::not_psd(w, trace),
            None => PsdVerdict::psd(trace),
        })
    }

    /// `h`: squarefree, every variable used.
    fn hp_two_core(&self, h: &MultiPoly) -> Result<PsdVerdict, PsdError> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(h) {
            return Ok(v.clone());
        }
        let v = self.hp_two_uncached(h)?;
        self.memo
            .lock()
            .expect("memo lock")
            .insert(h.clone(), v.clone());
        Ok(v)
    }

    fn hp_two_uncached(&self, h: &MultiPoly) -> Result<PsdVerdict, PsdError> {
        let n = h.nvars();
        if n <= 2 {
            return self.sample_core(h, Trace::SampleCheck);
        }
        let (xn, xm) = (n - 1, n - 2);
        let mut l1 = np_parts(h, xn)?.np1;
        for g in np_parts(h, xm)?.np1 {
            if !l1.contains(&g) {
                l1.push(g);
            }
        }
        for g in &l1 {
            if !self.semi_def(g)?.is_semi_definite() {
                return self.sample_core(h, Trace::Fallback);
            }
        }
        let cache = HpCache::new();
        let a = cache.np_designated(h, &[xn, xm], xn)?;
        let b = cache.np_designated(h, &[xn, xm], xm)?;
        let l2 = gcd_multi(&a, &b)?;
        let base = self.reduced_base(&cache, &l2, &(&a * &b), n - 2)?;
        let checks: Vec<Result<Option<SamplePoint>, PsdError>> = base
            .par_iter()
            .map(|alpha| {
                let mut assignment: Vec<Option<_>> = alpha.iter().cloned().map(Some).collect();
                assignment.resize(n, None);
                let (fa, _) = h.substitute(&assignment);
                let map: Vec<Option<usize>> = (0..n).map(|i| i.checked_sub(n - 2)).collect();
                let fa = fa.remap(2, &map);
                if fa.is_zero() {
                    return Err(PsdError::Lift(
                        crate::lifting::LiftError::NonGenericSample { level: n - 2 },
                    ));
                }
                let v = self.proineq_base(&fa)?;
                Ok(v.witness.map(|w| {
                    let mut p = alpha.clone();
                    p.extend(w);
                    p
                }))
            })
            .collect();
        let mut degenerate = false;
        for c in checks {
            match c {
                Ok(Some(w)) => {
                    debug_assert!(h.sign_at(&w) < 0);
                    return Ok(PsdVerdict::not_psd(w, Trace::NpRecursion));
                }
                Ok(None) => {}
                Err(PsdError::Lift(crate::lifting::LiftError::NonGenericSample { .. })) => {
                    degenerate = true
                }
                Err(e) => return Err(e),
            }
        }
        if degenerate {
            return self.sample_core(h, Trace::Fallback);
        }
        Ok(PsdVerdict::psd(Trace::NpRecursion))
    }

    /// Reduced open sample of `l2` (a polynomial in `x_1..x_k`) whose points
    /// avoid the zeros of `guard`.
    fn reduced_base(
        &self,
        cache: &HpCache,
        l2: &MultiPoly,
        guard: &MultiPoly,
        k: usize,
    ) -> Result<Vec<SamplePoint>, PsdError> {
        let n = l2.nvars();
        let map: Vec<Option<usize>> = (0..n).map(|i| if i < k { Some(i) } else { None }).collect();
        let l2 = l2.remap(k, &map);
        let guard = guard.remap(k, &map);
        let levels = if k == 1 {
            vec![LiftLevel {
                level: 1,
                lift: l2.clone(),
                guard: &l2 * &guard,
            }]
        } else {
            let spec = hp_liftspec(cache, &l2, 2)?;
            let mut levels = vec![LiftLevel {
                level: 1,
                lift: spec.base.lift,
                guard: spec.base.guard,
            }];
            levels.extend(spec.levels);
            let top = levels.last_mut().expect("k >= 2");
            top.guard = &top.guard * &guard;
            levels
        };
        let (points, _) = crate::lifting::lift_levels(&levels, &self.opts)?;
        Ok(points)
    }
}

pub fn psd_by_sample(f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
    PsdSolver::default().psd_by_sample(f)
}

pub fn proineq_base(f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
    PsdSolver::default().proineq_base(f)
}

pub fn psd_hp_two(f: &MultiPoly) -> Result<PsdVerdict, PsdError> {
    PsdSolver::default().psd_hp_two(f)
}

pub fn semi_def(f: &MultiPoly) -> Result<SemiDefSign, PsdError> {
    PsdSolver::default().semi_def(f)
}
