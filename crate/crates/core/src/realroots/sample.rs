//! One rational sample per open interval cut out by the real roots of `f`,
//! avoiding the zeros of a guard `g`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::isolate::{bisect, cauchy_bound, isolate, locate};
use super::{IsolatingInterval, RootError};
use crate::poly::UniPoly;

/// Attempts per interval before giving up on the guard / acceptance test.
const MAX_ATTEMPTS: usize = 64;

/// How an interior point is picked inside an open interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Smallest denominator, then smallest magnitude. Outer cells take the
    /// integer of least magnitude beyond the extreme root.
    #[default]
    Simplest,
    /// Midpoint of the gap between neighbouring isolating intervals. Outer
    /// cells take `±(ceil(cauchy bound) + 1)`.
    Midpoint,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Simplest => "simplest",
            Strategy::Midpoint => "midpoint",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplest" => Ok(Strategy::Simplest),
            "midpoint" => Ok(Strategy::Midpoint),
            other => Err(format!(
                "unknown strategy `{other}` (expected simplest or midpoint)"
            )),
        }
    }
}

/// The simplest rational in the open interval `(a, b)`; `None` is unbounded.
pub fn simplest_between(a: Option<&BigRational>, b: Option<&BigRational>) -> BigRational {
    match (a, b) {
        (None, None) => BigRational::zero(),
        (None, Some(b)) => {
            if b.is_positive() {
                BigRational::zero()
            } else {
                b.ceil() - BigRational::one()
            }
        }
        (Some(a), None) => {
            if a.is_negative() {
                BigRational::zero()
            } else {
                a.floor() + BigRational::one()
            }
        }
        (Some(a), Some(b)) => {
            debug_assert!(a < b);
            if a.is_negative() && b.is_positive() {
                BigRational::zero()
            } else if !b.is_positive() {
                -simplest_nonneg(&-b, &-a)
            } else {
                simplest_nonneg(a, b)
            }
        }
    }
}

/// `0 <= a < b`.
fn simplest_nonneg(a: &BigRational, b: &BigRational) -> BigRational {
    let n = a.floor();
    let next = &n + BigRational::one();
    if &next < b {
        return next;
    }
    let lo = (b - &n).recip();
    let frac = a - &n;
    let hi = if frac.is_zero() {
        None
    } else {
        Some(frac.recip())
    };
    n + simplest_between(Some(&lo), hi.as_ref()).recip()
}

#[derive(Clone)]
enum Lower {
    NegInf,
    Root(usize),
    Point(BigRational),
}

#[derive(Clone, Copy)]
enum Upper {
    PosInf,
    Root(usize),
}

/// [`sp_one_with`] accepting every candidate.
pub fn sp_one(f: &UniPoly, g: &UniPoly, strategy: Strategy) -> Result<Vec<BigRational>, RootError> {
    sp_one_with(f, g, strategy, |_| true)
}

/// One point per open interval determined by the real roots of `f` (both
/// unbounded ends included), sorted ascending. Every point avoids the zeros
/// of `f` and `g` and passes `accept`; rejected candidates move right within
/// their interval.
pub fn sp_one_with(
    f: &UniPoly,
    g: &UniPoly,
    strategy: Strategy,
    accept: impl Fn(&BigRational) -> bool,
) -> Result<Vec<BigRational>, RootError> {
    if f.is_zero() || g.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let roots = isolate(f)?;
    let p = roots.target().clone();
    let mut ivs = roots.intervals().to_vec();
    let m = ivs.len();
    let outer = cauchy_bound(&p).ceil() + BigRational::one();
    let mut out = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut lower = if k == 0 {
            Lower::NegInf
        } else {
            Lower::Root(k - 1)
        };
        let upper = if k == m {
            Upper::PosInf
        } else {
            Upper::Root(k)
        };
        let mut chosen = None;
        for _ in 0..MAX_ATTEMPTS {
            let c = match strategy {
                Strategy::Simplest => pick_simplest(&p, &mut ivs, &lower, upper),
                Strategy::Midpoint => pick_midpoint(&p, &mut ivs, &lower, upper, &outer, m),
            };
            if g.sign_at(&c) != 0 && accept(&c) {
                chosen = Some(c);
                break;
            }
            lower = Lower::Point(c);
        }
        out.push(chosen.ok_or(RootError::Exhausted(MAX_ATTEMPTS))?);
    }
    Ok(out)
}

fn pick_simplest(
    p: &UniPoly,
    ivs: &mut [IsolatingInterval],
    lower: &Lower,
    upper: Upper,
) -> BigRational {
    loop {
        let a = match lower {
            Lower::NegInf => None,
            Lower::Root(k) => Some(ivs[*k].lower.clone()),
            Lower::Point(q) => Some(q.clone()),
        };
        let b = match upper {
            Upper::PosInf => None,
            Upper::Root(k) => Some(ivs[k].upper.clone()),
        };
        let c = simplest_between(a.as_ref(), b.as_ref());
        let ok_lower = match lower {
            Lower::Root(k) => locate(p, &mut ivs[*k], &c) == Ordering::Less,
            _ => true,
        };
        let ok_upper = match upper {
            Upper::Root(k) => locate(p, &mut ivs[k], &c) == Ordering::Greater,
            Upper::PosInf => true,
        };
        if ok_lower && ok_upper {
            return c;
        }
        // halve the offending intervals too so clustered roots separate geometrically
        if let (false, Lower::Root(k)) = (ok_lower, lower) {
            if !ivs[*k].is_exact() {
                bisect(p, &mut ivs[*k]);
            }
        }
        if let (false, Upper::Root(k)) = (ok_upper, upper) {
            if !ivs[k].is_exact() {
                bisect(p, &mut ivs[k]);
            }
        }
    }
}

fn pick_midpoint(
    p: &UniPoly,
    ivs: &mut [IsolatingInterval],
    lower: &Lower,
    upper: Upper,
    outer: &BigRational,
    m: usize,
) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    match (lower, upper) {
        (Lower::NegInf, Upper::PosInf) => BigRational::zero(),
        (Lower::NegInf, Upper::Root(_)) => -outer.clone(),
        (Lower::Root(_), Upper::PosInf) => {
            debug_assert!(m > 0);
            outer.clone()
        }
        (Lower::Point(q), Upper::PosInf) => q.floor() + BigRational::one(),
        (Lower::Root(k), Upper::Root(j)) => {
            while ivs[*k].upper >= ivs[j].lower {
                if !ivs[*k].is_exact() {
                    bisect(p, &mut ivs[*k]);
                }
                if !ivs[j].is_exact() {
                    bisect(p, &mut ivs[j]);
                }
            }
            (&ivs[*k].upper + &ivs[j].lower) / two
        }
        (Lower::Point(q), Upper::Root(j)) => {
            while &ivs[j].lower <= q {
                bisect(p, &mut ivs[j]);
            }
            (q + &ivs[j].lower) / two
        }
    }
}
