//! Descartes-rule bisection (Vincent–Collins–Akritas) with dyadic endpoints.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IsolatingInterval, RootError, RootList};
use crate::poly::UniPoly;

/// `1 + max |a_i / a_d|`; every complex root has smaller modulus.
pub fn cauchy_bound(u: &UniPoly) -> BigRational {
    let c = u.coeffs();
    if c.len() <= 1 {
        return BigRational::one();
    }
    let lc = c.last().unwrap().abs();
    let m = c[..c.len() - 1]
        .iter()
        .map(|a| a.abs())
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(m, lc)
}

/// Isolates the distinct real roots of `u` (its squarefree part is used).
pub fn isolate(u: &UniPoly) -> Result<RootList, RootError> {
    if u.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let target = u.squarefree();
    let mut intervals = Vec::new();
    if !target.is_constant() {
        let mut c: Vec<BigInt> = target.coeffs().to_vec();
        if c[0].is_zero() {
            intervals.push(IsolatingInterval::exact(BigRational::zero()));
            c.remove(0);
        }
        let neg: Vec<BigInt> = c
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
            .collect();
        for iv in positive_roots(&neg) {
            intervals.push(IsolatingInterval {
                lower: -iv.upper,
                upper: -iv.lower,
            });
        }
        intervals.extend(positive_roots(&c));
        intervals.sort_by(|a, b| a.lower.cmp(&b.lower));
    }
    Ok(RootList { target, intervals })
}

/// Sign changes in the coefficient sequence, zeros skipped; stops counting at 2.
fn variations(c: &[BigInt]) -> usize {
    let mut count = 0;
    let mut last = 0;
    for a in c {
        let s = if a.is_zero() {
            0
        } else if a.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
                if count >= 2 {
                    return count;
                }
            }
            last = s;
        }
    }
    count
}

/// In-place `p(x) -> p(x + 1)`.
fn taylor_shift_one(c: &mut [BigInt]) {
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].clone();
            c[j] += t;
        }
    }
}

/// Upper bound on sign changes of `q` over `(0, 1)`.
fn descartes01(q: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    variations(&r)
}

/// Positive roots of a polynomial with nonzero constant term.
fn positive_roots(c: &[BigInt]) -> Vec<IsolatingInterval> {
    let mut out = Vec::new();
    if c.len() <= 1 || variations(c) == 0 {
        return out;
    }
    let bound = cauchy_bound(&UniPoly::new(c.to_vec()));
    let mut k = 0u32;
    let mut b = BigInt::one();
    while BigRational::from_integer(b.clone()) < bound {
        b <<= 1;
        k += 1;
    }
    // q(x) = p(2^k x), roots in (0, 1)
    let q: Vec<BigInt> = c
        .iter()
        .enumerate()
        .map(|(i, a)| a << (k as usize * i))
        .collect();
    let scale = BigRational::from_integer(b);
    // (poly, numerator c, exponent j): interval (c / 2^j, (c + 1) / 2^j)
    let mut stack: Vec<(Vec<BigInt>, BigInt, u32)> = vec![(q, BigInt::zero(), 0)];
    while let Some((q, num, j)) = stack.pop() {
        let v = descartes01(&q);
        if v == 0 {
            continue;
        }
        let den = BigInt::one() << j as usize;
        let lo = BigRational::new(num.clone(), den.clone()) * &scale;
        if v == 1 {
            let hi = BigRational::new(&num + 1, den) * &scale;
            out.push(IsolatingInterval {
                lower: lo,
                upper: hi,
            });
            continue;
        }
        let d = q.len() - 1;
        // left half: 2^d q(x / 2)
        let left: Vec<BigInt> = q.iter().enumerate().map(|(i, a)| a << (d - i)).collect();
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        if right[0].is_zero() {
            let mid = BigRational::new(2 * &num + 1, &den << 1) * &scale;
            out.push(IsolatingInterval::exact(mid));
        }
        stack.push((right, 2 * &num + 1, j + 1));
        stack.push((left, 2 * num, j + 1));
    }
    out
}

/// Sign of `p` immediately to the right of the interval's lower end.
pub(crate) fn side_sign(p: &UniPoly, iv: &IsolatingInterval) -> i32 {
    let s = p.sign_at(&iv.lower);
    if s != 0 {
        s
    } else {
        p.derivative().sign_at(&iv.lower)
    }
}

/// Halves an open interval, or collapses it onto an exact midpoint root.
pub(crate) fn bisect(p: &UniPoly, iv: &mut IsolatingInterval) {
    if iv.is_exact() {
        return;
    }
    let mid = (&iv.lower + &iv.upper) / BigRational::from_integer(2.into());
    locate(p, iv, &mid);
}

/// Position of the isolated root relative to `q`, shrinking the interval
/// with the information gained.
pub(crate) fn locate(p: &UniPoly, iv: &mut IsolatingInterval, q: &BigRational) -> Ordering {
    if iv.is_exact() {
        return iv.lower.cmp(q);
    }
    if q <= &iv.lower {
        return Ordering::Greater;
    }
    if q >= &iv.upper {
        return Ordering::Less;
    }
    let s = p.sign_at(q);
    if s == 0 {
        *iv = IsolatingInterval::exact(q.clone());
        return Ordering::Equal;
    }
    if s == side_sign(p, iv) {
        iv.lower = q.clone();
        Ordering::Greater
    } else {
        iv.upper = q.clone();
        Ordering::Less
    }
}
