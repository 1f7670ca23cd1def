//! Heuristic gcd: evaluate the main variable at a large integer, recurse,
//! and recover the gcd from the xi-adic expansion of the image gcd.
//! Every candidate is verified by exact division; `None` means "gave up".

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::MultiPoly;

const ATTEMPTS: usize = 6;

/// Gcd of two nonzero polynomials, integer content included (sign unspecified).
pub(crate) fn heu_gcd(f: &MultiPoly, g: &MultiPoly) -> Option<MultiPoly> {
    let n = f.nvars();
    let cf = f.integer_content();
    let cg = g.integer_content();
    let c = cf.gcd(&cg);
    if f.is_constant() || g.is_constant() {
        return Some(MultiPoly::constant(n, c));
    }
    let f = f.div_int_exact(&cf);
    let g = g.div_int_exact(&cg);
    let v = f.level().max(g.level()) - 1;
    let nf = max_norm(&f);
    let ng = max_norm(&g);
    let b: BigInt = BigInt::from(2) * (&nf).min(&ng) + 29;
    let lf = nf / f.leading_coeff().abs();
    let lg = ng / g.leading_coeff().abs();
    let mut x: BigInt = (&b)
        .min(&(b.sqrt() * 99))
        .clone()
        .max(BigInt::from(2) * lf.min(lg) + 4);
    for _ in 0..ATTEMPTS {
        let ff = eval_at(&f, v, &x);
        let gg = eval_at(&g, v, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = heu_gcd(&ff, &gg)?;
            let h = interpolate(&h, v, &x);
            if !h.is_zero() {
                let h = h.div_int_exact(&h.integer_content());
                if f.div_exact(&h).is_some() && g.div_exact(&h).is_some() {
                    return Some(h.scale(&c));
                }
            }
        }
        x = BigInt::from(73794) * &x * x.sqrt().sqrt() / 27011;
    }
    None
}

fn max_norm(f: &MultiPoly) -> BigInt {
    f.terms()
        .iter()
        .map(|(_, c)| c.abs())
        .max()
        .unwrap_or_default()
}

/// `f` with `x_{v+1}` replaced by the integer `x`.
fn eval_at(f: &MultiPoly, v: usize, x: &BigInt) -> MultiPoly {
    let d = f.degree(v).unwrap_or(0) as usize;
    let mut pows = Vec::with_capacity(d + 1);
    pows.push(BigInt::one());
    for k in 1..=d {
        let next = &pows[k - 1] * x;
        pows.push(next);
    }
    MultiPoly::from_terms(
        f.nvars(),
        f.terms().iter().map(|(e, c)| {
            let mut e = e.clone();
            let k = std::mem::take(&mut e[v]) as usize;
            (e, c * &pows[k])
        }),
    )
}

/// Polynomial in `x_{v+1}` whose coefficients are the balanced base-`x` digits of `h`.
fn interpolate(h: &MultiPoly, v: usize, x: &BigInt) -> MultiPoly {
    let n = h.nvars();
    let half = x / 2;
    let mut h = h.clone();
    let mut terms = Vec::new();
    let mut k = 0u32;
    while !h.is_zero() {
        let digits = MultiPoly::from_terms(
            n,
            h.terms().iter().map(|(e, c)| {
                let mut r = c.mod_floor(x);
                if r > half {
                    r -= x;
                }
                (e.clone(), r)
            }),
        );
        for (e, c) in digits.terms() {
            let mut e = e.clone();
            e[v] = k;
            terms.push((e, c.clone()));
        }
        h = (&h - &digits).div_int_exact(x);
        k += 1;
    }
    MultiPoly::from_terms(n, terms)
}
