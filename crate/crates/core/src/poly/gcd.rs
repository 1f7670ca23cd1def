//! Multivariate gcd by the subresultant PRS, recursing on the coefficient ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::heugcd::heu_gcd;
use super::modgcd::modular_gcd;
use super::modular::gcd_degree_bounds;
use super::{MultiPoly, PolyError};

/// Greatest common divisor, primitive over `Z` with a positive leading coefficient.
pub fn gcd_multi(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(PolyError::ZeroPolynomial),
        (true, false) => Ok(g.canonical()),
        (false, true) => Ok(f.canonical()),
        (false, false) => Ok(gcd_canonical(f, g)),
    }
}

/// Gcd of a nonempty list; zero members are ignored.
pub fn gcd_list(polys: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
    let mut nonzero = polys.iter().filter(|p| !p.is_zero());
    let first = nonzero.next().ok_or(PolyError::ZeroPolynomial)?;
    let mut g = first.canonical();
    for p in nonzero {
        if g.is_constant() {
            break;
        }
        g = gcd_canonical(&g, p);
    }
    Ok(g)
}

/// Content with respect to `x_{i+1}`: the positive gcd of the coefficients in
/// that variable, integer part included.
pub fn content(f: &MultiPoly, i: usize) -> Result<MultiPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let coeffs = f.coeffs_in(i);
    let mut int = BigInt::zero();
    for c in &coeffs {
        int = int.gcd(&c.integer_content());
    }
    Ok(var_content(f, i).scale(&int))
}

/// `f / content(f, i)`.
pub fn primitive_part(f: &MultiPoly, i: usize) -> Result<MultiPoly, PolyError> {
    let c = content(f, i)?;
    Ok(f.div_exact(&c).expect("content divides"))
}

/// Canonical gcd of the coefficients in `x_{v+1}`, integer content removed.
pub(crate) fn var_content(f: &MultiPoly, v: usize) -> MultiPoly {
    if !f.uses_var(v) {
        return f.canonical();
    }
    let mut coeffs: Vec<MultiPoly> = f
        .coeffs_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| c.num_terms());
    let mut g = coeffs[0].canonical();
    for c in &coeffs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd_canonical(&g, c);
    }
    if g.is_constant() {
        MultiPoly::one(f.nvars())
    } else {
        g
    }
}

/// Gcd of two nonzero polynomials in canonical form.
pub(crate) fn gcd_canonical(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let a = a.canonical();
    let b = b.canonical();
    if a == b {
        return a;
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let a = a.unshift(&ma);
    let b = b.unshift(&mb);
    let mono = MultiPoly::monomial(m, 1);
    if a.is_constant() || b.is_constant() {
        return mono;
    }
    let bounds = gcd_degree_bounds(&a, &b);
    if bounds.iter().all(|&d| d == 0) {
        return mono;
    }
    if let Some(v) = (0..n)
        .rev()
        .find(|&v| bounds[v] == 0 && (a.uses_var(v) || b.uses_var(v)))
    {
        // the gcd is free of x_{v+1}: it divides every coefficient in that variable
        let mut coeffs: Vec<MultiPoly> = a
            .coeffs_in(v)
            .into_iter()
            .chain(b.coeffs_in(v))
            .filter(|c| !c.is_zero())
            .collect();
        coeffs.sort_by_key(|c| c.num_terms());
        let mut g = coeffs[0].canonical();
        for c in &coeffs[1..] {
            if g.is_constant() {
                break;
            }
            g = gcd_canonical(&g, c);
        }
        return (&g * &mono).canonical();
    }
    if heu_affordable(&a, &b) {
        if let Some(h) = heu_gcd(&a, &b) {
            return (&h * &mono).canonical();
        }
    }
    if let Some(h) = modular_gcd(&a, &b) {
        return (&h * &mono).canonical();
    }
    let v = a.level().max(b.level()) - 1;
    let g = if !b.uses_var(v) {
        gcd_canonical(&var_content(&a, v), &b)
    } else if !a.uses_var(v) {
        gcd_canonical(&a, &var_content(&b, v))
    } else {
        let ca = var_content(&a, v);
        let cb = var_content(&b, v);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        let c = if ca.is_one() || cb.is_one() {
            MultiPoly::one(n)
        } else {
            gcd_canonical(&ca, &cb)
        };
        &c * &prs_gcd(&pa, &pb, v)
    };
    (&g * &mono).canonical()
}

/// Rough bit size of the innermost integer images the heuristic gcd would build.
fn heu_affordable(a: &MultiPoly, b: &MultiPoly) -> bool {
    const LIMIT: u64 = 1 << 16;
    let bits = |p: &MultiPoly| p.terms().iter().map(|(_, c)| c.bits()).max().unwrap_or(0) + 8;
    let mut size = bits(a).min(bits(b));
    for v in 0..a.nvars() {
        let d = a.degree(v).unwrap_or(0).max(b.degree(v).unwrap_or(0)) as u64;
        size = size.saturating_mul(d + 1);
        if size > LIMIT {
            return false;
        }
    }
    true
}

/// Trims trailing zero coefficients.
pub(crate) fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (coefficient vectors in one variable):
/// `lc(b)^(deg a - deg b + 1) a = q b + r`.
pub(crate) fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let lb_is_one = lb.is_one();
    let mut e = r.len() - b.len() + 1;
    while !r.is_empty() && r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let k = dr - db;
        if !lb_is_one {
            for c in r.iter_mut().take(dr) {
                *c = lb * &*c;
            }
        }
        r[dr] = MultiPoly::zero(lr.nvars());
        for j in 0..db {
            let t = &lr * &b[j];
            r[j + k] = &r[j + k] - &t;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !lb_is_one && !r.is_empty() {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &f * &*c;
        }
    }
    r
}

pub(crate) fn div_all(v: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    if d.is_one() {
        return v.to_vec();
    }
    v.iter()
        .map(|c| c.div_exact(d).expect("subresultant division is exact"))
        .collect()
}

/// Primitive gcd of `pa` and `pb`, both primitive in `x_{v+1}` with positive degree.
fn prs_gcd(pa: &MultiPoly, pb: &MultiPoly, v: usize) -> MultiPoly {
    let n = pa.nvars();
    if let Some(q) = try_divides(pb, pa, v) {
        return q;
    }
    if let Some(q) = try_divides(pa, pb, v) {
        return q;
    }
    let mut a = pa.coeffs_in(v);
    let mut b = pb.coeffs_in(v);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return MultiPoly::one(n);
        }
        a = b;
        let divisor = &g * &h.pow(delta);
        b = div_all(&r, &divisor);
        g = a.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).div_exact(&h.pow(d - 1)).expect("exact"),
        };
    }
    let bp = MultiPoly::from_coeffs_in(n, v, &b);
    let c = var_content(&bp, v);
    bp.div_exact(&c).expect("content divides").canonical()
}

/// Returns `d` (canonical) when `d` divides `f`, checked only when degrees allow.
fn try_divides(d: &MultiPoly, f: &MultiPoly, v: usize) -> Option<MultiPoly> {
    if d.degree(v) > f.degree(v) || d.num_terms() > f.num_terms() {
        return None;
    }
    f.div_exact(d).map(|_| d.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }
    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, v)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let n = 2;
        let f = &x(n, 0).pow(2) - &x(n, 1).pow(2);
        let g = &x(n, 0) - &x(n, 1);
        let d = gcd_multi(&f, &g).unwrap();
        // canonical sign: leading grlex term is -y, so the unit flips
        assert_eq!(d, (&x(n, 0) - &x(n, 1)).canonical());
        let cf = f.div_exact(&d).unwrap();
        let cg = g.div_exact(&d).unwrap();
        assert!(gcd_multi(&cf, &cg).unwrap().is_constant());
    }

    #[test]
    fn gcd_with_itself_is_normalization() {
        let n = 2;
        let f = &c(n, -6) * &(&(&x(n, 0) * &x(n, 1)) + &c(n, 1));
        assert_eq!(gcd_multi(&f, &f).unwrap(), f.canonical());
        assert!(gcd_multi(&MultiPoly::zero(n), &MultiPoly::zero(n)).is_err());
    }

    #[test]
    fn content_and_primitive_part() {
        let n = 2;
        let f = &(&c(n, 2) * &x(n, 0).pow(2)) + &c(n, 4);
        assert_eq!(content(&f, 0).unwrap(), c(n, 2));
        let g = &(&x(n, 1) * &x(n, 0).pow(2)) + &x(n, 1).pow(2);
        assert_eq!(primitive_part(&g, 0).unwrap(), &x(n, 0).pow(2) + &x(n, 1));
        assert_eq!(content(&x(n, 0).pow(2), 0).unwrap(), c(n, 1));
    }

    #[test]
    fn trivariate_common_factor() {
        let n = 3;
        let h = &(&(&x(n, 0) * &x(n, 2)) + &x(n, 1).pow(2)) - &c(n, 3);
        let f = &h * &(&x(n, 2).pow(2) + &x(n, 0));
        let g = &h * &(&(&x(n, 1) * &x(n, 2)) - &c(n, 7));
        assert_eq!(gcd_multi(&f, &g).unwrap(), h.canonical());
    }

    #[test]
    fn pseudo_remainder_identity() {
        let n = 2;
        let a = (&x(n, 1).pow(3) + &(&x(n, 0) * &x(n, 1))).coeffs_in(1);
        let b = (&(&c(n, 2) * &x(n, 0) * &x(n, 1)) + &c(n, 1)).coeffs_in(1);
        let r = prem(&a, &b);
        assert!(r.len() < b.len());
    }
}
