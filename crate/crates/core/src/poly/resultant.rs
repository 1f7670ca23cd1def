use num_traits::One;

use super::gcd::{div_all, prem};
use super::{MultiPoly, PolyError};

/// Sylvester resultant with respect to `x_{i+1}`. Both inputs need positive degree there.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, i: usize) -> Result<MultiPoly, PolyError> {
    for p in [f, g] {
        match p.degree(i) {
            None => return Err(PolyError::ZeroPolynomial),
            Some(0) => {
                return Err(PolyError::DegreeTooLow {
                    var: i,
                    found: 0,
                    needed: 1,
                })
            }
            Some(_) => {}
        }
    }
    Ok(resultant_total(f, g, i))
}

/// Resultant extended to every input: zero if either input is zero,
/// `c^deg` against a polynomial `c` free of the variable.
pub(crate) fn resultant_total(f: &MultiPoly, g: &MultiPoly, i: usize) -> MultiPoly {
    let n = f.nvars();
    if f.is_zero() || g.is_zero() {
        return MultiPoly::zero(n);
    }
    let da = f.degree(i).unwrap_or(0);
    let db = g.degree(i).unwrap_or(0);
    match (da, db) {
        (0, 0) => return MultiPoly::one(n),
        (_, 0) => return g.pow(da),
        (0, _) => return f.pow(db),
        _ => {}
    }
    let ca = f.integer_content();
    let cb = g.integer_content();
    let t = num_traits::pow(ca.clone(), db as usize) * num_traits::pow(cb.clone(), da as usize);
    let mut a = f.div_int_exact(&ca).coeffs_in(i);
    let mut b = g.div_int_exact(&cb).coeffs_in(i);
    let mut negate = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = !negate;
        }
    }
    let mut gg = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let deg_a = a.len() - 1;
        let deg_b = b.len() - 1;
        let delta = (deg_a - deg_b) as u32;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return MultiPoly::zero(n);
        }
        let divisor = &gg * &h.pow(delta);
        b = div_all(&r, &divisor);
        gg = a.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => gg.pow(d).div_exact(&h.pow(d - 1)).expect("exact"),
        };
        if b.len() == 1 {
            break;
        }
    }
    let deg_a = (a.len() - 1) as u32;
    let lb = &b[0];
    let mut res = if deg_a == 1 {
        lb.clone()
    } else {
        lb.pow(deg_a).div_exact(&h.pow(deg_a - 1)).expect("exact")
    };
    if !t.is_one() {
        res = res.scale(&t);
    }
    if negate {
        -res
    } else {
        res
    }
}

/// Discriminant with respect to `x_{i+1}`: `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
/// Defined as 1 for polynomials linear in the variable.
pub fn discriminant(f: &MultiPoly, i: usize) -> Result<MultiPoly, PolyError> {
    let d = match f.degree(i) {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => {
            return Err(PolyError::DegreeTooLow {
                var: i,
                found: 0,
                needed: 1,
            })
        }
        Some(d) => d,
    };
    let n = f.nvars();
    if d == 1 {
        return Ok(MultiPoly::one(n));
    }
    let r = resultant_total(f, &f.derivative(i), i);
    let lc = f.lc(i)?;
    let q = r
        .div_exact(&lc)
        .expect("leading coefficient divides Res(f, f')");
    Ok(if (d as u64 * (d as u64 - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    })
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
    fn circle_and_line() {
        // Res(x^2 + y^2 - 1, x - y, x) = 2y^2 - 1
        let n = 2;
        let f = &(&x(n, 0).pow(2) + &x(n, 1).pow(2)) - &c(n, 1);
        let g = &x(n, 0) - &x(n, 1);
        let r = resultant(&f, &g, 0).unwrap();
        assert_eq!(r, &(&c(n, 2) * &x(n, 1).pow(2)) - &c(n, 1));
    }

    #[test]
    fn linear_pair() {
        // Res(x - a, x - b, x) = a - b up to sign
        let n = 3;
        let r = resultant(&(&x(n, 0) - &x(n, 1)), &(&x(n, 0) - &x(n, 2)), 0).unwrap();
        let d = &x(n, 1) - &x(n, 2);
        assert!(r == d || r == -&d);
    }

    #[test]
    fn degree_zero_rejected() {
        let n = 2;
        assert!(matches!(
            resultant(&x(n, 1), &x(n, 0), 0),
            Err(PolyError::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn quadratic_discriminants() {
        // a x^2 + b x + c with x = x4, a = x1, b = x2, c = x3
        let n = 4;
        let (a, b, cc, xx) = (x(n, 0), x(n, 1), x(n, 2), x(n, 3));
        let f = &(&(&a * &xx.pow(2)) + &(&b * &xx)) + &cc;
        let expected = &b.pow(2) - &(&c(n, 4) * &(&a * &cc));
        assert_eq!(discriminant(&f, 3).unwrap(), expected);
        // a x^2 + b -> -4ab
        let g = &(&a * &xx.pow(2)) + &b;
        assert_eq!(discriminant(&g, 3).unwrap(), &c(n, -4) * &(&a * &b));
        // x^2 + y^2 - 1 in x -> -4(y^2 - 1)
        let m = 2;
        let h = &(&x(m, 0).pow(2) + &x(m, 1).pow(2)) - &c(m, 1);
        assert_eq!(
            discriminant(&h, 0).unwrap(),
            &c(m, -4) * &(&x(m, 1).pow(2) - &c(m, 1))
        );
        assert_eq!(discriminant(&x(m, 0), 0).unwrap(), c(m, 1));
    }
}
