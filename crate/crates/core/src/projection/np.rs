//! The secondary/principal split `Np_1`, `Np_2` and the extended `Np` operator.

use super::cache::{mask_of, HpCache, Op};
use crate::poly::{coprime_basis, discriminant, product, sqrf, sqrf_parts, MultiPoly, PolyError};

/// `np1`: pairwise coprime parts of odd multiplicity in the leading coefficient
/// and discriminant. `np2`: product of the even-multiplicity parts sharing no
/// factor with `np1` (1 when there are none).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpParts {
    pub np1: Vec<MultiPoly>,
    pub np2: MultiPoly,
}

fn odd_even(f: &MultiPoly, i: usize) -> Result<(Vec<MultiPoly>, Vec<MultiPoly>), PolyError> {
    let s = sqrf(f)?;
    match s.degree(i) {
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
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for p in [s.lc(i)?, discriminant(&s, i)?] {
        let parts = sqrf_parts(&p)?;
        odd.extend(parts.odd_parts());
        even.extend(parts.even_parts());
    }
    Ok((odd, even))
}

/// Basis elements of `even` that share no factor with any odd part.
fn even_only(odd_basis: &[MultiPoly], even: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut all = odd_basis.to_vec();
    all.extend(even.iter().cloned());
    coprime_basis(&all)
        .into_iter()
        .filter(|b| !odd_basis.iter().any(|o| b.divides(o)))
        .filter(|b| even.iter().any(|e| b.divides(e)))
        .collect()
}

/// `Np_1(f, [x_{i+1}])` and `Np_2(f, [x_{i+1}])` of the squarefree part of `f`.
pub fn np_parts(f: &MultiPoly, i: usize) -> Result<NpParts, PolyError> {
    let (odd, even) = odd_even(f, i)?;
    let np1 = coprime_basis(&odd);
    let np2 = product(f.nvars(), &even_only(&np1, &even)).canonical();
    Ok(NpParts { np1, np2 })
}

/// Set version: `Np_1` is the union over members; each member contributes one
/// `Np_2` product with the `Np_1` factors removed.
pub fn np_parts_set(
    polys: &[MultiPoly],
    i: usize,
) -> Result<(Vec<MultiPoly>, Vec<MultiPoly>), PolyError> {
    let mut per = Vec::with_capacity(polys.len());
    let mut odd = Vec::new();
    for f in polys {
        let (o, e) = odd_even(f, i)?;
        odd.extend(o);
        per.push(e);
    }
    let np1 = coprime_basis(&odd);
    let mut np2 = Vec::new();
    for (f, e) in polys.iter().zip(&per) {
        let p = product(f.nvars(), &even_only(&np1, e)).canonical();
        if !np2.contains(&p) {
            np2.push(p);
        }
    }
    Ok((np1, np2))
}

/// `Np(f, vars)`: `Np_2` for one variable, otherwise the gcd of the designated variants.
pub fn np(f: &MultiPoly, vars: &[usize]) -> Result<MultiPoly, PolyError> {
    HpCache::new().full(Op::Np, f, mask_of(vars))
}

/// `Np(f, vars, y)`: the product of `Np_1` for one variable, otherwise
/// `Bp(Np(f, vars \ {y}), y)`.
pub fn np_designated(f: &MultiPoly, vars: &[usize], y: usize) -> Result<MultiPoly, PolyError> {
    HpCache::new().designated(Op::Np, f, mask_of(vars), y)
}

impl HpCache {
    pub fn np(&self, f: &MultiPoly, vars: &[usize]) -> Result<MultiPoly, PolyError> {
        self.full(Op::Np, f, mask_of(vars))
    }

    pub fn np_designated(
        &self,
        f: &MultiPoly,
        vars: &[usize],
        y: usize,
    ) -> Result<MultiPoly, PolyError> {
        self.designated(Op::Np, f, mask_of(vars), y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::bp_single;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }
    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, v)
    }

    #[test]
    fn a_x_squared_plus_b() {
        let n = 3;
        let f = &(&x(n, 0) * &x(n, 2).pow(2)) + &x(n, 1);
        let parts = np_parts(&f, 2).unwrap();
        assert_eq!(parts.np1.len(), 2);
        assert!(parts.np1.contains(&x(n, 0)) && parts.np1.contains(&x(n, 1)));
        assert_eq!(parts.np2, c(n, 1));
    }

    #[test]
    fn monic_square_minus_parameter() {
        let n = 2;
        let f = &x(n, 1).pow(2) - &x(n, 0);
        let parts = np_parts(&f, 1).unwrap();
        assert_eq!(parts.np1, vec![x(n, 0)]);
        assert_eq!(parts.np2, c(n, 1));
        assert_eq!(np(&f, &[1]).unwrap(), c(n, 1));
        assert_eq!(np_designated(&f, &[1], 1).unwrap(), x(n, 0));
    }

    #[test]
    fn even_part_survives() {
        // discriminant of x^2 - 2xy + y^2 - z^2 (in x) is 4 z^2
        let n = 3;
        let f = &(&(&x(n, 0).pow(2) - &(&c(n, 2) * &(&x(n, 0) * &x(n, 1)))) + &x(n, 1).pow(2))
            - &x(n, 2).pow(2);
        let parts = np_parts(&f, 0).unwrap();
        assert!(parts.np1.is_empty());
        assert_eq!(parts.np2, x(n, 2));
    }

    #[test]
    fn two_variable_unfolding() {
        let n = 3;
        let f = &(&(&x(n, 2).pow(2) * &x(n, 0)) + &(&x(n, 1).pow(2) * &x(n, 2)))
            - &(&x(n, 1) - &c(n, 3));
        let a = bp_single(&np(&f, &[1]).unwrap(), 2).unwrap();
        let b = bp_single(&np(&f, &[2]).unwrap(), 1).unwrap();
        let g = crate::poly::gcd_multi(&a, &b).unwrap();
        assert_eq!(np(&f, &[2, 1]).unwrap(), g);
        assert!(g.divides(&b));
    }
}
