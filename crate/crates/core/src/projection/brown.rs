use crate::poly::{coprime_basis, gcd_multi, resultant_total, sqrf, MultiPoly, PolyError};

/// Brown's projection of one polynomial along `x_{i+1}`: the resultant of the
/// squarefree part and its derivative when the variable occurs, `f` itself otherwise.
pub fn bp_single(f: &MultiPoly, i: usize) -> Result<MultiPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if i >= f.nvars() {
        return Err(PolyError::VarOutOfRange {
            var: i,
            nvars: f.nvars(),
        });
    }
    if !f.uses_var(i) {
        return Ok(f.clone());
    }
    let s = sqrf(f)?;
    Ok(resultant_total(&s, &s.derivative(i), i).canonical())
}

/// Set version: single projections and pairwise resultants of the members
/// involving `x_{i+1}`, other members passed through, constants dropped.
/// Members sharing a factor are first split into a coprime basis.
pub fn bp_set(polys: &[MultiPoly], i: usize) -> Result<Vec<MultiPoly>, PolyError> {
    let mut top = Vec::new();
    let mut out: Vec<MultiPoly> = Vec::new();
    for p in polys {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if p.is_constant() {
            continue;
        }
        if p.uses_var(i) {
            top.push(sqrf(p)?);
        } else {
            out.push(p.canonical());
        }
    }
    let shares = top.iter().enumerate().any(|(a, p)| {
        top[a + 1..]
            .iter()
            .any(|q| !gcd_multi(p, q).map(|g| g.is_constant()).unwrap_or(true))
    });
    if shares {
        let basis = coprime_basis(&top);
        out.extend(basis.iter().filter(|p| !p.uses_var(i)).cloned());
        top = basis.into_iter().filter(|p| p.uses_var(i)).collect();
    }
    for (a, p) in top.iter().enumerate() {
        out.push(bp_single(p, i)?);
        for q in &top[a + 1..] {
            out.push(resultant_total(p, q, i).canonical());
        }
    }
    let mut dedup: Vec<MultiPoly> = Vec::new();
    for p in out {
        if !p.is_constant() && !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    Ok(dedup)
}

/// Folds [`bp_single`] along `order` (first entry projected first).
pub fn bp_chain(f: &MultiPoly, order: &[usize]) -> Result<MultiPoly, PolyError> {
    let mut g = f.clone();
    for &i in order {
        g = bp_single(&g, i)?;
    }
    Ok(g)
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
    fn passes_through_absent_variable() {
        let n = 3;
        let f = &x(n, 0).pow(2) + &x(n, 1).pow(2);
        assert_eq!(bp_single(&f, 2).unwrap(), f);
        assert_eq!(bp_chain(&f, &[]).unwrap(), f);
    }

    #[test]
    fn linear_gives_leading_coefficient() {
        let n = 2;
        // x z - 1 in z: Res(xz - 1, x) = x
        let f = &(&x(n, 0) * &x(n, 1)) - &c(n, 1);
        assert_eq!(bp_single(&f, 1).unwrap(), x(n, 0));
    }

    #[test]
    fn set_projection() {
        let n = 2;
        let a = &(&x(n, 0) * &x(n, 1)) - &c(n, 1);
        let b = &x(n, 1) - &x(n, 0);
        let out = bp_set(&[a, b], 1).unwrap();
        assert!(out.contains(&x(n, 0)));
        assert!(out.contains(&(&x(n, 0).pow(2) - &c(n, 1)).canonical()));
        assert!(bp_set(&[c(n, 3)], 1).unwrap().is_empty());
    }
}
