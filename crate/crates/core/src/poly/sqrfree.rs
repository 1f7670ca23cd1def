//! Squarefree decomposition (Yun) and coprime refinement.

use num_bigint::{BigInt, Sign};

use super::gcd::{gcd_canonical, var_content};
use super::{MultiPoly, PolyError};

/// `f = sign * content * prod(p^k)` with every `p` canonical, squarefree and
/// the parts pairwise coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrfParts {
    pub sign: i32,
    pub content: BigInt,
    pub factors: Vec<(MultiPoly, u32)>,
}

impl SqrfParts {
    /// Parts of odd multiplicity.
    pub fn odd_parts(&self) -> Vec<MultiPoly> {
        self.factors
            .iter()
            .filter(|(_, k)| k % 2 == 1)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Parts of even multiplicity.
    pub fn even_parts(&self) -> Vec<MultiPoly> {
        self.factors
            .iter()
            .filter(|(_, k)| k % 2 == 0)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// `sign * prod(odd parts)`: same sign as the input wherever the even parts do not vanish.
    pub fn signed_odd_product(&self, nvars: usize) -> MultiPoly {
        let p = super::product(
            nvars,
            self.factors
                .iter()
                .filter(|(_, k)| k % 2 == 1)
                .map(|(p, _)| p),
        );
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }

    pub fn reconstruct(&self, nvars: usize) -> MultiPoly {
        let mut acc = MultiPoly::constant(nvars, self.content.clone());
        for (p, k) in &self.factors {
            acc = &acc * &p.pow(*k);
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }
}

/// Squarefree decomposition. Zero input is an error.
pub fn sqrf_parts(f: &MultiPoly) -> Result<SqrfParts, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let content = f.integer_content();
    let sign = if f.leading_coeff().sign() == Sign::Minus {
        -1
    } else {
        1
    };
    let mut factors = Vec::new();
    decompose(&f.canonical(), &mut factors);
    Ok(SqrfParts {
        sign,
        content,
        factors,
    })
}

/// Squarefree part: product of the distinct parts, 1 for constants.
pub fn sqrf(f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    let parts = sqrf_parts(f)?;
    Ok(super::product(
        f.nvars(),
        parts.factors.iter().map(|(p, _)| p),
    ))
}

fn decompose(f: &MultiPoly, out: &mut Vec<(MultiPoly, u32)>) {
    if f.is_constant() {
        return;
    }
    let n = f.nvars();
    let m = f.monomial_content();
    let mut f = f.clone();
    if m.iter().any(|&e| e > 0) {
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                out.push((MultiPoly::var(n, i), e));
            }
        }
        f = f.unshift(&m);
        if f.is_constant() {
            return;
        }
    }
    let v = f.level() - 1;
    let c = var_content(&f, v);
    if !c.is_one() {
        decompose(&c, out);
        f = f.div_exact(&c).expect("content divides");
    }
    yun(&f, v, out);
}

/// Yun's algorithm on a polynomial primitive in `x_{v+1}`.
fn yun(a: &MultiPoly, v: usize, out: &mut Vec<(MultiPoly, u32)>) {
    let b = a.derivative(v);
    let c = gcd_canonical(a, &b);
    let mut w = a.div_exact(&c).expect("gcd divides");
    let mut y = b.div_exact(&c).expect("gcd divides");
    let mut z = &y - &w.derivative(v);
    let mut i = 1u32;
    while w.degree(v).unwrap_or(0) > 0 {
        let g = if z.is_zero() {
            w.canonical()
        } else {
            gcd_canonical(&w, &z)
        };
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = w.div_exact(&g).expect("gcd divides");
        y = z.div_exact(&g).expect("gcd divides");
        z = &y - &w.derivative(v);
        i += 1;
    }
}

/// Refines nonconstant squarefree polynomials into a pairwise coprime list
/// generating the same radical. Constants and duplicates are dropped.
pub fn coprime_basis(polys: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        let mut rest = p.canonical();
        let mut next = Vec::with_capacity(basis.len() + 2);
        for b in basis.drain(..) {
            if rest.is_constant() {
                next.push(b);
                continue;
            }
            let g = gcd_canonical(&rest, &b);
            if g.is_constant() {
                next.push(b);
                continue;
            }
            let bq = b.div_exact(&g).expect("gcd divides");
            if !bq.is_constant() {
                next.push(bq.canonical());
            }
            rest = rest.div_exact(&g).expect("gcd divides");
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest.canonical());
        }
        basis = next;
    }
    basis
}

/// True when `f` has no repeated factor.
pub fn is_squarefree(f: &MultiPoly) -> bool {
    match sqrf_parts(f) {
        Ok(p) => p.factors.iter().all(|(_, k)| *k == 1),
        Err(_) => false,
    }
}
