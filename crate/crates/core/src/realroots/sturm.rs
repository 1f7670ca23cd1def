//! Sturm sequences over the integers (pseudo-remainders with sign correction).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::UniPoly;

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term scaled by a positive constant.
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.primitive()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative().primitive());
    loop {
        let n = seq.len();
        let r = neg_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.primitive());
    }
    seq
}

/// `-c * rem(a, b)` for some constant `c > 0`.
fn neg_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let bc = b.coeffs();
    let db = bc.len() - 1;
    let lb = &bc[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lb * r - lr * x^(dr-db) * b, with |lb| keeping the sign
        let (m, flip) = if lb.is_negative() {
            (-lb.clone(), true)
        } else {
            (lb.clone(), false)
        };
        let lr = if flip { -lr } else { lr };
        for c in r.iter_mut() {
            *c *= &m;
        }
        for (j, bj) in bc.iter().enumerate() {
            r[j + dr - db] -= &lr * bj;
        }
        debug_assert!(r[dr].is_zero());
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    UniPoly::new(r.into_iter().map(|c| -c).collect())
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn variations_at(seq: &[UniPoly], x: Option<&BigRational>, upper: bool) -> usize {
    match x {
        Some(x) => variations(seq.iter().map(|p| p.sign_at(x))),
        None if upper => variations(seq.iter().map(|p| p.sign_at_pos_infinity())),
        None => variations(seq.iter().map(|p| p.sign_at_neg_infinity())),
    }
}

/// Number of distinct real roots in `(lo, hi]`; `None` means unbounded.
/// Zero polynomials report zero.
pub fn sturm_count(p: &UniPoly, lo: Option<&BigRational>, hi: Option<&BigRational>) -> usize {
    if p.is_zero() || p.is_constant() {
        return 0;
    }
    // the squarefree part keeps the endpoint convention valid at multiple roots
    let seq = sturm_sequence(&p.squarefree());
    let a = variations_at(&seq, lo, false);
    let b = variations_at(&seq, hi, true);
    a.saturating_sub(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_counts() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, Some(&r(-10)), Some(&r(10))), 2);
        assert_eq!(sturm_count(&p, Some(&r(0)), None), 1);
        assert_eq!(
            sturm_count(&UniPoly::from_i64(&[1, 0, 1]), Some(&r(-10)), Some(&r(10))),
            0
        );
        // (x - 1)^2 (x + 1): distinct roots only
        let q = UniPoly::from_i64(&[1, -1, -1, 1]);
        assert_eq!(sturm_count(&q, None, None), 2);
        // x^2 (x - 1) with the double root as left endpoint
        let d = UniPoly::from_i64(&[0, 0, -1, 1]);
        assert_eq!(sturm_count(&d, Some(&r(0)), Some(&r(2))), 1);
        assert_eq!(sturm_count(&d, Some(&r(-1)), Some(&r(0))), 1);
    }
}
