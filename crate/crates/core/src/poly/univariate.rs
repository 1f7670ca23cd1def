use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MultiPoly;

/// Dense univariate integer polynomial, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Divides out the positive content; the sign is kept.
    pub fn primitive(&self) -> UniPoly {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                return self.clone();
            }
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `sum c_k p^k q^(d-k)`: the value at `p/q` scaled by `q^d > 0`.
    fn homogeneous_value(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let mut it = self.coeffs.iter().rev();
        let mut acc = match it.next() {
            None => return BigInt::zero(),
            Some(c) => c.clone(),
        };
        if q.is_one() {
            for c in it {
                acc = acc * p + c;
            }
            return acc;
        }
        let mut qpow = BigInt::one();
        for c in it {
            qpow *= q;
            acc = acc * p + c * &qpow;
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.homogeneous_value(x.numer(), x.denom());
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let d = self.coeffs.len().saturating_sub(1);
        let v = self.homogeneous_value(x.numer(), x.denom());
        BigRational::new(v, num_traits::pow(x.denom().clone(), d))
    }

    /// Sign as `x -> +infinity`.
    pub fn sign_at_pos_infinity(&self) -> i32 {
        sign_of(&self.lc())
    }

    /// Sign as `x -> -infinity`.
    pub fn sign_at_neg_infinity(&self) -> i32 {
        let s = sign_of(&self.lc());
        if self.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn to_multi(&self, nvars: usize, var: usize) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// Reads a polynomial whose only variable (if any) is `x_{var+1}`.
    pub fn from_multi(f: &MultiPoly, var: usize) -> UniPoly {
        debug_assert!(f.vars_used().iter().all(|&v| v == var));
        let deg = f.degree(var).unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); if f.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in f.terms() {
            coeffs[e[var] as usize] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Squarefree part, primitive, with the sign of the leading coefficient kept positive.
    pub fn squarefree(&self) -> UniPoly {
        if self.is_constant() {
            return if self.is_zero() {
                self.clone()
            } else {
                UniPoly::from_i64(&[1])
            };
        }
        let m = self.to_multi(1, 0);
        UniPoly::from_multi(&super::sqrf(&m).expect("nonzero"), 0)
    }
}

pub(crate) fn sign_of(c: &BigInt) -> i32 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn evaluation_at_rationals() {
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        let u = UniPoly::from_i64(&[1, -3, 2]);
        assert_eq!(u.sign_at(&q(1, 2)), 0);
        assert_eq!(u.sign_at(&q(3, 4)), -1);
        assert_eq!(u.eval(&q(3, 1)), q(10, 1));
        assert_eq!(u.eval(&q(1, 3)), q(2, 9));
        assert_eq!(u.sign_at_neg_infinity(), 1);
    }

    #[test]
    fn squarefree_part() {
        // (x-1)^2 (x+2)
        let u = UniPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(u.squarefree(), UniPoly::from_i64(&[-2, 1, 1]));
    }
}
