//! Reduction of an arbitrary polynomial to a squarefree, signed odd part in
//! the variables it actually uses, and translation of witnesses back.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lifting::SamplePoint;
use crate::poly::{product, sqrf_parts, MultiPoly};

pub(crate) enum Prepared {
    Zero,
    /// No factor of odd multiplicity: the sign is constant off the zero set.
    EvenOnly {
        sign: i32,
    },
    /// `h = sign * prod(odd parts)` compacted; `map[k]` is the original index of `h`'s variable `k`.
    Core {
        h: MultiPoly,
        map: Vec<usize>,
    },
}

/// `f >= 0` everywhere iff `h >= 0` everywhere: a negative value of `h` on an
/// open set meets the complement of the even parts' zero set.
pub(crate) fn prepare(f: &MultiPoly) -> Prepared {
    if f.is_zero() {
        return Prepared::Zero;
    }
    let parts = sqrf_parts(f).expect("nonzero");
    let odd = parts.odd_parts();
    if odd.is_empty() {
        return Prepared::EvenOnly { sign: parts.sign };
    }
    let mut h = product(f.nvars(), &odd);
    if parts.sign < 0 {
        h = -h;
    }
    let (h, map) = h.compact();
    Prepared::Core { h, map }
}

pub(crate) fn embed(w: &[BigRational], map: &[usize], nvars: usize) -> SamplePoint {
    let mut out = vec![BigRational::zero(); nvars];
    for (k, &orig) in map.iter().enumerate() {
        out[orig] = w[k].clone();
    }
    out
}

/// Small perturbation directions tried around a witness: unit vectors, then
/// all-ones patterns with alternating signs.
fn directions(n: usize) -> Vec<Vec<i64>> {
    let mut dirs = Vec::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        dirs.push(v.clone());
        v[i] = -1;
        dirs.push(v);
    }
    dirs.push(vec![1; n]);
    dirs.push((0..n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect());
    dirs.push((0..n).map(|i| (i as i64 % 3) + 1).collect());
    dirs
}

/// A point near `w` where `f` is exactly negative. `w` is a point where the
/// odd part is negative, so such points fill a neighbourhood of `w`.
pub(crate) fn negative_near(f: &MultiPoly, w: SamplePoint) -> Option<SamplePoint> {
    if f.sign_at(&w) < 0 {
        return Some(w);
    }
    let n = w.len();
    let dirs = directions(n);
    let mut step = BigRational::one();
    for _ in 0..96 {
        step /= BigRational::from_integer(BigInt::from(2));
        for d in &dirs {
            let p: SamplePoint = w
                .iter()
                .zip(d)
                .map(|(x, &k)| x + &step * BigRational::from_integer(BigInt::from(k)))
                .collect();
            if f.sign_at(&p) < 0 {
                return Some(p);
            }
        }
    }
    None
}

/// A small integer point where `f` (nonzero) does not vanish.
pub(crate) fn nonzero_point(f: &MultiPoly) -> SamplePoint {
    let n = f.nvars();
    let d = f.total_degree().unwrap_or(0) as i64;
    // f is nonzero somewhere on {0..d}^n
    let mut idx = vec![0i64; n];
    loop {
        let p: SamplePoint = idx
            .iter()
            .map(|&k| BigRational::from_integer(BigInt::from(k)))
            .collect();
        if f.sign_at(&p) != 0 {
            return p;
        }
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] <= d {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        assert!(k < n, "nonzero polynomial vanishes on its degree grid");
    }
}
