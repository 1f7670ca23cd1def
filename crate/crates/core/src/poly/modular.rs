//! Degree bounds for gcds from univariate images modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::MultiPoly;

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    r
}

fn reduce(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P))
        .to_u64()
        .expect("reduced below P")
}

/// Coefficients in `x_{v+1}` of `f` with every other variable set to `point`, mod P.
fn image(f: &MultiPoly, v: usize, point: &[u64]) -> Vec<u64> {
    let d = f.degree(v).unwrap_or(0) as usize;
    let mut out = vec![0u64; d + 1];
    for (e, c) in f.terms() {
        let mut t = reduce(c);
        for (i, &k) in e.iter().enumerate() {
            if i != v {
                for _ in 0..k {
                    t = mul(t, point[i]);
                }
            }
        }
        let slot = &mut out[e[v] as usize];
        *slot = (*slot + t) % P;
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the gcd of two nonzero univariate polynomials over Z/P.
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let db = b.len() - 1;
        let il = inv(b[db]);
        while a.len() > db && !a.is_empty() {
            let k = a.len() - 1 - db;
            let q = mul(*a.last().expect("nonempty"), il);
            for (j, bj) in b.iter().enumerate() {
                a[j + k] = sub(a[j + k], mul(q, *bj));
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bounds on `deg_{x_{v+1}} gcd(f, g)` for every variable (nonzero inputs).
pub(crate) fn gcd_degree_bounds(f: &MultiPoly, g: &MultiPoly) -> Vec<u32> {
    let n = f.nvars();
    let mut seed = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        seed = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = seed;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        (z ^ (z >> 31)) % P
    };
    (0..n)
        .map(|v| {
            let (df, dg) = (f.degree(v).unwrap_or(0), g.degree(v).unwrap_or(0));
            if df == 0 || dg == 0 {
                return 0;
            }
            for _ in 0..4 {
                let point: Vec<u64> = (0..n).map(|_| next()).collect();
                let a = image(f, v, &point);
                let b = image(g, v, &point);
                // degrees must survive so the image of the gcd keeps its degree
                if a[df as usize] != 0 && b[dg as usize] != 0 {
                    return gcd_degree(a, b) as u32;
                }
            }
            df.min(dg)
        })
        .collect()
}
