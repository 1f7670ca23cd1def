//! Generators for the benchmark families used in tests and by the CLI.

use crate::parse::parse_poly;
use crate::poly::{MultiPoly, VarOrder};

pub const EX1: &str =
    "x^4 - 2*x^2*y^2 + 2*x^2*z^2 + y^4 - 2*y^2*z^2 + z^4 + 2*x^2 + 2*y^2 - 4*z^2 - 4";

/// The trivariate running example, order `z > y > x`.
pub fn ex1() -> (MultiPoly, VarOrder) {
    parse_poly(EX1, Some(&["z", "y", "x"])).expect("valid literal")
}

fn sq(n: usize, i: usize) -> MultiPoly {
    MultiPoly::var(n, i).pow(2)
}

/// `(sum x_i^2)^2 - 4 sum x_i^2 x_{i+1}^2` with cyclic indices, `n >= 2`.
pub fn f_family(n: usize) -> Option<MultiPoly> {
    if n < 2 {
        return None;
    }
    let s = (0..n).fold(MultiPoly::zero(n), |acc, i| &acc + &sq(n, i));
    let c = (0..n).fold(MultiPoly::zero(n), |acc, i| {
        &acc + &(&sq(n, i) * &sq(n, (i + 1) % n))
    });
    Some(&s.pow(2) - &c.scale(&4.into()))
}

/// `10^10 F(x_n) - x_1^4`: the F family minus a tiny quartic, scaled to integers.
pub fn g_family(n: usize) -> Option<MultiPoly> {
    let f = f_family(n)?;
    let ten10 = num_traits::pow(num_bigint::BigInt::from(10), 10);
    Some(&f.scale(&ten10) - &MultiPoly::var(n, 0).pow(4))
}

/// `(sum x_i^2)^2 - 2 sum_i x_i^2 sum_{j=1..m} x_{i+3j+1}^2` in `3m + 2`
/// variables, indices cyclic, `m >= 1`.
pub fn b_family(m: usize) -> Option<MultiPoly> {
    if m < 1 {
        return None;
    }
    let n = 3 * m + 2;
    let s = (0..n).fold(MultiPoly::zero(n), |acc, i| &acc + &sq(n, i));
    let mut c = MultiPoly::zero(n);
    for i in 0..n {
        let inner = (1..=m).fold(MultiPoly::zero(n), |acc, j| {
            &acc + &sq(n, (i + 3 * j + 1) % n)
        });
        c = &c + &(&sq(n, i) * &inner);
    }
    Some(&s.pow(2) - &c.scale(&2.into()))
}
