//! Property suites checked against independent oracles. Shared by the core
//! property tests and the acceptance report.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use hpcad::lifting::{hp_two, LiftOptions};
use hpcad::poly::{resultant, MultiPoly, UniPoly};
use hpcad::projection::{bp_chain, hp, hp_uncached};
use hpcad::psd::{psd_by_sample, psd_hp_two};
use hpcad::realroots::{isolate, sturm_count};

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn finish(
    r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Random nonzero polynomial in `n` variables, total degree at most `deg`.
pub fn poly(n: usize, deg: u32, terms: usize, coeff: i64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, n), -coeff..=coeff),
        1..=terms,
    )
    .prop_map(move |ts| {
        MultiPoly::from_terms(
            n,
            ts.into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= deg)
                .map(|(e, c)| (e, BigInt::from(c))),
        )
    })
    .prop_filter("nonzero", |p| !p.is_zero())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Fraction-free (Bareiss) determinant.
pub fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix determinant of two univariate polynomials of positive degree.
pub fn sylvester(f: &UniPoly, g: &UniPoly) -> BigInt {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, d, count) in [(f, m, n), (g, n, m)] {
        for r in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for (k, c) in p.coeffs().iter().enumerate() {
                row[r + d - k] = c.clone();
            }
            rows.push(row);
        }
    }
    det(rows)
}

/// Res(f, g, x_2) specialized at integer x_1 matches the Sylvester determinant
/// of the specialized pair whenever both leading coefficients survive.
pub fn resultant_vs_sylvester(cases: u32) -> Result<(), String> {
    let s = (poly(2, 4, 8, 9), poly(2, 4, 8, 9)).prop_filter("positive degree in x2", |(f, g)| {
        f.degree(1).unwrap_or(0) > 0 && g.degree(1).unwrap_or(0) > 0
    });
    finish(runner(cases).run(&s, |(f, g)| {
        let r = resultant(&f, &g, 1).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(!r.uses_var(1));
        let mut checked = 0;
        for a in -3i64..=3 {
            let fa = spec_x2(&f, a);
            let ga = spec_x2(&g, a);
            if fa.degree() != f.degree(1).map(|d| d as usize)
                || ga.degree() != g.degree(1).map(|d| d as usize)
            {
                continue;
            }
            let expected = sylvester(&fa, &ga);
            let got = r.eval(&[q(a), q(0)]);
            prop_assert_eq!(got, BigRational::from_integer(expected), "x1 = {}", a);
            checked += 1;
        }
        prop_assert!(checked > 0 || f.lc(1).unwrap().uses_var(0));
        Ok(())
    }))
}

/// `f(a, x2)` as a univariate polynomial in x2, not made primitive.
fn spec_x2(f: &MultiPoly, a: i64) -> UniPoly {
    let d = f.degree(1).unwrap_or(0) as usize;
    let mut c = vec![BigInt::zero(); d + 1];
    for (e, k) in f.terms() {
        c[e[1] as usize] += k * BigInt::from(a).pow(e[0]);
    }
    UniPoly::new(c)
}

fn uni(deg: usize) -> impl Strategy<Value = UniPoly> {
    let plain = prop::collection::vec(-20i64..=20, 2..=deg + 1).prop_map(|c| UniPoly::from_i64(&c));
    // repeated and rational roots: (b x - a)^2 times a random factor
    let repeated = (
        prop::collection::vec(-9i64..=9, 1..=deg - 1),
        -4i64..=4,
        1i64..=3,
    )
        .prop_map(|(c, a, b)| {
            let base = UniPoly::from_i64(&c).to_multi(1, 0);
            let lin = UniPoly::from_i64(&[-a, b]).to_multi(1, 0);
            UniPoly::from_multi(&(&base * &lin.pow(2)), 0)
        });
    prop_oneof![plain, repeated].prop_filter("positive degree", |p| p.degree().unwrap_or(0) > 0)
}

/// Isolating intervals agree with Sturm counts globally and one by one.
pub fn isolate_vs_sturm(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&uni(12), |p| {
        let roots = isolate(&p).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(roots.len(), sturm_count(&p, None, None));
        let ivs = roots.intervals();
        for w in ivs.windows(2) {
            prop_assert!(w[0].upper <= w[1].lower);
        }
        for iv in ivs {
            if iv.is_exact() {
                prop_assert_eq!(p.sign_at(&iv.lower), 0);
            } else {
                let at_upper = usize::from(p.sign_at(&iv.upper) == 0);
                prop_assert_eq!(
                    sturm_count(&p, Some(&iv.lower), Some(&iv.upper)) - at_upper,
                    1
                );
            }
        }
        Ok(())
    }))
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// `hp(f, S)` divides the Brown chain of every ordering of every subset `S`,
/// and the memoized value equals the literal recursive one.
pub fn hp_divides_chains(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&poly(3, 3, 6, 5), |f| {
        let subsets: [&[usize]; 7] = [&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]];
        for s in subsets {
            let h = hp(&f, s).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&h, &hp_uncached(&f, s).unwrap());
            for order in permutations(s) {
                let chain = bp_chain(&f, &order).unwrap();
                prop_assert!(
                    h.divides(&chain),
                    "hp({:?}) does not divide chain {:?}",
                    s,
                    order
                );
            }
        }
        Ok(())
    }))
}

/// Every strict sign that `f` takes on a 50 x 50 grid is taken at an HpTwo sample point.
pub fn sign_coverage(cases: u32) -> Result<(), String> {
    let s = poly(2, 6, 8, 9).prop_filter("both variables", |f| f.uses_var(0) && f.uses_var(1));
    finish(runner(cases).run(&s, |f| {
        let sample =
            hp_two(&f, &LiftOptions::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let signs: Vec<i32> = sample.points.iter().map(|p| f.sign_at(p)).collect();
        prop_assert!(signs.iter().all(|&s| s != 0));
        let (mut pos, mut neg) = (false, false);
        for i in 0..50i64 {
            for j in 0..50i64 {
                let pt = [
                    BigRational::new((i - 25).into(), 5.into()),
                    BigRational::new((j - 25).into(), 5.into()),
                ];
                match f.sign_at(&pt) {
                    1 => pos = true,
                    -1 => neg = true,
                    _ => {}
                }
            }
        }
        if pos {
            prop_assert!(signs.contains(&1), "positive region missed");
        }
        if neg {
            prop_assert!(signs.contains(&-1), "negative region missed");
        }
        Ok(())
    }))
}

/// Random trivariate inputs, half of them sums of squares with a perturbation.
fn psd_candidates() -> impl Strategy<Value = MultiPoly> {
    let raw = poly(3, 4, 6, 5);
    let sos = (
        poly(3, 2, 4, 3),
        poly(3, 2, 4, 3),
        poly(3, 4, 2, 2),
        0i64..=2,
    )
        .prop_map(|(a, b, e, k)| {
            let s = &a.pow(2) + &b.pow(2);
            match k {
                0 => s,
                1 => &s + &e,
                _ => &s - &e,
            }
        });
    prop_oneof![raw, sos].prop_filter("nonzero", |p| !p.is_zero())
}

/// The recursive test agrees with the full sample check; witnesses are exact.
pub fn psd_recursion_vs_sample(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&psd_candidates(), |f| {
        let a = psd_hp_two(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let b = psd_by_sample(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(a.verdict, b.verdict);
        for w in [a.witness, b.witness].into_iter().flatten() {
            prop_assert!(f.sign_at(&w) < 0);
        }
        Ok(())
    }))
}

/// Multiplying by a nonzero square does not change the verdict.
pub fn psd_square_factor(cases: u32) -> Result<(), String> {
    finish(
        runner(cases).run(&(psd_candidates(), poly(3, 2, 3, 4)), |(h, g)| {
            let f = &g.pow(2) * &h;
            let a = psd_hp_two(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let b = psd_hp_two(&h).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(a.verdict, b.verdict);
            if let Some(w) = a.witness {
                prop_assert!(f.sign_at(&w) < 0);
            }
            Ok(())
        }),
    )
}

#[test]
fn bareiss_small() {
    let m = |v: &[[i64; 3]; 3]| {
        v.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    };
    assert_eq!(det(m(&[[2, 0, 1], [1, 3, 2], [1, 1, 2]])), BigInt::from(6));
    assert_eq!(det(m(&[[2, 0, 1], [1, 3, 2], [1, 1, 1]])), BigInt::from(0));
    assert_eq!(det(m(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]])), BigInt::from(-1));
}
