//! Sparse multivariate polynomials over the integers.
//!
//! A [`MultiPoly`] lives in `Z[x_1, ..., x_n]` with a fixed variable count `n`.
//! Variables are addressed by zero-based index: index `0` is `x_1`, the
//! innermost variable (projected last), and index `n - 1` is the outermost.
//! Terms are stored in descending graded lexicographic order with `x_n` the
//! most significant variable, so equal polynomials are bit-identical.

mod gcd;
mod heugcd;
mod modgcd;
mod modular;
mod order;
mod resultant;
mod sqrfree;
mod univariate;

pub use gcd::{content, gcd_list, gcd_multi, primitive_part};
pub use order::VarOrder;
pub use resultant::{discriminant, resultant};
pub use sqrfree::{coprime_basis, is_squarefree, sqrf, sqrf_parts, SqrfParts};
pub use univariate::UniPoly;

pub(crate) use resultant::resultant_total;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by polynomial operations with a partial domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("variable x{} has degree {found}, at least {needed} required", .var + 1)]
    DegreeTooLow { var: usize, found: u32, needed: u32 },
    #[error("variable index {var} out of range for {nvars} variables")]
    VarOutOfRange { var: usize, nvars: usize },
}

/// Exponent vector of a term; `exps[i]` is the power of `x_{i+1}`.
pub type Exponents = Vec<u32>;

/// Graded lexicographic comparison, `x_n` most significant.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

#[derive(Clone, PartialEq, Eq)]
struct GrlexKey(Exponents);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Z[x_1, ..., x_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    // descending grlex, no zero coefficients, every exponent vector has length nvars
    terms: Vec<(Exponents, BigInt)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(vec![0; nvars], c)],
        }
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly {
            nvars,
            terms: vec![(e, BigInt::one())],
        }
    }

    pub fn monomial(exps: Exponents, c: impl Into<BigInt>) -> Self {
        let nvars = exps.len();
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(exps, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms; like terms are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Exponents, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| grlex_cmp(&b.0, &a.0));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> &[(Exponents, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map_or(false, |c| c.is_one())
    }

    /// The value of a constant polynomial (`None` when nonconstant; `Some(0)` for zero).
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient of the grlex-leading term (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn leading_exponents(&self) -> Option<&[u32]> {
        self.terms.first().map(|t| t.0.as_slice())
    }

    /// Degree in `x_{i+1}`; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self, i: usize) -> Option<u32> {
        self.check_var(i);
        self.terms.iter().map(|t| t.0[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.iter().sum()).max()
    }

    /// Largest `j` (one-based) with positive degree in `x_j`; 0 for constants.
    pub fn level(&self) -> usize {
        (0..self.nvars)
            .rev()
            .find(|&i| self.uses_var(i))
            .map_or(0, |i| i + 1)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0[i] > 0)
    }

    /// Indices of the variables that occur, ascending.
    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.uses_var(i)).collect()
    }

    fn check_var(&self, i: usize) {
        assert!(
            i < self.nvars,
            "variable index {i} out of range for {} variables",
            self.nvars
        );
    }

    /// Coefficients with respect to `x_{i+1}`: entry `k` multiplies `x_{i+1}^k`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly> {
        self.check_var(i);
        let deg = match self.degree(i) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut buckets: Vec<Vec<(Exponents, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut e2 = e.clone();
            e2[i] = 0;
            buckets[k].push((e2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| MultiPoly {
                nvars: self.nvars,
                terms: ts,
            })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(nvars: usize, i: usize, coeffs: &[MultiPoly]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                debug_assert_eq!(e[i], 0);
                let mut e2 = e.clone();
                e2[i] = k as u32;
                terms.push((e2, a.clone()));
            }
        }
        terms.sort_unstable_by(|a, b| grlex_cmp(&b.0, &a.0));
        MultiPoly { nvars, terms }
    }

    /// Leading coefficient with respect to `x_{i+1}`.
    pub fn lc(&self, i: usize) -> Result<MultiPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.coeffs_in(i).pop().expect("nonzero"))
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide each exactly.
    pub fn div_int_exact(&self, c: &BigInt) -> MultiPoly {
        if c.is_one() {
            return self.clone();
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    debug_assert!((a % c).is_zero());
                    (e.clone(), a / c)
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive over `Z` with a positive grlex-leading coefficient.
    pub fn canonical(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.integer_content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        self.div_int_exact(&g)
    }

    pub fn is_canonical(&self) -> bool {
        self.is_zero() || (self.terms[0].1.is_positive() && self.integer_content().is_one())
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        self.check_var(i);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * BigInt::from(e[i]))
            })
            .collect();
        // subtracting the same unit vector from every exponent keeps the order
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn shift(&self, exps: &[u32]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms (the largest monomial divisor).
    pub fn monomial_content(&self) -> Exponents {
        let mut m = match self.terms.first() {
            None => return vec![0; self.nvars],
            Some(t) => t.0.clone(),
        };
        for (e, _) in &self.terms[1..] {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    fn unshift(&self, exps: &[u32]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(c) = d.constant_value() {
            if self.terms.iter().all(|(_, a)| (a % &c).is_zero()) {
                return Some(self.div_int_exact(&c));
            }
            return None;
        }
        for i in 0..self.nvars {
            if d.degree(i) > self.degree(i) {
                return None;
            }
        }
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if e.iter().zip(de).any(|(a, b)| a < b) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((e.iter().zip(de).map(|(a, b)| a - b).collect(), q));
            }
            return Some(MultiPoly {
                nvars: self.nvars,
                terms,
            });
        }
        let (de, dc) = &d.terms[0];
        let mut rem: BTreeMap<GrlexKey, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| (GrlexKey(e.clone()), c.clone()))
            .collect();
        let mut quot: Vec<(Exponents, BigInt)> = Vec::new();
        while let Some((key, c)) = rem.pop_last() {
            let e = key.0;
            if e.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, r) = c.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qe: Exponents = e.iter().zip(de).map(|(a, b)| a - b).collect();
            for (te, tc) in &d.terms[1..] {
                let ne: Exponents = te.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let k = GrlexKey(ne);
                let delta = tc * &qc;
                match rem.get_mut(&k) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&k);
                        }
                    }
                    None => {
                        rem.insert(k, -delta);
                    }
                }
            }
            quot.push((qe, qc));
        }
        // quotient terms come out in descending order
        Some(MultiPoly {
            nvars: self.nvars,
            terms: quot,
        })
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Substitutes rationals for some variables and clears denominators.
    ///
    /// Returns `(p, s)` with `s > 0` and `p = s * f|assignment`, so `p` has
    /// integer coefficients. The substituted variables no longer occur in `p`.
    pub fn substitute(&self, assignment: &[Option<BigRational>]) -> (MultiPoly, BigInt) {
        assert_eq!(assignment.len(), self.nvars, "assignment length mismatch");
        let assigned: Vec<usize> = (0..self.nvars)
            .filter(|&i| assignment[i].is_some())
            .collect();
        if assigned.is_empty() || self.is_zero() {
            return (self.clone(), BigInt::one());
        }
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.degree(i).unwrap_or(0))
            .collect();
        let mut powers = PowerCache::new(assignment, &maxdeg);
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            let mut ne = e.clone();
            for &i in &assigned {
                v *= powers.scaled(i, e[i]);
                ne[i] = 0;
            }
            *acc.entry(ne).or_insert_with(BigInt::zero) += v;
        }
        let p = Self::from_map(self.nvars, acc);
        // p currently carries the factor prod q_i^{maxdeg_i}; strip the common part
        let mut scale = BigInt::one();
        for &i in &assigned {
            scale *= powers.denominator_power(i, maxdeg[i]);
        }
        let g = p.integer_content().gcd(&scale);
        if g.is_zero() {
            return (p, BigInt::one());
        }
        (p.div_int_exact(&g), scale / g)
    }

    /// Exact value at a point (all variables assigned).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let assignment: Vec<Option<BigRational>> = point.iter().cloned().map(Some).collect();
        let (p, s) = self.substitute(&assignment);
        let v = p.constant_value().expect("all variables substituted");
        BigRational::new(v, s)
    }

    /// Sign of the exact value at a point: -1, 0 or 1.
    pub fn sign_at(&self, point: &[BigRational]) -> i32 {
        let v = self.eval(point);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Specializes `x_1..x_k` at `prefix` (with `k = prefix.len()`) and views
    /// the result as univariate in `x_{k+1}`. Requires `level() <= k + 1`.
    pub fn specialize(&self, prefix: &[BigRational]) -> UniPoly {
        let k = prefix.len();
        assert!(k < self.nvars, "prefix must leave a free variable");
        debug_assert!(
            self.level() <= k + 1,
            "polynomial involves variables beyond x{}",
            k + 1
        );
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut assignment: Vec<Option<BigRational>> = vec![None; self.nvars];
        for (slot, v) in assignment.iter_mut().zip(prefix) {
            *slot = Some(v.clone());
        }
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.degree(i).unwrap_or(0))
            .collect();
        let mut powers = PowerCache::new(&assignment, &maxdeg);
        let deg = maxdeg[k] as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..k {
                if maxdeg[i] > 0 {
                    v *= powers.scaled(i, e[i]);
                }
            }
            coeffs[e[k] as usize] += v;
        }
        UniPoly::new(coeffs).primitive()
    }

    /// Re-embeds into `new_nvars` variables; variable `i` moves to `map[i]`.
    /// Variables mapped to `None` must not occur.
    pub fn remap(&self, new_nvars: usize, map: &[Option<usize>]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; new_nvars];
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    let j = map[i].expect("remap drops a variable that occurs");
                    ne[j] += x;
                }
            }
            (ne, c.clone())
        });
        MultiPoly::from_terms(new_nvars, terms)
    }

    /// Drops unused variables, keeping relative order. Returns the compacted
    /// polynomial and, for each new index, the old index it came from.
    pub fn compact(&self) -> (MultiPoly, Vec<usize>) {
        let used = self.vars_used();
        let mut map = vec![None; self.nvars];
        for (new, &old) in used.iter().enumerate() {
            map[old] = Some(new);
        }
        (self.remap(used.len(), &map), used)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names: Some(names),
        }
    }
}

struct PowerCache<'a> {
    assignment: &'a [Option<BigRational>],
    maxdeg: &'a [u32],
    // per variable: numerator^k * denominator^(maxdeg - k), indexed by k
    table: Vec<Vec<Option<BigInt>>>,
}

impl<'a> PowerCache<'a> {
    fn new(assignment: &'a [Option<BigRational>], maxdeg: &'a [u32]) -> Self {
        let table = maxdeg.iter().map(|&d| vec![None; d as usize + 1]).collect();
        PowerCache {
            assignment,
            maxdeg,
            table,
        }
    }

    fn scaled(&mut self, i: usize, k: u32) -> BigInt {
        if let Some(v) = &self.table[i][k as usize] {
            return v.clone();
        }
        let r = self.assignment[i].as_ref().expect("assigned variable");
        let d = self.maxdeg[i];
        let v = num_traits::pow(r.numer().clone(), k as usize)
            * num_traits::pow(r.denom().clone(), (d - k) as usize);
        self.table[i][k as usize] = Some(v.clone());
        v
    }

    fn denominator_power(&self, i: usize, d: u32) -> BigInt {
        let r = self.assignment[i].as_ref().expect("assigned variable");
        num_traits::pow(r.denom().clone(), d as usize)
    }
}

fn merge_add(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    assert_eq!(a.nvars, b.nvars, "variable count mismatch");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        match grlex_cmp(&a.terms[i].0, &b.terms[j].0) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (e, c) = &b.terms[j];
                out.push((e.clone(), if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a.terms[i].1 - &b.terms[j].1
                } else {
                    &a.terms[i].1 + &b.terms[j].1
                };
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(e, c)| (e.clone(), if negate_b { -c } else { c.clone() })),
    );
    MultiPoly {
        nvars: a.nvars,
        terms: out,
    }
}

fn mul_polys(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars, b.nvars, "variable count mismatch");
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero(a.nvars);
    }
    let (small, large) = if a.terms.len() <= b.terms.len() {
        (a, b)
    } else {
        (b, a)
    };
    if small.terms.len() == 1 {
        let (e, c) = &small.terms[0];
        // a monomial factor preserves grlex order
        return MultiPoly {
            nvars: a.nvars,
            terms: large
                .terms
                .iter()
                .map(|(f, d)| (f.iter().zip(e).map(|(x, y)| x + y).collect(), d * c))
                .collect(),
        };
    }
    let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(a.terms.len() * b.terms.len());
    for (ea, ca) in &small.terms {
        for (eb, cb) in &large.terms {
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let p = ca * cb;
            match acc.get_mut(&e) {
                Some(v) => *v += p,
                None => {
                    acc.insert(e, p);
                }
            }
        }
    }
    MultiPoly::from_map(a.nvars, acc)
}

impl<'a, 'b> Add<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        merge_add(self, rhs, false)
    }
}

impl<'a, 'b> Sub<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        merge_add(self, rhs, true)
    }
}

impl<'a, 'b> Mul<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        mul_polys(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Product of a list of polynomials (`1` for the empty list).
pub fn product<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    polys
        .into_iter()
        .fold(MultiPoly::one(nvars), |acc, p| &acc * p)
}

pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: Option<&'a [String]>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in p.terms.iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match self.names {
                    Some(ns) => write!(f, "{}", ns[i])?,
                    None => write!(f, "x{}", i + 1)?,
                }
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay {
            poly: self,
            names: None,
        }
        .fmt(f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
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
    fn ring_arithmetic() {
        let n = 2;
        let (xx, yy) = (x(n, 0), x(n, 1));
        assert_eq!(
            &(&xx + &c(n, 1)) * &(&xx - &c(n, 1)),
            &(&xx * &xx) - &c(n, 1)
        );
        assert_eq!(&xx + &MultiPoly::zero(n), xx);
        let sq = (&xx + &yy).pow(2);
        let expected = &(&(&xx * &xx) + &(&c(n, 2) * &(&xx * &yy))) + &(&yy * &yy);
        assert_eq!(sq, expected);
        assert!((&sq - &sq).is_zero());
    }

    #[test]
    fn level_and_degree() {
        let n = 3;
        let f = &(&x(n, 0).pow(2) * &x(n, 2)) + &x(n, 0);
        assert_eq!(f.level(), 3);
        assert_eq!(c(n, 7).level(), 0);
        assert_eq!(f.degree(1), Some(0));
        assert_eq!(MultiPoly::zero(n).degree(0), None);
    }

    #[test]
    fn leading_coefficient_in_variable() {
        let n = 2;
        // 3x^2 y - y in y
        let f = &(&c(n, 3) * &(&x(n, 0).pow(2) * &x(n, 1))) - &x(n, 1);
        assert_eq!(f.lc(1).unwrap(), &(&c(n, 3) * &x(n, 0).pow(2)) - &c(n, 1));
        assert_eq!(MultiPoly::zero(n).lc(0), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn derivative_cases() {
        let n = 2;
        assert_eq!(x(n, 0).pow(3).derivative(0), &c(n, 3) * &x(n, 0).pow(2));
        assert!(x(n, 1).derivative(0).is_zero());
        assert_eq!((&x(n, 0).pow(2) * &x(n, 1)).derivative(1), x(n, 0).pow(2));
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let a = &x(n, 0) - &x(n, 1);
        let b = &(&x(n, 0) + &x(n, 1)) + &c(n, 3);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&(&a + &c(n, 1))), None);
        assert_eq!(c(n, 6).div_exact(&c(n, 4)), None);
    }

    #[test]
    fn substitution_clears_denominators() {
        let n = 2;
        let f = &x(n, 0).pow(2) + &x(n, 1);
        let half = BigRational::new(1.into(), 2.into());
        let (p, s) = f.substitute(&[Some(half), None]);
        assert_eq!(p, &(&c(n, 4) * &x(n, 1)) + &c(n, 1));
        assert_eq!(s, BigInt::from(4));
        let (q, s) = f.substitute(&[None, None]);
        assert_eq!((q, s), (f.clone(), BigInt::one()));
    }

    #[test]
    fn canonical_form() {
        let n = 1;
        let f = &c(n, -4) * &(&x(n, 0) - &c(n, 2));
        assert_eq!(f.canonical(), &x(n, 0) - &c(n, 2));
        assert!(f.canonical().is_canonical());
    }

    #[test]
    fn specialize_to_univariate() {
        let n = 2;
        // x^2 + y at x = 1/2  -> y + 1/4, primitive 4y + 1
        let f = &x(n, 0).pow(2) + &x(n, 1);
        let u = f.specialize(&[BigRational::new(1.into(), 2.into())]);
        assert_eq!(u.coeffs(), &[BigInt::from(1), BigInt::from(4)]);
    }

    #[test]
    fn compact_drops_unused() {
        let f = &x(3, 0) * &x(3, 2);
        let (g, used) = f.compact();
        assert_eq!(used, vec![0, 2]);
        assert_eq!(g, &x(2, 0) * &x(2, 1));
    }
}
