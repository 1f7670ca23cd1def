//! Subset dynamic programming for `Hp` and `Np`, memoized in a shared table.

use std::collections::HashMap;
use std::sync::RwLock;

use super::bp_single;
use super::np::np_parts;
use crate::poly::{gcd_multi, product, MultiPoly, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Op {
    Hp,
    Np,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    op: Op,
    poly: MultiPoly,
    mask: u64,
    designated: Option<usize>,
}

/// Bitmask of a variable list.
pub fn mask_of(vars: &[usize]) -> u64 {
    vars.iter().fold(0, |m, &v| {
        assert!(v < 64, "at most 64 variables");
        m | (1u64 << v)
    })
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1u64 << i) != 0)
}

/// Concurrent memo table for `Hp(f, [y])` and the designated variants.
/// Values depend only on the polynomial and the variable subset, so racing
/// writers store identical entries.
#[derive(Default)]
pub struct HpCache {
    table: RwLock<HashMap<Key, MultiPoly>>,
}

impl HpCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Hp(f, vars)`; the empty set gives `f` in canonical form.
    pub fn hp(&self, f: &MultiPoly, vars: &[usize]) -> Result<MultiPoly, PolyError> {
        self.full(Op::Hp, f, mask_of(vars))
    }

    /// `Hp(f, vars, y) = Bp(Hp(f, vars \ {y}), y)`.
    pub fn hp_designated(
        &self,
        f: &MultiPoly,
        vars: &[usize],
        y: usize,
    ) -> Result<MultiPoly, PolyError> {
        let mask = mask_of(vars);
        assert!(
            mask & (1 << y) != 0,
            "designated variable must belong to the set"
        );
        self.designated(Op::Hp, f, mask, y)
    }

    fn get(&self, key: &Key) -> Option<MultiPoly> {
        self.table.read().expect("cache lock").get(key).cloned()
    }

    fn put(&self, key: Key, value: MultiPoly) {
        self.table.write().expect("cache lock").insert(key, value);
    }

    pub(crate) fn full(&self, op: Op, f: &MultiPoly, mask: u64) -> Result<MultiPoly, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if mask == 0 {
            return Ok(f.canonical());
        }
        let key = Key {
            op,
            poly: f.clone(),
            mask,
            designated: None,
        };
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let value = if op == Op::Np && mask.count_ones() == 1 {
            np_parts(f, mask.trailing_zeros() as usize)?.np2
        } else {
            let mut g: Option<MultiPoly> = None;
            for y in bits(mask) {
                let d = self.designated(op, f, mask, y)?;
                let next = match g {
                    None => d,
                    Some(prev) => gcd_multi(&prev, &d)?,
                };
                let done = next.is_constant();
                g = Some(next);
                if done {
                    break;
                }
            }
            g.expect("nonempty mask").canonical()
        };
        self.put(key, value.clone());
        Ok(value)
    }

    pub(crate) fn designated(
        &self,
        op: Op,
        f: &MultiPoly,
        mask: u64,
        y: usize,
    ) -> Result<MultiPoly, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let key = Key {
            op,
            poly: f.clone(),
            mask,
            designated: Some(y),
        };
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let rest = mask & !(1u64 << y);
        let value = if op == Op::Np && rest == 0 {
            let parts = np_parts(f, y)?;
            product(f.nvars(), &parts.np1).canonical()
        } else {
            bp_single(&self.full(op, f, rest)?, y)?.canonical()
        };
        self.put(key, value.clone());
        Ok(value)
    }
}

/// `Hp(f, vars)` with a private cache.
pub fn hp(f: &MultiPoly, vars: &[usize]) -> Result<MultiPoly, PolyError> {
    HpCache::new().hp(f, vars)
}

/// `Hp(f, vars, y)` with a private cache.
pub fn hp_designated(f: &MultiPoly, vars: &[usize], y: usize) -> Result<MultiPoly, PolyError> {
    HpCache::new().hp_designated(f, vars, y)
}

/// Direct recursion on the definition, no memoization (reference implementation).
pub fn hp_uncached(f: &MultiPoly, vars: &[usize]) -> Result<MultiPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if vars.is_empty() {
        return Ok(f.canonical());
    }
    let mut g: Option<MultiPoly> = None;
    for (k, &y) in vars.iter().enumerate() {
        let rest: Vec<usize> = vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, &v)| v)
            .collect();
        let d = bp_single(&hp_uncached(f, &rest)?, y)?.canonical();
        g = Some(match g {
            None => d,
            Some(prev) => gcd_multi(&prev, &d)?,
        });
    }
    Ok(g.expect("nonempty").canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::bp_chain;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }
    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, v)
    }

    #[test]
    fn single_variable_is_brown() {
        let n = 2;
        let f = &(&x(n, 0).pow(2) + &x(n, 1).pow(2)) - &c(n, 1);
        assert_eq!(hp(&f, &[1]).unwrap(), bp_single(&f, 1).unwrap());
        assert_eq!(hp(&f, &[]).unwrap(), f);
    }

    #[test]
    fn gcd_of_both_orders_divides_each() {
        let n = 3;
        let f = &(&(&x(n, 0) * &x(n, 2).pow(2)) + &(&x(n, 1).pow(2) * &x(n, 2)))
            - &(&x(n, 1) * &x(n, 0));
        let h = hp(&f, &[2, 1]).unwrap();
        for order in [[2usize, 1], [1, 2]] {
            assert!(h.divides(&bp_chain(&f, &order).unwrap()));
        }
        assert_eq!(h, hp_uncached(&f, &[2, 1]).unwrap());
        let cache = HpCache::new();
        assert_eq!(cache.hp(&f, &[1, 2]).unwrap(), h);
        assert!(!cache.is_empty());
    }
}
