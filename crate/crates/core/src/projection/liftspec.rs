use super::HpCache;
use crate::poly::{product, MultiPoly, PolyError};

/// Lift and guard polynomial for one level (1-based); both have level at most `level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftLevel {
    pub level: usize,
    pub lift: MultiPoly,
    pub guard: MultiPoly,
}

/// Polynomials consumed when lifting from level `base.level` to the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSpec {
    pub nvars: usize,
    /// The level below the first lifted one; its points come from outside.
    pub base: LiftLevel,
    /// Ascending levels `base.level + 1 ..= nvars`.
    pub levels: Vec<LiftLevel>,
}

impl LiftSpec {
    pub fn top_level(&self) -> usize {
        self.nvars
    }
}

/// Lifting chain for the reduced construction over `[x_n, ..., x_j]`.
///
/// Level `l >= j` lifts `Hp(f, [x_n..x_{l+1}])` guarded by
/// `Hp(f, [x_n..x_{l+1}], x_{l+1})` (level `n` uses `f` for both). The base
/// at level `j - 1` is `Hp(f, [x_n..x_j])`, guarded by the product of all
/// designated variants `Hp(f, [x_n..x_j], x_t)`, `t = j..n`.
pub fn hp_liftspec(cache: &HpCache, f: &MultiPoly, j: usize) -> Result<LiftSpec, PolyError> {
    let n = f.nvars();
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if j < 2 || j > n {
        return Err(PolyError::VarOutOfRange { var: j, nvars: n });
    }
    // zero-based indices of x_{l+1}..x_n
    let above = |l: usize| -> Vec<usize> { (l..n).collect() };
    let mut levels = Vec::with_capacity(n - j + 1);
    for l in j..=n {
        if l == n {
            levels.push(LiftLevel {
                level: n,
                lift: f.clone(),
                guard: f.clone(),
            });
        } else {
            let vars = above(l);
            levels.push(LiftLevel {
                level: l,
                lift: cache.hp(f, &vars)?,
                guard: cache.hp_designated(f, &vars, l)?,
            });
        }
    }
    let vars = above(j - 1);
    let mut guards: Vec<MultiPoly> = Vec::new();
    for &t in &vars {
        let g = cache.hp_designated(f, &vars, t)?;
        if !guards.contains(&g) {
            guards.push(g);
        }
    }
    let base = LiftLevel {
        level: j - 1,
        lift: cache.hp(f, &vars)?,
        guard: product(n, &guards),
    };
    Ok(LiftSpec {
        nvars: n,
        base,
        levels,
    })
}
