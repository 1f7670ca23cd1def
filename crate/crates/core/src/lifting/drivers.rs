use super::engine::{lift, open_sp, LiftOptions};
use super::{LiftError, Method, OpenSample, SamplePoint};
use crate::poly::{product, MultiPoly};
use crate::projection::{bp_single, hp_liftspec, HpCache, LiftLevel};

fn nontrivial(f: &MultiPoly) -> Result<(), LiftError> {
    if f.is_zero() || f.is_constant() || f.nvars() == 0 {
        Err(LiftError::Trivial)
    } else {
        Ok(())
    }
}

fn finish(
    levels: &[LiftLevel],
    opts: &LiftOptions,
    method: Method,
) -> Result<OpenSample, LiftError> {
    let (points, counts) = lift(levels, vec![Vec::new()], opts)?;
    Ok(OpenSample {
        level: levels.len(),
        points,
        counts,
        method,
        strategy: opts.strategy,
    })
}

/// Open CAD with Brown's operator: project `f` down the full chain, sample
/// the univariate end, lift with every level guarded by its own polynomial.
pub fn open_cad(f: &MultiPoly, opts: &LiftOptions) -> Result<OpenSample, LiftError> {
    nontrivial(f)?;
    let n = f.nvars();
    let mut chain = vec![f.clone()];
    for l in (1..n).rev() {
        let next = bp_single(chain.last().unwrap(), l)?;
        chain.push(next);
    }
    chain.reverse();
    let levels: Vec<LiftLevel> = chain
        .into_iter()
        .enumerate()
        .map(|(k, p)| LiftLevel {
            level: k + 1,
            lift: p.clone(),
            guard: p,
        })
        .collect();
    finish(&levels, opts, Method::OpenCad)
}

/// Open sample of `f` built two variables at a time with `Hp`.
pub fn hp_two(f: &MultiPoly, opts: &LiftOptions) -> Result<OpenSample, LiftError> {
    nontrivial(f)?;
    hp_two_guarded(f, None, opts)
}

/// [`hp_two`] whose top-level points also avoid the zeros of `top_guard`.
/// Constant `f` is accepted (one cell per level).
pub fn hp_two_guarded(
    f: &MultiPoly,
    top_guard: Option<&MultiPoly>,
    opts: &LiftOptions,
) -> Result<OpenSample, LiftError> {
    let n = f.nvars();
    if f.is_zero() || n == 0 {
        return Err(LiftError::Trivial);
    }
    let cache = HpCache::new();
    // per level (1-based): lift and guard factors
    let mut lifts: Vec<Vec<MultiPoly>> = vec![Vec::new(); n + 1];
    let mut guards: Vec<Vec<MultiPoly>> = vec![Vec::new(); n + 1];
    let add = |slot: &mut Vec<MultiPoly>, p: MultiPoly| {
        if !slot.contains(&p) {
            slot.push(p);
        }
    };
    add(&mut lifts[n], f.clone());
    add(&mut guards[n], f.clone());
    let mut g = f.clone();
    let mut i = n;
    while i >= 3 {
        let (xi, xim1) = (i - 1, i - 2);
        add(&mut lifts[i], g.clone());
        add(&mut guards[i], g.clone());
        add(&mut lifts[i - 1], cache.hp(&g, &[xi])?);
        add(&mut guards[i - 1], cache.hp_designated(&g, &[xi], xi)?);
        let h = cache.hp(&g, &[xi, xim1])?;
        add(&mut lifts[i - 2], h.clone());
        add(
            &mut guards[i - 2],
            cache.hp_designated(&g, &[xi, xim1], xim1)?,
        );
        g = h;
        i -= 2;
    }
    if i == 2 {
        add(&mut lifts[2], g.clone());
        add(&mut guards[2], g.clone());
        add(&mut lifts[1], cache.hp(&g, &[1])?);
        add(&mut guards[1], cache.hp_designated(&g, &[1], 1)?);
    }
    if let Some(tg) = top_guard {
        add(&mut guards[n], tg.clone());
    }
    let levels: Vec<LiftLevel> = (1..=n)
        .map(|l| LiftLevel {
            level: l,
            lift: product(n, &lifts[l]),
            guard: product(n, &guards[l]),
        })
        .collect();
    finish(&levels, opts, Method::HpTwo)
}

/// Reduced open CAD of `f` over `[x_n, ..., x_j]` from caller-supplied base
/// points of dimension `j - 1`.
pub fn reduced_open_cad(
    f: &MultiPoly,
    j: usize,
    base: &[SamplePoint],
    opts: &LiftOptions,
) -> Result<OpenSample, LiftError> {
    nontrivial(f)?;
    let spec = hp_liftspec(&HpCache::new(), f, j)?;
    let mut out = open_sp(&spec, base, opts)?;
    out.method = Method::Reduced(j);
    Ok(out)
}

/// Reduced open CAD with its base computed here: an open sample of the base
/// polynomial `Hp(f, [x_n..x_j])` (via [`hp_two_guarded`]) avoiding its guard.
pub fn reduced_sample(
    f: &MultiPoly,
    j: usize,
    opts: &LiftOptions,
) -> Result<OpenSample, LiftError> {
    nontrivial(f)?;
    let spec = hp_liftspec(&HpCache::new(), f, j)?;
    let d = j - 1;
    let map: Vec<Option<usize>> = (0..f.nvars())
        .map(|i| if i < d { Some(i) } else { None })
        .collect();
    let b = spec.base.lift.remap(d, &map);
    let g = spec.base.guard.remap(d, &map);
    let base = hp_two_guarded(&b, Some(&g), opts)?;
    let mut out = open_sp(&spec, &base.points, opts)?;
    out.counts[..d].copy_from_slice(&base.counts);
    out.method = Method::Reduced(j);
    Ok(out)
}
