//! Dense modular gcd (Brown): images over Z/p by evaluation and Newton
//! interpolation, lifted over Z by Chinese remaindering. Candidates are
//! verified by exact division; `None` means "gave up".

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MultiPoly;

/// Exponent vector over the variables actually present, most significant first.
type Mono = Vec<u32>;
type ModPoly = HashMap<Mono, u64>;
/// Univariate over Z/p, constant term first, no trailing zeros.
type Uni = Vec<u64>;

const MAX_PRIMES: usize = 400;

#[derive(Clone, Copy)]
struct Zp(u64);

impl Zp {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }
    fn inv(self, a: u64) -> u64 {
        let (mut r, mut base, mut e) = (1u64, a, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }
    fn reduce(self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("reduced")
    }

    fn trim(self, mut a: Uni) -> Uni {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }
    fn eval(self, a: &[u64], x: u64) -> u64 {
        a.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
    fn scale(self, a: &[u64], s: u64) -> Uni {
        self.trim(a.iter().map(|&c| self.mul(c, s)).collect())
    }
    fn monic(self, a: Uni) -> Uni {
        match a.last() {
            Some(&l) if l != 1 => self.scale(&a, self.inv(l)),
            _ => a,
        }
    }
    fn mul_uni(self, a: &[u64], b: &[u64]) -> Uni {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }
    fn add_uni(self, a: &[u64], b: &[u64]) -> Uni {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                self.add(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        self.trim(out)
    }
    fn divrem(self, a: &[u64], b: &[u64]) -> (Uni, Uni) {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let il = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = self.mul(*r.last().expect("nonempty"), il);
            q[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[j + k] = self.sub(r[j + k], self.mul(c, bj));
            }
            r = self.trim(r);
        }
        (self.trim(q), r)
    }
    fn gcd_uni(self, a: &[u64], b: &[u64]) -> Uni {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let (_, r) = self.divrem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }
}

fn lead(a: &ModPoly) -> (&Mono, u64) {
    a.iter()
        .max_by(|x, y| x.0.cmp(y.0))
        .map(|(m, c)| (m, *c))
        .expect("nonzero")
}

fn make_monic(zp: Zp, a: ModPoly) -> ModPoly {
    let l = lead(&a).1;
    if l == 1 {
        return a;
    }
    let il = zp.inv(l);
    a.into_iter().map(|(m, c)| (m, zp.mul(c, il))).collect()
}

/// Groups by the exponents of all but the last variable; values are univariate in the last.
fn split_last(a: &ModPoly, k: usize) -> HashMap<Mono, Uni> {
    let mut out: HashMap<Mono, Uni> = HashMap::new();
    for (m, &c) in a {
        let e = m[k - 1] as usize;
        let u = out.entry(m[..k - 1].to_vec()).or_default();
        if u.len() <= e {
            u.resize(e + 1, 0);
        }
        u[e] = c;
    }
    out
}

fn join_last(s: &HashMap<Mono, Uni>) -> ModPoly {
    let mut out = ModPoly::new();
    for (m, u) in s {
        for (e, &c) in u.iter().enumerate() {
            if c != 0 {
                let mut mm = m.clone();
                mm.push(e as u32);
                out.insert(mm, c);
            }
        }
    }
    out
}

fn uni_content(zp: Zp, s: &HashMap<Mono, Uni>) -> Uni {
    let mut g: Uni = Vec::new();
    for u in s.values() {
        g = zp.gcd_uni(&g, u);
        if g.len() == 1 {
            break;
        }
    }
    g
}

/// Exact-division test over Z/p in lex order.
fn divides(zp: Zp, d: &ModPoly, a: &ModPoly) -> bool {
    let (dl, dc) = lead(d);
    let il = zp.inv(dc);
    let mut rem: BTreeMap<Mono, u64> = a.iter().map(|(m, c)| (m.clone(), *c)).collect();
    while let Some((m, c)) = rem.pop_last() {
        if m.iter().zip(dl).any(|(x, y)| x < y) {
            return false;
        }
        let q = zp.mul(c, il);
        let shift: Vec<u32> = m.iter().zip(dl).map(|(x, y)| x - y).collect();
        for (dm, &dcf) in d {
            if dm == dl {
                continue;
            }
            let nm: Mono = dm.iter().zip(&shift).map(|(x, y)| x + y).collect();
            let v = rem.entry(nm).or_insert(0);
            *v = zp.sub(*v, zp.mul(q, dcf));
            if *v == 0 {
                let key: Mono = dm.iter().zip(&shift).map(|(x, y)| x + y).collect();
                rem.remove(&key);
            }
        }
    }
    true
}

struct Rng(u64);

impl Rng {
    fn below(&mut self, p: u64) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        1 + (z ^ (z >> 31)) % (p - 1)
    }
}

/// Monic (lex) gcd over Z/p of nonzero `a`, `b` in `k` variables.
fn pgcd(zp: Zp, a: &ModPoly, b: &ModPoly, k: usize, rng: &mut Rng) -> Option<ModPoly> {
    if k == 0 {
        return Some(ModPoly::from([(Vec::new(), 1)]));
    }
    if k == 1 {
        let to_uni = |p: &ModPoly| {
            let d = p.keys().map(|m| m[0] as usize).max().unwrap_or(0);
            let mut u = vec![0; d + 1];
            for (m, &c) in p {
                u[m[0] as usize] = c;
            }
            u
        };
        let g = zp.gcd_uni(&to_uni(a), &to_uni(b));
        return Some(
            g.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (vec![e as u32], c))
                .collect(),
        );
    }
    let mut sa = split_last(a, k);
    let mut sb = split_last(b, k);
    let ca = uni_content(zp, &sa);
    let cb = uni_content(zp, &sb);
    let c = zp.gcd_uni(&ca, &cb);
    for (s, cs) in [(&mut sa, &ca), (&mut sb, &cb)] {
        if cs.len() > 1 {
            for u in s.values_mut() {
                *u = zp.divrem(u, cs).0;
            }
        }
    }
    let lc = |s: &HashMap<Mono, Uni>| {
        s.iter()
            .max_by(|x, y| x.0.cmp(y.0))
            .map(|(_, u)| u.clone())
            .expect("nonzero")
    };
    let g = zp.gcd_uni(&lc(&sa), &lc(&sb));
    let deg_y = |s: &HashMap<Mono, Uni>| s.values().map(|u| u.len() - 1).max().unwrap_or(0);
    let limit = (g.len() - 1) + deg_y(&sa).min(deg_y(&sb));
    let (pa, pb) = (join_last(&sa), join_last(&sb));
    let eval = |s: &HashMap<Mono, Uni>, beta: u64| -> ModPoly {
        s.iter()
            .map(|(m, u)| (m.clone(), zp.eval(u, beta)))
            .filter(|(_, v)| *v != 0)
            .collect()
    };
    let content_poly = |c: &Uni| -> ModPoly {
        c.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(e, &v)| {
                let mut m = vec![0u32; k];
                m[k - 1] = e as u32;
                (m, v)
            })
            .collect()
    };
    let mut h: Option<HashMap<Mono, Uni>> = None;
    let mut q: Uni = vec![1];
    let mut lm: Mono = Vec::new();
    let mut points = 0usize;
    for _ in 0..4 * (limit + 1) + 32 {
        let beta = rng.below(zp.0);
        let gb = zp.eval(&g, beta);
        if gb == 0 {
            continue;
        }
        let (ab, bb) = (eval(&sa, beta), eval(&sb, beta));
        if ab.is_empty() || bb.is_empty() {
            continue;
        }
        let img = pgcd(zp, &ab, &bb, k - 1, rng)?;
        let m = lead(&img).0.clone();
        if m.iter().all(|&e| e == 0) {
            return Some(make_monic(zp, content_poly(&c)));
        }
        let img: HashMap<Mono, u64> = img.into_iter().map(|(mm, v)| (mm, zp.mul(v, gb))).collect();
        match &mut h {
            Some(_) if m > lm => continue,
            Some(hh) if m == lm => {
                let qb = zp.eval(&q, beta);
                let iq = zp.inv(qb);
                let keys: Vec<Mono> = hh.keys().chain(img.keys()).cloned().collect();
                for key in keys {
                    let cur = hh.get(&key).cloned().unwrap_or_default();
                    let want = img.get(&key).copied().unwrap_or(0);
                    let d = zp.mul(zp.sub(want, zp.eval(&cur, beta)), iq);
                    if d != 0 {
                        let upd = zp.add_uni(&cur, &zp.scale(&q, d));
                        if upd.is_empty() {
                            hh.remove(&key);
                        } else {
                            hh.insert(key, upd);
                        }
                    }
                }
                q = zp.mul_uni(&q, &[zp.sub(0, beta), 1]);
                points += 1;
            }
            _ => {
                h = Some(img.into_iter().map(|(mm, v)| (mm, vec![v])).collect());
                q = vec![zp.sub(0, beta), 1];
                lm = m;
                points = 1;
            }
        }
        if points > limit {
            let mut hh = h.take().expect("set above");
            let ch = uni_content(zp, &hh);
            if ch.len() > 1 {
                for u in hh.values_mut() {
                    *u = zp.divrem(u, &ch).0;
                }
            }
            let cand = join_last(&hh);
            if divides(zp, &cand, &pa) && divides(zp, &cand, &pb) {
                let cp = content_poly(&c);
                let mut out = ModPoly::new();
                for (m1, &c1) in &cand {
                    for (m2, &c2) in &cp {
                        let mm: Mono = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                        let v = out.entry(mm).or_insert(0);
                        *v = zp.add(*v, zp.mul(c1, c2));
                    }
                }
                out.retain(|_, v| *v != 0);
                return Some(make_monic(zp, out));
            }
            points = 0;
        }
    }
    None
}

fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 30)..(1u64 << 31)).rev().filter(|&n| {
        n % 2 == 1
            && (3..)
                .step_by(2)
                .take_while(|d| d * d <= n)
                .all(|d| n % d != 0)
    })
}

/// Gcd of two nonzero, integer-primitive polynomials (sign unspecified).
pub(crate) fn modular_gcd(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let n = a.nvars();
    let vars: Vec<usize> = (0..n)
        .rev()
        .filter(|&v| a.uses_var(v) || b.uses_var(v))
        .collect();
    let k = vars.len();
    let pack = |p: &MultiPoly| -> Vec<(Mono, BigInt)> {
        p.terms()
            .iter()
            .map(|(e, c)| (vars.iter().map(|&v| e[v]).collect(), c.clone()))
            .collect()
    };
    let (ia, ib) = (pack(a), pack(b));
    let lc = |t: &[(Mono, BigInt)]| {
        t.iter()
            .max_by(|x, y| x.0.cmp(&y.0))
            .map(|(_, c)| c.clone())
            .expect("nonzero")
    };
    let (la, lb) = (lc(&ia), lc(&ib));
    let gamma = la.gcd(&lb);
    let mut rng = Rng(0x2545_f491_4f6c_dd1d);
    let mut h: Option<HashMap<Mono, BigInt>> = None;
    let mut modulus = BigInt::one();
    let mut lm: Mono = Vec::new();
    for p in primes().take(MAX_PRIMES) {
        let zp = Zp(p);
        let bp = BigInt::from(p);
        if (&la % &bp).is_zero() || (&lb % &bp).is_zero() {
            continue;
        }
        let reduce = |t: &[(Mono, BigInt)]| -> ModPoly {
            t.iter()
                .map(|(m, c)| (m.clone(), zp.reduce(c)))
                .filter(|(_, v)| *v != 0)
                .collect()
        };
        let Some(img) = pgcd(zp, &reduce(&ia), &reduce(&ib), k, &mut rng) else {
            continue;
        };
        let m = lead(&img).0.clone();
        if m.iter().all(|&e| e == 0) {
            return Some(MultiPoly::one(n));
        }
        let gm = zp.reduce(&gamma);
        let img: HashMap<Mono, u64> = img.into_iter().map(|(mm, v)| (mm, zp.mul(v, gm))).collect();
        let stable = match &mut h {
            Some(_) if m > lm => continue,
            Some(hh) if m == lm => {
                let inv_m = zp.inv(zp.reduce(&modulus));
                let new_mod = &modulus * &bp;
                let half = &new_mod / 2;
                let keys: Vec<Mono> = hh.keys().chain(img.keys()).cloned().collect();
                let mut next: HashMap<Mono, BigInt> = HashMap::new();
                for key in keys {
                    if next.contains_key(&key) {
                        continue;
                    }
                    let cur = hh.get(&key).cloned().unwrap_or_default();
                    let want = img.get(&key).copied().unwrap_or(0);
                    let t = zp.mul(zp.sub(want, zp.reduce(&cur)), inv_m);
                    let mut v = (&cur + &modulus * BigInt::from(t)).mod_floor(&new_mod);
                    if v > half {
                        v -= &new_mod;
                    }
                    if !v.is_zero() {
                        next.insert(key, v);
                    } else {
                        next.insert(key, BigInt::zero());
                    }
                }
                next.retain(|_, v| !v.is_zero());
                let same = next == *hh;
                *hh = next;
                modulus = new_mod;
                same
            }
            _ => {
                let half = p / 2;
                h = Some(
                    img.into_iter()
                        .map(|(mm, v)| {
                            (
                                mm,
                                if v > half {
                                    BigInt::from(v) - &bp
                                } else {
                                    BigInt::from(v)
                                },
                            )
                        })
                        .collect(),
                );
                modulus = bp.clone();
                lm = m;
                false
            }
        };
        if stable {
            let hh = h.as_ref().expect("set");
            let terms = hh.iter().map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (&v, &x) in vars.iter().zip(m) {
                    e[v] = x;
                }
                (e, c.clone())
            });
            let cand = MultiPoly::from_terms(n, terms);
            let cont = cand.integer_content();
            let cand = cand.div_int_exact(&cont);
            if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(if cand.leading_coeff().is_negative() {
                    -cand
                } else {
                    cand
                });
            }
        }
    }
    None
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
    fn trivariate_common_factor() {
        let n = 3;
        let h = &(&(&c(n, 5) * &(&x(n, 0) * &x(n, 2))) + &x(n, 1).pow(2)) - &c(n, 3);
        let f = &h * &(&x(n, 2).pow(2) + &x(n, 0));
        let g = &h * &(&(&c(n, 7) * &(&x(n, 1) * &x(n, 2))) - &c(n, 7 * 11));
        let g = g.div_int_exact(&g.integer_content());
        assert_eq!(modular_gcd(&f, &g).unwrap().canonical(), h.canonical());
    }

    #[test]
    fn content_in_last_variable() {
        let n = 2;
        let y2 = &x(n, 1).pow(2) + &c(n, 1);
        let f = &y2 * &(&x(n, 0) - &x(n, 1));
        let g = &y2 * &(&x(n, 0) + &c(n, 2));
        assert_eq!(modular_gcd(&f, &g).unwrap().canonical(), y2);
    }

    #[test]
    fn coprime() {
        let n = 2;
        let f = &x(n, 0).pow(2) + &x(n, 1);
        let g = &x(n, 0) - &x(n, 1).pow(3);
        assert!(modular_gcd(&f, &g).unwrap().is_constant());
    }
}
